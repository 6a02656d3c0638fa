#include "arithgenus/quad_field.hpp"

#include <cmath>
#include <numeric>
#include <set>
#include <vector>

#include "arithgenus/error.hpp"
#include "arithgenus/kernels.hpp"

namespace arithgenus {

namespace {

// Sign of a + b*sqrt(d) for d > 0 not a square.
int sign_with_sqrt(const Rational& a, const Rational& b, long d) {
    const int sa = sgn(a), sb = sgn(b);
    if (sa >= 0 && sb >= 0) return (sa | sb) ? 1 : 0;
    if (sa <= 0 && sb <= 0) return -1;
    // Opposite signs: compare a^2 with d b^2.
    const int c = cmp(Rational(a * a), Rational(b * b * d));
    return c > 0 ? sa : -sa;
}

bool is_integer(const Rational& q) {
    return q.get_den() == 1;
}

long isqrt(long n) {
    long s = static_cast<long>(std::sqrt(static_cast<double>(n)));
    while (s * s > n) --s;
    while ((s + 1) * (s + 1) <= n) ++s;
    return s;
}

void check_precision(long bits) {
    if (bits < 64) throw DomainError("precision must be at least 64 bits, got " + std::to_string(bits));
}

}  // namespace

QuadField::QuadField(long d, long max_d) : d_(d) {
    if (d <= 1) throw DomainError("real quadratic field needs d > 1, got " + std::to_string(d));
    if (d > max_d) throw DomainError("d = " + std::to_string(d) + " exceeds the supported cap " + std::to_string(max_d));
    if (!is_squarefree(Integer(d))) throw DomainError("d = " + std::to_string(d) + " is not squarefree");
}

QuadUnit::QuadUnit(QuadField field, Rational x, Rational y) : field_(field), x_(std::move(x)), y_(std::move(y)) {
    x_.canonicalize();
    y_.canonicalize();
    const long d = field_.d();
    if (d % 4 == 1) {
        const Rational tx = 2 * x_, ty = 2 * y_;
        if (!is_integer(tx) || !is_integer(ty) || mpz_odd_p(tx.get_num_mpz_t()) != mpz_odd_p(ty.get_num_mpz_t())) {
            throw DomainError("coordinates of " + to_string() + " are not in the maximal order");
        }
    } else if (!is_integer(x_) || !is_integer(y_)) {
        throw DomainError("coordinates of " + to_string() + " are not integral");
    }
    const Rational n = x_ * x_ - d * y_ * y_;
    if (n == 1) {
        norm_ = 1;
    } else if (n == -1) {
        norm_ = -1;
    } else {
        throw DomainError(to_string() + " has norm " + arithgenus::to_string(n) + ", not a unit");
    }
}

QuadUnit QuadUnit::one(QuadField field) {
    return QuadUnit(field, Rational(1), Rational(0));
}

QuadUnit QuadUnit::parse(std::string_view text) {
    const std::string_view marker = "*sqrt(";
    const auto star = text.find(marker);
    const auto plus = text.rfind(" + ", star);
    if (star == std::string_view::npos || plus == std::string_view::npos || text.back() != ')') {
        throw DomainError("malformed unit '" + std::string(text) + "', expected 'x + y*sqrt(d)'");
    }
    Rational x = parse_rational(text.substr(0, plus));
    Rational y = parse_rational(text.substr(plus + 3, star - plus - 3));
    const auto d_text = text.substr(star + marker.size(), text.size() - star - marker.size() - 1);
    const Rational d = parse_rational(d_text);
    if (d.get_den() != 1 || !d.get_num().fits_slong_p()) throw DomainError("malformed radicand '" + std::string(d_text) + "'");
    return QuadUnit(QuadField(d.get_num().get_si()), x, y);
}

QuadUnit operator*(const QuadUnit& a, const QuadUnit& b) {
    if (!(a.field_ == b.field_)) throw DomainError("units from different fields");
    const long d = a.field_.d();
    return QuadUnit(a.field_, a.x_ * b.x_ + d * a.y_ * b.y_, a.x_ * b.y_ + a.y_ * b.x_);
}

QuadUnit QuadUnit::conjugate() const {
    return QuadUnit(field_, x_, -y_);
}

QuadUnit QuadUnit::inverse() const {
    // u * conj(u) = N(u) = +-1.
    return norm_ == 1 ? conjugate() : QuadUnit(field_, -x_, y_);
}

QuadUnit QuadUnit::pow(long n) const {
    QuadUnit base = n < 0 ? inverse() : *this;
    unsigned long e = static_cast<unsigned long>(n < 0 ? -n : n);
    QuadUnit out = one(field_);
    while (e) {
        if (e & 1) out = out * base;
        e >>= 1;
        if (e) base = base * base;
    }
    return out;
}

bool QuadUnit::exceeds_one() const {
    return sign_with_sqrt(x_ - 1, y_, field_.d()) > 0;
}

std::string QuadUnit::to_string() const {
    return arithgenus::to_string(x_) + " + " + arithgenus::to_string(y_) + "*sqrt(" + std::to_string(field_.d()) + ")";
}

QuadUnit fundamental_unit(const QuadField& field, long max_iterations) {
    const long d = field.d();
    const Integer root = sqrt(Integer(d));
    // A reduced irrational alpha = (P + sqrt(d)) / Q with 1 < alpha and
    // -1 < conj(alpha) < 0, so its continued fraction is purely periodic.
    // P0 = largest odd integer below sqrt(d) for d = 1 mod 4, else floor(sqrt(d)).
    Integer p0 = root, q0 = 1;
    if (d % 4 == 1) {
        if (mpz_even_p(p0.get_mpz_t())) p0 -= 1;
        q0 = 2;
    }
    Integer p = p0, q = q0;
    // Convergent denominators q_{k-1}, q_{k-2}, seeded with q_{-1} = 0, q_{-2} = 1.
    Integer den_prev = 0, den_prev2 = 1;
    for (long k = 0; k < max_iterations; ++k) {
        Integer a;
        mpz_fdiv_q(a.get_mpz_t(), Integer(p + root).get_mpz_t(), q.get_mpz_t());
        const Integer den = a * den_prev + den_prev2;
        den_prev2 = den_prev;
        den_prev = den;
        const Integer p_next = a * q - p;
        const Integer q_next = (Integer(d) - p_next * p_next) / q;
        p = p_next;
        q = q_next;
        if (p == p0 && q == q0) {
            // Period l reached: multiplication by q_{l-1} alpha + q_{l-2} maps
            // the lattice [1, alpha] onto itself, so it is the fundamental unit.
            const Rational x = Rational(den_prev * p0, q0) + den_prev2;
            const Rational y = Rational(den_prev, q0);
            return QuadUnit(field, x, y);
        }
    }
    throw LimitError("continued fraction of Q(sqrt(" + std::to_string(d) + ")) exceeded " +
                     std::to_string(max_iterations) + " steps");
}

QuadUnit norm_one_unit(const QuadField& field) {
    const QuadUnit eps = fundamental_unit(field);
    return eps.norm() == 1 ? eps : eps * eps;
}

namespace {

struct Form {
    long a, b, c;
    friend auto operator<=>(const Form&, const Form&) = default;
};

}  // namespace

ClassData class_number(const QuadField& field) {
    const long disc = field.discriminant();
    const long s = isqrt(disc);  // sqrt(disc) is irrational, so s < sqrt(disc) < s + 1

    // Reduced: 0 < b < sqrt(D) and sqrt(D) - b < 2|a| < sqrt(D) + b.
    auto reduced = [&](long a, long b) {
        const long twice = 2 * std::labs(a);
        if (b <= 0 || b > s) return false;
        const bool lower = (twice + b) * (twice + b) > disc;  // sqrt(D) < 2|a| + b
        const bool upper = twice - b <= 0 || (twice - b) * (twice - b) < disc;
        return lower && upper;
    };

    std::set<Form> forms;
    for (long b = disc % 2; b <= s; b += 2) {
        if (b == 0) continue;
        const long m = (disc - b * b) / 4;  // -a c
        for (long a = 1; a * a <= m; ++a) {
            if (m % a != 0) continue;
            for (long aa : {a, m / a}) {
                for (long sa : {aa, -aa}) {
                    const long c = -m / sa;
                    if (std::gcd(std::gcd(std::labs(sa), b), std::labs(c)) != 1) continue;
                    if (reduced(sa, b)) forms.insert({sa, b, c});
                }
            }
        }
    }

    // rho(a, b, c) = (c, b', (b'^2 - D) / 4c) with b' = -b mod 2|c| and
    // sqrt(D) - 2|c| < b' < sqrt(D).
    auto rho = [&](const Form& f) {
        const long m = 2 * std::labs(f.c);
        const long shift = ((s + f.b) % m + m) % m;
        const long b = s - shift;
        return Form{f.c, b, (b * b - disc) / (4 * f.c)};
    };

    long cycles = 0;
    std::set<Form> unseen = forms;
    while (!unseen.empty()) {
        Form start = *unseen.begin();
        Form f = start;
        do {
            if (!forms.contains(f)) throw LimitError("reduction cycle left the reduced set");
            unseen.erase(f);
            f = rho(f);
        } while (!(f == start));
        ++cycles;
    }

    const QuadUnit eps = fundamental_unit(field);
    const long h = eps.norm() == -1 ? cycles : cycles / 2;
    return ClassData{field, cycles, h};
}

BigReal eta_with_modulus(long modulus, long bits) {
    check_precision(bits);
    return kernels::sine_product_parallel(modulus, bits + kGuardBits).with_precision(bits);
}

BigReal eta_analytic(const QuadField& field, long bits) {
    return eta_with_modulus(field.discriminant(), bits);
}

BigReal unit_real_value(const QuadUnit& u, long bits) {
    check_precision(bits);
    const long work = bits + kGuardBits;
    BigReal out = BigReal(u.x(), work) + BigReal(u.y(), work) * sqrt(BigReal(u.field().d(), work));
    return out.with_precision(bits);
}

}  // namespace arithgenus
