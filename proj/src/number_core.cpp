#include "arithgenus/number_core.hpp"

#include <algorithm>
#include <charconv>
#include <limits>
#include <map>

#include "arithgenus/error.hpp"

namespace arithgenus {

namespace {

constexpr unsigned long kTrialLimit = 1'000'000;
constexpr unsigned long kRhoIterations = 1UL << 22;

std::uint64_t to_u64(const Integer& n) {
    if (sgn(n) < 0 || mpz_sizeinbase(n.get_mpz_t(), 2) > 64) {
        throw LimitError("prime factor " + n.get_str() + " does not fit in 64 bits");
    }
    std::uint64_t out = 0;
    mpz_export(&out, nullptr, -1, sizeof(out), 0, 0, n.get_mpz_t());
    return out;
}

Integer from_u64(std::uint64_t v) {
    Integer out;
    mpz_import(out.get_mpz_t(), 1, -1, sizeof(v), 0, 0, &v);
    return out;
}

// Pollard rho with Brent's cycle detection; returns a nontrivial factor or 0.
Integer brent_rho(const Integer& n, unsigned long seed) {
    Integer y = seed + 2, c = seed + 1, m = 128, g = 1, r = 1, q = 1, x, ys;
    auto f = [&](const Integer& v) {
        Integer t = v * v + c;
        mpz_mod(t.get_mpz_t(), t.get_mpz_t(), n.get_mpz_t());
        return t;
    };
    unsigned long iterations = 0;
    while (g == 1) {
        x = y;
        for (Integer i = 0; i < r; ++i) y = f(y);
        Integer k = 0;
        while (k < r && g == 1) {
            ys = y;
            Integer bound = (m < r - k) ? m : Integer(r - k);
            for (Integer i = 0; i < bound; ++i) {
                y = f(y);
                Integer diff = abs(x - y);
                q = (q * diff) % n;
            }
            mpz_gcd(g.get_mpz_t(), q.get_mpz_t(), n.get_mpz_t());
            k += m;
            iterations += bound.get_ui();
            if (iterations > kRhoIterations) return 0;
        }
        r *= 2;
    }
    if (g == n) {
        do {
            ys = f(ys);
            Integer diff = abs(x - ys);
            mpz_gcd(g.get_mpz_t(), diff.get_mpz_t(), n.get_mpz_t());
        } while (g == 1);
    }
    return g == n ? Integer(0) : g;
}

void factor_cofactor(const Integer& n, std::map<std::uint64_t, long>& out, long multiplicity) {
    if (n == 1) return;
    // No factor below the trial limit remains, so anything below its square is prime.
    if (n < Integer(kTrialLimit) * kTrialLimit || is_prime(n)) {
        out[to_u64(n)] += multiplicity;
        return;
    }
    for (unsigned long seed = 1; seed <= 16; ++seed) {
        Integer d = brent_rho(n, seed);
        if (d != 0) {
            Integer other = n / d;
            factor_cofactor(d, out, multiplicity);
            factor_cofactor(other, out, multiplicity);
            return;
        }
    }
    throw LimitError("could not factor composite leftover " + n.get_str());
}

// Positive integer factorization into the exponent map with the given sign of exponents.
void factor_positive(Integer n, std::map<std::uint64_t, long>& out, long multiplicity) {
    auto strip = [&](unsigned long p) {
        if (mpz_divisible_ui_p(n.get_mpz_t(), p)) {
            long e = 0;
            while (mpz_divisible_ui_p(n.get_mpz_t(), p)) {
                mpz_divexact_ui(n.get_mpz_t(), n.get_mpz_t(), p);
                ++e;
            }
            out[p] += e * multiplicity;
        }
    };
    strip(2);
    strip(3);
    for (unsigned long p = 5; p <= kTrialLimit; p += 6) {
        if (Integer(p) * p > n) break;
        strip(p);
        strip(p + 2);
    }
    factor_cofactor(n, out, multiplicity);
}

// Integer with the same square class as q: numerator * denominator.
Integer integral_representative(const Rational& q) {
    return q.get_num() * q.get_den();
}

int legendre(const Integer& a, std::uint64_t p) {
    Integer pp = from_u64(p);
    return mpz_legendre(a.get_mpz_t(), pp.get_mpz_t());
}

// Splits n = p^k * u with p not dividing u.
long split_valuation(Integer& n, std::uint64_t p) {
    Integer pp = from_u64(p);
    return static_cast<long>(mpz_remove(n.get_mpz_t(), n.get_mpz_t(), pp.get_mpz_t()));
}

unsigned long mod8(const Integer& u) {
    return mpz_fdiv_ui(u.get_mpz_t(), 8);
}

void require_nonzero(const Rational& q, const char* what) {
    if (sgn(q) == 0) throw DomainError(std::string(what) + ": argument must be nonzero");
}

}  // namespace

Place Place::prime(std::uint64_t p) {
    if (!is_prime(p)) throw DomainError("place " + std::to_string(p) + " is not a prime");
    return Place(p);
}

Place Place::parse(std::string_view text) {
    if (text == "inf") return real();
    std::uint64_t p = 0;
    auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), p);
    if (ec != std::errc() || ptr != text.data() + text.size() || text.empty()) {
        throw DomainError("malformed place '" + std::string(text) + "'");
    }
    return prime(p);
}

std::string Place::to_string() const {
    return is_real() ? std::string("inf") : std::to_string(p_);
}

Rational Factorization::value() const {
    Rational out = sign;
    for (const auto& [p, e] : factors) {
        Integer pe;
        mpz_pow_ui(pe.get_mpz_t(), from_u64(p).get_mpz_t(), static_cast<unsigned long>(e < 0 ? -e : e));
        if (e > 0) {
            out *= pe;
        } else {
            out /= pe;
        }
    }
    return out;
}

bool is_prime(const Integer& n) {
    if (n < 2) return false;
    // GMP runs Baillie-PSW followed by Miller-Rabin rounds; deterministic below 2^64.
    return mpz_probab_prime_p(n.get_mpz_t(), 30) > 0;
}

bool is_prime(std::uint64_t n) {
    return is_prime(from_u64(n));
}

Factorization factor(const Integer& n) {
    return factor(Rational(n));
}

Factorization factor(const Rational& q) {
    require_nonzero(q, "factor");
    std::map<std::uint64_t, long> exps;
    factor_positive(abs(q.get_num()), exps, 1);
    factor_positive(q.get_den(), exps, -1);
    Factorization out;
    out.sign = sgn(q);
    for (const auto& [p, e] : exps) {
        if (e != 0) out.factors.push_back({p, e});
    }
    return out;
}

std::vector<std::uint64_t> prime_support(const Rational& q) {
    std::vector<std::uint64_t> out;
    for (const auto& f : factor(q).factors) out.push_back(f.prime);
    return out;
}

Integer squarefree_part(const Integer& n) {
    if (n == 0) throw DomainError("squarefree_part: argument must be nonzero");
    Integer out = sgn(n);
    for (const auto& [p, e] : factor(n).factors) {
        if (e % 2 != 0) out *= from_u64(p);
    }
    return out;
}

Integer square_class(const Rational& q) {
    require_nonzero(q, "square_class");
    return squarefree_part(integral_representative(q));
}

bool is_squarefree(const Integer& n) {
    if (n == 0) return false;
    for (const auto& f : factor(n).factors) {
        if (f.exponent > 1) return false;
    }
    return true;
}

int kronecker_symbol(const Integer& a, const Integer& n) {
    if (a == 0 && n == 0) throw DomainError("kronecker_symbol: (0, 0) is undefined");
    return mpz_kronecker(a.get_mpz_t(), n.get_mpz_t());
}

long padic_valuation(const Rational& q, std::uint64_t p) {
    require_nonzero(q, "padic_valuation");
    if (!is_prime(p)) throw DomainError("padic_valuation: " + std::to_string(p) + " is not prime");
    Integer num = q.get_num(), den = q.get_den();
    return split_valuation(num, p) - split_valuation(den, p);
}

bool is_local_square(const Rational& q, const Place& v) {
    require_nonzero(q, "is_local_square");
    if (v.is_real()) return sgn(q) > 0;
    Integer u = integral_representative(q);
    if (split_valuation(u, v.p()) % 2 != 0) return false;
    if (v.p() == 2) return mod8(u) == 1;
    return legendre(u, v.p()) == 1;
}

int hilbert_symbol(const Rational& a, const Rational& b, const Place& v) {
    require_nonzero(a, "hilbert_symbol");
    require_nonzero(b, "hilbert_symbol");
    if (v.is_real()) return (sgn(a) < 0 && sgn(b) < 0) ? -1 : 1;

    Integer u = integral_representative(a);
    Integer w = integral_representative(b);
    const std::uint64_t p = v.p();
    const long alpha = split_valuation(u, p);
    const long beta = split_valuation(w, p);

    if (p == 2) {
        const unsigned long u8 = mod8(u), w8 = mod8(w);
        auto eps = [](unsigned long x) { return ((x - 1) / 2) & 1UL; };
        auto omega = [](unsigned long x) { return (x == 3 || x == 5) ? 1UL : 0UL; };
        const unsigned long e = eps(u8) * eps(w8) + static_cast<unsigned long>(alpha & 1) * omega(w8) +
                                static_cast<unsigned long>(beta & 1) * omega(u8);
        return (e & 1) ? -1 : 1;
    }

    int out = 1;
    if ((alpha & 1) && (beta & 1) && ((p - 1) / 2) % 2 == 1) out = -out;
    if (beta & 1) out *= legendre(u, p);
    if (alpha & 1) out *= legendre(w, p);
    return out;
}

std::vector<Place> hilbert_candidate_places(const Rational& a, const Rational& b) {
    std::vector<std::uint64_t> primes = prime_support(a);
    auto more = prime_support(b);
    primes.insert(primes.end(), more.begin(), more.end());
    primes.push_back(2);
    std::sort(primes.begin(), primes.end());
    primes.erase(std::unique(primes.begin(), primes.end()), primes.end());
    std::vector<Place> out;
    for (auto p : primes) out.push_back(Place::prime(p));
    out.push_back(Place::real());
    return out;
}

std::vector<Rational> square_class_generators(const Place& v) {
    if (v.is_real()) return {Rational(-1)};
    if (v.p() == 2) return {Rational(-1), Rational(2), Rational(5)};
    std::uint64_t n = 2;
    while (legendre(from_u64(n), v.p()) != -1) ++n;
    return {Rational(from_u64(v.p())), Rational(from_u64(n))};
}

Rational parse_rational(std::string_view text) {
    auto bad = [&] { return DomainError("malformed rational '" + std::string(text) + "'"); };
    std::string_view body = text;
    if (!body.empty() && (body.front() == '-' || body.front() == '+')) body.remove_prefix(1);
    const auto slash = body.find('/');
    auto digits = [](std::string_view s) {
        return !s.empty() && std::all_of(s.begin(), s.end(), [](char c) { return c >= '0' && c <= '9'; });
    };
    if (slash == std::string_view::npos) {
        if (!digits(body)) throw bad();
    } else if (!digits(body.substr(0, slash)) || !digits(body.substr(slash + 1))) {
        throw bad();
    }
    std::string clean(text.front() == '+' ? text.substr(1) : text);
    Rational out;
    if (slash != std::string_view::npos) {
        Integer num(clean.substr(0, clean.find('/')));
        Integer den(clean.substr(clean.find('/') + 1));
        if (den == 0) throw DomainError("zero denominator in '" + std::string(text) + "'");
        out = Rational(num, den);
    } else {
        out = Rational(Integer(clean));
    }
    out.canonicalize();
    return out;
}

std::string to_string(const Rational& q) {
    if (q.get_den() == 1) return q.get_num().get_str();
    return q.get_num().get_str() + "/" + q.get_den().get_str();
}

}  // namespace arithgenus
