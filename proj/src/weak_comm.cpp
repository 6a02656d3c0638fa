#include "arithgenus/weak_comm.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <numeric>

#include "arithgenus/error.hpp"

namespace arithgenus {

namespace {

using Row = std::vector<Integer>;

// Integer row echelon form on the first `width` columns by gcd elimination.
// Row operations are unimodular and act on every column of the row.
void echelon(std::vector<Row>& rows, std::size_t width) {
    std::size_t pivot = 0;
    for (std::size_t col = 0; col < width && pivot < rows.size(); ++col) {
        while (true) {
            std::size_t best = rows.size();
            for (std::size_t r = pivot; r < rows.size(); ++r) {
                if (sgn(rows[r][col]) != 0 && (best == rows.size() || abs(rows[r][col]) < abs(rows[best][col]))) {
                    best = r;
                }
            }
            if (best == rows.size()) break;
            std::swap(rows[pivot], rows[best]);
            bool clean = true;
            for (std::size_t r = pivot + 1; r < rows.size(); ++r) {
                if (sgn(rows[r][col]) == 0) continue;
                Integer q;
                mpz_tdiv_q(q.get_mpz_t(), rows[r][col].get_mpz_t(), rows[pivot][col].get_mpz_t());
                for (std::size_t c = 0; c < rows[r].size(); ++c) rows[r][c] -= q * rows[pivot][c];
                if (sgn(rows[r][col]) != 0) clean = false;
            }
            if (clean) {
                if (sgn(rows[pivot][col]) < 0) {
                    for (auto& x : rows[pivot]) x = -x;
                }
                ++pivot;
                break;
            }
        }
    }
}

bool zero_prefix(const Row& row, std::size_t width) {
    return std::all_of(row.begin(), row.begin() + static_cast<std::ptrdiff_t>(width),
                       [](const Integer& x) { return sgn(x) == 0; });
}

// Elements of Q^x and of real quadratic unit groups share one coordinate
// system: one axis per prime, one axis per field (exponent of its fundamental
// unit) and a final sign axis read modulo 2.
struct Coordinates {
    std::vector<std::uint64_t> primes;
    std::vector<long> fields;

    std::size_t width() const { return primes.size() + fields.size() + 1; }
    std::size_t sign_axis() const { return width() - 1; }
};

void collect_axes(const EigenvalueSet& s, Coordinates& axes) {
    if (s.is_rational()) {
        for (const auto& q : s.rationals()) {
            for (auto p : prime_support(q)) axes.primes.push_back(p);
        }
    } else {
        axes.fields.push_back(s.units().front().field().d());
    }
}

// u = sign * eps^a; recovers a exactly.
long unit_exponent(const QuadUnit& u, const QuadUnit& eps) {
    const long bits = 128;
    BigReal value = abs(unit_real_value(u, bits));
    const double estimate = log(value).to_double() / log(unit_real_value(eps, bits)).to_double();
    const long a = std::lround(estimate);
    const QuadUnit candidate = eps.pow(a);
    if (candidate == u || candidate == QuadUnit(u.field(), -u.x(), -u.y())) return a;
    throw LimitError("could not express " + u.to_string() + " as a power of the fundamental unit");
}

std::vector<Row> generators(const EigenvalueSet& s, const Coordinates& axes) {
    std::vector<Row> out;
    if (s.is_rational()) {
        for (const auto& q : s.rationals()) {
            Row row(axes.width(), 0);
            auto ev = to_exponent_vector(q, axes.primes);
            for (std::size_t i = 0; i < ev.exponents.size(); ++i) row[i] = ev.exponents[i];
            row[axes.sign_axis()] = ev.sign < 0 ? 1 : 0;
            out.push_back(std::move(row));
        }
    } else {
        const QuadField field = s.units().front().field();
        const auto axis = axes.primes.size() +
                          static_cast<std::size_t>(std::find(axes.fields.begin(), axes.fields.end(), field.d()) -
                                                   axes.fields.begin());
        const QuadUnit eps = fundamental_unit(field);
        for (const auto& u : s.units()) {
            Row row(axes.width(), 0);
            row[axis] = unit_exponent(u, eps);
            row[axes.sign_axis()] = unit_real_value(u, 64).sign() < 0 ? 1 : 0;
            out.push_back(std::move(row));
        }
    }
    // The sign axis lives in Z/2.
    Row torsion(axes.width(), 0);
    torsion[axes.sign_axis()] = 2;
    out.push_back(std::move(torsion));
    return out;
}

Rational rational_from(const Row& row, const Coordinates& axes) {
    Rational out = mpz_odd_p(row[axes.sign_axis()].get_mpz_t()) ? -1 : 1;
    for (std::size_t i = 0; i < axes.primes.size(); ++i) {
        Integer pe;
        const long e = row[i].get_si();
        mpz_ui_pow_ui(pe.get_mpz_t(), axes.primes[i], static_cast<unsigned long>(e < 0 ? -e : e));
        if (e >= 0) {
            out *= pe;
        } else {
            out /= pe;
        }
    }
    return out;
}

}  // namespace

EigenvalueSet EigenvalueSet::rational(Rationals values) {
    if (values.empty()) throw DomainError("eigenvalue set is empty");
    for (const auto& q : values) {
        if (sgn(q) == 0) throw DomainError("eigenvalues must be nonzero");
    }
    return EigenvalueSet(std::move(values));
}

EigenvalueSet EigenvalueSet::quadratic(Units units) {
    if (units.empty()) throw DomainError("eigenvalue set is empty");
    for (const auto& u : units) {
        if (!(u.field() == units.front().field())) throw DomainError("units must come from one quadratic field");
        if (u.is_torsion()) throw DomainError("quadratic eigenvalues must differ from +-1");
    }
    return EigenvalueSet(std::move(units));
}

EigenvalueSet EigenvalueSet::parse(std::string_view text) {
    std::vector<std::string_view> items;
    std::size_t start = 0;
    while (start <= text.size()) {
        auto end = text.find(',', start);
        if (end == std::string_view::npos) end = text.size();
        auto item = text.substr(start, end - start);
        while (!item.empty() && item.front() == ' ') item.remove_prefix(1);
        while (!item.empty() && item.back() == ' ') item.remove_suffix(1);
        items.push_back(item);
        start = end + 1;
    }
    const bool units = std::any_of(items.begin(), items.end(),
                                   [](std::string_view s) { return s.find("sqrt(") != std::string_view::npos; });
    if (units) {
        Units out;
        for (auto item : items) out.push_back(QuadUnit::parse(item));
        return quadratic(std::move(out));
    }
    Rationals out;
    for (auto item : items) out.push_back(parse_rational(item));
    return rational(std::move(out));
}

std::size_t EigenvalueSet::size() const {
    return is_rational() ? rationals().size() : units().size();
}

bool EigenvalueSet::torsion_only() const {
    if (!is_rational()) return false;
    return std::all_of(rationals().begin(), rationals().end(), [](const Rational& q) { return abs(q) == 1; });
}

ExponentVector to_exponent_vector(const Rational& q, const std::vector<std::uint64_t>& support) {
    if (!std::is_sorted(support.begin(), support.end()) ||
        std::adjacent_find(support.begin(), support.end()) != support.end()) {
        throw DomainError("support must be strictly increasing");
    }
    const Factorization f = factor(q);
    ExponentVector out{support, std::vector<long>(support.size(), 0), f.sign};
    for (const auto& [p, e] : f.factors) {
        auto it = std::lower_bound(support.begin(), support.end(), p);
        if (it == support.end() || *it != p) {
            throw DomainError("prime " + std::to_string(p) + " of " + to_string(q) + " is outside the support");
        }
        out.exponents[static_cast<std::size_t>(it - support.begin())] = e;
    }
    return out;
}

std::optional<std::pair<long, long>> multiplicative_dependence(const Rational& q1, const Rational& q2) {
    if (abs(q1) == 1 || abs(q2) == 1 || sgn(q1) == 0 || sgn(q2) == 0) {
        throw DomainError("multiplicative_dependence needs non-torsion inputs");
    }
    auto support = prime_support(q1);
    for (auto p : prime_support(q2)) support.push_back(p);
    std::sort(support.begin(), support.end());
    support.erase(std::unique(support.begin(), support.end()), support.end());
    const auto v1 = to_exponent_vector(q1, support);
    const auto v2 = to_exponent_vector(q2, support);

    // q1^m = q2^n with m, n > 0 forces m v1 = n v2.
    std::size_t i = 0;
    while (v1.exponents[i] == 0) ++i;
    if (v2.exponents[i] == 0 || (v1.exponents[i] > 0) != (v2.exponents[i] > 0)) return std::nullopt;
    const long g = std::gcd(v1.exponents[i], v2.exponents[i]);
    long m = std::labs(v2.exponents[i]) / g;
    long n = std::labs(v1.exponents[i]) / g;
    for (std::size_t j = 0; j < support.size(); ++j) {
        if (m * v1.exponents[j] != n * v2.exponents[j]) return std::nullopt;
    }
    // Signs: every solution is k (m, n); k = 2 always fixes the sign.
    const bool s1 = v1.sign < 0 && (m % 2 == 1);
    const bool s2 = v2.sign < 0 && (n % 2 == 1);
    if (s1 != s2) {
        m *= 2;
        n *= 2;
    }
    return std::make_pair(m, n);
}

GroupIntersection intersect_groups(const EigenvalueSet& s1, const EigenvalueSet& s2) {
    Coordinates axes;
    collect_axes(s1, axes);
    collect_axes(s2, axes);
    std::sort(axes.primes.begin(), axes.primes.end());
    axes.primes.erase(std::unique(axes.primes.begin(), axes.primes.end()), axes.primes.end());
    std::sort(axes.fields.begin(), axes.fields.end());
    axes.fields.erase(std::unique(axes.fields.begin(), axes.fields.end()), axes.fields.end());

    const auto g1 = generators(s1, axes);
    const auto g2 = generators(s2, axes);
    const std::size_t width = axes.width();
    const std::size_t m1 = g1.size(), total = g1.size() + g2.size();

    // Rows [g | e_i] for L1 and [-g | e_j] for L2; after elimination the rows
    // with zero prefix carry kernel vectors (x, y) with sum x g1 = sum y g2.
    std::vector<Row> rows;
    for (std::size_t i = 0; i < total; ++i) {
        Row row(width + total, 0);
        const Row& g = i < m1 ? g1[i] : g2[i - m1];
        for (std::size_t c = 0; c < width; ++c) row[c] = i < m1 ? g[c] : Integer(-g[c]);
        row[width + i] = 1;
        rows.push_back(std::move(row));
    }
    echelon(rows, width);

    std::vector<Row> common;
    for (const auto& row : rows) {
        if (!zero_prefix(row, width)) continue;
        Row w(width, 0);
        for (std::size_t i = 0; i < m1; ++i) {
            if (sgn(row[width + i]) == 0) continue;
            for (std::size_t c = 0; c < width; ++c) w[c] += row[width + i] * g1[i][c];
        }
        common.push_back(std::move(w));
    }

    GroupIntersection out;
    const std::size_t sign = axes.sign_axis();
    for (const auto& w : common) {
        if (!zero_prefix(w, sign)) {
            out.infinite = true;
            out.nontrivial = true;
        } else if (mpz_odd_p(w[sign].get_mpz_t())) {
            out.nontrivial = true;  // -1 lies in both groups
        }
    }
    if (out.infinite && axes.fields.empty()) {
        Row torsion(width, 0);
        torsion[sign] = 2;
        common.push_back(torsion);
        echelon(common, width);
        Row lead = common.front();
        mpz_fdiv_r_ui(lead[sign].get_mpz_t(), lead[sign].get_mpz_t(), 2);
        out.witness = rational_from(lead, axes);
    }
    return out;
}

bool groups_intersect(const EigenvalueSet& s1, const EigenvalueSet& s2) {
    return intersect_groups(s1, s2).nontrivial;
}

bool weakly_commensurable(const EigenvalueSet& e1, const EigenvalueSet& e2) {
    if (e1.torsion_only() || e2.torsion_only()) {
        throw DomainError("weak commensurability needs elements of infinite order");
    }
    return intersect_groups(e1, e2).infinite;
}

}  // namespace arithgenus
