#include "arithgenus/length_spectrum.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "arithgenus/error.hpp"
#include "arithgenus/genus.hpp"

namespace arithgenus {

namespace {

void require_hyperbolic_quaternion(const BrauerClass& c) {
    if (!is_quaternion_division(c)) {
        throw DomainError("'" + c.to_string() + "' is not a quaternion division algebra");
    }
    if (c.ramified_at(Place::real())) {
        throw DomainError("'" + c.to_string() + "' ramifies at the real place; the quotient is not hyperbolic");
    }
}

std::vector<long> admissible_candidates(const BrauerClass& quaternion, long bound) {
    if (bound < 2) throw DomainError("spectrum bound must be at least 2, got " + std::to_string(bound));
    std::vector<long> out;
    for (long d = 2; d <= bound; ++d) {
        if (is_squarefree(Integer(d)) && embeds_quadratic(Integer(d), quaternion)) out.push_back(d);
    }
    return out;
}

SpectrumGenerator generator_for(long d, long bits) {
    return SpectrumGenerator{d, log(eta_analytic(QuadField(d, std::max(d, kDefaultMaxD)), bits))};
}

}  // namespace

HyperbolicGeodesic::HyperbolicGeodesic(QuadUnit eigenvalue_, long winding_)
    : eigenvalue(std::move(eigenvalue_)), winding(winding_) {
    if (!eigenvalue.exceeds_one()) throw DomainError("eigenvalue " + eigenvalue.to_string() + " is not > 1");
    if (winding < 1) throw DomainError("winding number must be >= 1");
}

BigReal geodesic_length(const HyperbolicGeodesic& g, long bits) {
    if (!g.eigenvalue.exceeds_one()) throw DomainError("eigenvalue must exceed 1");
    const long work = bits + kGuardBits;
    BigReal t = unit_real_value(g.eigenvalue, work);
    BigReal out = BigReal(Rational(2, g.winding), work) * log(t);
    return out.with_precision(bits);
}

bool admissible_d(const BrauerClass& quaternion, long d) {
    require_hyperbolic_quaternion(quaternion);
    if (d <= 1 || !is_squarefree(Integer(d))) {
        throw DomainError("d = " + std::to_string(d) + " must be squarefree and > 1");
    }
    return embeds_quadratic(Integer(d), quaternion);
}

std::vector<SpectrumGenerator> spectrum_generators(const BrauerClass& quaternion, long bound, long bits) {
    require_hyperbolic_quaternion(quaternion);
    const auto candidates = admissible_candidates(quaternion, bound);
    std::vector<SpectrumGenerator> out(candidates.size(), SpectrumGenerator{0, BigReal(bits)});
    const long n = static_cast<long>(candidates.size());
#pragma omp parallel for schedule(dynamic, 1)
    for (long i = 0; i < n; ++i) {
        out[i] = generator_for(candidates[i], bits);
    }
    return out;
}

std::vector<SpectrumGenerator> spectrum_generators_serial(const BrauerClass& quaternion, long bound, long bits) {
    require_hyperbolic_quaternion(quaternion);
    std::vector<SpectrumGenerator> out;
    for (long d : admissible_candidates(quaternion, bound)) out.push_back(generator_for(d, bits));
    return out;
}

long default_commensurability_bound(const BrauerClass& d1, const BrauerClass& d2) {
    long bound = 200;
    for (const auto* c : {&d1, &d2}) {
        for (const auto& [v, x] : c->invariants()) {
            if (v.is_finite()) {
                const long p = static_cast<long>(v.p());
                bound = std::max(bound, p * p);
            }
        }
    }
    return bound;
}

LengthComparison compare_length_spectra(const BrauerClass& d1, const BrauerClass& d2, std::optional<long> bound) {
    require_hyperbolic_quaternion(d1);
    require_hyperbolic_quaternion(d2);
    const long limit = bound.value_or(default_commensurability_bound(d1, d2));
    if (limit < 2) throw DomainError("bound must be at least 2");
    for (long d = 2; d <= limit; ++d) {
        if (!is_squarefree(Integer(d))) continue;
        if (embeds_quadratic(Integer(d), d1) != embeds_quadratic(Integer(d), d2)) {
            return LengthComparison{false, limit, d};
        }
    }
    return LengthComparison{true, limit, std::nullopt};
}

bool length_commensurable(const BrauerClass& d1, const BrauerClass& d2, long bound) {
    return compare_length_spectra(d1, d2, bound).commensurable;
}

double weyl_main_term(const WeylQuery& q) {
    if (q.dim <= 0) throw DomainError("dimension must be positive");
    if (!(q.volume > 0)) throw DomainError("volume must be positive");
    if (!(q.lambda >= 0)) throw DomainError("lambda must be nonnegative");
    const double n = q.dim;
    const double denom = std::pow(4.0 * std::numbers::pi, n / 2.0) * std::tgamma(n / 2.0 + 1.0);
    return q.volume / denom * std::pow(q.lambda, n);
}

}  // namespace arithgenus
