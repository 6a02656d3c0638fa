#pragma once

// Closed geodesics on quaternionic arithmetic surfaces H^2 / Gamma: lengths,
// admissible quadratic subfields, generators of the rational length
// spectrum, and the Weyl leading term.

#include <optional>
#include <vector>

#include "arithgenus/brauer.hpp"
#include "arithgenus/quad_field.hpp"

namespace arithgenus {

/// A semisimple element seen through its eigenvalue t > 1 and the winding
/// number n >= 1 of its geodesic.
struct HyperbolicGeodesic {
    HyperbolicGeodesic(QuadUnit eigenvalue, long winding);

    QuadUnit eigenvalue;
    long winding;
};

struct SpectrumGenerator {
    long d;
    BigReal log_eta;
};

struct WeylQuery {
    int dim;
    double volume;
    double lambda;
};

/// (2 / n) * log(t).
BigReal geodesic_length(const HyperbolicGeodesic& g, long bits);

/// Q(sqrt(d)) is a maximal subfield of D (a quaternion division algebra
/// split at the real place).
bool admissible_d(const BrauerClass& quaternion, long d);

/// (d, log eta(d)) for every admissible squarefree 1 < d <= bound, sorted by d.
std::vector<SpectrumGenerator> spectrum_generators(const BrauerClass& quaternion, long bound, long bits);
std::vector<SpectrumGenerator> spectrum_generators_serial(const BrauerClass& quaternion, long bound, long bits);

struct LengthComparison {
    bool commensurable;
    long bound;
    /// Smallest d admissible for exactly one of the two algebras.
    std::optional<long> witness;
};

/// max(200, p^2) for the largest ramified prime p of either algebra.
long default_commensurability_bound(const BrauerClass& d1, const BrauerClass& d2);

LengthComparison compare_length_spectra(const BrauerClass& d1, const BrauerClass& d2,
                                        std::optional<long> bound = std::nullopt);
bool length_commensurable(const BrauerClass& d1, const BrauerClass& d2, long bound);

/// vol / ((4 pi)^(n/2) Gamma(n/2 + 1)) * lambda^n.
double weyl_main_term(const WeylQuery& q);

}  // namespace arithgenus
