#include <doctest.h>

#include <bit>
#include <cmath>
#include <numbers>

#include "arithgenus/error.hpp"
#include "arithgenus/length_spectrum.hpp"

using namespace arithgenus;

namespace {

QuadUnit unit(long d, const char* x, const char* y) {
    return QuadUnit(QuadField(d), parse_rational(x), parse_rational(y));
}

// Quaternion division classes split at the real place with support in the given primes.
std::vector<BrauerClass> split_quaternion_classes(const std::vector<std::uint64_t>& primes) {
    std::vector<BrauerClass> out;
    for (unsigned mask = 0; mask < (1U << primes.size()); ++mask) {
        if (std::popcount(mask) == 0 || std::popcount(mask) % 2 != 0) continue;
        InvariantMap m;
        for (std::size_t i = 0; i < primes.size(); ++i) {
            if (mask & (1U << i)) m[Place::prime(primes[i])] = InvariantValue(1, 2);
        }
        out.push_back(BrauerClass::from_invariants(m));
    }
    return out;
}

}  // namespace

TEST_CASE("geodesic_length") {
    const long bits = 128;
    const auto t = unit(2, "3", "2");
    const double l1 = geodesic_length({t, 1}, bits).to_double();
    CHECK(l1 == doctest::Approx(2.0 * std::log(3.0 + 2.0 * std::sqrt(2.0))).epsilon(1e-14));
    CHECK(l1 == doctest::Approx(3.5255).epsilon(1e-4));
    CHECK(geodesic_length({t, 2}, bits).to_double() == doctest::Approx(l1 / 2));
    CHECK(geodesic_length({unit(5, "3/2", "1/2"), 1}, bits).to_double() == doctest::Approx(1.9248).epsilon(1e-4));
    CHECK_THROWS_AS(HyperbolicGeodesic(t.inverse(), 1), DomainError);
    CHECK_THROWS_AS(HyperbolicGeodesic(t, 0), DomainError);

    for (long d : {2L, 3L, 5L, 7L, 13L}) {
        const auto e = fundamental_unit(QuadField(d));
        const BigReal base = geodesic_length({e, 1}, 256);
        for (long k = 1; k <= 6; ++k) {
            const BigReal scaled = geodesic_length({e.pow(k), 1}, 256);
            CHECK(relative_difference(scaled, base * BigReal(k, 256)).to_double() < 1e-60);
        }
    }
}

TEST_CASE("admissible_d") {
    const auto q = class_from_quaternion(-1, 3);
    CHECK(admissible_d(q, 2));
    CHECK(admissible_d(q, 5));
    CHECK_FALSE(admissible_d(q, 7));
    CHECK_THROWS_AS(admissible_d(class_from_quaternion(-1, -1), 2), DomainError);
    CHECK_THROWS_AS(admissible_d(BrauerClass(), 2), DomainError);
    CHECK_THROWS_AS(admissible_d(BrauerClass::parse("2:1/3,3:2/3"), 2), DomainError);
    CHECK_THROWS_AS(admissible_d(q, 8), DomainError);

    // Only the square class of d matters.
    for (long d = 2; d < 60; ++d) {
        if (!is_squarefree(Integer(d))) continue;
        for (long m : {2L, 3L, 5L}) {
            const long reduced = squarefree_part(Integer(d * m * m)).get_si();
            CHECK(admissible_d(q, reduced) == admissible_d(q, d));
        }
    }
}

TEST_CASE("spectrum_generators") {
    const auto q = class_from_quaternion(-1, 3);
    const auto gens = spectrum_generators(q, 10, 128);
    std::vector<long> ds;
    for (const auto& g : gens) ds.push_back(g.d);
    CHECK(ds == std::vector<long>{2, 3, 5, 6});
    for (const auto& g : gens) {
        CHECK(g.log_eta.sign() > 0);
        CHECK(admissible_d(q, g.d));
        CHECK(relative_difference(g.log_eta, log(eta_analytic(QuadField(g.d), 128))).to_double() < 1e-30);
    }
    CHECK_THROWS_AS(spectrum_generators(q, 1, 128), DomainError);
    CHECK_THROWS_AS(spectrum_generators(BrauerClass(), 10, 128), DomainError);

    const auto big = spectrum_generators(class_from_quaternion(-1, 7), 120, 128);
    const auto ref = spectrum_generators_serial(class_from_quaternion(-1, 7), 120, 128);
    REQUIRE(big.size() == ref.size());
    for (std::size_t i = 0; i < big.size(); ++i) {
        CHECK(big[i].d == ref[i].d);
        CHECK(big[i].log_eta == ref[i].log_eta);
    }
}

TEST_CASE("length_commensurable") {
    CHECK(length_commensurable(class_from_quaternion(-1, 3), class_from_quaternion(2, 3), 200));
    CHECK_FALSE(length_commensurable(class_from_quaternion(-1, 3), class_from_quaternion(-1, 7), 200));
    const auto cmp = compare_length_spectra(class_from_quaternion(-1, 3), class_from_quaternion(-1, 7));
    CHECK_FALSE(cmp.commensurable);
    REQUIRE(cmp.witness.has_value());
    CHECK(admissible_d(class_from_quaternion(-1, 3), *cmp.witness) !=
          admissible_d(class_from_quaternion(-1, 7), *cmp.witness));
    CHECK(default_commensurability_bound(class_from_quaternion(-1, 3), class_from_quaternion(-1, 7)) == 200);
    CHECK(default_commensurability_bound(BrauerClass::parse("2:1/2,17:1/2"), class_from_quaternion(-1, 3)) == 289);

    const auto classes = split_quaternion_classes({2, 3, 5, 7});
    for (const auto& a : classes) {
        CHECK(length_commensurable(a, a, 100));
        for (const auto& b : classes) {
            CHECK(length_commensurable(a, b, 100) == length_commensurable(b, a, 100));
            CHECK(length_commensurable(a, b, 200) == (a == b));
        }
    }
}

TEST_CASE("weyl_main_term") {
    const double pi = std::numbers::pi;
    CHECK(weyl_main_term({2, 4 * pi, 1.0}) == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(weyl_main_term({2, 4 * pi, 2.0}) == doctest::Approx(4.0).epsilon(1e-12));
    CHECK(weyl_main_term({2, 4 * pi, 0.0}) == 0.0);
    // n = 3: vol / ((4 pi)^(3/2) * Gamma(5/2)) * lambda^3.
    const double expected = 10.0 / (std::pow(4 * pi, 1.5) * 0.75 * std::sqrt(pi)) * 8.0;
    CHECK(weyl_main_term({3, 10.0, 2.0}) == doctest::Approx(expected).epsilon(1e-12));
    CHECK_THROWS_AS(weyl_main_term({0, 1.0, 1.0}), DomainError);
    CHECK_THROWS_AS(weyl_main_term({2, -1.0, 1.0}), DomainError);
    CHECK_THROWS_AS(weyl_main_term({2, 1.0, -1.0}), DomainError);
}
