#include <doctest.h>

#include <random>

#include "arithgenus/error.hpp"
#include "arithgenus/weak_comm.hpp"
#include "oracles.hpp"

using namespace arithgenus;

namespace {

EigenvalueSet rat(std::initializer_list<const char*> values) {
    EigenvalueSet::Rationals out;
    for (const char* v : values) out.push_back(parse_rational(v));
    return EigenvalueSet::rational(out);
}

EigenvalueSet::Rationals random_rationals(std::mt19937_64& rng) {
    static const std::vector<long> primes{2, 3, 5, 7, 11, 13};
    EigenvalueSet::Rationals out;
    const int count = 1 + static_cast<int>(rng() % 3);
    while (static_cast<int>(out.size()) < count) {
        Rational q = (rng() % 5 == 0) ? -1 : 1;
        for (int j = 0; j < 2; ++j) {
            const long p = primes[rng() % primes.size()];
            const long e = static_cast<long>(rng() % 7) - 3;
            Integer pe;
            mpz_ui_pow_ui(pe.get_mpz_t(), p, static_cast<unsigned long>(std::labs(e)));
            q = e >= 0 ? Rational(q * pe) : Rational(q / pe);
        }
        if (q != 1 && q != -1) out.push_back(q);
    }
    return out;
}

}  // namespace

TEST_CASE("to_exponent_vector") {
    auto v = to_exponent_vector(12, {2, 3});
    CHECK(v.exponents == std::vector<long>{2, 1});
    CHECK(v.sign == 1);
    v = to_exponent_vector(parse_rational("3/5"), {2, 3, 5});
    CHECK(v.exponents == std::vector<long>{0, 1, -1});
    v = to_exponent_vector(-1, {});
    CHECK(v.exponents.empty());
    CHECK(v.sign == -1);
    CHECK_THROWS_AS(to_exponent_vector(14, {2, 3}), DomainError);
    CHECK_THROWS_AS(to_exponent_vector(0, {2}), DomainError);
}

TEST_CASE("multiplicative_dependence") {
    CHECK(multiplicative_dependence(4, 8) == std::pair<long, long>{3, 2});
    CHECK_FALSE(multiplicative_dependence(2, 3).has_value());
    CHECK_FALSE(multiplicative_dependence(12, 18).has_value());
    CHECK(multiplicative_dependence(-2, 4) == std::pair<long, long>{2, 1});
    CHECK(multiplicative_dependence(-2, -8) == std::pair<long, long>{3, 1});
    CHECK_THROWS_AS(multiplicative_dependence(1, 2), DomainError);
    CHECK_THROWS_AS(multiplicative_dependence(2, -1), DomainError);

    // Brute-force oracle over small exponents.
    const std::vector<long> values{2, -2, 4, -4, 8, 16, -8, 3, 9, -27, 6, 36, 12, 18};
    for (long a : values) {
        CHECK(multiplicative_dependence(a, a) == std::pair<long, long>{1, 1});
        for (long b : values) {
            std::optional<std::pair<long, long>> want;
            for (long m = 1; m <= 20 && !want; ++m) {
                for (long n = 1; n <= 20; ++n) {
                    Integer am, bn;
                    mpz_pow_ui(am.get_mpz_t(), Integer(a).get_mpz_t(), m);
                    mpz_pow_ui(bn.get_mpz_t(), Integer(b).get_mpz_t(), n);
                    if (am == bn) {
                        want = std::pair<long, long>{m, n};
                        break;
                    }
                }
            }
            CAPTURE(a);
            CAPTURE(b);
            CHECK(multiplicative_dependence(a, b) == want);
        }
    }
}

TEST_CASE("groups_intersect examples") {
    const auto r = intersect_groups(rat({"6", "10"}), rat({"3/5", "7"}));
    CHECK(r.nontrivial);
    CHECK(r.infinite);
    REQUIRE(r.witness.has_value());
    CHECK((*r.witness == parse_rational("3/5") || *r.witness == parse_rational("5/3")));
    CHECK_FALSE(groups_intersect(rat({"6", "10"}), rat({"15"})));

    const auto s2 = EigenvalueSet::quadratic({fundamental_unit(QuadField(2))});
    const auto s3 = EigenvalueSet::quadratic({fundamental_unit(QuadField(3))});
    CHECK_FALSE(groups_intersect(s2, s3));
    CHECK(groups_intersect(s2, s2));
    CHECK_FALSE(groups_intersect(s2, rat({"2"})));

    // -1 lies in both groups but is torsion.
    const auto neg = intersect_groups(rat({"-2", "2"}), rat({"-3", "3"}));
    CHECK(neg.nontrivial);
    CHECK_FALSE(neg.infinite);
}

TEST_CASE("weakly_commensurable examples") {
    CHECK(weakly_commensurable(rat({"4", "1/4"}), rat({"8", "1/8"})));
    CHECK_FALSE(weakly_commensurable(rat({"2", "1/2"}), rat({"3", "1/3"})));
    const auto e = fundamental_unit(QuadField(2));
    CHECK(weakly_commensurable(EigenvalueSet::quadratic({e, e.inverse()}),
                               EigenvalueSet::quadratic({e.pow(3), e.pow(-3)})));
    CHECK_FALSE(weakly_commensurable(rat({"-2"}), rat({"-3"})));
    CHECK_THROWS_AS(weakly_commensurable(rat({"-1"}), rat({"2"})), DomainError);
    CHECK_THROWS_AS(EigenvalueSet::quadratic({QuadUnit::one(QuadField(2))}), DomainError);
    CHECK_THROWS_AS(EigenvalueSet::rational({}), DomainError);
}

TEST_CASE("EigenvalueSet::parse") {
    const auto r = EigenvalueSet::parse("6, 10,-3/5");
    REQUIRE(r.is_rational());
    CHECK(r.rationals() == EigenvalueSet::Rationals{6, 10, parse_rational("-3/5")});
    const auto u = EigenvalueSet::parse("1 + 1*sqrt(2),3 + 2*sqrt(2)");
    REQUIRE_FALSE(u.is_rational());
    CHECK(u.units().size() == 2);
    CHECK_THROWS_AS(EigenvalueSet::parse(""), DomainError);
    CHECK_THROWS_AS(EigenvalueSet::parse("2,,3"), DomainError);
}

TEST_CASE("groups_intersect agrees with bounded search") {
    // Values +-p^e with 1 <= |e| <= 3: any common element needs exponents <= 6.
    std::mt19937_64 rng(2024);
    const std::vector<long> primes{2, 3, 5, 7, 11, 13};
    auto draw = [&] {
        EigenvalueSet::Rationals out(1 + rng() % 3);
        for (auto& q : out) {
            Integer pe;
            mpz_ui_pow_ui(pe.get_mpz_t(), primes[rng() % primes.size()], 1 + rng() % 3);
            q = Rational(rng() % 2 ? Integer(pe) : Integer(-pe));
            if (rng() % 2) q = 1 / q;
        }
        return out;
    };
    for (int i = 0; i < 400; ++i) {
        const auto a = draw(), b = draw();
        const bool got = groups_intersect(EigenvalueSet::rational(a), EigenvalueSet::rational(b));
        CHECK(got == oracle::bounded_groups_meet(a, b, 8));
        CHECK(got == groups_intersect(EigenvalueSet::rational(b), EigenvalueSet::rational(a)));
    }
}

TEST_CASE("intersection witnesses lie in both groups") {
    std::mt19937_64 rng(31);
    const std::vector<long> primes{2, 3, 5, 7, 11, 13};
    int checked = 0;
    for (int i = 0; i < 300; ++i) {
        const auto a = random_rationals(rng);
        const auto b = random_rationals(rng);
        const auto r = intersect_groups(EigenvalueSet::rational(a), EigenvalueSet::rational(b));
        if (oracle::bounded_groups_meet(a, b, 8)) CHECK(r.nontrivial);
        if (!r.witness) continue;
        CHECK(r.infinite);
        CHECK(*r.witness != 1);
        CHECK(*r.witness != -1);
        const auto in_a = oracle::in_independent_group(a, *r.witness, primes);
        const auto in_b = oracle::in_independent_group(b, *r.witness, primes);
        if (in_a) CHECK(*in_a);
        if (in_b) CHECK(*in_b);
        checked += in_a.has_value() && in_b.has_value();
    }
    CHECK(checked > 20);
}

TEST_CASE("weak commensurability is stable under powers") {
    std::mt19937_64 rng(77);
    for (int i = 0; i < 200; ++i) {
        auto a = random_rationals(rng);
        const auto b = random_rationals(rng);
        const bool base = weakly_commensurable(EigenvalueSet::rational(a), EigenvalueSet::rational(b));
        CHECK(base == weakly_commensurable(EigenvalueSet::rational(b), EigenvalueSet::rational(a)));
        if (!base) continue;
        const long k = static_cast<long>(rng() % 4) + 2;
        Integer num, den;
        mpz_pow_ui(num.get_mpz_t(), a[0].get_num_mpz_t(), k);
        mpz_pow_ui(den.get_mpz_t(), a[0].get_den_mpz_t(), k);
        a[0] = Rational(num, den);
        CHECK(weakly_commensurable(EigenvalueSet::rational(a), EigenvalueSet::rational(b)));
    }
}
