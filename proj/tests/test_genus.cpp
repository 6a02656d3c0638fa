#include <doctest.h>

#include <random>

#include "arithgenus/error.hpp"
#include "arithgenus/genus.hpp"
#include "oracles.hpp"

using namespace arithgenus;

namespace {

Place P(std::uint64_t p) { return Place::prime(p); }
BrauerClass cls(std::string_view text) { return BrauerClass::parse(text); }

std::vector<long> orders_of(const BrauerClass& c) {
    std::vector<long> out;
    for (const auto& [v, x] : c.invariants()) out.push_back(x.order());
    return out;
}

}  // namespace

TEST_CASE("embeds_quadratic") {
    const auto q = class_from_quaternion(-1, 3);
    CHECK(embeds_quadratic(-1, q));
    CHECK_FALSE(embeds_quadratic(7, q));
    CHECK(embeds_quadratic(2, q));
    CHECK(embeds_quadratic(-3, q));
    CHECK_FALSE(embeds_quadratic(-3, class_from_quaternion(-1, 7)));
    CHECK_THROWS_AS(embeds_quadratic(4, q), DomainError);
    CHECK_THROWS_AS(embeds_quadratic(1, q), DomainError);
    CHECK_THROWS_AS(embeds_quadratic(2, cls("2:1/3,3:2/3")), DomainError);
    // Ramified at infinity: only imaginary fields embed.
    const auto definite = class_from_quaternion(-1, -1);
    CHECK_FALSE(embeds_quadratic(3, definite));
    CHECK(embeds_quadratic(-3, definite));
}

TEST_CASE("splits_with_profile") {
    const auto q = class_from_quaternion(-1, 3);
    auto gaussian = LocalDegreeProfile::quadratic(-1, {P(2), P(3)});
    CHECK(splits_with_profile(gaussian, q));

    LocalDegreeProfile cubic(3, {{P(2), {1, 2}}, {P(3), {3}}, {P(5), {3}}});
    CHECK_FALSE(splits_with_profile(cubic, cls("2:1/3,3:1/3,5:1/3")));
    LocalDegreeProfile inert(3, {{P(2), {3}}, {P(3), {3}}, {P(5), {3}}});
    CHECK(splits_with_profile(inert, cls("2:1/3,3:1/3,5:1/3")));

    CHECK(splits_with_profile(cubic, BrauerClass()));
    CHECK_THROWS_AS(splits_with_profile(gaussian, class_from_quaternion(-1, 7)), DomainError);
    CHECK_THROWS_AS(LocalDegreeProfile(2, {{P(2), {1}}}), DomainError);
    CHECK_THROWS_AS(LocalDegreeProfile(3, {{Place::real(), {3}}}), DomainError);

    SUBCASE("quadratic profiles agree with embeds_quadratic") {
        const auto c = class_from_quaternion(-1, 3);
        for (long d = -40; d <= 40; ++d) {
            if (d == 1 || !is_squarefree(d)) continue;
            auto prof = LocalDegreeProfile::quadratic(d, {P(2), P(3)});
            CHECK(splits_with_profile(prof, c) == embeds_quadratic(d, c));
        }
    }
}

TEST_CASE("same_maximal_subfields") {
    CHECK(same_maximal_subfields(class_from_quaternion(-1, 3), class_from_quaternion(2, 3)));
    CHECK_FALSE(same_maximal_subfields(class_from_quaternion(-1, 3), class_from_quaternion(-1, 7)));
    CHECK(same_maximal_subfields(cls("2:1/3,3:2/3"), cls("2:2/3,3:1/3")));
    CHECK_FALSE(same_maximal_subfields(cls("2:1/3,3:2/3"), cls("2:1/2,3:1/2")));
}

TEST_CASE("genus_enumerate examples") {
    const auto q = class_from_quaternion(-1, 3);
    auto g = genus_enumerate(q);
    CHECK(g.members == std::vector<BrauerClass>{q});

    g = genus_enumerate(cls("2:1/3,3:2/3"));
    CHECK(g.members == std::vector<BrauerClass>{cls("2:1/3,3:2/3"), cls("2:2/3,3:1/3")});

    g = genus_enumerate(cls("2:1/3,3:1/3,5:1/3"));
    CHECK(g.members == std::vector<BrauerClass>{cls("2:1/3,3:1/3,5:1/3"), cls("2:2/3,3:2/3,5:2/3")});

    CHECK(genus_enumerate(BrauerClass()).members == std::vector<BrauerClass>{BrauerClass()});
}

TEST_CASE("genus_enumerate properties") {
    std::mt19937_64 rng(99);
    const std::vector<std::uint64_t> primes{2, 3, 5, 7, 11};
    for (int i = 0; i < 150; ++i) {
        InvariantMap m;
        InvariantValue sum;
        for (auto p : primes) {
            if (rng() % 2) continue;
            const long den = static_cast<long>(rng() % 7) + 1;
            InvariantValue x(static_cast<long>(rng() % den), den);
            m[P(p)] = x;
            sum = sum + x;
        }
        m[P(13)] = -sum;
        const auto c = BrauerClass::from_invariants(m);
        const auto g = genus_enumerate(c);
        CAPTURE(c.to_string());
        CHECK(std::find(g.members.begin(), g.members.end(), c) != g.members.end());
        CHECK(std::find(g.members.begin(), g.members.end(), class_neg(c)) != g.members.end());
        CHECK(std::is_sorted(g.members.begin(), g.members.end()));
        CHECK(std::adjacent_find(g.members.begin(), g.members.end()) == g.members.end());
        CHECK(static_cast<long>(g.members.size()) == oracle::zero_sum_tuple_count(orders_of(c)));
        for (const auto& member : g.members) CHECK(same_maximal_subfields(member, c));
        CHECK(genus_enumerate_serial(c).members == g.members);
    }
}

TEST_CASE("same_maximal_subfields is an equivalence") {
    std::vector<BrauerClass> sample;
    for (const char* text : {"", "2:1/2,3:1/2", "2:1/2,5:1/2", "2:1/3,3:2/3", "2:2/3,3:1/3", "2:1/3,3:1/3,5:1/3",
                             "2:2/3,3:2/3,5:2/3", "2:1/4,3:3/4", "2:3/4,3:1/4", "2:1/2,inf:1/2"}) {
        sample.push_back(cls(text));
    }
    for (const auto& a : sample) {
        CHECK(same_maximal_subfields(a, a));
        for (const auto& b : sample) {
            CHECK(same_maximal_subfields(a, b) == same_maximal_subfields(b, a));
            for (const auto& c : sample) {
                if (same_maximal_subfields(a, b) && same_maximal_subfields(b, c)) CHECK(same_maximal_subfields(a, c));
            }
            // Within one support, the genus is exactly the equivalence class.
            const auto g = genus_enumerate(a);
            const bool in_genus = std::find(g.members.begin(), g.members.end(), b) != g.members.end();
            CHECK(in_genus == same_maximal_subfields(a, b));
        }
    }
}

TEST_CASE("epsilon_family") {
    auto f = epsilon_family({2, 3});
    CHECK(f == std::vector<BrauerClass>{cls("2:1/3,3:2/3"), cls("2:2/3,3:1/3")});

    f = epsilon_family({2, 3, 5});
    CHECK(f == std::vector<BrauerClass>{cls("2:1/3,3:1/3,5:1/3"), cls("2:2/3,3:2/3,5:2/3")});

    f = epsilon_family({2, 3, 5, 7});
    CHECK(f.size() == 6);
    for (const auto& c : f) {
        int plus = 0;
        for (const auto& [v, x] : c.invariants()) plus += x == InvariantValue(1, 3);
        CHECK(plus == 2);
    }

    CHECK_THROWS_AS(epsilon_family({2, 2, 3}), DomainError);
    CHECK_THROWS_AS(epsilon_family({2}), DomainError);
    CHECK_THROWS_AS(epsilon_family({2, 4}), DomainError);

    std::size_t previous = 0;
    std::vector<std::uint64_t> primes{2, 3};
    for (std::uint64_t next : {5, 7, 11, 13}) {
        const auto fam = epsilon_family(primes);
        CHECK(std::is_sorted(fam.begin(), fam.end()));
        for (std::size_t i = 0; i < fam.size(); ++i) {
            CHECK(global_index(fam[i]) == 3);
            for (std::size_t j = i + 1; j < fam.size(); ++j) {
                CHECK(same_maximal_subfields(fam[i], fam[j]));
                CHECK(fam[i] != fam[j]);
            }
        }
        if (primes.size() >= 4) CHECK(fam.size() > previous);
        previous = fam.size();
        primes.push_back(next);
    }
}
