#include <doctest.h>

#include <random>

#include "arithgenus/error.hpp"
#include "arithgenus/number_core.hpp"
#include "oracles.hpp"

using namespace arithgenus;

namespace {
Place P(std::uint64_t p) { return Place::prime(p); }
const Place kReal = Place::real();
}  // namespace

TEST_CASE("places") {
    CHECK(P(7).p() == 7);
    CHECK(kReal.is_real());
    CHECK_THROWS_AS(Place::prime(9), DomainError);
    CHECK_THROWS_AS(Place::prime(1), DomainError);
    CHECK(Place::parse("inf") == kReal);
    CHECK(Place::parse("13") == P(13));
    CHECK_THROWS_AS(Place::parse("x"), DomainError);
    CHECK(P(101) < kReal);
    CHECK(P(2) < P(3));
}

TEST_CASE("factor") {
    auto f = factor(Rational(18));
    CHECK(f.sign == 1);
    CHECK(f.factors == std::vector<PrimePower>{{2, 1}, {3, 2}});

    f = factor(Rational(3, 8));
    CHECK(f.factors == std::vector<PrimePower>{{2, -3}, {3, 1}});

    f = factor(Rational(-1));
    CHECK(f.sign == -1);
    CHECK(f.factors.empty());

    CHECK_THROWS_AS(factor(Rational(0)), DomainError);

    SUBCASE("large cofactors go through rho") {
        // 1000003 * 1000033 * 999983^2
        Integer n = Integer(1000003) * 1000033 * 999983 * 999983;
        auto g = factor(n);
        CHECK(g.factors == std::vector<PrimePower>{{999983, 2}, {1000003, 1}, {1000033, 1}});
        CHECK(g.value() == Rational(n));
    }

    SUBCASE("reassembly") {
        std::mt19937_64 rng(7);
        for (int i = 0; i < 200; ++i) {
            long num = static_cast<long>(rng() % 2000000) - 1000000;
            long den = static_cast<long>(rng() % 5000) + 1;
            if (num == 0) continue;
            Rational q(num, den);
            q.canonicalize();
            auto fq = factor(q);
            CHECK(fq.value() == q);
            for (std::size_t k = 1; k < fq.factors.size(); ++k) CHECK(fq.factors[k - 1].prime < fq.factors[k].prime);
        }
    }
}

TEST_CASE("squarefree_part") {
    CHECK(squarefree_part(12) == 3);
    CHECK(squarefree_part(-50) == -2);
    CHECK(squarefree_part(7) == 7);
    CHECK(squarefree_part(1) == 1);
    CHECK_THROWS_AS(squarefree_part(0), DomainError);
    CHECK(square_class(Rational(3, 8)) == 6);
}

TEST_CASE("kronecker_symbol") {
    CHECK(kronecker_symbol(5, 2) == -1);
    CHECK(kronecker_symbol(5, 4) == 1);
    for (long n = -20; n <= 20; ++n) {
        if (n != 0) CHECK(kronecker_symbol(1, n) == 1);
    }
    CHECK(kronecker_symbol(4, 2) == 0);
    CHECK(kronecker_symbol(-3, -1) == -1);
    CHECK(kronecker_symbol(3, -1) == 1);
    CHECK_THROWS_AS(kronecker_symbol(0, 0), DomainError);

    SUBCASE("odd primes agree with Euler's criterion") {
        for (long p : {3L, 5L, 7L, 11L, 13L, 31L}) {
            for (long a = -40; a <= 40; ++a) {
                long r = 1;
                const long e = (p - 1) / 2;
                for (long i = 0; i < e; ++i) r = oracle::mod(r * a, p);
                const int euler = r == 0 ? 0 : (r == 1 ? 1 : -1);
                CHECK(kronecker_symbol(a, p) == euler);
            }
        }
    }

    SUBCASE("completely multiplicative") {
        for (long a = -15; a <= 15; ++a) {
            for (long m = 1; m <= 12; ++m) {
                for (long n = 1; n <= 12; ++n) {
                    CHECK(kronecker_symbol(a, m * n) == kronecker_symbol(a, m) * kronecker_symbol(a, n));
                }
            }
        }
        for (long n = 1; n <= 30; ++n) {
            for (long a = -8; a <= 8; ++a) {
                for (long b = -8; b <= 8; ++b) {
                    CHECK(kronecker_symbol(a * b, n) == kronecker_symbol(a, n) * kronecker_symbol(b, n));
                }
            }
        }
    }
}

TEST_CASE("padic_valuation") {
    CHECK(padic_valuation(18, 3) == 2);
    CHECK(padic_valuation(Rational(3, 8), 2) == -3);
    CHECK(padic_valuation(1, 5) == 0);
    CHECK_THROWS_AS(padic_valuation(0, 5), DomainError);
    CHECK_THROWS_AS(padic_valuation(10, 4), DomainError);
}

TEST_CASE("is_local_square") {
    CHECK_FALSE(is_local_square(-1, P(3)));
    CHECK(is_local_square(17, P(2)));
    CHECK(is_local_square(4, kReal));
    CHECK_FALSE(is_local_square(-4, kReal));
    CHECK(is_local_square(Rational(1, 4), P(2)));
    CHECK_FALSE(is_local_square(2, P(3)));
    CHECK(is_local_square(7, P(3)));
    CHECK_FALSE(is_local_square(5, P(2)));
    CHECK_THROWS_AS(is_local_square(0, P(3)), DomainError);

    SUBCASE("square iff trivial against every square-class generator") {
        for (auto v : {P(2), P(3), P(5), P(7), P(11), kReal}) {
            for (long a = -60; a <= 60; ++a) {
                if (a == 0) continue;
                bool all_one = true;
                for (const auto& r : square_class_generators(v)) all_one = all_one && hilbert_symbol(a, r, v) == 1;
                CHECK(is_local_square(a, v) == all_one);
            }
        }
    }
}

TEST_CASE("hilbert_symbol examples") {
    CHECK(hilbert_symbol(-1, 3, P(3)) == -1);
    CHECK(hilbert_symbol(-1, 3, kReal) == 1);
    CHECK(hilbert_symbol(2, 3, P(2)) == -1);
    CHECK(hilbert_symbol(-1, -1, kReal) == -1);
    CHECK(hilbert_symbol(-1, -1, P(2)) == -1);
    CHECK_THROWS_AS(hilbert_symbol(0, 3, P(3)), DomainError);
}

TEST_CASE("hilbert_symbol against the p-adic isotropy oracle") {
    const std::vector<long> reps{1, -1, 2, -2, 3, -3, 5, -5, 6, -6, 7, -7, 10, -10, 15, -15};
    for (long p : {2L, 3L, 5L}) {
        for (long a : reps) {
            for (long b : reps) {
                CAPTURE(a);
                CAPTURE(b);
                CAPTURE(p);
                CHECK(hilbert_symbol(a, b, P(p)) == oracle::hilbert_bruteforce(a, b, p));
            }
        }
    }
    // Non-squarefree and rational arguments reduce to the same square class.
    CHECK(hilbert_symbol(Rational(-4, 9), 12, P(3)) == oracle::hilbert_bruteforce(-1, 3, 3));
}

TEST_CASE("hilbert_symbol properties") {
    std::mt19937_64 rng(2024);
    auto draw = [&] {
        long x = static_cast<long>(rng() % 2000) + 1;
        return (rng() & 1) ? x : -x;
    };
    const std::vector<Place> places{P(2), P(3), P(5), P(7), P(13), kReal};
    for (int i = 0; i < 300; ++i) {
        const long a = draw(), b1 = draw(), b2 = draw();
        for (const auto& v : places) {
            CHECK(hilbert_symbol(a, b1, v) == hilbert_symbol(b1, a, v));
            CHECK(hilbert_symbol(a, b1 * b2, v) == hilbert_symbol(a, b1, v) * hilbert_symbol(a, b2, v));
            CHECK(hilbert_symbol(a, -a, v) == 1);
        }
        int product = 1;
        for (const auto& v : hilbert_candidate_places(a, b1)) product *= hilbert_symbol(a, b1, v);
        CHECK(product == 1);
    }
}

TEST_CASE("parse_rational") {
    CHECK(parse_rational("3/8") == Rational(3, 8));
    CHECK(parse_rational("-6/4") == Rational(-3, 2));
    CHECK(parse_rational("+5") == 5);
    CHECK(to_string(parse_rational("-6/4")) == "-3/2");
    CHECK_THROWS_AS(parse_rational("1/0"), DomainError);
    CHECK_THROWS_AS(parse_rational("abc"), DomainError);
    CHECK_THROWS_AS(parse_rational(""), DomainError);
    CHECK_THROWS_AS(parse_rational("1/"), DomainError);
}
