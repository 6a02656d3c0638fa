#pragma once

// Exact arithmetic over Q: factorization, residue symbols, p-adic
// valuations, local square classes and Hilbert symbols.

#include <compare>
#include <cstdint>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include <gmpxx.h>

namespace arithgenus {

using Integer = mpz_class;
using Rational = mpq_class;

/// A place of Q: a finite prime p or the real (infinite) place.
///
/// Finite places are checked for primality on construction. Places order
/// primes ascending with the real place last, which is also the order used
/// by every text rendering in the library.
class Place {
public:
    static Place real() noexcept { return Place(0); }
    /// Throws DomainError if `p` is not prime.
    static Place prime(std::uint64_t p);
    /// Parses "inf" or a decimal prime.
    static Place parse(std::string_view text);

    bool is_real() const noexcept { return p_ == 0; }
    bool is_finite() const noexcept { return p_ != 0; }
    /// The prime of a finite place; 0 for the real place.
    std::uint64_t p() const noexcept { return p_; }

    std::string to_string() const;

    friend bool operator==(const Place&, const Place&) = default;
    friend std::strong_ordering operator<=>(const Place& a, const Place& b) noexcept {
        if (a.is_real() != b.is_real()) {
            return a.is_real() ? std::strong_ordering::greater : std::strong_ordering::less;
        }
        return a.p_ <=> b.p_;
    }

private:
    explicit Place(std::uint64_t p) noexcept : p_(p) {}
    std::uint64_t p_;
};

struct PrimePower {
    std::uint64_t prime;
    long exponent;

    friend bool operator==(const PrimePower&, const PrimePower&) = default;
};

/// Signed factorization of a nonzero rational; primes strictly increasing,
/// exponents nonzero (negative for the denominator).
struct Factorization {
    int sign = 1;
    std::vector<PrimePower> factors;

    Rational value() const;
    friend bool operator==(const Factorization&, const Factorization&) = default;
};

bool is_prime(const Integer& n);
bool is_prime(std::uint64_t n);

/// Trial division to 10^6, then Pollard-Brent rho on the cofactor. Throws
/// LimitError if a composite cofactor cannot be split, DomainError for 0.
Factorization factor(const Rational& q);
Factorization factor(const Integer& n);

/// Primes dividing the numerator or denominator of q.
std::vector<std::uint64_t> prime_support(const Rational& q);

/// The squarefree s with n = s * m^2, sign preserved.
Integer squarefree_part(const Integer& n);
/// Squarefree integer in the same rational square class as q.
Integer square_class(const Rational& q);
bool is_squarefree(const Integer& n);

int kronecker_symbol(const Integer& a, const Integer& n);

long padic_valuation(const Rational& q, std::uint64_t p);

bool is_local_square(const Rational& q, const Place& v);

/// (a,b)_v in {-1, +1}.
int hilbert_symbol(const Rational& a, const Rational& b, const Place& v);

/// Places where a Hilbert symbol of a and b can be nontrivial: the real
/// place, 2, and the primes dividing a or b.
std::vector<Place> hilbert_candidate_places(const Rational& a, const Rational& b);

/// Representatives of Q_v^x / (Q_v^x)^2 modulo the trivial class:
/// {-1} at the real place, {-1, 2, 5} at 2, {p, n_p} at odd p.
std::vector<Rational> square_class_generators(const Place& v);

/// Accepts "n", "-n", "n/m" with decimal digits; throws DomainError otherwise.
Rational parse_rational(std::string_view text);
/// "n" for integers, "n/m" otherwise.
std::string to_string(const Rational& q);

}  // namespace arithgenus
