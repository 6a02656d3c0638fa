#pragma once

// Weak commensurability of semisimple elements whose eigenvalues are
// rationals or units of one real quadratic field, decided by exact
// intersection of the multiplicative groups the eigenvalues generate.

#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <variant>
#include <vector>

#include "arithgenus/number_core.hpp"
#include "arithgenus/quad_field.hpp"

namespace arithgenus {

class EigenvalueSet {
public:
    using Rationals = std::vector<Rational>;
    using Units = std::vector<QuadUnit>;

    /// Values must be nonzero.
    static EigenvalueSet rational(Rationals values);
    /// Units must share one field and differ from +-1.
    static EigenvalueSet quadratic(Units units);
    /// Comma-separated rationals, or units written `x + y*sqrt(d)`.
    static EigenvalueSet parse(std::string_view text);

    bool is_rational() const noexcept { return std::holds_alternative<Rationals>(values_); }
    const Rationals& rationals() const { return std::get<Rationals>(values_); }
    const Units& units() const { return std::get<Units>(values_); }
    std::size_t size() const;
    /// Every element is +-1.
    bool torsion_only() const;

private:
    explicit EigenvalueSet(std::variant<Rationals, Units> values) : values_(std::move(values)) {}
    std::variant<Rationals, Units> values_;
};

struct ExponentVector {
    std::vector<std::uint64_t> primes;
    std::vector<long> exponents;
    int sign = 1;

    friend bool operator==(const ExponentVector&, const ExponentVector&) = default;
};

/// Coordinates of q over a sorted prime list; throws if q has other primes.
ExponentVector to_exponent_vector(const Rational& q, const std::vector<std::uint64_t>& support);

/// Least m > 0 (with its n > 0) such that q1^m = q2^n, if any.
std::optional<std::pair<long, long>> multiplicative_dependence(const Rational& q1, const Rational& q2);

struct GroupIntersection {
    /// The intersection contains an element other than 1.
    bool nontrivial = false;
    /// The intersection contains an element other than +-1.
    bool infinite = false;
    /// A canonical generator of infinite order (rational case only).
    std::optional<Rational> witness;
};

GroupIntersection intersect_groups(const EigenvalueSet& s1, const EigenvalueSet& s2);

/// <s1> and <s2> intersect nontrivially (the witness may be -1).
bool groups_intersect(const EigenvalueSet& s1, const EigenvalueSet& s2);

/// Nontrivial intersection with a witness other than +-1. Throws DomainError
/// when a set consists of torsion only.
bool weakly_commensurable(const EigenvalueSet& e1, const EigenvalueSet& e2);

}  // namespace arithgenus
