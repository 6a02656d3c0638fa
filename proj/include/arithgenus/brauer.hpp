#pragma once

// Brauer classes over Q described by their local invariants in Q/Z.

#include <compare>
#include <map>
#include <string>
#include <string_view>

#include "arithgenus/number_core.hpp"

namespace arithgenus {

/// An element of Q/Z, stored as the reduced representative r/s in [0, 1).
class InvariantValue {
public:
    InvariantValue() = default;
    /// Reduces `value` modulo 1.
    explicit InvariantValue(const Rational& value);
    InvariantValue(long numerator, long denominator);

    const Rational& value() const noexcept { return value_; }
    bool is_zero() const noexcept { return sgn(value_) == 0; }
    /// Order of the element in Q/Z (the reduced denominator).
    long order() const;

    InvariantValue operator+(const InvariantValue& rhs) const;
    InvariantValue operator-() const;

    friend bool operator==(const InvariantValue& a, const InvariantValue& b) { return a.value_ == b.value_; }
    friend std::strong_ordering operator<=>(const InvariantValue& a, const InvariantValue& b) {
        const int c = cmp(a.value_, b.value_);
        return c < 0 ? std::strong_ordering::less : c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal;
    }

private:
    Rational value_{0};
};

using InvariantMap = std::map<Place, InvariantValue>;

/// A class in Br(Q), canonical form: only nonzero invariants are stored.
///
/// Every instance satisfies the ABHN constraints: the invariants sum to 0 in
/// Q/Z and the real invariant is 0 or 1/2.
class BrauerClass {
public:
    /// The trivial class (matrix algebras).
    BrauerClass() = default;

    /// Throws DomainError on a nonzero invariant sum or a real invariant
    /// outside {0, 1/2}. Zero entries are dropped.
    static BrauerClass from_invariants(const InvariantMap& entries);
    /// Quaternion algebra (a, b)_Q: invariant 1/2 where the Hilbert symbol is -1.
    static BrauerClass from_quaternion(const Rational& a, const Rational& b);
    /// Parses `place:r/s` entries separated by commas; "" is the trivial class.
    static BrauerClass parse(std::string_view text);

    const InvariantMap& invariants() const noexcept { return invariants_; }
    InvariantValue invariant(const Place& v) const;
    bool is_trivial() const noexcept { return invariants_.empty(); }
    bool ramified_at(const Place& v) const { return invariants_.contains(v); }

    std::string to_string() const;

    friend bool operator==(const BrauerClass&, const BrauerClass&) = default;
    friend std::strong_ordering operator<=>(const BrauerClass& a, const BrauerClass& b);

private:
    explicit BrauerClass(InvariantMap entries) : invariants_(std::move(entries)) {}
    void check_invariants() const;

    InvariantMap invariants_;
};

BrauerClass class_from_invariants(const InvariantMap& entries);
BrauerClass class_from_quaternion(const Rational& a, const Rational& b);
BrauerClass class_add(const BrauerClass& c1, const BrauerClass& c2);
BrauerClass class_neg(const BrauerClass& c);

struct IndexProfile {
    std::map<Place, long> local;  // places of nontrivial local index only
    long global = 1;

    friend bool operator==(const IndexProfile&, const IndexProfile&) = default;
};

/// Local orders of the invariants and their lcm, the index (= degree of the
/// underlying division algebra over Q).
IndexProfile index_profile(const BrauerClass& c);

long local_index(const BrauerClass& c, const Place& v);
long global_index(const BrauerClass& c);

/// True iff the class is a quaternion division algebra (global index 2).
bool is_quaternion_division(const BrauerClass& c);

}  // namespace arithgenus
