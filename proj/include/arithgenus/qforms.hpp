#pragma once

// Diagonal quadratic forms over Q: local invariants, local and global
// isotropy, Witt indices, equivalence and similarity; B_n / C_n group data,
// the twins test and the commensurability verdict for arithmetic triples.

#include <map>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <utility>
#include <variant>
#include <vector>

#include "arithgenus/brauer.hpp"
#include "arithgenus/number_core.hpp"

namespace arithgenus {

/// <a_1, ..., a_n> with nonzero rational coefficients.
class QuadraticForm {
public:
    explicit QuadraticForm(std::vector<Rational> coeffs);
    /// "1,1,-3".
    static QuadraticForm parse(std::string_view text);

    const std::vector<Rational>& coeffs() const noexcept { return coeffs_; }
    long dim() const noexcept { return static_cast<long>(coeffs_.size()); }
    QuadraticForm scaled(const Rational& lambda) const;
    std::string to_string() const;

    friend bool operator==(const QuadraticForm&, const QuadraticForm&) = default;

private:
    std::vector<Rational> coeffs_;
};

/// Classifying data of a form over Q: dimension, discriminant square class,
/// Hasse invariants (only the places where they are -1) and signature.
struct LocalInvariants {
    long dim = 0;
    Integer disc = 1;
    std::map<Place, int> hasse;
    std::pair<long, long> signature{0, 0};

    int hasse_at(const Place& v) const;
    friend bool operator==(const LocalInvariants&, const LocalInvariants&) = default;
};

LocalInvariants form_invariants(const QuadraticForm& f);

/// Isotropy over Q_v decided from the invariants alone.
bool is_isotropic_local(const LocalInvariants& inv, const Place& v);
bool is_isotropic_local(const QuadraticForm& f, const Place& v);

/// Invariants of g where f = H + g (H the hyperbolic plane).
LocalInvariants split_hyperbolic_plane(const LocalInvariants& inv);

long witt_index_local(const QuadraticForm& f, const Place& v);
bool is_isotropic_global(const LocalInvariants& inv);
bool is_isotropic_global(const QuadraticForm& f);
long witt_index_global(const QuadraticForm& f);

/// Places at which some invariant of f can be nontrivial (real, 2, primes of
/// the coefficients).
std::vector<Place> relevant_places(const QuadraticForm& f);

struct Comparison {
    bool equal;
    std::string reason;  // empty when equal
};

Comparison compare_forms(const QuadraticForm& f, const QuadraticForm& g);
bool forms_equivalent(const QuadraticForm& f, const QuadraticForm& g);

/// f is similar to g: f = lambda g for the unique square class lambda that
/// matches discriminants (odd dimension only).
Comparison compare_similarity(const QuadraticForm& f, const QuadraticForm& g);
bool so3_groups_isomorphic(const QuadraticForm& f, const QuadraticForm& g);

/// SO(f) for a form of dimension 2n + 1, n >= 2 (type B_n).
class GroupB {
public:
    explicit GroupB(QuadraticForm form);
    const QuadraticForm& form() const noexcept { return form_; }
    long rank() const noexcept { return (form_.dim() - 1) / 2; }

private:
    QuadraticForm form_;
};

/// Type C_n datum: the quaternion (or trivial) algebra carrying the
/// hermitian form, its rank, and whether the form is definite at the real place.
class GroupC {
public:
    GroupC(BrauerClass algebra, long rank, bool real_definite);
    const BrauerClass& algebra() const noexcept { return algebra_; }
    long rank() const noexcept { return rank_; }
    bool real_definite() const noexcept { return real_definite_; }

private:
    BrauerClass algebra_;
    long rank_;
    bool real_definite_;
};

struct TwinsReport {
    bool twins;
    std::optional<Place> mismatch;  // first place where the pair is not twins
};

TwinsReport twins_report(const GroupB& b, const GroupC& c);
bool twins(const GroupB& b, const GroupC& c);

struct OrthogonalGroup {
    QuadraticForm form;  // odd dimension >= 3
};
struct QuaternionNormOne {
    BrauerClass algebra;
};

/// (G, K, S): a group datum, a field tag and a finite set of finite places.
struct ArithmeticTriple {
    std::variant<OrthogonalGroup, QuaternionNormOne> group;
    std::string field = "Q";
    std::set<Place> places;

    /// "form=1,1,-3;K=Q;S=3,5" or "quat=2:1/2,3:1/2;K=Q;S=".
    static ArithmeticTriple parse(std::string_view text);
    std::string to_string() const;
};

struct TripleVerdict {
    bool commensurable;
    std::string reason;
    std::vector<std::string> warnings;
};

TripleVerdict compare_triples(const ArithmeticTriple& t1, const ArithmeticTriple& t2);
bool triple_commensurable(const ArithmeticTriple& t1, const ArithmeticTriple& t2);

}  // namespace arithgenus
