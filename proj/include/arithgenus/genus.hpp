#pragma once

// Maximal subfields, splitting behaviour and the genus of a division
// algebra over Q, enumerated exactly from local invariants.

#include <map>
#include <vector>

#include "arithgenus/brauer.hpp"

namespace arithgenus {

/// Local degrees [F_w : Q_v] of a degree-n field F at the places that matter.
/// At each listed place the degrees sum to n.
class LocalDegreeProfile {
public:
    LocalDegreeProfile(long degree, std::map<Place, std::vector<long>> local_degrees);

    /// The profile of Q(sqrt(d)) at the given places: [2] where d is not a
    /// local square, [1, 1] where it is.
    static LocalDegreeProfile quadratic(const Integer& d, const std::vector<Place>& places);

    long degree() const noexcept { return degree_; }
    const std::map<Place, std::vector<long>>& local_degrees() const noexcept { return local_degrees_; }

private:
    long degree_;
    std::map<Place, std::vector<long>> local_degrees_;
};

struct GenusSet {
    BrauerClass base;
    std::vector<BrauerClass> members;  // sorted, duplicate-free, contains base
};

/// Q(sqrt(d)) embeds in the quaternion division algebra D iff d is not a
/// local square at any ramified place of D.
bool embeds_quadratic(const Integer& d, const BrauerClass& quaternion);

bool splits_with_profile(const LocalDegreeProfile& field, const BrauerClass& c);

/// Equal local index at every place; over Q this is the same collection of
/// finite-dimensional splitting fields, hence the same maximal subfields.
bool same_maximal_subfields(const BrauerClass& c1, const BrauerClass& c2);

/// Every class with the same local index as c at every place.
GenusSet genus_enumerate(const BrauerClass& c);
/// Reference implementation over the serial scan kernel.
GenusSet genus_enumerate_serial(const BrauerClass& c);

/// Cubic classes with invariant eps_i/3 at p_i, eps_i = +-1 and sum eps_i = 0
/// mod 3. Ordered lexicographically by eps-tuple with +1 before -1; for
/// ascending primes this is ascending BrauerClass order.
std::vector<BrauerClass> epsilon_family(const std::vector<std::uint64_t>& primes);

}  // namespace arithgenus
