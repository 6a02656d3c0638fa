#include "arithgenus/genus.hpp"

#include <algorithm>
#include <numeric>
#include <set>

#include "arithgenus/error.hpp"
#include "arithgenus/kernels.hpp"

namespace arithgenus {

LocalDegreeProfile::LocalDegreeProfile(long degree, std::map<Place, std::vector<long>> local_degrees)
    : degree_(degree), local_degrees_(std::move(local_degrees)) {
    if (degree_ < 1) throw DomainError("field degree must be positive");
    for (const auto& [v, degrees] : local_degrees_) {
        long sum = 0;
        for (long e : degrees) {
            if (e < 1) throw DomainError("local degrees must be positive at place " + v.to_string());
            if (v.is_real() && e > 2) throw DomainError("real local degrees must be 1 or 2");
            sum += e;
        }
        if (sum != degree_) {
            throw DomainError("local degrees at place " + v.to_string() + " sum to " + std::to_string(sum) +
                              ", expected " + std::to_string(degree_));
        }
    }
}

LocalDegreeProfile LocalDegreeProfile::quadratic(const Integer& d, const std::vector<Place>& places) {
    if (!is_squarefree(d) || d == 1) throw DomainError("Q(sqrt(d)) needs squarefree d != 0, 1");
    std::map<Place, std::vector<long>> local;
    for (const auto& v : places) {
        local[v] = is_local_square(Rational(d), v) ? std::vector<long>{1, 1} : std::vector<long>{2};
    }
    return LocalDegreeProfile(2, std::move(local));
}

bool embeds_quadratic(const Integer& d, const BrauerClass& quaternion) {
    if (!is_quaternion_division(quaternion)) {
        throw DomainError("embeds_quadratic needs a quaternion division class, got '" + quaternion.to_string() + "'");
    }
    if (d == 1 || !is_squarefree(d)) throw DomainError("d = " + d.get_str() + " is not squarefree or is 1");
    for (const auto& [v, x] : quaternion.invariants()) {
        if (is_local_square(Rational(d), v)) return false;
    }
    return true;
}

bool splits_with_profile(const LocalDegreeProfile& field, const BrauerClass& c) {
    for (const auto& [v, x] : c.invariants()) {
        auto it = field.local_degrees().find(v);
        if (it == field.local_degrees().end()) {
            throw DomainError("profile has no data for ramified place " + v.to_string());
        }
        for (long e : it->second) {
            if (e % x.order() != 0) return false;
        }
    }
    return true;
}

bool same_maximal_subfields(const BrauerClass& c1, const BrauerClass& c2) {
    return index_profile(c1) == index_profile(c2);
}

namespace {

template <class Scan>
GenusSet enumerate_with(const BrauerClass& c, Scan scan) {
    std::vector<Place> places;
    std::vector<kernels::ScanAxis> axes;
    for (const auto& [v, x] : c.invariants()) {
        kernels::ScanAxis axis{x.order(), {}};
        for (long k = 1; k < axis.order; ++k) {
            if (std::gcd(k, axis.order) == 1) axis.numerators.push_back(k);
        }
        places.push_back(v);
        axes.push_back(std::move(axis));
    }
    GenusSet out{c, {}};
    for (const auto& tuple : scan(axes)) {
        InvariantMap entries;
        for (std::size_t i = 0; i < places.size(); ++i) {
            entries.emplace(places[i], InvariantValue(tuple[i], axes[i].order));
        }
        out.members.push_back(BrauerClass::from_invariants(entries));
    }
    std::sort(out.members.begin(), out.members.end());
    return out;
}

}  // namespace

GenusSet genus_enumerate(const BrauerClass& c) {
    return enumerate_with(c, kernels::zero_sum_tuples_parallel);
}

GenusSet genus_enumerate_serial(const BrauerClass& c) {
    return enumerate_with(c, kernels::zero_sum_tuples_serial);
}

std::vector<BrauerClass> epsilon_family(const std::vector<std::uint64_t>& primes) {
    if (primes.size() < 2) throw DomainError("epsilon_family needs at least two primes");
    if (primes.size() > 24) throw LimitError("epsilon_family supports at most 24 primes");
    std::set<std::uint64_t> seen;
    std::vector<Place> places;
    for (auto p : primes) {
        if (!seen.insert(p).second) throw DomainError("prime " + std::to_string(p) + " repeated");
        places.push_back(Place::prime(p));
    }
    const std::size_t r = primes.size();
    std::vector<BrauerClass> out;
    // Bit i set means eps_i = -1; counting upward with the first prime as the
    // most significant bit walks the tuples lexicographically with +1 < -1.
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << r); ++mask) {
        long sum = 0;
        InvariantMap entries;
        for (std::size_t i = 0; i < r; ++i) {
            const bool minus = (mask >> (r - 1 - i)) & 1U;
            const long eps = minus ? -1 : 1;
            sum += eps;
            entries.emplace(places[i], InvariantValue(eps, 3));
        }
        if (sum % 3 == 0) out.push_back(BrauerClass::from_invariants(entries));
    }
    return out;
}

}  // namespace arithgenus
