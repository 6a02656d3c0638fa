#include "arithgenus/brauer.hpp"

#include <numeric>
#include <sstream>

#include "arithgenus/error.hpp"

namespace arithgenus {

namespace {

Rational mod_one(Rational v) {
    v.canonicalize();
    Integer q;
    mpz_fdiv_q(q.get_mpz_t(), v.get_num_mpz_t(), v.get_den_mpz_t());
    Rational out = v - q;
    out.canonicalize();
    return out;
}

}  // namespace

InvariantValue::InvariantValue(const Rational& value) : value_(mod_one(value)) {}

InvariantValue::InvariantValue(long numerator, long denominator) {
    if (denominator == 0) throw DomainError("invariant with zero denominator");
    value_ = mod_one(Rational(numerator, denominator));
}

long InvariantValue::order() const {
    return value_.get_den().get_si();
}

InvariantValue InvariantValue::operator+(const InvariantValue& rhs) const {
    return InvariantValue(value_ + rhs.value_);
}

InvariantValue InvariantValue::operator-() const {
    return InvariantValue(-value_);
}

BrauerClass BrauerClass::from_invariants(const InvariantMap& entries) {
    InvariantMap kept;
    for (const auto& [v, x] : entries) {
        if (!x.is_zero()) kept.emplace(v, x);
    }
    BrauerClass out(std::move(kept));
    out.check_invariants();
    return out;
}

void BrauerClass::check_invariants() const {
    InvariantValue sum;
    for (const auto& [v, x] : invariants_) {
        if (v.is_real() && x != InvariantValue(1, 2)) {
            throw DomainError("real invariant must be 0 or 1/2, got " + arithgenus::to_string(x.value()));
        }
        sum = sum + x;
    }
    if (!sum.is_zero()) {
        throw DomainError("invariants sum to " + arithgenus::to_string(sum.value()) + " != 0 in Q/Z");
    }
}

BrauerClass BrauerClass::from_quaternion(const Rational& a, const Rational& b) {
    if (sgn(a) == 0 || sgn(b) == 0) throw DomainError("quaternion algebra needs nonzero a, b");
    InvariantMap entries;
    for (const auto& v : hilbert_candidate_places(a, b)) {
        if (hilbert_symbol(a, b, v) == -1) entries.emplace(v, InvariantValue(1, 2));
    }
    return from_invariants(entries);
}

BrauerClass BrauerClass::parse(std::string_view text) {
    InvariantMap entries;
    if (text.empty()) return BrauerClass();
    std::size_t start = 0;
    while (start <= text.size()) {
        auto end = text.find(',', start);
        if (end == std::string_view::npos) end = text.size();
        auto item = text.substr(start, end - start);
        auto colon = item.find(':');
        if (colon == std::string_view::npos) {
            throw DomainError("malformed class entry '" + std::string(item) + "', expected place:r/s");
        }
        Place v = Place::parse(item.substr(0, colon));
        Rational x = parse_rational(item.substr(colon + 1));
        if (entries.contains(v)) throw DomainError("place " + v.to_string() + " listed twice");
        entries.emplace(v, InvariantValue(x));
        start = end + 1;
    }
    return from_invariants(entries);
}

InvariantValue BrauerClass::invariant(const Place& v) const {
    auto it = invariants_.find(v);
    return it == invariants_.end() ? InvariantValue() : it->second;
}

std::string BrauerClass::to_string() const {
    std::ostringstream out;
    bool first = true;
    for (const auto& [v, x] : invariants_) {
        if (!first) out << ',';
        first = false;
        out << v.to_string() << ':' << x.value().get_num() << '/' << x.value().get_den();
    }
    return out.str();
}

std::strong_ordering operator<=>(const BrauerClass& a, const BrauerClass& b) {
    return std::lexicographical_compare_three_way(a.invariants_.begin(), a.invariants_.end(),
                                                  b.invariants_.begin(), b.invariants_.end());
}

BrauerClass class_from_invariants(const InvariantMap& entries) {
    return BrauerClass::from_invariants(entries);
}

BrauerClass class_from_quaternion(const Rational& a, const Rational& b) {
    return BrauerClass::from_quaternion(a, b);
}

BrauerClass class_add(const BrauerClass& c1, const BrauerClass& c2) {
    InvariantMap sum = c1.invariants();
    for (const auto& [v, x] : c2.invariants()) {
        sum[v] = sum[v] + x;
    }
    return BrauerClass::from_invariants(sum);
}

BrauerClass class_neg(const BrauerClass& c) {
    InvariantMap out;
    for (const auto& [v, x] : c.invariants()) out.emplace(v, -x);
    return BrauerClass::from_invariants(out);
}

IndexProfile index_profile(const BrauerClass& c) {
    IndexProfile out;
    for (const auto& [v, x] : c.invariants()) {
        out.local.emplace(v, x.order());
        out.global = std::lcm(out.global, x.order());
    }
    return out;
}

long local_index(const BrauerClass& c, const Place& v) {
    return c.invariant(v).order();
}

long global_index(const BrauerClass& c) {
    return index_profile(c).global;
}

bool is_quaternion_division(const BrauerClass& c) {
    return global_index(c) == 2;
}

}  // namespace arithgenus
