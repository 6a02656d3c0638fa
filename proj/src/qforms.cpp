#include "arithgenus/qforms.hpp"

#include <algorithm>
#include <sstream>

#include "arithgenus/error.hpp"

namespace arithgenus {

namespace {

std::vector<std::string_view> split(std::string_view text, char sep) {
    std::vector<std::string_view> out;
    std::size_t start = 0;
    while (start <= text.size()) {
        auto end = text.find(sep, start);
        if (end == std::string_view::npos) end = text.size();
        auto item = text.substr(start, end - start);
        while (!item.empty() && item.front() == ' ') item.remove_prefix(1);
        while (!item.empty() && item.back() == ' ') item.remove_suffix(1);
        out.push_back(item);
        start = end + 1;
    }
    return out;
}

// Isotropy over Q_v (v finite) of a form with the given dimension,
// discriminant and Hasse invariant at v.
bool isotropic_at_finite(long dim, const Integer& disc, int hasse, const Place& v) {
    switch (dim) {
        case 0:
        case 1:
            return false;
        case 2:
            return is_local_square(Rational(-disc), v);
        case 3:
            return hasse == hilbert_symbol(-1, Rational(-disc), v);
        case 4:
            return !is_local_square(Rational(disc), v) || hasse == hilbert_symbol(-1, -1, v);
        default:
            return true;
    }
}

std::set<Place> merged_places(const std::vector<Place>& a, const std::map<Place, int>& b) {
    std::set<Place> out(a.begin(), a.end());
    for (const auto& [v, s] : b) out.insert(v);
    return out;
}

}  // namespace

QuadraticForm::QuadraticForm(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) {
    if (coeffs_.empty()) throw DomainError("a quadratic form needs at least one coefficient");
    for (auto& a : coeffs_) {
        if (sgn(a) == 0) throw DomainError("quadratic form coefficients must be nonzero");
        a.canonicalize();
    }
}

QuadraticForm QuadraticForm::parse(std::string_view text) {
    std::vector<Rational> coeffs;
    for (auto item : split(text, ',')) coeffs.push_back(parse_rational(item));
    return QuadraticForm(std::move(coeffs));
}

QuadraticForm QuadraticForm::scaled(const Rational& lambda) const {
    std::vector<Rational> out;
    for (const auto& a : coeffs_) out.push_back(a * lambda);
    return QuadraticForm(std::move(out));
}

std::string QuadraticForm::to_string() const {
    std::string out;
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
        if (i) out += ',';
        out += arithgenus::to_string(coeffs_[i]);
    }
    return out;
}

int LocalInvariants::hasse_at(const Place& v) const {
    auto it = hasse.find(v);
    return it == hasse.end() ? 1 : it->second;
}

std::vector<Place> relevant_places(const QuadraticForm& f) {
    std::set<std::uint64_t> primes{2};
    for (const auto& a : f.coeffs()) {
        for (auto p : prime_support(a)) primes.insert(p);
    }
    std::vector<Place> out;
    for (auto p : primes) out.push_back(Place::prime(p));
    out.push_back(Place::real());
    return out;
}

LocalInvariants form_invariants(const QuadraticForm& f) {
    LocalInvariants out;
    out.dim = f.dim();
    Rational product = 1;
    for (const auto& a : f.coeffs()) {
        product *= a;
        if (sgn(a) > 0) {
            ++out.signature.first;
        } else {
            ++out.signature.second;
        }
    }
    out.disc = square_class(product);
    const auto& a = f.coeffs();
    for (const auto& v : relevant_places(f)) {
        int h = 1;
        for (std::size_t i = 0; i < a.size(); ++i) {
            for (std::size_t j = i + 1; j < a.size(); ++j) h *= hilbert_symbol(a[i], a[j], v);
        }
        if (h == -1) out.hasse.emplace(v, -1);
    }
    return out;
}

bool is_isotropic_local(const LocalInvariants& inv, const Place& v) {
    if (v.is_real()) return inv.signature.first > 0 && inv.signature.second > 0;
    return isotropic_at_finite(inv.dim, inv.disc, inv.hasse_at(v), v);
}

bool is_isotropic_local(const QuadraticForm& f, const Place& v) {
    return is_isotropic_local(form_invariants(f), v);
}

LocalInvariants split_hyperbolic_plane(const LocalInvariants& inv) {
    if (inv.dim < 2) throw DomainError("cannot split a hyperbolic plane off a form of dimension < 2");
    LocalInvariants out;
    out.dim = inv.dim - 2;
    out.disc = squarefree_part(Integer(-inv.disc));
    // hasse(H + g) = hasse(g) * (-1, disc g).
    for (const auto& v : merged_places(hilbert_candidate_places(-1, Rational(out.disc)), inv.hasse)) {
        const int h = inv.hasse_at(v) * hilbert_symbol(-1, Rational(out.disc), v);
        if (h == -1) out.hasse.emplace(v, -1);
    }
    out.signature = {inv.signature.first - 1, inv.signature.second - 1};
    return out;
}

long witt_index_local(const QuadraticForm& f, const Place& v) {
    const LocalInvariants inv = form_invariants(f);
    if (v.is_real()) return std::min(inv.signature.first, inv.signature.second);
    long dim = inv.dim;
    Integer disc = inv.disc;
    int hasse = inv.hasse_at(v);
    long index = 0;
    while (isotropic_at_finite(dim, disc, hasse, v)) {
        dim -= 2;
        disc = squarefree_part(Integer(-disc));
        hasse *= hilbert_symbol(-1, Rational(disc), v);
        ++index;
    }
    return index;
}

bool is_isotropic_global(const LocalInvariants& inv) {
    if (inv.dim <= 1) return false;
    if (inv.dim == 2) return inv.disc == -1;
    if (!is_isotropic_local(inv, Place::real())) return false;
    if (inv.dim >= 5) return true;
    // Off 2, the primes of disc and the Hasse support, the form is isotropic.
    std::set<Place> places{Place::prime(2)};
    for (auto p : prime_support(Rational(inv.disc))) places.insert(Place::prime(p));
    for (const auto& [v, s] : inv.hasse) {
        if (v.is_finite()) places.insert(v);
    }
    return std::all_of(places.begin(), places.end(), [&](const Place& v) { return is_isotropic_local(inv, v); });
}

bool is_isotropic_global(const QuadraticForm& f) {
    return is_isotropic_global(form_invariants(f));
}

long witt_index_global(const QuadraticForm& f) {
    LocalInvariants inv = form_invariants(f);
    long index = 0;
    while (is_isotropic_global(inv)) {
        inv = split_hyperbolic_plane(inv);
        ++index;
    }
    return index;
}

Comparison compare_forms(const QuadraticForm& f, const QuadraticForm& g) {
    if (f.dim() != g.dim()) return {false, "dimensions differ"};
    const auto a = form_invariants(f);
    const auto b = form_invariants(g);
    if (a.disc != b.disc) {
        return {false, "discriminants differ (" + a.disc.get_str() + " vs " + b.disc.get_str() + ")"};
    }
    std::set<Place> places;
    for (const auto& [v, s] : a.hasse) places.insert(v);
    for (const auto& [v, s] : b.hasse) places.insert(v);
    for (const auto& v : places) {
        if (v.is_finite() && a.hasse_at(v) != b.hasse_at(v)) return {false, "forms differ at place " + v.to_string()};
    }
    if (a.signature != b.signature) return {false, "forms differ at place inf"};
    return {true, ""};
}

bool forms_equivalent(const QuadraticForm& f, const QuadraticForm& g) {
    return compare_forms(f, g).equal;
}

Comparison compare_similarity(const QuadraticForm& f, const QuadraticForm& g) {
    if (f.dim() != g.dim()) return {false, "dimensions differ"};
    if (f.dim() % 2 == 0) throw DomainError("similarity test needs odd dimension");
    // disc(lambda g) = lambda^dim disc(g) = lambda disc(g) mod squares, so
    // lambda = disc(f) disc(g) is the only candidate.
    const Integer lambda = squarefree_part(Integer(form_invariants(f).disc * form_invariants(g).disc));
    return compare_forms(f, g.scaled(Rational(lambda)));
}

bool so3_groups_isomorphic(const QuadraticForm& f, const QuadraticForm& g) {
    if (f.dim() != 3 || g.dim() != 3) throw DomainError("so3_groups_isomorphic needs ternary forms");
    return compare_similarity(f, g).equal;
}

GroupB::GroupB(QuadraticForm form) : form_(std::move(form)) {
    if (form_.dim() % 2 == 0 || form_.dim() < 5) {
        throw DomainError("type B_n needs a form of odd dimension 2n+1 >= 5, got " + std::to_string(form_.dim()));
    }
}

GroupC::GroupC(BrauerClass algebra, long rank, bool real_definite)
    : algebra_(std::move(algebra)), rank_(rank), real_definite_(real_definite) {
    if (global_index(algebra_) > 2) throw DomainError("type C_n needs a quaternion or split algebra");
    if (rank_ < 2) throw DomainError("type C_n needs rank n >= 2");
    if (real_definite_ && !algebra_.ramified_at(Place::real())) {
        throw DomainError("a definite hermitian form needs an algebra ramified at the real place");
    }
}

TwinsReport twins_report(const GroupB& b, const GroupC& c) {
    const long n = b.rank();
    if (c.rank() != n) {
        throw DomainError("rank mismatch: B_" + std::to_string(n) + " vs C_" + std::to_string(c.rank()));
    }
    std::set<Place> places;
    for (const auto& v : relevant_places(b.form())) places.insert(v);
    for (const auto& [v, x] : c.algebra().invariants()) places.insert(v);

    for (const auto& v : places) {
        const long witt = witt_index_local(b.form(), v);
        const bool ramified = c.algebra().ramified_at(v);
        bool ok;
        if (v.is_finite()) {
            // Neither type can be anisotropic over a p-adic field: both must split.
            ok = witt == n && !ramified;
        } else {
            const bool both_split = witt == n && !ramified && !c.real_definite();
            const bool both_anisotropic = witt == 0 && ramified && c.real_definite();
            ok = both_split || both_anisotropic;
        }
        if (!ok) return {false, v};
    }
    return {true, std::nullopt};
}

bool twins(const GroupB& b, const GroupC& c) {
    return twins_report(b, c).twins;
}

ArithmeticTriple ArithmeticTriple::parse(std::string_view text) {
    ArithmeticTriple out{QuaternionNormOne{}, "Q", {}};
    bool have_group = false;
    for (auto field : split(text, ';')) {
        const auto eq = field.find('=');
        if (eq == std::string_view::npos) throw DomainError("malformed triple field '" + std::string(field) + "'");
        const auto key = field.substr(0, eq);
        const auto value = field.substr(eq + 1);
        if (key == "form" || key == "quat") {
            if (have_group) throw DomainError("triple lists more than one group");
            have_group = true;
            if (key == "form") {
                QuadraticForm f = QuadraticForm::parse(value);
                if (f.dim() % 2 == 0 || f.dim() < 3) throw DomainError("triple forms must have odd dimension >= 3");
                out.group = OrthogonalGroup{std::move(f)};
            } else {
                out.group = QuaternionNormOne{BrauerClass::parse(value)};
            }
        } else if (key == "K") {
            if (value.empty()) throw DomainError("empty field tag");
            out.field = std::string(value);
        } else if (key == "S") {
            if (value.empty()) continue;
            for (auto item : split(value, ',')) {
                Place v = Place::parse(item);
                if (v.is_real()) throw DomainError("S lists finite places only");
                out.places.insert(v);
            }
        } else {
            throw DomainError("unknown triple key '" + std::string(key) + "'");
        }
    }
    if (!have_group) throw DomainError("triple needs form=... or quat=...");
    return out;
}

std::string ArithmeticTriple::to_string() const {
    std::ostringstream out;
    if (const auto* o = std::get_if<OrthogonalGroup>(&group)) {
        out << "form=" << o->form.to_string();
    } else {
        out << "quat=" << std::get<QuaternionNormOne>(group).algebra.to_string();
    }
    out << ";K=" << field << ";S=";
    bool first = true;
    for (const auto& v : places) {
        if (!first) out << ',';
        first = false;
        out << v.to_string();
    }
    return out.str();
}

namespace {

std::vector<std::string> anisotropic_place_warnings(const ArithmeticTriple& t) {
    std::vector<std::string> out;
    for (const auto& v : t.places) {
        bool anisotropic;
        if (const auto* o = std::get_if<OrthogonalGroup>(&t.group)) {
            anisotropic = witt_index_local(o->form, v) == 0;
        } else {
            anisotropic = std::get<QuaternionNormOne>(t.group).algebra.ramified_at(v);
        }
        if (anisotropic) out.push_back("S contains place " + v.to_string() + " where the group is anisotropic");
    }
    return out;
}

}  // namespace

TripleVerdict compare_triples(const ArithmeticTriple& t1, const ArithmeticTriple& t2) {
    TripleVerdict out{false, "", anisotropic_place_warnings(t1)};
    for (auto& w : anisotropic_place_warnings(t2)) out.warnings.push_back(std::move(w));

    if (t1.field != t2.field) {
        out.reason = "fields differ (" + t1.field + " vs " + t2.field + ")";
        return out;
    }
    if (t1.field != "Q") throw DomainError("group arithmetic is only supported over Q, got field " + t1.field);
    if (t1.places != t2.places) {
        out.reason = "S sets differ";
        return out;
    }
    if (t1.group.index() != t2.group.index()) {
        out.reason = "group kinds differ";
        return out;
    }
    if (const auto* o1 = std::get_if<OrthogonalGroup>(&t1.group)) {
        const auto& o2 = std::get<OrthogonalGroup>(t2.group);
        const Comparison c = compare_similarity(o1->form, o2.form);
        out.commensurable = c.equal;
        out.reason = c.equal ? "groups are Q-isomorphic" : c.reason;
        return out;
    }
    const auto& a1 = std::get<QuaternionNormOne>(t1.group).algebra;
    const auto& a2 = std::get<QuaternionNormOne>(t2.group).algebra;
    out.commensurable = a1 == a2;
    if (out.commensurable) {
        out.reason = "groups are Q-isomorphic";
    } else {
        std::set<Place> places;
        for (const auto& [v, x] : a1.invariants()) places.insert(v);
        for (const auto& [v, x] : a2.invariants()) places.insert(v);
        for (const auto& v : places) {
            if (a1.invariant(v) != a2.invariant(v)) {
                out.reason = "algebras differ at place " + v.to_string();
                break;
            }
        }
    }
    return out;
}

bool triple_commensurable(const ArithmeticTriple& t1, const ArithmeticTriple& t2) {
    return compare_triples(t1, t2).commensurable;
}

}  // namespace arithgenus
