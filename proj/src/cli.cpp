#include "arithgenus/cli.hpp"

#include <algorithm>
#include <charconv>
#include <cstdlib>
#include <fstream>
#include <istream>
#include <map>
#include <ostream>

#include <CLI11.hpp>

#include "arithgenus/brauer.hpp"
#include "arithgenus/error.hpp"
#include "arithgenus/genus.hpp"
#include "arithgenus/length_spectrum.hpp"
#include "arithgenus/qforms.hpp"
#include "arithgenus/quad_field.hpp"
#include "arithgenus/weak_comm.hpp"

namespace arithgenus::cli {

namespace {

enum class Kind { Text, Int, Real, Switch, Repeated };

struct FlagSpec {
    std::string name;
    Kind kind;
    bool required;
};

struct VerbSpec {
    std::string name;
    std::string help;
    std::vector<std::string> positionals;
    std::vector<FlagSpec> flags;
};

const std::vector<VerbSpec>& verbs() {
    static const std::vector<VerbSpec> table{
        {"hilbert", "Hilbert symbol (a,b)_v", {"a", "b", "place"}, {}},
        {"brauer",
         "Brauer class, index and local indices",
         {},
         {{"algebra", Kind::Text, false}, {"quaternion", Kind::Text, false}, {"add", Kind::Text, false},
          {"neg", Kind::Switch, false}}},
        {"genus", "Classes with the same maximal subfields", {}, {{"algebra", Kind::Text, true}}},
        {"family", "Degree-3 family with invariants +-1/3", {}, {{"primes", Kind::Text, true}}},
        {"unit", "Fundamental unit of Q(sqrt(d))", {}, {{"d", Kind::Int, true}}},
        {"eta", "Sine-product unit eta(d)", {}, {{"d", Kind::Int, true}}},
        {"classnum", "Class numbers of Q(sqrt(d))", {}, {{"d", Kind::Int, true}}},
        {"spectrum",
         "Generators log eta(d) of the rational length spectrum",
         {},
         {{"algebra", Kind::Text, true}, {"bound", Kind::Int, true}}},
        {"lencomm",
         "Length commensurability of two quaternionic surfaces",
         {},
         {{"algebra1", Kind::Text, true}, {"algebra2", Kind::Text, true}, {"bound", Kind::Int, false}}},
        {"weakcomm", "Weak commensurability of eigenvalue sets", {}, {{"set1", Kind::Text, true}, {"set2", Kind::Text, true}}},
        {"form",
         "Invariants, isotropy and Witt index of a diagonal form",
         {},
         {{"form", Kind::Text, true}, {"place", Kind::Text, false}, {"compare", Kind::Text, false}}},
        {"twins",
         "Twins test for SO(f) and a type C datum",
         {},
         {{"form", Kind::Text, true}, {"algebra", Kind::Text, true}, {"rank", Kind::Int, false},
          {"definite", Kind::Switch, false}}},
        {"triple", "Commensurability of two arithmetic triples", {}, {{"triple", Kind::Repeated, true}}},
        {"weyl",
         "Weyl main term",
         {},
         {{"dim", Kind::Int, true}, {"volume", Kind::Real, true}, {"lambda", Kind::Real, true}}},
    };
    return table;
}

long parse_long(const std::string& flag, const std::string& text) {
    long value = 0;
    auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
    if (ec != std::errc() || ptr != text.data() + text.size() || text.empty()) {
        throw UsageError("--" + flag + ": expected an integer, got '" + text + "'");
    }
    return value;
}

double parse_double(const std::string& flag, const std::string& text) {
    char* end = nullptr;
    const double value = std::strtod(text.c_str(), &end);
    if (text.empty() || end != text.c_str() + text.size()) {
        throw UsageError("--" + flag + ": expected a number, got '" + text + "'");
    }
    return value;
}

long default_prec_bits() {
    const char* env = std::getenv("ARITHGENUS_PREC_BITS");
    if (env == nullptr || *env == '\0') return kDefaultPrecBits;
    const long bits = parse_long("ARITHGENUS_PREC_BITS", env);
    if (bits < kMinPrecBits || bits > kMaxPrecBits) {
        throw UsageError("ARITHGENUS_PREC_BITS must lie in [" + std::to_string(kMinPrecBits) + ", " +
                         std::to_string(kMaxPrecBits) + "]");
    }
    return bits;
}

std::vector<std::uint64_t> parse_primes(const std::string& text) {
    std::vector<std::uint64_t> out;
    std::size_t start = 0;
    while (start <= text.size()) {
        auto end = text.find(',', start);
        if (end == std::string::npos) end = text.size();
        std::string item = text.substr(start, end - start);
        while (!item.empty() && item.front() == ' ') item.erase(item.begin());
        while (!item.empty() && item.back() == ' ') item.pop_back();
        const Place v = Place::parse(item);
        if (v.is_real()) throw DomainError("family primes must be finite");
        out.push_back(v.p());
        start = end + 1;
    }
    return out;
}

std::pair<Rational, Rational> parse_pair(const std::string& text) {
    const auto comma = text.find(',');
    if (comma == std::string::npos) throw DomainError("expected 'a,b', got '" + text + "'");
    auto trim = [](std::string s) {
        while (!s.empty() && s.front() == ' ') s.erase(s.begin());
        while (!s.empty() && s.back() == ' ') s.pop_back();
        return s;
    };
    return {parse_rational(trim(text.substr(0, comma))), parse_rational(trim(text.substr(comma + 1)))};
}

BrauerClass brauer_operand(const Json& args) {
    if (args.contains("algebra")) return BrauerClass::parse(args["algebra"].get<std::string>());
    const auto [a, b] = parse_pair(args["quaternion"].get<std::string>());
    return class_from_quaternion(a, b);
}

// Checks the syntax of every argument by building the value it names.
void validate(const std::string& verb, const Json& args) {
    auto text = [&](const char* key) { return args[key].get<std::string>(); };
    auto has = [&](const char* key) { return args.contains(key); };
    if (verb == "hilbert") {
        const auto& pos = args["positional"];
        if (sgn(parse_rational(pos[0].get<std::string>())) == 0 || sgn(parse_rational(pos[1].get<std::string>())) == 0) {
            throw DomainError("hilbert arguments must be nonzero");
        }
        Place::parse(pos[2].get<std::string>());
    } else if (verb == "brauer") {
        if (has("algebra") == has("quaternion")) throw UsageError("brauer needs exactly one of --algebra, --quaternion");
        brauer_operand(args);
        if (has("add")) BrauerClass::parse(text("add"));
    } else if (verb == "genus" || verb == "spectrum") {
        BrauerClass::parse(text("algebra"));
        if (verb == "spectrum" && (args["bound"] < 2 || args["bound"] > kDefaultMaxD)) {
            throw UsageError("--bound must lie in [2, " + std::to_string(kDefaultMaxD) + "]");
        }
    } else if (verb == "family") {
        parse_primes(text("primes"));
    } else if (verb == "unit" || verb == "eta" || verb == "classnum") {
        QuadField(args["d"].get<long>());
    } else if (verb == "lencomm") {
        BrauerClass::parse(text("algebra1"));
        BrauerClass::parse(text("algebra2"));
        if (has("bound") && (args["bound"] < 2 || args["bound"] > kDefaultMaxD)) {
            throw UsageError("--bound must lie in [2, " + std::to_string(kDefaultMaxD) + "]");
        }
    } else if (verb == "weakcomm") {
        EigenvalueSet::parse(text("set1"));
        EigenvalueSet::parse(text("set2"));
    } else if (verb == "form") {
        QuadraticForm::parse(text("form"));
        if (has("place")) Place::parse(text("place"));
        if (has("compare")) QuadraticForm::parse(text("compare"));
    } else if (verb == "twins") {
        QuadraticForm::parse(text("form"));
        BrauerClass::parse(text("algebra"));
    } else if (verb == "triple") {
        if (args["triple"].size() != 2) throw UsageError("triple needs exactly two --triple values");
        for (const auto& t : args["triple"]) ArithmeticTriple::parse(t.get<std::string>());
    } else if (verb == "weyl") {
        if (args["dim"] < 1 || args["dim"] > 1000) throw UsageError("--dim must lie in [1, 1000]");
    }
}

Json class_json(const BrauerClass& c) {
    Json local = Json::object();
    const auto profile = index_profile(c);
    for (const auto& [v, r] : profile.local) local[v.to_string()] = r;
    return Json{{"class", c.to_string()}, {"index", profile.global}, {"local_index", local}};
}

Json class_list(const std::vector<BrauerClass>& classes) {
    Json out = Json::array();
    for (const auto& c : classes) out.push_back(c.to_string());
    return out;
}

Json invariants_json(const QuadraticForm& f) {
    const auto inv = form_invariants(f);
    Json hasse = Json::object();
    for (const auto& [v, h] : inv.hasse) hasse[v.to_string()] = h;
    return Json{{"form", f.to_string()},
                {"dim", inv.dim},
                {"disc", inv.disc.get_str()},
                {"hasse", hasse},
                {"signature", {inv.signature.first, inv.signature.second}}};
}

Json dispatch(const Command& c, Report& report) {
    const Json& a = c.args;
    auto text = [&](const char* key) { return a[key].get<std::string>(); };
    const std::string& verb = c.verb;

    if (verb == "hilbert") {
        const auto& pos = a["positional"];
        return hilbert_symbol(parse_rational(pos[0].get<std::string>()), parse_rational(pos[1].get<std::string>()),
                              Place::parse(pos[2].get<std::string>()));
    }
    if (verb == "brauer") {
        BrauerClass x = brauer_operand(a);
        if (a.contains("add")) x = class_add(x, BrauerClass::parse(text("add")));
        if (a.contains("neg")) x = class_neg(x);
        return class_json(x);
    }
    if (verb == "genus") {
        const auto g = genus_enumerate(BrauerClass::parse(text("algebra")));
        return Json{{"base", g.base.to_string()}, {"size", g.members.size()}, {"members", class_list(g.members)}};
    }
    if (verb == "family") {
        const auto primes = parse_primes(text("primes"));
        const auto members = epsilon_family(primes);
        return Json{{"primes", primes}, {"size", members.size()}, {"members", class_list(members)}};
    }
    if (verb == "unit") {
        const QuadField k(a["d"].get<long>());
        const auto e = fundamental_unit(k);
        return Json{{"d", k.d()},
                    {"x", to_string(e.x())},
                    {"y", to_string(e.y())},
                    {"norm", e.norm()},
                    {"unit", e.to_string()}};
    }
    if (verb == "eta") {
        const QuadField k(a["d"].get<long>());
        report.prec_bits = c.prec_bits;
        return Json{{"d", k.d()},
                    {"discriminant", k.discriminant()},
                    {"eta", eta_analytic(k, c.prec_bits).to_decimal(c.digits)}};
    }
    if (verb == "classnum") {
        const QuadField k(a["d"].get<long>());
        const auto data = class_number(k);
        return Json{{"d", k.d()},
                    {"discriminant", k.discriminant()},
                    {"narrow_class_number", data.narrow_class_number},
                    {"class_number", data.class_number}};
    }
    if (verb == "spectrum") {
        report.prec_bits = c.prec_bits;
        Json out = Json::array();
        for (const auto& g : spectrum_generators(BrauerClass::parse(text("algebra")), a["bound"].get<long>(), c.prec_bits)) {
            out.push_back(Json{{"d", g.d}, {"log_eta", g.log_eta.to_decimal(c.digits)}});
        }
        return out;
    }
    if (verb == "lencomm") {
        std::optional<long> bound;
        if (a.contains("bound")) bound = a["bound"].get<long>();
        const auto r = compare_length_spectra(BrauerClass::parse(text("algebra1")), BrauerClass::parse(text("algebra2")), bound);
        Json out{{"commensurable", r.commensurable}, {"bound", r.bound}};
        if (r.witness) out["witness"] = *r.witness;
        return out;
    }
    if (verb == "weakcomm") {
        const auto s1 = EigenvalueSet::parse(text("set1"));
        const auto s2 = EigenvalueSet::parse(text("set2"));
        const bool wc = weakly_commensurable(s1, s2);
        Json out{{"weakly_commensurable", wc}};
        const auto r = intersect_groups(s1, s2);
        if (wc && r.witness) out["witness"] = to_string(*r.witness);
        return out;
    }
    if (verb == "form") {
        const auto f = QuadraticForm::parse(text("form"));
        Json out = invariants_json(f);
        out["isotropic"] = is_isotropic_global(f);
        out["witt_index"] = witt_index_global(f);
        if (a.contains("place")) {
            const Place v = Place::parse(text("place"));
            out["place"] = v.to_string();
            out["isotropic_local"] = is_isotropic_local(f, v);
            out["witt_index_local"] = witt_index_local(f, v);
        }
        if (a.contains("compare")) {
            const auto cmp = compare_forms(f, QuadraticForm::parse(text("compare")));
            out["equivalent"] = cmp.equal;
            if (!cmp.equal) out["reason"] = cmp.reason;
        }
        return out;
    }
    if (verb == "twins") {
        const GroupB b{QuadraticForm::parse(text("form"))};
        const long rank = a.contains("rank") ? a["rank"].get<long>() : b.rank();
        const GroupC g(BrauerClass::parse(text("algebra")), rank, a.contains("definite"));
        const auto r = twins_report(b, g);
        Json out{{"twins", r.twins}};
        if (r.mismatch) out["mismatch"] = r.mismatch->to_string();
        return out;
    }
    if (verb == "triple") {
        const auto v = compare_triples(ArithmeticTriple::parse(a["triple"][0].get<std::string>()),
                                       ArithmeticTriple::parse(a["triple"][1].get<std::string>()));
        Json out{{"commensurable", v.commensurable}, {"reason", v.reason}};
        if (!v.warnings.empty()) out["warnings"] = v.warnings;
        return out;
    }
    if (verb == "weyl") {
        return Json{{"main_term",
                     weyl_main_term({static_cast<int>(a["dim"].get<long>()), a["volume"].get<double>(), a["lambda"].get<double>()})}};
    }
    throw UsageError("unknown verb '" + verb + "'");
}

Report failure(int code, const std::string& message) {
    Report r;
    r.ok = false;
    r.error = message;
    r.exit_code = code;
    return r;
}

}  // namespace

std::string Report::to_line() const {
    Json out;
    out["ok"] = ok;
    if (ok) {
        out["result"] = result;
        if (prec_bits > 0) out["precision_bits"] = prec_bits;
    } else {
        out["error"] = error;
    }
    return out.dump();
}

Command parse(const std::vector<std::string>& argv) {
    CLI::App app{"Exact arithmetic of division algebras, quadratic forms and arithmetic groups over Q", "arithgenus"};
    app.require_subcommand(1, 1);
    app.fallthrough();

    Command command;
    command.prec_bits = default_prec_bits();
    app.add_option("--prec", command.prec_bits, "Working precision in bits")
        ->check(CLI::Range(kMinPrecBits, kMaxPrecBits));
    app.add_option("--digits", command.digits, "Significant digits of decimal output")->check(CLI::Range(1, 1000));

    std::map<std::string, std::map<std::string, std::string>> text_values;
    std::map<std::string, std::map<std::string, std::vector<std::string>>> list_values;
    std::map<std::string, std::map<std::string, bool>> switch_values;
    std::map<std::string, std::vector<std::string>> positional_values;

    for (const auto& spec : verbs()) {
        CLI::App* sub = app.add_subcommand(spec.name, spec.help);
        if (!spec.positionals.empty()) {
            std::string names;
            for (const auto& p : spec.positionals) names += (names.empty() ? "" : " ") + p;
            sub->add_option("args", positional_values[spec.name], names)
                ->expected(static_cast<int>(spec.positionals.size()))
                ->required();
        }
        for (const auto& flag : spec.flags) {
            CLI::Option* opt = nullptr;
            if (flag.kind == Kind::Switch) {
                opt = sub->add_flag("--" + flag.name, switch_values[spec.name][flag.name]);
            } else if (flag.kind == Kind::Repeated) {
                opt = sub->add_option("--" + flag.name, list_values[spec.name][flag.name]);
            } else {
                opt = sub->add_option("--" + flag.name, text_values[spec.name][flag.name]);
            }
            if (flag.required) opt->required();
        }
    }

    if (!argv.empty() && !argv.front().starts_with("-") &&
        std::none_of(verbs().begin(), verbs().end(), [&](const VerbSpec& s) { return s.name == argv.front(); })) {
        throw UsageError("unknown verb '" + argv.front() + "'");
    }

    std::vector<std::string> reversed(argv.rbegin(), argv.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        throw HelpRequested(app.help());
    } catch (const CLI::ParseError& e) {
        throw UsageError(e.what());
    }

    const CLI::App* chosen = app.get_subcommands().front();
    command.verb = chosen->get_name();
    const VerbSpec& spec = *std::find_if(verbs().begin(), verbs().end(),
                                         [&](const VerbSpec& s) { return s.name == command.verb; });

    Json args = Json::object();
    if (!spec.positionals.empty()) args["positional"] = positional_values[spec.name];
    for (const auto& flag : spec.flags) {
        if (chosen->count("--" + flag.name) == 0) continue;
        switch (flag.kind) {
            case Kind::Switch: args[flag.name] = true; break;
            case Kind::Repeated: args[flag.name] = list_values[spec.name][flag.name]; break;
            case Kind::Int: args[flag.name] = parse_long(flag.name, text_values[spec.name][flag.name]); break;
            case Kind::Real: args[flag.name] = parse_double(flag.name, text_values[spec.name][flag.name]); break;
            case Kind::Text: args[flag.name] = text_values[spec.name][flag.name]; break;
        }
    }
    try {
        validate(command.verb, args);
    } catch (const DomainError& e) {
        throw UsageError(e.what());
    }
    command.args = std::move(args);
    return command;
}

Report execute(const Command& command) {
    Report report;
    try {
        report.result = dispatch(command, report);
        report.ok = true;
    } catch (const UsageError& e) {
        return failure(2, e.what());
    } catch (const DomainError& e) {
        return failure(1, e.what());
    } catch (const LimitError& e) {
        return failure(1, e.what());
    }
    return report;
}

std::vector<std::string> batch_line_to_argv(const std::string& line) {
    Json object;
    try {
        object = Json::parse(line);
    } catch (const Json::parse_error& e) {
        throw UsageError(std::string("malformed JSON: ") + e.what());
    }
    if (!object.is_object() || !object.contains("verb") || !object["verb"].is_string()) {
        throw UsageError("batch line must be an object with a string \"verb\"");
    }
    auto scalar = [](const Json& v) { return v.is_string() ? v.get<std::string>() : v.dump(); };
    std::vector<std::string> argv{object["verb"].get<std::string>()};
    for (const auto& [key, value] : object.items()) {
        if (key == "verb") continue;
        if (key == "args") {
            if (!value.is_array()) throw UsageError("\"args\" must be an array");
            for (const auto& item : value) argv.push_back(scalar(item));
            continue;
        }
        if (value.is_boolean()) {
            if (value.get<bool>()) argv.push_back("--" + key);
        } else if (value.is_array()) {
            for (const auto& item : value) {
                argv.push_back("--" + key);
                argv.push_back(scalar(item));
            }
        } else if (value.is_object() || value.is_null()) {
            throw UsageError("value of \"" + key + "\" must be a scalar or an array");
        } else {
            argv.push_back("--" + key);
            argv.push_back(scalar(value));
        }
    }
    return argv;
}

namespace {

Report run_one(const std::vector<std::string>& argv) {
    try {
        return execute(parse(argv));
    } catch (const UsageError& e) {
        return failure(2, e.what());
    }
}

int run_batch(std::istream& in, std::ostream& out) {
    int status = 0;
    std::string line;
    while (std::getline(in, line)) {
        if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
        Report r;
        try {
            r = run_one(batch_line_to_argv(line));
        } catch (const UsageError& e) {
            r = failure(2, e.what());
        } catch (const HelpRequested&) {
            r = failure(2, "--help is not available in batch mode");
        }
        if (!r.ok) status = 1;
        out << r.to_line() << '\n';
    }
    return status;
}

}  // namespace

int run(const std::vector<std::string>& argv, std::istream& in, std::ostream& out, std::ostream& err) {
    if (!argv.empty() && argv.front() == "--batch") {
        if (argv.size() > 2) {
            err << "usage: arithgenus --batch [FILE]\n";
            return 2;
        }
        if (argv.size() == 1 || argv[1] == "-") return run_batch(in, out);
        std::ifstream file(argv[1]);
        if (!file) {
            out << failure(2, "cannot open batch file '" + argv[1] + "'").to_line() << '\n';
            return 2;
        }
        return run_batch(file, out);
    }
    try {
        const Report r = execute(parse(argv));
        out << r.to_line() << '\n';
        return r.exit_code;
    } catch (const HelpRequested& help) {
        out << help.what();
        return 0;
    } catch (const UsageError& e) {
        out << failure(2, e.what()).to_line() << '\n';
        return 2;
    }
}

}  // namespace arithgenus::cli
