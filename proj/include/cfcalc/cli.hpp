#pragma once

#include <iostream>
#include <ostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "cfcalc/io.hpp"
#include "cfcalc/random.hpp"

namespace cfcalc::cli {

using io::json;

enum Exit : int { Ok = 0, VerdictFalse = 1, InputError = 2, ConsistencyFailure = 3 };

struct Options {
    std::string complex, function, strat, map;
    std::vector<std::string> sets;
    std::string format = "table";
    std::string out;
    bool verbose = false;
    std::string fixture_name;
    std::string kind = "complex";
};

namespace detail {

inline std::string scalar_text(const json& j) {
    if (j.is_string()) return j.get<std::string>();
    if (j.is_array()) {
        bool all_strings = !j.empty();
        for (const auto& e : j) all_strings = all_strings && e.is_string();
        std::string s = all_strings ? "[" : "";
        for (std::size_t i = 0; i < j.size(); ++i) {
            if (i) s += all_strings ? "," : " ";
            s += scalar_text(j[i]);
        }
        return all_strings ? s + "]" : s;
    }
    return j.dump();
}

/// Arrays whose elements are scalars or simplices print on one line.
inline bool is_flat(const json& j) {
    if (!j.is_structured()) return true;
    if (j.is_object()) return false;
    for (const auto& e : j)
        if (e.is_object() || (e.is_array() && !std::all_of(e.begin(), e.end(), [](const json& x) {
                                  return x.is_primitive() || (x.is_array() && std::all_of(x.begin(), x.end(),
                                                                                       [](const json& y) { return y.is_string(); }));
                              })))
            return false;
    return true;
}

inline void render_table(const json& j, std::ostream& os, int indent = 0) {
    const std::string pad(static_cast<std::size_t>(indent), ' ');
    if (j.is_object()) {
        for (const auto& [key, val] : j.items()) {
            if (val.is_primitive() || (val.is_array() && val.empty())) {
                os << pad << key << ": " << (val.is_array() ? "(none)" : scalar_text(val)) << "\n";
            } else if (val.is_array() && std::all_of(val.begin(), val.end(), [](const json& e) { return e.is_primitive(); })) {
                os << pad << key << ": " << scalar_text(val) << "\n";
            } else {
                os << pad << key << ":\n";
                render_table(val, os, indent + 2);
            }
        }
    } else if (j.is_array()) {
        for (const auto& e : j) {
            if (is_flat(e)) {
                os << pad << scalar_text(e) << "\n";
            } else {
                os << pad << "-\n";
                render_table(e, os, indent + 2);
            }
        }
    } else {
        os << pad << scalar_text(j) << "\n";
    }
}

class Runner {
public:
    Runner(const Options& o, std::ostream& err) : o_(o), err_(err) {}

    void log(const std::string& msg) const {
        if (o_.verbose) err_ << "cfcalc: " << msg << "\n";
    }

    static Error usage(const std::string& why) { return Error(ErrorCode::UsageError, why); }

    std::optional<fixtures::Fixture> fixture_ref(const std::string& ref) const {
        if (ref.rfind("fixture:", 0) == 0) return fixtures::make(ref.substr(8));
        return std::nullopt;
    }

    SimplicialComplex complex() const {
        if (!o_.complex.empty()) {
            auto k = io::load_complex(o_.complex);
            log("complex with " + std::to_string(k.size()) + " simplices");
            return k;
        }
        if (!o_.strat.empty()) return strat(nullptr).ambient();
        if (!o_.function.empty() && o_.function != "ones") return function(nullptr).ambient();
        throw usage("--complex is required");
    }

    /// --function: "ones", "fixture:NAME", or a FunctionDocument path. Missing means ones.
    ConstructibleFunction function(const SimplicialComplex* on) const {
        if (o_.function.empty() || o_.function == "ones") {
            if (!on) throw usage("--function ones needs --complex");
            return ConstructibleFunction::constant(*on, 1);
        }
        ConstructibleFunction phi = [&] {
            if (auto fx = fixture_ref(o_.function)) {
                if (!fx->function) throw usage("fixture " + fx->name + " carries no function");
                return *fx->function;
            }
            const std::filesystem::path p(o_.function);
            return io::function_from_json(io::read_json(p), p.parent_path());
        }();
        if (on && !(phi.ambient() == *on))
            throw Error(ErrorCode::AmbientMismatch, "the function lives on a different complex");
        return phi;
    }

    Stratification strat(const SimplicialComplex* on) const {
        std::optional<Stratification> s;
        const std::string ref = !o_.strat.empty() ? o_.strat : o_.complex;
        if (auto fx = fixture_ref(ref)) {
            if (!fx->strat) throw usage("fixture " + fx->name + " carries no stratification");
            s = *fx->strat;
        } else if (!o_.strat.empty()) {
            const std::filesystem::path p(o_.strat);
            s = io::strat_from_json(io::read_json(p), p.parent_path());
        } else {
            throw usage("--strat is required");
        }
        if (on && !(s->ambient() == *on))
            throw Error(ErrorCode::AmbientMismatch, "the stratification is of a different complex");
        return *s;
    }

    std::optional<Stratification> optional_strat(const SimplicialComplex& on) const {
        if (o_.strat.empty()) return std::nullopt;
        return strat(&on);
    }

    SimplicialMap map() const {
        if (o_.map.empty()) throw usage("--map is required");
        if (auto fx = fixture_ref(o_.map)) {
            if (!fx->map) throw usage("fixture " + fx->name + " is not a map");
            return *fx->map;
        }
        const std::filesystem::path p(o_.map);
        return io::map_from_json(io::read_json(p), p.parent_path());
    }

    /// --set: all, empty, skeleton-K, vertex:NAME, or an inline JSON array of simplices.
    static SimplexSet parse_set(const SimplicialComplex& k, const std::string& spec) {
        if (spec == "all") return SimplexSet::all(k);
        if (spec == "empty") return SimplexSet(k);
        if (spec.rfind("skeleton-", 0) == 0) {
            int d = 0;
            const auto tail = spec.substr(9);
            auto [ptr, ec] = std::from_chars(tail.data(), tail.data() + tail.size(), d);
            if (ec != std::errc() || ptr != tail.data() + tail.size()) throw usage("bad set name '" + spec + "'");
            return SimplexSet::skeleton(k, d);
        }
        if (spec.rfind("vertex:", 0) == 0) return SimplexSet::of_simplices(k, {Simplex({spec.substr(7)})});
        if (!spec.empty() && spec.front() == '[') return io::set_from_json(k, io::parse_text(spec));
        throw usage("bad set '" + spec + "'");
    }

    std::vector<SimplexSet> sets(const SimplicialComplex& k) const {
        std::vector<SimplexSet> out;
        for (const auto& s : o_.sets) out.push_back(parse_set(k, s));
        return out;
    }

private:
    const Options& o_;
    std::ostream& err_;
};

struct Result {
    json body;
    int code = Ok;
    std::optional<std::string> table = std::nullopt;  // plain text override for --format table
};

inline json witness_json(const SimplicialComplex& k, std::optional<std::pair<SimplexId, std::int64_t>> w) {
    if (!w) return json(nullptr);
    return json{{"simplex", io::to_json(k.simplex(w->first))}, {"value", w->second}};
}

inline Result selftest() {
    std::mt19937_64 rng(20261016);
    int checks = 0;
    json failures = json::array();
    auto expect = [&](bool ok, const std::string& what) {
        ++checks;
        if (!ok) failures.push_back(what);
    };
    for (int i = 0; i < 60; ++i) {
        const auto k = random::complex(rng);
        const auto phi = random::function(rng, k);
        const std::string tag = "random instance " + std::to_string(i) + ": ";
        expect(link_op(phi) == link_op_via_closed_decomposition(phi), tag + "link routes differ");
        expect(dual_op(dual_op(phi)) == phi, tag + "D D != id");
        expect(integral(link_op(phi)) == 0, tag + "integral of link != 0");
        expect(from_closed_coeffs(k, mobius_closed_coeffs(phi)) == phi, tag + "closed presentation does not reconstruct");
    }
    for (const auto& name : fixtures::names()) {
        const auto fx = fixtures::make(name);
        const auto one = ConstructibleFunction::constant(fx.complex, 1);
        if (!is_euler(one) || fx.complex.dimension() > 3) continue;
        const auto prof = epsilon_profile(fx.complex);
        expect(prof.disagreements.empty(), name + ": epsilon routes disagree");
        expect(prof.relations_hold, name + ": delta/epsilon relations fail");
    }
    json body{{"checks", checks}, {"failures", failures}, {"passed", failures.empty()}};
    return {body, failures.empty() ? Ok : ConsistencyFailure, std::nullopt};
}

inline Result dispatch(const std::string& cmd, const Options& o, std::ostream& err) {
    Runner r(o, err);
    if (cmd == "fixture") {
        auto fx = fixtures::make(o.fixture_name);
        if (o.kind == "complex") return {io::to_json(fx.complex)};
        if (o.kind == "function") {
            if (!fx.function) throw Runner::usage("fixture " + o.fixture_name + " carries no function");
            return {io::to_json(*fx.function)};
        }
        if (o.kind == "strat") {
            if (!fx.strat) throw Runner::usage("fixture " + o.fixture_name + " carries no stratification");
            return {io::to_json(*fx.strat)};
        }
        if (!fx.map) throw Runner::usage("fixture " + o.fixture_name + " is not a map");
        return {io::to_json(*fx.map)};
    }
    if (cmd == "selftest") return selftest();
    if (cmd == "pushforward" || cmd == "pullback") {
        const auto f = r.map();
        if (cmd == "pushforward") return {io::to_json(pushforward(f, r.function(&f.domain())))};
        return {io::to_json(pullback(f, r.function(&f.codomain())))};
    }

    const auto k = r.complex();
    if (cmd == "integrate") {
        const auto v = integral(r.function(&k));
        return {json{{"integral", v}}, Ok, std::to_string(v) + "\n"};
    }
    if (cmd == "link") return {io::to_json(link_op(r.function(&k)))};
    if (cmd == "dual") return {io::to_json(dual_op(r.function(&k)))};
    if (cmd == "link-along") {
        const auto ys = r.sets(k);
        if (ys.size() != 1) throw Runner::usage("link-along takes exactly one --set");
        return {io::to_json(link_along(ys[0], r.function(&k)))};
    }
    if (cmd == "euler") {
        const auto phi = r.function(&k);
        const auto w = euler_witness(phi);
        json body{{"euler", !w}};
        if (w) body["witness"] = witness_json(k, w);
        return {body, w ? VerdictFalse : Ok};
    }
    if (cmd == "completely-euler") {
        const bool given = !o.function.empty() && o.function != "ones";
        const auto report = given ? completely_euler_dim2(r.function(&k)) : completely_euler_dim3(k);
        return {io::to_json(report), report.verdict ? Ok : VerdictFalse};
    }
    if (cmd == "ak") {
        const auto strat = r.optional_strat(k);
        const auto prof = epsilon_profile(k, strat);
        const auto sets = characteristic_sets(prof);
        json set_json = json::object();
        json z = json::object();
        bool verdict = true;
        for (const auto& [name, s] : sets) {
            set_json[name] = io::to_json(s);
            if (name.size() == 2 && name[0] == 'Z') {
                const bool ok = is_euler_set(s);
                z[name] = ok;
                verdict = verdict && ok;
            }
        }
        json body{{"profile", io::to_json(prof)}, {"characteristic_sets", set_json}, {"z_sets_euler", z},
                  {"verdict", verdict}};
        if (!prof.disagreements.empty() || !prof.relations_hold) return {body, ConsistencyFailure};
        return {body, verdict ? Ok : VerdictFalse};
    }
    if (cmd == "ak-stratified") {
        const auto report = stratified_check(r.strat(&k));
        return {io::to_json(report), report.verdict ? Ok : VerdictFalse};
    }
    if (cmd == "iterated-link") {
        const auto ys = r.sets(k);
        if (ys.empty()) throw Runner::usage("iterated-link needs at least one --set");
        for (const auto& y : ys) cfcalc::detail::require_closed(y, "iterated-link set");
        std::vector<std::pair<std::string, SimplexSet>> candidates;
        for (std::size_t i = 0; i < ys.size(); ++i) candidates.emplace_back("Y" + std::to_string(i + 1), ys[i]);
        candidates.emplace_back("X", SimplexSet::all(k));
        const auto res = iterated_link(k, ys, candidates);
        json body{{"function", io::to_json(res.phi)}, {"divisibility", io::to_json(res.report, k)}};
        return {body};
    }
    throw Runner::usage("unknown command " + cmd);
}

} // namespace detail

/// Runs the command line (args exclude the program name). Results go to out,
/// diagnostics to err. Exit codes: 0 ok or verdict true, 1 verdict false,
/// 2 input error, 3 consistency failure.
inline int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    Options o;
    CLI::App app{"Euler calculus on simplicial complexes", "cfcalc"};
    app.add_option("--complex", o.complex, "complex document path, or fixture:NAME");
    app.add_option("--function", o.function, "function document path, fixture:NAME, or ones");
    app.add_option("--strat", o.strat, "stratification document path, or fixture:NAME");
    app.add_option("--map", o.map, "map document path, or fixture:NAME");
    app.add_option("--set", o.sets, "all, empty, skeleton-K, vertex:NAME, or inline JSON simplices")
        ->allow_extra_args(false);
    app.add_option("--format", o.format, "json or table")->check(CLI::IsMember({"json", "table"}));
    app.add_option("--out", o.out, "write the result here instead of standard output");
    app.add_flag("--verbose", o.verbose, "progress on the error stream");
    app.require_subcommand(1);

    const std::vector<std::pair<std::string, std::string>> commands = {
        {"integrate", "Euler integral of a function"},
        {"link", "link operator"},
        {"dual", "duality operator"},
        {"link-along", "link along a closed set (one --set)"},
        {"pushforward", "pushforward along --map"},
        {"pullback", "pullback along --map"},
        {"euler", "Euler test of a function"},
        {"completely-euler", "completely-Euler test (dim <= 3 space, or a function with support of dim <= 2)"},
        {"ak", "epsilon invariants and characteristic sets"},
        {"ak-stratified", "completely-Euler test of a stratification's skeleta"},
        {"iterated-link", "iterated links along the --set sequence"},
        {"selftest", "internal consistency checks"},
    };
    for (const auto& [name, help] : commands) app.add_subcommand(name, help)->fallthrough();
    auto* fixture = app.add_subcommand("fixture", "print a named fixture")->fallthrough();
    fixture->add_option("name", o.fixture_name, "fixture name")->required();
    fixture->add_option("--kind", o.kind, "complex, function, strat or map")
        ->check(CLI::IsMember({"complex", "function", "strat", "map"}));

    try {
        std::vector<std::string> rev(args.rbegin(), args.rend());
        app.parse(rev);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e, out, err);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e, out, err);
    } catch (const CLI::ParseError& e) {
        app.exit(e, out, err);
        return InputError;
    }

    const std::string cmd = app.get_subcommands().front()->get_name();
    detail::Result result;
    try {
        result = detail::dispatch(cmd, o, err);
    } catch (const Error& e) {
        err << "cfcalc: " << e.what() << "\n";
        return e.is_consistency_failure() ? ConsistencyFailure : InputError;
    } catch (const json::exception& e) {
        err << "cfcalc: malformed document: " << e.what() << "\n";
        return InputError;
    } catch (const std::exception& e) {
        err << "cfcalc: internal error: " << e.what() << "\n";
        return ConsistencyFailure;
    }

    std::string text;
    if (o.format == "json") {
        text = io::dump(result.body);
    } else if (result.table) {
        text = *result.table;
    } else {
        std::ostringstream ss;
        detail::render_table(result.body, ss);
        text = ss.str();
    }
    if (o.out.empty()) {
        out << text;
    } else {
        std::ofstream f(o.out, std::ios::binary);
        if (!(f << text)) {
            err << "cfcalc: cannot write " << o.out << "\n";
            return InputError;
        }
    }
    return result.code;
}

} // namespace cfcalc::cli
