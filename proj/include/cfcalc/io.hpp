#pragma once

#include <charconv>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include <json.hpp>

#include "cfcalc/analysis.hpp"
#include "cfcalc/fixtures.hpp"

namespace cfcalc::io {

using json = nlohmann::json;

/// Canonical text: sorted keys, two-space indent, trailing newline.
inline std::string dump(const json& j) { return j.dump(2) + "\n"; }

namespace detail {

inline int line_of(const std::string& text, std::size_t byte) {
    byte = std::min(byte, text.size());
    return 1 + static_cast<int>(std::count(text.begin(), text.begin() + static_cast<std::ptrdiff_t>(byte), '\n'));
}

/// Integer literals that do not fit in 64 bits would otherwise be read as
/// unsigned or floating point; find them first so the line can be reported.
inline void reject_oversized_integers(const std::string& text) {
    int line = 1;
    bool in_string = false;
    for (std::size_t i = 0; i < text.size(); ++i) {
        const char c = text[i];
        if (c == '\n') ++line;
        if (in_string) {
            if (c == '\\') ++i;
            else if (c == '"') in_string = false;
            continue;
        }
        if (c == '"') {
            in_string = true;
            continue;
        }
        if (c != '-' && !std::isdigit(static_cast<unsigned char>(c))) continue;
        std::size_t j = i + 1;
        while (j < text.size() && std::strchr("0123456789.eE+-", text[j])) ++j;
        const std::string tok = text.substr(i, j - i);
        if (tok.find_first_of(".eE") == std::string::npos) {
            std::int64_t v = 0;
            auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
            if (ec == std::errc::result_out_of_range)
                throw ParseError(line, "integer " + tok + " does not fit in 64 bits");
        }
        i = j - 1;
    }
}

[[noreturn]] inline void bad(const std::string& why) { throw ParseError(0, why); }

inline const json& field(const json& j, const char* key) {
    if (!j.is_object()) bad("expected an object");
    auto it = j.find(key);
    if (it == j.end()) bad(std::string("missing field \"") + key + "\"");
    return *it;
}

} // namespace detail

inline json parse_text(const std::string& text) {
    detail::reject_oversized_integers(text);
    try {
        return json::parse(text);
    } catch (const json::parse_error& e) {
        throw ParseError(detail::line_of(text, e.byte == 0 ? 0 : e.byte - 1), e.what());
    }
}

inline std::string read_text(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ParseError(0, "cannot read " + path.string());
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

inline json read_json(const std::filesystem::path& path) { return parse_text(read_text(path)); }

// ---- simplices and sets

inline json to_json(const Simplex& s) { return json(s.vertices()); }

inline Simplex simplex_from_json(const json& j) {
    if (!j.is_array()) detail::bad("a simplex is an array of vertex names");
    std::vector<std::string> vs;
    for (const auto& v : j) {
        if (!v.is_string()) detail::bad("vertex names are strings");
        vs.push_back(v.get<std::string>());
    }
    return Simplex(std::move(vs));
}

inline json to_json(const SimplexSet& s) {
    json out = json::array();
    for (const auto& sim : s.member_simplices()) out.push_back(to_json(sim));
    return out;
}

inline SimplexSet set_from_json(const SimplicialComplex& k, const json& j) {
    if (!j.is_array()) detail::bad("a simplex set is an array of simplices");
    std::vector<Simplex> sims;
    for (const auto& s : j) sims.push_back(simplex_from_json(s));
    return SimplexSet::of_simplices(k, sims);
}

// ---- complexes

inline json to_json(const SimplicialComplex& k) {
    json maximal = json::array();
    for (const auto& s : k.maximal_simplices()) maximal.push_back(to_json(s));
    return json{{"vertices", k.vertex_names()}, {"maximal_simplices", maximal}};
}

inline SimplicialComplex complex_from_json(const json& j) {
    const auto& ms = detail::field(j, "maximal_simplices");
    if (!ms.is_array()) detail::bad("\"maximal_simplices\" must be an array");
    std::vector<Simplex> sims;
    for (const auto& s : ms) sims.push_back(simplex_from_json(s));
    if (auto it = j.find("vertices"); it != j.end()) {
        if (!it->is_array()) detail::bad("\"vertices\" must be an array");
        std::set<std::string> listed;
        for (const auto& v : *it) {
            if (!v.is_string()) detail::bad("vertex names are strings");
            listed.insert(v.get<std::string>());
        }
        for (const auto& s : sims)
            for (const auto& v : s.vertices())
                if (!listed.count(v))
                    throw Error(ErrorCode::ValidationError, "vertex '" + v + "' is used but not listed");
        for (const auto& v : listed) sims.push_back(Simplex({v}));
    }
    return SimplicialComplex::from_simplices(sims);
}

/// A "complex" field: an inline document, "fixture:NAME", or a path relative to base.
inline SimplicialComplex resolve_complex(const json& j, const std::filesystem::path& base);

inline SimplicialComplex load_complex(const std::string& ref, const std::filesystem::path& base = {}) {
    if (ref.rfind("fixture:", 0) == 0) return fixtures::make(ref.substr(8)).complex;
    const std::filesystem::path p = base.empty() ? std::filesystem::path(ref) : base / ref;
    return resolve_complex(read_json(p), p.parent_path());
}

inline SimplicialComplex resolve_complex(const json& j, const std::filesystem::path& base) {
    if (j.is_string()) return load_complex(j.get<std::string>(), base);
    if (j.is_object() && j.contains("maximal_simplices")) return complex_from_json(j);
    if (j.is_object() && j.contains("complex")) return resolve_complex(j.at("complex"), base);
    detail::bad("\"complex\" must be a complex document, a path, or fixture:NAME");
}

// ---- functions

inline json to_json(const ConstructibleFunction& phi) {
    json values = json::array();
    const auto& k = phi.ambient();
    for (SimplexId i = 0; i < k.size(); ++i)
        if (phi[i] != 0) values.push_back(json::array({to_json(k.simplex(i)), phi[i]}));
    return json{{"complex", to_json(k)}, {"values", values}};
}

inline ConstructibleFunction function_from_json(const json& j, const SimplicialComplex& k) {
    const auto& vals = detail::field(j, "values");
    if (!vals.is_array()) detail::bad("\"values\" must be an array");
    std::vector<std::int64_t> out(k.size(), 0);
    std::vector<char> seen(k.size(), 0);
    for (const auto& entry : vals) {
        if (!entry.is_array() || entry.size() != 2) detail::bad("each value is a [simplex, integer] pair");
        const Simplex s = simplex_from_json(entry[0]);
        if (!entry[1].is_number_integer()) detail::bad("value at " + s.to_string() + " is not an integer");
        if (entry[1].is_number_unsigned() && entry[1].get<std::uint64_t>() > static_cast<std::uint64_t>(INT64_MAX))
            detail::bad("value at " + s.to_string() + " does not fit in 64 bits");
        const SimplexId id = k.id_of(s);
        if (seen[id]) throw Error(ErrorCode::ValidationError, "two values given for " + s.to_string());
        seen[id] = 1;
        out[id] = entry[1].get<std::int64_t>();
    }
    return ConstructibleFunction(k, std::move(out));
}

inline ConstructibleFunction function_from_json(const json& j, const std::filesystem::path& base) {
    return function_from_json(j, resolve_complex(detail::field(j, "complex"), base));
}

// ---- stratifications

inline json to_json(const Stratification& s) {
    std::vector<const Stratum*> order;
    for (const auto& st : s.strata()) order.push_back(&st);
    std::sort(order.begin(), order.end(), [](const Stratum* a, const Stratum* b) {
        return std::tie(a->dimension, a->label) < std::tie(b->dimension, b->label);
    });
    json strata = json::array();
    for (const Stratum* st : order) {
        json sims = json::array();
        for (SimplexId id : st->members) sims.push_back(to_json(s.ambient().simplex(id)));
        strata.push_back(json{{"label", st->label}, {"dimension", st->dimension}, {"simplices", sims}});
    }
    return json{{"complex", to_json(s.ambient())}, {"strata", strata}};
}

inline Stratification strat_from_json(const json& j, const SimplicialComplex& k) {
    const auto& strata = detail::field(j, "strata");
    if (!strata.is_array()) detail::bad("\"strata\" must be an array");
    std::vector<Stratum> out;
    for (const auto& st : strata) {
        const auto& label = detail::field(st, "label");
        const auto& dim = detail::field(st, "dimension");
        if (!label.is_string()) detail::bad("stratum label must be a string");
        if (!dim.is_number_integer()) detail::bad("stratum dimension must be an integer");
        Stratum s{label.get<std::string>(), dim.get<int>(), {}};
        const auto& sims = detail::field(st, "simplices");
        if (!sims.is_array()) detail::bad("stratum simplices must be an array");
        for (const auto& sim : sims) s.members.push_back(k.id_of(simplex_from_json(sim)));
        out.push_back(std::move(s));
    }
    return Stratification(k, std::move(out));
}

inline Stratification strat_from_json(const json& j, const std::filesystem::path& base) {
    return strat_from_json(j, resolve_complex(detail::field(j, "complex"), base));
}

// ---- maps

inline json to_json(const SimplicialMap& f) {
    return json{{"domain", to_json(f.domain())}, {"codomain", to_json(f.codomain())}, {"vertex_map", f.vertex_map()}};
}

inline SimplicialMap map_from_json(const json& j, const std::filesystem::path& base) {
    const auto& vm = detail::field(j, "vertex_map");
    if (!vm.is_object()) detail::bad("\"vertex_map\" must be an object");
    std::map<std::string, std::string> m;
    for (const auto& [from, to] : vm.items()) {
        if (!to.is_string()) detail::bad("vertex_map targets are vertex names");
        m[from] = to.get<std::string>();
    }
    return SimplicialMap(resolve_complex(detail::field(j, "domain"), base),
                         resolve_complex(detail::field(j, "codomain"), base), std::move(m));
}

// ---- reports

inline json to_json(const CheckReport& r) {
    json witnesses = json::array();
    for (const auto& w : r.failing_witnesses)
        witnesses.push_back(json{{"function", w.function}, {"simplex", to_json(w.simplex)}, {"value", w.value}});
    json sets = json::object();
    for (const auto& [name, s] : r.characteristic_sets) sets[name] = to_json(s);
    return json{{"verdict", r.verdict},
                {"failing_witnesses", witnesses},
                {"characteristic_sets", sets},
                {"statuses", r.statuses},
                {"notes", r.notes}};
}

inline json to_json(const EpsilonProfile& p) {
    const auto& k = p.ambient;
    json entries = json::array();
    for (const auto& e : p.entries) {
        json row{{"simplex", to_json(k.simplex(e.simplex))}, {"eps", e.eps}, {"delta", e.delta}};
        if (e.eps3) row["eps3"] = *e.eps3;
        entries.push_back(std::move(row));
    }
    json dis = json::array();
    for (const auto& d : p.disagreements)
        dis.push_back(json{{"route", d.route},
                           {"simplex", to_json(k.simplex(d.simplex))},
                           {"geometric_value", d.geometric_value},
                           {"formula_value", d.formula_value}});
    json out{{"stratified", p.stratified}, {"entries", entries},     {"c0", to_json(p.c0)},
             {"c1", to_json(p.c1)},        {"relations_hold", p.relations_hold}, {"disagreements", dis},
             {"warnings", p.warnings}};
    if (p.eps3_matches_omega_form) out["eps3_matches_omega_form"] = *p.eps3_matches_omega_form;
    if (p.eps3_matches_lambda_form) out["eps3_matches_lambda_form"] = *p.eps3_matches_lambda_form;
    return out;
}

inline json to_json(const DivisibilityReport& r, const SimplicialComplex& k) {
    json cands = json::array();
    for (const auto& c : r.candidates) {
        json classes = json::array();
        for (const auto& rc : c.classes)
            classes.push_back(
                json{{"component", to_json(rc.component)}, {"residues", rc.residues}, {"constant", rc.constant}});
        cands.push_back(json{{"name", c.name}, {"classes", classes}});
    }
    json out{{"k", r.k}, {"divisible", r.divisible}, {"candidates", cands}};
    out["min_valuation"] = r.min_valuation ? json(*r.min_valuation) : json(nullptr);
    if (r.least_divisible) out["least_divisible_at"] = to_json(k.simplex(*r.least_divisible));
    return out;
}

} // namespace cfcalc::io
