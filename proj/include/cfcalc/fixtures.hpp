#pragma once

#include <optional>
#include <string>
#include <vector>

#include "cfcalc/maps.hpp"
#include "cfcalc/stratification.hpp"

namespace cfcalc::fixtures {

struct Fixture {
    std::string name;
    SimplicialComplex complex;
    std::optional<ConstructibleFunction> function;  // on the complex (the map's domain for map fixtures)
    std::optional<Stratification> strat;
    std::optional<SimplicialMap> map;
};

inline const std::vector<std::string>& names() {
    static const std::vector<std::string> n = {"ak-X",   "ak-Y",    "circle",  "double-cover", "figure-eight", "fold-map",
                                               "path",   "sphere2", "sphere3", "theta",        "torus"};
    return n;
}

inline std::vector<std::string> numbered(int n) {
    std::vector<std::string> v;
    for (int i = 0; i < n; ++i) v.push_back(std::to_string(i));
    return v;
}

/// Boundary of the simplex on vertices 0..n.
inline SimplicialComplex sphere_boundary(int n) {
    const auto vs = numbered(n + 1);
    std::vector<std::vector<std::string>> facets;
    for (int skip = 0; skip <= n; ++skip) {
        std::vector<std::string> f;
        for (int i = 0; i <= n; ++i)
            if (i != skip) f.push_back(vs[i]);
        facets.push_back(std::move(f));
    }
    return build_complex(facets);
}

inline SimplicialComplex cycle(int n, const std::string& prefix = "") {
    std::vector<std::vector<std::string>> edges;
    for (int i = 0; i < n; ++i) edges.push_back({prefix + std::to_string(i), prefix + std::to_string((i + 1) % n)});
    return build_complex(edges);
}

inline SimplicialComplex path() { return build_complex({{"a", "b"}, {"b", "c"}}); }

/// Seven-vertex torus.
inline SimplicialComplex torus() {
    std::vector<std::vector<std::string>> tris;
    auto v = [](int i) { return std::to_string(i % 7); };
    for (int i = 0; i < 7; ++i) {
        tris.push_back({v(i), v(i + 1), v(i + 3)});
        tris.push_back({v(i), v(i + 2), v(i + 3)});
    }
    return build_complex(tris);
}

/// Two triangles w-u1-u2 and w-v1-v2 wedged at w.
inline SimplicialComplex figure_eight() {
    return build_complex({{"u1", "w"}, {"u1", "u2"}, {"u2", "w"}, {"v1", "w"}, {"v1", "v2"}, {"v2", "w"}});
}

inline SimplicialComplex theta() { return suspension(discrete_points({"p1", "p2", "p3"}), "n", "s"); }

/// Suspension of the figure eight (apexes a, a'), suspension of three points
/// (apexes a', b') and an edge b'-a, glued along a, a', b'.
inline SimplicialComplex ak_y() {
    const auto a = suspension(figure_eight(), "a", "a'");
    const auto b = suspension(discrete_points({"p1", "p2", "p3"}), "a'", "b'");
    const auto c = build_complex({{"b'", "a"}});
    return glue(glue(a, b), c);
}

inline SimplicialComplex ak_x() { return suspension(ak_y(), "N", "S"); }

namespace detail {

inline Stratum stratum_of_simplices(const SimplicialComplex& k, const std::string& label, int dim,
                                    const std::vector<std::vector<std::string>>& simplices) {
    Stratum st{label, dim, {}};
    for (const auto& s : simplices) st.members.push_back(k.id_of(Simplex(s)));
    return st;
}

/// Natural strata of ak-Y as lists of simplices.
inline std::vector<std::tuple<std::string, int, std::vector<std::vector<std::string>>>> ak_y_strata() {
    std::vector<std::tuple<std::string, int, std::vector<std::vector<std::string>>>> out = {
        {"a", 0, {{"a"}}},
        {"a'", 0, {{"a'"}}},
        {"b'", 0, {{"b'"}}},
        {"w", 0, {{"w"}}},
        {"a-w", 1, {{"a", "w"}}},
        {"w-a'", 1, {{"w", "a'"}}},
        {"b'-a", 1, {{"b'", "a"}}},
    };
    for (const char* p : {"p1", "p2", "p3"})
        out.push_back({std::string("a'-") + p + "-b'", 1, {{"a'", p}, {p}, {p, "b'"}}});
    for (const auto& [label, x, y] : {std::tuple{"disk-u", "u1", "u2"}, std::tuple{"disk-v", "v1", "v2"}}) {
        std::vector<std::vector<std::string>> members = {{x}, {y}, {x, y}, {"w", x}, {"w", y}};
        for (const char* apex : {"a", "a'"}) {
            members.push_back({apex, x});
            members.push_back({apex, y});
            members.push_back({apex, x, y});
            members.push_back({apex, "w", x});
            members.push_back({apex, "w", y});
        }
        out.push_back({label, 2, members});
    }
    return out;
}

} // namespace detail

/// ak-Y stratified by its singular set: the points a, a', b', w, the arcs
/// through them, and the two open disks of the suspended figure eight.
inline Stratification ak_y_strat() {
    const auto k = ak_y();
    std::vector<Stratum> strata;
    for (const auto& [label, dim, simplices] : detail::ak_y_strata())
        strata.push_back(detail::stratum_of_simplices(k, label, dim, simplices));
    return Stratification(k, std::move(strata));
}

/// Suspension of the ak-Y stratification: poles N and S, and T x (0,1) for each stratum T.
inline Stratification ak_x_strat() {
    const auto k = ak_x();
    std::vector<Stratum> strata = {detail::stratum_of_simplices(k, "N", 0, {{"N"}}),
                                   detail::stratum_of_simplices(k, "S", 0, {{"S"}})};
    for (const auto& [label, dim, simplices] : detail::ak_y_strata()) {
        std::vector<std::vector<std::string>> members;
        for (const auto& s : simplices) {
            members.push_back(s);
            for (const char* pole : {"N", "S"}) {
                auto t = s;
                t.push_back(pole);
                members.push_back(std::move(t));
            }
        }
        strata.push_back(detail::stratum_of_simplices(k, "susp(" + label + ")", dim + 1, members));
    }
    return Stratification(k, std::move(strata));
}

/// x -> x^2 on [-1,1] as a simplicial fold onto [0,1].
inline SimplicialMap fold_map() {
    return SimplicialMap(build_complex({{"-1", "0"}, {"0", "1"}}), build_complex({{"0", "1"}}),
                         {{"-1", "1"}, {"0", "0"}, {"1", "1"}});
}

/// Six-cycle wrapped twice around the three-cycle.
inline SimplicialMap double_cover() {
    std::map<std::string, std::string> vm;
    for (int i = 0; i < 6; ++i) vm[std::to_string(i)] = std::to_string(i % 3);
    return SimplicialMap(cycle(6), cycle(3), std::move(vm));
}

inline Fixture make(const std::string& name) {
    auto plain = [&](SimplicialComplex k) { return Fixture{name, std::move(k), std::nullopt, std::nullopt, std::nullopt}; };
    auto with_map = [&](SimplicialMap f) {
        auto one = ConstructibleFunction::constant(f.domain(), 1);
        return Fixture{name, f.domain(), std::move(one), std::nullopt, std::move(f)};
    };
    if (name == "path") return plain(path());
    if (name == "circle") return plain(cycle(3));
    if (name == "sphere2") return plain(sphere_boundary(3));
    if (name == "sphere3") return plain(sphere_boundary(4));
    if (name == "torus") return plain(torus());
    if (name == "figure-eight") return plain(figure_eight());
    if (name == "theta") return plain(theta());
    if (name == "ak-Y") {
        auto s = ak_y_strat();
        return Fixture{name, s.ambient(), std::nullopt, s, std::nullopt};
    }
    if (name == "ak-X") {
        auto s = ak_x_strat();
        return Fixture{name, s.ambient(), std::nullopt, s, std::nullopt};
    }
    if (name == "fold-map") return with_map(fold_map());
    if (name == "double-cover") return with_map(double_cover());
    throw Error(ErrorCode::UnknownFixture, "unknown fixture '" + name + "'");
}

} // namespace cfcalc::fixtures
