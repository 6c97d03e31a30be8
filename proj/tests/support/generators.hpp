#pragma once

#include <optional>
#include <random>

#include "cfcalc.hpp"

namespace gen {

using namespace cfcalc;
using Rng = std::mt19937_64;

inline SimplicialComplex complex(Rng& rng, int max_vertices = 7, int max_dim = 3) {
    return cfcalc::random::complex(rng, max_vertices, max_dim);
}

inline ConstructibleFunction function(Rng& rng, const SimplicialComplex& k, int lo = -4, int hi = 4) {
    return cfcalc::random::function(rng, k, lo, hi);
}

/// Random vertex maps, kept only when every simplex lands on a simplex.
inline std::optional<SimplicialMap> map(Rng& rng, const SimplicialComplex& dom, const SimplicialComplex& cod,
                                        int attempts = 50) {
    const auto& targets = cod.vertex_names();
    std::uniform_int_distribution<std::size_t> pick(0, targets.size() - 1);
    for (int a = 0; a < attempts; ++a) {
        std::map<std::string, std::string> vm;
        for (const auto& v : dom.vertex_names()) vm[v] = targets[pick(rng)];
        try {
            return SimplicialMap(dom, cod, std::move(vm));
        } catch (const Error& e) {
            if (e.code() != ErrorCode::NotSimplicial) throw;
        }
    }
    return std::nullopt;
}

/// Closure of a random subset: a random closed set.
inline SimplexSet closed_set(Rng& rng, const SimplicialComplex& k, double p = 0.3) {
    return closure(cfcalc::random::subset(rng, k, p));
}

/// Random complexes whose constant function 1 is Euler, of dimension >= min_dim.
inline std::vector<SimplicialComplex> euler_complexes(Rng& rng, std::size_t want, int min_dim, int max_attempts = 20000) {
    std::vector<SimplicialComplex> out;
    for (int a = 0; a < max_attempts && out.size() < want; ++a) {
        auto k = cfcalc::random::complex(rng, 7, 3, 8);
        if (k.dimension() < min_dim) continue;
        if (is_euler(ConstructibleFunction::constant(k, 1))) out.push_back(std::move(k));
    }
    return out;
}

/// Members of the ideal A_X: values divisible by 2^dim on each simplex.
inline ConstructibleFunction ideal_member(Rng& rng, const SimplicialComplex& k) {
    auto phi = function(rng, k);
    std::vector<std::int64_t> v(phi.values().begin(), phi.values().end());
    for (SimplexId i = 0; i < k.size(); ++i) v[i] *= std::int64_t{1} << k.dim(i);
    return ConstructibleFunction(k, std::move(v));
}

} // namespace gen
