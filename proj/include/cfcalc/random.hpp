#pragma once

#include <random>

#include "cfcalc/function.hpp"

namespace cfcalc::random {

/// Face closure of a few random vertex subsets of v0..v{n-1}, n <= max_vertices.
template <class Rng>
SimplicialComplex complex(Rng& rng, int max_vertices = 7, int max_dim = 3, int max_facets = 6) {
    std::uniform_int_distribution<int> nv(1, max_vertices);
    const int n = nv(rng);
    std::uniform_int_distribution<int> nf(1, max_facets);
    std::uniform_int_distribution<int> size(1, std::min(n, max_dim + 1));
    std::vector<std::string> names;
    for (int i = 0; i < n; ++i) names.push_back("v" + std::to_string(i));
    std::vector<std::vector<std::string>> facets;
    const int f = nf(rng);
    for (int i = 0; i < f; ++i) {
        auto pool = names;
        std::shuffle(pool.begin(), pool.end(), rng);
        pool.resize(static_cast<std::size_t>(size(rng)));
        facets.push_back(std::move(pool));
    }
    return build_complex(facets);
}

template <class Rng>
ConstructibleFunction function(Rng& rng, const SimplicialComplex& k, int lo = -4, int hi = 4) {
    std::uniform_int_distribution<int> val(lo, hi);
    std::vector<std::int64_t> v(k.size());
    for (auto& x : v) x = val(rng);
    return ConstructibleFunction(k, std::move(v));
}

/// Each simplex independently with probability p.
template <class Rng>
SimplexSet subset(Rng& rng, const SimplicialComplex& k, double p = 0.4) {
    std::bernoulli_distribution coin(p);
    std::vector<char> in(k.size());
    for (auto& c : in) c = coin(rng) ? 1 : 0;
    return SimplexSet(k, std::move(in));
}

} // namespace cfcalc::random
