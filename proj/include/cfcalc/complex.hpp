#pragma once

#include <algorithm>
#include <cstdint>
#include <map>
#include <memory>
#include <numeric>
#include <optional>
#include <set>
#include <span>
#include <string>
#include <vector>

#include "cfcalc/error.hpp"

namespace cfcalc {

using SimplexId = std::uint32_t;

/// A nonempty simplex given by its vertex identifiers, kept sorted.
///
/// Simplices compare by dimension first and then lexicographically on the
/// vertex list; this is the canonical order used for ids, witnesses and
/// serialization.
class Simplex {
public:
    explicit Simplex(std::vector<std::string> vertices) : vertices_(std::move(vertices)) {
        if (vertices_.empty())
            throw Error(ErrorCode::EmptySimplex, "a simplex needs at least one vertex");
        std::sort(vertices_.begin(), vertices_.end());
        auto dup = std::adjacent_find(vertices_.begin(), vertices_.end());
        if (dup != vertices_.end())
            throw Error(ErrorCode::DuplicateVertexInSimplex, "vertex '" + *dup + "' repeated");
    }

    Simplex(std::initializer_list<std::string> vertices)
        : Simplex(std::vector<std::string>(vertices)) {}

    const std::vector<std::string>& vertices() const noexcept { return vertices_; }
    int dimension() const noexcept { return static_cast<int>(vertices_.size()) - 1; }

    bool contains_vertex(const std::string& v) const {
        return std::binary_search(vertices_.begin(), vertices_.end(), v);
    }

    std::string to_string() const {
        std::string out = "[";
        for (std::size_t i = 0; i < vertices_.size(); ++i) {
            if (i) out += ",";
            out += vertices_[i];
        }
        return out + "]";
    }

    friend bool operator==(const Simplex&, const Simplex&) = default;
    friend bool operator<(const Simplex& a, const Simplex& b) {
        if (a.vertices_.size() != b.vertices_.size())
            return a.vertices_.size() < b.vertices_.size();
        return a.vertices_ < b.vertices_;
    }

private:
    std::vector<std::string> vertices_;
};

namespace detail {

struct ComplexData {
    std::vector<std::string> vertex_names;
    std::vector<Simplex> simplices;
    std::vector<int> dims;
    std::map<Simplex, SimplexId> index;
    std::vector<std::vector<SimplexId>> faces;    // proper nonempty faces
    std::vector<std::vector<SimplexId>> facets;   // codimension-one faces
    std::vector<std::vector<SimplexId>> cofaces;  // proper cofaces
    int dimension = -1;
};

} // namespace detail

/// Finite abstract simplicial complex, face-closed by construction.
///
/// Cheap to copy: the data is immutable and shared. Simplex ids are dense and
/// follow the canonical simplex order, so iterating ids in increasing order
/// visits lower-dimensional simplices first.
class SimplicialComplex {
public:
    SimplicialComplex() : d_(std::make_shared<const detail::ComplexData>()) {}

    /// Face closure of the given vertex lists.
    static SimplicialComplex from_maximal(const std::vector<std::vector<std::string>>& maximal) {
        std::set<Simplex> all;
        for (const auto& verts : maximal) {
            Simplex s(verts);
            const auto& v = s.vertices();
            const std::size_t n = v.size();
            if (n > 20)
                throw Error(ErrorCode::ValidationError, "simplex of dimension > 19 is not supported");
            for (std::uint32_t mask = 1; mask < (1u << n); ++mask) {
                std::vector<std::string> sub;
                for (std::size_t i = 0; i < n; ++i)
                    if (mask & (1u << i)) sub.push_back(v[i]);
                all.emplace(std::move(sub));
            }
        }
        return SimplicialComplex(std::vector<Simplex>(all.begin(), all.end()));
    }

    static SimplicialComplex from_simplices(const std::vector<Simplex>& simplices) {
        std::vector<std::vector<std::string>> lists;
        lists.reserve(simplices.size());
        for (const auto& s : simplices) lists.push_back(s.vertices());
        return from_maximal(lists);
    }

    std::size_t size() const noexcept { return d_->simplices.size(); }
    bool empty() const noexcept { return d_->simplices.empty(); }
    int dimension() const noexcept { return d_->dimension; }

    const Simplex& simplex(SimplexId id) const { return d_->simplices.at(id); }
    int dim(SimplexId id) const { return d_->dims[id]; }
    const std::vector<Simplex>& simplices() const noexcept { return d_->simplices; }
    const std::vector<std::string>& vertex_names() const noexcept { return d_->vertex_names; }

    std::optional<SimplexId> find(const Simplex& s) const {
        auto it = d_->index.find(s);
        if (it == d_->index.end()) return std::nullopt;
        return it->second;
    }

    SimplexId id_of(const Simplex& s) const {
        auto id = find(s);
        if (!id) throw Error(ErrorCode::SimplexNotInComplex, s.to_string());
        return *id;
    }

    std::span<const SimplexId> faces(SimplexId id) const { return d_->faces[id]; }
    std::span<const SimplexId> facets(SimplexId id) const { return d_->facets[id]; }
    std::span<const SimplexId> cofaces(SimplexId id) const { return d_->cofaces[id]; }

    std::vector<Simplex> maximal_simplices() const {
        std::vector<Simplex> out;
        for (SimplexId i = 0; i < size(); ++i)
            if (d_->cofaces[i].empty()) out.push_back(d_->simplices[i]);
        return out;
    }

    bool shares_storage_with(const SimplicialComplex& other) const noexcept { return d_ == other.d_; }

    friend bool operator==(const SimplicialComplex& a, const SimplicialComplex& b) {
        return a.d_ == b.d_ || a.d_->simplices == b.d_->simplices;
    }

private:
    explicit SimplicialComplex(std::vector<Simplex> sorted_closed) {
        auto d = std::make_shared<detail::ComplexData>();
        d->simplices = std::move(sorted_closed);
        const std::size_t n = d->simplices.size();
        d->dims.resize(n);
        d->faces.resize(n);
        d->facets.resize(n);
        d->cofaces.resize(n);
        std::set<std::string> names;
        for (SimplexId i = 0; i < n; ++i) {
            const Simplex& s = d->simplices[i];
            d->index.emplace(s, i);
            d->dims[i] = s.dimension();
            d->dimension = std::max(d->dimension, s.dimension());
            for (const auto& v : s.vertices()) names.insert(v);
        }
        d->vertex_names.assign(names.begin(), names.end());
        for (SimplexId i = 0; i < n; ++i) {
            const auto& v = d->simplices[i].vertices();
            const std::size_t k = v.size();
            for (std::uint32_t mask = 1; mask + 1 < (1u << k); ++mask) {
                std::vector<std::string> sub;
                for (std::size_t j = 0; j < k; ++j)
                    if (mask & (1u << j)) sub.push_back(v[j]);
                SimplexId f = d->index.at(Simplex(std::move(sub)));
                d->faces[i].push_back(f);
                d->cofaces[f].push_back(i);
                if (d->dims[f] + 1 == d->dims[i]) d->facets[i].push_back(f);
            }
        }
        for (auto* lists : {&d->faces, &d->facets, &d->cofaces})
            for (auto& l : *lists) std::sort(l.begin(), l.end());
        d_ = std::move(d);
    }

    std::shared_ptr<const detail::ComplexData> d_;
};

inline SimplicialComplex build_complex(const std::vector<std::vector<std::string>>& maximal_simplices) {
    return SimplicialComplex::from_maximal(maximal_simplices);
}

/// A union of open simplices of an ambient complex.
class SimplexSet {
public:
    explicit SimplexSet(SimplicialComplex ambient)
        : ambient_(std::move(ambient)), in_(ambient_.size(), 0) {}

    SimplexSet(SimplicialComplex ambient, std::vector<char> membership)
        : ambient_(std::move(ambient)), in_(std::move(membership)) {
        if (in_.size() != ambient_.size())
            throw Error(ErrorCode::AmbientMismatch, "membership vector has the wrong length");
    }

    static SimplexSet all(const SimplicialComplex& k) {
        return SimplexSet(k, std::vector<char>(k.size(), 1));
    }

    static SimplexSet of_ids(const SimplicialComplex& k, std::span<const SimplexId> ids) {
        SimplexSet s(k);
        for (SimplexId id : ids) s.in_.at(id) = 1;
        return s;
    }

    static SimplexSet of_simplices(const SimplicialComplex& k, const std::vector<Simplex>& simplices) {
        SimplexSet s(k);
        for (const auto& sx : simplices) s.in_[k.id_of(sx)] = 1;
        return s;
    }

    /// Simplices of dimension <= k.
    static SimplexSet skeleton(const SimplicialComplex& k, int max_dim) {
        SimplexSet s(k);
        for (SimplexId i = 0; i < k.size(); ++i) s.in_[i] = k.dim(i) <= max_dim;
        return s;
    }

    const SimplicialComplex& ambient() const noexcept { return ambient_; }
    bool contains(SimplexId id) const { return in_.at(id) != 0; }
    bool contains(const Simplex& s) const {
        auto id = ambient_.find(s);
        return id && in_[*id];
    }

    std::vector<SimplexId> members() const {
        std::vector<SimplexId> out;
        for (SimplexId i = 0; i < in_.size(); ++i)
            if (in_[i]) out.push_back(i);
        return out;
    }

    std::vector<Simplex> member_simplices() const {
        std::vector<Simplex> out;
        for (SimplexId i = 0; i < in_.size(); ++i)
            if (in_[i]) out.push_back(ambient_.simplex(i));
        return out;
    }

    std::size_t count() const { return static_cast<std::size_t>(std::count(in_.begin(), in_.end(), 1)); }
    bool empty() const { return count() == 0; }

    /// -1 for the empty set.
    int dimension() const {
        int d = -1;
        for (SimplexId i = 0; i < in_.size(); ++i)
            if (in_[i]) d = std::max(d, ambient_.dim(i));
        return d;
    }

    bool is_closed() const {
        for (SimplexId i = 0; i < in_.size(); ++i) {
            if (!in_[i]) continue;
            for (SimplexId f : ambient_.faces(i))
                if (!in_[f]) return false;
        }
        return true;
    }

    const std::vector<char>& membership() const noexcept { return in_; }

    SimplexSet operator|(const SimplexSet& o) const { return zip(o, [](char a, char b) { return a || b; }); }
    SimplexSet operator&(const SimplexSet& o) const { return zip(o, [](char a, char b) { return a && b; }); }
    SimplexSet operator-(const SimplexSet& o) const { return zip(o, [](char a, char b) { return a && !b; }); }

    bool subset_of(const SimplexSet& o) const {
        require_same_ambient(o);
        for (std::size_t i = 0; i < in_.size(); ++i)
            if (in_[i] && !o.in_[i]) return false;
        return true;
    }

    friend bool operator==(const SimplexSet& a, const SimplexSet& b) {
        return a.ambient_ == b.ambient_ && a.in_ == b.in_;
    }

    void require_same_ambient(const SimplexSet& o) const {
        if (!(ambient_ == o.ambient_))
            throw Error(ErrorCode::AmbientMismatch, "simplex sets live in different complexes");
    }

private:
    template <class Op>
    SimplexSet zip(const SimplexSet& o, Op op) const {
        require_same_ambient(o);
        std::vector<char> out(in_.size());
        for (std::size_t i = 0; i < in_.size(); ++i) out[i] = op(in_[i], o.in_[i]) ? 1 : 0;
        return SimplexSet(ambient_, std::move(out));
    }

    SimplicialComplex ambient_;
    std::vector<char> in_;
};

inline SimplexSet closure(const SimplexSet& s) {
    const auto& k = s.ambient();
    std::vector<char> out = s.membership();
    for (SimplexId i = 0; i < k.size(); ++i) {
        if (!s.contains(i)) continue;
        for (SimplexId f : k.faces(i)) out[f] = 1;
    }
    return SimplexSet(k, std::move(out));
}

/// All simplices containing tau, tau included.
inline SimplexSet star(const SimplicialComplex& k, const Simplex& tau) {
    SimplexId t = k.id_of(tau);
    std::vector<char> in(k.size(), 0);
    in[t] = 1;
    for (SimplexId c : k.cofaces(t)) in[c] = 1;
    return SimplexSet(k, std::move(in));
}

/// {rho : rho disjoint from tau, rho u tau in K}.
inline SimplicialComplex link_complex(const SimplicialComplex& k, const Simplex& tau) {
    SimplexId t = k.id_of(tau);
    std::vector<std::vector<std::string>> pieces;
    for (SimplexId c : k.cofaces(t)) {
        std::vector<std::string> rest;
        for (const auto& v : k.simplex(c).vertices())
            if (!tau.contains_vertex(v)) rest.push_back(v);
        pieces.push_back(std::move(rest));
    }
    return SimplicialComplex::from_maximal(pieces);
}

/// The closed set S viewed as a complex in its own right.
inline SimplicialComplex subcomplex(const SimplexSet& s) {
    if (!s.is_closed()) throw Error(ErrorCode::SetNotClosed, "subcomplex of a non-closed set");
    return SimplicialComplex::from_simplices(s.member_simplices());
}

/// Union of two complexes; vertices with equal names are identified.
inline SimplicialComplex glue(const SimplicialComplex& a, const SimplicialComplex& b) {
    std::vector<Simplex> all = a.maximal_simplices();
    for (const auto& s : b.maximal_simplices()) all.push_back(s);
    return SimplicialComplex::from_simplices(all);
}

inline SimplicialComplex rename_vertices(const SimplicialComplex& k, const std::string& suffix) {
    std::vector<std::vector<std::string>> lists;
    for (const auto& s : k.maximal_simplices()) {
        std::vector<std::string> v;
        for (const auto& name : s.vertices()) v.push_back(name + suffix);
        lists.push_back(std::move(v));
    }
    return SimplicialComplex::from_maximal(lists);
}

/// Simplicial join. When the vertex names overlap, every vertex of the left
/// factor gets the suffix "#L" and every vertex of the right factor "#R".
inline SimplicialComplex join(const SimplicialComplex& k, const SimplicialComplex& l) {
    if (k.empty()) return l;
    if (l.empty()) return k;
    std::vector<std::string> common;
    std::set_intersection(k.vertex_names().begin(), k.vertex_names().end(), l.vertex_names().begin(),
                          l.vertex_names().end(), std::back_inserter(common));
    const SimplicialComplex left = common.empty() ? k : rename_vertices(k, "#L");
    const SimplicialComplex right = common.empty() ? l : rename_vertices(l, "#R");
    std::vector<std::vector<std::string>> lists;
    for (const auto& a : left.maximal_simplices())
        for (const auto& b : right.maximal_simplices()) {
            std::vector<std::string> v = a.vertices();
            v.insert(v.end(), b.vertices().begin(), b.vertices().end());
            lists.push_back(std::move(v));
        }
    return SimplicialComplex::from_maximal(lists);
}

inline SimplicialComplex point_complex(const std::string& name) {
    return SimplicialComplex::from_maximal({{name}});
}

inline SimplicialComplex discrete_points(const std::vector<std::string>& names) {
    std::vector<std::vector<std::string>> lists;
    for (const auto& n : names) lists.push_back({n});
    return SimplicialComplex::from_maximal(lists);
}

inline SimplicialComplex cone(const SimplicialComplex& k, const std::string& apex = "apex") {
    return join(k, point_complex(apex));
}

inline SimplicialComplex suspension(const SimplicialComplex& k, const std::string& north = "north",
                                    const std::string& south = "south") {
    return join(k, discrete_points({north, south}));
}

/// Compactly supported Euler characteristic: alternating count of open simplices.
inline std::int64_t euler_char(const SimplexSet& s) {
    std::int64_t chi = 0;
    for (SimplexId i : s.members()) chi += (s.ambient().dim(i) % 2 == 0) ? 1 : -1;
    return chi;
}

inline std::int64_t euler_char(const SimplicialComplex& k) { return euler_char(SimplexSet::all(k)); }

/// Components of the top-dimensional members of S, where two top simplices
/// are adjacent when they share a codimension-one face. Components are
/// ordered by their smallest member.
inline std::vector<SimplexSet> top_components(const SimplexSet& s) {
    const auto& k = s.ambient();
    const int top = s.dimension();
    if (top < 0) return {};
    std::vector<SimplexId> tops;
    for (SimplexId i : s.members())
        if (k.dim(i) == top) tops.push_back(i);

    std::vector<std::size_t> parent(tops.size());
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](std::size_t x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    };
    if (top >= 1) {
        std::map<SimplexId, std::size_t> first_owner;
        for (std::size_t i = 0; i < tops.size(); ++i)
            for (SimplexId f : k.facets(tops[i])) {
                auto [it, fresh] = first_owner.emplace(f, i);
                if (!fresh) parent[find(i)] = find(it->second);
            }
    }
    std::map<std::size_t, std::vector<SimplexId>> groups;
    for (std::size_t i = 0; i < tops.size(); ++i) groups[find(i)].push_back(tops[i]);
    std::vector<SimplexSet> out;
    for (auto& [root, ids] : groups) out.push_back(SimplexSet::of_ids(k, ids));
    std::sort(out.begin(), out.end(),
              [](const SimplexSet& a, const SimplexSet& b) { return a.members().front() < b.members().front(); });
    return out;
}

} // namespace cfcalc
