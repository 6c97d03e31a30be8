#pragma once

#include <map>
#include <string>

#include "cfcalc/function.hpp"

namespace cfcalc {

/// Vertex map between complexes that sends every simplex onto a simplex.
class SimplicialMap {
public:
    SimplicialMap(SimplicialComplex domain, SimplicialComplex codomain, std::map<std::string, std::string> vertex_map)
        : domain_(std::move(domain)), codomain_(std::move(codomain)), vertex_map_(std::move(vertex_map)) {
        for (const auto& v : domain_.vertex_names())
            if (!vertex_map_.count(v))
                throw Error(ErrorCode::ValidationError, "vertex map is not defined on '" + v + "'");
        for (const auto& [from, to] : vertex_map_)
            if (!std::binary_search(domain_.vertex_names().begin(), domain_.vertex_names().end(), from))
                throw Error(ErrorCode::ValidationError, "vertex map mentions unknown domain vertex '" + from + "'");
        image_.resize(domain_.size());
        for (SimplexId i = 0; i < domain_.size(); ++i) {
            std::set<std::string> img;
            for (const auto& v : domain_.simplex(i).vertices()) img.insert(vertex_map_.at(v));
            Simplex s(std::vector<std::string>(img.begin(), img.end()));
            auto id = codomain_.find(s);
            if (!id)
                throw Error(ErrorCode::NotSimplicial,
                            domain_.simplex(i).to_string() + " maps to " + s.to_string() + ", not a simplex");
            image_[i] = *id;
        }
    }

    const SimplicialComplex& domain() const noexcept { return domain_; }
    const SimplicialComplex& codomain() const noexcept { return codomain_; }
    const std::map<std::string, std::string>& vertex_map() const noexcept { return vertex_map_; }

    /// Id of the codomain simplex spanned by the image of a domain simplex.
    SimplexId image(SimplexId domain_id) const { return image_.at(domain_id); }

private:
    SimplicialComplex domain_;
    SimplicialComplex codomain_;
    std::map<std::string, std::string> vertex_map_;
    std::vector<SimplexId> image_;
};

/// g after f.
inline SimplicialMap compose(const SimplicialMap& g, const SimplicialMap& f) {
    if (!(f.codomain() == g.domain()))
        throw Error(ErrorCode::AmbientMismatch, "compose: codomain of f is not the domain of g");
    std::map<std::string, std::string> vm;
    for (const auto& [v, w] : f.vertex_map()) vm[v] = g.vertex_map().at(w);
    return SimplicialMap(f.domain(), g.codomain(), std::move(vm));
}

inline ConstructibleFunction pullback(const SimplicialMap& f, const ConstructibleFunction& psi) {
    if (!(psi.ambient() == f.codomain()))
        throw Error(ErrorCode::AmbientMismatch, "pullback: function is not on the codomain");
    std::vector<std::int64_t> out(f.domain().size());
    for (SimplexId i = 0; i < out.size(); ++i) out[i] = psi[f.image(i)];
    return ConstructibleFunction(f.domain(), std::move(out));
}

/// Fibre integral. Over an interior point of tau, each open rho with image tau
/// meets the fibre in an open cell of dimension dim rho - dim tau.
inline ConstructibleFunction pushforward(const SimplicialMap& f, const ConstructibleFunction& phi) {
    if (!(phi.ambient() == f.domain()))
        throw Error(ErrorCode::AmbientMismatch, "pushforward: function is not on the domain");
    const auto& dom = f.domain();
    const auto& cod = f.codomain();
    std::vector<std::int64_t> out(cod.size(), 0);
    for (SimplexId r = 0; r < dom.size(); ++r) {
        const SimplexId t = f.image(r);
        out[t] = checked::add(out[t], checked::signed_by_dim(dom.dim(r) - cod.dim(t), phi[r]));
    }
    return ConstructibleFunction(cod, std::move(out));
}

} // namespace cfcalc
