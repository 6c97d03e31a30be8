#pragma once

#include <string>

#include "cfcalc/function.hpp"

namespace cfcalc {

/// Link operator. The value at an open simplex tau is the Euler integral of
/// phi over a small sphere around an interior point of tau: the sphere meets
/// tau in a (dim tau - 1)-sphere and every open coface rho in an open cell of
/// dimension dim rho - 1.
inline ConstructibleFunction link_op(const ConstructibleFunction& phi) {
    const auto& k = phi.ambient();
    std::vector<std::int64_t> out(k.size());
    for (SimplexId t = 0; t < k.size(); ++t) {
        std::int64_t acc = (k.dim(t) % 2 == 1) ? checked::mul(2, phi[t]) : 0;
        for (SimplexId r : k.cofaces(t)) acc = checked::add(acc, checked::signed_by_dim(k.dim(r) - 1, phi[r]));
        out[t] = acc;
    }
    return ConstructibleFunction(k, std::move(out));
}

/// Second route to the link operator: write phi as a sum of closed-simplex
/// indicators and use the links of points of a closed simplex (a sphere at
/// interior points, a disk on the boundary).
inline ConstructibleFunction link_op_via_closed_decomposition(const ConstructibleFunction& phi) {
    const auto& k = phi.ambient();
    const auto c = mobius_closed_coeffs(phi);
    std::vector<std::int64_t> out(k.size(), 0);
    for (SimplexId s = 0; s < k.size(); ++s) {
        if (c[s] == 0) continue;
        const std::int64_t interior = (k.dim(s) % 2 == 1) ? 2 : 0;
        out[s] = checked::add(out[s], checked::mul(interior, c[s]));
        for (SimplexId f : k.faces(s)) out[f] = checked::add(out[f], c[s]);
    }
    return ConstructibleFunction(k, std::move(out));
}

/// D phi = phi - Lambda phi
inline ConstructibleFunction dual_op(const ConstructibleFunction& phi) { return phi - link_op(phi); }

/// Omega phi = phi + D phi
inline ConstructibleFunction omega_op(const ConstructibleFunction& phi) { return phi + dual_op(phi); }

namespace detail {

inline std::optional<SimplexId> first_odd(const ConstructibleFunction& f) {
    for (SimplexId i = 0; i < f.ambient().size(); ++i)
        if (f[i] % 2 != 0) return i;
    return std::nullopt;
}

inline ConstructibleFunction halve(const ConstructibleFunction& f, const std::string& context) {
    if (auto odd = first_odd(f))
        throw NotEulerError(ErrorCode::NotEuler, f.ambient().simplex(*odd).to_string(), f[*odd], context);
    std::vector<std::int64_t> out(f.values().begin(), f.values().end());
    for (auto& v : out) v /= 2;
    return ConstructibleFunction(f.ambient(), std::move(out));
}

} // namespace detail

/// Half of the link; throws NotEuler when some link value is odd.
inline ConstructibleFunction half_link(const ConstructibleFunction& phi) {
    return detail::halve(link_op(phi), "function");
}

/// Half of Omega. Omega = 2 phi - Lambda phi, so it is even exactly when phi is Euler.
inline ConstructibleFunction half_omega(const ConstructibleFunction& phi) {
    return detail::halve(omega_op(phi), "function");
}

inline bool is_euler(const ConstructibleFunction& phi) { return !detail::first_odd(link_op(phi)); }
inline bool is_self_dual(const ConstructibleFunction& phi) { return link_op(phi).is_zero(); }
inline bool is_anti_self_dual(const ConstructibleFunction& phi) { return omega_op(phi).is_zero(); }

/// First simplex (canonical order) where Lambda phi is odd, with that value.
inline std::optional<std::pair<SimplexId, std::int64_t>> euler_witness(const ConstructibleFunction& phi) {
    auto l = link_op(phi);
    if (auto odd = detail::first_odd(l)) return std::pair{*odd, l[*odd]};
    return std::nullopt;
}

inline void require_euler(const ConstructibleFunction& phi, const std::string& context,
                          ErrorCode code = ErrorCode::NotEuler) {
    if (auto w = euler_witness(phi))
        throw NotEulerError(code, phi.ambient().simplex(w->first).to_string(), w->second, context);
}

namespace detail {

/// Restriction of phi to the closed set Y, as a function on the complex Y.
inline ConstructibleFunction restrict_to_subcomplex(const ConstructibleFunction& phi, const SimplicialComplex& y) {
    std::vector<std::int64_t> out(y.size());
    for (SimplexId i = 0; i < y.size(); ++i) out[i] = phi.at(y.simplex(i));
    return ConstructibleFunction(y, std::move(out));
}

/// Extension by zero from the subcomplex Y back to the ambient complex.
inline ConstructibleFunction extend_by_zero(const ConstructibleFunction& f, const SimplicialComplex& ambient) {
    std::vector<std::int64_t> out(ambient.size(), 0);
    const auto& y = f.ambient();
    for (SimplexId i = 0; i < y.size(); ++i) out[ambient.id_of(y.simplex(i))] = f[i];
    return ConstructibleFunction(ambient, std::move(out));
}

inline void require_closed(const SimplexSet& y, const char* what) {
    if (!y.is_closed()) throw Error(ErrorCode::SetNotClosed, std::string(what) + " must be face-closed");
}

} // namespace detail

/// Link of phi along the closed set Y (sum of the positive and negative
/// specializations of any function cutting out Y). Evaluated two ways:
///   phi|Y - D((D phi)|Y)                        in the ambient complex, and
///   Lambda(phi|Y) - Lambda((Lambda phi)|Y) + (Lambda phi)|Y
/// with the two outer links taken inside the subcomplex Y.
inline ConstructibleFunction link_along(const SimplexSet& y, const ConstructibleFunction& phi) {
    detail::require_closed(y, "link_along set");
    if (!(y.ambient() == phi.ambient()))
        throw Error(ErrorCode::AmbientMismatch, "link_along: set and function live on different complexes");
    const auto& x = phi.ambient();

    const auto ambient_route = restrict(phi, y) - dual_op(restrict(dual_op(phi), y));

    const SimplicialComplex ysub = subcomplex(y);
    const auto lambda_phi = link_op(phi);
    const auto inner = link_op(detail::restrict_to_subcomplex(phi, ysub)) -
                       link_op(detail::restrict_to_subcomplex(lambda_phi, ysub));
    const auto subcomplex_route = detail::extend_by_zero(inner, x) + restrict(lambda_phi, y);

    if (!(ambient_route == subcomplex_route))
        throw Error(ErrorCode::FormulaDisagreement, "the two link-along formulas disagree");
    return ambient_route;
}

/// phi|Y + D((D phi)|Y); satisfies link_along + omega_along = 2 phi|Y.
inline ConstructibleFunction omega_along(const SimplexSet& y, const ConstructibleFunction& phi) {
    detail::require_closed(y, "omega_along set");
    return restrict(phi, y) + dual_op(restrict(dual_op(phi), y));
}

namespace detail {

/// Homotopy Euler characteristic of an open (up-closed) family of simplices,
/// computed as the Euler characteristic of its order complex.
inline std::int64_t order_complex_euler_char(const SimplexSet& open_set) {
    const auto& k = open_set.ambient();
    // chains ending at p: g(p) = 1 - sum over q < p in the family of g(q)
    std::vector<std::int64_t> g(k.size(), 0);
    std::int64_t chi = 0;
    for (SimplexId p = 0; p < k.size(); ++p) {
        if (!open_set.contains(p)) continue;
        std::int64_t acc = 1;
        for (SimplexId q : k.faces(p))
            if (open_set.contains(q)) acc -= g[q];
        g[p] = acc;
        chi += acc;
    }
    return chi;
}

} // namespace detail

/// Euler characteristic of the link of closure(Y) in the closed set Z, from
/// the integral of Lambda 1_Z over closure(Y) and, independently, from
/// chi(Y n Z) + chi(Z \ Y) - chi(Z) with the homotopy Euler characteristic of
/// the open complement.
inline std::int64_t chi_link_of_set(const SimplexSet& y, const SimplexSet& z) {
    detail::require_closed(z, "chi_link_of_set ambient set");
    y.require_same_ambient(z);
    const SimplexSet ybar = closure(y);
    const std::int64_t by_integral = integral_over(link_op(indicator(z)), ybar);
    const std::int64_t by_counting =
        euler_char(ybar & z) + detail::order_complex_euler_char(z - ybar) - euler_char(z);
    if (by_integral != by_counting)
        throw Error(ErrorCode::FormulaDisagreement, "link Euler characteristic: integral route gives " +
                                                        std::to_string(by_integral) + ", counting route " +
                                                        std::to_string(by_counting));
    return by_integral;
}

} // namespace cfcalc
