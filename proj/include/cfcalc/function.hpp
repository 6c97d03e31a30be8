#pragma once

#include <bit>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "cfcalc/complex.hpp"

namespace cfcalc {

/// Integer-valued function constant on the open simplices of its ambient
/// complex. Arithmetic is checked; overflow raises IntegerOverflow.
class ConstructibleFunction {
public:
    explicit ConstructibleFunction(SimplicialComplex ambient)
        : ambient_(std::move(ambient)), values_(ambient_.size(), 0) {}

    ConstructibleFunction(SimplicialComplex ambient, std::vector<std::int64_t> values)
        : ambient_(std::move(ambient)), values_(std::move(values)) {
        if (values_.size() != ambient_.size())
            throw Error(ErrorCode::AmbientMismatch, "value vector has the wrong length");
    }

    static ConstructibleFunction constant(const SimplicialComplex& k, std::int64_t c) {
        return ConstructibleFunction(k, std::vector<std::int64_t>(k.size(), c));
    }

    const SimplicialComplex& ambient() const noexcept { return ambient_; }
    std::int64_t operator[](SimplexId id) const { return values_.at(id); }
    std::int64_t at(const Simplex& s) const { return values_[ambient_.id_of(s)]; }
    std::span<const std::int64_t> values() const noexcept { return values_; }

    SimplexSet support() const {
        std::vector<char> in(values_.size());
        for (std::size_t i = 0; i < values_.size(); ++i) in[i] = values_[i] != 0;
        return SimplexSet(ambient_, std::move(in));
    }

    bool is_zero() const {
        return std::all_of(values_.begin(), values_.end(), [](std::int64_t v) { return v == 0; });
    }

    void require_same_ambient(const ConstructibleFunction& o) const {
        if (!(ambient_ == o.ambient_))
            throw Error(ErrorCode::AmbientMismatch, "functions live on different complexes");
    }

    friend bool operator==(const ConstructibleFunction& a, const ConstructibleFunction& b) {
        return a.ambient_ == b.ambient_ && a.values_ == b.values_;
    }

private:
    SimplicialComplex ambient_;
    std::vector<std::int64_t> values_;
};

inline ConstructibleFunction indicator(const SimplexSet& s) {
    std::vector<std::int64_t> v(s.ambient().size());
    for (std::size_t i = 0; i < v.size(); ++i) v[i] = s.membership()[i] ? 1 : 0;
    return ConstructibleFunction(s.ambient(), std::move(v));
}

enum class CombineKind { Add, Sub, Mul };

inline ConstructibleFunction combine(CombineKind kind, const ConstructibleFunction& a, const ConstructibleFunction& b) {
    a.require_same_ambient(b);
    std::vector<std::int64_t> out(a.ambient().size());
    for (SimplexId i = 0; i < out.size(); ++i) {
        switch (kind) {
        case CombineKind::Add: out[i] = checked::add(a[i], b[i]); break;
        case CombineKind::Sub: out[i] = checked::sub(a[i], b[i]); break;
        case CombineKind::Mul: out[i] = checked::mul(a[i], b[i]); break;
        }
    }
    return ConstructibleFunction(a.ambient(), std::move(out));
}

inline ConstructibleFunction scale(std::int64_t k, const ConstructibleFunction& a) {
    std::vector<std::int64_t> out(a.ambient().size());
    for (SimplexId i = 0; i < out.size(); ++i) out[i] = checked::mul(k, a[i]);
    return ConstructibleFunction(a.ambient(), std::move(out));
}

inline ConstructibleFunction operator+(const ConstructibleFunction& a, const ConstructibleFunction& b) {
    return combine(CombineKind::Add, a, b);
}
inline ConstructibleFunction operator-(const ConstructibleFunction& a, const ConstructibleFunction& b) {
    return combine(CombineKind::Sub, a, b);
}
inline ConstructibleFunction operator*(const ConstructibleFunction& a, const ConstructibleFunction& b) {
    return combine(CombineKind::Mul, a, b);
}
inline ConstructibleFunction operator*(std::int64_t k, const ConstructibleFunction& a) { return scale(k, a); }
inline ConstructibleFunction operator-(const ConstructibleFunction& a) { return scale(-1, a); }

/// Euler integral: sum over open simplices of (-1)^dim times the value.
inline std::int64_t integral(const ConstructibleFunction& phi) {
    std::int64_t total = 0;
    for (SimplexId i = 0; i < phi.ambient().size(); ++i)
        total = checked::add(total, checked::signed_by_dim(phi.ambient().dim(i), phi[i]));
    return total;
}

/// phi times the indicator of S.
inline ConstructibleFunction restrict(const ConstructibleFunction& phi, const SimplexSet& s) {
    if (!(phi.ambient() == s.ambient()))
        throw Error(ErrorCode::AmbientMismatch, "restriction to a set of another complex");
    std::vector<std::int64_t> out(phi.ambient().size());
    for (SimplexId i = 0; i < out.size(); ++i) out[i] = s.contains(i) ? phi[i] : 0;
    return ConstructibleFunction(phi.ambient(), std::move(out));
}

/// Integral of phi over S (the integral of the restriction).
inline std::int64_t integral_over(const ConstructibleFunction& phi, const SimplexSet& s) {
    return integral(restrict(phi, s));
}

/// Coefficients c with phi = sum_sigma c[sigma] * 1_{closure(sigma)}, by Moebius
/// inversion on the face poset: c[sigma] = sum over rho >= sigma of
/// (-1)^(dim rho - dim sigma) phi(rho). Indexed by simplex id.
inline std::vector<std::int64_t> mobius_closed_coeffs(const ConstructibleFunction& phi) {
    const auto& k = phi.ambient();
    std::vector<std::int64_t> c(k.size());
    for (SimplexId s = 0; s < k.size(); ++s) {
        std::int64_t acc = phi[s];
        for (SimplexId r : k.cofaces(s))
            acc = checked::add(acc, checked::signed_by_dim(k.dim(r) - k.dim(s), phi[r]));
        c[s] = acc;
    }
    return c;
}

/// Inverse of mobius_closed_coeffs: value at tau is the sum of c over simplices containing tau.
inline ConstructibleFunction from_closed_coeffs(const SimplicialComplex& k, std::span<const std::int64_t> c) {
    std::vector<std::int64_t> v(k.size());
    for (SimplexId t = 0; t < k.size(); ++t) {
        std::int64_t acc = c[t];
        for (SimplexId r : k.cofaces(t)) acc = checked::add(acc, c[r]);
        v[t] = acc;
    }
    return ConstructibleFunction(k, std::move(v));
}

/// Closed sets F1 > F2 > ... with 1_S = 1_F1 - 1_F2 + 1_F3 - ...
/// Built by Y0 = S, F_i = closure(Y_{i-1}), Y_i = F_i \ Y_{i-1}.
inline std::vector<SimplexSet> canonical_closed_decomposition(const SimplexSet& s) {
    std::vector<SimplexSet> out;
    SimplexSet y = s;
    while (!y.empty()) {
        SimplexSet f = closure(y);
        SimplexSet next = f - y;
        out.push_back(std::move(f));
        y = std::move(next);
    }
    return out;
}

/// Smallest k >= 1 and a simplex witnessing that phi is outside the ideal of
/// functions divisible by 2^k away from a set of dimension < k.
struct IdealViolation {
    int k;
    SimplexId simplex;
};

inline int bit_length(std::uint64_t v) { return v == 0 ? 0 : 64 - std::countl_zero(v); }

inline std::uint64_t magnitude(std::int64_t v) {
    return v < 0 ? static_cast<std::uint64_t>(-(v + 1)) + 1 : static_cast<std::uint64_t>(v);
}

inline bool divisible_by_pow2(std::int64_t v, int k) {
    if (k >= 64) return v == 0 || (k == 64 && v == INT64_MIN);
    return (magnitude(v) & ((std::uint64_t{1} << k) - 1)) == 0;
}

inline std::optional<IdealViolation> a_ideal_violation(const ConstructibleFunction& phi) {
    const auto& k = phi.ambient();
    std::uint64_t max_abs = 0;
    for (auto v : phi.values()) max_abs = std::max(max_abs, magnitude(v));
    const int kmax = std::min(64, std::max(k.dimension() + 1, bit_length(max_abs) + 1));
    for (int kk = 1; kk <= kmax; ++kk) {
        for (SimplexId i = 0; i < k.size(); ++i) {
            if (!divisible_by_pow2(phi[i], kk) && k.dim(i) >= kk) return IdealViolation{kk, i};
        }
    }
    return std::nullopt;
}

inline bool in_A_ideal(const ConstructibleFunction& phi) { return !a_ideal_violation(phi).has_value(); }

/// Largest k with 2^k | v; nullopt for v == 0.
inline std::optional<int> two_adic_valuation(std::int64_t v) {
    if (v == 0) return std::nullopt;
    return std::countr_zero(magnitude(v));
}

} // namespace cfcalc
