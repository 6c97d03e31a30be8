#pragma once

#include <array>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "cfcalc/operators.hpp"
#include "cfcalc/stratification.hpp"

namespace cfcalc {

struct Witness {
    std::string function;  // which function failed, e.g. "phi*hl(phi^2)"
    Simplex simplex;       // first simplex with an odd link value
    std::int64_t value;    // the odd value found there

    friend bool operator==(const Witness&, const Witness&) = default;
};

/// Verdict of a check. verdict is true exactly when failing_witnesses is empty.
struct CheckReport {
    bool verdict = true;
    std::vector<Witness> failing_witnesses;
    std::map<std::string, SimplexSet> characteristic_sets;
    std::map<std::string, bool> statuses;
    std::vector<std::string> notes;

    void finalize() {
        std::sort(failing_witnesses.begin(), failing_witnesses.end(), [](const Witness& a, const Witness& b) {
            if (a.function != b.function) return a.function < b.function;
            return a.simplex < b.simplex;
        });
        verdict = failing_witnesses.empty();
    }
};

/// Records a witness if f is not Euler; returns whether it is.
inline bool check_euler(CheckReport& report, const std::string& name, const ConstructibleFunction& f) {
    if (auto w = euler_witness(f)) {
        report.failing_witnesses.push_back({name, f.ambient().simplex(w->first), w->second});
        return false;
    }
    return true;
}

/// A set is Euler when every point link of its closure has even Euler
/// characteristic. Only vertices may be missing from S.
inline bool is_euler_set(const SimplexSet& s) {
    const SimplexSet closed = closure(s);
    if ((closed - s).dimension() > 0)
        throw Error(ErrorCode::SetNotClosable, "closing the set adds simplices of positive dimension");
    return is_euler(indicator(closed));
}

namespace detail {

inline int mod2(std::int64_t v) { return static_cast<int>(((v % 2) + 2) % 2); }

inline void require_dim_at_most_3(const SimplicialComplex& x) {
    if (x.dimension() > 3)
        throw Error(ErrorCode::DimensionTooHigh, "dimension " + std::to_string(x.dimension()) + " > 3");
}

inline std::string bits(std::initializer_list<int> b) {
    std::string s;
    for (int v : b) s += static_cast<char>('0' + v);
    return s;
}

/// Everything the epsilon and characteristic-set computations share for one space X with
/// a stratification S: phi = half_omega(1_X), its powers, their half links,
/// and the skeleta.
struct AkData {
    Stratification strat;
    ConstructibleFunction one;
    ConstructibleFunction phi, phi2, phi3;
    ConstructibleFunction hl2, hl3;  // half links of phi^2, phi^3
    SimplexSet x0, x1, x2;
    SimplexSet c0, c1;
    std::vector<std::string> warnings;
};

inline AkData make_ak_data(const Stratification& strat) {
    const auto& x = strat.ambient();
    require_dim_at_most_3(x);
    auto one = ConstructibleFunction::constant(x, 1);
    require_euler(one, "1_X");
    auto phi = half_omega(one);
    auto phi2 = phi * phi;
    auto phi3 = phi2 * phi;
    auto hl2 = half_link(phi2);
    auto hl3 = half_link(phi3);
    auto x0 = strat.skeleton(0);
    auto x1 = strat.skeleton(1);
    auto x2 = strat.skeleton(2);

    std::vector<std::string> warnings;
    std::vector<char> c0 = x1.membership();
    std::vector<char> c1 = x1.membership();
    for (std::size_t b = 0; b < strat.strata().size(); ++b) {
        const auto& st = strat.strata()[b];
        if (st.dimension != 2) continue;
        std::optional<int> parity;
        bool constant = true;
        for (SimplexId id : st.members) {
            if (x.dim(id) != 2) continue;
            int p = mod2(phi[id]);
            if (!parity) parity = p;
            constant = constant && *parity == p;
        }
        for (SimplexId id : st.members) constant = constant && mod2(phi[id]) == *parity;
        if (!constant)
            warnings.push_back("NonConstantOnStratum: half_omega(1_X) changes parity on stratum '" + st.label + "'");
        for (SimplexId id : st.members) (*parity == 1 ? c0 : c1)[id] = 1;
    }
    return AkData{strat,
                  std::move(one),
                  std::move(phi),
                  std::move(phi2),
                  std::move(phi3),
                  std::move(hl2),
                  std::move(hl3),
                  std::move(x0),
                  std::move(x1),
                  std::move(x2),
                  SimplexSet(x, std::move(c0)),
                  SimplexSet(x, std::move(c1)),
                  std::move(warnings)};
}

inline void require_euler_skeleta(const Stratification& strat) {
    for (int k = 0; k <= std::max(0, strat.ambient().dimension()); ++k)
        require_euler(indicator(strat.skeleton(k)), "skeleton X^" + std::to_string(k), ErrorCode::SkeletonNotEuler);
}

} // namespace detail

/// C0(X): the 1-skeleton plus the 2-strata where half_omega(1_X) is odd.
/// C1(X): the 1-skeleton plus the remaining 2-strata.
struct CSets {
    SimplexSet c0;
    SimplexSet c1;
};

inline CSets c_sets(const Stratification& strat) {
    auto d = detail::make_ak_data(strat);
    return {d.c0, d.c1};
}

inline CSets c_sets(const SimplicialComplex& x) { return c_sets(Stratification::by_simplices(x)); }

inline SimplexSet c0_set(const SimplicialComplex& x) { return c_sets(x).c0; }

struct EpsilonEntry {
    SimplexId simplex;
    std::array<int, 3> eps;
    std::optional<int> eps3;
    std::array<int, 3> delta;
};

/// A geometric route that did not reproduce the formula value on a 1-simplex.
struct RouteDisagreement {
    std::string route;  // "eps0" or "eps2"
    SimplexId simplex;
    std::int64_t geometric_value;  // the raw link value before dividing by 4 or 2
    int formula_value;
};

struct EpsilonProfile {
    SimplicialComplex ambient;
    bool stratified = false;
    std::vector<EpsilonEntry> entries;  // every simplex of the 1-skeleton X^1, canonical order
    SimplexSet x0, x1, c0, c1;
    std::vector<RouteDisagreement> disagreements;
    std::vector<std::string> warnings;
    bool relations_hold = true;
    std::optional<bool> eps3_matches_omega_form;   // eps2 + eps3 = half_omega(1_X2)
    std::optional<bool> eps3_matches_lambda_form;  // eps3 = eps2 + half_link(1_X2)

    const EpsilonEntry* find(SimplexId id) const {
        for (const auto& e : entries)
            if (e.simplex == id) return &e;
        return nullptr;
    }
};

/// Mod 2 epsilon invariants on the 1-skeleton, with phi = half_omega(1_X):
///   eps0 = hl(phi^2 + phi^3), eps1 = hl(phi^3), eps2 = phi + hl(phi^2)   (mod 2)
/// and delta = (phi, hl(phi^2), hl(phi^3)) mod 2. On every 1-simplex eps0 and
/// eps2 are recomputed from links along the stratum: a quarter of
/// Lambda_S(Lambda_C0 1_X) and half of Lambda_S 1_C0. With an explicit
/// stratification eps3 = half of Lambda_S 1_C1 (mod 2) is added per 1-stratum.
inline EpsilonProfile epsilon_profile(const SimplicialComplex& x, const std::optional<Stratification>& strat_opt = {}) {
    using detail::mod2;
    const bool stratified = strat_opt.has_value();
    const Stratification strat = stratified ? *strat_opt : Stratification::by_simplices(x);
    if (!(strat.ambient() == x)) throw Error(ErrorCode::AmbientMismatch, "stratification of another complex");
    detail::require_dim_at_most_3(x);
    if (stratified) detail::require_euler_skeleta(strat);
    auto d = detail::make_ak_data(strat);

    EpsilonProfile prof{x, stratified, {}, d.x0, d.x1, d.c0, d.c1, {}, d.warnings, true, {}, {}};

    for (SimplexId id : d.x1.members()) {
        EpsilonEntry e{};
        e.simplex = id;
        e.eps = {mod2(d.hl2[id] + d.hl3[id]), mod2(d.hl3[id]), mod2(d.phi[id] + d.hl2[id])};
        e.delta = {mod2(d.phi[id]), mod2(d.hl2[id]), mod2(d.hl3[id])};
        const bool ok = e.delta[0] == (e.eps[0] + e.eps[1] + e.eps[2]) % 2 &&
                        e.delta[1] == (e.eps[0] + e.eps[1]) % 2 && e.delta[2] == e.eps[1];
        prof.relations_hold = prof.relations_hold && ok;
        prof.entries.push_back(e);
    }

    const auto link_c0_of_one = link_along(d.c0, d.one);
    const auto one_c0 = indicator(d.c0);
    const auto one_c1 = indicator(d.c1);

    std::optional<ConstructibleFunction> omega_half_x2, lambda_half_x2;
    if (stratified) {
        const auto one_x2 = indicator(d.x2);
        omega_half_x2 = half_omega(one_x2);
        lambda_half_x2 = half_link(one_x2);
        prof.eps3_matches_omega_form = true;
        prof.eps3_matches_lambda_form = true;
    }

    for (std::size_t b = 0; b < strat.strata().size(); ++b) {
        const auto& st = strat.strata()[b];
        if (st.dimension != 1) continue;
        const SimplexSet sbar = closure(strat.stratum_set(b));
        const auto g0 = link_along(sbar, link_c0_of_one);
        const auto g2 = link_along(sbar, one_c0);
        std::optional<ConstructibleFunction> g3;
        if (stratified) g3 = link_along(sbar, one_c1);

        std::optional<std::array<int, 4>> first;
        for (SimplexId id : st.members) {
            auto* entry = const_cast<EpsilonEntry*>(prof.find(id));
            if (!entry) continue;
            if (x.dim(id) == 1) {
                const bool eps0_ok = g0[id] % 4 == 0 && mod2(g0[id] / 4) == entry->eps[0];
                const bool eps2_ok = g2[id] % 2 == 0 && mod2(g2[id] / 2) == entry->eps[2];
                if (!eps0_ok) prof.disagreements.push_back({"eps0", id, g0[id], entry->eps[0]});
                if (!eps2_ok) prof.disagreements.push_back({"eps2", id, g2[id], entry->eps[2]});
            }
            if (g3) {
                const std::int64_t v = (*g3)[id];
                if (v % 2 != 0)
                    throw Error(ErrorCode::HalfNotIntegral,
                                "link of 1-stratum '" + st.label + "' in C1 has odd Euler characteristic " +
                                    std::to_string(v) + " at " + x.simplex(id).to_string());
                entry->eps3 = mod2(v / 2);
                const int om = mod2((*omega_half_x2)[id]);
                const int la = mod2((*lambda_half_x2)[id]);
                if ((entry->eps[2] + *entry->eps3) % 2 != om) prof.eps3_matches_omega_form = false;
                if (*entry->eps3 != (entry->eps[2] + la) % 2) prof.eps3_matches_lambda_form = false;
            }
            std::array<int, 4> sig{entry->eps[0], entry->eps[1], entry->eps[2], entry->eps3.value_or(0)};
            if (!first) first = sig;
            else if (*first != sig)
                prof.warnings.push_back("NonConstantOnStratum: epsilon invariants vary along stratum '" + st.label +
                                        "'");
        }
    }
    std::sort(prof.warnings.begin(), prof.warnings.end());
    prof.warnings.erase(std::unique(prof.warnings.begin(), prof.warnings.end()), prof.warnings.end());
    return prof;
}

/// Named characteristic sets built from a profile. Each is X^0 together with
/// the 1-simplices of X^1 carrying a given pattern:
///   X_abc   delta = (a,b,c)
///   E_abc   (eps0,eps1,eps2) = (a,b,c)
///   E_abcd  (eps0,eps1,eps2,eps3) = (a,b,c,d)     (stratified profiles only)
///   Z0..Z3  E_111, E_010, E_100, E_110
inline std::map<std::string, SimplexSet> characteristic_sets(const EpsilonProfile& prof) {
    const auto& x = prof.ambient;
    std::map<std::string, std::vector<char>> sets;
    auto slot = [&](const std::string& name) -> std::vector<char>& {
        auto it = sets.find(name);
        if (it == sets.end()) it = sets.emplace(name, prof.x0.membership()).first;
        return it->second;
    };
    for (int a = 0; a < 2; ++a)
        for (int b = 0; b < 2; ++b)
            for (int c = 0; c < 2; ++c) {
                slot("X_" + detail::bits({a, b, c}));
                slot("E_" + detail::bits({a, b, c}));
                if (prof.stratified)
                    for (int e = 0; e < 2; ++e) slot("E_" + detail::bits({a, b, c, e}));
            }
    for (const auto& e : prof.entries) {
        if (x.dim(e.simplex) != 1) continue;
        slot("X_" + detail::bits({e.delta[0], e.delta[1], e.delta[2]}))[e.simplex] = 1;
        slot("E_" + detail::bits({e.eps[0], e.eps[1], e.eps[2]}))[e.simplex] = 1;
        if (prof.stratified && e.eps3)
            slot("E_" + detail::bits({e.eps[0], e.eps[1], e.eps[2], *e.eps3}))[e.simplex] = 1;
    }
    std::map<std::string, SimplexSet> out;
    for (auto& [name, in] : sets) out.emplace(name, SimplexSet(x, std::move(in)));
    out.emplace("Z0", out.at("E_111"));
    out.emplace("Z1", out.at("E_010"));
    out.emplace("Z2", out.at("E_100"));
    out.emplace("Z3", out.at("E_110"));
    return out;
}

inline std::map<std::string, SimplexSet> characteristic_sets(const SimplicialComplex& x) {
    return characteristic_sets(epsilon_profile(x));
}

/// Completely-Euler test for a function whose support has dimension <= 2.
/// With support of dimension <= 1 this is the Euler test. Otherwise phi must be
/// Euler and so must the eleven products phi^a hl(phi)^b hl(phi^2)^c hl(phi^3)^d
/// with b+c+d > 0 and a+b+c+d >= 2.
inline CheckReport completely_euler_dim2(const ConstructibleFunction& phi) {
    const int support_dim = phi.support().dimension();
    if (support_dim > 2)
        throw Error(ErrorCode::DimensionTooHigh, "support of dimension " + std::to_string(support_dim) + " > 2");
    CheckReport report;
    const bool euler = check_euler(report, "phi", phi);
    report.statuses["euler"] = euler;
    if (euler && support_dim >= 2) {
        const auto hl1 = half_link(phi);
        const auto phi2 = phi * phi;
        const auto hl2 = half_link(phi2);
        const auto hl3 = half_link(phi2 * phi);
        const auto one = ConstructibleFunction::constant(phi.ambient(), 1);
        for (int a = 0; a < 2; ++a)
            for (int b = 0; b < 2; ++b)
                for (int c = 0; c < 2; ++c)
                    for (int dd = 0; dd < 2; ++dd) {
                        if (b + c + dd == 0 || a + b + c + dd < 2) continue;
                        ConstructibleFunction f = one;
                        std::string name;
                        auto factor = [&](bool use, const ConstructibleFunction& g, const char* label) {
                            if (!use) return;
                            f = f * g;
                            name += (name.empty() ? "" : "*") + std::string(label);
                        };
                        factor(a, phi, "phi");
                        factor(b, hl1, "hl(phi)");
                        factor(c, hl2, "hl(phi^2)");
                        factor(dd, hl3, "hl(phi^3)");
                        check_euler(report, name, f);
                    }
    }
    if (support_dim <= 1) report.notes.push_back("support of dimension <= 1: completely Euler iff Euler");
    report.finalize();
    return report;
}

/// Completely-Euler test for 1_X, dim X <= 3. With phi = half_omega(1_X) the
/// functions phi*hl(phi^2), phi*hl(phi^3), hl(phi^2)*hl(phi^3) and
/// phi*hl(phi^2)*hl(phi^3) must be Euler. The equivalent set form (X_111,
/// X_101, X_011, X_110 Euler) and the Z-set form are evaluated too and must
/// agree; for dim X <= 2 the verdict must reduce to the Euler test of 1_X.
inline CheckReport completely_euler_dim3(const SimplicialComplex& x) {
    detail::require_dim_at_most_3(x);
    CheckReport report;
    const auto one = ConstructibleFunction::constant(x, 1);
    const bool euler = check_euler(report, "1_X", one);
    report.statuses["euler"] = euler;
    if (!euler) {
        report.finalize();
        return report;
    }
    const auto prof = epsilon_profile(x);
    auto d = detail::make_ak_data(Stratification::by_simplices(x));

    check_euler(report, "phi*hl(phi^2)", d.phi * d.hl2);
    check_euler(report, "phi*hl(phi^3)", d.phi * d.hl3);
    check_euler(report, "hl(phi^2)*hl(phi^3)", d.hl2 * d.hl3);
    check_euler(report, "phi*hl(phi^2)*hl(phi^3)", d.phi * d.hl2 * d.hl3);
    const bool function_form = report.failing_witnesses.empty();

    report.statuses["hl(phi^2) euler"] = is_euler(d.hl2);
    report.statuses["hl(phi^3) euler"] = is_euler(d.hl3);

    report.characteristic_sets = characteristic_sets(prof);
    bool set_form = true;
    for (const char* name : {"X_111", "X_101", "X_011", "X_110"}) {
        const bool ok = is_euler_set(report.characteristic_sets.at(name));
        report.statuses[std::string(name) + " euler"] = ok;
        set_form = set_form && ok;
    }
    bool z_form = true;
    for (const char* name : {"Z0", "Z1", "Z2", "Z3"}) {
        const bool ok = is_euler_set(report.characteristic_sets.at(name));
        report.statuses[std::string(name) + " euler"] = ok;
        z_form = z_form && ok;
    }
    report.statuses["set form"] = set_form;
    report.statuses["Z-set form"] = z_form;
    if (set_form != function_form || z_form != function_form)
        throw Error(ErrorCode::FormulaDisagreement, "product and characteristic-set verdicts differ");
    if (x.dimension() <= 2 && !function_form)
        throw Error(ErrorCode::FormulaDisagreement, "a space of dimension <= 2 that is Euler failed the product test");
    if (x.dimension() <= 2) report.notes.push_back("dimension <= 2: completely Euler iff Euler");
    report.finalize();
    return report;
}

/// Completely-Euler test for the family of skeleta {1_X^i} of a stratification
/// with Euler skeleta. Twelve functions supported in X^1 are tested:
/// phi*1_X1, and phi^a hl(phi^2)^b hl(phi^3)^c hl(1_X2)^d for d = 0 with
/// a+b+c >= 2 and d = 1 with a+b+c > 0. The matching twelve characteristic
/// sets are evaluated too and must agree. The E_abcd sets are emitted.
inline CheckReport stratified_check(const Stratification& strat) {
    using detail::mod2;
    const auto& x = strat.ambient();
    detail::require_dim_at_most_3(x);
    detail::require_euler_skeleta(strat);
    const auto prof = epsilon_profile(x, strat);
    auto d = detail::make_ak_data(strat);
    const auto hx2 = half_link(indicator(d.x2));

    CheckReport report;
    check_euler(report, "phi*1_X1", d.phi * indicator(d.x1));
    const auto one = ConstructibleFunction::constant(x, 1);
    for (int a = 0; a < 2; ++a)
        for (int b = 0; b < 2; ++b)
            for (int c = 0; c < 2; ++c)
                for (int e = 0; e < 2; ++e) {
                    const int s = a + b + c;
                    if ((e == 0 && s < 2) || (e == 1 && s == 0)) continue;
                    ConstructibleFunction f = one;
                    std::string name;
                    auto factor = [&](bool use, const ConstructibleFunction& g, const char* label) {
                        if (!use) return;
                        f = f * g;
                        name += (name.empty() ? "" : "*") + std::string(label);
                    };
                    factor(a, d.phi, "phi");
                    factor(b, d.hl2, "hl(phi^2)");
                    factor(c, d.hl3, "hl(phi^3)");
                    factor(e, hx2, "hl(1_X2)");
                    check_euler(report, name, f);
                }
    const bool function_form = report.failing_witnesses.empty();

    // X_{delta,e}: pattern (phi, hl(phi^2), hl(phi^3)) = delta and hl(1_X2) = e on 1-simplices of X^1
    std::map<std::string, std::vector<char>> pattern_sets;
    for (SimplexId id : d.x1.members()) {
        if (x.dim(id) != 1) continue;
        const std::string key = detail::bits({mod2(d.phi[id]), mod2(d.hl2[id]), mod2(d.hl3[id])}) + "," +
                                detail::bits({mod2(hx2[id])});
        auto it = pattern_sets.find(key);
        if (it == pattern_sets.end()) it = pattern_sets.emplace(key, d.x0.membership()).first;
        it->second[id] = 1;
    }
    auto pattern = [&](const std::string& key) {
        auto it = pattern_sets.find(key);
        return it == pattern_sets.end() ? d.x0 : SimplexSet(x, it->second);
    };
    std::vector<std::string> keys = {"111,0", "101,0", "011,0", "110,0"};
    for (const char* delta : {"001", "010", "011", "100", "101", "110", "111"}) keys.push_back(std::string(delta) + ",1");
    keys.push_back("100,0");  // phi odd, everything else even
    bool set_form = true;
    for (const auto& key : keys) {
        const SimplexSet s = pattern(key);
        const bool ok = is_euler_set(s);
        report.characteristic_sets.emplace("X_" + key, s);
        report.statuses["X_" + key + " euler"] = ok;
        set_form = set_form && ok;
    }
    report.statuses["set form"] = set_form;
    if (set_form != function_form)
        throw Error(ErrorCode::FormulaDisagreement, "stratified product and characteristic-set verdicts differ");

    for (auto& [name, set] : characteristic_sets(prof)) {
        if (name.size() == 6 && name.rfind("E_", 0) == 0) {
            report.statuses[name + " euler"] = is_euler_set(set);
            report.characteristic_sets.emplace(name, set);
        }
    }
    if (prof.eps3_matches_omega_form) report.statuses["eps3 matches eps2 + half_omega(1_X2)"] = *prof.eps3_matches_omega_form;
    if (prof.eps3_matches_lambda_form)
        report.statuses["eps3 matches eps2 + half_link(1_X2)"] = *prof.eps3_matches_lambda_form;
    for (const auto& w : prof.warnings) report.notes.push_back(w);
    report.finalize();
    return report;
}

struct ResidueClass {
    SimplexSet component;
    std::vector<std::int64_t> residues;  // values mod 2^(k+1) on the component's top simplices, in [0, 2^(k+1))
    bool constant;
};

struct CandidateReport {
    std::string name;
    std::vector<ResidueClass> classes;
};

struct DivisibilityReport {
    int k = 0;
    std::optional<int> min_valuation;  // over the support; empty when phi = 0
    bool divisible = true;             // every value divisible by 2^k
    std::optional<SimplexId> least_divisible;
    std::vector<CandidateReport> candidates;
};

struct IteratedLinkResult {
    ConstructibleFunction phi;
    DivisibilityReport report;
};

/// phi = Lambda_{Y1} ... Lambda_{Yk} 1_X, with a report of its 2-adic
/// behaviour. Divisibility by 2^k is reported, not enforced: it holds for
/// algebraic sets, not for arbitrary complexes.
inline IteratedLinkResult iterated_link(const SimplicialComplex& x, const std::vector<SimplexSet>& ys,
                                        const std::vector<std::pair<std::string, SimplexSet>>& candidates = {}) {
    for (const auto& y : ys) {
        if (!(y.ambient() == x)) throw Error(ErrorCode::AmbientMismatch, "iterated_link set of another complex");
        detail::require_closed(y, "iterated_link set");
    }
    auto phi = ConstructibleFunction::constant(x, 1);
    for (auto it = ys.rbegin(); it != ys.rend(); ++it) phi = link_along(*it, phi);

    DivisibilityReport rep;
    rep.k = static_cast<int>(ys.size());
    for (SimplexId i = 0; i < x.size(); ++i) {
        auto v = two_adic_valuation(phi[i]);
        if (!v) continue;
        if (!rep.min_valuation || *v < *rep.min_valuation) {
            rep.min_valuation = *v;
            rep.least_divisible = i;
        }
    }
    rep.divisible = !rep.min_valuation || *rep.min_valuation >= rep.k;

    const std::int64_t modulus = rep.k + 1 >= 63 ? 0 : (std::int64_t{1} << (rep.k + 1));
    for (const auto& [name, set] : candidates) {
        CandidateReport cr{name, {}};
        for (auto& comp : top_components(set)) {
            std::vector<std::int64_t> res;
            for (SimplexId id : comp.members())
                res.push_back(modulus ? ((phi[id] % modulus) + modulus) % modulus : phi[id]);
            const bool constant = std::adjacent_find(res.begin(), res.end(), std::not_equal_to<>()) == res.end();
            cr.classes.push_back({std::move(comp), std::move(res), constant});
        }
        rep.candidates.push_back(std::move(cr));
    }
    return {std::move(phi), std::move(rep)};
}

/// Membership of phi and its half link in the ideal A_X, and Euler status of
/// phi, hl(phi) and half_omega(phi).
inline CheckReport half_closure_suite(const ConstructibleFunction& phi) {
    CheckReport report;
    const auto& x = phi.ambient();
    auto ideal_status = [&](const std::string& name, const ConstructibleFunction& f) {
        auto v = a_ideal_violation(f);
        report.statuses[name + " in A_X"] = !v;
        if (v)
            report.failing_witnesses.push_back(
                {name + " in A_X (k=" + std::to_string(v->k) + ")", x.simplex(v->simplex), f[v->simplex]});
    };
    ideal_status("phi", phi);
    const bool euler = check_euler(report, "phi", phi);
    report.statuses["phi euler"] = euler;
    if (euler) {
        const auto hl = half_link(phi);
        const auto ho = half_omega(phi);
        ideal_status("hl(phi)", hl);
        report.statuses["hl(phi) euler"] = check_euler(report, "hl(phi)", hl);
        report.statuses["half_omega(phi) euler"] = check_euler(report, "half_omega(phi)", ho);
    } else {
        report.notes.push_back("half operators undefined: phi is not Euler");
    }
    report.finalize();
    return report;
}

} // namespace cfcalc
