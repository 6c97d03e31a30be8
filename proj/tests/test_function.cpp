#include <catch_amalgamated.hpp>

#include "support/generators.hpp"
#include "support/oracles.hpp"

using namespace cfcalc;

namespace {

ConstructibleFunction values_on(const SimplicialComplex& k, std::vector<std::pair<Simplex, std::int64_t>> vals) {
    std::vector<std::int64_t> v(k.size(), 0);
    for (auto& [s, x] : vals) v[k.id_of(s)] = x;
    return ConstructibleFunction(k, std::move(v));
}

std::int64_t coeff(const SimplicialComplex& k, const std::vector<std::int64_t>& c, const Simplex& s) {
    return c[k.id_of(s)];
}

} // namespace

TEST_CASE("indicator") {
    auto s2 = fixtures::sphere_boundary(3);
    auto one = indicator(SimplexSet::all(s2));
    CHECK(std::all_of(one.values().begin(), one.values().end(), [](auto v) { return v == 1; }));

    auto path = fixtures::path();
    auto e = indicator(SimplexSet::of_simplices(path, {Simplex{"a", "b"}}));
    CHECK(e.at(Simplex{"a", "b"}) == 1);
    CHECK(e.support().count() == 1);
    CHECK(indicator(SimplexSet(path)).is_zero());
}

TEST_CASE("ring operations") {
    gen::Rng rng(3);
    auto k = fixtures::torus();
    auto s = cfcalc::random::subset(rng, k);
    auto t = cfcalc::random::subset(rng, k);
    CHECK(indicator(s) + indicator(s) == 2 * indicator(s));
    CHECK(indicator(s) * indicator(t) == indicator(s & t));
    auto phi = gen::function(rng, k);
    CHECK((phi - phi).is_zero());
    CHECK(restrict(phi, s) == phi * indicator(s));

    auto other = fixtures::sphere_boundary(3);
    CHECK_THROWS_AS(phi + ConstructibleFunction::constant(other, 1), Error);

    auto big = ConstructibleFunction::constant(k, INT64_MAX);
    CHECK_THROWS_MATCHES(big + big, Error, Catch::Matchers::Predicate<Error>([](const Error& e) {
                             return e.code() == ErrorCode::IntegerOverflow;
                         }));
    CHECK_THROWS_AS(big * big, Error);
    CHECK_THROWS_AS(integral(ConstructibleFunction::constant(fixtures::cycle(3), INT64_MAX)), Error);
}

TEST_CASE("Euler integral") {
    CHECK(integral(ConstructibleFunction::constant(fixtures::sphere_boundary(3), 1)) == 2);
    auto path = fixtures::path();
    CHECK(integral(indicator(SimplexSet::of_simplices(path, {Simplex{"a", "b"}}))) == -1);

    gen::Rng rng(5);
    for (int i = 0; i < 50; ++i) {
        auto k = gen::complex(rng);
        auto phi = gen::function(rng, k);
        auto psi = gen::function(rng, k);
        CHECK(integral(phi + psi) == integral(phi) + integral(psi));
        CHECK(integral(phi) == oracle::integral(phi));
        CHECK(integral(link_op(phi)) == 0);
    }
}

TEST_CASE("closed presentations") {
    auto edge = build_complex({{"a", "b"}});
    auto c = mobius_closed_coeffs(ConstructibleFunction::constant(edge, 1));
    CHECK(coeff(edge, c, Simplex{"a", "b"}) == 1);
    CHECK(coeff(edge, c, Simplex{"a"}) == 0);
    CHECK(coeff(edge, c, Simplex{"b"}) == 0);

    auto open = values_on(edge, {{Simplex{"a", "b"}, 1}});
    c = mobius_closed_coeffs(open);
    CHECK(coeff(edge, c, Simplex{"a", "b"}) == 1);
    CHECK(coeff(edge, c, Simplex{"a"}) == -1);
    CHECK(coeff(edge, c, Simplex{"b"}) == -1);

    auto tri = fixtures::cycle(3);
    c = mobius_closed_coeffs(ConstructibleFunction::constant(tri, 1));
    for (SimplexId i = 0; i < tri.size(); ++i) CHECK(c[i] == (tri.dim(i) == 1 ? 1 : -1));

    gen::Rng rng(7);
    for (int i = 0; i < 80; ++i) {
        auto k = gen::complex(rng);
        auto phi = gen::function(rng, k);
        auto coeffs = mobius_closed_coeffs(phi);
        CHECK(coeffs == oracle::closed_coeffs(phi));
        CHECK(from_closed_coeffs(k, coeffs) == phi);
    }
}

TEST_CASE("canonical closed decomposition") {
    auto edge = build_complex({{"a", "b"}});
    auto open = SimplexSet::of_simplices(edge, {Simplex{"a", "b"}});
    auto d = canonical_closed_decomposition(open);
    REQUIRE(d.size() == 2);
    CHECK(d[0] == SimplexSet::all(edge));
    CHECK(d[1] == SimplexSet::of_simplices(edge, {Simplex{"a"}, Simplex{"b"}}));

    auto half_open = SimplexSet::of_simplices(edge, {Simplex{"a", "b"}, Simplex{"a"}});
    d = canonical_closed_decomposition(half_open);
    REQUIRE(d.size() == 2);
    CHECK(d[1] == SimplexSet::of_simplices(edge, {Simplex{"b"}}));

    CHECK(canonical_closed_decomposition(SimplexSet::all(edge)).size() == 1);

    gen::Rng rng(9);
    for (int i = 0; i < 80; ++i) {
        auto k = gen::complex(rng);
        auto s = cfcalc::random::subset(rng, k, 0.5);
        auto pieces = canonical_closed_decomposition(s);
        CHECK(oracle::alternating_sum(pieces, k) == indicator(s));
        for (std::size_t j = 0; j < pieces.size(); ++j) {
            CHECK(pieces[j].is_closed());
            if (j) CHECK(pieces[j].dimension() < pieces[j - 1].dimension());
        }
        std::int64_t by_pieces = 0;
        for (std::size_t j = 0; j < pieces.size(); ++j)
            by_pieces += (j % 2 == 0 ? 1 : -1) * euler_char(pieces[j]);
        CHECK(integral(indicator(s)) == by_pieces);
    }
}

TEST_CASE("the ideal A_X") {
    auto graph = fixtures::cycle(3);
    CHECK(in_A_ideal(ConstructibleFunction::constant(graph, 2)));
    CHECK_FALSE(in_A_ideal(ConstructibleFunction::constant(graph, 1)));
    auto v = a_ideal_violation(ConstructibleFunction::constant(graph, 1));
    REQUIRE(v);
    CHECK(v->k == 1);

    auto tri = build_complex({{"a", "b", "c"}});
    gen::Rng rng(13);
    for (int i = 0; i < 20; ++i) CHECK(in_A_ideal(4 * gen::function(rng, tri)));
    // 2 on a triangle fails at k = 2
    auto two = ConstructibleFunction::constant(tri, 2);
    REQUIRE(a_ideal_violation(two));
    CHECK(a_ideal_violation(two)->k == 2);
    CHECK(in_A_ideal(ConstructibleFunction(tri)));

    for (int i = 0; i < 60; ++i) {
        auto k = gen::complex(rng);
        auto a = gen::ideal_member(rng, k);
        auto b = gen::ideal_member(rng, k);
        CHECK(in_A_ideal(a));
        CHECK(in_A_ideal(a + b));
        CHECK(in_A_ideal(a * gen::function(rng, k)));
    }
}

TEST_CASE("2-adic helpers") {
    CHECK(two_adic_valuation(12) == 2);
    CHECK(two_adic_valuation(-8) == 3);
    CHECK_FALSE(two_adic_valuation(0));
    CHECK(divisible_by_pow2(INT64_MIN, 63));
    CHECK_FALSE(divisible_by_pow2(3, 1));
    CHECK(bit_length(5) == 3);
}
