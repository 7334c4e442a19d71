#include <doctest.h>

#include <algorithm>

#include "bsato/groebner.hpp"
#include "bsato/parse.hpp"
#include "support/oracles.hpp"
#include "support/random_gen.hpp"

using namespace bsato;

namespace {

Poly P(const std::string& text, Context ctx) { return parse_poly(text, ctx); }

std::vector<Monomial> leading_monomials(const GroebnerBasis& gb) { return gb.leading; }

// direct Buchberger-criterion check: every S-polynomial reduces to zero
bool all_spolys_reduce_to_zero(const GroebnerBasis& gb) {
    for (std::size_t i = 0; i < gb.elements.size(); ++i) {
        for (std::size_t j = i + 1; j < gb.elements.size(); ++j) {
            Monomial l = Monomial::lcm(gb.leading[i], gb.leading[j]);
            Poly s = Poly::term(gb.ctx, l.divided_by(gb.leading[i]), 1) * gb.elements[i] -
                     Poly::term(gb.ctx, l.divided_by(gb.leading[j]), 1) * gb.elements[j];
            if (!normal_form(s, gb).is_zero()) return false;
        }
    }
    return true;
}

bool is_reduced_basis(const GroebnerBasis& gb) {
    for (std::size_t i = 0; i < gb.elements.size(); ++i) {
        // monic
        if (gb.elements[i].terms().at(gb.leading[i]) != 1) return false;
        for (const auto& [m, c] : gb.elements[i].terms())
            for (std::size_t j = 0; j < gb.elements.size(); ++j)
                if (j != i && gb.leading[j].divides(m)) return false;
    }
    return true;
}

} // namespace

TEST_CASE("buchberger on already-reduced inputs") {
    Context ctx{4, false};
    Ideal ideal(ctx, {P("x1", ctx), P("x2", ctx), P("x3", ctx), P("x4", ctx)});
    GroebnerBasis gb = buchberger(ideal, MonomialOrder::grevlex(4));
    CHECK(gb.elements.size() == 4);
    CHECK(is_reduced_basis(gb));
    CHECK(all_spolys_reduce_to_zero(gb));
}

TEST_CASE("buchberger normalizes monomial generators to monic") {
    Context ctx{3, false};
    Ideal ideal(ctx, {P("2*x1", ctx), P("3*x2^2", ctx), P("4*x3^3", ctx)});
    GroebnerBasis gb = buchberger(ideal, MonomialOrder::grevlex(3));
    std::vector<Poly> expected = {P("x1", ctx), P("x2^2", ctx), P("x3^3", ctx)};
    REQUIRE(gb.elements.size() == 3);
    for (const auto& e : expected)
        CHECK(std::find(gb.elements.begin(), gb.elements.end(), e) != gb.elements.end());
}

TEST_CASE("buchberger desk example x1^2+x2^2, x1*x2") {
    Context ctx{2, false};
    Ideal ideal(ctx, {P("x1^2+x2^2", ctx), P("x1*x2", ctx)});
    GroebnerBasis gb = buchberger(ideal, MonomialOrder::grevlex(2));
    auto lms = leading_monomials(gb);
    std::vector<Monomial> expected = {Monomial({2, 0}), Monomial({1, 1}), Monomial({0, 3})};
    REQUIRE(lms.size() == 3);
    for (const auto& m : expected)
        CHECK(std::find(lms.begin(), lms.end(), m) != lms.end());
    CHECK(is_reduced_basis(gb));
    CHECK(all_spolys_reduce_to_zero(gb));
}

TEST_CASE("normal_form examples") {
    Context ctx4{4, false};
    GroebnerBasis gb = buchberger(
        Ideal(ctx4, {P("x1", ctx4), P("x2", ctx4), P("x3", ctx4), P("x4", ctx4)}),
        MonomialOrder::grevlex(4));
    CHECK(normal_form(P("x1^2", ctx4), gb).is_zero());

    Context ctx2{2, false};
    GroebnerBasis gb2 = buchberger(Ideal(ctx2, {P("x2", ctx2)}), MonomialOrder::grevlex(2));
    CHECK(normal_form(P("x1+7", ctx2), gb2) == P("x1+7", ctx2));

    GroebnerBasis gb3 = buchberger(Ideal(ctx2, {P("x1^2-x2", ctx2)}), MonomialOrder::grevlex(2));
    CHECK(normal_form(P("x1^3", ctx2), gb3) == P("x1*x2", ctx2));
}

TEST_CASE("normal_form is linear and decides membership for monomial ideals") {
    testgen::Rng rng(31337);
    Context ctx{3, false};
    GroebnerBasis gb = buchberger(
        Ideal(ctx, {P("x1^2", ctx), P("x2^3", ctx), P("x1*x3", ctx)}),
        MonomialOrder::grevlex(3));
    for (int t = 0; t < 30; ++t) {
        Poly p = testgen::random_poly(rng, ctx, 6, 5);
        Poly q = testgen::random_poly(rng, ctx, 6, 5);
        CHECK(normal_form(p + q, gb) ==
              normal_form(normal_form(p, gb) + normal_form(q, gb), gb));
        // membership in a monomial ideal == every term divisible by a generator
        Poly nf = normal_form(p, gb);
        bool member = true;
        for (const auto& [m, c] : p.terms()) {
            bool divisible = Monomial({2, 0, 0}).divides(m) ||
                             Monomial({0, 3, 0}).divides(m) ||
                             Monomial({1, 0, 1}).divides(m);
            if (!divisible) member = false;
        }
        CHECK(nf.is_zero() == member);
    }
}

TEST_CASE("quotient_basis examples") {
    Context ctx{3, false};
    SUBCASE("maximal ideal") {
        GroebnerBasis gb = buchberger(
            Ideal(ctx, {P("x1", ctx), P("x2", ctx), P("x3", ctx)}), MonomialOrder::grevlex(3));
        QuotientBasis qb = quotient_basis(gb, WeightSystem({1, 1, 1}));
        REQUIRE(qb.dimension() == 1);
        CHECK(qb.monomials[0].is_one());
        CHECK(qb.weights[0] == 0);
    }
    SUBCASE("Milnor ideal of x1^2+x2^3+x3^4") {
        WeightSystem w({Rational(1, 2), Rational(1, 3), Rational(1, 4)});
        GroebnerBasis gb = buchberger(
            Ideal(ctx, {P("2*x1", ctx), P("3*x2^2", ctx), P("4*x3^3", ctx)}),
            MonomialOrder(OrderKind::WGrevlex, w));
        QuotientBasis qb = quotient_basis(gb, w);
        REQUIRE(qb.dimension() == 6); // (2-1)(3-1)(4-1), product oracle
        std::vector<Rational> expected = {Rational(0),      Rational(1, 4), Rational(1, 3),
                                          Rational(1, 2),   Rational(7, 12), Rational(5, 6)};
        CHECK(qb.weights == expected);
        // cross-check against brute-force staircase enumeration
        auto stairs = oracle::monomial_ideal_staircase(
            {Monomial({1, 0, 0}), Monomial({0, 2, 0}), Monomial({0, 0, 3})}, {1, 2, 3});
        CHECK(stairs.size() == qb.dimension());
    }
    SUBCASE("infinite-dimensional quotient") {
        Context ctx2{2, false};
        GroebnerBasis gb = buchberger(Ideal(ctx2, {P("x1", ctx2)}), MonomialOrder::grevlex(2));
        CHECK_THROWS_AS(quotient_basis(gb, WeightSystem({1, 1})), InfiniteDimensional);
    }
    SUBCASE("unit ideal has zero-dimensional basis") {
        GroebnerBasis gb = buchberger(Ideal(ctx, {P("x1+1", ctx), P("x1", ctx)}),
                                      MonomialOrder::grevlex(3));
        CHECK(gb.contains_unit());
        CHECK(quotient_basis(gb, WeightSystem({1, 1, 1})).dimension() == 0);
    }
}

TEST_CASE("Brieskorn-Pham quotient dimensions match the product formula") {
    testgen::Rng rng(4242);
    for (int t = 0; t < 10; ++t) {
        int n = rng.uniform(1, 3);
        Context ctx{n, false};
        std::vector<Poly> gens;
        std::size_t expected = 1;
        std::vector<Rational> wr;
        for (int i = 0; i < n; ++i) {
            int a = rng.uniform(2, 5);
            expected *= static_cast<std::size_t>(a - 1);
            Monomial m(static_cast<std::size_t>(n));
            m[static_cast<std::size_t>(i)] = a - 1;
            gens.push_back(Poly::term(ctx, m, a)); // d/dx_i of x_i^a
            wr.push_back(Rational(1, a));
        }
        WeightSystem w(wr);
        GroebnerBasis gb = buchberger(Ideal(ctx, gens), MonomialOrder(OrderKind::WGrevlex, w));
        CHECK(quotient_basis(gb, w).dimension() == expected);
    }
}

TEST_CASE("random weighted-homogeneous ideals: criterion, gradedness, order independence") {
    testgen::Rng rng(555);
    int produced = 0;
    while (produced < 12) {
        int n = rng.uniform(1, 3);
        Context ctx{n, false};
        std::vector<long long> sw;
        std::vector<Rational> wr;
        for (int i = 0; i < n; ++i) {
            int wi = rng.uniform(1, 3);
            sw.push_back(wi);
            wr.push_back(wi);
        }
        WeightSystem w(wr);
        std::vector<Poly> gens;
        for (int i = 0; i < n; ++i) {
            int a = rng.uniform(2, 3);
            Monomial m(static_cast<std::size_t>(n));
            m[static_cast<std::size_t>(i)] = a;
            Poly g = Poly::term(ctx, m, 1);
            g += testgen::random_homogeneous(rng, ctx, sw, a * sw[static_cast<std::size_t>(i)], 2);
            if (g.is_zero()) g = Poly::term(ctx, m, 1);
            gens.push_back(g);
        }
        MonomialOrder o1(OrderKind::WGrevlex, w);
        MonomialOrder o2(OrderKind::WGrlex, w);
        GroebnerBasis g1 = buchberger(Ideal(ctx, gens), o1);
        for (const auto& e : g1.elements) CHECK(is_weighted_homogeneous(e, w));
        CHECK(all_spolys_reduce_to_zero(g1));
        CHECK(is_reduced_basis(g1));
        QuotientBasis q1;
        try {
            q1 = quotient_basis(g1, w);
        } catch (const InfiniteDimensional&) {
            GroebnerBasis g2 = buchberger(Ideal(ctx, gens), o2);
            CHECK_THROWS_AS(quotient_basis(g2, w), InfiniteDimensional);
            continue;
        }
        GroebnerBasis g2 = buchberger(Ideal(ctx, gens), o2);
        QuotientBasis q2 = quotient_basis(g2, w);
        CHECK(q1.weights == q2.weights); // weight multiset is order-independent
        ++produced;
    }
}

TEST_CASE("buchberger is deterministic") {
    Context ctx{3, false};
    std::vector<Poly> gens = {P("x1^2+x2^3+x3^4", ctx), P("x1^2-x2^3+2*x3^4", ctx),
                              P("x1*x2^2", ctx), P("x1*x3^3", ctx), P("x2^2*x3^3", ctx)};
    WeightSystem w({Rational(1, 2), Rational(1, 3), Rational(1, 4)});
    MonomialOrder ord(OrderKind::WGrevlex, w);
    GroebnerBasis a = buchberger(Ideal(ctx, gens), ord);
    GroebnerBasis b = buchberger(Ideal(ctx, gens), ord);
    CHECK(a.elements == b.elements);
}

TEST_CASE("resource limits raise typed errors") {
    Context ctx{2, false};
    std::vector<Poly> gens = {P("x1^2-x2", ctx), P("x2^3-x1", ctx)};
    BuchbergerLimits tight;
    tight.degree_bound = 1;
    CHECK_THROWS_AS(buchberger(Ideal(ctx, gens), MonomialOrder::grevlex(2), tight),
                    ResourceLimit);
    BuchbergerLimits tiny_budget;
    tiny_budget.spair_budget = 0;
    CHECK_THROWS_AS(buchberger(Ideal(ctx, gens), MonomialOrder::grevlex(2), tiny_budget),
                    ResourceLimit);
}

TEST_CASE("ideal construction rejects zero generators and dedupes") {
    Context ctx{2, false};
    CHECK_THROWS_AS(Ideal(ctx, {Poly::zero(ctx)}), ZeroPolynomial);
    Ideal ideal(ctx, {P("2*x1", ctx), P("x1", ctx), P("x1", ctx)});
    CHECK(ideal.gens.size() == 1); // monic normalization merges them
}
