#include <doctest.h>

#include "bsato/parse.hpp"
#include "bsato/poly.hpp"
#include "bsato/weights.hpp"
#include "support/random_gen.hpp"

using namespace bsato;

namespace {
Context ctx3{3, false};
Context ctx4{4, false};

Poly P(const std::string& text, Context ctx = ctx4) { return parse_poly(text, ctx); }
} // namespace

TEST_CASE("rational normalization invariants") {
    Rational a(6, 4);
    CHECK(num(a) == 3);
    CHECK(den(a) == 2);
    Rational b = Rational(1, 3) + Rational(1, 6); // exact: 1/2
    CHECK(b == Rational(1, 2));
    Rational c = Rational(-2) / Rational(-4);
    CHECK(c == Rational(1, 2));
    CHECK(den(c) > 0);
    CHECK(den(Rational(1) / Rational(-3)) > 0); // sign normalizes into the numerator
    CHECK(parse_rational("3/2") == Rational(3, 2));
    CHECK(parse_rational("-7") == -7);
    CHECK(to_string(Rational(-3, 2)) == "-3/2");
    CHECK(to_string(Rational(5)) == "5");
    CHECK_THROWS_AS(parse_rational("1/0"), ParseError);
    CHECK_THROWS_AS(parse_rational("x"), ParseError);
}

TEST_CASE("poly arithmetic basics") {
    CHECK(P("x1^2+x2^2").derivative(0) == P("2*x1"));
    CHECK(P("x1+x2") * P("x1-x2") == P("x1^2-x2^2"));
    Poly p = P("3*x1*x2 - 1/2*x3^4 + 7");
    CHECK((p + (-p)).is_zero());
    CHECK(p - p == Poly::zero(ctx4));
    CHECK_THROWS_AS(P("x1", ctx3) + P("x1", ctx4), ContextMismatch);
}

TEST_CASE("ring axioms and Leibniz on random triples") {
    testgen::Rng rng(20260810);
    for (int t = 0; t < 60; ++t) {
        Context ctx{rng.uniform(1, 4), false};
        Poly p = testgen::random_poly(rng, ctx, 6, 5);
        Poly q = testgen::random_poly(rng, ctx, 6, 5);
        Poly r = testgen::random_poly(rng, ctx, 6, 5);
        CHECK((p + q) + r == p + (q + r));
        CHECK(p + q == q + p);
        CHECK(p * q == q * p);
        CHECK(p * (q + r) == p * q + p * r);
        int i = rng.uniform(0, ctx.nvars - 1);
        CHECK((p * q).derivative(i) == p.derivative(i) * q + p * q.derivative(i));
    }
}

TEST_CASE("weighted_degree") {
    WeightSystem w1111({1, 1, 1, 1});
    CHECK(weighted_degree(P("x1^2+x2^2+x3^2+x4^2"), w1111) == 2);
    CHECK(weighted_degree(P("x1"), w1111) == 1);
    WeightSystem frac({Rational(1, 2), Rational(1, 3), Rational(1, 4)});
    CHECK(weighted_degree(P("x1^2+x2^3+x3^4", ctx3), frac) == 1);
    CHECK(!try_weighted_degree(P("x1^2+x2^3", ctx3), WeightSystem({1, 1, 1})).has_value());
    CHECK_THROWS_AS(weighted_degree(P("x1+x2^2", ctx3), WeightSystem({1, 1, 1})),
                    NotHomogeneous);
    CHECK_THROWS_AS(weighted_degree(Poly::zero(ctx3), WeightSystem({1, 1, 1})),
                    ZeroPolynomial);
}

TEST_CASE("weighted degree is additive on homogeneous products") {
    testgen::Rng rng(7);
    for (int t = 0; t < 25; ++t) {
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
        // attainable target degrees: weighted degrees of random monomials
        auto target = [&]() {
            Monomial m = testgen::random_monomial(rng, n, 3);
            long long d = 0;
            for (int i = 0; i < n; ++i) d += m[static_cast<std::size_t>(i)] * sw[static_cast<std::size_t>(i)];
            return d;
        };
        Poly p = testgen::random_homogeneous(rng, ctx, sw, target(), 4);
        Poly q = testgen::random_homogeneous(rng, ctx, sw, target(), 4);
        if ((p * q).is_zero()) continue;
        CHECK(weighted_degree(p * q, w) == weighted_degree(p, w) + weighted_degree(q, w));
    }
}

TEST_CASE("infer_weights") {
    CHECK(infer_weights({P("x1^2+x2^3+x3^4", ctx3)}, {Rational(1)}) ==
          WeightSystem({Rational(1, 2), Rational(1, 3), Rational(1, 4)}));
    CHECK(infer_weights({P("x1^2+x2^2+x3^2+x4^2"), P("x1")}, {Rational(2), Rational(1)}) ==
          WeightSystem({1, 1, 1, 1}));
    Context ctx2{2, false};
    CHECK_THROWS_AS(infer_weights({P("x1+x2", ctx2), P("x1*x2", ctx2)},
                                  {Rational(1), Rational(1)}),
                    NoSolution);
    // positive-dimensional solution space: free weights become 1
    CHECK(infer_weights({P("x1^2", ctx2)}, {Rational(2)}) == WeightSystem({1, 1}));
}

TEST_CASE("infer_unit_weights joint solve") {
    WeightSystem w = infer_unit_weights({P("x1^2+x2^2+x3^2+x4^2")}, P("x1"));
    CHECK(w == WeightSystem({1, 1, 1, 1}));
    WeightSystem ws = infer_unit_weights({P("x1")}, P("x1^2+x2^2+x3^2+x4^2"));
    CHECK(ws == WeightSystem({Rational(1, 2), Rational(1, 2), Rational(1, 2), Rational(1, 2)}));
    // canonical representative has w1 = 0: rejected
    Context ctx2{2, false};
    CHECK_THROWS_AS(infer_unit_weights({}, P("x1^2*x2", ctx2)), NoSolution);
}

TEST_CASE("parser accepts the documented grammar") {
    CHECK(P("x1^2 + x2^3 + 2*x3^4") == P("x1^2+x2^3+2*x3^4"));
    CHECK(P("1/2*x1*x2") == Poly::term(ctx4, Monomial({1, 1, 0, 0}), Rational(1, 2)));
    CHECK(P("-x1") == -P("x1"));
    CHECK(P("3 - 2*x1") == P("-2*x1 + 3"));
    CHECK(P("2x1") == P("2*x1"));       // '*' optional
    CHECK(P("x1x2") == P("x1*x2"));     // juxtaposition
    CHECK(P("x1^2x2") == P("x1^2*x2"));
    CHECK(P("0") == Poly::zero(ctx4));
    Context sctx = ctx3.lifted();
    CHECK(parse_poly("s^2+x1*s", sctx) ==
          Poly::s_variable(sctx) * Poly::s_variable(sctx) +
              Poly::variable(sctx, 0) * Poly::s_variable(sctx));
}

TEST_CASE("parse errors carry a column") {
    try {
        parse_poly("x1 + @", ctx4);
        CHECK(false);
    } catch (const ParseError& e) {
        CHECK(e.column() == 6);
    }
    CHECK_THROWS_AS(parse_poly("x5", ctx4), ParseError);         // exceeds nvars
    CHECK_THROWS_AS(parse_poly("x0", ctx4), ParseError);         // indices start at 1
    CHECK_THROWS_AS(parse_poly("s", ctx4), ParseError);          // no s in x-context
    CHECK_THROWS_AS(parse_poly("x1^", ctx4), ParseError);
    CHECK_THROWS_AS(parse_poly("1/0*x1", ctx4), ParseError);
    CHECK_THROWS_AS(parse_poly("x1*2", ctx4), ParseError);       // coefficient must lead
    CHECK(max_var_index("x1^2 + 7*x12*x3") == 12);
}

TEST_CASE("print/parse round trip on random polynomials") {
    testgen::Rng rng(99);
    for (int t = 0; t < 120; ++t) {
        Context ctx{rng.uniform(1, 4), t % 3 == 0};
        Poly p = testgen::random_poly(rng, ctx, 6, 6);
        CHECK(parse_poly(to_string(p), ctx) == p);
    }
    CHECK(to_string(Poly::zero(ctx3)) == "0");
}
