#include <doctest.h>

#include "bsato/decide.hpp"
#include "bsato/parse.hpp"
#include "bsato/serialize.hpp"

using namespace bsato;

namespace {

Poly P(const std::string& text, Context ctx) { return parse_poly(text, ctx); }

Poly quadric(int n) {
    Context ctx{n, false};
    Poly f(ctx);
    for (int i = 0; i < n; ++i) f += Poly::variable(ctx, i) * Poly::variable(ctx, i);
    return f;
}

WeightSystem ones(int n) { return WeightSystem(std::vector<Rational>(n, Rational(1))); }

} // namespace

TEST_CASE("decide_hypersurface on quadrics") {
    Verdict v5 = decide_hypersurface(quadric(5), ones(5));
    CHECK(v5.conclusion == Conclusion::LEqualsR);
    CHECK(v5.hypothesis == HypothesisStatus::Established);
    REQUIRE(v5.evidence.size() == 2);
    CHECK(v5.evidence[0].name == "btilde(f)");
    CHECK(v5.evidence[0].poly == FactoredBPoly({Rational(5, 2)}, Provenance::ExternalReference));

    Verdict v4 = decide_hypersurface(quadric(4), ones(4));
    CHECK(v4.conclusion == Conclusion::LNotEqualsR);
    CHECK(v4.evidence[0].integral_roots_all == std::vector<long long>{-2});

    Verdict v2 = decide_hypersurface(quadric(2), ones(2));
    CHECK(v2.conclusion == Conclusion::LNotEqualsR); // node: root -1
    CHECK(v2.evidence[0].integral_roots_all == std::vector<long long>{-1});
}

TEST_CASE("quadric parity law for n = 3..9") {
    for (int n = 3; n <= 9; ++n) {
        Verdict v = decide_hypersurface(quadric(n), ones(n));
        CHECK(v.conclusion ==
              (n % 2 == 1 ? Conclusion::LEqualsR : Conclusion::LNotEqualsR));
    }
}

TEST_CASE("decide_hypersurface failure propagation") {
    Context ctx{2, false};
    Verdict v = decide_hypersurface(P("x1^2*x2", ctx),
                                    WeightSystem({Rational(1, 4), Rational(1, 2)}));
    CHECK(v.conclusion == Conclusion::Inconclusive);
    CHECK(v.hypothesis == HypothesisStatus::Failed);
    REQUIRE(v.error_code.has_value());
    CHECK(*v.error_code == "NotIsolated");

    Verdict w = decide_hypersurface(P("x1^2+x2^3", ctx), ones(2));
    CHECK(w.conclusion == Conclusion::Inconclusive);
    CHECK(*w.error_code == "NotHomogeneous");
}

TEST_CASE("check_generation_chain") {
    SUBCASE("paper pair x1^2+x2^3+x3^4, x1^2-x2^3+2*x3^4") {
        Context ctx{3, false};
        WeightSystem w({Rational(1, 2), Rational(1, 3), Rational(1, 4)});
        ChainResult r = check_generation_chain(
            {P("x1^2+x2^3+x3^4", ctx), P("x1^2-x2^3+2*x3^4", ctx)}, w);
        CHECK(r.established);
        REQUIRE(r.evidence.size() == 2);
        CHECK(r.evidence[0].name == "b(h1)");
        CHECK(r.evidence[0].integral_roots_all == std::vector<long long>{-1});
        CHECK(r.evidence[1].name == "bprime(h2|h1..h1)");
        // stage 2 has -1 as its only integral root (none smaller)
        CHECK(r.evidence[1].integral_roots_all == std::vector<long long>{-1});
    }
    SUBCASE("single quadric, n = 5: established") {
        ChainResult r = check_generation_chain({quadric(5)}, ones(5));
        CHECK(r.established);
        CHECK(r.evidence[0].poly ==
              FactoredBPoly({1, Rational(5, 2)}, Provenance::ExternalReference));
    }
    SUBCASE("single quadric, n = 4: inconclusive (root -2)") {
        ChainResult r = check_generation_chain({quadric(4)}, ones(4));
        CHECK(!r.established);
        CHECK(r.evidence[0].integral_roots_all == std::vector<long long>{-1, -2});
    }
}

TEST_CASE("decide_ci") {
    Context ctx{4, false};
    Poly h = P("x1^2+x2^2+x3^2+x4^2", ctx);
    Poly f = P("x1", ctx);
    SUBCASE("hypothesis fails on the quadric pair; evidence still shows bprime") {
        Verdict v = decide_ci(Morphism({h}, f), ones(4), false);
        CHECK(v.conclusion == Conclusion::Inconclusive);
        CHECK(v.hypothesis == HypothesisStatus::Failed);
        CHECK(!v.error_code.has_value());
        REQUIRE(v.evidence.size() == 2);
        CHECK(v.evidence[0].name == "b(h1)");
        CHECK(display(v.evidence[0].poly) == "(s+1)(s+2)");
        CHECK(v.evidence[1].name == "bprime(f|h)");
        CHECK(display(v.evidence[1].poly) == "(s+2)");
    }
    SUBCASE("user-asserted hypothesis turns the same data into a verdict") {
        Verdict v = decide_ci(Morphism({h}, f), ones(4), true);
        CHECK(v.hypothesis == HypothesisStatus::AssumedByUser);
        CHECK(v.conclusion == Conclusion::LNotEqualsR); // root -2 of (s+2)
    }
    SUBCASE("established chain gives a real verdict") {
        Context c3{3, false};
        Morphism m({P("x1^2+x2^3+x3^4", c3)}, P("x1^2-x2^3+2*x3^4", c3));
        WeightSystem w({Rational(1, 2), Rational(1, 3), Rational(1, 4)});
        Verdict v = decide_ci(m, w, false);
        CHECK(v.hypothesis == HypothesisStatus::Established);
        CHECK(v.conclusion == Conclusion::LNotEqualsR); // offset 1 => root -1
        CHECK(v.evidence.back().poly.degree() == 17);
    }
    SUBCASE("arity violation surfaces as BadArity") {
        Context c1{1, false};
        CHECK_THROWS_AS(Morphism({P("x1", c1)}, P("2*x1", c1)), BadArity);
    }
    SUBCASE("never a verdict with Failed hypothesis") {
        Verdict v = decide_ci(Morphism({h}, f), ones(4), false);
        if (v.hypothesis == HypothesisStatus::Failed)
            CHECK(v.conclusion == Conclusion::Inconclusive);
    }
}

TEST_CASE("verdict JSON shape") {
    Verdict v = decide_hypersurface(quadric(3), ones(3));
    json j = verdict_to_json(v);
    CHECK(j.at("conclusion") == "L_equals_R");
    CHECK(j.at("hypothesis") == "Established");
    CHECK(j.at("evidence").size() == 2);
    CHECK(j.at("evidence")[0].at("name") == "btilde(f)");
    CHECK(j.at("evidence")[0].at("factors")[0].at("offset") == "3/2");
    CHECK(!j.contains("error"));

    Context ctx{2, false};
    Verdict bad = decide_hypersurface(P("x1^2*x2", ctx),
                                      WeightSystem({Rational(1, 4), Rational(1, 2)}));
    json jb = verdict_to_json(bad);
    CHECK(jb.at("error").at("code") == "NotIsolated");
}

TEST_CASE("factored polynomial JSON round trip") {
    FactoredBPoly b({1, 1, Rational(3, 2)}, Provenance::Prop2Formula);
    json j = factored_to_json(b);
    CHECK(j.at("provenance") == "prop2-formula");
    FactoredBPoly back = factored_from_json(j);
    CHECK(back == b);
    CHECK(back.provenance() == Provenance::Prop2Formula);
}
