#pragma once

#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "bsato/decide.hpp"
#include "bsato/parse.hpp"
#include "bsato/weylcheck.hpp"

namespace bsato {

// insertion-ordered JSON keeps every emitted document byte-deterministic
using json = nlohmann::ordered_json;

inline json poly_to_json(const Poly& p) {
    json vars = json::array();
    for (int i = 0; i < p.ctx().width(); ++i) vars.push_back(p.ctx().var_name(i));
    json terms = json::array();
    std::vector<const std::pair<const Monomial, Rational>*> sorted;
    for (const auto& t : p.terms()) sorted.push_back(&t);
    std::sort(sorted.begin(), sorted.end(), [](auto* a, auto* b) {
        return detail::print_before(a->first, b->first);
    });
    for (auto* t : sorted) {
        json term;
        term["c"] = to_string(t->second);
        term["e"] = t->first.e;
        terms.push_back(std::move(term));
    }
    return json{{"vars", std::move(vars)}, {"terms", std::move(terms)}};
}

inline Poly poly_from_json(const json& j) {
    const auto& vars = j.at("vars");
    Context ctx;
    ctx.nvars = static_cast<int>(vars.size());
    if (!vars.empty() && vars.back().get<std::string>() == "s") {
        ctx.nvars -= 1;
        ctx.with_s = true;
    }
    for (int i = 0; i < ctx.width(); ++i)
        if (vars[static_cast<std::size_t>(i)].get<std::string>() != ctx.var_name(i))
            throw ParseError("unexpected variable name '" +
                                 vars[static_cast<std::size_t>(i)].get<std::string>() + "'",
                             1);
    Poly p(ctx);
    for (const auto& t : j.at("terms")) {
        Monomial m(t.at("e").get<std::vector<int>>());
        if (static_cast<int>(m.size()) != ctx.width())
            throw ParseError("exponent vector length mismatch", 1);
        p.add_term(std::move(m), parse_rational(t.at("c").get<std::string>()));
    }
    return p;
}

// accepts either the structured object or a plain string in the text grammar
inline Poly poly_from_json(const json& j, Context ctx) {
    if (j.is_string()) return parse_poly(j.get<std::string>(), ctx);
    Poly p = poly_from_json(j);
    if (p.ctx() != ctx) throw ContextMismatch("polynomial context mismatch in JSON input");
    return p;
}

inline json factored_to_json(const FactoredBPoly& b) {
    json factors = json::array();
    for (const auto& [offset, mult] : b.factors())
        factors.push_back(json{{"offset", to_string(offset)}, {"mult", mult}});
    return json{{"factors", std::move(factors)}, {"provenance", to_string(b.provenance())}};
}

inline FactoredBPoly factored_from_json(const json& j) {
    std::vector<Rational> offsets;
    for (const auto& f : j.at("factors")) {
        Rational offset = parse_rational(f.at("offset").get<std::string>());
        int mult = f.contains("mult") ? f.at("mult").get<int>() : 1;
        for (int i = 0; i < mult; ++i) offsets.push_back(offset);
    }
    Provenance prov = Provenance::ExternalReference;
    if (j.contains("provenance")) {
        std::string p = j.at("provenance").get<std::string>();
        if (p == "prop2-formula") prov = Provenance::Prop2Formula;
        else if (p == "prop2-with-s-plus-1") prov = Provenance::Prop2WithSPlus1;
    }
    return FactoredBPoly(std::move(offsets), prov);
}

inline json rationals_to_json(const std::vector<Rational>& v) {
    json out = json::array();
    for (const auto& r : v) out.push_back(to_string(r));
    return out;
}

inline json weights_to_json(const WeightSystem& w) { return rationals_to_json(w.w); }

inline json normalized_weights_to_json(const NormalizedWeights& nw) {
    return json{{"alpha", weights_to_json(nw.alpha)},
                {"rho", rationals_to_json(nw.rho)},
                {"alpha_sum", to_string(nw.alpha_sum)},
                {"rho_sum", to_string(nw.rho_sum)}};
}

inline json quotient_basis_to_json(const QuotientBasis& qb, const Context& ctx) {
    json mons = json::array();
    for (const auto& m : qb.monomials) {
        std::string str = detail::monomial_string(m, ctx);
        mons.push_back(str.empty() ? "1" : str);
    }
    return json{{"dimension", qb.dimension()},
                {"monomials", std::move(mons)},
                {"weights", rationals_to_json(qb.weights)}};
}

inline json verdict_to_json(const Verdict& v) {
    json evidence = json::array();
    for (const auto& e : v.evidence) {
        evidence.push_back(json{{"name", e.name},
                                {"factors", factored_to_json(e.poly).at("factors")},
                                {"display", display(e.poly)},
                                {"integral_roots", e.integral_roots_all}});
    }
    json out{{"conclusion", to_string(v.conclusion)},
             {"hypothesis", to_string(v.hypothesis)},
             {"evidence", std::move(evidence)}};
    if (v.error_code)
        out["error"] = json{{"code", *v.error_code},
                            {"detail", v.error_detail.value_or("")}};
    return out;
}

inline json morphism_to_json(const Morphism& m) {
    json h = json::array();
    for (const auto& hi : m.h) h.push_back(to_string(hi));
    return json{{"nvars", m.n()}, {"h", std::move(h)}, {"f", to_string(m.f)}};
}

inline Morphism morphism_from_json(const json& j) {
    Context ctx{j.at("nvars").get<int>(), false};
    std::vector<Poly> h;
    if (j.contains("h"))
        for (const auto& hi : j.at("h")) h.push_back(poly_from_json(hi, ctx));
    return Morphism(std::move(h), poly_from_json(j.at("f"), ctx));
}

// Functional-equation certificate:
//   { "morphism": {...},
//     "b": "<poly in s>" | {"factors": [...]},
//     "parts": [ {"op": [{"coeff": "<poly in x,s>", "d": [..]}], "gen": "<poly>"} ],
//     "allow_any_generator": false }
struct Certificate {
    Morphism morphism;
    Poly b;
    std::vector<std::pair<DiffOperator, Poly>> parts;
    bool allow_any_generator = false;
};

inline DiffOperator operator_from_json(const json& j, Context sctx) {
    DiffOperator op(sctx);
    for (const auto& t : j) {
        Poly coeff = poly_from_json(t.at("coeff"), sctx);
        auto d = t.at("d").get<std::vector<int>>();
        if (static_cast<int>(d.size()) != sctx.nvars)
            throw ParseError("operator multi-index length mismatch", 1);
        DiffOperator term = DiffOperator::coefficient(coeff);
        for (int i = 0; i < sctx.nvars; ++i)
            for (int k = 0; k < d[static_cast<std::size_t>(i)]; ++k)
                term = term * DiffOperator::partial(sctx, i);
        op = op + term;
    }
    return op;
}

inline json operator_to_json(const DiffOperator& op) {
    json out = json::array();
    for (const auto& t : op.terms())
        out.push_back(json{{"coeff", to_string(t.coeff)}, {"d", t.d}});
    return out;
}

inline Certificate certificate_from_json(const json& j) {
    Morphism m = morphism_from_json(j.at("morphism"));
    Context sctx = m.ctx.lifted();
    Poly b = j.at("b").is_object() && j.at("b").contains("factors")
                 ? expand_in_s(factored_from_json(j.at("b")), sctx)
                 : poly_from_json(j.at("b"), sctx);
    std::vector<std::pair<DiffOperator, Poly>> parts;
    for (const auto& part : j.at("parts"))
        parts.emplace_back(operator_from_json(part.at("op"), sctx),
                           poly_from_json(part.at("gen"), m.ctx));
    bool allow_any = j.contains("allow_any_generator") && j.at("allow_any_generator").get<bool>();
    return Certificate{std::move(m), std::move(b), std::move(parts), allow_any};
}

inline bool verify_certificate(const Certificate& c) {
    return verify_membership_certificate(c.b, c.parts, c.morphism, c.allow_any_generator);
}

} // namespace bsato
