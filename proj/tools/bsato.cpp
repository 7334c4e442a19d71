// bsato command-line front end. All reports are byte-deterministic for
// identical inputs. Exit codes: 0 success, 1 input or hypothesis-check
// error, 2 mathematically inconclusive outcome (unestablished generation
// hypothesis, failed verification).

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "bsato/bsato.hpp"
#include "bsato/serialize.hpp"

namespace {

using namespace bsato;

constexpr int kExitOk = 0;
constexpr int kExitError = 1;
constexpr int kExitInconclusive = 2;

struct Inputs {
    std::vector<std::string> h_texts;
    std::string f_text;
    int nvars = 0; // 0 = infer from the highest index mentioned
    std::string weights = "infer";
    std::string format = "json";
};

void add_common(CLI::App* cmd, Inputs& in, bool with_h, bool with_f) {
    cmd->set_help_flag("--help", "print help");
    if (with_h) cmd->add_option("--h", in.h_texts, "component h_i (repeatable)");
    if (with_f) cmd->add_option("--f", in.f_text, "component f");
    cmd->add_option("--nvars", in.nvars, "number of variables (default: highest index used)");
    cmd->add_option("--weights", in.weights, "comma-separated weights, or 'infer'");
    cmd->add_option("--format", in.format, "output format: json or text")
        ->check(CLI::IsMember({"json", "text"}));
}

int resolved_nvars(const Inputs& in) {
    if (in.nvars > 0) return in.nvars;
    int n = 0;
    for (const auto& t : in.h_texts) n = std::max(n, max_var_index(t));
    if (!in.f_text.empty()) n = std::max(n, max_var_index(in.f_text));
    if (n == 0) throw ParseError("no variables mentioned and --nvars not given", 1);
    return n;
}

std::vector<Poly> parse_h(const Inputs& in, Context ctx) {
    std::vector<Poly> h;
    for (const auto& t : in.h_texts) h.push_back(parse_poly(t, ctx));
    return h;
}

WeightSystem resolve_weights(const Inputs& in, const std::vector<Poly>& h, const Poly& f) {
    if (in.weights == "infer") return infer_unit_weights(h, f);
    std::vector<Rational> w;
    std::stringstream ss(in.weights);
    std::string item;
    while (std::getline(ss, item, ',')) w.push_back(parse_rational(item));
    if (w.size() != static_cast<std::size_t>(f.ctx().nvars))
        throw NoSolution("expected " + std::to_string(f.ctx().nvars) + " weights, got " +
                         std::to_string(w.size()));
    return WeightSystem(std::move(w));
}

void print_report(const json& doc, const std::string& text, const Inputs& in) {
    if (in.format == "json")
        std::cout << doc.dump(2) << "\n";
    else
        std::cout << text;
}

std::string roots_text(const std::vector<long long>& roots) {
    if (roots.empty()) return "none";
    std::string out;
    for (std::size_t i = 0; i < roots.size(); ++i) {
        if (i) out += ", ";
        out += std::to_string(roots[i]);
    }
    return out;
}

int verdict_exit_code(const Verdict& v) {
    if (v.error_code) return kExitError;
    return v.conclusion == Conclusion::Inconclusive ? kExitInconclusive : kExitOk;
}

std::string verdict_text(const Verdict& v) {
    std::string out;
    for (const auto& e : v.evidence) {
        out += e.name + " = " + display(e.poly) +
               "  [integral roots: " + roots_text(e.integral_roots_all) + "]\n";
    }
    out += "hypothesis: " + to_string(v.hypothesis) + "\n";
    out += "conclusion: " + to_string(v.conclusion) + "\n";
    if (v.error_code) out += "error: " + *v.error_code + "\n";
    return out;
}

int run_minors(const Inputs& in) {
    Context ctx{resolved_nvars(in), false};
    bool include_f = !in.f_text.empty();
    std::vector<Poly> components = parse_h(in, ctx);
    if (include_f) components.push_back(parse_poly(in.f_text, ctx));
    if (components.empty()) throw BadArity("minors needs at least one component");
    auto minors = gradient_minors(components, ctx);
    json list = json::array();
    std::string text;
    for (const auto& [cols, minor] : minors) {
        list.push_back(json{{"columns", cols}, {"minor", to_string(minor)}});
        text += "m(";
        for (std::size_t i = 0; i < cols.size(); ++i)
            text += (i ? "," : "") + std::to_string(cols[i]);
        text += ") = " + to_string(minor) + "\n";
    }
    json doc{{"command", "minors"},
             {"nvars", ctx.nvars},
             {"h", json::array()},
             {"include_f", include_f},
             {"minors", std::move(list)}};
    for (const auto& t : in.h_texts) doc["h"].push_back(t);
    if (include_f) doc["f"] = in.f_text;
    print_report(doc, text, in);
    return kExitOk;
}

int run_basis(const Inputs& in) {
    Context ctx{resolved_nvars(in), false};
    Morphism m(parse_h(in, ctx), parse_poly(in.f_text, ctx));
    NormalizedWeights nw = normalize_weights(m, resolve_weights(in, m.h, m.f));
    BPrimeDetail detail = bprime_wh_detailed(m, nw);
    json doc{{"command", "basis"},
             {"nvars", m.n()},
             {"weights", normalized_weights_to_json(nw)},
             {"quotient", quotient_basis_to_json(detail.basis, m.ctx)},
             {"pi", rationals_to_json(detail.pi)}};
    std::string text = "quotient dimension: " + std::to_string(detail.basis.dimension()) + "\n";
    for (std::size_t i = 0; i < detail.basis.monomials.size(); ++i) {
        std::string mono = detail::monomial_string(detail.basis.monomials[i], m.ctx);
        text += (mono.empty() ? "1" : mono);
        text += "  [weight " + to_string(detail.basis.weights[i]) + "]\n";
    }
    print_report(doc, text, in);
    return kExitOk;
}

int run_bprime(const Inputs& in) {
    Context ctx{resolved_nvars(in), false};
    Morphism m(parse_h(in, ctx), parse_poly(in.f_text, ctx));
    NormalizedWeights nw = normalize_weights(m, resolve_weights(in, m.h, m.f));
    BPrimeDetail detail = bprime_wh_detailed(m, nw);
    json doc{{"command", "bprime"},
             {"nvars", m.n()},
             {"weights", normalized_weights_to_json(nw)},
             {"bprime", factored_to_json(detail.bprime)},
             {"display", display(detail.bprime)},
             {"integral_roots", integral_roots(detail.bprime, RootMode::All)},
             {"strictly_negative_integral_roots",
              integral_roots(detail.bprime, RootMode::StrictlyNegative)},
             {"quotient", quotient_basis_to_json(detail.basis, m.ctx)},
             {"pi", rationals_to_json(detail.pi)}};
    std::string text = "bprime = " + display(detail.bprime) + "\n" +
                       "integral roots: " +
                       roots_text(integral_roots(detail.bprime, RootMode::All)) + "\n";
    print_report(doc, text, in);
    return kExitOk;
}

int run_bs(const Inputs& in) {
    Context ctx{resolved_nvars(in), false};
    Poly f = parse_poly(in.f_text, ctx);
    WeightSystem w = resolve_weights(in, {}, f);
    // compute the polynomial first so hypothesis errors exit with code 1
    Morphism m({}, f);
    NormalizedWeights nw = normalize_weights(m, w);
    FactoredBPoly btilde = bprime_wh(m, nw);
    FactoredBPoly b = full_from_reduced(btilde);
    Verdict v = decide_hypersurface(f, w);
    json doc{{"command", "bs"},
             {"nvars", ctx.nvars},
             {"weights", normalized_weights_to_json(nw)},
             {"btilde", factored_to_json(btilde)},
             {"btilde_display", display(btilde)},
             {"b", factored_to_json(b)},
             {"display", display(b)},
             {"verdict", verdict_to_json(v)}};
    std::string text = "b = " + display(b) + "\nbtilde = " + display(btilde) + "\n" +
                       verdict_text(v);
    print_report(doc, text, in);
    return verdict_exit_code(v);
}

int run_decide(const Inputs& in, bool assume_generation) {
    Context ctx{resolved_nvars(in), false};
    Morphism m(parse_h(in, ctx), parse_poly(in.f_text, ctx));
    WeightSystem w = resolve_weights(in, m.h, m.f);
    Verdict v = decide_ci(m, w, assume_generation);
    json doc{{"command", "decide"},
             {"nvars", m.n()},
             {"assume_generation", assume_generation},
             {"verdict", verdict_to_json(v)}};
    print_report(doc, verdict_text(v), in);
    return verdict_exit_code(v);
}

int run_verify(const std::string& path, const Inputs& in) {
    std::ifstream file(path);
    if (!file) throw ParseError("cannot open certificate file '" + path + "'", 1);
    json j;
    try {
        file >> j;
    } catch (const nlohmann::json::exception& e) {
        throw ParseError(std::string("bad certificate JSON: ") + e.what(), 1);
    }
    Certificate cert = certificate_from_json(j);
    bool ok = verify_certificate(cert);
    json doc{{"command", "verify"},
             {"morphism", morphism_to_json(cert.morphism)},
             {"b", to_string(cert.b)},
             {"parts", cert.parts.size()},
             {"verified", ok}};
    print_report(doc, std::string("verified: ") + (ok ? "true" : "false") + "\n", in);
    return ok ? kExitOk : kExitInconclusive;
}

int run_infer_weights(const std::vector<std::string>& polys,
                      const std::vector<std::string>& degrees, const Inputs& in) {
    if (polys.empty() || polys.size() != degrees.size())
        throw NoSolution("need matching --poly/--degree pairs");
    int n = in.nvars;
    if (n == 0)
        for (const auto& t : polys) n = std::max(n, max_var_index(t));
    Context ctx{n, false};
    std::vector<Poly> ps;
    std::vector<Rational> ds;
    for (std::size_t i = 0; i < polys.size(); ++i) {
        ps.push_back(parse_poly(polys[i], ctx));
        ds.push_back(parse_rational(degrees[i]));
    }
    WeightSystem w = infer_weights(ps, ds);
    json doc{{"command", "infer-weights"}, {"nvars", n}, {"weights", weights_to_json(w)}};
    std::string text = "weights: ";
    for (std::size_t i = 0; i < w.size(); ++i) text += (i ? ", " : "") + to_string(w[i]);
    text += "\n";
    print_report(doc, text, in);
    return kExitOk;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Bernstein-type polynomials of weighted-homogeneous complete "
                 "intersections, intersection-homology decision criteria, and "
                 "functional-equation certificate verification"};
    app.set_help_flag("--help", "print help");
    app.require_subcommand(1);

    Inputs in;
    bool assume_generation = false;
    std::string certificate_path;
    std::vector<std::string> iw_polys, iw_degrees;

    auto* minors = app.add_subcommand("minors", "Jacobian minors of (h_1..h_p[, f])");
    add_common(minors, in, true, true);

    auto* basis = app.add_subcommand("basis", "monomial basis of O/(f,h)O + J_{h,f} with weights");
    add_common(basis, in, true, true);

    auto* bprime = app.add_subcommand("bprime", "closed-formula b'_f(h,s)");
    add_common(bprime, in, true, true);

    auto* bs = app.add_subcommand("bs", "Bernstein polynomial of a quasi-homogeneous isolated hypersurface singularity");
    add_common(bs, in, false, true);

    auto* decide = app.add_subcommand("decide", "decide L(Y,X) = H^p_[Y](O_X) for a complete intersection");
    add_common(decide, in, true, true);
    decide->add_flag("--assume-generation", assume_generation,
                     "assert D.delta_h = R_h instead of checking the chain criterion");

    auto* verify = app.add_subcommand("verify", "verify a functional-equation certificate");
    verify->add_option("--certificate", certificate_path, "certificate JSON file")->required();
    verify->add_option("--format", in.format, "output format: json or text")
        ->check(CLI::IsMember({"json", "text"}));

    auto* iw = app.add_subcommand("infer-weights", "solve for weights from degree constraints");
    iw->add_option("--poly", iw_polys, "polynomial (repeatable)");
    iw->add_option("--degree", iw_degrees, "target weighted degree (one per --poly)");
    iw->add_option("--nvars", in.nvars, "number of variables");
    iw->add_option("--format", in.format, "output format: json or text")
        ->check(CLI::IsMember({"json", "text"}));

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e);
        return rc == 0 ? 0 : kExitError;
    }

    try {
        if (minors->parsed()) return run_minors(in);
        if (basis->parsed()) return run_basis(in);
        if (bprime->parsed()) return run_bprime(in);
        if (bs->parsed()) return run_bs(in);
        if (decide->parsed()) return run_decide(in, assume_generation);
        if (verify->parsed()) return run_verify(certificate_path, in);
        if (iw->parsed()) return run_infer_weights(iw_polys, iw_degrees, in);
    } catch (const bsato::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitError;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitError;
    }
    return kExitError;
}
