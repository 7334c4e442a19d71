#pragma once

#include <algorithm>
#include <string>
#include <vector>

#include "bsato/groebner.hpp"
#include "bsato/singularity.hpp"

namespace bsato {

enum class Provenance { Prop2Formula, Prop2WithSPlus1, ExternalReference };

inline std::string to_string(Provenance p) {
    switch (p) {
        case Provenance::Prop2Formula: return "prop2-formula";
        case Provenance::Prop2WithSPlus1: return "prop2-with-s-plus-1";
        case Provenance::ExternalReference: return "external-reference";
    }
    return "external-reference";
}

// Monic polynomial prod_j (s + a_j) kept as the multiset of offsets a_j.
// Equality compares offsets only; provenance is bookkeeping.
class FactoredBPoly {
public:
    explicit FactoredBPoly(Provenance prov = Provenance::ExternalReference) : prov_(prov) {}

    FactoredBPoly(std::vector<Rational> offsets, Provenance prov) : prov_(prov) {
        std::sort(offsets.begin(), offsets.end());
        for (const auto& a : offsets) {
            if (!factors_.empty() && factors_.back().first == a)
                ++factors_.back().second;
            else
                factors_.push_back({a, 1});
        }
    }

    static FactoredBPoly one() { return FactoredBPoly(); }

    const std::vector<std::pair<Rational, int>>& factors() const { return factors_; }
    Provenance provenance() const { return prov_; }

    int degree() const {
        int d = 0;
        for (const auto& [a, k] : factors_) d += k;
        return d;
    }

    std::vector<Rational> offsets() const {
        std::vector<Rational> out;
        for (const auto& [a, k] : factors_)
            for (int i = 0; i < k; ++i) out.push_back(a);
        return out;
    }

    bool has_nonpositive_offset() const {
        return !factors_.empty() && factors_.front().first <= 0;
    }

    bool operator==(const FactoredBPoly& o) const { return factors_ == o.factors_; }
    bool operator!=(const FactoredBPoly& o) const { return !(*this == o); }

private:
    std::vector<std::pair<Rational, int>> factors_; // ascending offset, mult >= 1
    Provenance prov_;
};

// "(s+1)(s+3/2)^2"; the empty product prints as "1", offset 0 as "s".
inline std::string display(const FactoredBPoly& b) {
    if (b.factors().empty()) return "1";
    std::string out;
    for (const auto& [a, k] : b.factors()) {
        std::string base;
        if (a == 0)
            base = "s";
        else if (a > 0)
            base = "(s+" + to_string(a) + ")";
        else
            base = "(s-" + to_string(Rational(-a)) + ")";
        out += base;
        if (k > 1) out += "^" + std::to_string(k);
    }
    return out;
}

// expanded coefficient form, for display only
inline Poly expand_in_s(const FactoredBPoly& b, Context target) {
    if (!target.with_s) throw ContextMismatch("expansion needs a context with s");
    Poly s = Poly::s_variable(target);
    Poly acc = Poly::constant(target, 1);
    for (const auto& [a, k] : b.factors())
        for (int i = 0; i < k; ++i) acc *= s + Poly::constant(target, a);
    return acc;
}

enum class RootMode { All, StrictlyNegative };

// Integral roots -a of the factored polynomial, deduplicated, sorted
// descending (closest to zero first).
inline std::vector<long long> integral_roots(const FactoredBPoly& b, RootMode mode) {
    std::vector<long long> out;
    for (const auto& [a, k] : b.factors()) {
        if (!is_integer(a)) continue;
        if (mode == RootMode::StrictlyNegative && a <= 0) continue;
        out.push_back(-to_long(a));
    }
    std::sort(out.rbegin(), out.rend());
    return out;
}

// multiset inclusion of offsets
inline bool divides(const FactoredBPoly& a, const FactoredBPoly& b) {
    for (const auto& [offset, mult] : a.factors()) {
        int found = 0;
        for (const auto& [ob, mb] : b.factors())
            if (ob == offset) { found = mb; break; }
        if (found < mult) return false;
    }
    return true;
}

// restore the (s+1) factor: reduced Bernstein polynomial -> full one
inline FactoredBPoly full_from_reduced(const FactoredBPoly& b) {
    auto offs = b.offsets();
    offs.push_back(Rational(1));
    return FactoredBPoly(std::move(offs), Provenance::Prop2WithSPlus1);
}

// Everything the closed-formula pipeline produces, for evidence reporting:
// the factored polynomial plus the quotient basis behind it.
struct BPrimeDetail {
    FactoredBPoly bprime;
    NormalizedWeights nw;
    QuotientBasis basis;       // of O/(f,h_1..h_p)O + J_{h,f}
    std::vector<Rational> pi;  // deduplicated basis weights
};

namespace detail {

inline void require_finite_quotient(const Ideal& ideal, const NormalizedWeights& nw,
                                    const std::string& what) {
    MonomialOrder ord(OrderKind::WGrevlex, nw.alpha);
    GroebnerBasis gb = buchberger(ideal, ord);
    try {
        quotient_basis(gb, nw.alpha);
    } catch (const InfiniteDimensional&) {
        throw NotIsolated(what + " does not define an isolated singularity (quotient is infinite-dimensional)");
    }
}

} // namespace detail

// Closed formula for b'_f(h,s) of a weighted-homogeneous isolated complete
// intersection: offsets { |alpha| - rho_h + q : q in Pi }, where Pi is the
// set of weighted degrees of a monomial basis of O/(f,h_1..h_p)O + J_{h,f}.
inline BPrimeDetail bprime_wh_detailed(const Morphism& m, const NormalizedWeights& nw,
                                       OrderKind order_kind = OrderKind::WGrevlex) {
    // hypothesis: h alone defines an ICIS (trivial when p = 0)
    if (m.p() > 0) {
        std::vector<Poly> hgens = m.h;
        Ideal jh = jacobian_ideal(m, false);
        for (const auto& g : jh.gens) hgens.push_back(g);
        detail::require_finite_quotient(Ideal(m.ctx, std::move(hgens)), nw, "h");
    }

    // hypothesis + main quotient: (h, f) defines an ICIS
    std::vector<Poly> gens;
    gens.push_back(m.f);
    for (const auto& hi : m.h) gens.push_back(hi);
    Ideal jhf = jacobian_ideal(m, true);
    for (const auto& g : jhf.gens) gens.push_back(g);
    Ideal ideal(m.ctx, std::move(gens));

    MonomialOrder ord(order_kind, nw.alpha);
    GroebnerBasis gb = buchberger(ideal, ord);
    QuotientBasis qb;
    try {
        qb = quotient_basis(gb, nw.alpha);
    } catch (const InfiniteDimensional&) {
        throw NotIsolated("(h,f) does not define an isolated singularity (quotient is infinite-dimensional)");
    }

    std::vector<Rational> pi = qb.weights;
    pi.erase(std::unique(pi.begin(), pi.end()), pi.end()); // weights come sorted

    Rational shift = nw.alpha_sum - nw.rho_sum;
    std::vector<Rational> offsets;
    offsets.reserve(pi.size());
    for (const auto& q : pi) offsets.push_back(shift + q);

    return BPrimeDetail{FactoredBPoly(std::move(offsets), Provenance::Prop2Formula), nw,
                        std::move(qb), std::move(pi)};
}

inline FactoredBPoly bprime_wh(const Morphism& m, const NormalizedWeights& nw) {
    return bprime_wh_detailed(m, nw).bprime;
}

// p = 0 specialization: the reduced Bernstein polynomial of a
// quasi-homogeneous isolated hypersurface singularity.
inline FactoredBPoly reduced_bernstein(const Poly& f, const WeightSystem& w) {
    Morphism m({}, f);
    return bprime_wh(m, normalize_weights(m, w));
}

} // namespace bsato
