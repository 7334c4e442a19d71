#pragma once

#include <algorithm>
#include <utility>
#include <vector>

#include "bsato/bernstein.hpp"
#include "bsato/singularity.hpp"

namespace bsato {

// Element of D[s] in normal form: a sum of coeff(x,s) * d^multi, with all
// coefficients to the left of the derivatives. Composition re-normalizes
// through [d_i, c] = dc/dx_i.
class DiffOperator {
public:
    struct Term {
        Poly coeff;         // in Q[x1..xn, s]
        std::vector<int> d; // derivative multi-index, length n
    };

    explicit DiffOperator(Context sctx) : ctx_(sctx) {
        if (!ctx_.with_s) throw ContextMismatch("operators live over Q[x,s]");
    }

    static DiffOperator identity(Context sctx) {
        return coefficient(Poly::constant(sctx, 1));
    }

    // multiplication by a polynomial (given over Q[x] or Q[x,s])
    static DiffOperator coefficient(const Poly& c) {
        Poly lifted = c.lifted();
        DiffOperator op(lifted.ctx());
        if (!lifted.is_zero())
            op.terms_.push_back({lifted, std::vector<int>(static_cast<std::size_t>(lifted.ctx().nvars), 0)});
        return op;
    }

    static DiffOperator partial(Context sctx, int var) {
        DiffOperator op(sctx);
        if (var < 0 || var >= sctx.nvars)
            throw ContextMismatch("derivative index out of range");
        std::vector<int> d(static_cast<std::size_t>(sctx.nvars), 0);
        d[static_cast<std::size_t>(var)] = 1;
        op.terms_.push_back({Poly::constant(sctx, 1), std::move(d)});
        return op;
    }

    const Context& context() const { return ctx_; }
    const std::vector<Term>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    DiffOperator operator+(const DiffOperator& o) const {
        require_same(o);
        DiffOperator out(ctx_);
        std::map<std::vector<int>, Poly> acc;
        for (const auto& t : terms_) accumulate(acc, t.d, t.coeff);
        for (const auto& t : o.terms_) accumulate(acc, t.d, t.coeff);
        out.set_terms(std::move(acc));
        return out;
    }

    DiffOperator scaled(const Rational& c) const {
        DiffOperator out(ctx_);
        if (c == 0) return out;
        for (const auto& t : terms_) out.terms_.push_back({t.coeff.scaled(c), t.d});
        return out;
    }

    DiffOperator operator-(const DiffOperator& o) const { return *this + o.scaled(-1); }

    // composition: (*this) applied after o
    DiffOperator operator*(const DiffOperator& o) const {
        require_same(o);
        const std::size_t n = static_cast<std::size_t>(ctx_.nvars);
        std::map<std::vector<int>, Poly> acc;
        for (const auto& a : terms_) {
            for (const auto& b : o.terms_) {
                // d^a c = sum_{g <= a} binom(a,g) (d^g c) d^(a-g)
                std::vector<int> gamma(n, 0);
                while (true) {
                    Rational binom = 1;
                    for (std::size_t i = 0; i < n; ++i)
                        binom *= binomial(a.d[i], gamma[i]);
                    Poly deriv = b.coeff;
                    for (std::size_t i = 0; i < n; ++i)
                        for (int k = 0; k < gamma[i]; ++k)
                            deriv = deriv.derivative(static_cast<int>(i));
                    if (!deriv.is_zero()) {
                        std::vector<int> d(n);
                        for (std::size_t i = 0; i < n; ++i) d[i] = a.d[i] - gamma[i] + b.d[i];
                        accumulate(acc, d, (a.coeff * deriv).scaled(binom));
                    }
                    std::size_t pos = 0;
                    while (pos < n) {
                        if (++gamma[pos] <= a.d[pos]) break;
                        gamma[pos] = 0;
                        ++pos;
                    }
                    if (pos == n) break;
                }
            }
        }
        DiffOperator out(ctx_);
        out.set_terms(std::move(acc));
        return out;
    }

private:
    static Rational binomial(int n, int k) {
        Rational r = 1;
        for (int i = 0; i < k; ++i) r *= Rational(n - i, i + 1);
        return r;
    }

    static void accumulate(std::map<std::vector<int>, Poly>& acc,
                           const std::vector<int>& d, const Poly& c) {
        auto it = acc.find(d);
        if (it == acc.end())
            acc.emplace(d, c);
        else
            it->second += c;
    }

    void set_terms(std::map<std::vector<int>, Poly> acc) {
        terms_.clear();
        for (auto& [d, c] : acc)
            if (!c.is_zero()) terms_.push_back({std::move(c), d});
    }

    void require_same(const DiffOperator& o) const {
        if (ctx_ != o.ctx_) throw ContextMismatch("operators over different rings");
    }

    Context ctx_;
    std::vector<Term> terms_; // sorted by multi-index (map order), no zero coeffs
};

// Symbolic section  numerator / (h_1^d_1 ... h_p^d_p f^e) * f^s  of the
// localization. `twisted` records whether the f^s factor is present; the
// plain delta_h used by the annihilation checks drops it. No cancellation
// is ever performed.
struct SectionExpr {
    Morphism morphism;
    Poly numerator;          // over Q[x1..xn, s]
    std::vector<int> den_h;  // length p
    int den_f = 0;
    bool twisted = true;
};

inline SectionExpr section(const Morphism& m, const Poly& numerator,
                           std::vector<int> den_h, int den_f, bool twisted = true) {
    if (static_cast<int>(den_h.size()) != m.p())
        throw ContextMismatch("den_h length must equal p");
    Poly lifted = numerator.lifted();
    if (lifted.ctx() != m.ctx.lifted())
        throw ContextMismatch("section numerator in a different ring");
    return SectionExpr{m, std::move(lifted), std::move(den_h), den_f, twisted};
}

// delta_h f^s = 1/(h_1...h_p) * f^s
inline SectionExpr delta_fs(const Morphism& m) {
    return section(m, Poly::constant(m.ctx, 1), std::vector<int>(static_cast<std::size_t>(m.p()), 1), 0);
}

// delta_h f^(s+1), stored with numerator f (no negative exponents)
inline SectionExpr delta_fs_plus1(const Morphism& m) {
    return section(m, m.f, std::vector<int>(static_cast<std::size_t>(m.p()), 1), 0);
}

// plain delta_h = 1/(h_1...h_p), without the f^s twist
inline SectionExpr delta_plain(const Morphism& m) {
    return section(m, Poly::constant(m.ctx, 1), std::vector<int>(static_cast<std::size_t>(m.p()), 1), 0, false);
}

namespace weyl_detail {

inline void require_compatible(const SectionExpr& a, const SectionExpr& b) {
    if (a.morphism != b.morphism)
        throw ContextMismatch("sections over different morphisms");
    if (a.twisted != b.twisted)
        throw ContextMismatch("cannot mix twisted and untwisted sections");
}

// raise to the componentwise-maximum denominator exponents
inline Poly raised_numerator(const SectionExpr& x, const std::vector<int>& dh, int df) {
    if (x.numerator.is_zero()) return x.numerator;
    Poly out = x.numerator;
    for (std::size_t j = 0; j < x.den_h.size(); ++j) {
        int k = dh[j] - x.den_h[j];
        if (k > 0) out *= x.morphism.h[j].lifted().pow(static_cast<unsigned>(k));
    }
    int k = df - x.den_f;
    if (k > 0) out *= x.morphism.f.lifted().pow(static_cast<unsigned>(k));
    return out;
}

inline std::pair<std::vector<int>, int> max_denominators(const SectionExpr& a,
                                                         const SectionExpr& b) {
    std::vector<int> dh(a.den_h.size());
    for (std::size_t j = 0; j < dh.size(); ++j) dh[j] = std::max(a.den_h[j], b.den_h[j]);
    return {dh, std::max(a.den_f, b.den_f)};
}

} // namespace weyl_detail

inline SectionExpr add_sections(const SectionExpr& a, const SectionExpr& b) {
    weyl_detail::require_compatible(a, b);
    auto [dh, df] = weyl_detail::max_denominators(a, b);
    Poly num = weyl_detail::raised_numerator(a, dh, df) +
               weyl_detail::raised_numerator(b, dh, df);
    return SectionExpr{a.morphism, std::move(num), std::move(dh), df, a.twisted};
}

// One derivative application, denominators raised uniformly:
//   d_i (N, d, e) = ( dN/dx_i * H * f
//                     - N * sum_j d_j dh_j/dx_i * H_(k!=j) * f
//                     + (s - e) * N * df/dx_i * H,        d+1, e+1 )
// with H = h_1...h_p; the s-term is present only on twisted sections.
inline SectionExpr apply_partial(const SectionExpr& x, int var) {
    const Morphism& m = x.morphism;
    if (var < 0 || var >= m.n()) throw ContextMismatch("derivative index out of range");
    Context sctx = m.ctx.lifted();
    const std::size_t p = x.den_h.size();

    Poly f = m.f.lifted();
    std::vector<Poly> h;
    h.reserve(p);
    for (const auto& hj : m.h) h.push_back(hj.lifted());
    Poly big_h = Poly::constant(sctx, 1);
    for (const auto& hj : h) big_h *= hj;

    Poly num = x.numerator.derivative(var) * big_h * f;
    for (std::size_t j = 0; j < p; ++j) {
        if (x.den_h[j] == 0) continue;
        Poly rest = Poly::constant(sctx, 1);
        for (std::size_t k = 0; k < p; ++k)
            if (k != j) rest *= h[k];
        num -= x.numerator.scaled(x.den_h[j]) * h[j].derivative(var) * rest * f;
    }
    Poly df = f.derivative(var);
    if (!df.is_zero()) {
        if (x.den_f != 0) num -= x.numerator.scaled(x.den_f) * df * big_h;
        if (x.twisted) num += Poly::s_variable(sctx) * x.numerator * df * big_h;
    }

    std::vector<int> dh = x.den_h;
    for (auto& d : dh) ++d;
    return SectionExpr{m, std::move(num), std::move(dh), x.den_f + 1, x.twisted};
}

inline SectionExpr apply(const DiffOperator& op, const SectionExpr& x) {
    if (op.context() != x.morphism.ctx.lifted())
        throw ContextMismatch("operator and section over different rings");
    SectionExpr acc{x.morphism, Poly::zero(x.morphism.ctx.lifted()),
                    std::vector<int>(x.den_h.size(), 0), 0, x.twisted};
    for (const auto& t : op.terms()) {
        SectionExpr cur = x;
        for (int i = 0; i < x.morphism.n(); ++i)
            for (int k = 0; k < t.d[static_cast<std::size_t>(i)]; ++k)
                cur = apply_partial(cur, i);
        cur.numerator *= t.coeff;
        acc = add_sections(acc, cur);
    }
    return acc;
}

// exact equality in the localization, by cross-multiplication
inline bool expr_equal(const SectionExpr& a, const SectionExpr& b) {
    weyl_detail::require_compatible(a, b);
    auto [dh, df] = weyl_detail::max_denominators(a, b);
    return weyl_detail::raised_numerator(a, dh, df) ==
           weyl_detail::raised_numerator(b, dh, df);
}

// The cofactor vector field of a column tuple k_1 < ... < k_{p+1}:
//   Delta^h = sum_i (-1)^(p+i+1) m_(k_1..^k_i..k_(p+1))(h) d_(k_i).
// It annihilates plain delta_h and realizes the (s+1)-shift identity
//   (s+1) m(h,f) delta_h f^s = Delta^h . delta_h f^(s+1).
inline DiffOperator delta_field(const Morphism& m, const std::vector<int>& cols) {
    if (static_cast<int>(cols.size()) != m.p() + 1)
        throw BadArity("delta_field needs a (p+1)-tuple of columns");
    Context sctx = m.ctx.lifted();
    DiffOperator out(sctx);
    for (std::size_t i = 0; i < cols.size(); ++i) {
        std::vector<int> sub;
        for (std::size_t j = 0; j < cols.size(); ++j)
            if (j != i) sub.push_back(cols[j]);
        Poly cof = h_minor(m, sub);
        if (cof.is_zero()) continue;
        int sign = (m.p() + static_cast<int>(i) + 2) % 2 == 0 ? 1 : -1;
        out = out + (DiffOperator::coefficient(cof) *
                     DiffOperator::partial(sctx, cols[i] - 1)).scaled(sign);
    }
    return out;
}

// b(s) * delta_h f^s  ==  P . delta_h f^(s+1), exactly in the localization
inline bool verify_bernstein_certificate(const Poly& b, const DiffOperator& op,
                                         const Morphism& m) {
    SectionExpr lhs = delta_fs(m);
    lhs.numerator *= b.lifted();
    return expr_equal(lhs, apply(op, delta_fs_plus1(m)));
}

inline bool verify_bernstein_certificate(const FactoredBPoly& b, const DiffOperator& op,
                                         const Morphism& m) {
    return verify_bernstein_certificate(expand_in_s(b, m.ctx.lifted()), op, m);
}

namespace weyl_detail {

inline Poly monic_by_grevlex(const Poly& g) {
    MonomialOrder ref = MonomialOrder::grevlex(g.ctx().nvars + (g.ctx().with_s ? 1 : 0));
    const Monomial* lead = nullptr;
    for (const auto& [mm, c] : g.terms())
        if (!lead || ref.greater(mm, *lead)) lead = &mm;
    return g.scaled(Rational(1) / g.terms().at(*lead));
}

} // namespace weyl_detail

// b(s) * delta_h f^s  ==  sum_j P_j . (g_j delta_h f^s). Each g_j must be f
// or one of the maximal minors of (h,f), up to a nonzero scalar, unless
// allow_any_generator is set.
inline bool verify_membership_certificate(
    const Poly& b, const std::vector<std::pair<DiffOperator, Poly>>& parts,
    const Morphism& m, bool allow_any_generator = false) {
    if (!allow_any_generator) {
        auto minors = jacobian_minors(m, true);
        for (const auto& [op, gen] : parts) {
            if (gen.is_zero()) throw UnknownGenerator("zero generator in certificate");
            Poly g = weyl_detail::monic_by_grevlex(gen.lifted());
            bool ok = g == weyl_detail::monic_by_grevlex(m.f.lifted());
            for (auto it = minors.begin(); !ok && it != minors.end(); ++it)
                if (!it->second.is_zero())
                    ok = g == weyl_detail::monic_by_grevlex(it->second.lifted());
            if (!ok)
                throw UnknownGenerator("certificate generator '" + to_string(gen) +
                                       "' is neither f nor a Jacobian minor");
        }
    }
    SectionExpr lhs = delta_fs(m);
    lhs.numerator *= b.lifted();
    SectionExpr sum{m, Poly::zero(m.ctx.lifted()),
                    std::vector<int>(static_cast<std::size_t>(m.p()), 0), 0, true};
    for (const auto& [op, gen] : parts) {
        SectionExpr g_delta = delta_fs(m);
        g_delta.numerator *= gen.lifted();
        sum = add_sections(sum, apply(op, g_delta));
    }
    return expr_equal(lhs, sum);
}

} // namespace bsato
