#pragma once

#include <map>
#include <string>
#include <vector>

#include "bsato/errors.hpp"
#include "bsato/monomial.hpp"
#include "bsato/rational.hpp"

namespace bsato {

// Ring context: Q[x1..xn] or Q[x1..xn, s]. When present, s is the last
// variable (index nvars).
struct Context {
    int nvars = 0;
    bool with_s = false;

    int width() const { return nvars + (with_s ? 1 : 0); }
    int s_index() const { return nvars; }

    std::string var_name(int i) const {
        return (with_s && i == nvars) ? "s" : "x" + std::to_string(i + 1);
    }

    Context lifted() const { return Context{nvars, true}; }

    bool operator==(const Context& o) const {
        return nvars == o.nvars && with_s == o.with_s;
    }
    bool operator!=(const Context& o) const { return !(*this == o); }
};

// Sparse multivariate polynomial with exact rational coefficients.
// Terms are keyed by exponent vector; no stored coefficient is zero.
class Poly {
public:
    using TermMap = std::map<Monomial, Rational>;

    explicit Poly(Context ctx) : ctx_(ctx) {}

    static Poly zero(Context ctx) { return Poly(ctx); }

    static Poly constant(Context ctx, const Rational& c) {
        Poly p(ctx);
        p.add_term(Monomial(static_cast<std::size_t>(ctx.width())), c);
        return p;
    }

    static Poly term(Context ctx, Monomial m, const Rational& c) {
        if (static_cast<int>(m.size()) != ctx.width())
            throw ContextMismatch("monomial width does not match ring context");
        Poly p(ctx);
        p.add_term(std::move(m), c);
        return p;
    }

    // x_{i+1} for i < nvars, or s when i == nvars in a lifted context
    static Poly variable(Context ctx, int i) {
        if (i < 0 || i >= ctx.width())
            throw ContextMismatch("variable index out of range");
        Monomial m(static_cast<std::size_t>(ctx.width()));
        m[static_cast<std::size_t>(i)] = 1;
        return term(ctx, std::move(m), 1);
    }

    static Poly s_variable(Context ctx) {
        if (!ctx.with_s) throw ContextMismatch("context has no s variable");
        return variable(ctx, ctx.s_index());
    }

    const Context& ctx() const { return ctx_; }
    const TermMap& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    std::size_t term_count() const { return terms_.size(); }

    Rational constant_term() const {
        auto it = terms_.find(Monomial(static_cast<std::size_t>(ctx_.width())));
        return it == terms_.end() ? Rational(0) : it->second;
    }

    int total_degree() const { // -1 for the zero polynomial
        int d = -1;
        for (const auto& [m, c] : terms_) d = std::max(d, m.total_degree());
        return d;
    }

    void add_term(Monomial m, const Rational& c) {
        if (c == 0) return;
        auto [it, inserted] = terms_.emplace(std::move(m), c);
        if (!inserted) {
            it->second += c;
            if (it->second == 0) terms_.erase(it);
        }
    }

    Poly& operator+=(const Poly& o) {
        require_same_ctx(o);
        for (const auto& [m, c] : o.terms_) add_term(m, c);
        return *this;
    }
    Poly& operator-=(const Poly& o) {
        require_same_ctx(o);
        for (const auto& [m, c] : o.terms_) add_term(m, -c);
        return *this;
    }

    Poly operator+(const Poly& o) const { Poly r = *this; r += o; return r; }
    Poly operator-(const Poly& o) const { Poly r = *this; r -= o; return r; }
    Poly operator-() const {
        Poly r(ctx_);
        for (const auto& [m, c] : terms_) r.terms_.emplace(m, -c);
        return r;
    }

    Poly operator*(const Poly& o) const {
        require_same_ctx(o);
        Poly r(ctx_);
        for (const auto& [ma, ca] : terms_)
            for (const auto& [mb, cb] : o.terms_) r.add_term(ma * mb, ca * cb);
        return r;
    }
    Poly& operator*=(const Poly& o) { return *this = *this * o; }

    Poly scaled(const Rational& c) const {
        Poly r(ctx_);
        if (c == 0) return r;
        for (const auto& [m, k] : terms_) r.terms_.emplace(m, k * c);
        return r;
    }

    Poly pow(unsigned k) const {
        Poly r = constant(ctx_, 1);
        Poly b = *this;
        while (k) {
            if (k & 1u) r *= b;
            b = (k >>= 1) ? b * b : b;
        }
        return r;
    }

    // formal partial derivative with respect to variable index i
    Poly derivative(int i) const {
        if (i < 0 || i >= ctx_.width())
            throw ContextMismatch("derivative index out of range");
        Poly r(ctx_);
        for (const auto& [m, c] : terms_) {
            int e = m[static_cast<std::size_t>(i)];
            if (e == 0) continue;
            Monomial mm = m;
            mm[static_cast<std::size_t>(i)] = e - 1;
            r.add_term(std::move(mm), c * e);
        }
        return r;
    }

    // embed Q[x1..xn] into Q[x1..xn, s]
    Poly lifted() const {
        if (ctx_.with_s) return *this;
        Poly r(ctx_.lifted());
        for (const auto& [m, c] : terms_) {
            Monomial mm = m;
            mm.e.push_back(0);
            r.terms_.emplace(std::move(mm), c);
        }
        return r;
    }

    bool operator==(const Poly& o) const {
        return ctx_ == o.ctx_ && terms_ == o.terms_;
    }
    bool operator!=(const Poly& o) const { return !(*this == o); }

private:
    void require_same_ctx(const Poly& o) const {
        if (ctx_ != o.ctx_)
            throw ContextMismatch("polynomials live in different ring contexts");
    }

    Context ctx_;
    TermMap terms_;
};

inline Poly add(const Poly& a, const Poly& b) { return a + b; }
inline Poly mul(const Poly& a, const Poly& b) { return a * b; }
inline Poly partial_derivative(const Poly& p, int i) { return p.derivative(i); }

} // namespace bsato
