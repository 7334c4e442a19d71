#pragma once

#include <optional>
#include <vector>

#include "bsato/poly.hpp"

namespace bsato {

// Strictly positive rational weight per x-variable.
struct WeightSystem {
    std::vector<Rational> w;

    WeightSystem() = default;
    explicit WeightSystem(std::vector<Rational> weights) : w(std::move(weights)) {
        for (const auto& wi : w)
            if (wi <= 0) throw NoSolution("weights must be strictly positive");
    }

    std::size_t size() const { return w.size(); }
    const Rational& operator[](std::size_t i) const { return w[i]; }

    WeightSystem scaled(const Rational& c) const {
        std::vector<Rational> r = w;
        for (auto& wi : r) wi *= c;
        return WeightSystem(std::move(r));
    }

    bool operator==(const WeightSystem& o) const { return w == o.w; }
};

inline Rational weighted_degree_of(const Monomial& m, const WeightSystem& w) {
    Rational d = 0;
    for (std::size_t i = 0; i < w.size(); ++i) d += Rational(m[i]) * w[i];
    return d;
}

// Common weighted degree of all terms, or nullopt when the terms disagree.
// Only the x-variables carry weight; an s exponent would be unweighted, so
// polynomials with s are rejected.
inline std::optional<Rational> try_weighted_degree(const Poly& p, const WeightSystem& w) {
    if (p.ctx().with_s)
        throw ContextMismatch("weighted degree is defined on x-polynomials only");
    if (static_cast<std::size_t>(p.ctx().nvars) != w.size())
        throw ContextMismatch("weight system size does not match variable count");
    if (p.is_zero()) throw ZeroPolynomial("weighted degree of the zero polynomial");
    std::optional<Rational> deg;
    for (const auto& [m, c] : p.terms()) {
        Rational d = weighted_degree_of(m, w);
        if (!deg)
            deg = d;
        else if (*deg != d)
            return std::nullopt;
    }
    return deg;
}

inline Rational weighted_degree(const Poly& p, const WeightSystem& w) {
    auto d = try_weighted_degree(p, w);
    if (!d) throw NotHomogeneous("polynomial is not weighted-homogeneous");
    return *d;
}

inline bool is_weighted_homogeneous(const Poly& p, const WeightSystem& w) {
    return try_weighted_degree(p, w).has_value();
}

namespace detail {

// Solve A x = rhs over Q by Gauss-Jordan elimination. Returns nullopt when
// inconsistent; free variables are pinned to 1 (documented canonical choice).
inline std::optional<std::vector<Rational>> solve_canonical(
    std::vector<std::vector<Rational>> a, std::vector<Rational> rhs) {
    const std::size_t rows = a.size();
    const std::size_t cols = rows ? a[0].size() : 0;
    std::vector<std::size_t> pivot_col;
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols && r < rows; ++c) {
        std::size_t sel = r;
        while (sel < rows && a[sel][c] == 0) ++sel;
        if (sel == rows) continue;
        std::swap(a[sel], a[r]);
        std::swap(rhs[sel], rhs[r]);
        Rational inv = Rational(1) / a[r][c];
        for (std::size_t j = c; j < cols; ++j) a[r][j] *= inv;
        rhs[r] *= inv;
        for (std::size_t i = 0; i < rows; ++i) {
            if (i == r || a[i][c] == 0) continue;
            Rational f = a[i][c];
            for (std::size_t j = c; j < cols; ++j) a[i][j] -= f * a[r][j];
            rhs[i] -= f * rhs[r];
        }
        pivot_col.push_back(c);
        ++r;
    }
    for (std::size_t i = r; i < rows; ++i)
        if (rhs[i] != 0) return std::nullopt;

    std::vector<Rational> x(cols, Rational(1)); // free variables := 1
    for (std::size_t k = r; k-- > 0;) {
        std::size_t c = pivot_col[k];
        Rational v = rhs[k];
        for (std::size_t j = c + 1; j < cols; ++j) v -= a[k][j] * x[j];
        x[c] = v;
    }
    return x;
}

} // namespace detail

// Weight system giving each polys[k] the prescribed weighted degree.
// 0-dimensional solution spaces give the unique answer; otherwise free
// parameters are set to 1 after elimination. Rejects non-positive weights.
inline WeightSystem infer_weights(const std::vector<Poly>& polys,
                                  const std::vector<Rational>& degrees) {
    if (polys.empty() || polys.size() != degrees.size())
        throw NoSolution("need one target degree per polynomial");
    const int n = polys[0].ctx().nvars;
    std::vector<std::vector<Rational>> a;
    std::vector<Rational> rhs;
    for (std::size_t k = 0; k < polys.size(); ++k) {
        const Poly& p = polys[k];
        if (p.ctx().with_s || p.ctx().nvars != n)
            throw ContextMismatch("infer_weights needs x-polynomials in one ring");
        if (p.is_zero()) throw ZeroPolynomial("cannot infer weights from 0");
        for (const auto& [m, c] : p.terms()) {
            std::vector<Rational> row(static_cast<std::size_t>(n), Rational(0));
            for (int i = 0; i < n; ++i) row[static_cast<std::size_t>(i)] = m[static_cast<std::size_t>(i)];
            a.push_back(std::move(row));
            rhs.push_back(degrees[k]);
        }
    }
    auto sol = detail::solve_canonical(std::move(a), std::move(rhs));
    if (!sol) throw NoSolution("degree constraints are inconsistent");
    for (const auto& wi : *sol)
        if (wi <= 0) throw NoSolution("no strictly positive weight solution (canonical representative has a weight <= 0)");
    return WeightSystem(std::move(*sol));
}

// Joint inference for a morphism (h_1..h_p, f): unknown weights plus unknown
// degrees d_1..d_p for the h_i, with f pinned to weighted degree 1. Used by
// the CLI's `--weights infer`.
inline WeightSystem infer_unit_weights(const std::vector<Poly>& h, const Poly& f) {
    const int n = f.ctx().nvars;
    const std::size_t p = h.size();
    const std::size_t cols = static_cast<std::size_t>(n) + p;
    std::vector<std::vector<Rational>> a;
    std::vector<Rational> rhs;
    auto exponent_row = [&](const Monomial& m) {
        std::vector<Rational> row(cols, Rational(0));
        for (int i = 0; i < n; ++i) row[static_cast<std::size_t>(i)] = m[static_cast<std::size_t>(i)];
        return row;
    };
    if (f.is_zero()) throw ZeroPolynomial("cannot infer weights from 0");
    for (const auto& [m, c] : f.terms()) {
        a.push_back(exponent_row(m));
        rhs.push_back(Rational(1));
    }
    for (std::size_t k = 0; k < p; ++k) {
        if (h[k].ctx() != f.ctx())
            throw ContextMismatch("morphism components live in different rings");
        if (h[k].is_zero()) throw ZeroPolynomial("cannot infer weights from 0");
        for (const auto& [m, c] : h[k].terms()) {
            auto row = exponent_row(m);
            row[static_cast<std::size_t>(n) + k] = -1; // a.w - d_k = 0
            a.push_back(std::move(row));
            rhs.push_back(Rational(0));
        }
    }
    auto sol = detail::solve_canonical(std::move(a), std::move(rhs));
    if (!sol) throw NoSolution("no weight system makes all components weighted-homogeneous with deg f = 1");
    for (std::size_t i = 0; i < cols; ++i)
        if ((*sol)[i] <= 0)
            throw NoSolution("no strictly positive weight solution (canonical representative has a weight <= 0)");
    return WeightSystem(std::vector<Rational>(sol->begin(), sol->begin() + n));
}

} // namespace bsato
