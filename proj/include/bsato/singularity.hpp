#pragma once

#include <map>
#include <vector>

#include "bsato/groebner.hpp"
#include "bsato/poly.hpp"
#include "bsato/weights.hpp"

namespace bsato {

// Ordered tuple (h_1..h_p, f) of polynomials cutting out a complete
// intersection germ at the origin. p = 0 is the hypersurface case.
struct Morphism {
    Context ctx;
    std::vector<Poly> h;
    Poly f;

    Morphism(std::vector<Poly> h_components, Poly f_component)
        : ctx(f_component.ctx()), h(std::move(h_components)), f(std::move(f_component)) {
        if (ctx.with_s) throw ContextMismatch("morphism components are x-polynomials");
        for (const auto& c : h)
            if (c.ctx() != ctx) throw ContextMismatch("morphism components in different rings");
        auto check = [](const Poly& g, const std::string& name) {
            if (g.is_zero()) throw InvalidMorphism(name + " is the zero polynomial");
            if (g.constant_term() != 0)
                throw InvalidMorphism(name + " does not vanish at the origin");
        };
        for (std::size_t i = 0; i < h.size(); ++i)
            check(h[i], "h" + std::to_string(i + 1));
        check(f, "f");
        if (p() + 1 > n())
            throw BadArity("morphism has p+1 = " + std::to_string(p() + 1) +
                           " components in only " + std::to_string(n()) + " variables");
    }

    int p() const { return static_cast<int>(h.size()); }
    int n() const { return ctx.nvars; }

    bool operator==(const Morphism& o) const {
        return ctx == o.ctx && h == o.h && f == o.f;
    }
    bool operator!=(const Morphism& o) const { return !(*this == o); }
};

// Weights rescaled so f has weighted degree exactly 1, plus the degrees
// rho_i of the h_i, |alpha| and rho_h.
struct NormalizedWeights {
    WeightSystem alpha;
    std::vector<Rational> rho;
    Rational alpha_sum;
    Rational rho_sum;
};

inline NormalizedWeights normalize_weights(const Morphism& m, const WeightSystem& w) {
    auto degree_of = [&](const Poly& g, const std::string& name) {
        auto d = try_weighted_degree(g, w);
        if (!d) throw NotHomogeneous(name + " is not weighted-homogeneous for the given weights");
        return *d;
    };
    Rational df = degree_of(m.f, "f");
    NormalizedWeights out;
    out.alpha = w.scaled(Rational(1) / df);
    out.rho.reserve(m.h.size());
    for (std::size_t i = 0; i < m.h.size(); ++i)
        out.rho.push_back(degree_of(m.h[i], "h" + std::to_string(i + 1)) / df);
    out.alpha_sum = 0;
    for (const auto& a : out.alpha.w) out.alpha_sum += a;
    out.rho_sum = 0;
    for (const auto& r : out.rho) out.rho_sum += r;
    return out;
}

namespace detail {

// determinant by cofactor expansion along the first row (desk scale)
inline Poly det(const std::vector<std::vector<Poly>>& m, Context ctx) {
    const std::size_t q = m.size();
    if (q == 0) return Poly::constant(ctx, 1);
    if (q == 1) return m[0][0];
    Poly acc(ctx);
    for (std::size_t j = 0; j < q; ++j) {
        if (m[0][j].is_zero()) continue;
        std::vector<std::vector<Poly>> sub;
        sub.reserve(q - 1);
        for (std::size_t r = 1; r < q; ++r) {
            std::vector<Poly> row;
            row.reserve(q - 1);
            for (std::size_t c = 0; c < q; ++c)
                if (c != j) row.push_back(m[r][c]);
            sub.push_back(std::move(row));
        }
        Poly cof = m[0][j] * det(sub, ctx);
        acc += (j % 2 == 0) ? cof : -cof;
    }
    return acc;
}

inline void combinations(int n, int q, std::vector<std::vector<int>>& out) {
    std::vector<int> cur(static_cast<std::size_t>(q));
    for (int i = 0; i < q; ++i) cur[static_cast<std::size_t>(i)] = i + 1;
    if (q > n) return;
    while (true) {
        out.push_back(cur);
        int i = q - 1;
        while (i >= 0 && cur[static_cast<std::size_t>(i)] == n - (q - 1 - i)) --i;
        if (i < 0) break;
        ++cur[static_cast<std::size_t>(i)];
        for (int j = i + 1; j < q; ++j)
            cur[static_cast<std::size_t>(j)] = cur[static_cast<std::size_t>(j - 1)] + 1;
    }
}

} // namespace detail

// All q x q minors of the Jacobian of the given components (q = component
// count), columns k_1 < ... < k_q keyed 1-based. Zero minors are kept in
// the map; callers filter.
inline std::map<std::vector<int>, Poly> gradient_minors(const std::vector<Poly>& components,
                                                        Context ctx) {
    const int n = ctx.nvars;
    const int q = static_cast<int>(components.size());
    if (q > n) throw BadArity("more Jacobian rows than columns");
    std::vector<std::vector<Poly>> rows;
    for (const auto& g : components) {
        if (g.ctx() != ctx) throw ContextMismatch("components in different rings");
        std::vector<Poly> row;
        for (int c = 0; c < n; ++c) row.push_back(g.derivative(c));
        rows.push_back(std::move(row));
    }
    std::vector<std::vector<int>> tuples;
    detail::combinations(n, q, tuples);
    std::map<std::vector<int>, Poly> out;
    for (const auto& cols : tuples) {
        std::vector<std::vector<Poly>> sub;
        for (int r = 0; r < q; ++r) {
            std::vector<Poly> row;
            for (int k : cols) row.push_back(rows[static_cast<std::size_t>(r)][static_cast<std::size_t>(k - 1)]);
            sub.push_back(std::move(row));
        }
        out.emplace(cols, detail::det(sub, ctx));
    }
    return out;
}

// Maximal minors of the Jacobian matrix, rows in morphism order
// (h_1..h_p[, f]).
inline std::map<std::vector<int>, Poly> jacobian_minors(const Morphism& m, bool include_f) {
    std::vector<Poly> components = m.h;
    if (include_f) components.push_back(m.f);
    return gradient_minors(components, m.ctx);
}

// Minor of the h-rows over an explicit column tuple; the 0x0 determinant
// (p = 0) is 1.
inline Poly h_minor(const Morphism& m, const std::vector<int>& cols) {
    if (static_cast<int>(cols.size()) != m.p())
        throw BadArity("column tuple size must equal p");
    std::vector<std::vector<Poly>> sub;
    for (const auto& hi : m.h) {
        std::vector<Poly> row;
        for (int k : cols) row.push_back(hi.derivative(k - 1));
        sub.push_back(std::move(row));
    }
    return detail::det(sub, m.ctx);
}

// J_h (include_f = false) or J_{h,f} (include_f = true): the ideal generated
// by the nonzero maximal minors.
// Component form is usable for p = n tuples, which a Morphism cannot carry.
inline Ideal jacobian_ideal(const std::vector<Poly>& components, Context ctx) {
    std::vector<Poly> gens;
    for (const auto& [cols, minor] : gradient_minors(components, ctx))
        if (!minor.is_zero()) gens.push_back(minor);
    if (gens.empty())
        throw DegenerateJacobian("all maximal minors of the Jacobian vanish identically");
    return Ideal(ctx, std::move(gens));
}

inline Ideal jacobian_ideal(const Morphism& m, bool include_f) {
    std::vector<Poly> components = m.h;
    if (include_f) components.push_back(m.f);
    return jacobian_ideal(components, m.ctx);
}

} // namespace bsato
