#pragma once

#include <algorithm>
#include <map>
#include <optional>
#include <set>
#include <vector>

#include "bsato/order.hpp"
#include "bsato/poly.hpp"
#include "bsato/weights.hpp"

namespace bsato {

// Finitely generated ideal of Q[x1..xn]. Construction normalizes: zero
// generators are rejected, each generator is made monic with respect to a
// fixed internal order (plain grevlex), exact duplicates are dropped.
struct Ideal {
    Context ctx;
    std::vector<Poly> gens;

    Ideal(Context c, std::vector<Poly> generators) : ctx(c) {
        if (generators.empty()) throw ZeroPolynomial("ideal needs at least one generator");
        MonomialOrder ref = MonomialOrder::grevlex(c.nvars);
        for (auto& g : generators) {
            if (g.ctx() != ctx) throw ContextMismatch("ideal generators in different rings");
            if (g.is_zero()) throw ZeroPolynomial("zero ideal generator");
            const Monomial* lead = nullptr;
            for (const auto& [m, co] : g.terms())
                if (!lead || ref.greater(m, *lead)) lead = &m;
            Poly monic = g.scaled(Rational(1) / g.terms().at(*lead));
            if (std::find(gens.begin(), gens.end(), monic) == gens.end())
                gens.push_back(std::move(monic));
        }
    }
};

struct BuchbergerLimits {
    int degree_bound = 60;            // total degree of any S-pair lcm
    long long spair_budget = 1000000; // processed S-pairs
};

namespace gb_detail {

struct Term {
    Monomial m;
    Rational c;
};
using TermVec = std::vector<Term>; // strictly descending in the active order

inline TermVec to_sorted(const Poly& p, const MonomialOrder& ord) {
    TermVec v;
    v.reserve(p.term_count());
    for (const auto& [m, c] : p.terms()) v.push_back({m, c});
    std::sort(v.begin(), v.end(),
              [&](const Term& a, const Term& b) { return ord.greater(a.m, b.m); });
    return v;
}

inline Poly to_poly(const TermVec& v, Context ctx) {
    Poly p(ctx);
    for (const auto& t : v) p.add_term(t.m, t.c);
    return p;
}

// p - c * x^m * g, both inputs sorted; single merge pass
inline TermVec sub_mul(const TermVec& p, const Rational& c, const Monomial& m,
                       const TermVec& g, const MonomialOrder& ord) {
    TermVec out;
    out.reserve(p.size() + g.size());
    std::size_t i = 0, j = 0;
    while (i < p.size() || j < g.size()) {
        if (j == g.size()) { out.push_back(p[i++]); continue; }
        Monomial gm = g[j].m * m;
        if (i == p.size()) {
            out.push_back({std::move(gm), -c * g[j].c});
            ++j;
            continue;
        }
        int cmp = ord.compare(p[i].m, gm);
        if (cmp > 0) {
            out.push_back(p[i++]);
        } else if (cmp < 0) {
            out.push_back({std::move(gm), -c * g[j].c});
            ++j;
        } else {
            Rational k = p[i].c - c * g[j].c;
            if (k != 0) out.push_back({p[i].m, std::move(k)});
            ++i;
            ++j;
        }
    }
    return out;
}

// full remainder of multivariate division by basis (deterministic: first
// basis element whose leading monomial divides the current term wins)
inline TermVec reduce_full(TermVec p, const std::vector<TermVec>& basis,
                           const MonomialOrder& ord) {
    TermVec remainder;
    while (!p.empty()) {
        const Term& lt = p.front();
        const TermVec* divisor = nullptr;
        for (const auto& g : basis) {
            if (!g.empty() && g.front().m.divides(lt.m)) { divisor = &g; break; }
        }
        if (!divisor) {
            remainder.push_back(lt);
            p.erase(p.begin());
            continue;
        }
        Monomial q = lt.m.divided_by(divisor->front().m);
        Rational c = lt.c / divisor->front().c;
        p = sub_mul(p, c, q, *divisor, ord);
    }
    return remainder;
}

inline TermVec make_monic(TermVec v) {
    if (!v.empty() && v.front().c != 1) {
        Rational inv = Rational(1) / v.front().c;
        for (auto& t : v) t.c *= inv;
    }
    return v;
}

inline TermVec spoly(const TermVec& f, const TermVec& g, const MonomialOrder& ord) {
    Monomial l = Monomial::lcm(f.front().m, g.front().m);
    // both monic: S = x^(l/lm f) f - x^(l/lm g) g
    Monomial uf = l.divided_by(f.front().m);
    Monomial ug = l.divided_by(g.front().m);
    TermVec a;
    a.reserve(f.size());
    for (const auto& t : f) a.push_back({t.m * uf, t.c});
    return sub_mul(a, Rational(1), ug, g, ord);
}

} // namespace gb_detail

// Reduced Groebner basis: monic elements, no term of any element divisible
// by the leading monomial of another, sorted by leading monomial ascending.
struct GroebnerBasis {
    Context ctx;
    MonomialOrder order;
    std::vector<Poly> elements;
    std::vector<Monomial> leading; // aligned with elements

    bool contains_unit() const {
        return elements.size() == 1 && leading[0].is_one();
    }
};

inline GroebnerBasis buchberger(const Ideal& ideal, const MonomialOrder& order,
                                const BuchbergerLimits& limits = {}) {
    using namespace gb_detail;
    if (order.nvars() != static_cast<std::size_t>(ideal.ctx.nvars))
        throw ContextMismatch("order variable count does not match ideal ring");

    std::vector<TermVec> g;
    for (const auto& p : ideal.gens) g.push_back(make_monic(to_sorted(p, order)));

    // pair queue: (scaled weighted degree of lcm, i, j), i < j
    using PairKey = std::tuple<long long, int, int>;
    std::set<PairKey> queue;
    std::set<std::pair<int, int>> pending;
    auto push_pair = [&](int i, int j) {
        if (i > j) std::swap(i, j);
        Monomial l = Monomial::lcm(g[static_cast<std::size_t>(i)].front().m,
                                   g[static_cast<std::size_t>(j)].front().m);
        queue.insert({order.weighted_degree(l), i, j});
        pending.insert({i, j});
    };
    for (int i = 0; i < static_cast<int>(g.size()); ++i)
        for (int j = i + 1; j < static_cast<int>(g.size()); ++j) push_pair(i, j);

    long long processed = 0;
    while (!queue.empty()) {
        auto [deg, i, j] = *queue.begin();
        queue.erase(queue.begin());
        pending.erase({i, j});
        const Monomial lm_i = g[static_cast<std::size_t>(i)].front().m;
        const Monomial lm_j = g[static_cast<std::size_t>(j)].front().m;
        Monomial l = Monomial::lcm(lm_i, lm_j);
        if (l.total_degree() > limits.degree_bound)
            throw ResourceLimit("S-pair degree bound exceeded (" +
                                std::to_string(limits.degree_bound) + ")");
        if (++processed > limits.spair_budget)
            throw ResourceLimit("S-pair budget exceeded");

        // Buchberger's first criterion: coprime leading monomials
        if (Monomial::coprime(lm_i, lm_j)) continue;
        // chain criterion: some g_k divides the lcm and both side pairs settled
        bool skip = false;
        for (int k = 0; k < static_cast<int>(g.size()) && !skip; ++k) {
            if (k == i || k == j) continue;
            if (!g[static_cast<std::size_t>(k)].front().m.divides(l)) continue;
            auto p1 = std::minmax(i, k);
            auto p2 = std::minmax(j, k);
            if (!pending.count({p1.first, p1.second}) && !pending.count({p2.first, p2.second}))
                skip = true;
        }
        if (skip) continue;

        TermVec s = spoly(g[static_cast<std::size_t>(i)], g[static_cast<std::size_t>(j)], order);
        TermVec r = reduce_full(std::move(s), g, order);
        if (r.empty()) continue;
        g.push_back(make_monic(std::move(r)));
        int t = static_cast<int>(g.size()) - 1;
        for (int k = 0; k < t; ++k) push_pair(k, t);
    }

    // minimalize: drop elements whose leading monomial is divisible by the
    // leading monomial of another kept element
    std::vector<bool> keep(g.size(), true);
    for (std::size_t a = 0; a < g.size(); ++a) {
        if (!keep[a]) continue;
        for (std::size_t b = 0; b < g.size(); ++b) {
            if (a == b || !keep[b]) continue;
            const Monomial& la = g[a].front().m;
            const Monomial& lb = g[b].front().m;
            if (lb.divides(la) && (la != lb || b < a)) { keep[a] = false; break; }
        }
    }
    std::vector<TermVec> minimal;
    for (std::size_t a = 0; a < g.size(); ++a)
        if (keep[a]) minimal.push_back(std::move(g[a]));

    // tail reduction against the other elements gives the reduced basis
    std::vector<TermVec> reduced;
    for (std::size_t a = 0; a < minimal.size(); ++a) {
        std::vector<TermVec> others;
        for (std::size_t b = 0; b < minimal.size(); ++b)
            if (b != a) others.push_back(minimal[b]);
        reduced.push_back(make_monic(reduce_full(minimal[a], others, order)));
    }
    std::sort(reduced.begin(), reduced.end(), [&](const TermVec& x, const TermVec& y) {
        return order.less(x.front().m, y.front().m);
    });

    GroebnerBasis out{ideal.ctx, order, {}, {}};
    for (auto& v : reduced) {
        out.leading.push_back(v.front().m);
        out.elements.push_back(to_poly(v, ideal.ctx));
    }
    return out;
}

// Remainder of multivariate division: no term of the result is divisible by
// any leading monomial of the basis, and p - normal_form(p) lies in the ideal.
inline Poly normal_form(const Poly& p, const GroebnerBasis& gb) {
    if (p.ctx() != gb.ctx) throw ContextMismatch("normal_form: ring mismatch");
    using namespace gb_detail;
    std::vector<TermVec> basis;
    for (const auto& e : gb.elements) basis.push_back(to_sorted(e, gb.order));
    return to_poly(reduce_full(to_sorted(p, gb.order), basis, gb.order), gb.ctx);
}

// Standard monomials of a zero-dimensional ideal, with their weighted
// degrees, sorted by (weight, order) ascending.
struct QuotientBasis {
    std::vector<Monomial> monomials;
    std::vector<Rational> weights;

    std::size_t dimension() const { return monomials.size(); }
};

inline QuotientBasis quotient_basis(const GroebnerBasis& gb, const WeightSystem& w) {
    if (w.size() != static_cast<std::size_t>(gb.ctx.nvars))
        throw ContextMismatch("weight system size does not match ring");
    const std::size_t n = w.size();
    if (gb.contains_unit()) return {};

    // finite iff every variable is bounded by a pure-power leading monomial
    std::vector<int> bound(n, -1);
    for (const auto& lm : gb.leading) {
        int support = -1;
        bool pure = true;
        for (std::size_t i = 0; i < n; ++i) {
            if (lm[i] > 0) {
                if (support >= 0) { pure = false; break; }
                support = static_cast<int>(i);
            }
        }
        if (!pure || support < 0) continue;
        std::size_t i = static_cast<std::size_t>(support);
        if (bound[i] < 0 || lm[i] < bound[i]) bound[i] = lm[i];
    }
    for (std::size_t i = 0; i < n; ++i)
        if (bound[i] < 0)
            throw InfiniteDimensional("quotient is infinite-dimensional: no pure power of " +
                                      gb.ctx.var_name(static_cast<int>(i)) +
                                      " among the leading monomials");

    QuotientBasis out;
    Monomial cur(n);
    // box walk below the pure-power staircase
    std::size_t pos = 0;
    while (true) {
        bool standard = true;
        for (const auto& lm : gb.leading)
            if (lm.divides(cur)) { standard = false; break; }
        if (standard) {
            out.monomials.push_back(cur);
            out.weights.push_back(weighted_degree_of(cur, w));
        }
        // increment odometer
        pos = 0;
        while (pos < n) {
            if (++cur[pos] < bound[pos]) break;
            cur[pos] = 0;
            ++pos;
        }
        if (pos == n) break;
    }

    std::vector<std::size_t> idx(out.monomials.size());
    for (std::size_t i = 0; i < idx.size(); ++i) idx[i] = i;
    std::sort(idx.begin(), idx.end(), [&](std::size_t a, std::size_t b) {
        if (out.weights[a] != out.weights[b]) return out.weights[a] < out.weights[b];
        return gb.order.less(out.monomials[a], out.monomials[b]);
    });
    QuotientBasis sorted;
    for (std::size_t i : idx) {
        sorted.monomials.push_back(out.monomials[i]);
        sorted.weights.push_back(out.weights[i]);
    }
    return sorted;
}

} // namespace bsato
