#pragma once

#include <algorithm>
#include <numeric>
#include <vector>

namespace bsato {

// Exponent vector of fixed length (the length is pinned by the ring
// context that owns the monomial).
struct Monomial {
    std::vector<int> e;

    Monomial() = default;
    explicit Monomial(std::size_t n) : e(n, 0) {}
    explicit Monomial(std::vector<int> exps) : e(std::move(exps)) {}

    std::size_t size() const { return e.size(); }
    int operator[](std::size_t i) const { return e[i]; }
    int& operator[](std::size_t i) { return e[i]; }

    bool is_one() const {
        return std::all_of(e.begin(), e.end(), [](int x) { return x == 0; });
    }

    int total_degree() const { return std::accumulate(e.begin(), e.end(), 0); }

    Monomial operator*(const Monomial& o) const {
        Monomial r(e.size());
        for (std::size_t i = 0; i < e.size(); ++i) r.e[i] = e[i] + o.e[i];
        return r;
    }

    bool divides(const Monomial& o) const {
        for (std::size_t i = 0; i < e.size(); ++i)
            if (e[i] > o.e[i]) return false;
        return true;
    }

    // caller guarantees divisibility
    Monomial divided_by(const Monomial& o) const {
        Monomial r(e.size());
        for (std::size_t i = 0; i < e.size(); ++i) r.e[i] = e[i] - o.e[i];
        return r;
    }

    static Monomial lcm(const Monomial& a, const Monomial& b) {
        Monomial r(a.e.size());
        for (std::size_t i = 0; i < a.e.size(); ++i) r.e[i] = std::max(a.e[i], b.e[i]);
        return r;
    }

    static bool coprime(const Monomial& a, const Monomial& b) {
        for (std::size_t i = 0; i < a.e.size(); ++i)
            if (a.e[i] > 0 && b.e[i] > 0) return false;
        return true;
    }

    bool operator==(const Monomial& o) const { return e == o.e; }
    bool operator!=(const Monomial& o) const { return e != o.e; }
    // canonical container key; term order is a separate concern (order.hpp)
    bool operator<(const Monomial& o) const { return e < o.e; }
};

} // namespace bsato
