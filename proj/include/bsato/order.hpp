#pragma once

#include <numeric>
#include <vector>

#include "bsato/monomial.hpp"
#include "bsato/weights.hpp"

namespace bsato {

enum class OrderKind {
    WGrevlex, // weighted degree, ties by reverse lexicographic (x_n < ... < x_1)
    WGrlex,   // weighted degree, ties by lexicographic (x_1 > ... > x_n)
};

// Total monomial order compatible with a positive weight system. Rational
// weights are scaled by the lcm of their denominators once, so the hot
// comparison path works on integers; user-facing weighted degrees stay
// rational elsewhere.
class MonomialOrder {
public:
    MonomialOrder(OrderKind kind, const WeightSystem& w) : kind_(kind) {
        Int l = 1;
        for (const auto& wi : w.w) l = boost::multiprecision::lcm(l, den(wi));
        iw_.reserve(w.size());
        for (const auto& wi : w.w) {
            Rational scaled = wi * Rational(l);
            iw_.push_back(num(scaled).convert_to<long long>());
        }
    }

    static MonomialOrder grevlex(int nvars) {
        return MonomialOrder(OrderKind::WGrevlex,
                             WeightSystem(std::vector<Rational>(static_cast<std::size_t>(nvars), Rational(1))));
    }

    OrderKind kind() const { return kind_; }
    std::size_t nvars() const { return iw_.size(); }
    const std::vector<long long>& scaled_weights() const { return iw_; }

    long long weighted_degree(const Monomial& m) const {
        long long d = 0;
        for (std::size_t i = 0; i < iw_.size(); ++i) d += iw_[i] * m[i];
        return d;
    }

    // negative: a < b, zero: equal, positive: a > b
    int compare(const Monomial& a, const Monomial& b) const {
        long long da = weighted_degree(a), db = weighted_degree(b);
        if (da != db) return da < db ? -1 : 1;
        if (kind_ == OrderKind::WGrevlex) {
            for (std::size_t i = iw_.size(); i-- > 0;) {
                if (a[i] != b[i]) return a[i] > b[i] ? -1 : 1;
            }
        } else {
            for (std::size_t i = 0; i < iw_.size(); ++i) {
                if (a[i] != b[i]) return a[i] > b[i] ? 1 : -1;
            }
        }
        return 0;
    }

    bool less(const Monomial& a, const Monomial& b) const { return compare(a, b) < 0; }
    bool greater(const Monomial& a, const Monomial& b) const { return compare(a, b) > 0; }

private:
    OrderKind kind_;
    std::vector<long long> iw_;
};

} // namespace bsato
