// Formal series in u = q^{1/4} truncated above a fixed order, with
// Laurent-polynomial coefficients.
#pragma once

#include "hecke/laurent.hpp"

#include <map>

namespace hecke {

template <class E>
class TruncSeries {
public:
    explicit TruncSeries(int order = 20) : order_(order) {}
    static TruncSeries constant(const Laurent<E>& c, int order) {
        TruncSeries s(order);
        s.add(0, c);
        return s;
    }

    int order() const { return order_; }
    const std::map<int, Laurent<E>>& terms() const { return c_; }
    Laurent<E> coeff(int k) const {
        auto it = c_.find(k);
        return it == c_.end() ? Laurent<E>() : it->second;
    }
    bool is_zero() const { return c_.empty(); }

    // Adds c * u^k; terms beyond the order are dropped.
    void add(int k, const Laurent<E>& c) {
        if (k > order_ || c.is_zero()) return;
        auto& slot = c_[k];
        slot += c;
        if (slot.is_zero()) c_.erase(k);
    }

    TruncSeries truncated(int order) const {
        TruncSeries r(order);
        for (auto& [k, c] : c_) r.add(k, c);
        return r;
    }

    TruncSeries& operator+=(const TruncSeries& o) {
        order_ = std::min(order_, o.order_);
        for (auto it = c_.begin(); it != c_.end();)
            it = it->first > order_ ? c_.erase(it) : std::next(it);
        for (auto& [k, c] : o.c_) add(k, c);
        return *this;
    }
    TruncSeries& operator-=(const TruncSeries& o) { return *this += -o; }
    TruncSeries operator-() const {
        TruncSeries r(order_);
        for (auto& [k, c] : c_) r.c_[k] = -c;
        return r;
    }
    friend TruncSeries operator+(TruncSeries a, const TruncSeries& b) { return a += b; }
    friend TruncSeries operator-(TruncSeries a, const TruncSeries& b) { return a -= b; }
    friend TruncSeries operator*(const TruncSeries& a, const TruncSeries& b) {
        return product(a, b, std::min(a.order_, b.order_));
    }
    bool operator==(const TruncSeries& o) const { return order_ == o.order_ && c_ == o.c_; }

    // Product modulo u^{order+1}.  Coefficients at negative u-powers are allowed
    // but then truncation consistency is only guaranteed for nonnegative supports.
    static TruncSeries product(const TruncSeries& a, const TruncSeries& b, int order) {
        TruncSeries r(order);
        for (auto& [k1, c1] : a.c_)
            for (auto& [k2, c2] : b.c_)
                if (k1 + k2 <= order) r.add(k1 + k2, c1 * c2);
        return r;
    }

    // Inverse of a series whose u^0 coefficient is an invertible constant.
    TruncSeries inverse() const {
        Laurent<E> c0 = coeff(0);
        if (c0.size() != 1 || !exp_is_zero(c0.terms().begin()->first))
            throw std::domain_error("series inverse needs a constant leading term");
        Scalar inv0 = c0.terms().begin()->second.inv();
        TruncSeries r(order_);
        r.add(0, Laurent<E>(inv0));
        for (int k = 1; k <= order_; ++k) {
            Laurent<E> acc;
            for (auto& [j, c] : c_) {
                if (j == 0) continue;
                if (j > k) break;
                acc += c * r.coeff(k - j);
            }
            r.add(k, -(inv0 * acc));
        }
        return r;
    }

private:
    int order_;
    std::map<int, Laurent<E>> c_;
};

using SeriesX = TruncSeries<int>;

}  // namespace hecke
