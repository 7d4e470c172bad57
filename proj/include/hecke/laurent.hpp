// Laurent polynomials with Scalar coefficients in one variable (int exponents)
// or in a rank-two lattice (std::array<int,2> exponents).
#pragma once

#include "hecke/scalar.hpp"

#include <algorithm>
#include <array>
#include <functional>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

namespace hecke {

using Exp2 = std::array<int, 2>;

inline int exp_dot(int a, int b) { return a * b; }
inline int exp_dot(const Exp2& a, const Exp2& b) { return a[0] * b[0] + a[1] * b[1]; }
inline int exp_add(int a, int b) { return a + b; }
inline Exp2 exp_add(const Exp2& a, const Exp2& b) { return {a[0] + b[0], a[1] + b[1]}; }
inline int exp_neg(int a) { return -a; }
inline Exp2 exp_neg(const Exp2& a) { return {-a[0], -a[1]}; }
inline bool exp_is_zero(int a) { return a == 0; }
inline bool exp_is_zero(const Exp2& a) { return a[0] == 0 && a[1] == 0; }
// Identifies the line e + Z*alpha (alpha primitive in rank two).
inline long exp_line(int e, int alpha) {
    int d = std::abs(alpha);
    return ((e % d) + d) % d;
}
inline long exp_line(const Exp2& e, const Exp2& alpha) {
    return static_cast<long>(e[0]) * alpha[1] - static_cast<long>(e[1]) * alpha[0];
}

template <class E>
class Laurent {
public:
    using Map = std::map<E, Scalar>;

    Laurent() = default;
    Laurent(const Scalar& c) {  // NOLINT
        if (!c.is_zero()) m_[E{}] = c;
    }
    Laurent(long c) : Laurent(Scalar(c)) {}  // NOLINT
    static Laurent mono(const E& e, const Scalar& c = Scalar(1)) {
        Laurent r;
        if (!c.is_zero()) r.m_[e] = c;
        return r;
    }

    const Map& terms() const { return m_; }
    bool is_zero() const { return m_.empty(); }
    std::size_t size() const { return m_.size(); }
    Scalar coeff(const E& e) const {
        auto it = m_.find(e);
        return it == m_.end() ? Scalar() : it->second;
    }
    void add_term(const E& e, const Scalar& c) {
        if (c.is_zero()) return;
        auto [it, ins] = m_.try_emplace(e, c);
        if (!ins) {
            it->second += c;
            if (it->second.is_zero()) m_.erase(it);
        }
    }

    Laurent operator-() const {
        Laurent r = *this;
        for (auto& [e, c] : r.m_) c = -c;
        return r;
    }
    Laurent& operator+=(const Laurent& o) {
        for (auto& [e, c] : o.m_) add_term(e, c);
        return *this;
    }
    Laurent& operator-=(const Laurent& o) {
        for (auto& [e, c] : o.m_) add_term(e, -c);
        return *this;
    }
    friend Laurent operator+(Laurent a, const Laurent& b) { return a += b; }
    friend Laurent operator-(Laurent a, const Laurent& b) { return a -= b; }
    friend Laurent operator*(const Laurent& a, const Laurent& b) {
        Laurent r;
        for (auto& [e1, c1] : a.m_)
            for (auto& [e2, c2] : b.m_) r.add_term(exp_add(e1, e2), c1 * c2);
        return r;
    }
    friend Laurent operator*(const Scalar& s, const Laurent& a) {
        if (s.is_zero()) return {};
        Laurent r;
        for (auto& [e, c] : a.m_) r.m_.emplace_hint(r.m_.end(), e, s * c);
        return r;
    }
    Laurent& operator*=(const Laurent& o) { return *this = *this * o; }
    bool operator==(const Laurent& o) const { return m_ == o.m_; }
    bool operator!=(const Laurent& o) const { return !(*this == o); }

    Laurent shifted(const E& d) const {
        Laurent r;
        for (auto& [e, c] : m_) r.m_.emplace(exp_add(e, d), c);
        return r;
    }

    // Apply e -> f(e), c -> g(e) * c.
    template <class F, class G>
    Laurent remap(F&& f, G&& g) const {
        Laurent r;
        for (auto& [e, c] : m_) r.add_term(f(e), g(e) * c);
        return r;
    }
    template <class F>
    Laurent map_coeffs(F&& f) const {
        Laurent r;
        for (auto& [e, c] : m_) r.add_term(e, f(c));
        return r;
    }

    // Exact quotient f / (1 - Z^{-alpha}); throws when not exact.
    Laurent div_one_minus(const E& alpha) const {
        if (exp_is_zero(alpha)) throw std::logic_error("div_one_minus: zero direction");
        // g_e = sum_{j >= 0} f_{e + j alpha}
        std::map<long, std::vector<std::pair<int, const std::pair<const E, Scalar>*>>> lines;
        int step = exp_dot(alpha, alpha);
        for (auto& kv : m_) lines[exp_line(kv.first, alpha)].push_back({exp_dot(kv.first, alpha), &kv});
        Laurent r;
        for (auto& [key, pts] : lines) {
            std::sort(pts.begin(), pts.end(),
                      [](auto& x, auto& y) { return x.first > y.first; });
            E top = pts.front().second->first;
            int top_dot = pts.front().first;
            Scalar run;
            std::size_t i = 0;
            int last = pts.back().first;
            E e = top;
            const E down = exp_neg(alpha);
            for (int d = top_dot; d >= last; d -= step, e = exp_add(e, down)) {
                if (i < pts.size() && pts[i].first == d) {
                    run += pts[i].second->second;
                    ++i;
                }
                if (d == last) {
                    if (!run.is_zero()) throw std::logic_error("Laurent: inexact division by (1 - Z^-a)");
                    break;
                }
                if (!run.is_zero()) r.m_[e] = run;
            }
        }
        return r;
    }

    template <class F>
    Laurent apply_scalar_map(F&& f) const {
        Laurent r;
        for (auto& [e, c] : m_) r.add_term(e, f(c));
        return r;
    }

private:
    Map m_;
};

using LaurentX = Laurent<int>;
using Laurent2 = Laurent<Exp2>;

// Degree data for one-variable polynomials.
inline int max_exp(const LaurentX& f) {
    if (f.is_zero()) throw std::domain_error("degree of zero");
    return f.terms().rbegin()->first;
}
inline int min_exp(const LaurentX& f) {
    if (f.is_zero()) throw std::domain_error("degree of zero");
    return f.terms().begin()->first;
}

// The symmetries s, Gamma, Gamma^{-1}, omega, pi on one-variable polynomials
// in X = q^x.  Gamma(f)(x) = f(x + 1/2), omega = Gamma^{-1}, pi = omega s.
enum class Sym { s, Gamma, GammaInv, omega, pi };

LaurentX apply_symmetry(const LaurentX& f, Sym g);
Sym parse_symmetry(const std::string& tag);

LaurentX X(int n = 1);
// Scalar-valued evaluation at X = value.
Scalar eval_at(const LaurentX& f, const Scalar& x);
// Substitute X -> c X.
LaurentX scale_var(const LaurentX& f, const Scalar& c);
LaurentX map_scalars(const LaurentX& f, const std::function<Scalar(const Scalar&)>& g);

}  // namespace hecke
