// Exact elements of Q(u, v), u = q^{1/4}, v = t^{1/2}.
#pragma once

#include "hecke/poly2.hpp"

#include <complex>
#include <string>

namespace hecke {

class Scalar {
public:
    Scalar() : num_(), den_(1) {}
    Scalar(long c) : num_(c), den_(1) {}  // NOLINT
    Scalar(const Poly2& n) : num_(n), den_(1) {}  // NOLINT
    Scalar(const Poly2& n, const Poly2& d);  // normalizes; throws on d == 0

    // c * u^a * v^b with arbitrary integer exponents.
    static Scalar mono(long c, int a, int b);
    static Scalar q(int n = 1) { return mono(1, 4 * n, 0); }     // q^n
    static Scalar qhalf(int n = 1) { return mono(1, 2 * n, 0); } // q^{n/2}
    static Scalar t(int n = 1) { return mono(1, 0, 2 * n); }     // t^n
    static Scalar thalf(int n = 1) { return mono(1, 0, n); }     // t^{n/2}
    static Scalar rational(long p, long q);

    const Poly2& num() const { return num_; }
    const Poly2& den() const { return den_; }
    bool is_zero() const { return num_.is_zero(); }
    bool is_one() const { return num_.is_one() && den_.is_one(); }

    Scalar operator-() const;
    Scalar inv() const;
    friend Scalar operator+(const Scalar& a, const Scalar& b);
    friend Scalar operator-(const Scalar& a, const Scalar& b);
    friend Scalar operator*(const Scalar& a, const Scalar& b);
    friend Scalar operator/(const Scalar& a, const Scalar& b);
    Scalar& operator+=(const Scalar& o) { return *this = *this + o; }
    Scalar& operator-=(const Scalar& o) { return *this = *this - o; }
    Scalar& operator*=(const Scalar& o) { return *this = *this * o; }
    Scalar& operator/=(const Scalar& o) { return *this = *this / o; }
    Scalar pow(int n) const;
    bool operator==(const Scalar& o) const { return num_ == o.num_ && den_ == o.den_; }
    bool operator!=(const Scalar& o) const { return !(*this == o); }

    // Substitutions u -> 1/u (q -> 1/q) and v -> 1/v (t -> 1/t).
    Scalar inv_u() const;
    Scalar inv_v() const;
    // u -> u^r (r > 0); e.g. r = 2 realizes q^{1/4} -> q^{1/2}.
    Scalar scale_u(int r) const;
    // Limits; throw std::domain_error on divergence.
    Scalar limit_v0() const;
    Scalar limit_vinf() const;
    Scalar limit_v1() const;
    Scalar limit_u0() const;
    bool has_v() const;
    bool has_u() const;
    // Orders of vanishing at u = 0 (may be negative).
    int ord_u() const;
    int ord_v() const;

    std::complex<double> eval(std::complex<double> u0, std::complex<double> v0) const;

    std::string str() const;

private:
    Poly2 num_, den_;
    struct Raw {};
    Scalar(Poly2 n, Poly2 d, Raw) : num_(std::move(n)), den_(std::move(d)) {}
    static Scalar make(Poly2 n, Poly2 d);
};

}  // namespace hecke
