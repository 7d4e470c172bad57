#include "hecke/scalar.hpp"

#include <cmath>
#include <stdexcept>
#include <vector>

namespace hecke {

namespace {

Poly2 low_v_part(const Poly2& p, int& deg) {
    deg = p.min_v();
    return p.v_part(deg);
}

Poly2 high_v_part(const Poly2& p, int& deg) {
    deg = p.deg_v();
    return p.v_part(deg);
}

}  // namespace

Scalar Scalar::make(Poly2 n, Poly2 d) {
    if (d.is_zero()) throw std::domain_error("division by zero in coefficient field");
    if (n.is_zero()) return Scalar();
    if (!d.is_one()) {
        Poly2 g = gcd(n, d);
        if (!g.is_one()) {
            n = n.exact_div(g);
            d = d.exact_div(g);
        }
    }
    if (d.lc() < 0) {
        n = -n;
        d = -d;
    }
    return Scalar(std::move(n), std::move(d), Raw{});
}

Scalar::Scalar(const Poly2& n, const Poly2& d) { *this = make(n, d); }

Scalar Scalar::mono(long c, int a, int b) {
    Poly2 n = Poly2::monomial(c, std::max(a, 0), std::max(b, 0));
    Poly2 d = Poly2::monomial(1, std::max(-a, 0), std::max(-b, 0));
    if (c == 0) return Scalar();
    return Scalar(std::move(n), std::move(d), Raw{});
}

Scalar Scalar::rational(long p, long q) { return make(Poly2(p), Poly2(q)); }

Scalar Scalar::operator-() const { return Scalar(-num_, den_, Raw{}); }

Scalar Scalar::inv() const {
    if (num_.is_zero()) throw std::domain_error("division by zero in coefficient field");
    Poly2 n = den_, d = num_;
    if (d.lc() < 0) {
        n = -n;
        d = -d;
    }
    return Scalar(std::move(n), std::move(d), Raw{});
}

Scalar operator*(const Scalar& x, const Scalar& y) {
    if (x.is_zero() || y.is_zero()) return Scalar();
    if (x.den_.is_one() && y.den_.is_one()) return Scalar(x.num_ * y.num_, Poly2(1), Scalar::Raw{});
    Poly2 a = x.num_, b = x.den_, c = y.num_, d = y.den_;
    if (!d.is_one()) {
        Poly2 g = gcd(a, d);
        if (!g.is_one()) {
            a = a.exact_div(g);
            d = d.exact_div(g);
        }
    }
    if (!b.is_one()) {
        Poly2 g = gcd(c, b);
        if (!g.is_one()) {
            c = c.exact_div(g);
            b = b.exact_div(g);
        }
    }
    Poly2 n = a * c, m = b * d;
    if (m.lc() < 0) {
        n = -n;
        m = -m;
    }
    return Scalar(std::move(n), std::move(m), Scalar::Raw{});
}

Scalar operator/(const Scalar& x, const Scalar& y) { return x * y.inv(); }

Scalar operator+(const Scalar& x, const Scalar& y) {
    if (x.is_zero()) return y;
    if (y.is_zero()) return x;
    if (x.den_ == y.den_) {
        Poly2 n = x.num_ + y.num_;
        if (x.den_.is_one()) return Scalar(std::move(n), Poly2(1), Scalar::Raw{});
        return Scalar::make(std::move(n), x.den_);
    }
    if (x.den_.is_one()) return Scalar(x.num_ * y.den_ + y.num_, y.den_, Scalar::Raw{});
    if (y.den_.is_one()) return Scalar(y.num_ * x.den_ + x.num_, x.den_, Scalar::Raw{});
    Poly2 g = gcd(x.den_, y.den_);
    if (g.is_one()) {
        // Sum of reduced fractions with coprime denominators is reduced.
        Poly2 n = x.num_ * y.den_ + y.num_ * x.den_;
        Poly2 d = x.den_ * y.den_;
        if (n.is_zero()) return Scalar();
        return Scalar(std::move(n), std::move(d), Scalar::Raw{});
    }
    Poly2 bg = x.den_.exact_div(g), dg = y.den_.exact_div(g);
    Poly2 n = x.num_ * dg + y.num_ * bg;
    if (n.is_zero()) return Scalar();
    Poly2 h = gcd(n, g);
    if (!h.is_one()) {
        n = n.exact_div(h);
        g = g.exact_div(h);
    }
    Poly2 d = bg * dg * g;
    if (d.lc() < 0) {
        n = -n;
        d = -d;
    }
    return Scalar(std::move(n), std::move(d), Scalar::Raw{});
}

Scalar operator-(const Scalar& x, const Scalar& y) { return x + (-y); }

Scalar Scalar::pow(int n) const {
    if (n < 0) return inv().pow(-n);
    Scalar r(1), b = *this;
    while (n) {
        if (n & 1) r = r * b;
        n >>= 1;
        if (n) b = b * b;
    }
    return r;
}

Scalar Scalar::inv_u() const {
    int dn = num_.deg_u(), dd = den_.deg_u();
    Poly2 n = num_.reverse_u(dn), d = den_.reverse_u(dd);
    int s = dd - dn;  // extra factor u^{s}
    if (s > 0) n = n * Poly2::u(s);
    if (s < 0) d = d * Poly2::u(-s);
    return make(std::move(n), std::move(d));
}

Scalar Scalar::inv_v() const {
    int dn = std::max(num_.deg_v(), 0), dd = std::max(den_.deg_v(), 0);
    Poly2 n = num_.reverse_v(dn), d = den_.reverse_v(dd);
    int s = dd - dn;
    if (s > 0) n = n * Poly2::v(s);
    if (s < 0) d = d * Poly2::v(-s);
    return make(std::move(n), std::move(d));
}

Scalar Scalar::scale_u(int r) const {
    return make(num_.scale_exponents(r, 1, false), den_.scale_exponents(r, 1, false));
}

Scalar Scalar::limit_v0() const {
    if (is_zero()) return *this;
    int bn, bd;
    Poly2 n0 = low_v_part(num_, bn), d0 = low_v_part(den_, bd);
    if (bn > bd) return Scalar();
    if (bn < bd) throw std::domain_error("limit t->0 diverges");
    return make(n0, d0);
}

Scalar Scalar::limit_vinf() const {
    if (is_zero()) return *this;
    int bn, bd;
    Poly2 n0 = high_v_part(num_, bn), d0 = high_v_part(den_, bd);
    if (bn < bd) return Scalar();
    if (bn > bd) throw std::domain_error("limit t->infinity diverges");
    return make(n0, d0);
}

Scalar Scalar::limit_v1() const {
    Poly2 d = den_.at_v1();
    if (d.is_zero()) throw std::domain_error("limit t->1 diverges");
    return make(num_.at_v1(), d);
}

Scalar Scalar::limit_u0() const {
    Scalar s = make(num_.swap_uv(), den_.swap_uv()).limit_v0();
    return make(s.num_.swap_uv(), s.den_.swap_uv());
}

bool Scalar::has_v() const { return num_.deg_v() > 0 || den_.deg_v() > 0; }
bool Scalar::has_u() const { return num_.deg_u() > 0 || den_.deg_u() > 0; }

int Scalar::ord_u() const {
    if (is_zero()) throw std::domain_error("order of zero");
    return num_.min_u() - den_.min_u();
}

int Scalar::ord_v() const {
    if (is_zero()) throw std::domain_error("order of zero");
    return num_.min_v() - den_.min_v();
}

namespace {

std::complex<double> eval_poly(const Poly2& p, std::complex<double> u0, std::complex<double> v0,
                               double& mag) {
    std::complex<double> s = 0;
    mag = 0;
    std::vector<std::complex<double>> pu, pv;
    int du = std::max(p.deg_u(), 0), dv = std::max(p.deg_v(), 0);
    pu.resize(static_cast<std::size_t>(du + 1));
    pv.resize(static_cast<std::size_t>(dv + 1));
    pu[0] = pv[0] = 1.0;
    for (int i = 1; i <= du; ++i) pu[static_cast<std::size_t>(i)] = pu[static_cast<std::size_t>(i - 1)] * u0;
    for (int i = 1; i <= dv; ++i) pv[static_cast<std::size_t>(i)] = pv[static_cast<std::size_t>(i - 1)] * v0;
    for (auto& [k, c] : p.terms()) {
        std::complex<double> term = c.get_d() * pu[static_cast<std::size_t>(Poly2::ka(k))] *
                                    pv[static_cast<std::size_t>(Poly2::kb(k))];
        mag += std::abs(term);
        s += term;
    }
    return s;
}

}  // namespace

std::complex<double> Scalar::eval(std::complex<double> u0, std::complex<double> v0) const {
    double mn, md;
    auto n = eval_poly(num_, u0, v0, mn);
    auto d = eval_poly(den_, u0, v0, md);
    if (std::abs(d) <= 1e-13 * md)
        throw std::domain_error("pole at specialization: denominator " + den_.str() + " vanishes");
    return n / d;
}

std::string Scalar::str() const {
    if (den_.is_one()) return num_.str();
    return "(" + num_.str() + ")/(" + den_.str() + ")";
}

}  // namespace hecke
