#include "hecke/bessel.hpp"
#include "hecke/parallel.hpp"

#include <Eigen/Dense>

#include <algorithm>
#include <cmath>
#include <mutex>
#include <sstream>
#include <stdexcept>
#include <vector>

namespace hecke::bessel {

namespace {

constexpr double kPi = 3.14159265358979323846;

Poly2 pd(const Poly2& p, bool in_u) {
    std::vector<Poly2::Term> t;
    for (const auto& [key, c] : p.terms()) {
        int a = Poly2::ka(key), b = Poly2::kb(key);
        int e = in_u ? a : b;
        if (e == 0) continue;
        t.emplace_back(in_u ? Poly2::key(a - 1, b) : Poly2::key(a, b - 1), c * e);
    }
    return Poly2::from_terms(std::move(t));
}

Poly2 neg_u(const Poly2& p) {
    std::vector<Poly2::Term> t;
    for (const auto& [key, c] : p.terms()) t.emplace_back(key, Poly2::ka(key) % 2 ? mpz_class(-c) : c);
    return Poly2::from_terms(std::move(t));
}

Scalar deriv_pow(Scalar c, int i, Flavor f) {
    for (int r = 0; r < i; ++r) c = deriv(c, f);
    return c;
}

}  // namespace

Scalar kvar() { return Scalar::mono(1, 0, 1); }
Scalar xvar(int n) { return Scalar::mono(1, n, 0); }

Scalar d_u(const Scalar& c) {
    const Poly2 &n = c.num(), &d = c.den();
    return Scalar(pd(n, true) * d - n * pd(d, true), d * d);
}

Scalar d_v(const Scalar& c) {
    const Poly2 &n = c.num(), &d = c.den();
    return Scalar(pd(n, false) * d - n * pd(d, false), d * d);
}

Scalar flip(const Scalar& c, Flavor f) {
    if (f == Flavor::Trig) return c.inv_u();
    return Scalar(neg_u(c.num()), neg_u(c.den()));
}

Scalar deriv(const Scalar& c, Flavor f) {
    Scalar d = d_u(c);
    return f == Flavor::Trig ? xvar(1) * d : d;
}

// ---- FormalKOp ----

FormalKOp FormalKOp::coeff(Flavor f, const Scalar& c) {
    FormalKOp r(f);
    r.add_term(0, 0, c);
    return r;
}

FormalKOp FormalKOp::D(Flavor f) {
    FormalKOp r(f);
    r.add_term(1, 0, 1);
    return r;
}

FormalKOp FormalKOp::s(Flavor f) {
    FormalKOp r(f);
    r.add_term(0, 1, 1);
    return r;
}

void FormalKOp::add_term(int j, int e, const Scalar& c) {
    if (c.is_zero()) return;
    Key k{j, e & 1};
    auto it = t_.find(k);
    if (it == t_.end()) {
        t_.emplace(k, c);
        return;
    }
    it->second += c;
    if (it->second.is_zero()) t_.erase(it);
}

FormalKOp operator+(const FormalKOp& a, const FormalKOp& b) {
    FormalKOp r = a;
    for (const auto& [k, c] : b.t_) r.add_term(k.first, k.second, c);
    return r;
}

FormalKOp operator-(const FormalKOp& a, const FormalKOp& b) {
    FormalKOp r = a;
    for (const auto& [k, c] : b.t_) r.add_term(k.first, k.second, -c);
    return r;
}

FormalKOp operator*(const Scalar& c, const FormalKOp& a) {
    FormalKOp r(a.flavor_);
    for (const auto& [k, x] : a.t_) r.add_term(k.first, k.second, c * x);
    return r;
}

FormalKOp operator*(const FormalKOp& a, const FormalKOp& b) {
    if (a.flavor_ != b.flavor_) throw std::invalid_argument("mixed operator flavors");
    FormalKOp r(a.flavor_);
    for (const auto& [ka, c1] : a.t_) {
        auto [j1, e1] = ka;
        for (const auto& [kb, c2] : b.t_) {
            auto [j2, e2] = kb;
            Scalar c2s = e1 ? flip(c2, a.flavor_) : c2;
            if (e1 && (j2 % 2)) c2s = -c2s;
            long binom = 1;
            Scalar di = c2s;
            for (int i = 0; i <= j1; ++i) {
                r.add_term(j1 - i + j2, e1 + e2, c1 * Scalar(binom) * di);
                binom = binom * (j1 - i) / (i + 1);
                if (i < j1) di = deriv(di, a.flavor_);
            }
        }
    }
    return r;
}

Scalar FormalKOp::apply(const Scalar& f) const {
    Scalar out;
    Scalar fs = flip(f, flavor_);
    for (const auto& [k, c] : t_) out += c * deriv_pow(k.second ? fs : f, k.first, flavor_);
    return out;
}

FormalKOp FormalKOp::sym() const {
    FormalKOp r(flavor_);
    for (const auto& [k, c] : t_) r.add_term(k.first, 0, c);
    return r;
}

FormalKOp FormalKOp::conjugate(const Scalar& logder) const {
    FormalKOp shifted = D(flavor_) - coeff(flavor_, logder);
    FormalKOp r(flavor_);
    for (const auto& [k, c] : t_) {
        FormalKOp p = coeff(flavor_, c);
        for (int i = 0; i < k.first; ++i) p = p * shifted;
        if (k.second) p = p * s(flavor_);
        r = r + p;
    }
    return r;
}

std::string FormalKOp::str() const {
    if (t_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [k, c] : t_) {
        if (!first) os << " + ";
        first = false;
        os << "(" << c.str() << ")";
        if (k.first) os << "*D^" << k.first;
        if (k.second) os << "*s";
    }
    return os.str();
}

FormalKOp commutator(const FormalKOp& a, const FormalKOp& b) { return a * b - b * a; }

FormalKOp dunkl_operator() {
    FormalKOp r(Flavor::Rational);
    Scalar kx = kvar() * xvar(-1);
    r.add_term(1, 0, 1);
    r.add_term(0, 0, kx);
    r.add_term(0, 1, -kx);
    return r;
}

Scalar dunkl_apply(const Scalar& p) { return dunkl_operator().apply(p); }

FormalKOp bessel_L() {
    FormalKOp r(Flavor::Rational);
    r.add_term(2, 0, 1);
    r.add_term(1, 0, Scalar(2) * kvar() * xvar(-1));
    return r;
}

FormalKOp trig_y() {
    FormalKOp r(Flavor::Trig);
    Scalar k = kvar(), c = k / (Scalar(1) - xvar(-2));
    r.add_term(1, 0, Scalar::rational(1, 2));
    r.add_term(0, 0, c - Scalar::rational(1, 2) * k);
    r.add_term(0, 1, -c);
    return r;
}

FormalKOp trig_y_tilde() {
    FormalKOp r(Flavor::Trig);
    r.add_term(1, 0, Scalar::rational(1, 2));
    r.add_term(0, 1, -kvar() / (Scalar(1) - xvar(-2)));
    return r;
}

Report rational_daha_relations_check(int deg) {
    const Flavor F = Flavor::Rational;
    Report r;
    Scalar k = kvar(), half = Scalar::rational(1, 2);
    FormalKOp one = FormalKOp::coeff(F, 1), x = FormalKOp::coeff(F, xvar(1)), s = FormalKOp::s(F),
              Dx = FormalKOp::D(F);
    FormalKOp y = half * dunkl_operator();
    r.expect(s * x * s == Scalar(-1) * x, "sxs = -x");
    r.expect(s * y * s == Scalar(-1) * y, "sys = -y");
    r.expect(s * s == one, "s^2 = 1");
    r.expect(commutator(y, x) == half * one + k * s, "[y,x] = 1/2 + ks");
    FormalKOp L = bessel_L();
    r.expect((dunkl_operator() * dunkl_operator()).sym() == L, "D^2|sym = L");
    FormalKOp e = FormalKOp::coeff(F, xvar(2)), f = Scalar::rational(-1, 4) * L;
    FormalKOp h = commutator(e, f);
    r.expect(h == x * Dx + (half + k) * one, "h = x d/dx + 1/2 + k");
    r.expect(commutator(h, e) == Scalar(2) * e, "[h,e] = 2e");
    r.expect(commutator(h, f) == Scalar(-2) * f, "[h,f] = -2f");
    Scalar kx = k * xvar(-1);
    r.expect(dunkl_operator().conjugate(kx) == Dx - kx * s, "x^k D x^{-k} = d/dx - (k/x) s");
    r.expect(L.conjugate(kx) == Dx * Dx + FormalKOp::coeff(F, k * (Scalar(1) - k) * xvar(-2)),
             "x^k L x^{-k} = d^2/dx^2 + k(1-k)/x^2");
    for (int n = 0; n <= deg; ++n) {
        Scalar xn = xvar(n), sg = Scalar(n % 2 ? -1 : 1);
        std::string tag = " on x^" + std::to_string(n);
        Scalar want = Scalar(n) * xvar(n - 1) + k * (Scalar(1) - sg) * xvar(n - 1);
        r.expect(dunkl_apply(xn) == want, "D(x^n) closed form" + tag);
        r.expect(commutator(y, x).apply(xn) == (half + k * sg) * xn, "[y,x]" + tag);
        r.expect((s * s).apply(xn) == xn, "s^2" + tag);
        r.expect(commutator(h, e).apply(xn) == Scalar(2) * xvar(n + 2), "[h,e]" + tag);
        r.expect(commutator(h, f).apply(xn) == Scalar(-2) * f.apply(xn), "[h,f]" + tag);
    }
    return r;
}

Report trig_conjugation_check(int deg) {
    const Flavor F = Flavor::Trig;
    Report r;
    Scalar k = kvar(), half = Scalar::rational(1, 2);
    FormalKOp one = FormalKOp::coeff(F, 1), X = FormalKOp::coeff(F, xvar(1)), Xi = FormalKOp::coeff(F, xvar(-1)),
              s = FormalKOp::s(F), Dx = FormalKOp::D(F);
    FormalKOp y = trig_y();
    r.expect(s * s == one, "s^2 = 1");
    r.expect(s * X * s == Xi, "sXs = X^{-1}");
    FormalKOp rel1 = s * y * s + y + k * s;
    FormalKOp rel2 = commutator(y, X) - half * X - k * (X * s);
    r.expect(rel1.is_zero(), "sys + y = -ks");
    r.expect(rel2.is_zero(), "[y,X] = X/2 + kXs");
    Scalar logder = k * (xvar(2) + Scalar(1)) / (xvar(2) - Scalar(1));
    FormalKOp yt = y.conjugate(logder);
    r.expect(yt == trig_y_tilde(), "Delta y Delta^{-1} = D/2 - k/(1-X^{-2}) s");
    FormalKOp Lp = Scalar(2) * (y * y).sym();
    FormalKOp Lp_want = half * (Dx * Dx) +
                        FormalKOp::coeff(F, k * (Scalar(1) + xvar(-2)) / (Scalar(1) - xvar(-2))) * Dx +
                        FormalKOp::coeff(F, half * k * k);
    r.expect(Lp == Lp_want, "L' = 2 y^2|sym");
    Scalar disc = xvar(1) - xvar(-1);
    FormalKOp Lt_want = half * (Dx * Dx) + FormalKOp::coeff(F, Scalar(2) * k * (Scalar(1) - k) / (disc * disc));
    r.expect(Lp.conjugate(logder) == Lt_want, "Delta L' Delta^{-1} = D^2/2 + 2k(1-k)/(X-X^{-1})^2");
    for (int n = -deg; n <= deg; ++n) {
        Scalar xn = xvar(n);
        std::string tag = " on X^" + std::to_string(n);
        Scalar yx = y.apply(xn);
        r.expect(yx.den().is_monomial(), "y preserves Laurent polynomials" + tag);
        r.expect(rel1.apply(xn).is_zero(), "sys + y + ks" + tag);
        r.expect(commutator(y, X).apply(xn) == half * xvar(n + 1) + k * xvar(1 - n), "[y,X]" + tag);
        r.expect(yt.apply(xn) == trig_y_tilde().apply(xn), "conjugated y" + tag);
    }
    return r;
}

// ---- spinor Dunkl operators ----

namespace {

using KPoly = std::vector<Scalar>;  // coefficients of k^0, k^1, ...
using WSpinor = std::vector<KPoly>;

void trim(KPoly& p) {
    while (!p.empty() && p.back().is_zero()) p.pop_back();
}

void kadd(KPoly& a, const KPoly& b, const Scalar& c, int shift) {
    if (a.size() < b.size() + shift) a.resize(b.size() + shift);
    for (std::size_t i = 0; i < b.size(); ++i) a[i + shift] += c * b[i];
    trim(a);
}

struct SpinorCtx {
    const rootsys::RootSystem& R;
    std::vector<int> inv;
    std::vector<std::vector<int>> refl;  // refl[a][u] = index of s_a u
    std::vector<int> simple_pos;         // position of alpha_i in R.positive

    explicit SpinorCtx(const rootsys::RootSystem& r) : R(r) {
        int n = static_cast<int>(R.weyl.size());
        std::vector<rootsys::Vec> basis{{1, 0}};
        if (R.rank == 2) basis.push_back({0, 1});
        auto find = [&](auto&& target) {
            for (int j = 0; j < n; ++j) {
                bool ok = true;
                for (auto& e : basis) ok = ok && R.weyl[j].act(e) == target(e);
                if (ok) return j;
            }
            throw std::logic_error("Weyl element not found");
        };
        inv.resize(n);
        for (int u = 0; u < n; ++u)
            for (int j = 0; j < n; ++j) {
                bool ok = true;
                for (auto& e : basis) ok = ok && R.weyl[u].act(R.weyl[j].act(e)) == e;
                if (ok) inv[u] = j;
            }
        for (const auto& a : R.positive) {
            std::vector<int> row(n);
            for (int u = 0; u < n; ++u)
                row[u] = find([&](const rootsys::Vec& e) { return reflect(a, R.weyl[u].act(e)); });
            refl.push_back(row);
        }
        for (const auto& al : R.simple)
            simple_pos.push_back(static_cast<int>(std::find(R.positive.begin(), R.positive.end(), al) - R.positive.begin()));
    }

    rootsys::Vec reflect(const rootsys::Vec& a, const rootsys::Vec& v) const {
        int p = R.pair_root(a, v);
        return {v[0] - p * a[0], v[1] - p * a[1]};
    }

    Scalar pair_q(const rootsys::Vec& x, const rootsys::Vec& y) const {
        mpq_class q = R.pair(x, y);
        return Scalar::rational(q.get_num().get_si(), q.get_den().get_si());
    }

    // d_c on Q(X1, X2): sum_i (c, omega_i) X_i d/dX_i
    Scalar partial(const rootsys::Vec& c, const Scalar& f) const {
        Scalar out = pair_q(c, R.omega(1)) * xvar(1) * d_u(f);
        if (R.rank == 2) out += pair_q(c, R.omega(2)) * Scalar::mono(1, 0, 1) * d_v(f);
        return out;
    }

    Scalar xpow(const rootsys::Vec& a) const { return Scalar::mono(1, a[0], R.rank == 2 ? a[1] : 0); }

    WSpinor dunkl(const rootsys::Vec& b, const WSpinor& psi) const {
        int n = static_cast<int>(psi.size());
        WSpinor out(n);
        for (int u = 0; u < n; ++u) {
            const auto& wi = R.weyl[inv[u]];
            KPoly d;
            for (const auto& c : psi[u]) d.push_back(partial(wi.act(b), c));
            trim(d);
            out[u] = d;
            for (std::size_t a = 0; a < R.positive.size(); ++a) {
                int kb = R.pair_root(R.positive[a], b);
                if (kb == 0) continue;
                Scalar coef = Scalar(-kb) / (xpow(wi.act(R.positive[a])) - Scalar(1));
                kadd(out[u], psi[refl[a][u]], coef, 1);
            }
        }
        return out;
    }

    // (sigma_i psi)_w = psi_{s_i w}
    WSpinor sigma(int i, const WSpinor& psi) const {
        WSpinor out(psi.size());
        for (std::size_t w = 0; w < psi.size(); ++w) out[w] = psi[refl[simple_pos[i]][w]];
        return out;
    }
};

WSpinor sub(const WSpinor& a, const WSpinor& b) {
    WSpinor r = a;
    for (std::size_t i = 0; i < a.size(); ++i) kadd(r[i], b[i], Scalar(-1), 0);
    return r;
}

bool spinor_zero(const WSpinor& a) {
    for (const auto& p : a)
        if (!p.empty()) return false;
    return true;
}

}  // namespace

Report trig_spinor_dunkl_commutativity(const rootsys::RootSystem& R, int deg) {
    SpinorCtx ctx(R);
    Report r;
    int n = static_cast<int>(R.weyl.size());
    std::vector<rootsys::Vec> bs;
    for (int i = 1; i <= R.rank; ++i) bs.push_back(R.omega(i));
    std::vector<rootsys::Vec> mons;
    for (int a = -deg; a <= deg; ++a)
        for (int b = -deg; b <= deg; ++b) {
            if (R.rank == 1 && b != 0) continue;
            if (std::abs(a) + std::abs(b) <= deg) mons.push_back({a, b});
        }
    for (int w = 0; w < n; ++w)
        for (const auto& m : mons) {
            WSpinor psi(n);
            psi[w] = {ctx.xpow(m)};
            std::string tag = " on e_" + std::to_string(w) + " X^(" + std::to_string(m[0]) + "," +
                              std::to_string(m[1]) + ")";
            for (std::size_t i = 0; i < bs.size(); ++i)
                for (std::size_t j = i + 1; j < bs.size(); ++j) {
                    WSpinor c = sub(ctx.dunkl(bs[i], ctx.dunkl(bs[j], psi)), ctx.dunkl(bs[j], ctx.dunkl(bs[i], psi)));
                    r.expect(spinor_zero(c), "[D0_b, D0_c] = 0" + tag);
                }
            if (R.rank == 1) {
                rootsys::Vec b2{2, 0};
                WSpinor lin = ctx.dunkl(b2, psi), one = ctx.dunkl(bs[0], psi);
                for (auto& p : one)
                    for (auto& c : p) c *= Scalar(2);
                r.expect(spinor_zero(sub(lin, one)), "D0_{2b} = 2 D0_b" + tag);
            }
            for (int i = 0; i < R.rank; ++i)
                for (const auto& b : bs) {
                    rootsys::Vec sb = R.reflect(i + 1, b);
                    WSpinor lhs = sub(ctx.sigma(i, ctx.dunkl(b, psi)), ctx.dunkl(sb, ctx.sigma(i, psi)));
                    WSpinor want(n);
                    int kb = R.pair_root(R.simple[i], b);
                    for (int u = 0; u < n; ++u) kadd(want[u], psi[u], Scalar(kb), 1);
                    r.expect(spinor_zero(sub(lhs, want)), "s_i D0_b - D0_{s_i b} s_i = k(b, a_i)" + tag);
                }
        }
    return r;
}

// ---- Gamma and series ----

namespace {

bool near_nonpositive_integer(cplx z) {
    return std::abs(z.imag()) < 1e-14 && z.real() < 0.5 && std::abs(z.real() - std::round(z.real())) < 1e-12;
}

}  // namespace

cplx gamma(cplx z) {
    static const double p[] = {0.99999999999980993,     676.5203681218851,     -1259.1392167224028,
                               771.32342877765313,      -176.61502916214059,   12.507343278686905,
                               -0.13857109526572012,    9.9843695780195716e-6, 1.5056327351493116e-7};
    if (near_nonpositive_integer(z)) throw std::domain_error("pole of Gamma");
    if (z.real() < 0.5) return kPi / (std::sin(kPi * z) * gamma(1.0 - z));
    z -= 1.0;
    cplx x = p[0];
    for (int i = 1; i < 9; ++i) x += p[i] / (z + double(i));
    cplx t = z + 7.5;
    return std::sqrt(2 * kPi) * std::pow(t, z + 0.5) * std::exp(-t) * x;
}

cplx rgamma(cplx z) {
    if (near_nonpositive_integer(z)) return 0.0;
    return 1.0 / gamma(z);
}

Family parse_family(const std::string& s) {
    if (s == "phi") return Family::phi;
    if (s == "psi") return Family::psi;
    if (s == "phi_tilde" || s == "phi-tilde") return Family::phi_tilde;
    if (s == "psi_tilde" || s == "psi-tilde") return Family::psi_tilde;
    throw std::invalid_argument("unknown family: " + s);
}

SeriesValue phi_series(cplx k, cplx t) {
    if (near_nonpositive_integer(k + 0.5)) throw std::domain_error("singular parameter");
    using lc = std::complex<long double>;
    lc kk(k.real(), k.imag()), tt(t.real(), t.imag()), t2 = tt * tt;
    lc f = 1, d1 = 0, d2 = 0;
    lc a = 1.0L / (kk + 0.5L);  // c_1 t^0
    int m = 1;
    for (; m < 20000; ++m) {
        lc term = a * t2;
        f += term;
        d1 += 2.0L * (long double)m * a * tt;
        d2 += (long double)(2 * m) * (long double)(2 * m - 1) * a;
        lc ratio = t2 / ((long double)(m + 1) * (kk + (long double)m + 0.5L));
        long double scale = std::abs(f) + std::abs(d1) + std::abs(d2) + 1e-300L;
        if (m > 2 && std::abs(ratio) < 0.5L &&
            std::abs(a) * (long double)(4 * m * m + 1) * (1 + std::abs(t2)) < 1e-19L * scale)
            break;
        a *= ratio;
    }
    if (m >= 20000) throw std::runtime_error("series did not converge");
    return {cplx((double)f.real(), (double)f.imag()), cplx((double)d1.real(), (double)d1.imag()),
            cplx((double)d2.real(), (double)d2.imag()), m + 1};
}

cplx neg_sq_pow(cplx z, cplx p) {
    if (z == cplx(0)) throw std::domain_error("branch point at 0");
    cplx w = -z * z;
    cplx lg = std::log(w);
    if (w.imag() == 0 && w.real() < 0) lg = {std::log(-w.real()), z.real() > 0 ? -kPi : kPi};
    return std::exp(p * lg);
}

namespace {

cplx a_fun(cplx z, cplx k, bool complex_case) {
    return complex_case ? neg_sq_pow(z, -k) : std::pow(z, -2.0 * k);
}

}  // namespace

cplx bessel_eval(Family fam, cplx k, cplx lambda, cplx x, bool complex_case) {
    switch (fam) {
        case Family::phi:
            return phi_series(k, lambda * x).f;
        case Family::psi: {
            auto s = phi_series(k, lambda * x);
            return s.f + 0.5 * s.d1;
        }
        case Family::phi_tilde: {
            cplx e = 1.0 - 2.0 * k;
            if (lambda == cplx(0))
                return complex_case ? neg_sq_pow(x, 0.5 - k) : std::pow(x, e);
            cplx pre = complex_case ? neg_sq_pow(lambda, 0.5 - k) * neg_sq_pow(x, 0.5 - k) : std::pow(x * lambda, e);
            return pre * phi_series(1.0 - k, lambda * x).f;
        }
        case Family::psi_tilde: {
            if (lambda == cplx(0)) throw std::domain_error("singular parameter");
            auto s = phi_series(-k, lambda * x);
            return a_fun(x, k, complex_case) * a_fun(lambda, k, complex_case) * (s.f + 0.5 * s.d1);
        }
    }
    throw std::logic_error("unreachable");
}

ResidualReport dunkl_eigen_check(cplx k, cplx lambda) {
    ResidualReport out;
    auto note = [&](double res, double tol, const std::string& what) {
        out.max_residual = std::max(out.max_residual, res);
        out.report.expect(res < tol, what + " residual " + std::to_string(res));
    };
    const double h = 1e-5;
    if (lambda == cplx(0)) {
        for (double x : {0.3, 1.1, 2.5}) note(std::abs(bessel_eval(Family::psi, k, 0.0, x) - 1.0), 1e-15, "psi = 1");
        // chi_k = [[0, |x|^{-2k}]] in the real case, [[0, (-x^2)^{-k}]] in the complex case
        for (bool cc : {false, true}) {
            cplx x = cc ? cplx(0.3, 0.8) : cplx(1.7);
            auto chi1 = [&](cplx z) { return a_fun(z, k, cc); };
            cplx d = (chi1(x + h) - chi1(x - h)) / (2 * h);
            note(std::abs(d + 2.0 * k * chi1(x) / x), 1e-9, cc ? "chi_k complex" : "chi_k real");
        }
        return out;
    }
    for (double xr : {0.3, 1.1, 2.5}) {
        for (double sg : {1.0, -1.0}) {
            double x = sg * xr;
            auto s = phi_series(k, lambda * x);
            auto sm = phi_series(k, -lambda * x);
            cplx psi = s.f + 0.5 * s.d1, psim = sm.f + 0.5 * sm.d1;
            cplx dpsi = lambda * s.d1 + 0.5 * lambda * s.d2;
            cplx D = dpsi + k / x * (psi - psim);
            note(std::abs(D - 2.0 * lambda * psi) / std::max(1.0, std::abs(psi)), 1e-9,
                 "Dunkl eigenvalue at x=" + std::to_string(x));
            cplx L = lambda * lambda * s.d2 + 2.0 * k / x * lambda * s.d1;
            note(std::abs(L - 4.0 * lambda * lambda * s.f) / std::max(1.0, std::abs(s.f)), 1e-9,
                 "L phi = 4 lambda^2 phi at x=" + std::to_string(x));
        }
        // odd part of psi equals phi'_x / (2 lambda), by central differences
        cplx odd = 0.5 * (bessel_eval(Family::psi, k, lambda, xr) - bessel_eval(Family::psi, k, lambda, -xr));
        cplx fd = (phi_series(k, lambda * (xr + h)).f - phi_series(k, lambda * (xr - h)).f) / (2 * h);
        note(std::abs(odd - fd / (2.0 * lambda)) / std::max(1.0, std::abs(odd)), 1e-8,
             "psi = [[phi, phi'/(2 lambda)]] at x=" + std::to_string(xr));
        // tilde solution chi(x) psi^{(-k)}: [[a phi'/2, a phi]] with a = x^{-2k}
        if (!near_nonpositive_integer(-k + 0.5)) {
            auto t = phi_series(-k, lambda * xr);
            cplx a = std::pow(cplx(xr), -2.0 * k), da = -2.0 * k * a / xr;
            cplx p0 = 0.5 * a * t.d1, p1 = a * t.f;
            cplx dp0 = 0.5 * (da * t.d1 + a * lambda * t.d2), dp1 = da * t.f + a * lambda * t.d1;
            double res = std::abs(dp1 + 2.0 * k * p1 / xr - 2.0 * lambda * p0) + std::abs(dp0 - 2.0 * lambda * p1);
            note(res / std::max(1.0, std::abs(p1)), 1e-9, "tilde spinor solution at x=" + std::to_string(xr));
        }
    }
    return out;
}

// ---- quadrature ----

namespace {

struct Rule {
    std::vector<double> x, w;
};

// Gauss-Jacobi on [0, 1] for the weight x^beta (Golub-Welsch).
const Rule& jacobi_rule(int n, double beta) {
    static std::mutex mu;
    static std::map<std::pair<int, double>, Rule> cache;
    std::lock_guard<std::mutex> lock(mu);
    auto key = std::make_pair(n, beta);
    auto it = cache.find(key);
    if (it != cache.end()) return it->second;
    double a = 0, b = beta;
    Eigen::MatrixXd J = Eigen::MatrixXd::Zero(n, n);
    for (int i = 0; i < n; ++i) {
        double s = 2.0 * i + a + b;
        J(i, i) = i == 0 ? (b - a) / (a + b + 2) : (b * b - a * a) / (s * (s + 2));
        if (i + 1 < n) {
            double m = i + 1.0, s1 = 2 * m + a + b;
            double beta_m = 4 * m * (m + a) * (m + b) * (m + a + b) / (s1 * s1 * (s1 + 1) * (s1 - 1));
            J(i, i + 1) = J(i + 1, i) = std::sqrt(beta_m);
        }
    }
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(J);
    double mu0 = std::pow(2.0, a + b + 1) / (b + 1);  // int_{-1}^{1} (1+t)^b dt
    Rule r;
    for (int i = 0; i < n; ++i) {
        double t = es.eigenvalues()(i), v = es.eigenvectors()(0, i);
        r.x.push_back((1 + t) / 2);
        r.w.push_back(mu0 * v * v / std::pow(2.0, b + 1));
    }
    return cache.emplace(key, std::move(r)).first->second;
}

template <class F>
QuadResult doubling(const QuadConfig& cfg, F&& eval) {
    int n = cfg.nodes;
    int used = 0;
    cplx prev = eval(n, used);
    for (int d = 0; d < cfg.max_doublings; ++d) {
        n *= 2;
        int u2 = 0;
        cplx cur = eval(n, u2);
        double err = std::abs(cur - prev);
        if (err <= cfg.tol * std::max(1.0, std::abs(cur))) return {cur, u2, err};
        prev = cur;
    }
    throw std::runtime_error("quadrature not converged");
}

}  // namespace

QuadResult quad_halfline(const std::function<cplx(double)>& g, cplx kappa, double b, const QuadConfig& cfg) {
    double beta = 2 * kappa.real(), c = 2 * kappa.imag();
    if (beta <= -1) throw std::domain_error("weight not integrable at 0");
    auto wt = [&](double x) { return std::pow(cplx(x), 2.0 * kappa); };
    return doubling(cfg, [&](int n, int& used) {
        const Rule& jac = jacobi_rule(n, beta);
        const Rule& leg = jacobi_rule(n, 0.0);
        cplx sum = 0;
        double h = std::min(1.0, b);
        if (c != 0) {
            int J = std::min(200, static_cast<int>(std::ceil(13 * std::log2(10.0) / (beta + 1))));
            h = std::min(h, std::ldexp(1.0, -J));
        }
        // bottom panel: x^beta handled by the rule, the rest of the weight is in the integrand
        for (std::size_t i = 0; i < jac.x.size(); ++i) {
            double x = h * jac.x[i];
            cplx osc = c != 0 ? std::exp(cplx(0, c * std::log(x))) : cplx(1);
            sum += jac.w[i] * osc * g(x);
        }
        sum *= std::pow(h, beta + 1);
        used += n;
        std::vector<std::pair<double, double>> panels;
        for (double lo = h; lo < std::min(1.0, b); lo *= 2) panels.emplace_back(lo, std::min(2 * lo, std::min(1.0, b)));
        for (double lo = 1.0; lo < b; lo += 1.0) panels.emplace_back(lo, std::min(lo + 1.0, b));
        auto parts = parallel_map<cplx>(panels.size(), [&](std::size_t p) {
            auto [lo, hi] = panels[p];
            cplx s = 0;
            for (std::size_t i = 0; i < leg.x.size(); ++i) {
                double x = lo + (hi - lo) * leg.x[i];
                s += leg.w[i] * wt(x) * g(x);
            }
            return s * (hi - lo);
        });
        for (const cplx& v : parts) sum += v;
        used += n * static_cast<int>(panels.size());
        return sum;
    });
}

QuadResult quad_line(const std::function<cplx(cplx)>& f, double shift, double S, const QuadConfig& cfg) {
    if (shift == 0) throw std::domain_error("contour through the branch cut");
    return doubling(cfg, [&](int n, int& used) {
        const Rule& leg = jacobi_rule(n, 0.0);
        const double w = 0.5;
        std::vector<double> starts;
        for (double lo = -S; lo < S; lo += w) starts.push_back(lo);
        auto parts = parallel_map<cplx>(starts.size(), [&](std::size_t p) {
            double lo = starts[p], hi = std::min(lo + w, S);
            cplx s = 0;
            for (std::size_t i = 0; i < leg.x.size(); ++i) s += leg.w[i] * f(cplx(lo + (hi - lo) * leg.x[i], shift));
            return s * (hi - lo);
        });
        cplx sum = 0;
        for (const cplx& v : parts) sum += v;
        used += n * static_cast<int>(starts.size());
        return sum;
    });
}

RealSpinorFn RealSpinorFn::from_pair(Fn f1, Fn f2, bool cc) {
    RealSpinorFn r;
    r.even = [f1, f2](cplx x) { return 0.5 * (f1(x) + f2(x)); };
    r.odd = [f1, f2](cplx x) { return 0.5 * (f1(x) - f2(x)); };
    r.complex_case = cc;
    return r;
}

RealSpinorFn RealSpinorFn::principal(Fn f, bool cc) {
    return from_pair(f, [f](cplx x) { return f(-x); }, cc);
}

RealSpinorFn RealSpinorFn::swapped() const {
    RealSpinorFn r = *this;
    Fn o = odd;
    r.odd = [o](cplx x) { return -o(x); };
    return r;
}

RealSpinorFn RealSpinorFn::times_x() const {
    RealSpinorFn r = *this;
    Fn e = even, o = odd;
    r.even = [o](cplx x) { return x * o(x); };
    r.odd = [e](cplx x) { return x * e(x); };
    return r;
}

RealSpinorFn operator*(const RealSpinorFn& a, const RealSpinorFn& b) {
    if (a.complex_case != b.complex_case) throw std::invalid_argument("real and complex spinors do not multiply");
    RealSpinorFn r;
    r.complex_case = a.complex_case;
    r.even = [a, b](cplx x) { return a.even(x) * b.even(x) + a.odd(x) * b.odd(x); };
    r.odd = [a, b](cplx x) { return a.even(x) * b.odd(x) + a.odd(x) * b.even(x); };
    return r;
}

QuadResult spinor_integrate(const RealSpinorFn& f, double extent, const QuadConfig& cfg, cplx kappa) {
    if (f.complex_case) {
        if (kappa != cplx(0)) throw std::invalid_argument("complex spinors carry their weight in the integrand");
        return quad_line(f.even, cfg.eps, extent, cfg);
    }
    return quad_halfline([&](double x) { return f.even(cplx(x)); }, kappa, extent, cfg);
}

// ---- master formulas ----

MasterKind parse_kind(const std::string& s) {
    static const std::map<std::string, MasterKind> m{
        {"sym-real", MasterKind::sym_real},           {"sym-complex", MasterKind::sym_complex},
        {"nonsym-real", MasterKind::nonsym_real},     {"nonsym-complex", MasterKind::nonsym_complex},
        {"tilde-real", MasterKind::tilde_real},       {"tilde-complex", MasterKind::tilde_complex},
        {"sym-tilde-real", MasterKind::sym_tilde_real}, {"sym-tilde-complex", MasterKind::sym_tilde_complex},
        {"orthogonality", MasterKind::orthogonality}};
    auto it = m.find(s);
    if (it == m.end()) throw std::invalid_argument("unknown kind: " + s);
    return it->second;
}

std::string kind_name(MasterKind k) {
    switch (k) {
        case MasterKind::sym_real: return "sym-real";
        case MasterKind::sym_complex: return "sym-complex";
        case MasterKind::nonsym_real: return "nonsym-real";
        case MasterKind::nonsym_complex: return "nonsym-complex";
        case MasterKind::tilde_real: return "tilde-real";
        case MasterKind::tilde_complex: return "tilde-complex";
        case MasterKind::sym_tilde_real: return "sym-tilde-real";
        case MasterKind::sym_tilde_complex: return "sym-tilde-complex";
        case MasterKind::orthogonality: return "orthogonality";
    }
    return "?";
}

namespace {

double rel(cplx lhs, cplx rhs) {
    double d = std::abs(lhs - rhs);
    return std::abs(rhs) > 1e-14 ? d / std::abs(rhs) : d;
}

void require(bool cond) {
    if (!cond) throw std::domain_error("parameter outside the domain of this formula");
}

}  // namespace

MasterReport master_formula_check(MasterKind kind, cplx k, cplx lam, cplx mu, const QuadConfig& cfg) {
    double G = std::abs(lam) + std::abs(mu);
    double B = G + std::sqrt(G * G + std::log(1 / cfg.gauss_cut)) + 1;
    cplx E = std::exp(lam * lam + mu * mu);
    auto ph = [](cplx kk, cplx t) { return phi_series(kk, t); };
    auto w = [&](cplx x) { return std::exp(-x * x) * neg_sq_pow(x, k); };
    MasterReport r;
    auto finish = [&](double err) {
        r.rel_err = err;
        r.ok = err < cfg.tol;
        return r;
    };
    switch (kind) {
        case MasterKind::sym_real: {
            require(k.real() > -0.5);
            auto q = quad_halfline(
                [&](double x) { return ph(k, lam * x).f * ph(k, mu * x).f * std::exp(-x * x); }, k, B, cfg);
            r.lhs = 2.0 * q.value;
            r.nodes = q.nodes;
            r.rhs = gamma(k + 0.5) * ph(k, lam * mu).f * E;
            return finish(rel(r.lhs, r.rhs));
        }
        case MasterKind::sym_complex: {
            auto q = quad_line([&](cplx x) { return ph(k, lam * x).f * ph(k, mu * x).f * w(x); }, cfg.eps, B, cfg);
            r.lhs = q.value;
            r.nodes = q.nodes;
            r.rhs = kPi * rgamma(0.5 - k) * ph(k, lam * mu).f * E;
            return finish(rel(r.lhs, r.rhs));
        }
        case MasterKind::nonsym_real: {
            require(k.real() > -0.5);
            auto q = quad_halfline(
                [&](double x) {
                    auto a = ph(k, lam * x), b = ph(k, mu * x);
                    cplx p = (a.f + 0.5 * a.d1) * (b.f + 0.5 * b.d1);
                    cplx m = (a.f - 0.5 * a.d1) * (b.f - 0.5 * b.d1);
                    return (p + m) * std::exp(-x * x);
                },
                k, B, cfg);
            r.lhs = q.value;
            r.nodes = q.nodes;
            auto s = ph(k, lam * mu);
            r.rhs = gamma(k + 0.5) * (s.f + 0.5 * s.d1) * E;
            return finish(rel(r.lhs, r.rhs));
        }
        case MasterKind::nonsym_complex: {
            auto f = [&](cplx x) {
                auto a = ph(k, lam * x), b = ph(k, mu * x);
                return (a.f + 0.5 * a.d1) * (b.f + 0.5 * b.d1) * w(x);
            };
            auto q1 = quad_line(f, cfg.eps, B, cfg), q2 = quad_line(f, -cfg.eps, B, cfg);
            r.lhs = 0.5 * (q1.value + q2.value);
            r.nodes = q1.nodes + q2.nodes;
            auto s = ph(k, lam * mu);
            r.rhs = kPi * rgamma(0.5 - k) * (s.f + 0.5 * s.d1) * E;
            return finish(rel(r.lhs, r.rhs));
        }
        case MasterKind::tilde_real:
        case MasterKind::tilde_complex: {
            bool cc = kind == MasterKind::tilde_complex;
            if (!cc) require(k.real() < 0.5);
            cplx al = a_fun(lam, k, cc), am = a_fun(mu, k, cc);
            cplx l00, l11;
            int nodes = 0;
            if (!cc) {
                // (psi~ psi~)^0 carries a(x)^2 = x^{-4k}; with |x|^{2k} the weight is x^{-2k}
                auto q11 = quad_halfline(
                    [&](double x) { return al * am * ph(-k, lam * x).f * ph(-k, mu * x).f * std::exp(-x * x); }, -k, B, cfg);
                auto q00 = quad_halfline(
                    [&](double x) { return al * am * 0.25 * ph(-k, lam * x).d1 * ph(-k, mu * x).d1 * std::exp(-x * x); },
                    -k, B, cfg);
                l11 = 2.0 * q11.value;
                l00 = 2.0 * q00.value;
                nodes = q11.nodes + q00.nodes;
            } else {
                auto ax = [&](cplx x) { return a_fun(x, k, true); };
                auto q11 = quad_line(
                    [&](cplx x) { return ax(x) * ax(x) * al * am * ph(-k, lam * x).f * ph(-k, mu * x).f * w(x); },
                    cfg.eps, B, cfg);
                auto q00 = quad_line(
                    [&](cplx x) {
                        return ax(x) * ax(x) * al * am * 0.25 * ph(-k, lam * x).d1 * ph(-k, mu * x).d1 * w(x);
                    },
                    cfg.eps, B, cfg);
                l11 = q11.value;
                l00 = q00.value;
                nodes = q11.nodes + q00.nodes;
            }
            auto s = ph(-k, lam * mu);
            cplx c = cc ? kPi * rgamma(0.5 + k) : gamma(0.5 - k);
            cplx r11 = c * al * am * s.f * E, r00 = c * al * am * 0.5 * s.d1 * E;
            r.lhs = l00 + l11;
            r.rhs = r00 + r11;
            r.nodes = nodes;
            return finish(std::max(rel(l00, r00), rel(l11, r11)));
        }
        case MasterKind::sym_tilde_real: {
            require(k.real() < 1.5);
            cplx pre = std::pow(lam, 1.0 - 2.0 * k) * std::pow(mu, 1.0 - 2.0 * k);
            auto q = quad_halfline(
                [&](double x) { return pre * ph(1.0 - k, lam * x).f * ph(1.0 - k, mu * x).f * std::exp(-x * x); },
                1.0 - k, B, cfg);
            r.lhs = 2.0 * q.value;
            r.nodes = q.nodes;
            r.rhs = gamma(1.5 - k) * bessel_eval(Family::phi_tilde, k, mu, lam) * E;
            return finish(rel(r.lhs, r.rhs));
        }
        case MasterKind::sym_tilde_complex: {
            auto q = quad_line(
                [&](cplx x) {
                    return bessel_eval(Family::phi_tilde, k, lam, x, true) * bessel_eval(Family::phi_tilde, k, mu, x, true) *
                           w(x);
                },
                cfg.eps, B, cfg);
            r.lhs = q.value;
            r.nodes = q.nodes;
            r.rhs = kPi * rgamma(k - 0.5) * bessel_eval(Family::phi_tilde, k, mu, lam, true) * E;
            return finish(rel(r.lhs, r.rhs));
        }
        case MasterKind::orthogonality: {
            cplx am = a_fun(mu, k, true);
            auto qs = quad_line(
                [&](cplx x) { return ph(k, lam * x).f * bessel_eval(Family::phi_tilde, k, mu, x, true) * w(x); },
                cfg.eps, B, cfg);
            auto q00 = quad_line(
                [&](cplx x) { return ph(k, lam * x).f * a_fun(x, k, true) * am * 0.5 * ph(-k, mu * x).d1 * w(x); },
                cfg.eps, B, cfg);
            auto q11 = quad_line(
                [&](cplx x) { return 0.5 * ph(k, lam * x).d1 * a_fun(x, k, true) * am * ph(-k, mu * x).f * w(x); },
                cfg.eps, B, cfg);
            r.lhs = qs.value + q00.value + q11.value;
            r.rhs = 0;
            r.nodes = qs.nodes + q00.nodes + q11.nodes;
            return finish(std::max({std::abs(qs.value), std::abs(q00.value), std::abs(q11.value)}));
        }
    }
    throw std::logic_error("unreachable");
}

WrongFormula wrong_formula(cplx k, cplx lambda, const QuadConfig& cfg) {
    require(k.real() > -0.5);
    double G = std::abs(lambda);
    double B = G + std::sqrt(G * G + std::log(1 / cfg.gauss_cut)) + 1;
    WrongFormula out;
    out.integral =
        2.0 * quad_halfline([&](double x) { return phi_series(k, lambda * x).f * std::exp(-x * x); }, 0.5, B, cfg).value;
    out.claimed = std::exp(lambda * lambda);
    cplx r = 1, l2 = lambda * lambda, pw = 1;
    out.series = 0;
    for (int m = 0; m < 400; ++m) {
        out.series += pw * r;
        r /= (k + double(m) + 0.5);
        pw *= l2;
        if (std::abs(pw * r) < 1e-18 * std::abs(out.series) && m > 4) break;
    }
    return out;
}

}  // namespace hecke::bessel
