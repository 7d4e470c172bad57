#include "hecke/affsym.hpp"
#include "hecke/parallel.hpp"

#include "hecke/daha1.hpp"

#include <climits>
#include <cmath>
#include <functional>
#include <sstream>
#include <stdexcept>

namespace hecke::affsym {

using rootsys::RootSystem;

namespace {

Scalar th(int n = 1) { return Scalar::thalf(n); }
LaurentX sY(const LaurentX& f) { return apply_symmetry(f, Sym::s); }

// Applies p(Y) to f through the polynomial representation.
LaurentX apply_poly_Y(const LaurentX& p, const LaurentX& f) {
    LaurentX out;
    if (p.is_zero()) return out;
    std::map<int, LaurentX> pw{{0, f}};
    auto power = [&](int k) -> const LaurentX& {
        auto it = pw.find(k);
        if (it != pw.end()) return it->second;
        int step = k > 0 ? 1 : -1;
        LaurentX cur = pw.at(0);
        for (int j = step; j != k + step; j += step) {
            auto jt = pw.find(j);
            if (jt == pw.end())
                jt = pw.emplace(j, daha1::apply(step > 0 ? daha1::Op::Y : daha1::Op::Yinv, cur)).first;
            cur = jt->second;
        }
        return pw.at(k);
    };
    for (auto& [k, c] : p.terms()) out += c * power(k);
    return out;
}

Scalar eval_Y(const LaurentX& p, const Scalar& y) {
    Scalar r;
    for (auto& [k, c] : p.terms()) r += c * y.pow(k);
    return r;
}

}  // namespace

// ---- normal form ----

LaurentX demazure_Y(const LaurentX& f) {
    // (f(Y^{-1}) - f(Y)) / (Y^{-2} - 1) = Y^2 (f - f^s) / (Y^2 - 1)
    return daha1::tdiff() * daha1::div_X2_minus_1(f - sY(f)).shifted(2);
}

AhaOpExpr AhaOpExpr::scalar(const Scalar& c) { return {LaurentX(c), LaurentX(), LaurentX(1)}; }
AhaOpExpr AhaOpExpr::Y(int n) { return {X(n), LaurentX(), LaurentX(1)}; }
AhaOpExpr AhaOpExpr::T() { return {LaurentX(), LaurentX(1), LaurentX(1)}; }
AhaOpExpr AhaOpExpr::Tinv() { return {LaurentX(-daha1::tdiff()), LaurentX(1), LaurentX(1)}; }

AhaOpExpr AhaOpExpr::rational(const LaurentX& num, const LaurentX& den) {
    if (den.is_zero()) throw std::invalid_argument("AhaOpExpr: zero denominator");
    if (sY(den) != den) throw std::invalid_argument("AhaOpExpr: denominator must be W-invariant");
    return {num, LaurentX(), den};
}

AhaOpExpr operator+(const AhaOpExpr& x, const AhaOpExpr& y) {
    if (x.den == y.den) return {x.a + y.a, x.b + y.b, x.den};
    return {x.a * y.den + y.a * x.den, x.b * y.den + y.b * x.den, x.den * y.den};
}

AhaOpExpr operator-(const AhaOpExpr& x, const AhaOpExpr& y) { return x + Scalar(-1) * y; }

AhaOpExpr operator*(const Scalar& c, const AhaOpExpr& x) { return {c * x.a, c * x.b, x.den}; }

AhaOpExpr operator*(const AhaOpExpr& x, const AhaOpExpr& y) {
    // (a + bT)(c + dT), T c = c^s T + D(c), T^2 = (t^{1/2} - t^{-1/2}) T + 1.
    const LaurentX &a = x.a, &b = x.b, &c = y.a, &d = y.b;
    LaurentX ds = sY(d);
    LaurentX A = a * c + b * demazure_Y(c) + b * ds;
    LaurentX B = b * sY(c) + a * d + daha1::tdiff() * (b * ds) + b * demazure_Y(d);
    LaurentX den = x.den.is_zero() ? y.den : x.den * y.den;
    return {A, B, den};
}

std::string AhaOpExpr::str() const {
    auto poly = [](const LaurentX& f) {
        std::ostringstream o;
        bool first = true;
        for (auto& [e, c] : f.terms()) {
            if (!first) o << " + ";
            first = false;
            o << "(" << c.str() << ")*Y^" << e;
        }
        if (first) o << "0";
        return o.str();
    };
    std::ostringstream o;
    o << "[" << poly(a) << "] + [" << poly(b) << "]*T";
    if (den != LaurentX(1)) o << "  over  [" << poly(den) << "]";
    return o.str();
}

AhaOpExpr one_plus() { return AhaOpExpr::scalar(1) + th(-1) * AhaOpExpr::Tinv(); }

AhaOpExpr U_plus() {
    // U = t^{-1/2} Y^{-1} / (1 - t^{-1/2} Y^{-1}); clear with (1 - t^{-1/2} Y).
    LaurentX den = (LaurentX(1) - LaurentX::mono(-1, th(-1))) * (LaurentX(1) - LaurentX::mono(1, th(-1)));
    LaurentX num = LaurentX::mono(-1, th(-1)) * (LaurentX(1) - LaurentX::mono(1, th(-1)));
    return AhaOpExpr::rational(num, den) * one_plus();
}

AhaOpExpr trunc_Phat(int M) {
    if (M < 1) throw std::invalid_argument("trunc_Phat: M must be positive");
    LaurentX u;
    for (int j = 1; j <= M; ++j) u += LaurentX::mono(-j, th(-j));
    AhaOpExpr lead = AhaOpExpr::scalar(1) + th(1) * AhaOpExpr::T();
    return lead * (AhaOpExpr{u, LaurentX(), LaurentX(1)} * one_plus()) + one_plus();
}

AhaOpExpr sigma_hat(int M) {
    if (M < 1) throw std::invalid_argument("sigma_hat: M must be positive");
    LaurentX s = LaurentX(th(-2 * (M / 2)));
    for (int j = 1; j <= M; ++j) {
        Scalar c = th(-2 * ((M - j) / 2) - j);
        s += LaurentX::mono(j, c) + LaurentX::mono(-j, c);
    }
    return AhaOpExpr{s, LaurentX(), LaurentX(1)} * one_plus();
}

AhaOpExpr sigma_bar(int M) {
    if (M < 1) throw std::invalid_argument("sigma_bar: M must be positive");
    LaurentX num = LaurentX::mono(M, th(-M)) + LaurentX::mono(M - 1, th(1 - M));
    return AhaOpExpr::rational(num, LaurentX(Scalar(1) - Scalar::t(-1))) * one_plus();
}

// ---- polynomial representation ----

std::map<int, Scalar> e_expand(const LaurentX& f) {
    std::map<int, Scalar> out;
    LaurentX r = f;
    int guard = 0;
    while (!r.is_zero()) {
        if (++guard > 10000) throw std::logic_error("e_expand: no progress");
        int d = std::max(std::abs(min_exp(r)), std::abs(max_exp(r)));
        int n = d == 0 ? 0 : (!r.coeff(-d).is_zero() ? -d : d);
        LaurentX e = daha1::epoly(n);
        Scalar c = r.coeff(n) / e.coeff(n);
        out[n] += c;
        r -= c * e;
    }
    for (auto it = out.begin(); it != out.end();) it = it->second.is_zero() ? out.erase(it) : std::next(it);
    return out;
}

LaurentX apply_expr(const AhaOpExpr& A, const LaurentX& f) {
    LaurentX g = apply_poly_Y(A.a, f) + apply_poly_Y(A.b, daha1::apply(daha1::Op::T, f));
    if (A.den.size() == 1 && A.den.terms().begin()->first == 0)
        return A.den.terms().begin()->second.inv() * g;
    LaurentX out;
    for (auto& [n, c] : e_expand(g)) {
        Scalar dv = eval_Y(A.den, daha1::eigenvalue(n));
        if (dv.is_zero()) throw std::domain_error("vanishing denominator eigenvalue at E_" + std::to_string(n));
        out += (c / dv) * daha1::epoly(n);
    }
    return out;
}

LaurentX phat_rational_apply(const LaurentX& f) {
    using daha1::Op;
    LaurentX g = f + th(-1) * daha1::apply(Op::Tinv, f);
    LaurentX h;
    for (auto& [n, c] : e_expand(g)) {
        Scalar yi = th(-1) * daha1::eigenvalue(n).inv();
        Scalar den = Scalar(1) - yi;
        if (den.is_zero()) throw std::domain_error("vanishing denominator eigenvalue at E_" + std::to_string(n));
        h += (c * yi / den) * daha1::epoly(n);
    }
    h += th(-1) * daha1::apply(Op::Tinv, f);
    return h + th(1) * daha1::apply(Op::T, h);
}

Scalar diamond_form(const LaurentX& f, const LaurentX& g) {
    LaurentX p = phat_rational_apply(f * daha1::apply(daha1::Op::T, g));
    LaurentX one = phat_rational_apply(LaurentX(1));
    if (p.is_zero()) return Scalar();
    if (p.size() != 1 || p.terms().begin()->first != 0)
        throw std::logic_error("diamond_form: symmetrizer image is not constant");
    return th(-1) * p.coeff(0) / one.coeff(0);
}

// ---- series ----

namespace {

using QSeries = std::vector<Scalar>;

// s *= (1 - c q^i)^{sign}
void mul_factor(QSeries& s, const Scalar& c, int i, int sign) {
    int N = static_cast<int>(s.size()) - 1;
    if (sign > 0) {
        for (int k = N; k >= i; --k) s[k] -= c * s[k - i];
    } else {
        for (int k = i; k <= N; ++k) s[k] += c * s[k - i];
    }
}

}  // namespace

std::vector<Scalar> ct_series(int N, const RootSystem& R, bool t_inverse) {
    if (N < 0) throw std::invalid_argument("ct_series: negative order");
    QSeries s(N + 1, Scalar());
    s[0] = Scalar(1);
    int sg = t_inverse ? -1 : 1;
    for (auto& a : R.positive) {
        int h = R.pair_root(a, R.rho);
        for (int i = 1; i <= N; ++i) {
            mul_factor(s, Scalar::t(sg * h), i, 1);
            mul_factor(s, Scalar::t(sg * h), i, 1);
            mul_factor(s, Scalar::t(sg * (h + 1)), i, -1);
            mul_factor(s, Scalar::t(sg * (h - 1)), i, -1);
        }
    }
    return s;
}

LaurentX truncate_q(const LaurentX& f, int N) {
    LaurentX out;
    for (auto& [e, c] : f.terms()) {
        if (!c.den().is_constant()) throw std::invalid_argument("truncate_q: non-polynomial coefficient");
        std::vector<Poly2::Term> keep;
        for (auto& t : c.num().terms())
            if (Poly2::ka(t.first) < 4 * N) keep.push_back(t);
        out.add_term(e, Scalar(Poly2::from_terms(keep), c.den()));
    }
    return out;
}

LaurentX km_numerator(int level, int N) {
    const RootSystem& R = RootSystem::get(rootsys::Type::A1);
    int bound = 2 * static_cast<int>(std::ceil(std::sqrt(4.0 * N + 4))) + 6;
    LaurentX out;
    for (auto& x : rootsys::elements(R, bound)) {
        auto lam = rootsys::lambda_set(R, rootsys::inverse(R, x));
        int xe = 0, qj = 0;
        for (auto& r : lam) {
            xe += r.alpha[0];
            qj += r.j;
        }
        int m = x.b[0];
        int uexp = 4 * qj + level * m * m;
        if (uexp >= 4 * N) continue;
        long sign = (rootsys::length(R, x) % 2) ? -1 : 1;
        out.add_term(xe - level * m, Scalar::mono(sign, uexp, 0));
    }
    return out;
}

LaurentX affine_denominator(int N) {
    LaurentX p = LaurentX(1) - X(2);
    for (int j = 1; j < N; ++j) {
        p = truncate_q(p * (LaurentX(1) - LaurentX::mono(2, Scalar::q(j))), N);
        p = truncate_q(p * (LaurentX(1) - LaurentX::mono(-2, Scalar::q(j))), N);
    }
    return p;
}

LaurentX theta_A1(int N) {
    LaurentX th;
    for (int m = 0; m * m < 4 * N; ++m) {
        th.add_term(m, Scalar::mono(1, m * m, 0));
        if (m) th.add_term(-m, Scalar::mono(1, m * m, 0));
    }
    return th;
}

// ---- delta representation (A1) ----

namespace {

bool is_zero_c(const Scalar& c) { return c.is_zero(); }
bool is_zero_c(const cplx& c) { return c == cplx(0); }

template <class C>
struct DeltaA1 {
    using Pt = std::pair<int, int>;  // point eps * xi + m / 2
    using Fn = std::map<Pt, C>;
    std::function<C(const Pt&)> X;
    C th, thi;
    std::map<Pt, C> cache;

    static Pt s(const Pt& p) { return {-p.first, -p.second}; }
    static Pt pi(const Pt& p) { return {-p.first, 1 - p.second}; }

    static C get(const Fn& h, const Pt& p) {
        auto it = h.find(p);
        return it == h.end() ? C(0) : it->second;
    }
    static void put(Fn& h, const Pt& p, const C& c) {
        if (!is_zero_c(c)) h[p] = c;
    }
    const C& coef(const Pt& p) {
        auto it = cache.find(p);
        if (it != cache.end()) return it->second;
        C x = X(p);
        return cache.emplace(p, (th - thi) / (x * x - C(1))).first->second;
    }
    Fn apply_pi(const Fn& h) {
        Fn r;
        for (auto& [p, c] : h) r[pi(p)] = c;
        return r;
    }
    Fn apply_T(const Fn& h) {
        std::map<Pt, bool> pts;
        for (auto& [p, c] : h) {
            pts[p] = true;
            pts[s(p)] = true;
        }
        Fn r;
        for (auto& [p, _] : pts) {
            C hs = get(h, s(p)), hp = get(h, p);
            put(r, p, th * hs + coef(p) * (hs - hp));
        }
        return r;
    }
    Fn apply_Tinv(const Fn& h) {
        Fn r = apply_T(h);
        for (auto& [p, c] : h) put(r, p, get(r, p) - (th - thi) * c);
        for (auto it = r.begin(); it != r.end();) it = is_zero_c(it->second) ? r.erase(it) : std::next(it);
        return r;
    }
    Fn add(Fn a, const Fn& b, const C& c) {
        for (auto& [p, v] : b) {
            C nv = get(a, p) + c * v;
            if (is_zero_c(nv))
                a.erase(p);
            else
                a[p] = nv;
        }
        return a;
    }
    Fn apply_polyY(const LaurentX& poly, const Fn& h, const std::function<C(const Scalar&)>& conv) {
        Fn out;
        if (poly.is_zero()) return out;
        int lo = std::min(0, min_exp(poly)), hi = std::max(0, max_exp(poly));
        std::map<int, Fn> pw{{0, h}};
        for (int k = 1; k <= hi; ++k) pw[k] = apply_pi(apply_T(pw[k - 1]));
        for (int k = -1; k >= lo; --k) pw[k] = apply_Tinv(apply_pi(pw[k + 1]));
        for (auto& [k, c] : poly.terms()) out = add(out, pw[k], conv(c));
        return out;
    }
    Fn apply_expr(const AhaOpExpr& A, const Fn& h, const std::function<C(const Scalar&)>& conv) {
        if (!(A.den.size() == 1 && A.den.terms().begin()->first == 0))
            throw std::invalid_argument("delta representation: non-constant denominator");
        C d = conv(A.den.coeff(0));
        Fn r = add(apply_polyY(A.a, h, conv), apply_polyY(A.b, apply_T(h), conv), C(1));
        for (auto& [p, c] : r) c = c / d;
        return r;
    }
};

}  // namespace

std::vector<ValuationRow> siminv_valuations(int M, bool use_T, long c_num, long c_den) {
    AhaOpExpr S = sigma_hat(M);
    AhaOpExpr G = use_T ? AhaOpExpr::T() : AhaOpExpr::Y(1);
    AhaOpExpr D = th(-1) * (G * S) - S;
    DeltaA1<Scalar> rep;
    Scalar c = Scalar::rational(c_num, c_den);
    rep.X = [c](const std::pair<int, int>& p) { return c.pow(p.first) * Scalar::qhalf(p.second); };
    rep.th = th(1);
    rep.thi = th(-1);
    auto conv = [](const Scalar& s) { return s; };
    std::vector<ValuationRow> rows;
    for (int eps : {1, -1}) {
        for (int m = -M; m <= M; ++m) {
            DeltaA1<Scalar>::Fn h{{{eps, m}, Scalar(1)}};
            Scalar v = DeltaA1<Scalar>::get(rep.apply_expr(D, h, conv), {1, 0});
            rows.push_back({eps, m, v.is_zero() ? INT_MAX : v.ord_u()});
        }
    }
    return rows;
}

// ---- numeric side ----

namespace {

struct Geometry {
    int n;
    double g[2][2];     // (omega_i, omega_j)
    double ginv[2][2];
};

Geometry geometry(const RootSystem& R) {
    Geometry G{};
    G.n = R.rank;
    for (int i = 0; i < R.rank; ++i)
        for (int j = 0; j < R.rank; ++j) G.g[i][j] = R.pair(R.omega(i + 1), R.omega(j + 1)).get_d();
    if (R.rank == 1) {
        G.ginv[0][0] = 1.0 / G.g[0][0];
    } else {
        double det = G.g[0][0] * G.g[1][1] - G.g[0][1] * G.g[1][0];
        G.ginv[0][0] = G.g[1][1] / det;
        G.ginv[1][1] = G.g[0][0] / det;
        G.ginv[0][1] = -G.g[0][1] / det;
        G.ginv[1][0] = -G.g[1][0] / det;
    }
    return G;
}

cplx qpow(cplx lq, cplx e) { return std::exp(lq * e); }

}  // namespace

cplx mu_tilde(const RootSystem& R, const std::vector<cplx>& z, cplx q0, cplx t0) {
    cplx lq = std::log(q0), ti = cplx(1) / t0;
    double aq = std::abs(q0);
    cplx val = 1;
    for (auto& a : R.positive) {
        cplx s = 0;
        for (int i = 0; i < R.rank; ++i) s += double(a[i]) * z[i];
        for (int sgn : {1, -1}) {
            for (int j = sgn > 0 ? 0 : 1;; ++j) {
                cplx y = qpow(lq, double(sgn) * s + double(j));
                val *= (cplx(1) - ti * y) / (cplx(1) - y);
                if (std::abs(y) < 1e-18 && j > 2) break;
                if (j > 100000) throw std::runtime_error("mu_tilde: product did not converge");
            }
        }
    }
    (void)aq;
    return val;
}

JacksonResult jackson_sum(const RootSystem& R, const Laurent2& F, const JacksonConfig& cfg, int level) {
    if (std::abs(cfg.q0) >= 1) throw std::invalid_argument("jackson_sum: |q| must be below 1");
    if (level < 0) throw std::invalid_argument("jackson_sum: negative level");
    if (static_cast<int>(cfg.xi.size()) < R.rank) throw std::invalid_argument("jackson_sum: origin has too few coordinates");
    Geometry G = geometry(R);
    cplx lq = std::log(cfg.q0);
    cplx u0 = std::pow(cfg.q0, 0.25), v0 = std::sqrt(cfg.t0);
    std::vector<std::pair<Exp2, cplx>> terms;
    for (auto& [e, c] : F.terms()) terms.push_back({e, c.eval(u0, v0)});
    // omega-coordinates of x
    cplx c0[2] = {0, 0};
    for (int i = 0; i < R.rank; ++i)
        for (int j = 0; j < R.rank; ++j) c0[i] += G.ginv[i][j] * cfg.xi[j];

    auto point_value = [&](const rootsys::WeylElt& w, const rootsys::Vec& b) {
        cplx c[2] = {0, 0};
        for (int i = 0; i < R.rank; ++i) {
            for (int j = 0; j < R.rank; ++j) c[i] += double(w.m[2 * i + j]) * c0[j];
            c[i] += double(b[i]);
        }
        std::vector<cplx> z(R.rank, 0);
        cplx pp = 0;
        for (int i = 0; i < R.rank; ++i)
            for (int j = 0; j < R.rank; ++j) {
                z[i] += G.g[i][j] * c[j];
                pp += c[i] * G.g[i][j] * c[j];
            }
        cplx f = 0;
        for (auto& [e, v] : terms) {
            cplx ex = double(e[0]) * z[0];
            if (R.rank > 1) ex += double(e[1]) * z[1];
            f += v * qpow(lq, ex);
        }
        if (f == cplx(0)) return cplx(0);
        return mu_tilde(R, z, cfg.q0, cfg.t0) * f * qpow(lq, double(level) * pp / 2.0);
    };

    JacksonResult res;
    cplx total = 0;
    double prev = INFINITY;
    for (int m = 0; m <= cfg.cutoff; ++m) {
        cplx shell = 0;
        std::vector<rootsys::Vec> bs;
        if (R.rank == 1) {
            bs.push_back({m, 0});
            if (m) bs.push_back({-m, 0});
        } else {
            for (int i = -m; i <= m; ++i)
                for (int j = -m; j <= m; ++j)
                    if (std::max(std::abs(i), std::abs(j)) == m) bs.push_back({i, j});
        }
        auto parts = parallel_map<cplx>(bs.size(), [&](std::size_t i) {
            cplx acc = 0;
            for (auto& w : R.weyl) acc += point_value(w, bs[i]);
            return acc;
        });
        for (const cplx& v : parts) shell += v;
        total += shell;
        double cur = std::abs(shell);
        res.shells_used = m + 1;
        if (m >= 2 && cur + prev <= cfg.tol * std::max(1.0, std::abs(total))) {
            res.value = total;
            res.tail_estimate = cur + prev;
            return res;
        }
        prev = cur;
    }
    throw std::runtime_error("not converged; increase M or adjust k");
}

CtValue ct_numeric(const RootSystem& R, cplx q0, cplx tt) {
    CtValue r{cplx(1), 0};
    const double eps = 1e-13;
    for (auto& a : R.positive) {
        int h = R.pair_root(a, R.rho);
        for (int i = 1;; ++i) {
            cplx qi = std::pow(q0, i);
            cplx f[4] = {cplx(1) - std::pow(tt, h) * qi, cplx(1) - std::pow(tt, h) * qi,
                         cplx(1) - std::pow(tt, h + 1) * qi, cplx(1) - std::pow(tt, h - 1) * qi};
            for (int k = 0; k < 4; ++k) {
                if (std::abs(f[k]) < eps) {
                    r.zero_order += k < 2 ? 1 : -1;
                } else {
                    r.value = k < 2 ? r.value * f[k] : r.value / f[k];
                }
            }
            double big = std::max({1.0, std::abs(std::pow(tt, h + 1)), std::abs(std::pow(tt, h - 1))});
            if (std::abs(qi) * big < 1e-18 || i > 100000) break;
        }
    }
    if (r.zero_order > 0) r.value = 0;
    if (r.zero_order < 0) r.value = cplx(INFINITY, 0);
    return r;
}

cplx poincare_numeric(const RootSystem& R, cplx tinv) {
    return rootsys::affine_poincare_rational(R).eval(cplx(1), std::sqrt(tinv));
}

Laurent2 to_weight_poly(const LaurentX& f) {
    Laurent2 r;
    for (auto& [e, c] : f.terms()) r.add_term({e, 0}, c);
    return r;
}

cplx level_one_closed(int n, const JacksonConfig& cfg) {
    cplx q0 = cfg.q0, t0 = cfg.t0, xi = cfg.xi.at(0);
    cplx lq = std::log(q0);
    cplx Xk = cplx(1) / std::sqrt(t0);
    cplx e = eval_num(daha1::epoly(n), q0, t0, Xk);
    cplx pre = e * qpow(lq, -double(n * n) / 4.0) * std::pow(std::sqrt(t0), -std::abs(n));
    cplx prod = 1;
    cplx ti = cplx(1) / t0;
    for (int j = 0;; ++j) {
        cplx qj = std::pow(q0, j);
        prod *= (cplx(1) - ti * ti * qj) / (cplx(1) - ti * qj);
        if (std::abs(qj) < 1e-18) break;
    }
    cplx gam = 0;
    for (int m = -60; m <= 60; ++m) gam += qpow(lq, double(m) * xi + double(m * m) / 4.0);
    gam *= qpow(lq, xi * xi);
    return pre * prod * gam;
}

ProbeResult coefficient_probe(ProbeOp op, int M, const rootsys::AffWeylElt& w, const JacksonConfig& cfg) {
    const RootSystem& R = RootSystem::get(rootsys::Type::A1);
    if (std::abs(cfg.q0) >= 1) throw std::invalid_argument("coefficient_probe: |q| must be below 1");
    cplx xi = cfg.xi.at(0), lq = std::log(cfg.q0);
    int eps = w.w == 0 ? 1 : -1;
    std::pair<int, int> p{eps, w.b[0]};
    auto zval = [xi](const std::pair<int, int>& pt) { return double(pt.first) * xi + double(pt.second) / 2.0; };
    cplx mu_p = mu_tilde(R, {zval(p)}, cfg.q0, cfg.t0);
    ProbeResult r;
    if (op == ProbeOp::SJmu) {
        // mu~(w^ x) / mu~(x) = prod over Lambda(w^) of (t^{-1} - X_a)/(1 - t^{-1} X_a)
        cplx ratio = 1, ti = cplx(1) / cfg.t0;
        for (auto& a : rootsys::lambda_set(R, w)) {
            cplx y = qpow(lq, double(a.alpha[0]) * xi + double(a.j));
            ratio *= (ti - y) / (cplx(1) - ti * y);
        }
        r.value = mu_p;
        r.reference = mu_tilde(R, {xi}, cfg.q0, cfg.t0) * ratio;
    } else {
        DeltaA1<cplx> rep;
        rep.X = [&](const std::pair<int, int>& pt) { return qpow(lq, zval(pt)); };
        cplx u0 = std::pow(cfg.q0, 0.25), v0 = std::sqrt(cfg.t0);
        rep.th = v0;
        rep.thi = cplx(1) / v0;
        auto conv = [u0, v0](const Scalar& s) { return s.eval(u0, v0); };
        DeltaA1<cplx>::Fn h{{p, cplx(1)}};
        r.value = DeltaA1<cplx>::get(rep.apply_expr(sigma_hat(M), h, conv), {1, 0});
        CtValue ct = ct_numeric(R, cfg.q0, cplx(1) / cfg.t0);
        r.reference = ct.value * mu_p;
    }
    r.ratio = r.value / r.reference;
    return r;
}

}  // namespace hecke::affsym
