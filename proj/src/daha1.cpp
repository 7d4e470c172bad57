#include "hecke/daha1.hpp"

#include "hecke/aha.hpp"

#include <map>
#include <mutex>
#include <stdexcept>

namespace hecke::daha1 {

namespace {

const Scalar& th() {
    static const Scalar v = Scalar::thalf(1);
    return v;
}
const Scalar& thi() {
    static const Scalar v = Scalar::thalf(-1);
    return v;
}

// (1 - c q^a t^b) as a Scalar: c is +-1.
Scalar one_minus(int qa, int tb) { return Scalar(1) - Scalar::mono(1, 4 * qa, 2 * tb); }

}  // namespace

Scalar tdiff() {
    static const Scalar d = th() - thi();
    return d;
}

LaurentX div_X2_minus_1(const LaurentX& g) { return -g.div_one_minus(-2); }

Op parse_op(const std::string& tag) {
    static const std::map<std::string, Op> m{
        {"T", Op::T},   {"Tinv", Op::Tinv}, {"Y", Op::Y},         {"Yinv", Op::Yinv},
        {"X", Op::X},   {"Xinv", Op::Xinv}, {"pi", Op::pi},       {"s", Op::s},
        {"Gamma", Op::Gamma}, {"GammaInv", Op::GammaInv}, {"L", Op::L}};
    auto it = m.find(tag);
    if (it == m.end()) throw std::invalid_argument("unknown DAHA operator: " + tag);
    return it->second;
}

LaurentX apply(Op op, const LaurentX& f) {
    switch (op) {
        case Op::T: {
            LaurentX sf = apply_symmetry(f, Sym::s);
            return th() * sf + tdiff() * div_X2_minus_1(sf - f);
        }
        case Op::Tinv:
            return apply(Op::T, f) - tdiff() * f;
        case Op::Y:
            return apply_symmetry(apply(Op::T, f), Sym::pi);
        case Op::Yinv:
            return apply(Op::Tinv, apply_symmetry(f, Sym::pi));
        case Op::X:
            return f.shifted(1);
        case Op::Xinv:
            return f.shifted(-1);
        case Op::pi:
            return apply_symmetry(f, Sym::pi);
        case Op::s:
            return apply_symmetry(f, Sym::s);
        case Op::Gamma:
            return apply_symmetry(f, Sym::Gamma);
        case Op::GammaInv:
            return apply_symmetry(f, Sym::GammaInv);
        case Op::L: {
            // ((t^{1/2}X - t^{-1/2}X^{-1}) G f - (t^{1/2}X^{-1} - t^{-1/2}X) G^{-1} f) / (X - X^{-1})
            LaurentX a = LaurentX::mono(1, th()) + LaurentX::mono(-1, -thi());
            LaurentX b = LaurentX::mono(-1, -th()) + LaurentX::mono(1, thi());
            LaurentX num = a * apply_symmetry(f, Sym::Gamma) + b * apply_symmetry(f, Sym::GammaInv);
            // X - X^{-1} = X (1 - X^{-2})
            return num.shifted(-1).div_one_minus(2);
        }
    }
    throw std::invalid_argument("unsupported operator");
}

Scalar eigenvalue(int n) {
    return n > 0 ? Scalar::mono(1, -2 * n, -1) : Scalar::mono(1, -2 * n, 1);
}

Scalar q_nsharp(int n) {
    return n > 0 ? Scalar::mono(1, 2 * n, 1) : Scalar::mono(1, 2 * n, -1);
}

Scalar q_2nsharp(int n) {
    return n > 0 ? Scalar::mono(1, 4 * n, 2) : Scalar::mono(1, 4 * n, -2);
}

namespace {

std::mutex& memo_mutex() {
    static std::mutex m;
    return m;
}
std::map<int, LaurentX>& memo() {
    static std::map<int, LaurentX> m{{0, LaurentX(1)}};
    return m;
}

bool memo_get(int n, LaurentX& out) {
    std::lock_guard<std::mutex> g(memo_mutex());
    auto it = memo().find(n);
    if (it == memo().end()) return false;
    out = it->second;
    return true;
}

void memo_put(int n, const LaurentX& f) {
    std::lock_guard<std::mutex> g(memo_mutex());
    memo().emplace(n, f);
}

LaurentX intertwined(int n) {
    LaurentX r;
    if (memo_get(n, r)) return r;
    if (n > 0) {
        // E_n = q^{(n-1)/2} X pi(E_{-(n-1)})
        int m = n - 1;
        r = Scalar::qhalf(m) * apply_symmetry(intertwined(-m), Sym::pi).shifted(1);
    } else {
        int m = -n;
        LaurentX e = intertwined(m);
        Scalar c = tdiff() / (q_2nsharp(m) - Scalar(1));
        r = th() * (apply(Op::T, e) + c * e);
    }
    memo_put(n, r);
    return r;
}

// prod_{i=0}^{j-1} (1 - q^{a - i}) / (1 - q^{1 + i}) * (1 - t q^i) / (1 - t q^{b - i})
Scalar block(int j, int a, int b) {
    Scalar p(1);
    for (int i = 0; i < j; ++i)
        p *= one_minus(a - i, 0) / one_minus(1 + i, 0) * one_minus(i, 1) / one_minus(b - i, 1);
    return p;
}

LaurentX closed(int n) {
    if (n == 0) return LaurentX(1);
    LaurentX r;
    if (n < 0) {
        int m = -n;
        r.add_term(-m, Scalar(1));
        r.add_term(m, one_minus(0, 1) / one_minus(m, 1));
        for (int j = 1; j <= m / 2; ++j) r.add_term(2 * j - m, block(j, m, m));
        for (int j = 1; j <= (m - 1) / 2; ++j)
            r.add_term(m - 2 * j, one_minus(j, 1) / one_minus(m - j, 1) * block(j, m, m));
    } else {
        int m = n;
        r.add_term(m, Scalar(1));
        for (int j = 1; j <= m / 2; ++j)
            r.add_term(2 * j - m, Scalar::q(m - j) * one_minus(j, 0) / one_minus(m - j, 0) *
                                      block(j, m - 1, m - 1));
        for (int j = 1; j <= (m - 1) / 2; ++j)
            r.add_term(m - 2 * j, Scalar::q(j) * block(j, m - 1, m - 1));
    }
    return r;
}

}  // namespace

LaurentX epoly(int n, Method m) { return m == Method::intertwiner ? intertwined(n) : closed(n); }

Scalar evaluation(int n) {
    int an = n < 0 ? -n : n;
    int nt = n <= 0 ? an + 1 : an;
    Scalar p = Scalar::thalf(-an);
    for (int j = 1; j < nt; ++j) p *= one_minus(j, 2) / one_minus(j, 1);
    return p;
}

LaurentX spherical_e(int n) {
    Scalar ev = evaluation(n);
    if (ev.is_zero()) throw std::domain_error("zero evaluation");
    return ev.inv() * epoly(n);
}

bool duality_check(int m, int n) {
    Scalar a = eval_at(spherical_e(m), q_nsharp(n));
    Scalar b = eval_at(spherical_e(n), q_nsharp(m));
    return a == b;
}

bool pieri_check(int n) {
    // sign + for n <= 0, - for n > 0
    int sg = n <= 0 ? 1 : -1;
    Scalar tq = Scalar::mono(1, -4 * n, 2 * sg);  // t^{+-1} q^{-n}
    Scalar den = tq - Scalar(1);
    Scalar c1 = (Scalar::mono(1, -4 * n, 2 * sg - 1) - th()) / den;
    Scalar c2 = tdiff() / den;
    LaurentX lhs = spherical_e(n).shifted(1);
    LaurentX rhs = c1 * spherical_e(n + 1) + c2 * spherical_e(1 - n);
    return lhs == rhs;
}

LaurentX rogers(int n, Method m) {
    if (n < 0) throw std::invalid_argument("rogers: n must be nonnegative");
    if (m == Method::closed) {
        LaurentX r = LaurentX::mono(n) + LaurentX::mono(-n);
        if (n == 0) r = LaurentX(1);
        for (int j = 1; j <= n / 2; ++j) {
            int k = n - 2 * j;
            LaurentX M = k == 0 ? LaurentX(1) : LaurentX::mono(k) + LaurentX::mono(-k);
            Scalar p(1);
            for (int i = 0; i < j; ++i)
                p *= one_minus(n - i, 0) / one_minus(1 + i, 0) * one_minus(i, 1) /
                     one_minus(n - i - 1, 1);
            r += p * M;
        }
        return r;
    }
    LaurentX e = epoly(n);
    LaurentX p = e + th() * apply(Op::T, e);
    Scalar lead = p.coeff(n);
    return lead.inv() * p;
}

Scalar rogers_eigenvalue(int n) { return Scalar::mono(1, 2 * n, 1) + Scalar::mono(1, -2 * n, -1); }

LaurentX Tbar(const LaurentX& f) {
    // (s - 1) f / (1 - X^2)
    return (apply_symmetry(f, Sym::s) - f).div_one_minus(-2);
}

LaurentX Tbar_prime(const LaurentX& f) { return Tbar(f) + f; }
LaurentX Ybar(const LaurentX& f) { return apply_symmetry(Tbar(f), Sym::pi); }
LaurentX Ybar_prime(const LaurentX& f) { return Tbar_prime(apply_symmetry(f, Sym::pi)); }
LaurentX Lbar(const LaurentX& f) { return Ybar(f) + Ybar_prime(f); }

LaurentX limit_t0(const LaurentX& f) {
    return f.map_coeffs([](const Scalar& c) { return c.limit_v0(); });
}
LaurentX limit_tinf(const LaurentX& f) {
    return f.map_coeffs([](const Scalar& c) { return c.limit_vinf(); });
}
LaurentX limit_q0(const LaurentX& f) {
    return f.map_coeffs([](const Scalar& c) { return c.limit_u0(); });
}

namespace {

std::map<int, LaurentX>& bar_memo() {
    static std::map<int, LaurentX> m{{0, LaurentX(1)}};
    return m;
}

LaurentX bar_rec(int n) {
    {
        std::lock_guard<std::mutex> g(memo_mutex());
        auto it = bar_memo().find(n);
        if (it != bar_memo().end()) return it->second;
    }
    LaurentX r;
    if (n > 0) {
        int m = n - 1;
        r = Scalar::qhalf(m) * apply_symmetry(bar_rec(-m), Sym::pi).shifted(1);
    } else {
        r = Tbar_prime(bar_rec(-n));
    }
    std::lock_guard<std::mutex> g(memo_mutex());
    bar_memo().emplace(n, r);
    return r;
}

}  // namespace

LaurentX qhermite_bar(int n, BarMethod m) {
    if (m == BarMethod::limit) return limit_t0(epoly(n, Method::closed));
    return bar_rec(n);
}

LaurentX etilde(int n) { return limit_tinf(epoly(n, Method::closed)); }

bool tilde_relation_check(int n) {
    if (n < 0) n = -n;
    auto transform = [](const LaurentX& f, int qpow_half) {
        LaurentX g = Scalar::qhalf(qpow_half) * scale_var(f, Scalar::qhalf(1));
        return g.map_coeffs([](const Scalar& c) { return c.inv_u(); });
    };
    bool neg = etilde(-n) == transform(qhermite_bar(-n), n);
    bool pos = etilde(n) == transform(qhermite_bar(n), -n);
    return neg && pos;
}

LaurentX e0_limit(int n) { return limit_q0(spherical_e(n)); }

bool padic_limit_check(int n) {
    LaurentX e0 = e0_limit(n);
    LaurentX eps = e0.map_coeffs([](const Scalar& c) { return c.inv_v(); });
    if (eps != aha::matsumoto_eps(n)) return false;
    if (n < 0) return true;
    // Symmetric layer: lim_{q->0} P_n / P_n(t^{1/2}) and the spherical phi_n.
    LaurentX p = rogers(n, Method::closed);
    Scalar ev = eval_at(p, th());
    LaurentX p0 = limit_q0(ev.inv() * p);
    LaurentX chi = aha::schur_chi(n);
    LaurentX chi2 = aha::schur_chi(n - 2);
    LaurentX expect = (Scalar::thalf(n) / (Scalar(1) + Scalar::t(1))) * (chi - Scalar::t(1) * chi2);
    if (p0 != expect) return false;
    LaurentX phi = p0.map_coeffs([](const Scalar& c) { return c.inv_v(); });
    return phi == aha::spherical_phi(n, aha::PhiMethod::closed);
}

}  // namespace hecke::daha1
