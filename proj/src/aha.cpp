#include "hecke/aha.hpp"

#include <map>
#include <stdexcept>

namespace hecke::aha {

namespace {

const Scalar& th() {
    static const Scalar v = Scalar::thalf(1);
    return v;
}
const Scalar& tdiff() {
    static const Scalar v = Scalar::thalf(1) - Scalar::thalf(-1);
    return v;
}

LaurentX sY(const LaurentX& f) { return apply_symmetry(f, Sym::s); }

}  // namespace

LaurentX lusztig_T(const LaurentX& f) {
    // t^{1/2} s f + (t^{1/2}-t^{-1/2}) (s f - f) / (Y^{-2} - 1)
    LaurentX sf = sY(f);
    return th() * sf - tdiff() * (sf - f).div_one_minus(2);
}

LaurentX lusztig_Tinv(const LaurentX& f) { return lusztig_T(f) - tdiff() * f; }

LaurentX symmetrize_P(const LaurentX& f) {
    return (Scalar(1) + Scalar::t(1)).inv() * (f + th() * lusztig_T(f));
}

Exp2 a2_simple(int i) { return i == 1 ? Exp2{2, -1} : Exp2{-1, 2}; }

Exp2 a2_reflect(int i, const Exp2& e) {
    Exp2 a = a2_simple(i);
    int c = e[static_cast<std::size_t>(i - 1)];
    return {e[0] - c * a[0], e[1] - c * a[1]};
}

Laurent2 a2_s(int i, const Laurent2& f) {
    return f.remap([i](const Exp2& e) { return a2_reflect(i, e); },
                   [](const Exp2&) { return Scalar(1); });
}

Laurent2 lusztig_T(int i, const Laurent2& f) {
    Laurent2 sf = a2_s(i, f);
    return th() * sf - tdiff() * (sf - f).div_one_minus(a2_simple(i));
}

Laurent2 lusztig_Tinv(int i, const Laurent2& f) { return lusztig_T(i, f) - tdiff() * f; }

const std::vector<WeylElt>& a2_weyl() {
    static const std::vector<WeylElt> w = [] {
        std::vector<WeylElt> out;
        out.push_back({{}, 1, 0, 0, 1});
        // breadth-first by length
        for (std::size_t k = 0; k < out.size(); ++k) {
            for (int i = 1; i <= 2; ++i) {
                const WeylElt& x = out[k];
                // s_i * x as a matrix: rows transformed by s_i
                Exp2 c0 = a2_reflect(i, {x.a, x.c});
                Exp2 c1 = a2_reflect(i, {x.b, x.d});
                WeylElt y{x.word, c0[0], c1[0], c0[1], c1[1]};
                y.word.insert(y.word.begin(), i);
                bool seen = false;
                for (auto& z : out)
                    if (z.a == y.a && z.b == y.b && z.c == y.c && z.d == y.d) seen = true;
                if (!seen) out.push_back(y);
            }
        }
        return out;
    }();
    return w;
}

Laurent2 a2_T_word(const std::vector<int>& word, const Laurent2& f) {
    Laurent2 r = f;
    for (auto it = word.rbegin(); it != word.rend(); ++it) r = lusztig_T(*it, r);
    return r;
}

Laurent2 symmetrize_P(const Laurent2& f) {
    Laurent2 acc;
    Scalar norm;
    for (auto& w : a2_weyl()) {
        int l = static_cast<int>(w.word.size());
        acc += Scalar::thalf(l) * a2_T_word(w.word, f);
        norm += Scalar::t(l);
    }
    return norm.inv() * acc;
}

LaurentX macdonald_rhs(const LaurentX& f) {
    // N = f (1 - t^{-1} Y^{-2}); sum over W of (-1)^l Y^{-sigma_w} w(N), then / (1 - Y^{-2})
    LaurentX N = f * (LaurentX(1) - LaurentX::mono(-2, Scalar::t(-1)));
    LaurentX acc = N - sY(N).shifted(-2);
    return acc.div_one_minus(2);
}

namespace {

const std::vector<Exp2>& a2_positive() {
    static const std::vector<Exp2> p{{2, -1}, {-1, 2}, {1, 1}};
    return p;
}

bool a2_is_positive(const Exp2& r) {
    // coordinates in the simple-root basis
    int c1 = 2 * r[0] + r[1], c2 = r[0] + 2 * r[1];
    return c1 >= 0 && c2 >= 0;
}

}  // namespace

Laurent2 macdonald_rhs(const Laurent2& f) {
    Laurent2 N = f;
    for (auto& a : a2_positive())
        N = N * (Laurent2(1) - Laurent2::mono({-a[0], -a[1]}, Scalar::t(-1)));
    Laurent2 acc;
    for (auto& w : a2_weyl()) {
        Exp2 sigma{0, 0};
        for (auto& a : a2_positive()) {
            Exp2 wa = w.act(a);
            if (!a2_is_positive(wa)) sigma = {sigma[0] - wa[0], sigma[1] - wa[1]};
        }
        Laurent2 wN = N.remap([&](const Exp2& e) { return w.act(e); },
                              [](const Exp2&) { return Scalar(1); });
        int sign = (w.word.size() % 2 == 0) ? 1 : -1;
        acc += Scalar(sign) * wN.shifted({-sigma[0], -sigma[1]});
    }
    for (auto& a : a2_positive()) acc = acc.div_one_minus(a);
    return acc;
}

MacdonaldReport check_operator_macdonald(const LaurentX& f) {
    MacdonaldReport r;
    try {
        LaurentX lhs = (Scalar(1) + Scalar::t(-1)) * symmetrize_P(f);
        LaurentX rhs = macdonald_rhs(f);
        r.ok = lhs == rhs;
        if (!r.ok) r.detail = "sides differ";
    } catch (const std::exception& e) {
        r.ok = false;
        r.detail = e.what();
    }
    return r;
}

MacdonaldReport check_operator_macdonald(const Laurent2& f) {
    MacdonaldReport r;
    try {
        Scalar P;
        for (auto& w : a2_weyl()) P += Scalar::t(-static_cast<int>(w.word.size()));
        Laurent2 lhs = P * symmetrize_P(f);
        Laurent2 rhs = macdonald_rhs(f);
        r.ok = lhs == rhs;
        if (!r.ok) r.detail = "sides differ";
    } catch (const std::exception& e) {
        r.ok = false;
        r.detail = e.what();
    }
    return r;
}

LaurentX matsumoto_eps(int m) {
    if (m >= 0) return LaurentX::mono(m, Scalar::thalf(-m));
    int n = -m;
    // t^{-(n+1)/2} (t^{1/2} Y^{-n} + (t^{1/2}-t^{-1/2}) (Y^{-n} - Y^n) / (Y^{-2} - 1))
    LaurentX d = LaurentX::mono(-n) - LaurentX::mono(n);
    LaurentX inner = th() * LaurentX::mono(-n) - tdiff() * d.div_one_minus(2);
    return Scalar::thalf(-(n + 1)) * inner;
}

LaurentX schur_chi(int m) {
    if (m == -1) return LaurentX();
    if (m < -1) return -schur_chi(-m - 2);
    LaurentX r;
    for (int j = -m; j <= m; j += 2) r.add_term(j, Scalar(1));
    return r;
}

LaurentX monomial_M(int m) {
    if (m == 0) return LaurentX(1);
    Scalar h = Scalar::rational(1, 2);
    return LaurentX::mono(m, h) + LaurentX::mono(-m, h);
}

LaurentX spherical_phi(int m, PhiMethod method) {
    if (m < 0) throw std::invalid_argument("spherical_phi: m must be nonnegative");
    switch (method) {
        case PhiMethod::closed: {
            if (m == 0) return LaurentX(1);
            LaurentX a = LaurentX::mono(m + 1) - LaurentX::mono(-m - 1);
            LaurentX b = LaurentX::mono(m - 1) - LaurentX::mono(1 - m);
            LaurentX num = a - Scalar::t(-1) * b;
            LaurentX q = num.shifted(-1).div_one_minus(2);
            return (Scalar::thalf(-m) / (Scalar(1) + Scalar::t(-1))) * q;
        }
        case PhiMethod::pieri: {
            LaurentX y = LaurentX::mono(1) + LaurentX::mono(-1);
            LaurentX prev(1);
            if (m == 0) return prev;
            LaurentX cur = (th() + Scalar::thalf(-1)).inv() * y;
            for (int k = 1; k < m; ++k) {
                LaurentX nxt = th().inv() * (y * cur - Scalar::thalf(-1) * prev);
                prev = cur;
                cur = nxt;
            }
            return cur;
        }
        case PhiMethod::symmetrize:
            return symmetrize_P(matsumoto_eps(m));
    }
    throw std::invalid_argument("unknown method");
}

bool eps_pieri_check(int m) {
    if (m < 0) throw std::invalid_argument("eps_pieri_check: m >= 0");
    auto Y = [](const LaurentX& f) { return f.shifted(1); };
    auto Yi = [](const LaurentX& f) { return f.shifted(-1); };
    auto e = [](int k) { return matsumoto_eps(k); };
    Scalar tih = Scalar::thalf(-1);
    bool ok = Y(e(m)) == th() * e(m + 1);
    ok = ok && Y(e(-m)) == tih * e(-m + 1) + tdiff() * e(m + 1);
    ok = ok && Yi(e(m + 1)) == tih * e(m);
    ok = ok && Yi(e(-m)) == th() * e(-m - 1) - tdiff() * e(m + 1);
    return ok;
}

bool pi_eps_check(int m) {
    LaurentX pe = lusztig_Tinv(matsumoto_eps(m)).shifted(1);
    return pe == matsumoto_eps(1 - m);
}

LaurentX limit_family(int m, Limit lim, Family fam) {
    LaurentX f;
    if (fam == Family::phi_tilde) {
        if (m < 0) throw std::invalid_argument("phi~ needs m >= 0");
        f = Scalar::thalf(m) * spherical_phi(m, PhiMethod::closed);
    } else {
        f = Scalar::thalf(m < 0 ? -m : m) * matsumoto_eps(m);
    }
    return f.map_coeffs([lim](const Scalar& c) {
        switch (lim) {
            case Limit::t0: return c.limit_v0();
            case Limit::t1: return c.limit_v1();
            case Limit::tinf: return c.limit_vinf();
        }
        return c;
    });
}

Laurent2 hall_littlewood_A2(const Exp2& b) {
    if (b[0] < 0 || b[1] < 0) throw std::invalid_argument("hall_littlewood_A2: b must be dominant");
    Scalar P;
    for (auto& w : a2_weyl()) P += Scalar::t(-static_cast<int>(w.word.size()));
    Laurent2 s = macdonald_rhs(Laurent2::mono(b));
    return (Scalar::t(-(b[0] + b[1])).pow(1) * P.inv()) * s;
}

}  // namespace hecke::aha
