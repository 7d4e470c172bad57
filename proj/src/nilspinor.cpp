#include "hecke/nilspinor.hpp"

#include "hecke/daha1.hpp"

#include <sstream>
#include <stdexcept>

namespace hecke::nilspinor {

namespace {

int xdeg(int e) { return e; }
int xdeg(const Exp2& e) { return e[0]; }
int shift_x(int e, int k) { return e + k; }
Exp2 shift_x(const Exp2& e, int k) { return {e[0] + k, e[1]}; }

template <class E>
Laurent<E> mulX(const Laurent<E>& f, int k) {
    return f.remap([k](const E& e) { return shift_x(e, k); }, [](const E&) { return Scalar(1); });
}

// Gamma^{sign} acting on the X variable only.
template <class E>
Laurent<E> gammaX(const Laurent<E>& f, int sign) {
    return f.remap([](const E& e) { return e; },
                   [sign](const E& e) { return Scalar::qhalf(sign * xdeg(e)); });
}

const Scalar& qq(int quarter) {
    static thread_local std::map<int, Scalar> cache;
    auto it = cache.find(quarter);
    if (it == cache.end()) it = cache.emplace(quarter, Scalar::mono(1, quarter, 0)).first;
    return it->second;
}

}  // namespace

SpinorScalar t_tilde_half() { return {Scalar::thalf(1), Scalar::thalf(-1)}; }

Hat parse_hat(const std::string& tag) {
    static const std::map<std::string, Hat> m{
        {"Y", Hat::Y},   {"Yprime", Hat::Yprime}, {"T", Hat::T},   {"Tprime", Hat::Tprime},
        {"pi", Hat::pi}, {"X", Hat::X},           {"Xprime", Hat::Xprime}, {"L", Hat::L},
        {"YGauss", Hat::YGauss}};
    auto it = m.find(tag);
    if (it == m.end()) throw std::invalid_argument("unknown hat operator: " + tag);
    return it->second;
}

template <class E>
Spinor<E> swap_s(const Spinor<E>& f) {
    return {f.f2, f.f1};
}

template <class E>
Spinor<E> apply_hat(Hat op, const Spinor<E>& f) {
    const Laurent<E>& a = f.f1;
    const Laurent<E>& b = f.f2;
    switch (op) {
        case Hat::Y:
            // {G^{-1}(f1 - f2), G(f2) - G((f2 - f1) / X^2)}
            return {gammaX(a - b, -1), gammaX(b, 1) - gammaX(mulX(b - a, -2), 1)};
        case Hat::Yprime:
            // {(1 - X^{-2}) G(f1) + G^{-1}(f2), G^{-1}(f2) - X^{-2} G(f1)}
            {
                Laurent<E> ga = gammaX(a, 1);
                return {ga - mulX(ga, -2) + gammaX(b, -1), gammaX(b, -1) - mulX(ga, -2)};
            }
        case Hat::T:
            return {Laurent<E>(), a - b};
        case Hat::Tprime:
            return {a, a};
        case Hat::pi:
            // {X f2 + (f1 - f2)/X, (f1 - f2)/X}
            {
                Laurent<E> d = mulX(a - b, -1);
                return {mulX(b, 1) + d, d};
            }
        case Hat::X:
            return apply_hat(Hat::pi, apply_hat(Hat::Tprime, f));
        case Hat::Xprime:
            return apply_hat(Hat::T, apply_hat(Hat::pi, f));
        case Hat::L: {
            auto L = [](const Laurent<E>& g) {
                Laurent<E> gg = gammaX(g, 1);
                return gg - mulX(gg, -2) + gammaX(g, -1);
            };
            return {L(a), L(b)};
        }
        case Hat::YGauss: {
            // q^{-x^2} Y^ q^{x^2}
            Laurent<E> d = a - b;
            const Scalar& q14 = qq(1);
            return {q14 * mulX(gammaX(d, -1), -1),
                    q14 * (mulX(gammaX(b, 1), 1) + qq(-4) * mulX(gammaX(d, 1), -1))};
        }
    }
    throw std::invalid_argument("unsupported hat operator");
}

template Spinor<int> apply_hat<int>(Hat, const Spinor<int>&);
template Spinor<Exp2> apply_hat<Exp2>(Hat, const Spinor<Exp2>&);
template Spinor<int> swap_s<int>(const Spinor<int>&);
template Spinor<Exp2> swap_s<Exp2>(const Spinor<Exp2>&);

SpinorX symmetric(const LaurentX& f) { return {f, f}; }
SpinorX principal(const LaurentX& f) { return {f, apply_symmetry(f, Sym::s)}; }

Super to_super(const SpinorX& f) {
    Scalar h = Scalar::rational(1, 2);
    return {h * (f.f1 + f.f2), h * (f.f1 - f.f2)};
}

SpinorX from_super(const Super& s) { return {s.even + s.odd, s.even - s.odd}; }

Super super_mul(const Super& a, const Super& b) {
    return {a.even * b.even + a.odd * b.odd, a.even * b.odd + a.odd * b.even};
}

SpinorX mul(const SpinorX& a, const SpinorX& b) { return {a.f1 * b.f1, a.f2 * b.f2}; }

namespace {

std::vector<std::pair<std::string, SpinorX>> spinor_basis(int deg) {
    std::vector<std::pair<std::string, SpinorX>> out;
    for (int j = -deg; j <= deg; ++j) {
        std::string s = std::to_string(j);
        out.push_back({"{X^" + s + ",0}", {X(j), LaurentX()}});
        out.push_back({"{0,X^" + s + "}", {LaurentX(), X(j)}});
    }
    return out;
}

SpinorX H(Hat h, const SpinorX& f) { return apply_hat(h, f); }

}  // namespace

Report nildaha_relations_check(int deg) {
    Report r;
    for (auto& [name, f] : spinor_basis(deg)) {
        auto T = [](const SpinorX& g) { return H(Hat::T, g); };
        auto Tp = [](const SpinorX& g) { return H(Hat::Tprime, g); };
        auto Y = [](const SpinorX& g) { return H(Hat::Y, g); };
        auto Yp = [](const SpinorX& g) { return H(Hat::Yprime, g); };
        auto Xh = [](const SpinorX& g) { return H(Hat::X, g); };
        auto Xp = [](const SpinorX& g) { return H(Hat::Xprime, g); };
        auto P = [](const SpinorX& g) { return H(Hat::pi, g); };
        r.expect(Tp(f) == T(f) + f, "T' = T + 1 on " + name);
        r.expect(T(Tp(f)).is_zero(), "T T' = 0 on " + name);
        r.expect(Tp(T(f)).is_zero(), "T' T = 0 on " + name);
        r.expect(Tp(Xp(f)).is_zero(), "T' X' = 0 on " + name);
        r.expect(Xh(T(f)).is_zero(), "X T = 0 on " + name);
        r.expect(T(Y(f)) - Yp(T(f)) == Scalar(-1) * Y(f), "T Y - Y^{-1} T = -Y on " + name);
        r.expect(T(Yp(f)) - Y(T(f)) == Y(f), "T Y^{-1} - Y T = Y on " + name);
        r.expect(T(Xh(f)) - Xp(T(f)) == Xp(f), "T X - X' T = X' on " + name);
        r.expect(T(Xp(f)) - Xh(T(f)) == Scalar(-1) * Xp(f), "T X' - X T = -X' on " + name);
        r.expect(Xh(f) + Xp(f) == SpinorX{f.f1.shifted(1), f.f2.shifted(1)},
                 "X + X' = X^delta on " + name);
        r.expect(Xh(Xp(f)).is_zero(), "X X' = 0 on " + name);
        r.expect(Y(Yp(f)) == f, "Y Y' = 1 on " + name);
        r.expect(Yp(Y(f)) == f, "Y' Y = 1 on " + name);
        r.expect(P(P(f)) == f, "pi^2 = 1 on " + name);
        r.expect(T(Y(f) + Yp(f)) == Y(T(f)) + Yp(T(f)), "T commutes with Y + Y' on " + name);
    }
    // Bar side on X-polynomials.
    using namespace daha1;
    for (int j = -deg; j <= deg; ++j) {
        LaurentX f = X(j);
        std::string name = "X^" + std::to_string(j);
        auto pi = [](const LaurentX& g) { return apply_symmetry(g, Sym::pi); };
        LaurentX tf = Tbar(f);
        r.expect((Tbar(tf) + tf).is_zero(), "Tbar (Tbar + 1) = 0 on " + name);
        r.expect(pi(pi(f)) == f, "pi^2 = 1 on " + name);
        r.expect(pi(pi(f).shifted(1)) == Scalar::qhalf(1) * f.shifted(-1),
                 "pi X pi = q^{1/2} X^{-1} on " + name);
        r.expect(Tbar(f.shifted(1)) - Tbar(f).shifted(-1) == f.shifted(-1),
                 "T X - X^{-1} T = X^{-1} on " + name);
        r.expect(Tbar(Ybar(f)) - Ybar_prime(Tbar(f)) == -Ybar(f), "T Y - Y' T = -Y on " + name);
        r.expect(Tbar(Ybar_prime(f)).is_zero(), "T Y' = 0 on " + name);
        r.expect(Ybar(Tbar_prime(f)).is_zero(), "Y T' = 0 on " + name);
        r.expect(Tbar(Ybar_prime(f)) - Ybar(Tbar(f)) == Ybar(f), "T Y' - Y T = Y on " + name);
    }
    return r;
}

SpinorX qtoda_apply(const SpinorX& f) { return apply_hat(Hat::L, f); }

Report qtoda_check(int deg) {
    Report r;
    for (int j = -deg; j <= deg; ++j) {
        for (int k = j; k <= deg; ++k) {
            LaurentX g = X(j) + X(k);
            SpinorX f = symmetric(g);
            SpinorX lhs = H(Hat::Y, f) + H(Hat::Yprime, f);
            r.expect(lhs == qtoda_apply(f), "(Y + Y') = L on {f,f}, f = X^" + std::to_string(j) +
                                                " + X^" + std::to_string(k));
            r.expect(lhs.f1 == lhs.f2, "symmetry of (Y + Y'){f,f}");
        }
    }
    return r;
}

bool spin_member(const SpinorX& f) {
    for (auto& [e, c] : f.f1.terms())
        if (e < 0) return false;
    for (auto& [e, c] : f.f2.terms())
        if (e < 0) return false;
    return f.f1.coeff(0) == f.f2.coeff(0);
}

Report spin_invariance_check(int deg) {
    Report r;
    std::vector<std::pair<std::string, SpinorX>> basis{{"{1,1}", symmetric(LaurentX(1))}};
    for (int m = 1; m <= deg; ++m) {
        basis.push_back({"{X^" + std::to_string(m) + ",0}", {X(m), LaurentX()}});
        basis.push_back({"{0,X^" + std::to_string(m) + "}", {LaurentX(), X(m)}});
    }
    for (auto& [name, f] : basis) {
        r.expect(spin_member(f), "basis element " + name);
        r.expect(spin_member(H(Hat::T, f)), "T^ " + name);
        r.expect(spin_member(H(Hat::pi, f)), "pi^ " + name);
        r.expect(spin_member(H(Hat::YGauss, f)), "q^{-x^2} Y^ q^{x^2} " + name);
    }
    return r;
}

Report rie_delta_check(int deg) {
    // Components of ae^delta(Y) with t symbolic, applied to {f1, f2}:
    //  first:  t G^{-1} f1 + G^{-1}((t - 1)/(t X^{-2} - 1) (f1 - f2))
    //  second: G f2 + G((1 - t^{-1})/(t^{-1} X^2 - 1) (f2 - f1))
    // The leading factors t and 1 are t^{1/2} times the entries of the
    // spinor constant t~^{1/2}.  Multiply row one by (t q X^{-2} - 1) and row
    // two by (q X^2 - t), let t -> 0, then divide by the limits -1 and q X^2.
    Report r;
    SpinorScalar tt = t_tilde_half();
    Scalar t = Scalar::t(1), one(1), q = Scalar::q(1);
    Scalar row1 = Scalar::thalf(1) * tt.c1;   // t
    Scalar row2 = Scalar::thalf(1) * tt.c2;   // 1
    for (auto& [name, f] : spinor_basis(deg)) {
        LaurentX d = f.f1 - f.f2;
        LaurentX D1 = LaurentX::mono(-2, t * q) - LaurentX(1);
        LaurentX n1 = D1 * (row1 * apply_symmetry(f.f1, Sym::GammaInv)) +
                      (t - one) * apply_symmetry(d, Sym::GammaInv);
        LaurentX D2 = LaurentX::mono(2, q) - LaurentX(t);
        LaurentX n2 = D2 * (row2 * apply_symmetry(f.f2, Sym::Gamma)) +
                      (t - one) * apply_symmetry(-d, Sym::Gamma);
        LaurentX c1 = -daha1::limit_t0(n1);
        LaurentX c2 = q.inv() * daha1::limit_t0(n2).shifted(-2);
        SpinorX yh = H(Hat::Y, f);
        r.expect(c1 == yh.f1 && c2 == yh.f2, "t -> 0 of ae^delta(Y) on " + name);
    }
    return r;
}

namespace {

Laurent2 embed(const LaurentX& f, int xexp) {
    Laurent2 r;
    for (auto& [e, c] : f.terms()) r.add_term({xexp, e}, c);
    return r;
}

Scalar qpoch(int m) {
    Scalar p(1);
    for (int s = 1; s <= m; ++s) p *= Scalar(1) - Scalar::q(s);
    return p;
}

}  // namespace

Spinor2 whittaker_omega(int N, Presentation p) {
    if (N < 0) throw std::invalid_argument("whittaker_omega: negative order");
    using daha1::qhermite_bar;
    Spinor2 om;
    for (int m = 0; m <= N; ++m) {
        Scalar g = Scalar::mono(1, m * m, 0);  // q^{m^2/4}
        if (p == Presentation::pieri) {
            Scalar c = g / qpoch(m);
            om.f1 += c * embed(qhermite_bar(-m), m);
            om.f2 += c * embed(qhermite_bar(m + 1).shifted(-1), m);
        } else if (m == 0) {
            om.f1 += Laurent2(1);
            om.f2 += Laurent2(1);
        } else {
            Scalar c1 = g / qpoch(m), c2 = g / qpoch(m - 1);
            Laurent2 em = embed(qhermite_bar(-m), m);
            om.f1 += c1 * em;
            om.f2 += (c1 * Scalar::q(m)) * em + c2 * embed(qhermite_bar(m), m);
        }
    }
    return om;
}

Laurent2 whittaker_symmetric(int N) {
    Laurent2 w;
    for (int m = 0; m <= N; ++m)
        w += (Scalar::mono(1, m * m, 0) / qpoch(m)) * embed(daha1::qhermite_bar(-m), m);
    return w;
}

Laurent2 Tbar_L(const Laurent2& f) {
    Laurent2 sf = f.remap([](const Exp2& e) { return Exp2{e[0], -e[1]}; },
                          [](const Exp2&) { return Scalar(1); });
    // (s - 1) f / (1 - Lambda^2)
    return (sf - f).div_one_minus({0, -2});
}

Laurent2 pi_L(const Laurent2& f) {
    return f.remap([](const Exp2& e) { return Exp2{e[0], -e[1]}; },
                   [](const Exp2& e) { return Scalar::qhalf(e[1]); });
}

Laurent2 Ybar_L(const Laurent2& f) { return pi_L(Tbar_L(f)); }
Laurent2 Ybar_prime_L(const Laurent2& f) {
    Laurent2 g = pi_L(f);
    return Tbar_L(g) + g;
}

Spinor2 truncate_x(const Spinor2& f, int N) {
    Spinor2 r;
    for (auto& [e, c] : f.f1.terms())
        if (e[0] <= N) r.f1.add_term(e, c);
    for (auto& [e, c] : f.f2.terms())
        if (e[0] <= N) r.f2.add_term(e, c);
    return r;
}

Report whittaker_check(int N) {
    Report r;
    Spinor2 om = whittaker_omega(N + 1);
    Spinor2 alt = whittaker_omega(N + 1, Presentation::pieri_free);
    r.expect(om == alt, "the two presentations of Omega agree");
    auto T = [N](const Spinor2& s) { return truncate_x(s, N); };
    auto onL = [](const Spinor2& s, auto&& op) { return Spinor2{op(s.f1), op(s.f2)}; };
    Scalar q14 = Scalar::mono(1, 1, 0);
    auto Linv = [](const Laurent2& f) { return f.shifted({0, -1}); };

    r.expect(T(apply_hat(Hat::YGauss, om)) == T(onL(om, Linv)), "Y^(Omega) = Lambda^{-1} Omega");
    // q^{-l^2} Ybar'_L q^{l^2} = q^{1/4} Tbar'_L Lambda^{-1} pi_L
    Spinor2 rhsX = q14 * onL(om, [&](const Laurent2& f) {
                       Laurent2 g = Linv(pi_L(f));
                       return Tbar_L(g) + g;
                   });
    Spinor2 lhsX = apply_hat(Hat::X, om);
    r.expect(T(lhsX) == T(rhsX), "X^(Omega) = Ybar'_L(Omega)");
    r.expect(T(rhsX).f2.is_zero(), "second component of Ybar'_L(Omega) vanishes");
    // q^{-l^2} Ybar_L q^{l^2} = q^{1/4} Lambda^{-1} Ybar_L
    Spinor2 rhsXp = q14 * onL(om, [&](const Laurent2& f) { return Linv(Ybar_L(f)); });
    r.expect(T(apply_hat(Hat::Xprime, om)) == T(rhsXp), "X^'(Omega) = Ybar_L(Omega)");
    Spinor2 rhsPi = q14 * onL(om, [&](const Laurent2& f) { return Linv(pi_L(f)); });
    r.expect(T(apply_hat(Hat::pi, om)) == T(rhsPi), "pi^(Omega) = pi_L(Omega)");
    r.expect(T(apply_hat(Hat::T, om)) == T(onL(om, Tbar_L)), "T^(Omega) = Tbar_L(Omega)");
    Spinor2 sym = apply_hat(Hat::Tprime, om);
    Laurent2 w = whittaker_symmetric(N + 1);
    r.expect(T(sym) == T(Spinor2{w, w}), "T^'(Omega) = {W_q, W_q}");
    return r;
}

}  // namespace hecke::nilspinor
