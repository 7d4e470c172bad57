// Spinors {f1, f2}, the hat operators of the spinor q-Toda theory, the
// nil-DAHA relations and the nonsymmetric spinor q-Whittaker function.
#pragma once

#include "hecke/laurent.hpp"
#include "hecke/report.hpp"

#include <string>
#include <vector>

namespace hecke::nilspinor {

// Components are Laurent polynomials in X (E = int) or in (X, Lambda)
// (E = Exp2, X-degree first).
template <class E>
struct Spinor {
    Laurent<E> f1, f2;
    bool operator==(const Spinor& o) const { return f1 == o.f1 && f2 == o.f2; }
    bool operator!=(const Spinor& o) const { return !(*this == o); }
    Spinor operator+(const Spinor& o) const { return {f1 + o.f1, f2 + o.f2}; }
    Spinor operator-(const Spinor& o) const { return {f1 - o.f1, f2 - o.f2}; }
    friend Spinor operator*(const Scalar& c, const Spinor& s) { return {c * s.f1, c * s.f2}; }
    bool is_zero() const { return f1.is_zero() && f2.is_zero(); }
};
using SpinorX = Spinor<int>;
using Spinor2 = Spinor<Exp2>;

// Diagonal constant {c1, c2}; commutes with X and Gamma, and s c = swap(c) s.
struct SpinorScalar {
    Scalar c1, c2;
    SpinorScalar swapped() const { return {c2, c1}; }
    SpinorScalar operator*(const SpinorScalar& o) const { return {c1 * o.c1, c2 * o.c2}; }
    template <class E>
    Spinor<E> operator()(const Spinor<E>& s) const { return {c1 * s.f1, c2 * s.f2}; }
};
// t~^{1/2} = {t^{1/2}, t^{-1/2}}
SpinorScalar t_tilde_half();

enum class Hat { Y, Yprime, T, Tprime, pi, X, Xprime, L, YGauss };
Hat parse_hat(const std::string& tag);

template <class E>
Spinor<E> apply_hat(Hat op, const Spinor<E>& f);
template <class E>
Spinor<E> swap_s(const Spinor<E>& f);  // s{f1, f2} = {f2, f1}

SpinorX symmetric(const LaurentX& f);  // f^delta = {f, f}
SpinorX principal(const LaurentX& f);  // f^rho = {f, s f}

// Super presentation f = [[f0, f1]] with f0 = (f1+f2)/2, f1 = (f1-f2)/2.
struct Super {
    LaurentX even, odd;
};
Super to_super(const SpinorX& f);
SpinorX from_super(const Super& s);
Super super_mul(const Super& a, const Super& b);
SpinorX mul(const SpinorX& a, const SpinorX& b);

using hecke::Report;

// Hat relations and Y^Y^' = 1, pi^2 = 1 on {X^j, 0}, {0, X^j}, |j| <= deg,
// followed by the bar-side relations on X^j.
Report nildaha_relations_check(int deg = 5);
// (Y^ + Y^') on symmetric spinors equals the q-Toda spinor operator.
Report qtoda_check(int deg = 5);
SpinorX qtoda_apply(const SpinorX& f);

// X_spin membership and invariance under T^, pi^, q^{-x^2} Y^ q^{x^2}.
bool spin_member(const SpinorX& f);
Report spin_invariance_check(int deg = 6);

// ae^delta(Y) at symbolic t, cleared of denominators, then t -> 0,
// compared with Y^.
Report rie_delta_check(int deg = 4);

// Omega with the Gaussian q^{x^2} q^{lambda^2} factored out, through X-degree N.
enum class Presentation { pieri_free, pieri };  // first and second displays
Spinor2 whittaker_omega(int N, Presentation p = Presentation::pieri);
// W_q without the Gaussian: sum q^{m^2/4} Pbar_m(Lambda) X^m / prod (1 - q^s).
Laurent2 whittaker_symmetric(int N);
// Lambda-side bar operators.
Laurent2 Tbar_L(const Laurent2& f);
Laurent2 pi_L(const Laurent2& f);
Laurent2 Ybar_L(const Laurent2& f);
Laurent2 Ybar_prime_L(const Laurent2& f);
// The five intertwining identities, with the presentations compared too.
Report whittaker_check(int N);
// Truncation to X-degree <= N.
Spinor2 truncate_x(const Spinor2& f, int N);

}  // namespace hecke::nilspinor
