// Rank-one DAHA in the polynomial representation: operators,
// E-polynomials, Rogers polynomials and their limits.
#pragma once

#include "hecke/laurent.hpp"

#include <string>

namespace hecke::daha1 {

enum class Op { T, Tinv, Y, Yinv, X, Xinv, pi, s, Gamma, GammaInv, L };

Op parse_op(const std::string& tag);
LaurentX apply(Op op, const LaurentX& f);

// (t^{1/2} - t^{-1/2})
Scalar tdiff();
// g / (X^2 - 1), exact.
LaurentX div_X2_minus_1(const LaurentX& g);

// Y E_n = eigenvalue(n) E_n, realized as t^{-1/2} q^{-n/2} (n > 0) or
// t^{1/2} q^{-n/2} (n <= 0).
Scalar eigenvalue(int n);
// q^{n_#} and q^{2 n_#} as monomials.
Scalar q_nsharp(int n);
Scalar q_2nsharp(int n);

enum class Method { intertwiner, closed };

// E_n, leading term X^n.  The intertwiner family is memoized.
LaurentX epoly(int n, Method m = Method::intertwiner);
// Product formula for E_n(t^{-1/2}).
Scalar evaluation(int n);
// Normalized E_n / E_n(t^{-1/2}); throws when the evaluation is zero.
LaurentX spherical_e(int n);

bool duality_check(int m, int n);
bool pieri_check(int n);

// Rogers P_n with leading term X^n.
LaurentX rogers(int n, Method m = Method::intertwiner);
Scalar rogers_eigenvalue(int n);

// Nil limit (t -> 0) operators.
LaurentX Tbar(const LaurentX& f);
LaurentX Tbar_prime(const LaurentX& f);
LaurentX Ybar(const LaurentX& f);
LaurentX Ybar_prime(const LaurentX& f);
LaurentX Lbar(const LaurentX& f);

enum class BarMethod { limit, intertwiner };
LaurentX qhermite_bar(int n, BarMethod m = BarMethod::intertwiner);
// t -> infinity limit of E_n.
LaurentX etilde(int n);
bool tilde_relation_check(int n);

// lim_{q->0} of the spherical E_n.
LaurentX e0_limit(int n);
bool padic_limit_check(int n);

// Coefficientwise limits of a polynomial.
LaurentX limit_t0(const LaurentX& f);
LaurentX limit_tinf(const LaurentX& f);
LaurentX limit_q0(const LaurentX& f);

}  // namespace hecke::daha1
