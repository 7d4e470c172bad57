// Affine symmetrizers in rank one: the normal form A(Y) + B(Y) T, truncated
// and rational symmetrizers, the level-zero form, constant-term series,
// Kac-Moody numerators and numeric Jackson summation.
#pragma once

#include "hecke/laurent.hpp"
#include "hecke/numeric.hpp"
#include "hecke/rootsys.hpp"

#include <map>
#include <string>
#include <utility>
#include <vector>

namespace hecke::affsym {

// (a(Y) + b(Y) T) / den(Y) with den W-invariant (den(Y^{-1}) = den(Y)).
// Laurent polynomials here are in the variable Y.
struct AhaOpExpr {
    LaurentX a, b;
    LaurentX den = LaurentX(1);

    static AhaOpExpr scalar(const Scalar& c);
    static AhaOpExpr Y(int n = 1);
    static AhaOpExpr T();
    static AhaOpExpr Tinv();
    static AhaOpExpr rational(const LaurentX& num, const LaurentX& den);

    friend AhaOpExpr operator+(const AhaOpExpr& x, const AhaOpExpr& y);
    friend AhaOpExpr operator-(const AhaOpExpr& x, const AhaOpExpr& y);
    friend AhaOpExpr operator*(const AhaOpExpr& x, const AhaOpExpr& y);
    friend AhaOpExpr operator*(const Scalar& c, const AhaOpExpr& x);
    bool is_zero() const { return a.is_zero() && b.is_zero(); }
    bool equals(const AhaOpExpr& o) const { return (*this - o).is_zero(); }
    std::string str() const;
};

// T f(Y) = f(Y^{-1}) T + (t^{1/2} - t^{-1/2}) (f(Y^{-1}) - f(Y)) / (Y^{-2} - 1)
LaurentX demazure_Y(const LaurentX& f);

AhaOpExpr one_plus();                 // 1 + t^{-1/2} T^{-1}
AhaOpExpr U_plus();                   // U (1 + t^{-1/2} T^{-1}), U rational
AhaOpExpr trunc_Phat(int M);
AhaOpExpr sigma_hat(int M);           // Sigma^_M (1 + t^{-1/2} T^{-1})
AhaOpExpr sigma_bar(int M);           // Sigma-bar_M (1 + t^{-1/2} T^{-1})

// E-basis expansion f = sum c_n E_n.
std::map<int, Scalar> e_expand(const LaurentX& f);
// Action on polynomials; rational parts act diagonally on E_n.
LaurentX apply_expr(const AhaOpExpr& A, const LaurentX& f);
// (1 + t^{1/2} T)(U (1 + t^{-1/2} T^{-1}) + t^{-1/2} T^{-1}) applied to f.
LaurentX phat_rational_apply(const LaurentX& f);
// t^{-1/2} P^_+(f T(g)) normalized by P^'_+(1); the result must be a constant.
Scalar diamond_form(const LaurentX& f, const LaurentX& g);

// Series in q (coefficients of q^0..q^N) with coefficients in t.
std::vector<Scalar> ct_series(int N, const rootsys::RootSystem& R, bool t_inverse = true);

// Sum over w^ = b w of (-1)^{l(w^)} X_{rho^ - w^(rho^) - l b} q^{l b^2 / 2}, A1,
// truncated mod q^N.  Coefficients are polynomials in u = q^{1/4}.
LaurentX km_numerator(int level, int N);
// prod over positive affine roots of (1 - X_a), mod q^N.
LaurentX affine_denominator(int N);
// sum_b X_b q^{b^2/2} mod q^N (A1).
LaurentX theta_A1(int N);
// Drops u-powers >= 4N from the coefficients (polynomial coefficients only).
LaurentX truncate_q(const LaurentX& f, int N);

// Exact delta representation for A1 at X0 = c: points (eps, m) carry
// X = c^eps q^{m/2}.  Returns u-valuations of the coefficients of points
// with |m| <= M of the operator t^{-1/2} G Sigma^+_M - Sigma^+_M, G = Y or T.
struct ValuationRow {
    int eps, m, ord;
};
std::vector<ValuationRow> siminv_valuations(int M, bool use_T, long c_num = 2, long c_den = 1);

// ---- numeric side ----

struct JacksonConfig {
    cplx q0{0.3, 0.0};
    cplx t0{2.0, 0.0};
    std::vector<cplx> xi{cplx(0.11, 0.07)};  // (omega_i, x)
    int cutoff = 40;
    double tol = 1e-10;
};

struct JacksonResult {
    cplx value;
    double tail_estimate = 0;
    int shells_used = 0;
};

// F is a Laurent polynomial in X_{omega_1}, X_{omega_2} (second exponent
// ignored for A1) with exact coefficients specialized at (q0, t0).
JacksonResult jackson_sum(const rootsys::RootSystem& R, const Laurent2& F, const JacksonConfig& cfg,
                          int level);
cplx mu_tilde(const rootsys::RootSystem& R, const std::vector<cplx>& z, cplx q0, cplx t0);

struct CtValue {
    cplx value;
    int zero_order = 0;  // order of the zero forced by exactly vanishing factors
};
// ct at t -> tt: prod (1 - tt^h q^i)^2 / ((1 - tt^{h+1} q^i)(1 - tt^{h-1} q^i)).
CtValue ct_numeric(const rootsys::RootSystem& R, cplx q0, cplx tt);
cplx poincare_numeric(const rootsys::RootSystem& R, cplx tinv);
// Right side of the level-one formula for A1 and E_a, a = n omega.
cplx level_one_closed(int n, const JacksonConfig& cfg);
Laurent2 to_weight_poly(const LaurentX& f);  // A1 embedding

enum class ProbeOp { PhatTrunc, SJmu };
struct ProbeResult {
    cplx value;      // coefficient of the chosen operator
    cplx reference;  // ct(t^{-1}) mu~ at the orbit point
    cplx ratio;
};
// A1: coefficient of w^ in P^'_M (via Sigma^+_M) or in S'(mu~).
ProbeResult coefficient_probe(ProbeOp op, int M, const rootsys::AffWeylElt& w, const JacksonConfig& cfg);

}  // namespace hecke::affsym
