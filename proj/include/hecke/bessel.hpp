// Rational and trigonometric Dunkl theory in rank one: formal operators in
// {X, D, s} over Q(k)(X), Bessel-type series, the Gamma function, and
// numeric Gauss-Bessel integrals on the half-line and on shifted lines.
#pragma once

#include "hecke/report.hpp"
#include "hecke/rootsys.hpp"
#include "hecke/scalar.hpp"

#include <complex>
#include <functional>
#include <map>
#include <string>
#include <utility>

namespace hecke::bessel {

using cplx = std::complex<double>;

// Coefficients are elements of Q(k)(X) stored as Scalar with X in the u slot
// and k in the v slot.  Rational flavor: X is x, D = d/dx, s: x -> -x.
// Trigonometric flavor: X = e^x, D = X d/dX, s: X -> X^{-1}.
enum class Flavor { Rational, Trig };

Scalar kvar();
Scalar xvar(int n = 1);
Scalar d_u(const Scalar& c);
Scalar d_v(const Scalar& c);
Scalar flip(const Scalar& c, Flavor f);   // s acting on a coefficient
Scalar deriv(const Scalar& c, Flavor f);  // D acting on a coefficient

// Sum of c D^j s^e, coefficients on the left, s on the right.
class FormalKOp {
public:
    using Key = std::pair<int, int>;  // (j, e)

    explicit FormalKOp(Flavor f = Flavor::Rational) : flavor_(f) {}
    static FormalKOp coeff(Flavor f, const Scalar& c);
    static FormalKOp D(Flavor f);
    static FormalKOp s(Flavor f);

    Flavor flavor() const { return flavor_; }
    const std::map<Key, Scalar>& terms() const { return t_; }
    void add_term(int j, int e, const Scalar& c);

    friend FormalKOp operator+(const FormalKOp& a, const FormalKOp& b);
    friend FormalKOp operator-(const FormalKOp& a, const FormalKOp& b);
    friend FormalKOp operator*(const FormalKOp& a, const FormalKOp& b);
    friend FormalKOp operator*(const Scalar& c, const FormalKOp& a);
    bool operator==(const FormalKOp& o) const { return flavor_ == o.flavor_ && t_ == o.t_; }
    bool is_zero() const { return t_.empty(); }

    Scalar apply(const Scalar& f) const;
    // Restriction to even functions: s is deleted after moving it right.
    FormalKOp sym() const;
    // G A G^{-1} for G with D(G)/G = logder, G treated as an even spinor.
    FormalKOp conjugate(const Scalar& logder) const;
    std::string str() const;

private:
    Flavor flavor_;
    std::map<Key, Scalar> t_;
};

FormalKOp commutator(const FormalKOp& a, const FormalKOp& b);

// D + (k/x)(1 - s)
FormalKOp dunkl_operator();
Scalar dunkl_apply(const Scalar& p);
// D^2 + (2k/x) D
FormalKOp bessel_L();
// (1/2) D + k/(1 - X^{-2}) (1 - s) - k/2
FormalKOp trig_y();
// (1/2) D - k/(1 - X^{-2}) s
FormalKOp trig_y_tilde();

Report rational_daha_relations_check(int deg = 6);
Report trig_conjugation_check(int deg = 5);
// D0_b = d_b - sum_{a > 0} k (b, a) sigma_a / (e^{z_a} - 1) on W-spinors of
// Laurent monomials of total degree <= deg: commutativity and the degenerate
// AHA relation s_i D0_b - D0_{s_i b} s_i = k (b, a_i).
Report trig_spinor_dunkl_commutativity(const rootsys::RootSystem& R, int deg = 3);

// ---- numeric side ----

cplx gamma(cplx z);
cplx rgamma(cplx z);  // 1/Gamma, zero at the poles

enum class Family { phi, psi, phi_tilde, psi_tilde };
Family parse_family(const std::string& s);

struct SeriesValue {
    cplx f, d1, d2;  // value and first two derivatives in t
    int terms = 0;
};
// phi^{(k)}(t) = sum t^{2m} Gamma(k+1/2) / (m! Gamma(k+m+1/2))
SeriesValue phi_series(cplx k, cplx t);
// (-z^2)^p through the principal logarithm; throws on the cut.
cplx neg_sq_pow(cplx z, cplx p);

// Real case: x > 0 and |x|^{...}; complex case: Im x > 0 and (-x^2)^{...}.
// For psi_tilde the value is the {+,+} component chi(x) chi(lambda) psi^{(-k)}.
cplx bessel_eval(Family fam, cplx k, cplx lambda, cplx x, bool complex_case = false);

struct ResidualReport {
    Report report;
    double max_residual = 0;
};
ResidualReport dunkl_eigen_check(cplx k, cplx lambda);

struct QuadConfig {
    double tol = 1e-10;     // self-consistency under node doubling
    double eps = 0.25;      // contour shift
    int nodes = 20;         // Gauss nodes per panel at the start
    int max_doublings = 5;
    double gauss_cut = 1e-18;
};
struct QuadResult {
    cplx value;
    int nodes = 0;
    double err_est = 0;
};
// int_0^b x^{2 kappa} g(x) dx with g smooth on [0, b].
QuadResult quad_halfline(const std::function<cplx(double)>& g, cplx kappa, double b, const QuadConfig& cfg);
// int over i shift + [-S, S].
QuadResult quad_line(const std::function<cplx(cplx)>& f, double shift, double S, const QuadConfig& cfg);

// Spinor {f1, f2} on x > 0 (real case) or Im x > 0 (complex case), stored in
// the super presentation [[f0, f1]] with f0 = (f1 + f2)/2, f1 = (f1 - f2)/2.
struct RealSpinorFn {
    using Fn = std::function<cplx(cplx)>;
    Fn even, odd;
    bool complex_case = false;

    static RealSpinorFn from_pair(Fn f1, Fn f2, bool complex_case = false);
    // {f(x), f(-x)}
    static RealSpinorFn principal(Fn f, bool complex_case = false);
    cplx first(cplx x) const { return even(x) + odd(x); }
    cplx second(cplx x) const { return even(x) - odd(x); }
    RealSpinorFn swapped() const;  // s{f1, f2} = {f2, f1}
    RealSpinorFn times_x() const;  // x{f1, f2} = {x f1, -x f2}
    friend RealSpinorFn operator*(const RealSpinorFn& a, const RealSpinorFn& b);
};
// Spinor integral: the integral of f0 over (0, extent) with weight x^{2 kappa}
// (real case) or over i eps + [-extent, extent] (complex case).
QuadResult spinor_integrate(const RealSpinorFn& f, double extent, const QuadConfig& cfg, cplx kappa = 0);

enum class MasterKind {
    sym_real,
    sym_complex,
    nonsym_real,
    nonsym_complex,
    tilde_real,
    tilde_complex,
    sym_tilde_real,
    sym_tilde_complex,
    orthogonality
};
MasterKind parse_kind(const std::string& s);
std::string kind_name(MasterKind k);

struct MasterReport {
    cplx lhs, rhs;
    double rel_err = 0;  // absolute when the right side vanishes
    int nodes = 0;
    bool ok = false;
};
MasterReport master_formula_check(MasterKind kind, cplx k, cplx lambda, cplx mu, const QuadConfig& cfg = {});

// 2 int_0^inf phi_lambda(x) x e^{-x^2} dx against e^{lambda^2}.
struct WrongFormula {
    cplx integral, claimed, series;  // series: sum lambda^{2m} Gamma(k+1/2)/Gamma(k+m+1/2)
};
WrongFormula wrong_formula(cplx k, cplx lambda, const QuadConfig& cfg = {});

}  // namespace hecke::bessel
