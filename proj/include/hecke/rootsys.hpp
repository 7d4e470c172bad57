// Root data for A1 and A2, the extended affine Weyl group, lengths,
// inversion sets, Poincare series and Looijenga dimensions.
// Weights are integer vectors in the basis of fundamental weights; for A1
// only the first coordinate is used.  Simply-laced: roots = coroots.
#pragma once

#include "hecke/scalar.hpp"

#include <gmpxx.h>

#include <array>
#include <map>
#include <string>
#include <vector>

namespace hecke::rootsys {

using Vec = std::array<int, 2>;
using Mat = std::array<int, 4>;  // row major, acts on omega coordinates

enum class Type { A1, A2 };
Type parse_type(const std::string& tag);
std::string type_name(Type t);

struct WeylElt {
    Mat m;
    std::vector<int> word;  // reduced word s_{i1} ... s_{ik}
    Vec act(const Vec& v) const { return {m[0] * v[0] + m[1] * v[1], m[2] * v[0] + m[3] * v[1]}; }
    int length() const { return static_cast<int>(word.size()); }
};

class RootSystem {
public:
    static const RootSystem& get(Type t);

    Type type;
    int rank;
    int denom;                        // (x, y) = x^T G y / denom
    std::array<int, 4> gram;          // Gram matrix of the omega basis times denom
    std::vector<Vec> simple;          // alpha_i
    std::vector<Vec> positive;        // R_+
    Vec rho, theta;
    int pi_size;                      // |P / Q|
    int hdual;                        // dual Coxeter number
    std::vector<int> degrees;
    std::vector<WeylElt> weyl;        // identity first, longest last

    // Pairing times denom; integral whenever one argument is a root.
    int pair_scaled(const Vec& x, const Vec& y) const;
    int pair_root(const Vec& root, const Vec& x) const;  // (root, x), an integer
    mpq_class pair(const Vec& x, const Vec& y) const;
    bool is_positive_root(const Vec& a) const;
    Vec reflect(int i, const Vec& v) const;       // finite simple reflection s_i
    int weyl_index(const Mat& m) const;
    Vec omega(int r) const;                       // fundamental weight omega_r
    // All roots (positive then negative).
    std::vector<Vec> roots() const;
};

struct AffineRoot {
    Vec alpha;
    int j;
    bool operator==(const AffineRoot& o) const { return alpha == o.alpha && j == o.j; }
    bool operator<(const AffineRoot& o) const {
        return alpha != o.alpha ? alpha < o.alpha : j < o.j;
    }
};
bool is_positive(const RootSystem& R, const AffineRoot& a);

// w^ = b w: x -> w(x) + b on weights; on affine roots
// [z, zeta] -> [w z, zeta - (b, w z)].
struct AffWeylElt {
    Vec b{0, 0};
    int w = 0;  // index into RootSystem::weyl
    bool operator==(const AffWeylElt& o) const { return b == o.b && w == o.w; }
    bool operator<(const AffWeylElt& o) const { return b != o.b ? b < o.b : w < o.w; }
};

AffWeylElt identity();
AffWeylElt translation(const Vec& b);
// i = 0 gives s_0 = b_theta s_theta.
AffWeylElt simple_reflection(const RootSystem& R, int i);
// pi_r = omega_r u_r^{-1}; r = 0 is the identity.
AffWeylElt pi_element(const RootSystem& R, int r);
// u_r: minimal length element with u_r(omega_r) antidominant.
const WeylElt& u_element(const RootSystem& R, int r);
AffWeylElt compose(const RootSystem& R, const AffWeylElt& x, const AffWeylElt& y);
AffWeylElt inverse(const RootSystem& R, const AffWeylElt& x);
AffineRoot act(const RootSystem& R, const AffWeylElt& x, const AffineRoot& a);
Vec act_weight(const RootSystem& R, const AffWeylElt& x, const Vec& v);

int length(const RootSystem& R, const AffWeylElt& x);
std::vector<AffineRoot> lambda_set(const RootSystem& R, const AffWeylElt& x);
// x = pi_r s_{i1} ... s_{ik} with k = length(x).
struct ReducedWord {
    int pi = 0;
    std::vector<int> word;
};
ReducedWord reduced_word(const RootSystem& R, const AffWeylElt& x);
// Index r with x = pi_r for length-zero x; -1 otherwise.
int pi_index(const RootSystem& R, const AffWeylElt& x);

// Elements with all |(b, alpha)| <= bound.
std::vector<AffWeylElt> elements(const RootSystem& R, int bound);
std::map<int, long> enumerate_by_length(const RootSystem& R, int L);

// |Pi| / (1 - t)^n * prod (1 - t^{d_i}) / (1 - t^{d_i - 1}).
Scalar affine_poincare_rational(const RootSystem& R);
// Power series coefficients in t (or t^{-1} via inv_v) of a rational
// function of t whose denominator has a unit constant term.
std::vector<mpz_class> t_series(const Scalar& s, int order);

// rho^ - w^(rho^) against the sum over Lambda(w^{-1}); affine weights are
// recorded as (finite part, delta coefficient).
bool rho_hat_relation(const RootSystem& R, const AffWeylElt& x);

int looijenga_dim(const RootSystem& R, int l);
// C_l = {b in P_+ : (b, theta) <= l}.
std::vector<Vec> alcove(const RootSystem& R, int l);
// Action of pi_r at level l: b -> l omega_r + u_r^{-1}(b).
Vec pi_action(const RootSystem& R, int r, int l, const Vec& b);
struct CoinvariantReport {
    int dim = 0;          // the Looijenga dimension
    int orbits = 0;       // Pi-orbits on C_l
    bool closed = true;   // Pi maps C_l to itself
};
CoinvariantReport coinvariant_dim(const RootSystem& R, int l);

}  // namespace hecke::rootsys
