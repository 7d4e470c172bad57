// Affine Hecke algebra acting on Y-polynomials for A1 and A2.
// A1 polynomials are LaurentX in Y = Y_omega; A2 polynomials are Laurent2
// with exponents in the basis of fundamental coweights.
#pragma once

#include "hecke/laurent.hpp"

#include <string>
#include <vector>

namespace hecke::aha {

// ---- A1 ----
LaurentX lusztig_T(const LaurentX& f);
LaurentX lusztig_Tinv(const LaurentX& f);
LaurentX symmetrize_P(const LaurentX& f);

// ---- A2 ----
// Simple coroots in the omega basis: alpha_1 = (2,-1), alpha_2 = (-1,2).
Exp2 a2_simple(int i);
Exp2 a2_reflect(int i, const Exp2& e);
Laurent2 a2_s(int i, const Laurent2& f);
Laurent2 lusztig_T(int i, const Laurent2& f);
Laurent2 lusztig_Tinv(int i, const Laurent2& f);
Laurent2 symmetrize_P(const Laurent2& f);

struct WeylElt {
    std::vector<int> word;   // reduced word, applied right to left
    int a, b, c, d;          // matrix on omega coordinates (row major)
    Exp2 act(const Exp2& e) const { return {a * e[0] + b * e[1], c * e[0] + d * e[1]}; }
};
const std::vector<WeylElt>& a2_weyl();
Laurent2 a2_T_word(const std::vector<int>& word, const Laurent2& f);

struct MacdonaldReport {
    bool ok = false;
    std::string detail;
};
MacdonaldReport check_operator_macdonald(const LaurentX& f);
MacdonaldReport check_operator_macdonald(const Laurent2& f);
// Right-hand side (sum_w w) M~ f, computed with exact division.
LaurentX macdonald_rhs(const LaurentX& f);
Laurent2 macdonald_rhs(const Laurent2& f);

// ---- Matsumoto and spherical functions (A1) ----
LaurentX matsumoto_eps(int m);
enum class PhiMethod { pieri, closed, symmetrize };
LaurentX spherical_phi(int m, PhiMethod method = PhiMethod::closed);
LaurentX schur_chi(int m);       // valid for m >= -2 (chi_{-1} = 0, chi_{-2} = -1)
LaurentX monomial_M(int m);      // (Y^m + Y^{-m}) / 2
bool eps_pieri_check(int m);     // the four nonsymmetric Pieri rules at m >= 0
bool pi_eps_check(int m);        // pi eps_m = eps_{1-m} with pi = Y T^{-1}

enum class Limit { t0, t1, tinf };
enum class Family { phi_tilde, eps_tilde };
// phi~_m = t^{m/2} phi_m (m >= 0) or eps~_m = t^{|m|/2} eps_m.
LaurentX limit_family(int m, Limit lim, Family fam = Family::phi_tilde);

// Hall-Littlewood type sum with exact division by the discriminant.
Laurent2 hall_littlewood_A2(const Exp2& b);

}  // namespace hecke::aha
