// Acceptance run: one PASS/FAIL line per criterion, nonzero exit on any failure.
#include "hecke/affsym.hpp"
#include "hecke/aha.hpp"
#include "hecke/bessel.hpp"
#include "hecke/daha1.hpp"
#include "hecke/nilspinor.hpp"
#include "hecke/rootsys.hpp"

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <sstream>
#include <string>

using namespace hecke;
using rootsys::RootSystem;
using rootsys::Type;

namespace {

const RootSystem& A1() { return RootSystem::get(Type::A1); }
const RootSystem& A2() { return RootSystem::get(Type::A2); }

Scalar q(int n = 1) { return Scalar::q(n); }
Scalar t(int n = 1) { return Scalar::t(n); }
Scalar th(int n = 1) { return Scalar::thalf(n); }
Scalar om(int qa, int tb) { return Scalar(1) - Scalar::mono(1, 4 * qa, 2 * tb); }  // 1 - q^a t^b
LaurentX Xm(int n) { return LaurentX::mono(n); }

std::string num(double x) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.3g", x);
    return buf;
}

double relerr(cplx a, cplx b) { return std::abs(a - b) / std::max(1e-300, std::abs(b)); }

// ---- criteria ----

Report c1() {
    Report r;
    for (int n = -12; n <= 12; ++n)
        r.expect(daha1::epoly(n) == daha1::epoly(n, daha1::Method::closed), "closed form n=" + std::to_string(n));
    using daha1::epoly;
    r.expect(epoly(-1) == Xm(-1) + (om(0, 1) / om(1, 1)) * Xm(1), "E_{-1} display");
    r.expect(epoly(2) == Xm(2) + LaurentX(q() * om(0, 1) / om(1, 1)), "E_2 display");
    r.expect(epoly(-2) == Xm(-2) + (om(0, 1) / om(2, 1)) * Xm(2) +
                              LaurentX(om(0, 1) * om(2, 0) / (om(2, 1) * om(1, 0))),
             "E_{-2} display");
    LaurentX e3_display = Xm(3) + (q(2) * om(0, 1) / om(2, 1)) * Xm(-1) +
                          (q() * om(0, 1) * om(2, 0) / (om(1, 1) * om(1, 0))) * Xm(1);
    r.expect(epoly(3) == e3_display, "E_3 display (X-coefficient denominator (1-tq)(1-q))");
    return r;
}

Report c2() {
    Report r;
    for (int n = -8; n <= 8; ++n) {
        std::string tag = " n=" + std::to_string(n);
        LaurentX e = daha1::epoly(n);
        r.expect(daha1::apply(daha1::Op::Y, e) == daha1::eigenvalue(n) * e, "Y eigenvalue" + tag);
        r.expect(daha1::eigenvalue(n) == daha1::q_nsharp(n).inv(), "eigenvalue q^{-n#}" + tag);
        r.expect(eval_at(e, th(-1)) == daha1::evaluation(n), "evaluation" + tag);
        r.expect(daha1::pieri_check(n), "Pieri" + tag);
        for (int m = -8; m <= 8; ++m) r.expect(daha1::duality_check(m, n), "duality m=" + std::to_string(m) + tag);
    }
    return r;
}

Report c3() {
    Report r;
    for (int n = 0; n <= 10; ++n) {
        std::string tag = " n=" + std::to_string(n);
        LaurentX p = daha1::rogers(n, daha1::Method::closed);
        r.expect(daha1::rogers(n) == p, "closed form = normalized symmetrization" + tag);
        r.expect(daha1::apply(daha1::Op::L, p) == daha1::rogers_eigenvalue(n) * p, "L eigenvalue" + tag);
    }
    return r;
}

Report c4() {
    Report r;
    for (int m = 0; m <= 6; ++m) r.expect(aha::eps_pieri_check(m), "eps Pieri m=" + std::to_string(m));
    for (int m = -6; m <= 6; ++m) r.expect(aha::pi_eps_check(m), "pi eps_m = eps_{1-m} m=" + std::to_string(m));
    LaurentX y = Xm(1) + Xm(-1);
    r.expect(aha::spherical_phi(1) == (th() + th(-1)).inv() * y, "phi_1 value");
    r.expect(aha::spherical_phi(2) == (Scalar(1) + t()).inv() * y * y - LaurentX(t(-1)), "phi_2 value");
    for (int m = 0; m <= 8; ++m)
        r.expect(aha::spherical_phi(m, aha::PhiMethod::pieri) == aha::spherical_phi(m, aha::PhiMethod::closed),
                 "phi closed = Pieri m=" + std::to_string(m));
    for (int m = -6; m <= 6; ++m) {
        auto mr = aha::check_operator_macdonald(Xm(m));
        r.expect(mr.ok, "operator Macdonald A1 m=" + std::to_string(m) + " " + mr.detail);
    }
    for (int a = -3; a <= 3; ++a)
        for (int b = -3; b <= 3; ++b)
            if (std::abs(a) + std::abs(b) <= 3) {
                auto mr = aha::check_operator_macdonald(Laurent2::mono({a, b}));
                r.expect(mr.ok, "operator Macdonald A2 (" + std::to_string(a) + "," + std::to_string(b) + ")");
            }
    r.expect(aha::macdonald_rhs(Xm(1)) == Xm(1) + Xm(-1), "P+ side at f = Y equals Y + Y^{-1}");
    return r;
}

Report c5() {
    using aha::Family;
    using aha::Limit;
    Report r;
    for (int m = 0; m <= 8; ++m) {
        std::string tag = " m=" + std::to_string(m);
        r.expect(aha::limit_family(m, Limit::tinf) == aha::schur_chi(m), "t->inf gives chi" + tag);
        if (m > 0) r.expect(aha::limit_family(m, Limit::t1) == aha::monomial_M(m), "t->1 gives M" + tag);
        r.expect(aha::limit_family(m, Limit::t0) == -aha::schur_chi(m - 2), "t->0 gives -chi_{m-2}" + tag);
    }
    for (int n = -8; n <= 8; ++n) {
        r.expect(daha1::padic_limit_check(n), "E0/P0 against eps/phi n=" + std::to_string(n));
        r.expect(daha1::tilde_relation_check(n), "tilde/bar relation n=" + std::to_string(n));
    }
    return r;
}

Report c6() {
    using namespace nilspinor;
    Report r = nildaha_relations_check(5);
    r.merge(qtoda_check(5));
    LaurentX w = LaurentX(2) - Xm(-2);
    SpinorX one = symmetric(1);
    r.expect(apply_hat(Hat::Y, one) + apply_hat(Hat::Yprime, one) == SpinorX{w, w}, "witness {1,1}");
    r.expect(qtoda_apply(one) == SpinorX{w, w}, "q-Toda witness {1,1}");
    return r;
}

Report c7() {
    using namespace nilspinor;
    Report r = whittaker_check(6);
    r.expect(whittaker_omega(6, Presentation::pieri) == whittaker_omega(6, Presentation::pieri_free),
             "both presentations agree through degree 6");
    Laurent2 w = whittaker_symmetric(6);
    for (int m = 0; m <= 6; ++m) {
        Scalar pm(1);
        for (int s = 1; s <= m; ++s) pm *= Scalar(1) - q(s);
        LaurentX pbar = daha1::qhermite_bar(-m);
        for (auto& [e, c] : pbar.terms())
            r.expect(w.coeff({m, e}) == Scalar::mono(1, m * m, 0) / pm * c,
                     "symmetrization coefficient m=" + std::to_string(m));
    }
    return r;
}

Report c8() {
    Report r;
    for (int M = 1; M <= 8; ++M)
        r.expect(affsym::trunc_Phat(M).equals(affsym::sigma_hat(M)), "P'_M = Sigma^+_M M=" + std::to_string(M));
    auto counts = rootsys::enumerate_by_length(A1(), 20);
    LaurentX r8 = affsym::apply_expr(affsym::sigma_hat(8), LaurentX(1));
    r.expect(r8.size() == 1, "P'_+(1) is a constant");
    auto ser = rootsys::t_series(r8.coeff(0).inv_v(), 4);
    const long want[4] = {2, 4, 4, 4};
    for (int k = 0; k < 4; ++k) r.expect(ser[k] == want[k], "P'_+(1) t^{-" + std::to_string(k) + "} coefficient");
    auto s1 = rootsys::t_series(rootsys::affine_poincare_rational(A1()), 20);
    for (int l = 0; l <= 20; ++l) r.expect(mpz_class(counts[l]) == s1[l], "A1 length " + std::to_string(l));
    Scalar one(1), ti = t(-1);
    r.expect(rootsys::affine_poincare_rational(A2()).inv_v() == Scalar(3) * (one - t(-3)) / (one - ti).pow(3),
             "A2 P'_+(1) rational form");
    auto c2 = rootsys::enumerate_by_length(A2(), 15);
    auto s2 = rootsys::t_series(rootsys::affine_poincare_rational(A2()), 15);
    for (int l = 0; l <= 15; ++l) r.expect(mpz_class(c2[l]) == s2[l], "A2 length " + std::to_string(l));
    return r;
}

Report c9() {
    using namespace affsym;
    Report r;
    JacksonConfig cfg;
    cfg.q0 = 0.3;
    cfg.t0 = 2.0;
    cfg.cutoff = 40;
    cfg.tol = 1e-9;
    auto j0 = jackson_sum(A1(), Laurent2(1), cfg, 0);
    cplx pc = poincare_numeric(A1(), 1.0 / cfg.t0) / ct_numeric(A1(), cfg.q0, 1.0 / cfg.t0).value;
    double e0 = relerr(j0.value, pc);
    r.expect(e0 < 1e-8, "level-0 pseudo-constant rel err " + num(e0));
    JacksonConfig neg = cfg;
    neg.t0 = 8.0;  // k = log t / log q sufficiently negative
    for (int a : {-2, -1, 1, 2}) {
        double v = std::abs(jackson_sum(A1(), to_weight_poly(daha1::epoly(a)), neg, 0).value);
        r.expect(v < cfg.tol, "level-0 E_" + std::to_string(a) + " vanishes: " + num(v));
    }
    for (int a : {0, -1}) {
        cplx j = jackson_sum(A1(), to_weight_poly(daha1::epoly(a)), cfg, 1).value;
        double e = relerr(j, level_one_closed(a, cfg));
        r.expect(e < 1e-7, "level-1 a=" + std::to_string(a) + " rel err " + num(e));
    }
    JacksonConfig ch = cfg;
    ch.t0 = std::sqrt(cfg.q0);
    for (int a : {0, -1, 1}) {
        double v = std::abs(jackson_sum(A1(), to_weight_poly(daha1::epoly(a)), ch, 1).value);
        r.expect(v < 1e-7, "t=q^{1/2} J-side a=" + std::to_string(a) + ": " + num(v));
    }
    JacksonConfig cq = cfg;
    cq.t0 = cfg.q0;
    CtValue ct = ct_numeric(A1(), cq.q0, 1.0 / cq.t0);
    double v = std::abs(ct.value * jackson_sum(A1(), Laurent2(1), cq, 1).value);
    r.expect(ct.zero_order >= 1 && v < 1e-7, "t=q P-side: " + num(v));
    return r;
}

Report c10() {
    using namespace affsym;
    Report r;
    Scalar u1 = Scalar::mono(1, 1, 0), u5 = Scalar::mono(1, 5, 0);
    r.expect(km_numerator(1, 2) == LaurentX(1) - Xm(2) + u1 * (Xm(-1) - Xm(3)) + u5 * (Xm(5) - Xm(-3)),
             "level-1 display");
    r.expect(km_numerator(0, 2) == Scalar(2) * (LaurentX(1) - Xm(2) + q() * Xm(4) - q() * Xm(-2)),
             "level-0 display");
    const int N = 5;  // through q^4
    LaurentX euler(1);
    for (int j = 1; j < N; ++j) {
        LaurentX g;
        for (int k = 0; j * k < N; ++k) g.add_term(0, q(j * k));
        euler = truncate_q(euler * g, N);
    }
    r.expect(truncate_q(Scalar::rational(1, 2) * km_numerator(0, N) * euler, N) == affine_denominator(N),
             "denominator identity through q^4");
    r.expect(truncate_q(theta_A1(N) * affine_denominator(N), N) == km_numerator(1, N),
             "level-one identity through q^4");
    return r;
}

Report c11() {
    using namespace affsym;
    Report r;
    JacksonConfig cfg;
    cfg.q0 = 0.3;
    cfg.t0 = 2.0;
    int count = 0;
    double worst = 0;
    for (auto& w : rootsys::elements(A1(), 4)) {
        if (rootsys::length(A1(), w) > 4) continue;
        ++count;
        auto p = coefficient_probe(ProbeOp::PhatTrunc, 30, w, cfg);
        double d = std::abs(p.ratio - 1.0);
        worst = std::max(worst, d);
        r.expect(d <= 1e-6, "probe ratio off by " + num(d));
    }
    r.expect(count > 0, "elements of length <= 4 enumerated");
    r.expect(true, "worst deviation " + num(worst) + " over " + std::to_string(count) + " elements");
    return r;
}

Report c12() {
    Report r;
    for (int l = 1; l <= 12; ++l) {
        std::string tag = " l=" + std::to_string(l);
        r.expect(rootsys::looijenga_dim(A1(), l) == 1 + l / 2, "A1 dim" + tag);
        for (auto* R : {&A1(), &A2()}) {
            auto c = rootsys::coinvariant_dim(*R, l);
            r.expect(c.closed && c.orbits == c.dim, rootsys::type_name(R->type) + " orbit count" + tag);
        }
    }
    return r;
}

Report c13() {
    using namespace bessel;
    Report r;
    QuadConfig cfg;
    auto euler = master_formula_check(MasterKind::sym_real, 0.3, 0.0, 0.0, cfg);
    double ee = relerr(euler.lhs, bessel::gamma(0.8));
    r.expect(ee < 1e-8, "Euler normalization rel err " + num(ee));
    auto s = master_formula_check(MasterKind::sym_real, 0.3, 0.5, 0.7, cfg);
    r.expect(s.rel_err < 1e-8, "symmetric real rel err " + num(s.rel_err));
    auto ns = master_formula_check(MasterKind::nonsym_real, 0.3, 0.5, 0.7, cfg);
    r.expect(ns.rel_err < 1e-8, "nonsymmetric real rel err " + num(ns.rel_err));
    for (double k : {0.5, 1.5}) {
        double v = std::abs(master_formula_check(MasterKind::sym_complex, k, 0.5, 0.7, cfg).lhs);
        r.expect(v < 1e-10, "complex symmetric vanishing at k=" + num(k) + ": " + num(v));
    }
    auto tr = master_formula_check(MasterKind::tilde_real, 0.2, 0.5, 0.7, cfg);
    r.expect(tr.rel_err < 1e-7, "tilde real rel err " + num(tr.rel_err));
    auto tc = master_formula_check(MasterKind::tilde_complex, 0.2, 0.5, 0.7, cfg);
    r.expect(tc.rel_err < 1e-7, "tilde complex rel err " + num(tc.rel_err));
    auto o = master_formula_check(MasterKind::orthogonality, 0.2, 0.5, 0.7, cfg);
    r.expect(o.rel_err < 1e-10, "psi-psi~ orthogonality " + num(o.rel_err));
    auto w = wrong_formula(0.3, 0.5, cfg);
    double gap = std::abs(w.integral - w.claimed);
    r.expect(gap > 0.01, "wrong formula rejected, gap " + num(gap));
    return r;
}

Report c14() {
    using namespace bessel;
    Report r = rational_daha_relations_check(6);
    r.merge(trig_conjugation_check(5));
    r.merge(trig_spinor_dunkl_commutativity(A2(), 3));
    return r;
}

struct Criterion {
    int id;
    const char* name;
    double limit_s;  // 0: no runtime bound
    std::function<Report()> run;
};

}  // namespace

int main() {
    const Criterion all[] = {
        {1, "closed-form E-polynomials", 10, c1},
        {2, "eigenvalues, evaluation, duality, Pieri", 30, c2},
        {3, "Rogers polynomials", 0, c3},
        {4, "p-adic layer and operator Macdonald formula", 0, c4},
        {5, "limits diagram, p-adic and tilde limits", 0, c5},
        {6, "nil-DAHA spinor relations and q-Toda", 0, c6},
        {7, "spinor Whittaker function", 60, c7},
        {8, "affine symmetrizers and Poincare series", 0, c8},
        {9, "Jackson and Hall numerics", 120, c9},
        {10, "Kac-Moody numerators and denominator identities", 0, c10},
        {11, "coefficient proportionality probes", 0, c11},
        {12, "Looijenga dimensions and coinvariants", 0, c12},
        {13, "Bessel master formulas", 60, c13},
        {14, "differential operator identities", 0, c14},
    };
    std::setvbuf(stdout, nullptr, _IOLBF, 0);
    int failed = 0;
    for (const auto& c : all) {
        auto t0 = std::chrono::steady_clock::now();
        Report r;
        std::string error;
        try {
            r = c.run();
        } catch (const std::exception& e) {
            r.expect(false, std::string("exception: ") + e.what());
        }
        double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        bool in_time = c.limit_s == 0 || secs < c.limit_s;
        bool ok = r.ok && in_time;
        if (!ok) ++failed;
        std::ostringstream line;
        line << (ok ? "PASS" : "FAIL") << "  " << c.id << ". " << c.name << "  (" << r.checked << " checks, "
             << num(secs) << " s";
        if (c.limit_s > 0) line << " / limit " << c.limit_s << " s";
        line << ")";
        std::printf("%s\n", line.str().c_str());
        for (const auto& f : r.failures) std::printf("      - %s\n", f.c_str());
        if (!in_time) std::printf("      - runtime limit exceeded\n");
    }
    std::printf("%d of 14 criteria passed\n", 14 - failed);
    return failed == 0 ? 0 : 1;
}
