#include "doctest.h"

#include "hecke/affsym.hpp"
#include "hecke/daha1.hpp"
#include "support.hpp"

#include <cmath>

using namespace hecke;
using namespace hecke::affsym;
using rootsys::RootSystem;
using rootsys::Type;

namespace {

Scalar th(int n = 1) { return Scalar::thalf(n); }
AhaOpExpr poly(const LaurentX& f) { return {f, LaurentX(), LaurentX(1)}; }
const RootSystem& A1() { return RootSystem::get(Type::A1); }
const RootSystem& A2() { return RootSystem::get(Type::A2); }

LaurentX small_poly(int deg, int terms) {
    LaurentX f;
    for (int i = 0; i < terms; ++i) f.add_term(testgen::uniform(-deg, deg), Scalar(testgen::uniform(-3, 3)));
    return f;
}

// 1 / prod_{j >= 1} (1 - q^j)^n mod q^N as a constant Laurent polynomial.
LaurentX inv_euler(int n, int N) {
    LaurentX s(1);
    for (int j = 1; j < N; ++j)
        for (int r = 0; r < n; ++r) {
            LaurentX g;
            for (int k = 0; j * k < N; ++k) g.add_term(0, Scalar::q(j * k));
            s = truncate_q(s * g, N);
        }
    return s;
}

}  // namespace

TEST_CASE("normal form rewriting") {
    AhaOpExpr T = AhaOpExpr::T(), Y = AhaOpExpr::Y(1), Yi = AhaOpExpr::Y(-1);
    // T Y^{-1} T = Y
    CHECK((T * Yi * T).equals(Y));
    // quadratic relation
    CHECK(((T - th(1) * AhaOpExpr::scalar(1)) * (T + th(-1) * AhaOpExpr::scalar(1))).is_zero());
    CHECK((T * AhaOpExpr::Tinv()).equals(AhaOpExpr::scalar(1)));
    CHECK_THROWS(AhaOpExpr::rational(X(1), X(1)));
    CHECK_THROWS(trunc_Phat(0));
}

TEST_CASE("normal form acts as operator composition") {
    for (int i = 0; i < 25; ++i) {
        AhaOpExpr A{small_poly(2, 2), small_poly(2, 2), LaurentX(1)};
        AhaOpExpr B{small_poly(2, 2), small_poly(2, 2), LaurentX(1)};
        LaurentX g = small_poly(2, 3);
        CHECK(apply_expr(A * B, g) == apply_expr(A, apply_expr(B, g)));
    }
}

TEST_CASE("truncated symmetrizers") {
    AhaOpExpr one = AhaOpExpr::scalar(1);
    AhaOpExpr m1 = one_plus() + th(-1) * (poly(X(1) + X(-1)) * one_plus());
    CHECK(trunc_Phat(1).equals(m1));
    LaurentX s2 = LaurentX(Scalar::t(-1)) + th(-1) * (X(1) + X(-1)) + Scalar::t(-1) * (X(2) + X(-2));
    CHECK(sigma_hat(2).equals(poly(s2) * one_plus()));
    for (int M = 1; M <= 8; ++M) CHECK(trunc_Phat(M).equals(sigma_hat(M)));
    // the rational symmetrizer vanishes in the localization
    CHECK(((one + th(1) * AhaOpExpr::T()) * U_plus() + one_plus()).is_zero());
}

TEST_CASE("symmetrizers on 1") {
    Scalar phat = Scalar(2) * (Scalar(1) + Scalar::t(-1)) / (Scalar(1) - Scalar::t(-1));
    CHECK(phat_rational_apply(LaurentX(1)) == LaurentX(phat));
    CHECK(phat == rootsys::affine_poincare_rational(A1()).inv_v());
    for (int M = 1; M <= 6; ++M) CHECK(apply_expr(sigma_bar(M), LaurentX(1)) == LaurentX(phat));
    // t^{-1} expansion of Sigma^+_M(1) against length counts 2, 4, 4, ...
    auto counts = rootsys::enumerate_by_length(A1(), 10);
    for (int M : {4, 6, 8}) {
        LaurentX r = apply_expr(sigma_hat(M), LaurentX(1));
        REQUIRE(r.size() == 1);
        auto ser = rootsys::t_series(r.coeff(0).inv_v(), M / 2);
        for (int k = 0; k < M / 2; ++k) CHECK(ser[k] == counts[k]);
    }
}

TEST_CASE("rational symmetrizer against the Sigma limit") {
    // numeric: Sigma^+_M acts on E_n by Sigma_M(lambda_n); compare for large M
    cplx q0 = 0.3, t0 = 8.0, X0(0.7, 0.2);
    cplx u0 = std::pow(q0, 0.25), v0 = std::sqrt(t0);
    int M = 60;
    for (int n = -2; n <= 2; ++n) {
        LaurentX f = daha1::epoly(n) + X(1);
        LaurentX g = f + th(-1) * daha1::apply(daha1::Op::Tinv, f);
        cplx lim = 0;
        for (auto& [k, c] : e_expand(g)) {
            cplx y = daha1::eigenvalue(k).eval(u0, v0);
            cplx s = std::pow(t0, -double(M / 2));
            for (int j = 1; j <= M; ++j)
                s += std::pow(v0, -double(2 * ((M - j) / 2) + j)) * (std::pow(y, j) + std::pow(y, -j));
            lim += c.eval(u0, v0) * s * eval_num(daha1::epoly(k), q0, t0, X0);
        }
        cplx exact = eval_num(phat_rational_apply(f), q0, t0, X0);
        CHECK(std::abs(lim - exact) < 1e-9 * std::max(1.0, std::abs(exact)));
    }
    CHECK(phat_rational_apply(daha1::epoly(1)).is_zero());
}

TEST_CASE("level-zero diamond form") {
    CHECK(diamond_form(1, 1) == Scalar(1));
    LaurentX T1 = daha1::apply(daha1::Op::T, LaurentX(1));
    CHECK(T1 == LaurentX(th(1)));
    LaurentX f2 = X(2);
    CHECK(diamond_form(daha1::apply(daha1::Op::T, f2), 1) == th(1) * diamond_form(f2, 1));
    CHECK(diamond_form(daha1::apply(daha1::Op::T, X(1)), 1) == diamond_form(X(1), T1));
    for (int i = 0; i < 6; ++i) {
        LaurentX f = small_poly(2, 2), g = small_poly(2, 2);
        CHECK(diamond_form(f, g) == diamond_form(g, f));
        CHECK(diamond_form(daha1::apply(daha1::Op::T, f), g) == diamond_form(f, daha1::apply(daha1::Op::T, g)));
        CHECK(diamond_form(daha1::apply(daha1::Op::Y, f), g) == diamond_form(f, daha1::apply(daha1::Op::Y, g)));
    }
}

TEST_CASE("constant term series") {
    auto s = ct_series(3, A1(), false);
    CHECK(s[0] == Scalar(1));
    CHECK(s[1] == (Scalar(1) - Scalar::t(1)) * (Scalar(1) - Scalar::t(1)));
    std::vector<long> p1{1, 1, 2, 3, 5, 7, 11}, p2{1, 2, 5, 10, 20, 36, 65};
    auto i1 = ct_series(6, A1(), true), i2 = ct_series(6, A2(), true);
    for (int k = 0; k <= 6; ++k) {
        CHECK(i1[k].limit_vinf() == Scalar(p1[k]));
        CHECK(i2[k].limit_vinf() == Scalar(p2[k]));
    }
    // numeric product agrees with the series at small q
    cplx q0 = 0.01, t0 = 3.0;
    cplx ser = 0;
    for (int k = 0; k <= 6; ++k) ser += i2[k].eval(1.0, std::sqrt(t0)) * std::pow(q0, k);
    CHECK(std::abs(ct_numeric(A2(), q0, 1.0 / t0).value - ser) < 1e-10);
}

TEST_CASE("Kac-Moody numerators") {
    Scalar u1 = Scalar::mono(1, 1, 0), u5 = Scalar::mono(1, 5, 0), q = Scalar::q(1);
    LaurentX l1 = LaurentX(1) - X(2) + u1 * (X(-1) - X(3)) + u5 * (X(5) - X(-3));
    CHECK(km_numerator(1, 2) == l1);
    LaurentX l0 = Scalar(2) * (LaurentX(1) - X(2) + q * X(4) - q * X(-2));
    CHECK(km_numerator(0, 2) == l0);
    for (int N : {2, 4, 6}) {
        LaurentX lhs = truncate_q(Scalar::rational(1, 2) * km_numerator(0, N) * inv_euler(1, N), N);
        CHECK(lhs == affine_denominator(N));
        CHECK(truncate_q(theta_A1(N) * affine_denominator(N), N) == km_numerator(1, N));
    }
}

TEST_CASE("defect coefficients lie in the q-adic ideals") {
    for (int M = 2; M <= 6; ++M)
        for (bool useT : {false, true})
            for (auto& r : siminv_valuations(M, useT)) {
                INFO("M=" << M << " T=" << useT << " point (" << r.eps << "," << r.m << ")");
                CHECK(r.ord >= 2 * (M - std::abs(r.m)));
            }
}

TEST_CASE("Jackson sums at level zero") {
    JacksonConfig cfg;
    auto r = jackson_sum(A1(), Laurent2(1), cfg, 0);
    cplx expect = poincare_numeric(A1(), 1.0 / cfg.t0) / ct_numeric(A1(), cfg.q0, 1.0 / cfg.t0).value;
    CHECK(std::abs(poincare_numeric(A1(), 0.5) - 6.0) < 1e-12);
    CHECK(std::abs(r.value - expect) < 1e-8);
    CHECK(r.tail_estimate < cfg.tol * std::abs(r.value));
    JacksonConfig c8 = cfg;
    c8.t0 = 8.0;
    for (int n : {-2, -1, 1, 2}) {
        auto z = jackson_sum(A1(), to_weight_poly(daha1::epoly(n)), c8, 0);
        CHECK(std::abs(z.value) < 1e-9);
    }
    // A2 pseudo-constant
    JacksonConfig c2 = cfg;
    c2.t0 = 3.0;
    c2.xi = {cplx(0.11, 0.07), cplx(0.23, -0.05)};
    auto r2 = jackson_sum(A2(), Laurent2(1), c2, 0);
    cplx e2 = poincare_numeric(A2(), 1.0 / c2.t0) / ct_numeric(A2(), c2.q0, 1.0 / c2.t0).value;
    CHECK(std::abs(r2.value - e2) < 1e-8);
    // divergence for Re k > 0
    JacksonConfig bad = cfg;
    bad.t0 = 0.5;
    CHECK_THROWS_WITH(jackson_sum(A1(), Laurent2(1), bad, 0), "not converged; increase M or adjust k");
    bad = cfg;
    bad.q0 = 1.5;
    CHECK_THROWS(jackson_sum(A1(), Laurent2(1), bad, 0));
}

TEST_CASE("Jackson sums at level one") {
    JacksonConfig cfg;
    for (int n = -3; n <= 3; ++n) {
        auto r = jackson_sum(A1(), to_weight_poly(daha1::epoly(n)), cfg, 1);
        cplx c = level_one_closed(n, cfg);
        CHECK(std::abs(r.value - c) < 1e-9 * std::max(1.0, std::abs(c)));
    }
    for (int n = -3; n <= 3; ++n) {
        LaurentX f = X(n);
        LaurentX g = daha1::apply(daha1::Op::T, f) - th(1) * f;
        CHECK(std::abs(jackson_sum(A1(), to_weight_poly(g), cfg, 1).value) < 1e-10);
    }
    // t = q: ct(t^{-1}) has a simple zero, the integral stays finite
    JacksonConfig cq = cfg;
    cq.t0 = cfg.q0;
    CtValue ct = ct_numeric(A1(), cq.q0, 1.0 / cq.t0);
    CHECK(ct.zero_order == 1);
    cplx J = jackson_sum(A1(), Laurent2(1), cq, 1).value;
    CHECK(std::abs(J) > 1e-3);
    CHECK(std::abs(ct.value * J) < 1e-12);
    // t = q^{1/2}: the integral itself vanishes
    JacksonConfig ch = cfg;
    ch.t0 = std::sqrt(cfg.q0);
    for (int n = -1; n <= 1; ++n)
        CHECK(std::abs(jackson_sum(A1(), to_weight_poly(daha1::epoly(n)), ch, 1).value) < 1e-10);
}

TEST_CASE("coefficient probes") {
    JacksonConfig cfg;
    const RootSystem& R = A1();
    for (auto w : {rootsys::identity(), rootsys::simple_reflection(R, 1), rootsys::translation({2, 0}),
                   rootsys::pi_element(R, 1)}) {
        auto p = coefficient_probe(ProbeOp::PhatTrunc, 30, w, cfg);
        CHECK(std::abs(p.ratio - 1.0) < 1e-6);
        auto s = coefficient_probe(ProbeOp::SJmu, 0, w, cfg);
        CHECK(std::abs(s.ratio - 1.0) < 1e-12);
    }
    auto id = coefficient_probe(ProbeOp::PhatTrunc, 10, rootsys::identity(), cfg);
    auto id30 = coefficient_probe(ProbeOp::PhatTrunc, 30, rootsys::identity(), cfg);
    CHECK(std::abs(id30.ratio - 1.0) < std::abs(id.ratio - 1.0));
}
