#include "doctest.h"

#include "hecke/daha1.hpp"
#include "hecke/nilspinor.hpp"
#include "support.hpp"

using namespace hecke;
using namespace hecke::nilspinor;

namespace {

SpinorX sp(const LaurentX& a, const LaurentX& b) { return {a, b}; }
SpinorX H(Hat h, const SpinorX& f) { return apply_hat(h, f); }

void require_ok(const Report& r) {
    for (auto& f : r.failures) MESSAGE(f);
    CHECK(r.ok);
    CHECK(r.checked > 0);
}

}  // namespace

TEST_CASE("hat operator examples") {
    CHECK(H(Hat::Y, sp(1, 1)) == sp(0, 1));
    CHECK(H(Hat::pi, sp(X(1), 0)) == sp(1, 1));
    CHECK(H(Hat::T, sp(1, 1)).is_zero());
    CHECK(H(Hat::X, sp(X(2), X(5))) == sp(X(3), 0));
    CHECK(H(Hat::Xprime, sp(X(2), X(5))) == sp(0, X(6)));
    CHECK(parse_hat("YGauss") == Hat::YGauss);
    CHECK_THROWS(parse_hat("Z"));
}

TEST_CASE("q-Toda operator") {
    LaurentX l1 = LaurentX(2) - X(-2);
    SpinorX one = symmetric(1);
    CHECK(H(Hat::Y, one) + H(Hat::Yprime, one) == sp(l1, l1));
    CHECK(qtoda_apply(one) == sp(l1, l1));
    LaurentX lx = Scalar::qhalf(1) * (X(1) - X(-1)) + Scalar::qhalf(-1) * X(1);
    CHECK(qtoda_apply(symmetric(X(1))) == sp(lx, lx));
    SpinorX f = sp(X(2), 1);
    SpinorX lhs = H(Hat::T, H(Hat::Y, f) + H(Hat::Yprime, f));
    CHECK(lhs == H(Hat::Y, H(Hat::T, f)) + H(Hat::Yprime, H(Hat::T, f)));
    require_ok(qtoda_check(5));
}

TEST_CASE("nil-DAHA relations") { require_ok(nildaha_relations_check(5)); }

TEST_CASE("spinor polynomial representation") {
    CHECK(spin_member(symmetric(1)));
    CHECK(spin_member(sp(X(2), 0)));
    CHECK(spin_member(sp(X(2), X(1))));
    CHECK_FALSE(spin_member(sp(1, 0)));
    CHECK_FALSE(spin_member(sp(X(-1), 0)));
    CHECK(spin_member(H(Hat::YGauss, sp(X(1), 0))));
    require_ok(spin_invariance_check(6));
}

TEST_CASE("spinor scalar and symmetries") {
    SpinorScalar tt = t_tilde_half();
    SpinorX f = sp(X(1), X(-2));
    // s t~ = t~^{-1}-type swap: s(c f) = swapped(c) s(f)
    CHECK(swap_s(tt(f)) == tt.swapped()(swap_s(f)));
    CHECK((tt * tt.swapped()).c1.is_one());
    for (int n = -4; n <= 4; ++n) {
        LaurentX g = X(n) + Scalar::q(1) * X(n + 1);
        SpinorX pg = principal(g);
        // rho-lifts: X^rho = {X, X^{-1}}, Gamma^rho = {Gamma, Gamma^{-1}}, s
        CHECK(sp(pg.f1.shifted(1), pg.f2.shifted(-1)) == principal(g.shifted(1)));
        CHECK(sp(apply_symmetry(pg.f1, Sym::Gamma), apply_symmetry(pg.f2, Sym::GammaInv)) ==
              principal(apply_symmetry(g, Sym::Gamma)));
        CHECK(swap_s(pg) == principal(apply_symmetry(g, Sym::s)));
    }
}

TEST_CASE("super presentation property") {
    for (int i = 0; i < 200; ++i) {
        SpinorX a = sp(testgen::laurent(3, 3), testgen::laurent(3, 3));
        SpinorX b = sp(testgen::laurent(3, 3), testgen::laurent(3, 3));
        CHECK(from_super(to_super(a)) == a);
        CHECK(from_super(super_mul(to_super(a), to_super(b))) == mul(a, b));
    }
}

TEST_CASE("symmetry of (Y + Y') on random symmetric spinors") {
    for (int i = 0; i < 100; ++i) {
        SpinorX f = symmetric(testgen::laurent(5, 4));
        SpinorX g = H(Hat::Y, f) + H(Hat::Yprime, f);
        CHECK(g.f1 == g.f2);
        CHECK(H(Hat::T, g).is_zero());
    }
}

TEST_CASE("t -> 0 limit of ae^delta(Y)") { require_ok(rie_delta_check(4)); }

TEST_CASE("Whittaker function terms") {
    Spinor2 om = whittaker_omega(3);
    Laurent2 m0 = truncate_x(om, 0).f1;
    CHECK(m0 == Laurent2(1));
    CHECK(truncate_x(om, 0).f2 == Laurent2(1));
    Laurent2 m1;
    for (auto& [e, c] : om.f1.terms())
        if (e[0] == 1) m1.add_term(e, c);
    Scalar c = Scalar::mono(1, 1, 0) / (Scalar(1) - Scalar::q(1));
    Laurent2 want = Laurent2::mono({1, 1}, c) + Laurent2::mono({1, -1}, c);
    CHECK(m1 == want);
    CHECK(om == whittaker_omega(3, Presentation::pieri_free));
    Laurent2 w = whittaker_symmetric(4);
    for (int m = 0; m <= 4; ++m) {
        Scalar pm(1);
        for (int s = 1; s <= m; ++s) pm *= Scalar(1) - Scalar::q(s);
        LaurentX pbar = daha1::qhermite_bar(-m);
        for (auto& [e, cc] : pbar.terms())
            CHECK(w.coeff({m, e}) == Scalar::mono(1, m * m, 0) / pm * cc);
    }
    CHECK_THROWS(whittaker_omega(-1));
}

TEST_CASE("Whittaker intertwining") {
    require_ok(whittaker_check(4));
    require_ok(whittaker_check(6));
}
