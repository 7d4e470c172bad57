#include "doctest.h"

#include "hecke/aha.hpp"
#include "hecke/daha1.hpp"

using namespace hecke;
using namespace hecke::daha1;

namespace {

Scalar q(int n = 1) { return Scalar::q(n); }
Scalar t(int n = 1) { return Scalar::t(n); }
Scalar th(int n = 1) { return Scalar::thalf(n); }
Scalar om(int qa, int tb) { return Scalar(1) - Scalar::mono(1, 4 * qa, 2 * tb); }  // 1 - q^a t^b

LaurentX A(Op o, const LaurentX& f) { return apply(o, f); }

}  // namespace

TEST_CASE("operator examples") {
    CHECK(A(Op::T, X(1)) == th(-1) * X(-1));
    CHECK(A(Op::Y, LaurentX(1)) == LaurentX(th()));
    CHECK(A(Op::s, X(3)) == X(-3));
    CHECK_THROWS(parse_op("Z"));
}

TEST_CASE("DAHA relations on monomials") {
    for (int m = -6; m <= 6; ++m) {
        LaurentX f = X(m);
        CHECK(A(Op::T, A(Op::X, A(Op::T, f))) == A(Op::Xinv, f));
        CHECK(A(Op::Tinv, A(Op::Y, A(Op::Tinv, f))) == A(Op::Yinv, f));
        LaurentX g = A(Op::T, A(Op::T, f));
        g = A(Op::Yinv, A(Op::Xinv, A(Op::Y, A(Op::X, g))));
        CHECK(Scalar::qhalf(1) * g == f);
        LaurentX h = A(Op::T, f) + th(-1) * f;
        CHECK((A(Op::T, h) - th() * h).is_zero());
        CHECK(A(Op::Y, A(Op::Yinv, f)) == f);
        CHECK(A(Op::pi, A(Op::pi, f)) == f);
    }
}

TEST_CASE("sigma images of the relations") {
    // sigma(X) = Y^{-1}, sigma(T) = T, sigma(Y) = X T^2, sigma(pi) = X T.
    for (int m = -6; m <= 6; ++m) {
        LaurentX f = X(m);
        auto XT = [](const LaurentX& g) { return A(Op::X, A(Op::T, g)); };
        CHECK(XT(XT(f)) == f);
        LaurentX lhs = A(Op::Yinv, A(Op::X, A(Op::Y, f)));
        LaurentX rhs = Scalar::qhalf(1) * A(Op::X, A(Op::T, A(Op::T, f)));
        CHECK(lhs == rhs);
        CHECK(A(Op::T, A(Op::Yinv, A(Op::T, f))) == A(Op::Y, f));
    }
}

TEST_CASE("E-polynomial examples") {
    CHECK(epoly(-1) == X(-1) + (om(0, 1) / om(1, 1)) * X(1));
    CHECK(epoly(2) == X(2) + LaurentX(q() * om(0, 1) / om(1, 1)));
    CHECK(epoly(-2) == X(-2) + (om(0, 1) / om(2, 1)) * X(2) +
                           LaurentX(om(0, 1) * om(2, 0) / (om(2, 1) * om(1, 0))));
    LaurentX e3 = X(3) + (q(2) * om(0, 1) / om(2, 1)) * X(-1) +
                  (q() * om(0, 1) * om(2, 0) / (om(2, 1) * om(1, 0))) * X(1);
    CHECK(epoly(3) == e3);
    // The printed variant with (1 - tq) in the X-coefficient is not a Y-eigenvector.
    LaurentX printed = X(3) + (q(2) * om(0, 1) / om(2, 1)) * X(-1) +
                       (q() * om(0, 1) * om(2, 0) / (om(1, 1) * om(1, 0))) * X(1);
    CHECK(A(Op::Y, printed) != eigenvalue(3) * printed);
}

TEST_CASE("intertwiners agree with closed forms") {
    for (int n = -12; n <= 12; ++n) CHECK(epoly(n) == epoly(n, Method::closed));
}

TEST_CASE("Y-eigenvalues") {
    for (int n = -12; n <= 12; ++n) {
        LaurentX e = epoly(n);
        CHECK(e.coeff(n).is_one());
        CHECK(A(Op::Y, e) == eigenvalue(n) * e);
        CHECK(q_2nsharp(n) == q_nsharp(n) * q_nsharp(n));
        CHECK(eigenvalue(n) == q_nsharp(n).inv());
    }
}

TEST_CASE("evaluation formula") {
    CHECK(evaluation(0).is_one());
    CHECK(evaluation(-1) == th(-1) * om(1, 2) / om(1, 1));
    CHECK(evaluation(2) == t(-1) * om(1, 2) / om(1, 1));
    for (int n = -8; n <= 8; ++n) CHECK(eval_at(epoly(n), th(-1)) == evaluation(n));
}

TEST_CASE("duality") {
    for (int m = -8; m <= 8; ++m)
        for (int n = -8; n <= 8; ++n) CHECK_MESSAGE(duality_check(m, n), m << "," << n);
}

TEST_CASE("Pieri rules") {
    for (int n = -8; n <= 8; ++n) CHECK_MESSAGE(pieri_check(n), n);
}

TEST_CASE("Rogers polynomials") {
    CHECK(rogers(0) == LaurentX(1));
    CHECK(rogers(1, Method::closed) == X(1) + X(-1));
    CHECK(rogers(2, Method::closed) ==
          X(2) + X(-2) + LaurentX(om(2, 0) * om(0, 1) / (om(1, 0) * om(1, 1))));
    for (int n = 0; n <= 10; ++n) {
        LaurentX p = rogers(n, Method::closed);
        CHECK(rogers(n) == p);
        CHECK(A(Op::s, p) == p);
        CHECK(A(Op::L, p) == rogers_eigenvalue(n) * p);
    }
}

TEST_CASE("bar family") {
    CHECK(qhermite_bar(0) == LaurentX(1));
    CHECK(qhermite_bar(1) == X(1));
    CHECK(qhermite_bar(-1) == X(-1) + X(1));
    for (int n = -8; n <= 8; ++n) CHECK(qhermite_bar(n) == qhermite_bar(n, BarMethod::limit));
    for (int n = 0; n <= 6; ++n) {
        LaurentX em = qhermite_bar(-n);
        CHECK(A(Op::s, em) == em);
        CHECK(em == limit_t0(rogers(n, Method::closed)));
        CHECK(X(1) * em == (Scalar(1) - q(n)) * qhermite_bar(1 - n) + qhermite_bar(n + 1));
        CHECK(X(-1) * em == qhermite_bar(-n - 1) - qhermite_bar(n + 1));
        if (n >= 1) {
            CHECK(X(1) * qhermite_bar(n) == qhermite_bar(n + 1) - q(n) * qhermite_bar(1 - n));
            CHECK(X(-1) * qhermite_bar(n) ==
                  (Scalar(1) - q(n - 1)) * qhermite_bar(n - 1) + q(n - 1) * qhermite_bar(1 - n));
        }
        CHECK(Lbar(em) == Scalar::qhalf(-n) * em);
        // (T + 1) Pi = (X^2 Gamma^{-1} - X^{-2} Gamma) / (X - X^{-1})
        LaurentX lhs = Tbar_prime(apply_symmetry(em, Sym::pi).shifted(1));
        LaurentX num = apply_symmetry(em, Sym::GammaInv).shifted(2) -
                       apply_symmetry(em, Sym::Gamma).shifted(-2);
        CHECK(lhs == num.shifted(-1).div_one_minus(2));
    }
    for (int n = -6; n <= 6; ++n) {
        LaurentX e = qhermite_bar(n);
        int an = n < 0 ? -n : n;
        if (n > 0) {
            CHECK(Ybar(e) == Scalar::qhalf(-an) * e);
            CHECK(Ybar_prime(e).is_zero());
        } else {
            CHECK(Ybar(e).is_zero());
            CHECK(Ybar_prime(e) == Scalar::qhalf(-an) * e);
        }
        CHECK(Ybar(Ybar_prime(X(n))).is_zero());
        CHECK(Ybar_prime(Ybar(X(n))).is_zero());
    }
}

TEST_CASE("tilde relation") {
    CHECK(etilde(0) == LaurentX(1));
    for (int n = 0; n <= 8; ++n) CHECK_MESSAGE(tilde_relation_check(n), n);
}

TEST_CASE("p-adic limit") {
    CHECK(e0_limit(1) == LaurentX::mono(1, th()));
    for (int n = -8; n <= 8; ++n) CHECK_MESSAGE(padic_limit_check(n), n);
}
