#include "doctest.h"
#include "support.hpp"

#include "hecke/rootsys.hpp"

#include <set>

using namespace hecke;
using namespace hecke::rootsys;

namespace {

const RootSystem& A1() { return RootSystem::get(Type::A1); }
const RootSystem& A2() { return RootSystem::get(Type::A2); }

AffWeylElt random_element(const RootSystem& R) {
    AffWeylElt x = identity();
    int steps = testgen::uniform(0, 12);
    for (int k = 0; k < steps; ++k) {
        int i = testgen::uniform(-1, R.rank);
        AffWeylElt g = i < 0 ? pi_element(R, testgen::uniform(1, R.rank)) : simple_reflection(R, i);
        x = compose(R, x, g);
    }
    return x;
}

}  // namespace

TEST_CASE("root data") {
    for (auto* R : {&A1(), &A2()}) {
        CHECK(R->pair(R->theta, R->theta) == 2);
        for (int i = 1; i <= R->rank; ++i)
            for (int j = 1; j <= R->rank; ++j)
                CHECK(R->pair_root(R->simple[static_cast<std::size_t>(j - 1)], R->omega(i)) ==
                      (i == j ? 1 : 0));
    }
    CHECK(A1().pi_size == 2);
    CHECK(A2().pi_size == 3);
    CHECK(A1().pair({1, 0}, {1, 0}) == mpq_class(1, 2));
    CHECK(A2().weyl.size() == 6);
    CHECK(u_element(A2(), 1).word == std::vector<int>{2, 1});
}

TEST_CASE("length examples") {
    CHECK(length(A1(), identity()) == 0);
    CHECK(length(A1(), translation({1, 0})) == 1);
    for (int m = 1; m <= 8; ++m) CHECK(length(A1(), translation({m, 0})) == m);
    for (auto* R : {&A1(), &A2()})
        for (int r = 0; r <= R->rank; ++r) CHECK(length(*R, pi_element(*R, r)) == 0);
    for (int i = 0; i <= 2; ++i) CHECK(length(A2(), simple_reflection(A2(), i)) == 1);
    // l(b) = 2 (rho, b) for dominant b
    for (int b1 = 0; b1 <= 4; ++b1)
        for (int b2 = 0; b2 <= 4; ++b2)
            CHECK(mpq_class(length(A2(), translation({b1, b2}))) ==
                  2 * A2().pair(A2().rho, {b1, b2}));
}

TEST_CASE("inversion sets") {
    CHECK(lambda_set(A1(), identity()).empty());
    auto ls = lambda_set(A1(), simple_reflection(A1(), 1));
    REQUIRE(ls.size() == 1);
    CHECK(ls[0] == AffineRoot{{2, 0}, 0});
    CHECK(lambda_set(A1(), translation({1, 0})).size() == 1);
}

TEST_CASE("enumeration by length") {
    auto c1 = enumerate_by_length(A1(), 20);
    auto s1 = t_series(affine_poincare_rational(A1()), 20);
    CHECK(c1[0] == 2);
    for (int l = 1; l <= 20; ++l) CHECK(c1[l] == 4);
    for (int l = 0; l <= 20; ++l) CHECK(mpz_class(c1[l]) == s1[static_cast<std::size_t>(l)]);
    auto c2 = enumerate_by_length(A2(), 15);
    auto s2 = t_series(affine_poincare_rational(A2()), 15);
    CHECK(c2[0] == 3);
    for (int l = 0; l <= 15; ++l) CHECK(mpz_class(c2[l]) == s2[static_cast<std::size_t>(l)]);
    CHECK_THROWS(enumerate_by_length(A1(), 41));
}

TEST_CASE("affine Poincare rational forms") {
    Scalar one(1), t = Scalar::t(1);
    CHECK(affine_poincare_rational(A1()) == Scalar(2) * (one + t) / (one - t));
    CHECK(affine_poincare_rational(A2()) == Scalar(3) * (one - Scalar::t(3)) / (one - t).pow(3));
    // P^(t^{-1}) = 2 (1 + t^{-1}) / (1 - t^{-1}) and 3 (1 - t^{-3}) / (1 - t^{-1})^3
    Scalar ti = Scalar::t(-1);
    CHECK(affine_poincare_rational(A1()).inv_v() == Scalar(2) * (one + ti) / (one - ti));
    CHECK(affine_poincare_rational(A2()).inv_v() ==
          Scalar(3) * (one - Scalar::t(-3)) / (one - ti).pow(3));
}

TEST_CASE("Looijenga and coinvariant dimensions") {
    CHECK(looijenga_dim(A1(), 1) == 1);
    CHECK(looijenga_dim(A2(), 2) == 2);
    CHECK(looijenga_dim(A2(), 3) == 4);
    CHECK(looijenga_dim(A1(), 4) == 3);
    CHECK_THROWS(looijenga_dim(A1(), 0));
    auto C2 = alcove(A2(), 2);
    std::set<Vec> six(C2.begin(), C2.end());
    CHECK(six == std::set<Vec>{{0, 0}, {1, 0}, {0, 1}, {1, 1}, {2, 0}, {0, 2}});
    for (int l = 1; l <= 12; ++l) {
        for (auto* R : {&A1(), &A2()}) {
            auto rep = coinvariant_dim(*R, l);
            CHECK(rep.closed);
            CHECK(rep.orbits == rep.dim);
        }
        CHECK(looijenga_dim(A1(), l) == 1 + l / 2);
    }
}

TEST_CASE("property: length equals reduced word length and inversion count") {
    for (auto* R : {&A1(), &A2()}) {
        for (int k = 0; k < 200; ++k) {
            AffWeylElt x = random_element(*R);
            int l = length(*R, x);
            CHECK(static_cast<int>(lambda_set(*R, x).size()) == l);
            ReducedWord rw = reduced_word(*R, x);
            CHECK(static_cast<int>(rw.word.size()) == l);
            AffWeylElt y = pi_element(*R, rw.pi);
            for (int i : rw.word) y = compose(*R, y, simple_reflection(*R, i));
            CHECK(y == x);
        }
    }
}

TEST_CASE("property: Lambda(w^{-1}) = -w(Lambda(w))") {
    for (auto* R : {&A1(), &A2()}) {
        for (int k = 0; k < 100; ++k) {
            AffWeylElt x = random_element(*R);
            std::set<AffineRoot> lhs, rhs;
            for (auto& a : lambda_set(*R, inverse(*R, x))) lhs.insert(a);
            for (auto& a : lambda_set(*R, x)) {
                AffineRoot b = act(*R, x, a);
                rhs.insert({{-b.alpha[0], -b.alpha[1]}, -b.j});
            }
            CHECK(lhs == rhs);
        }
    }
}

TEST_CASE("rho-hat relation") {
    for (int m = -6; m <= 6; ++m) {
        CHECK(rho_hat_relation(A1(), translation({m, 0})));
        CHECK(rho_hat_relation(A1(), compose(A1(), translation({m, 0}), simple_reflection(A1(), 1))));
    }
    for (auto& x : elements(A2(), 3)) CHECK(rho_hat_relation(A2(), x));
}
