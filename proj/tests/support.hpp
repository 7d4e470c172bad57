// Shared generators for property tests.
#pragma once

#include "hecke/laurent.hpp"

#include <random>

namespace testgen {

inline std::mt19937_64& rng() {
    static std::mt19937_64 g(20261015);
    return g;
}

inline int uniform(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng()); }
inline double uniform_real(double lo, double hi) { return std::uniform_real_distribution<double>(lo, hi)(rng()); }

inline hecke::Poly2 poly(int terms = 3, int deg = 3, int coef = 5) {
    hecke::Poly2 p;
    for (int i = 0; i < terms; ++i)
        p += hecke::Poly2::monomial(uniform(-coef, coef), uniform(0, deg), uniform(0, deg));
    return p;
}

inline hecke::Scalar scalar(bool nonzero = false) {
    for (;;) {
        hecke::Poly2 n = poly(), d = poly();
        if (d.is_zero()) continue;
        if (nonzero && n.is_zero()) continue;
        return hecke::Scalar(n, d) * hecke::Scalar::mono(1, uniform(-2, 2), uniform(-2, 2));
    }
}

inline hecke::LaurentX laurent(int deg = 4, int terms = 4) {
    hecke::LaurentX f;
    for (int i = 0; i < terms; ++i) f.add_term(uniform(-deg, deg), scalar());
    return f;
}

}  // namespace testgen
