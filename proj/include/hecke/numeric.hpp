// Numeric specialization of exact objects at complex (q0, t0[, x0]).
#pragma once

#include "hecke/laurent.hpp"

#include <complex>
#include <optional>

namespace hecke {

using cplx = std::complex<double>;

struct NumericScalar {
    cplx value;
    cplx q0, t0;
    std::optional<cplx> x0;
};

// u0 = q0^{1/4}, v0 = t0^{1/2} on the principal branch.
NumericScalar specialize(const Scalar& s, cplx q0, cplx t0);
// X = exp(log(q0) * x0).
NumericScalar specialize(const LaurentX& f, cplx q0, cplx t0, cplx x0);
cplx eval_num(const LaurentX& f, cplx q0, cplx t0, cplx X0);

}  // namespace hecke
