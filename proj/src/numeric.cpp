#include "hecke/numeric.hpp"

#include <cmath>

namespace hecke {

namespace {
cplx u_of(cplx q0) { return std::pow(q0, 0.25); }
cplx v_of(cplx t0) { return std::sqrt(t0); }
}  // namespace

NumericScalar specialize(const Scalar& s, cplx q0, cplx t0) {
    return {s.eval(u_of(q0), v_of(t0)), q0, t0, std::nullopt};
}

cplx eval_num(const LaurentX& f, cplx q0, cplx t0, cplx X0) {
    cplx u0 = u_of(q0), v0 = v_of(t0), s = 0;
    for (auto& [e, c] : f.terms()) s += c.eval(u0, v0) * std::pow(X0, e);
    return s;
}

NumericScalar specialize(const LaurentX& f, cplx q0, cplx t0, cplx x0) {
    cplx X0 = std::exp(std::log(q0) * x0);
    return {eval_num(f, q0, t0, X0), q0, t0, x0};
}

}  // namespace hecke
