#include "hecke/laurent.hpp"

namespace hecke {

LaurentX apply_symmetry(const LaurentX& f, Sym g) {
    switch (g) {
        case Sym::s:
            return f.remap([](int e) { return -e; }, [](int) { return Scalar(1); });
        case Sym::Gamma:
            return f.remap([](int e) { return e; }, [](int e) { return Scalar::qhalf(e); });
        case Sym::GammaInv:
        case Sym::omega:
            return f.remap([](int e) { return e; }, [](int e) { return Scalar::qhalf(-e); });
        case Sym::pi:
            return f.remap([](int e) { return -e; }, [](int e) { return Scalar::qhalf(e); });
    }
    throw std::invalid_argument("unsupported symmetry");
}

Sym parse_symmetry(const std::string& tag) {
    if (tag == "s") return Sym::s;
    if (tag == "Gamma") return Sym::Gamma;
    if (tag == "Gammainv" || tag == "GammaInv") return Sym::GammaInv;
    if (tag == "omega") return Sym::omega;
    if (tag == "pi") return Sym::pi;
    throw std::invalid_argument("unsupported symmetry tag: " + tag);
}

LaurentX X(int n) { return LaurentX::mono(n); }

Scalar eval_at(const LaurentX& f, const Scalar& x) {
    Scalar s;
    for (auto& [e, c] : f.terms()) s += c * x.pow(e);
    return s;
}

LaurentX scale_var(const LaurentX& f, const Scalar& c) {
    return f.remap([](int e) { return e; }, [&](int e) { return c.pow(e); });
}

LaurentX map_scalars(const LaurentX& f, const std::function<Scalar(const Scalar&)>& g) {
    return f.map_coeffs(g);
}

}  // namespace hecke
