// Python module _heckeforge.
#include "hecke/affsym.hpp"
#include "hecke/bessel.hpp"
#include "hecke/daha1.hpp"
#include "hecke/nilspinor.hpp"
#include "hecke/parallel.hpp"
#include "hecke/rootsys.hpp"
#include "hecke/serialize.hpp"

#include <pybind11/complex.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <stdexcept>

namespace py = pybind11;
using namespace hecke;

namespace {

py::dict poly_dict(const LaurentX& f, const std::string& var) {
    py::list terms;
    for (auto& [e, c] : f.terms()) terms.append(py::make_tuple(e, pretty(c), to_text(c)));
    py::dict d;
    d["poly"] = pretty(f, var);
    d["terms"] = terms;
    d["text"] = to_text(f);
    return d;
}

py::dict report_dict(const Report& r) {
    py::dict d;
    d["ok"] = r.ok;
    d["checked"] = r.checked;
    d["failures"] = r.failures;
    return d;
}

const rootsys::RootSystem& rank(const std::string& s) { return rootsys::RootSystem::get(rootsys::parse_type(s)); }

daha1::Method method(const std::string& m) {
    if (m == "intertwiner") return daha1::Method::intertwiner;
    if (m == "closed") return daha1::Method::closed;
    throw std::invalid_argument("method must be 'intertwiner' or 'closed'");
}

}  // namespace

PYBIND11_MODULE(_heckeforge, m) {
    m.doc() = "Rank-one DAHA special functions, affine symmetrizers and Dunkl-Bessel checks";

    m.def("epoly", [](int n, const std::string& meth) { return poly_dict(daha1::epoly(n, method(meth)), "X"); },
          py::arg("n"), py::arg("method") = "intertwiner");
    m.def("rogers", [](int n, const std::string& meth) { return poly_dict(daha1::rogers(n, method(meth)), "X"); },
          py::arg("n"), py::arg("method") = "intertwiner");
    m.def("qhermite_bar", [](int n) { return poly_dict(daha1::qhermite_bar(n), "X"); }, py::arg("n"));
    m.def("epoly_text_roundtrip", [](int n) {
        LaurentX f = daha1::epoly(n);
        return laurent_from_text(to_text(f)) == f;
    });

    m.def("affine_poincare", [](const std::string& r) { return pretty_t(rootsys::affine_poincare_rational(rank(r))); },
          py::arg("rank"));
    m.def("enumerate_by_length", [](const std::string& r, int L) { return rootsys::enumerate_by_length(rank(r), L); },
          py::arg("rank"), py::arg("max_length"));
    m.def("looijenga_dim", [](const std::string& r, int l) { return rootsys::looijenga_dim(rank(r), l); },
          py::arg("rank"), py::arg("level"));
    m.def("pi_orbits", [](const std::string& r, int l) { return rootsys::coinvariant_dim(rank(r), l).orbits; },
          py::arg("rank"), py::arg("level"));

    m.def(
        "jackson_sum",
        [](int level, int index, cplx q, cplx t, cplx xi, int cutoff, double tol) {
            affsym::JacksonConfig cfg;
            cfg.q0 = q;
            cfg.t0 = t;
            cfg.xi = {xi};
            cfg.cutoff = cutoff;
            cfg.tol = tol;
            affsym::JacksonResult r;
            Laurent2 F = affsym::to_weight_poly(daha1::epoly(index));
            {
                py::gil_scoped_release release;
                r = affsym::jackson_sum(rootsys::RootSystem::get(rootsys::Type::A1), F, cfg, level);
            }
            py::dict d;
            d["value"] = r.value;
            d["tail_estimate"] = r.tail_estimate;
            d["shells_used"] = r.shells_used;
            if (level == 1) d["closed_form"] = affsym::level_one_closed(index, cfg);
            return d;
        },
        py::arg("level"), py::arg("index") = 0, py::arg("q") = cplx(0.3), py::arg("t") = cplx(2.0),
        py::arg("xi") = cplx(0.11, 0.07), py::arg("cutoff") = 40, py::arg("tol") = 1e-10);

    m.def("gamma", [](cplx z) { return bessel::gamma(z); }, py::arg("z"));
    m.def("bessel_eval",
          [](const std::string& fam, cplx k, cplx lam, cplx x, bool complex_case) {
              return bessel::bessel_eval(bessel::parse_family(fam), k, lam, x, complex_case);
          },
          py::arg("family"), py::arg("k"), py::arg("lam"), py::arg("x"), py::arg("complex_case") = false);
    m.def(
        "bessel_check",
        [](const std::string& kind, cplx k, cplx lam, cplx mu, double tol, double eps, int nodes) {
            bessel::QuadConfig cfg;
            cfg.tol = tol;
            cfg.eps = eps;
            cfg.nodes = nodes;
            bessel::MasterReport r;
            {
                py::gil_scoped_release release;
                r = bessel::master_formula_check(bessel::parse_kind(kind), k, lam, mu, cfg);
            }
            py::dict d;
            d["lhs"] = r.lhs;
            d["rhs"] = r.rhs;
            d["rel_err"] = r.rel_err;
            d["nodes"] = r.nodes;
            d["ok"] = r.ok;
            return d;
        },
        py::arg("kind"), py::arg("k"), py::arg("lam"), py::arg("mu"), py::arg("tol") = 1e-10, py::arg("eps") = 0.25,
        py::arg("nodes") = 20);
    m.def("wrong_formula", [](cplx k, cplx lam) {
        auto w = bessel::wrong_formula(k, lam);
        return py::make_tuple(w.integral, w.claimed, w.series);
    });

    m.def(
        "verify",
        [](const std::string& suite, int size) {
            Report r;
            py::gil_scoped_release release;
            if (suite == "nil-daha") r = nilspinor::nildaha_relations_check(size);
            else if (suite == "qtoda") r = nilspinor::qtoda_check(size);
            else if (suite == "whittaker-intertwine") r = nilspinor::whittaker_check(size);
            else if (suite == "symmetrizer") {
                for (int M = 1; M <= size; ++M)
                    r.expect(affsym::trunc_Phat(M).equals(affsym::sigma_hat(M)), "M=" + std::to_string(M));
            } else if (suite == "dunkl") {
                r = bessel::rational_daha_relations_check();
                r.merge(bessel::trig_conjugation_check());
            } else {
                throw std::invalid_argument("unknown suite " + suite);
            }
            py::gil_scoped_acquire acquire;
            return report_dict(r);
        },
        py::arg("suite"), py::arg("size") = 5);

    m.def("worker_count", &worker_count);
}
