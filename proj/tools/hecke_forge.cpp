// hecke-forge: command-line front end.
#include "hecke/affsym.hpp"
#include "hecke/aha.hpp"
#include "hecke/bessel.hpp"
#include "hecke/daha1.hpp"
#include "hecke/nilspinor.hpp"
#include "hecke/parallel.hpp"
#include "hecke/rootsys.hpp"
#include "hecke/serialize.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdio>
#include <iostream>
#include <map>
#include <regex>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

using namespace hecke;
using json = nlohmann::ordered_json;

namespace {

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Output of one command: a JSON document plus its text and tsv renderings.
struct Out {
    json doc;
    std::string text;
    std::string tsv;
    bool ok = true;
};

cplx parse_cplx(const std::string& raw) {
    std::string s;
    for (char c : raw)
        if (c != ' ') s += c;
    static const std::regex num(R"([+-]?(\d+\.?\d*|\.\d+)([eE][+-]?\d+)?)");
    static const std::regex full(
        R"(^([+-]?(?:\d+\.?\d*|\.\d+)(?:[eE][+-]?\d+)?)?(?:([+-](?:\d+\.?\d*|\.\d+)?(?:[eE][+-]?\d+)?)i)?$)");
    static const std::regex pure_im(R"(^([+-]?(?:\d+\.?\d*|\.\d+)?(?:[eE][+-]?\d+)?)i$)");
    std::smatch m;
    auto im_value = [](const std::string& t) {
        if (t.empty() || t == "+") return 1.0;
        if (t == "-") return -1.0;
        return std::stod(t);
    };
    if (std::regex_match(s, m, pure_im)) return {0.0, im_value(m[1].str())};
    if (!s.empty() && std::regex_match(s, m, full) && m[1].matched)
        return {std::stod(m[1].str()), m[2].matched ? im_value(m[2].str()) : 0.0};
    throw UsageError("not a number: " + raw);
}

std::vector<std::string> split(const std::string& s, char sep) {
    std::vector<std::string> out;
    std::stringstream ss(s);
    for (std::string item; std::getline(ss, item, sep);) out.push_back(item);
    return out;
}

rootsys::Vec parse_weight(const std::string& s, rootsys::Type t) {
    auto parts = split(s, ',');
    std::size_t want = t == rootsys::Type::A1 ? 1 : 2;
    if (parts.size() != want) throw UsageError("weight must have " + std::to_string(want) + " component(s)");
    rootsys::Vec v{0, 0};
    try {
        for (std::size_t i = 0; i < want; ++i) v[i] = std::stoi(parts[i]);
    } catch (const std::exception&) {
        throw UsageError("weight must be integral: " + s);
    }
    return v;
}

rootsys::Type parse_rank(const std::string& s) {
    try {
        return rootsys::parse_type(s);
    } catch (const std::exception&) {
        throw UsageError("unknown rank " + s + " (expected A1 or A2)");
    }
}

json cjson(cplx z) { return json{{"re", z.real()}, {"im", z.imag()}}; }

std::string cstr(cplx z) {
    char buf[96];
    if (z.imag() == 0) std::snprintf(buf, sizeof buf, "%.15g", z.real());
    else std::snprintf(buf, sizeof buf, "%.15g%+.15gi", z.real(), z.imag());
    return buf;
}

Out poly_out(const std::string& command, const LaurentX& f, const std::string& var, json params) {
    Out o;
    o.doc = {{"schema", 1}, {"command", command}};
    for (auto& [k, v] : params.items()) o.doc[k] = v;
    json terms = json::array();
    for (auto& [e, c] : f.terms()) terms.push_back({{"exp", e}, {"coeff", pretty(c)}, {"exact", to_text(c)}});
    o.doc["poly"] = pretty(f, var);
    o.doc["terms"] = terms;
    o.text = pretty(f, var);
    o.tsv = to_text(f);
    return o;
}

Out poly2_out(const std::string& command, const Laurent2& f, json params) {
    Out o;
    o.doc = {{"schema", 1}, {"command", command}};
    for (auto& [k, v] : params.items()) o.doc[k] = v;
    json terms = json::array();
    for (auto& [e, c] : f.terms())
        terms.push_back({{"exp", {e[0], e[1]}}, {"coeff", pretty(c)}, {"exact", to_text(c)}});
    o.doc["poly"] = pretty(f, "Y1", "Y2");
    o.doc["terms"] = terms;
    o.text = pretty(f, "Y1", "Y2");
    o.tsv = to_text(f);
    return o;
}

Out report_out(const std::string& suite, const Report& r) {
    Out o;
    o.ok = r.ok;
    o.doc = {{"schema", 1}, {"suite", suite}, {"ok", r.ok}, {"checked", r.checked}, {"failures", r.failures}};
    std::ostringstream os;
    os << suite << ": " << (r.ok ? "ok" : "FAILED") << " (" << r.checked << " checks)";
    for (auto& f : r.failures) os << "\n  " << f;
    o.text = os.str();
    o.tsv = suite + "\t" + (r.ok ? "ok" : "failed") + "\t" + std::to_string(r.checked);
    return o;
}

// ---- commands ----

Out cmd_epoly(int n, bool spherical, const std::string& limit, const std::string& method) {
    daha1::Method m = method == "closed" ? daha1::Method::closed : daha1::Method::intertwiner;
    LaurentX f = spherical ? daha1::spherical_e(n) : daha1::epoly(n, m);
    if (limit == "t0") f = daha1::limit_t0(f);
    else if (limit == "tinf") f = daha1::etilde(n);
    else if (limit == "q0") f = daha1::limit_q0(spherical ? f : daha1::spherical_e(n));
    return poly_out("epoly", f, "X", {{"n", n}, {"spherical", spherical}, {"limit", limit}, {"method", method}});
}

Out cmd_rogers(int n, const std::string& method) {
    daha1::Method m = method == "closed" ? daha1::Method::closed : daha1::Method::intertwiner;
    LaurentX f = daha1::rogers(n, m);
    Out o = poly_out("rogers", f, "X", {{"n", n}, {"method", method}});
    o.doc["eigenvalue"] = pretty(daha1::rogers_eigenvalue(n));
    return o;
}

Out cmd_hermite(int n, const std::string& family, const std::string& method) {
    LaurentX f = family == "tilde"
                     ? daha1::etilde(n)
                     : daha1::qhermite_bar(n, method == "limit" ? daha1::BarMethod::limit : daha1::BarMethod::intertwiner);
    return poly_out("hermite", f, "X", {{"n", n}, {"family", family}, {"method", method}});
}

Out cmd_spherical(const std::string& rank, const std::string& weight, const std::string& method, bool nonsym) {
    rootsys::Type t = parse_rank(rank);
    rootsys::Vec b = parse_weight(weight, t);
    if (t == rootsys::Type::A2) {
        if (nonsym) throw UsageError("--nonsymmetric is available for A1 only");
        if (method != "closed") throw UsageError("A2 supports --method closed only");
        if (b[0] < 0 || b[1] < 0) throw UsageError("A2 weight must be dominant");
        return poly2_out("spherical", aha::hall_littlewood_A2({b[0], b[1]}),
                         {{"rank", "A2"}, {"weight", {b[0], b[1]}}, {"method", method}});
    }
    LaurentX f;
    if (nonsym) {
        f = aha::matsumoto_eps(b[0]);
    } else {
        if (b[0] < 0) throw UsageError("A1 spherical weight must be nonnegative");
        aha::PhiMethod pm = method == "pieri" ? aha::PhiMethod::pieri
                            : method == "symmetrize" ? aha::PhiMethod::symmetrize
                                                     : aha::PhiMethod::closed;
        f = aha::spherical_phi(b[0], pm);
    }
    return poly_out("spherical", f, "Y",
                    {{"rank", "A1"}, {"weight", b[0]}, {"method", method}, {"nonsymmetric", nonsym}});
}

Out cmd_whittaker(int order, bool symmetric) {
    Out o;
    o.doc = {{"schema", 1}, {"command", "whittaker"}, {"order", order}, {"symmetric", symmetric}};
    json rows = json::array();
    std::ostringstream text, tsv;
    auto emit = [&](const Laurent2& f, const std::string& comp) {
        std::map<int, LaurentX> by_m;
        for (auto& [e, c] : f.terms()) by_m[e[0]].add_term(e[1], c);
        for (auto& [m, g] : by_m) {
            std::string p = pretty(g, "L");
            rows.push_back({{"m", m}, {"component", comp}, {"lambda_poly", p}});
            text << m << "  " << comp << "  " << p << "\n";
            tsv << m << "\t" << comp << "\t" << p << "\n";
        }
    };
    if (symmetric) {
        emit(nilspinor::whittaker_symmetric(order), "sym");
    } else {
        nilspinor::Spinor2 w = nilspinor::whittaker_omega(order);
        emit(w.f1, "1");
        emit(w.f2, "2");
    }
    o.doc["rows"] = rows;
    o.text = text.str();
    o.tsv = tsv.str();
    if (!o.text.empty()) o.text.pop_back();
    if (!o.tsv.empty()) o.tsv.pop_back();
    return o;
}

Out cmd_hall(const std::string& rank, int level, const std::string& index, const std::string& q, const std::string& t,
             const std::string& xi, int cutoff, double tol) {
    rootsys::Type ty = parse_rank(rank);
    const auto& R = rootsys::RootSystem::get(ty);
    affsym::JacksonConfig cfg;
    cfg.q0 = parse_cplx(q);
    cfg.t0 = parse_cplx(t);
    cfg.xi.clear();
    for (auto& part : split(xi, ',')) cfg.xi.push_back(parse_cplx(part));
    if (static_cast<int>(cfg.xi.size()) != R.rank) throw UsageError("--xi needs one value per fundamental weight");
    cfg.cutoff = cutoff;
    cfg.tol = tol;
    rootsys::Vec a = parse_weight(index, ty);
    Laurent2 F = ty == rootsys::Type::A1 ? affsym::to_weight_poly(daha1::epoly(a[0]))
                                         : Laurent2::mono({a[0], a[1]});
    affsym::JacksonResult r = affsym::jackson_sum(R, F, cfg, level);
    Out o;
    o.doc = {{"schema", 1},   {"command", "hall"},   {"rank", rootsys::type_name(ty)},
             {"level", level}, {"index", index},     {"value", cjson(r.value)},
             {"tail_estimate", r.tail_estimate},     {"shells_used", r.shells_used}};
    std::ostringstream os;
    os << "value " << cstr(r.value) << "\ntail_estimate " << r.tail_estimate << "\nshells_used " << r.shells_used;
    if (ty == rootsys::Type::A1 && level == 1) {
        cplx c = affsym::level_one_closed(a[0], cfg);
        o.doc["closed_form"] = cjson(c);
        os << "\nclosed_form " << cstr(c);
    }
    o.text = os.str();
    o.tsv = cstr(r.value) + "\t" + std::to_string(r.tail_estimate) + "\t" + std::to_string(r.shells_used);
    return o;
}

Out cmd_poincare(const std::string& rank, bool affine, int enumerate) {
    rootsys::Type ty = parse_rank(rank);
    const auto& R = rootsys::RootSystem::get(ty);
    Out o;
    o.doc = {{"schema", 1}, {"command", "poincare"}, {"rank", rootsys::type_name(ty)}, {"affine", affine}};
    std::ostringstream text, tsv;
    if (affine) {
        std::string f = pretty_t(rootsys::affine_poincare_rational(R));
        o.doc["series"] = f;
        text << f;
        tsv << f;
        if (enumerate >= 0) {
            json table = json::array();
            for (auto& [len, cnt] : rootsys::enumerate_by_length(R, enumerate)) {
                table.push_back({{"length", len}, {"count", cnt}});
                text << "\n" << len << " " << cnt;
                tsv << "\n" << len << "\t" << cnt;
            }
            o.doc["table"] = table;
        }
    } else {
        std::map<int, long> counts;
        for (auto& w : R.weyl) ++counts[w.length()];
        Scalar p;
        for (auto& [len, cnt] : counts) p += Scalar::mono(cnt, 0, 2 * len);
        std::string f = pretty_t(p);
        o.doc["polynomial"] = f;
        text << f;
        tsv << f;
    }
    o.text = text.str();
    o.tsv = tsv.str();
    return o;
}

Out cmd_looijenga(const std::string& rank, int level, int max_level) {
    rootsys::Type ty = parse_rank(rank);
    const auto& R = rootsys::RootSystem::get(ty);
    if (level < 1) throw UsageError("--level must be positive");
    int hi = std::max(level, max_level);
    Out o;
    o.doc = {{"schema", 1}, {"command", "looijenga"}, {"rank", rootsys::type_name(ty)}};
    json rows = json::array();
    std::ostringstream text, tsv;
    for (int l = level; l <= hi; ++l) {
        auto c = rootsys::coinvariant_dim(R, l);
        bool agree = c.closed && c.dim == c.orbits;
        o.ok = o.ok && agree;
        rows.push_back({{"level", l}, {"dim", c.dim}, {"orbits", c.orbits}, {"agree", agree}});
        text << (l == level ? "" : "\n") << "level " << l << " dim " << c.dim << " orbits " << c.orbits
             << (agree ? "" : " MISMATCH");
        tsv << (l == level ? "" : "\n") << l << "\t" << c.dim << "\t" << c.orbits;
    }
    o.doc["rows"] = rows;
    o.text = text.str();
    o.tsv = tsv.str();
    return o;
}

Out cmd_bessel(const std::string& kind, const std::string& k, const std::string& lambda, const std::string& mu,
               double tol, double eps, int nodes) {
    bessel::MasterKind mk;
    try {
        mk = bessel::parse_kind(kind);
    } catch (const std::exception&) {
        throw UsageError("unknown kind " + kind);
    }
    bessel::QuadConfig cfg;
    cfg.tol = tol;
    cfg.eps = eps;
    cfg.nodes = nodes;
    auto r = bessel::master_formula_check(mk, parse_cplx(k), parse_cplx(lambda), parse_cplx(mu), cfg);
    Out o;
    o.ok = r.ok;
    o.doc = {{"schema", 1},        {"command", "bessel-check"}, {"kind", bessel::kind_name(mk)},
             {"lhs", cjson(r.lhs)}, {"rhs", cjson(r.rhs)},       {"rel_err", r.rel_err},
             {"nodes", r.nodes},    {"ok", r.ok}};
    std::ostringstream os;
    os << "lhs " << cstr(r.lhs) << "\nrhs " << cstr(r.rhs) << "\nrel_err " << r.rel_err << "\nnodes " << r.nodes
       << "\n" << (r.ok ? "ok" : "FAILED");
    o.text = os.str();
    o.tsv = cstr(r.lhs) + "\t" + cstr(r.rhs) + "\t" + std::to_string(r.rel_err) + "\t" + std::to_string(r.nodes);
    return o;
}

Report verify_symmetrizer(int M) {
    Report r;
    for (int m = 1; m <= M; ++m)
        r.expect(affsym::trunc_Phat(m).equals(affsym::sigma_hat(m)), "P'_M = Sigma^+_M at M=" + std::to_string(m));
    return r;
}

Report verify_epoly(int N) {
    Report r;
    for (int n = -N; n <= N; ++n) {
        std::string tag = " n=" + std::to_string(n);
        LaurentX e = daha1::epoly(n);
        r.expect(e == daha1::epoly(n, daha1::Method::closed), "closed form" + tag);
        r.expect(daha1::apply(daha1::Op::Y, e) == daha1::eigenvalue(n) * e, "Y eigenvalue" + tag);
        r.expect(daha1::pieri_check(n), "Pieri" + tag);
        for (int m = -N; m <= N; ++m)
            r.expect(daha1::duality_check(m, n), "duality m=" + std::to_string(m) + tag);
    }
    for (int n = 0; n <= N; ++n) {
        LaurentX p = daha1::rogers(n);
        r.expect(p == daha1::rogers(n, daha1::Method::closed), "Rogers closed form n=" + std::to_string(n));
        r.expect(daha1::apply(daha1::Op::L, p) == daha1::rogers_eigenvalue(n) * p,
                 "Rogers eigenvalue n=" + std::to_string(n));
    }
    return r;
}

Report verify_dunkl() {
    Report r = bessel::rational_daha_relations_check();
    r.merge(bessel::trig_conjugation_check());
    r.merge(bessel::trig_spinor_dunkl_commutativity(rootsys::RootSystem::get(rootsys::Type::A1), 3));
    r.merge(bessel::trig_spinor_dunkl_commutativity(rootsys::RootSystem::get(rootsys::Type::A2), 2));
    return r;
}

Report verify_padic(int N) {
    Report r;
    for (int m = -N; m <= N; ++m) {
        r.expect(aha::eps_pieri_check(m < 0 ? -m : m), "eps Pieri m=" + std::to_string(m));
        r.expect(aha::pi_eps_check(m), "pi eps m=" + std::to_string(m));
    }
    for (int m = 0; m <= N; ++m)
        r.expect(aha::spherical_phi(m, aha::PhiMethod::closed) == aha::spherical_phi(m, aha::PhiMethod::pieri),
                 "phi closed = Pieri m=" + std::to_string(m));
    return r;
}

void print(const Out& o, const std::string& format) {
    std::string body = format == "json" ? o.doc.dump(2) : format == "tsv" && !o.tsv.empty() ? o.tsv : o.text;
    while (!body.empty() && body.back() == '\n') body.pop_back();
    std::cout << body << "\n";
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"hecke-forge: rank-one DAHA special functions, symmetrizers and Dunkl-Bessel checks"};
    app.require_subcommand(1);
    app.fallthrough();
    std::string format = "text";
    app.add_option("--format", format, "Output format")
        ->check(CLI::IsMember({"text", "json", "tsv"}))
        ->capture_default_str();

    std::function<Out()> run;

    auto* epoly = app.add_subcommand("epoly", "Nonsymmetric polynomial E_n");
    int n = 0;
    bool spherical_flag = false;
    std::string limit = "none", method = "intertwiner";
    epoly->add_option("-n", n, "Index")->required();
    epoly->add_flag("--spherical", spherical_flag, "Normalize by the evaluation at t^{-1/2}");
    epoly->add_option("--limit", limit, "Coefficientwise limit")->check(CLI::IsMember({"none", "t0", "tinf", "q0"}));
    epoly->add_option("--method", method)->check(CLI::IsMember({"intertwiner", "closed"}));
    epoly->callback([&] { run = [&] { return cmd_epoly(n, spherical_flag, limit, method); }; });

    auto* rogers = app.add_subcommand("rogers", "Rogers polynomial P_n");
    rogers->add_option("-n", n, "Degree")->required()->check(CLI::NonNegativeNumber);
    rogers->add_option("--method", method)->check(CLI::IsMember({"intertwiner", "closed"}));
    rogers->callback([&] { run = [&] { return cmd_rogers(n, method); }; });

    auto* hermite = app.add_subcommand("hermite", "q-Hermite limits: bar (t -> 0) or tilde (t -> infinity)");
    std::string family = "bar", hmethod = "intertwiner";
    hermite->add_option("-n", n, "Index")->required();
    hermite->add_option("--family", family)->check(CLI::IsMember({"bar", "tilde"}));
    hermite->add_option("--method", hmethod)->check(CLI::IsMember({"intertwiner", "limit"}));
    hermite->callback([&] { run = [&] { return cmd_hermite(n, family, hmethod); }; });

    auto* spherical = app.add_subcommand("spherical", "Macdonald spherical function (p-adic)");
    std::string rank = "A1", weight, smethod = "closed";
    bool nonsym = false;
    spherical->add_option("--rank", rank)->check(CLI::IsMember({"A1", "A2"}));
    spherical->add_option("--weight", weight, "m for A1, a,b for A2")->required();
    spherical->add_option("--method", smethod)->check(CLI::IsMember({"pieri", "closed", "symmetrize"}));
    spherical->add_flag("--nonsymmetric", nonsym, "Matsumoto function eps_m (A1)");
    spherical->callback([&] { run = [&] { return cmd_spherical(rank, weight, smethod, nonsym); }; });

    auto* whit = app.add_subcommand("whittaker", "Spinor q-Whittaker coefficients");
    int order = 4;
    bool symmetric = false;
    whit->add_option("--order", order, "X-degree bound")->required()->check(CLI::NonNegativeNumber);
    whit->add_flag("--symmetric", symmetric, "Symmetric Whittaker function");
    whit->callback([&] { run = [&] { return cmd_whittaker(order, symmetric); }; });

    auto* hall = app.add_subcommand("hall", "Jackson sum of the affine Hall function");
    int level = 0, cutoff = 40;
    std::string index = "0", q = "0.3", t = "2.0", xi = "0.11+0.07i";
    double tol = 1e-10;
    hall->add_option("--rank", rank)->check(CLI::IsMember({"A1", "A2"}));
    hall->add_option("--level", level)->check(CLI::NonNegativeNumber);
    hall->add_option("--index", index, "a (A1: E_a) or i,j (A2: X_b)");
    hall->add_option("--q", q)->capture_default_str();
    hall->add_option("--t", t)->capture_default_str();
    hall->add_option("--xi", xi, "Comma-separated (omega_i, x)")->capture_default_str();
    hall->add_option("--cutoff", cutoff)->check(CLI::PositiveNumber);
    hall->add_option("--tol", tol)->check(CLI::PositiveNumber);
    hall->callback([&] { run = [&] { return cmd_hall(rank, level, index, q, t, xi, cutoff, tol); }; });

    auto* poincare = app.add_subcommand("poincare", "Poincare series of the (affine) Weyl group");
    bool affine = false;
    int enumerate = -1;
    poincare->add_flag("--affine", affine);
    poincare->add_option("--rank,rank", rank)->check(CLI::IsMember({"A1", "A2"}));
    poincare->add_option("--enumerate", enumerate, "Also count elements by length up to L");
    poincare->callback([&] { run = [&] { return cmd_poincare(rank, affine, enumerate); }; });

    auto* looij = app.add_subcommand("looijenga", "Looijenga dimensions against Pi-orbit counts");
    int llevel = 1, lmax = 0;
    looij->add_option("--rank", rank)->check(CLI::IsMember({"A1", "A2"}));
    looij->add_option("--level", llevel)->check(CLI::PositiveNumber);
    looij->add_option("--max-level", lmax, "Print levels up to this bound");
    looij->callback([&] { run = [&] { return cmd_looijenga(rank, llevel, lmax); }; });

    auto* bes = app.add_subcommand("bessel-check", "Numeric Gauss-Bessel master formula");
    std::string kind = "sym-real", kstr = "0.3", lam = "0.5", mu = "0.7";
    double btol = 1e-10, eps = 0.25;
    int nodes = 20;
    bes->add_option("--kind", kind, "sym-real, sym-complex, nonsym-real, nonsym-complex, tilde-real, tilde-complex, "
                                    "sym-tilde-real, sym-tilde-complex, orthogonality");
    bes->add_option("--k", kstr);
    bes->add_option("--lambda", lam);
    bes->add_option("--mu", mu);
    bes->add_option("--tol", btol)->check(CLI::PositiveNumber);
    bes->add_option("--eps", eps, "Contour shift")->check(CLI::PositiveNumber);
    bes->add_option("--nodes", nodes)->check(CLI::PositiveNumber);
    bes->callback([&] { run = [&] { return cmd_bessel(kind, kstr, lam, mu, btol, eps, nodes); }; });

    auto* verify = app.add_subcommand("verify", "Run a named invariant suite");
    verify->require_subcommand(1);
    int degree = 5, M = 8, vmax = 8;
    auto suite = [&](const std::string& name, const std::string& help, std::function<Report()> fn) {
        auto* s = verify->add_subcommand(name, help);
        s->callback([&, name, fn] { run = [name, fn] { return report_out(name, fn()); }; });
        return s;
    };
    suite("nil-daha", "Nil-DAHA spinor relations", [&] { return nilspinor::nildaha_relations_check(degree); })
        ->add_option("--degree", degree);
    suite("qtoda", "Spinor q-Toda operator", [&] { return nilspinor::qtoda_check(degree); })
        ->add_option("--degree", degree);
    suite("whittaker-intertwine", "Whittaker intertwining identities",
          [&] { return nilspinor::whittaker_check(order); })
        ->add_option("--order", order);
    suite("symmetrizer", "Truncated symmetrizers against Sigma^+", [&] { return verify_symmetrizer(M); })
        ->add_option("--M", M);
    suite("epoly", "E-polynomials and Rogers polynomials", [&] { return verify_epoly(vmax); })
        ->add_option("--max", vmax);
    suite("padic", "Matsumoto and spherical functions", [&] { return verify_padic(vmax); })
        ->add_option("--max", vmax);
    suite("dunkl", "Rational and trigonometric Dunkl operators", [&] { return verify_dunkl(); });

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        Out o = run();
        print(o, format);
        return o.ok ? 0 : 1;
    } catch (const UsageError& e) {
        std::cerr << "usage error: " << e.what() << "\n" << app.help();
        return 2;
    } catch (const std::exception& e) {
        if (format == "json")
            std::cout << json{{"schema", 1}, {"error", {{"type", "computation"}, {"message", e.what()}}}}.dump(2)
                      << "\n";
        else
            std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}
