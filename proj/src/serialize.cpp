#include "hecke/serialize.hpp"

#include <map>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace hecke {

std::string to_text(const Poly2& p) {
    if (p.is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (auto& [k, c] : p.terms()) {
        if (!first) os << ' ';
        first = false;
        os << c.get_str() << "*u^" << Poly2::ka(k) << "*v^" << Poly2::kb(k);
    }
    return os.str();
}

std::string to_text(const Scalar& s) { return to_text(s.num()) + "/" + to_text(s.den()); }

std::string to_text(const LaurentX& f) {
    std::ostringstream os;
    for (auto& [e, c] : f.terms()) os << e << '\t' << to_text(c) << '\n';
    return os.str();
}

std::string to_text(const Laurent2& f) {
    std::ostringstream os;
    for (auto& [e, c] : f.terms()) os << e[0] << ',' << e[1] << '\t' << to_text(c) << '\n';
    return os.str();
}

std::string to_text(const SeriesX& f) {
    std::ostringstream os;
    os << "order=" << f.order() << '\n';
    for (auto& [k, c] : f.terms()) os << "power=" << k << '\n' << to_text(c);
    return os.str();
}

Poly2 poly_from_text(const std::string& s) {
    if (s == "0") return {};
    std::istringstream is(s);
    std::string tok;
    std::vector<Poly2::Term> t;
    while (is >> tok) {
        auto p1 = tok.find("*u^"), p2 = tok.find("*v^");
        if (p1 == std::string::npos || p2 == std::string::npos)
            throw std::invalid_argument("bad monomial: " + tok);
        mpz_class c(tok.substr(0, p1));
        int a = std::stoi(tok.substr(p1 + 3, p2 - p1 - 3));
        int b = std::stoi(tok.substr(p2 + 3));
        t.emplace_back(Poly2::key(a, b), c);
    }
    return Poly2::from_terms(std::move(t));
}

Scalar scalar_from_text(const std::string& s) {
    auto p = s.find('/');
    if (p == std::string::npos) throw std::invalid_argument("bad scalar: " + s);
    return Scalar(poly_from_text(s.substr(0, p)), poly_from_text(s.substr(p + 1)));
}

LaurentX laurent_from_text(const std::string& s) {
    std::istringstream is(s);
    std::string line;
    LaurentX f;
    while (std::getline(is, line)) {
        if (line.empty()) continue;
        auto tab = line.find('\t');
        f.add_term(std::stoi(line.substr(0, tab)), scalar_from_text(line.substr(tab + 1)));
    }
    return f;
}

Laurent2 laurent2_from_text(const std::string& s) {
    std::istringstream is(s);
    std::string line;
    Laurent2 f;
    while (std::getline(is, line)) {
        if (line.empty()) continue;
        auto tab = line.find('\t');
        auto comma = line.find(',');
        Exp2 e{std::stoi(line.substr(0, comma)), std::stoi(line.substr(comma + 1, tab - comma - 1))};
        f.add_term(e, scalar_from_text(line.substr(tab + 1)));
    }
    return f;
}

SeriesX series_from_text(const std::string& s) {
    std::istringstream is(s);
    std::string line;
    std::getline(is, line);
    if (line.rfind("order=", 0) != 0) throw std::invalid_argument("series header missing");
    SeriesX r(std::stoi(line.substr(6)));
    int power = 0;
    std::string block;
    auto flush = [&] {
        if (!block.empty()) r.add(power, laurent_from_text(block));
        block.clear();
    };
    while (std::getline(is, line)) {
        if (line.rfind("power=", 0) == 0) {
            flush();
            power = std::stoi(line.substr(6));
        } else {
            block += line + '\n';
        }
    }
    flush();
    return r;
}

namespace {

std::string frac_pow(const char* var, int num, int den) {
    if (num == 0) return "";
    int g = std::gcd(num < 0 ? -num : num, den);
    num /= g;
    den /= g;
    std::string s = var;
    if (den == 1 && num == 1) return s;
    if (den == 1) return s + "^" + std::to_string(num);
    return s + "^(" + std::to_string(num) + "/" + std::to_string(den) + ")";
}

std::string pretty_poly(const Poly2& p, bool& compound) {
    compound = p.size() > 1;
    if (p.is_zero()) return "0";
    std::string out;
    bool first = true;
    for (auto& [k, c] : p.terms()) {
        std::string mono;
        std::string qs = frac_pow("q", Poly2::ka(k), 4), ts = frac_pow("t", Poly2::kb(k), 2);
        mono = qs;
        if (!ts.empty()) mono += (mono.empty() ? "" : "*") + ts;
        mpz_class a = abs(c);
        std::string coef = a.get_str();
        std::string term;
        if (mono.empty()) term = coef;
        else if (a == 1) term = mono;
        else term = coef + "*" + mono;
        if (first) out += (c < 0 ? "-" : "") + term;
        else out += (c < 0 ? "-" : "+") + term;
        first = false;
    }
    if (compound && out[0] == '-') compound = true;
    return out;
}

}  // namespace

std::string pretty(const Scalar& s) {
    bool cn, cd;
    std::string n = pretty_poly(s.num(), cn);
    if (s.den().is_one()) return n;
    std::string d = pretty_poly(s.den(), cd);
    return (cn ? "(" + n + ")" : n) + "/" + (cd || s.den().size() == 1 ? "(" + d + ")" : d);
}

std::string pretty(const LaurentX& f, const std::string& var) {
    if (f.is_zero()) return "0";
    std::string out;
    bool first = true;
    for (auto& [e, c] : f.terms()) {
        std::string mono = e == 0 ? "" : (e == 1 ? var : var + "^" + std::to_string(e));
        std::string cs = pretty(c);
        std::string term;
        if (mono.empty()) term = cs;
        else if (c.is_one()) term = mono;
        else if (c == Scalar(-1)) term = "-" + mono;
        else term = "(" + cs + ")*" + mono;
        out += (first ? "" : " + ") + term;
        first = false;
    }
    return out;
}

std::string pretty(const Laurent2& f, const std::string& v1, const std::string& v2) {
    if (f.is_zero()) return "0";
    std::string out;
    bool first = true;
    for (auto& [e, c] : f.terms()) {
        std::string mono;
        if (e[0] != 0) mono += e[0] == 1 ? v1 : v1 + "^" + std::to_string(e[0]);
        if (e[1] != 0) mono += (mono.empty() ? "" : "*") + (e[1] == 1 ? v2 : v2 + "^" + std::to_string(e[1]));
        std::string term = mono.empty() ? pretty(c) : (c.is_one() ? mono : "(" + pretty(c) + ")*" + mono);
        out += (first ? "" : " + ") + term;
        first = false;
    }
    return out;
}

namespace {

std::string t_poly(const Poly2& p, long content) {
    std::map<int, mpz_class> c;
    for (auto& [key, v] : p.terms()) {
        if (Poly2::ka(key) != 0 || Poly2::kb(key) % 2 != 0)
            throw std::invalid_argument("pretty_t: not a rational function of t");
        c[Poly2::kb(key) / 2] += mpz_class(v / content);
    }
    std::string out;
    for (auto& [e, v] : c) {
        if (v == 0) continue;
        mpz_class a = abs(v);
        std::string sign = v < 0 ? "-" : (out.empty() ? "" : "+");
        std::string mono = e == 0 ? "" : (e == 1 ? "t" : "t^" + std::to_string(e));
        std::string coef = (a == 1 && !mono.empty()) ? "" : a.get_str();
        out += sign + coef + mono;
    }
    return out.empty() ? "0" : out;
}
}  // namespace

std::string pretty_t(const Scalar& s) {
    Scalar x = s;
    // constant term of the denominator positive
    Poly2 den = x.den();
    mpz_class d0 = 0;
    for (auto& [key, v] : den.terms())
        if (Poly2::kb(key) == 0 && Poly2::ka(key) == 0) d0 = v;
    long sgn = d0 < 0 ? -1 : 1;
    mpz_class g = 0;
    int low = 1 << 30;
    mpz_class low_c = 1;
    for (auto& [key, v] : x.num().terms()) {
        g = gcd(g, v);
        if (Poly2::kb(key) < low) low = Poly2::kb(key), low_c = v;
    }
    long content = g == 0 ? 1 : g.get_si() * ((low_c * sgn) < 0 ? -1 : 1);
    std::string n = t_poly(x.num(), content * sgn), dd = t_poly(den, sgn);
    std::string cs = content == 1 ? "" : (content == -1 ? "-" : std::to_string(content));
    std::string num = x.num().size() > 1 ? cs + "(" + n + ")" : t_poly(x.num(), sgn);
    if (dd == "1") return cs.empty() && x.num().size() > 1 ? n : num;
    return num + "/(" + dd + ")";
}

}  // namespace hecke
