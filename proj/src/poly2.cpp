#include "hecke/poly2.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace hecke {

Poly2::Poly2(long c) {
    if (c != 0) t_.emplace_back(0, mpz_class(c));
}

Poly2::Poly2(const mpz_class& c) {
    if (c != 0) t_.emplace_back(0, c);
}

Poly2 Poly2::monomial(const mpz_class& c, int a, int b) {
    if (a < 0 || b < 0) throw std::invalid_argument("Poly2: negative exponent");
    Poly2 p;
    if (c != 0) p.t_.emplace_back(key(a, b), c);
    return p;
}

Poly2 Poly2::from_terms(std::vector<Term> t) {
    std::sort(t.begin(), t.end(),
              [](const Term& x, const Term& y) { return x.first < y.first; });
    Poly2 p;
    p.t_.reserve(t.size());
    for (auto& term : t) {
        if (!p.t_.empty() && p.t_.back().first == term.first) {
            p.t_.back().second += term.second;
        } else {
            if (!p.t_.empty() && p.t_.back().second == 0) p.t_.pop_back();
            p.t_.push_back(std::move(term));
        }
    }
    if (!p.t_.empty() && p.t_.back().second == 0) p.t_.pop_back();
    return p;
}

bool Poly2::is_one() const {
    return t_.size() == 1 && t_[0].first == 0 && t_[0].second == 1;
}

int Poly2::deg_u() const { return t_.empty() ? -1 : ka(t_.back().first); }

int Poly2::deg_v() const {
    int d = -1;
    for (auto& [k, c] : t_) d = std::max(d, kb(k));
    return d;
}

int Poly2::min_u() const { return t_.empty() ? 0 : ka(t_.front().first); }

int Poly2::min_v() const {
    if (t_.empty()) return 0;
    int d = kb(t_.front().first);
    for (auto& [k, c] : t_) d = std::min(d, kb(k));
    return d;
}

mpz_class Poly2::content() const {
    mpz_class g = 0;
    for (auto& [k, c] : t_) {
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
        if (g == 1) break;
    }
    return g;
}

mpz_class Poly2::max_norm() const {
    mpz_class m = 0;
    for (auto& [k, c] : t_) {
        if (mpz_cmpabs(c.get_mpz_t(), m.get_mpz_t()) > 0) m = abs(c);
    }
    return m;
}

Poly2 Poly2::operator-() const {
    Poly2 r = *this;
    for (auto& [k, c] : r.t_) c = -c;
    return r;
}

namespace {

template <bool Sub>
std::vector<Poly2::Term> merge(const std::vector<Poly2::Term>& a,
                               const std::vector<Poly2::Term>& b) {
    std::vector<Poly2::Term> r;
    r.reserve(a.size() + b.size());
    std::size_t i = 0, j = 0;
    while (i < a.size() || j < b.size()) {
        if (j == b.size() || (i < a.size() && a[i].first < b[j].first)) {
            r.push_back(a[i++]);
        } else if (i == a.size() || b[j].first < a[i].first) {
            if constexpr (Sub) {
                r.emplace_back(b[j].first, -b[j].second);
            } else {
                r.push_back(b[j]);
            }
            ++j;
        } else {
            mpz_class c = Sub ? mpz_class(a[i].second - b[j].second)
                              : mpz_class(a[i].second + b[j].second);
            if (c != 0) r.emplace_back(a[i].first, std::move(c));
            ++i;
            ++j;
        }
    }
    return r;
}

}  // namespace

Poly2& Poly2::operator+=(const Poly2& o) {
    if (o.t_.empty()) return *this;
    if (t_.empty()) return *this = o;
    t_ = merge<false>(t_, o.t_);
    return *this;
}

Poly2& Poly2::operator-=(const Poly2& o) {
    if (o.t_.empty()) return *this;
    t_ = merge<true>(t_, o.t_);
    return *this;
}

Poly2& Poly2::operator*=(const mpz_class& c) {
    if (c == 0) {
        t_.clear();
        return *this;
    }
    for (auto& [k, x] : t_) x *= c;
    return *this;
}

Poly2 operator*(const Poly2& a, const Poly2& b) {
    if (a.t_.empty() || b.t_.empty()) return {};
    if (a.t_.size() == 1 && a.t_[0].first == 0) return b * a.t_[0].second;
    if (b.t_.size() == 1 && b.t_[0].first == 0) return a * b.t_[0].second;
    const auto& s = a.t_.size() <= b.t_.size() ? a.t_ : b.t_;
    const auto& l = a.t_.size() <= b.t_.size() ? b.t_ : a.t_;
    if (s.size() == 1) {
        Poly2 r;
        r.t_.reserve(l.size());
        for (auto& [k, c] : l) r.t_.emplace_back(k + s[0].first, c * s[0].second);
        return r;
    }
    // Accumulate row by row into a keyed map; rows are already sorted.
    std::map<Poly2::Key, mpz_class> acc;
    mpz_class tmp;
    for (auto& [ks, cs] : s) {
        auto hint = acc.begin();
        for (auto& [kl, cl] : l) {
            Poly2::Key k = ks + kl;
            hint = acc.try_emplace(hint, k);
            mpz_addmul(hint->second.get_mpz_t(), cs.get_mpz_t(), cl.get_mpz_t());
        }
    }
    Poly2 r;
    r.t_.reserve(acc.size());
    for (auto& [k, c] : acc)
        if (c != 0) r.t_.emplace_back(k, std::move(c));
    return r;
}

Poly2 Poly2::div_exact(const mpz_class& c) const {
    Poly2 r = *this;
    for (auto& [k, x] : r.t_) mpz_divexact(x.get_mpz_t(), x.get_mpz_t(), c.get_mpz_t());
    return r;
}

Poly2 Poly2::shift(int a, int b) const {
    if (a == 0 && b == 0) return *this;
    Poly2 r = *this;
    Key d = key(a, b);
    for (auto& [k, x] : r.t_) k -= d;
    return r;
}

bool Poly2::divides_into(const Poly2& g, Poly2& q) const {
    if (g.is_zero()) throw std::domain_error("division by zero in coefficient field");
    q = Poly2();
    if (is_zero()) return true;
    if (g.t_.size() == 1) {
        const auto& [kg, cg] = g.t_[0];
        int ga = ka(kg), gb = kb(kg);
        Poly2 r;
        r.t_.reserve(t_.size());
        for (auto& [k, c] : t_) {
            if (ka(k) < ga || kb(k) < gb) return false;
            if (!mpz_divisible_p(c.get_mpz_t(), cg.get_mpz_t())) return false;
            mpz_class x;
            mpz_divexact(x.get_mpz_t(), c.get_mpz_t(), cg.get_mpz_t());
            r.t_.emplace_back(k - kg, std::move(x));
        }
        q = std::move(r);
        return true;
    }
    const auto& [klg, clg] = g.t_.back();
    int la = ka(klg), lb = kb(klg);
    if (deg_u() < la) return false;
    // Trailing terms must also divide.
    {
        const auto& [k0, c0] = t_.front();
        const auto& [kg0, cg0] = g.t_.front();
        if (ka(k0) < ka(kg0) || kb(k0) < kb(kg0)) return false;
        if (!mpz_divisible_p(c0.get_mpz_t(), cg0.get_mpz_t())) return false;
    }
    std::map<Key, mpz_class> rem;
    for (auto& [k, c] : t_) rem.emplace_hint(rem.end(), k, c);
    std::vector<Term> qt;
    mpz_class qc;
    while (!rem.empty()) {
        auto it = std::prev(rem.end());
        Key k = it->first;
        int a = ka(k), b = kb(k);
        if (a < la || b < lb) return false;
        if (!mpz_divisible_p(it->second.get_mpz_t(), clg.get_mpz_t())) return false;
        mpz_divexact(qc.get_mpz_t(), it->second.get_mpz_t(), clg.get_mpz_t());
        Key kq = k - klg;
        rem.erase(it);
        for (std::size_t i = 0; i + 1 < g.t_.size(); ++i) {
            Key kk = kq + g.t_[i].first;
            auto [jt, ins] = rem.try_emplace(kk);
            mpz_submul(jt->second.get_mpz_t(), qc.get_mpz_t(), g.t_[i].second.get_mpz_t());
            if (jt->second == 0) rem.erase(jt);
        }
        qt.emplace_back(kq, qc);
    }
    std::reverse(qt.begin(), qt.end());
    q.t_ = std::move(qt);
    return true;
}

Poly2 Poly2::exact_div(const Poly2& g) const {
    Poly2 q;
    if (!divides_into(g, q)) throw std::logic_error("Poly2: inexact division");
    return q;
}

Poly2 Poly2::eval_v(const mpz_class& x) const {
    std::vector<Term> r;
    mpz_class p;
    for (auto& [k, c] : t_) {
        mpz_pow_ui(p.get_mpz_t(), x.get_mpz_t(), static_cast<unsigned long>(kb(k)));
        r.emplace_back(key(ka(k), 0), c * p);
    }
    return from_terms(std::move(r));
}

mpz_class Poly2::eval(const mpz_class& x, const mpz_class& y) const {
    mpz_class s = 0, p, q;
    for (auto& [k, c] : t_) {
        mpz_pow_ui(p.get_mpz_t(), x.get_mpz_t(), static_cast<unsigned long>(ka(k)));
        mpz_pow_ui(q.get_mpz_t(), y.get_mpz_t(), static_cast<unsigned long>(kb(k)));
        s += c * p * q;
    }
    return s;
}

Poly2 Poly2::v_part(int b) const {
    Poly2 r;
    for (auto& [k, c] : t_)
        if (kb(k) == b) r.t_.emplace_back(key(ka(k), 0), c);
    return r;
}

Poly2 Poly2::at_v1() const {
    std::vector<Term> r;
    for (auto& [k, c] : t_) r.emplace_back(key(ka(k), 0), c);
    return from_terms(std::move(r));
}

Poly2 Poly2::reverse_u(int n) const {
    std::vector<Term> r;
    for (auto& [k, c] : t_) r.emplace_back(key(n - ka(k), kb(k)), c);
    return from_terms(std::move(r));
}

Poly2 Poly2::reverse_v(int n) const {
    std::vector<Term> r;
    for (auto& [k, c] : t_) r.emplace_back(key(ka(k), n - kb(k)), c);
    return from_terms(std::move(r));
}

Poly2 Poly2::scale_exponents(int ru, int rv, bool down) const {
    std::vector<Term> r;
    for (auto& [k, c] : t_) {
        int a = ka(k), b = kb(k);
        if (down) {
            a /= ru;
            b /= rv;
        } else {
            a *= ru;
            b *= rv;
        }
        r.emplace_back(key(a, b), c);
    }
    return from_terms(std::move(r));
}

Poly2 Poly2::swap_uv() const {
    std::vector<Term> r;
    for (auto& [k, c] : t_) r.emplace_back(key(kb(k), ka(k)), c);
    return from_terms(std::move(r));
}

std::string Poly2::str() const {
    if (t_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (auto& [k, c] : t_) {
        int a = ka(k), b = kb(k);
        if (!first) os << (c < 0 ? "-" : "+");
        else if (c < 0) os << "-";
        first = false;
        mpz_class m = abs(c);
        bool unit = (m == 1) && (a != 0 || b != 0);
        if (!unit) os << m.get_str();
        if (a != 0) {
            if (!unit) os << "*";
            os << "u";
            if (a != 1) os << "^" << a;
        }
        if (b != 0) {
            if (!unit || a != 0) os << "*";
            os << "v";
            if (b != 1) os << "^" << b;
        }
    }
    return os.str();
}

// ---------------------------------------------------------------- gcd

namespace {

Poly2 normalize_sign(Poly2 p) {
    if (!p.is_zero() && p.lc() < 0) p = -p;
    return p;
}

Poly2 primitive(const Poly2& p) {
    if (p.is_zero()) return p;
    mpz_class c = p.content();
    if (p.lc() < 0) c = -c;
    return c == 1 ? p : p.div_exact(c);
}

// Polynomials at "level 1" involve only u; at "level 2" both u and v.
bool has_v(const Poly2& p) {
    for (auto& [k, c] : p.terms())
        if (Poly2::kb(k) != 0) return true;
    return false;
}

mpz_class symmod(const mpz_class& x, const mpz_class& m) {
    mpz_class r;
    mpz_fdiv_r(r.get_mpz_t(), x.get_mpz_t(), m.get_mpz_t());
    if (2 * r > m) r -= m;
    return r;
}

// xi-adic reconstruction of an integer into a polynomial in u (level 1).
Poly2 lift_int(mpz_class h, const mpz_class& xi) {
    std::vector<Poly2::Term> t;
    int i = 0;
    while (h != 0) {
        mpz_class g = symmod(h, xi);
        if (g != 0) t.emplace_back(Poly2::key(i, 0), g);
        h -= g;
        mpz_divexact(h.get_mpz_t(), h.get_mpz_t(), xi.get_mpz_t());
        ++i;
        if (i > 100000) break;
    }
    return Poly2::from_terms(std::move(t));
}

// xi-adic reconstruction of a u-polynomial into a polynomial in u, v.
Poly2 lift_upoly(const Poly2& h, const mpz_class& xi) {
    std::vector<Poly2::Term> t;
    for (auto& [k, c] : h.terms()) {
        int a = Poly2::ka(k);
        mpz_class x = c;
        int j = 0;
        while (x != 0) {
            mpz_class g = symmod(x, xi);
            if (g != 0) t.emplace_back(Poly2::key(a, j), g);
            x -= g;
            mpz_divexact(x.get_mpz_t(), x.get_mpz_t(), xi.get_mpz_t());
            ++j;
        }
    }
    return Poly2::from_terms(std::move(t));
}

mpz_class eval_u_int(const Poly2& p, const mpz_class& xi) {
    // Horner in u for level-1 polynomials.
    mpz_class s = 0;
    int cur = p.deg_u();
    for (auto it = p.terms().rbegin(); it != p.terms().rend(); ++it) {
        int a = Poly2::ka(it->first);
        while (cur > a) {
            s *= xi;
            --cur;
        }
        s += it->second;
    }
    while (cur > 0) {
        s *= xi;
        --cur;
    }
    return s;
}

Poly2 gcd_level(const Poly2& f, const Poly2& g, int level);

bool heuristic(const Poly2& f, const Poly2& g, int level, Poly2& out) {
    mpz_class nf = f.max_norm(), ng = g.max_norm();
    mpz_class xi = 2 * std::min(nf, ng) + 2;
    for (int attempt = 0; attempt < 6; ++attempt) {
        Poly2 G;
        if (level == 1) {
            mpz_class a = eval_u_int(f, xi), b = eval_u_int(g, xi);
            mpz_class h;
            mpz_gcd(h.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
            G = lift_int(h, xi);
        } else {
            Poly2 a = f.eval_v(xi), b = g.eval_v(xi);
            Poly2 h = gcd_level(a, b, 1);
            G = lift_upoly(h, xi);
        }
        G = primitive(G);
        Poly2 q;
        if (!G.is_zero() && f.divides_into(G, q) && g.divides_into(G, q)) {
            out = G;
            return true;
        }
        xi = (xi * 73794) / 27011;
    }
    return false;
}

// Univariate coefficient extraction in u: coefficient of u^i as a polynomial in v
// (stored in the u-slot for level-1 processing).
std::vector<Poly2> coeffs_u(const Poly2& p) {
    std::vector<std::vector<Poly2::Term>> buckets(static_cast<std::size_t>(p.deg_u() + 1));
    for (auto& [k, c] : p.terms())
        buckets[static_cast<std::size_t>(Poly2::ka(k))].emplace_back(
            Poly2::key(Poly2::kb(k), 0), c);
    std::vector<Poly2> r;
    r.reserve(buckets.size());
    for (auto& b : buckets) r.push_back(Poly2::from_terms(std::move(b)));
    return r;
}

Poly2 from_coeffs_u(const std::vector<Poly2>& cs) {
    std::vector<Poly2::Term> t;
    for (std::size_t i = 0; i < cs.size(); ++i)
        for (auto& [k, c] : cs[i].terms())
            t.emplace_back(Poly2::key(static_cast<int>(i), Poly2::ka(k)), c);
    return Poly2::from_terms(std::move(t));
}

// Primitive PRS; the fallback when the heuristic gives up.
Poly2 prs_level1(Poly2 f, Poly2 g) {
    f = primitive(f);
    g = primitive(g);
    if (f.deg_u() < g.deg_u()) std::swap(f, g);
    while (!g.is_zero()) {
        // pseudo remainder of f by g in u
        Poly2 r = f;
        mpz_class lg = g.lc();
        int dg = g.deg_u();
        while (!r.is_zero() && r.deg_u() >= dg) {
            int d = r.deg_u() - dg;
            mpz_class lr = r.lc();
            r = r * lg - Poly2::monomial(lr, d, 0) * g;
        }
        f = g;
        g = primitive(r);
        if (!g.is_zero() && g.deg_u() == 0) return Poly2(1);
    }
    return normalize_sign(primitive(f));
}

Poly2 prs_level2(const Poly2& f0, const Poly2& g0) {
    // Coefficients in Z[v] (stored as level-1 polynomials).
    auto content_v = [](const std::vector<Poly2>& cs) {
        Poly2 c;
        for (auto& x : cs) {
            if (x.is_zero()) continue;
            c = c.is_zero() ? normalize_sign(x) : gcd_level(c, x, 1);
            if (c.is_one()) break;
        }
        return normalize_sign(c);
    };
    auto pp = [&](const std::vector<Poly2>& cs, Poly2& cont) {
        cont = content_v(cs);
        std::vector<Poly2> r;
        for (auto& x : cs) r.push_back(x.exact_div(cont));
        return r;
    };
    auto trim = [](std::vector<Poly2>& cs) {
        while (!cs.empty() && cs.back().is_zero()) cs.pop_back();
    };
    Poly2 cf, cg;
    auto F = pp(coeffs_u(f0), cf);
    auto G = pp(coeffs_u(g0), cg);
    Poly2 c = gcd_level(cf, cg, 1);
    trim(F);
    trim(G);
    if (F.size() < G.size()) std::swap(F, G);
    while (!G.empty()) {
        if (G.size() == 1) {
            F = {Poly2(1)};
            break;
        }
        std::vector<Poly2> R = F;
        while (R.size() >= G.size()) {
            Poly2 lr = R.back();
            std::size_t d = R.size() - G.size();
            for (auto& x : R) x = x * G.back();
            for (std::size_t i = 0; i < G.size(); ++i) R[i + d] -= lr * G[i];
            trim(R);
        }
        F = G;
        if (R.empty()) {
            G.clear();
        } else {
            Poly2 cr;
            G = pp(R, cr);
        }
    }
    Poly2 res = from_coeffs_u(F);
    res = primitive(res);
    // content in v as a polynomial in v
    std::vector<Poly2::Term> t;
    for (auto& [k, x] : c.terms()) t.emplace_back(Poly2::key(0, Poly2::ka(k)), x);
    Poly2 cv = Poly2::from_terms(std::move(t));
    return normalize_sign(res * cv);
}

Poly2 gcd_level(const Poly2& f, const Poly2& g, int level) {
    if (f.is_zero()) return normalize_sign(g);
    if (g.is_zero()) return normalize_sign(f);
    int mu = std::min(f.min_u(), g.min_u());
    int mv = std::min(f.min_v(), g.min_v());
    Poly2 F = f.shift(f.min_u(), f.min_v());
    Poly2 G = g.shift(g.min_u(), g.min_v());
    mpz_class cf = F.content(), cg = G.content(), c;
    mpz_gcd(c.get_mpz_t(), cf.get_mpz_t(), cg.get_mpz_t());
    Poly2 mono = Poly2::monomial(c, mu, mv);
    if (F.is_constant() || G.is_constant()) return mono;
    F = F.div_exact(cf);
    G = G.div_exact(cg);
    if (F == G || F == -G) return normalize_sign(mono * F);
    // Compress exponent lattices.
    int ru = 0, rv = 0;
    for (const Poly2* p : {&F, &G})
        for (auto& [k, x] : p->terms()) {
            ru = std::gcd(ru, Poly2::ka(k));
            rv = std::gcd(rv, Poly2::kb(k));
        }
    if (ru == 0) ru = 1;
    if (rv == 0) rv = 1;
    if (ru > 1 || rv > 1) {
        Poly2 r = gcd_level(F.scale_exponents(ru, rv, true), G.scale_exponents(ru, rv, true), level);
        return normalize_sign(mono * r.scale_exponents(ru, rv, false));
    }
    bool fv = has_v(F), gv = has_v(G);
    int lev = level;
    if (lev == 2 && !fv && !gv) lev = 1;
    if (lev == 2 && F.deg_u() == 0 && G.deg_u() == 0) {
        // both purely in v: swap roles
        Poly2 r = gcd_level(F.swap_uv(), G.swap_uv(), 1);
        return normalize_sign(mono * r.swap_uv());
    }
    if (lev == 2 && (!fv || !gv)) {
        // One side free of v: the gcd divides every v-coefficient.
        const Poly2& h = fv ? F : G;
        Poly2 acc = fv ? G : F;
        int dv = h.deg_v();
        for (int b = 0; b <= dv && !acc.is_one(); ++b) {
            Poly2 part = h.v_part(b);
            if (!part.is_zero()) acc = gcd_level(acc, part, 1);
        }
        return normalize_sign(mono * acc);
    }
    Poly2 out;
    if (heuristic(F, G, lev, out)) return normalize_sign(mono * out);
    Poly2 r = lev == 1 ? prs_level1(F, G) : prs_level2(F, G);
    return normalize_sign(mono * r);
}

}  // namespace

Poly2 gcd(const Poly2& f, const Poly2& g) { return gcd_level(f, g, 2); }

}  // namespace hecke
