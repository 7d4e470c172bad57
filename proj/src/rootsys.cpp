#include "hecke/rootsys.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <set>
#include <stdexcept>

namespace hecke::rootsys {

Type parse_type(const std::string& tag) {
    if (tag == "A1" || tag == "a1") return Type::A1;
    if (tag == "A2" || tag == "a2") return Type::A2;
    throw std::invalid_argument("unsupported root system: " + tag);
}

std::string type_name(Type t) { return t == Type::A1 ? "A1" : "A2"; }

namespace {

Mat mat_mul(const Mat& a, const Mat& b) {
    return {a[0] * b[0] + a[1] * b[2], a[0] * b[1] + a[1] * b[3],
            a[2] * b[0] + a[3] * b[2], a[2] * b[1] + a[3] * b[3]};
}

RootSystem build(Type t) {
    RootSystem R;
    R.type = t;
    if (t == Type::A1) {
        R.rank = 1;
        R.denom = 2;
        R.gram = {1, 0, 0, 0};
        R.simple = {{2, 0}};
        R.positive = {{2, 0}};
        R.rho = {1, 0};
        R.theta = {2, 0};
        R.pi_size = 2;
        R.hdual = 2;
        R.degrees = {2};
    } else {
        R.rank = 2;
        R.denom = 3;
        R.gram = {2, 1, 1, 2};
        R.simple = {{2, -1}, {-1, 2}};
        R.positive = {{2, -1}, {-1, 2}, {1, 1}};
        R.rho = {1, 1};
        R.theta = {1, 1};
        R.pi_size = 3;
        R.hdual = 3;
        R.degrees = {2, 3};
    }
    // Weyl group by breadth-first search on left multiplication.
    Mat id = t == Type::A1 ? Mat{1, 0, 0, 0} : Mat{1, 0, 0, 1};
    R.weyl.push_back({id, {}});
    for (std::size_t k = 0; k < R.weyl.size(); ++k) {
        for (int i = 1; i <= R.rank; ++i) {
            // matrix of s_i: columns are images of omega_j
            Mat si{};
            for (int j = 0; j < R.rank; ++j) {
                Vec e{0, 0};
                e[static_cast<std::size_t>(j)] = 1;
                Vec img = R.reflect(i, e);
                si[static_cast<std::size_t>(j)] = img[0];
                si[static_cast<std::size_t>(2 + j)] = img[1];
            }
            Mat m = mat_mul(si, R.weyl[k].m);
            bool seen = std::any_of(R.weyl.begin(), R.weyl.end(),
                                    [&](const WeylElt& w) { return w.m == m; });
            if (!seen) {
                WeylElt w{m, R.weyl[k].word};
                w.word.insert(w.word.begin(), i);
                R.weyl.push_back(std::move(w));
            }
        }
    }
    return R;
}

}  // namespace

const RootSystem& RootSystem::get(Type t) {
    static const RootSystem a1 = build(Type::A1);
    static const RootSystem a2 = build(Type::A2);
    return t == Type::A1 ? a1 : a2;
}

int RootSystem::pair_scaled(const Vec& x, const Vec& y) const {
    return x[0] * (gram[0] * y[0] + gram[1] * y[1]) + x[1] * (gram[2] * y[0] + gram[3] * y[1]);
}

int RootSystem::pair_root(const Vec& root, const Vec& x) const {
    int s = pair_scaled(root, x);
    if (s % denom != 0) throw std::logic_error("pair_root: argument is not a root");
    return s / denom;
}

mpq_class RootSystem::pair(const Vec& x, const Vec& y) const {
    mpq_class r(pair_scaled(x, y), denom);
    r.canonicalize();
    return r;
}

bool RootSystem::is_positive_root(const Vec& a) const {
    if (rank == 1) return a[0] > 0;
    // coordinates in the simple-root basis, times 3
    int c1 = 2 * a[0] + a[1], c2 = a[0] + 2 * a[1];
    return c1 >= 0 && c2 >= 0 && (c1 > 0 || c2 > 0);
}

Vec RootSystem::reflect(int i, const Vec& v) const {
    const Vec& a = simple[static_cast<std::size_t>(i - 1)];
    int c = v[static_cast<std::size_t>(i - 1)];  // (v, alpha_i^vee)
    return {v[0] - c * a[0], v[1] - c * a[1]};
}

int RootSystem::weyl_index(const Mat& m) const {
    for (std::size_t k = 0; k < weyl.size(); ++k)
        if (weyl[k].m == m) return static_cast<int>(k);
    throw std::logic_error("not a Weyl group element");
}

Vec RootSystem::omega(int r) const {
    Vec v{0, 0};
    v[static_cast<std::size_t>(r - 1)] = 1;
    return v;
}

std::vector<Vec> RootSystem::roots() const {
    std::vector<Vec> r = positive;
    for (auto& a : positive) r.push_back({-a[0], -a[1]});
    return r;
}

bool is_positive(const RootSystem& R, const AffineRoot& a) {
    return a.j > 0 || (a.j == 0 && R.is_positive_root(a.alpha));
}

AffWeylElt identity() { return {}; }

AffWeylElt translation(const Vec& b) { return {b, 0}; }

AffWeylElt simple_reflection(const RootSystem& R, int i) {
    if (i < 0 || i > R.rank) throw std::invalid_argument("simple reflection index out of range");
    if (i > 0) return {{0, 0}, R.weyl_index(R.weyl[static_cast<std::size_t>(i)].m)};
    // s_theta
    Vec th = R.theta;
    Mat m{};
    for (int j = 0; j < R.rank; ++j) {
        Vec e{0, 0};
        e[static_cast<std::size_t>(j)] = 1;
        int c = R.pair_root(th, e);
        Vec img{e[0] - c * th[0], e[1] - c * th[1]};
        m[static_cast<std::size_t>(j)] = img[0];
        m[static_cast<std::size_t>(2 + j)] = img[1];
    }
    return {th, R.weyl_index(m)};
}

const WeylElt& u_element(const RootSystem& R, int r) {
    if (r < 1 || r > R.rank) throw std::invalid_argument("u_r index out of range");
    const WeylElt* best = nullptr;
    for (auto& w : R.weyl) {
        Vec img = w.act(R.omega(r));
        bool anti = img[0] <= 0 && (R.rank == 1 || img[1] <= 0);
        if (anti && (!best || w.length() < best->length())) best = &w;
    }
    return *best;
}

AffWeylElt pi_element(const RootSystem& R, int r) {
    if (r == 0) return identity();
    const WeylElt& u = u_element(R, r);
    return compose(R, translation(R.omega(r)), inverse(R, {{0, 0}, R.weyl_index(u.m)}));
}

AffWeylElt compose(const RootSystem& R, const AffWeylElt& x, const AffWeylElt& y) {
    const WeylElt& w1 = R.weyl[static_cast<std::size_t>(x.w)];
    Vec wb = w1.act(y.b);
    Mat m = mat_mul(w1.m, R.weyl[static_cast<std::size_t>(y.w)].m);
    if (R.rank == 1) m = {m[0], 0, 0, 0};
    return {{x.b[0] + wb[0], x.b[1] + wb[1]}, R.weyl_index(m)};
}

AffWeylElt inverse(const RootSystem& R, const AffWeylElt& x) {
    const Mat& m = R.weyl[static_cast<std::size_t>(x.w)].m;
    int wi = -1;
    for (std::size_t k = 0; k < R.weyl.size(); ++k) {
        Mat p = mat_mul(R.weyl[k].m, m);
        if (R.rank == 1) p = {p[0], 0, 0, 0};
        if (p == R.weyl[0].m) wi = static_cast<int>(k);
    }
    Vec b = R.weyl[static_cast<std::size_t>(wi)].act(x.b);
    return {{-b[0], -b[1]}, wi};
}

AffineRoot act(const RootSystem& R, const AffWeylElt& x, const AffineRoot& a) {
    Vec wa = R.weyl[static_cast<std::size_t>(x.w)].act(a.alpha);
    return {wa, a.j - R.pair_root(wa, x.b)};
}

Vec act_weight(const RootSystem& R, const AffWeylElt& x, const Vec& v) {
    Vec wv = R.weyl[static_cast<std::size_t>(x.w)].act(v);
    return {wv[0] + x.b[0], wv[1] + x.b[1]};
}

int length(const RootSystem& R, const AffWeylElt& x) {
    const WeylElt& w = R.weyl[static_cast<std::size_t>(x.w)];
    int l = 0;
    for (auto& a : R.roots()) {
        Vec wa = w.act(a);
        int c = R.pair_root(wa, x.b);
        int j0 = R.is_positive_root(a) ? 0 : 1;
        // j >= j0 with j < c, or j == c and w a < 0
        l += std::max(0, c - j0);
        if (c >= j0 && !R.is_positive_root(wa)) ++l;
    }
    return l;
}

std::vector<AffineRoot> lambda_set(const RootSystem& R, const AffWeylElt& x) {
    std::vector<AffineRoot> out;
    const WeylElt& w = R.weyl[static_cast<std::size_t>(x.w)];
    for (auto& a : R.roots()) {
        Vec wa = w.act(a);
        int c = R.pair_root(wa, x.b);
        int j0 = R.is_positive_root(a) ? 0 : 1;
        for (int j = j0; j <= c; ++j) {
            AffineRoot ar{a, j};
            if (!is_positive(R, act(R, x, ar))) out.push_back(ar);
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

int pi_index(const RootSystem& R, const AffWeylElt& x) {
    for (int r = 0; r <= R.rank; ++r)
        if (pi_element(R, r) == x) return r;
    return -1;
}

ReducedWord reduced_word(const RootSystem& R, const AffWeylElt& x) {
    ReducedWord rw;
    AffWeylElt cur = x;
    int l = length(R, cur);
    std::vector<int> rev;
    while (l > 0) {
        bool found = false;
        for (int i = 0; i <= R.rank && !found; ++i) {
            AffWeylElt y = compose(R, cur, simple_reflection(R, i));
            int ly = length(R, y);
            if (ly < l) {
                rev.push_back(i);
                cur = y;
                l = ly;
                found = true;
            }
        }
        if (!found) throw std::logic_error("reduced_word: no descent");
    }
    rw.pi = pi_index(R, cur);
    if (rw.pi < 0) throw std::logic_error("reduced_word: length-zero element is not a pi_r");
    rw.word.assign(rev.rbegin(), rev.rend());
    return rw;
}

std::vector<AffWeylElt> elements(const RootSystem& R, int bound) {
    std::vector<AffWeylElt> out;
    for (int b1 = -bound; b1 <= bound; ++b1) {
        int lo = R.rank == 1 ? 0 : -bound, hi = R.rank == 1 ? 0 : bound;
        for (int b2 = lo; b2 <= hi; ++b2) {
            Vec b{b1, b2};
            bool ok = true;
            for (auto& a : R.positive) ok = ok && std::abs(R.pair_root(a, b)) <= bound;
            if (!ok) continue;
            for (std::size_t w = 0; w < R.weyl.size(); ++w) out.push_back({b, static_cast<int>(w)});
        }
    }
    return out;
}

std::map<int, long> enumerate_by_length(const RootSystem& R, int L) {
    if (L < 0 || L > 40) throw std::invalid_argument("enumerate_by_length: 0 <= L <= 40");
    std::map<int, long> counts;
    for (int l = 0; l <= L; ++l) counts[l] = 0;
    for (auto& x : elements(R, L + 1)) {
        int l = length(R, x);
        if (l <= L) ++counts[l];
    }
    return counts;
}

Scalar affine_poincare_rational(const RootSystem& R) {
    Scalar one(1), t = Scalar::t(1);
    Scalar r = Scalar(R.pi_size) / (one - t).pow(R.rank);
    for (int d : R.degrees) r *= (one - Scalar::t(d)) / (one - Scalar::t(d - 1));
    return r;
}

std::vector<mpz_class> t_series(const Scalar& s, int order) {
    auto coeffs = [](const Poly2& p) {
        std::vector<mpz_class> c;
        for (auto& [k, x] : p.terms()) {
            if (Poly2::ka(k) != 0) throw std::invalid_argument("t_series: q-dependent input");
            int b = Poly2::kb(k);
            if (b % 2) throw std::invalid_argument("t_series: odd power of t^{1/2}");
            std::size_t e = static_cast<std::size_t>(b / 2);
            if (c.size() <= e) c.resize(e + 1);
            c[e] = x;
        }
        return c;
    };
    std::vector<mpz_class> n = coeffs(s.num()), d = coeffs(s.den());
    if (d.empty() || (d[0] != 1 && d[0] != -1))
        throw std::invalid_argument("t_series: denominator needs a unit constant term");
    std::vector<mpz_class> r(static_cast<std::size_t>(order + 1));
    for (std::size_t k = 0; k < r.size(); ++k) {
        mpz_class acc = k < n.size() ? n[k] : mpz_class(0);
        for (std::size_t j = 1; j < d.size() && j <= k; ++j) acc -= d[j] * r[k - j];
        r[k] = acc * d[0];  // d[0] = +-1
    }
    return r;
}

bool rho_hat_relation(const RootSystem& R, const AffWeylElt& x) {
    Vec sa{0, 0};
    mpq_class sj = 0;
    for (auto& a : lambda_set(R, inverse(R, x))) {
        sa[0] += a.alpha[0];
        sa[1] += a.alpha[1];
        sj += a.j;
    }
    const WeylElt& w = R.weyl[static_cast<std::size_t>(x.w)];
    Vec wr = w.act(R.rho);
    int h = R.hdual;
    Vec fin{R.rho[0] - wr[0] - h * x.b[0], R.rho[1] - wr[1] - h * x.b[1]};
    mpq_class delta = R.pair(wr, x.b) + mpq_class(h) * R.pair(x.b, x.b) / 2;
    return fin == sa && delta == sj;
}

int looijenga_dim(const RootSystem& R, int l) {
    if (l <= 0) throw std::invalid_argument("looijenga_dim: level must be positive");
    if (R.type == Type::A1) return 1 + l / 2;
    int delta = l % 3 == 0 ? 2 : 0;
    return ((l + 2) * (l + 1) / 2 + delta) / 3;
}

std::vector<Vec> alcove(const RootSystem& R, int l) {
    std::vector<Vec> out;
    for (int b1 = 0; b1 <= l; ++b1) {
        int hi = R.rank == 1 ? 0 : l - b1;
        for (int b2 = 0; b2 <= hi; ++b2) out.push_back({b1, b2});
    }
    return out;
}

Vec pi_action(const RootSystem& R, int r, int l, const Vec& b) {
    const WeylElt& u = u_element(R, r);
    // u^{-1}
    const WeylElt* ui = nullptr;
    for (auto& w : R.weyl) {
        Vec e1 = w.act(u.act({1, 0}));
        Vec e2 = w.act(u.act({0, 1}));
        bool id = e1 == Vec{1, 0} && (R.rank == 1 || e2 == Vec{0, 1});
        if (id) ui = &w;
    }
    Vec img = ui->act(b);
    Vec om = R.omega(r);
    return {img[0] + l * om[0], img[1] + l * om[1]};
}

CoinvariantReport coinvariant_dim(const RootSystem& R, int l) {
    CoinvariantReport rep;
    rep.dim = looijenga_dim(R, l);
    std::vector<Vec> C = alcove(R, l);
    std::map<Vec, int> idx;
    for (std::size_t i = 0; i < C.size(); ++i) idx[C[i]] = static_cast<int>(i);
    std::vector<int> parent(C.size());
    std::iota(parent.begin(), parent.end(), 0);
    std::function<int(int)> find = [&](int i) {
        return parent[static_cast<std::size_t>(i)] == i
                   ? i
                   : parent[static_cast<std::size_t>(i)] = find(parent[static_cast<std::size_t>(i)]);
    };
    for (int r = 1; r <= R.rank; ++r) {
        for (std::size_t i = 0; i < C.size(); ++i) {
            auto it = idx.find(pi_action(R, r, l, C[i]));
            if (it == idx.end()) {
                rep.closed = false;
                continue;
            }
            parent[static_cast<std::size_t>(find(static_cast<int>(i)))] = find(it->second);
        }
    }
    std::set<int> roots;
    for (std::size_t i = 0; i < C.size(); ++i) roots.insert(find(static_cast<int>(i)));
    rep.orbits = static_cast<int>(roots.size());
    return rep;
}

}  // namespace hecke::rootsys
