// Sparse bivariate integer polynomials in u, v with nonnegative exponents.
#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

namespace hecke {

struct Mono {
    int a = 0;  // power of u
    int b = 0;  // power of v
};

class Poly2 {
public:
    using Key = std::uint64_t;
    using Term = std::pair<Key, mpz_class>;

    Poly2() = default;
    Poly2(long c);  // NOLINT
    Poly2(const mpz_class& c);  // NOLINT
    static Poly2 monomial(const mpz_class& c, int a, int b);
    static Poly2 u(int a = 1) { return monomial(1, a, 0); }
    static Poly2 v(int b = 1) { return monomial(1, 0, b); }

    static Key key(int a, int b) {
        return (static_cast<Key>(static_cast<std::uint32_t>(a)) << 32) |
               static_cast<std::uint32_t>(b);
    }
    static int ka(Key k) { return static_cast<int>(k >> 32); }
    static int kb(Key k) { return static_cast<int>(k & 0xffffffffu); }

    bool is_zero() const { return t_.empty(); }
    bool is_one() const;
    bool is_constant() const { return t_.empty() || (t_.size() == 1 && t_[0].first == 0); }
    bool is_monomial() const { return t_.size() == 1; }
    std::size_t size() const { return t_.size(); }
    const std::vector<Term>& terms() const { return t_; }

    // Lex-leading term (highest u, then highest v).
    const Term& lead() const { return t_.back(); }
    const mpz_class& lc() const { return t_.back().second; }

    int deg_u() const;
    int deg_v() const;
    int min_u() const;
    int min_v() const;
    mpz_class content() const;
    mpz_class max_norm() const;

    Poly2 operator-() const;
    Poly2& operator+=(const Poly2& o);
    Poly2& operator-=(const Poly2& o);
    Poly2& operator*=(const mpz_class& c);
    friend Poly2 operator+(Poly2 a, const Poly2& b) { return a += b; }
    friend Poly2 operator-(Poly2 a, const Poly2& b) { return a -= b; }
    friend Poly2 operator*(const Poly2& a, const Poly2& b);
    friend Poly2 operator*(Poly2 a, const mpz_class& c) { return a *= c; }
    bool operator==(const Poly2& o) const { return t_ == o.t_; }
    bool operator!=(const Poly2& o) const { return !(*this == o); }

    // Exact quotient by integer; caller guarantees divisibility.
    Poly2 div_exact(const mpz_class& c) const;
    // Shift exponents down by (a,b); caller guarantees nonnegativity.
    Poly2 shift(int a, int b) const;
    // Exact division; returns false when g does not divide *this.
    bool divides_into(const Poly2& g, Poly2& q) const;
    Poly2 exact_div(const Poly2& g) const;

    // Substitutions.
    Poly2 eval_v(const mpz_class& x) const;             // result has only u-terms
    mpz_class eval(const mpz_class& x, const mpz_class& y) const;
    Poly2 v_part(int b) const;        // coefficient of v^b, as a polynomial in u
    Poly2 at_v1() const;              // v -> 1
    Poly2 reverse_u(int n) const;     // u^n * p(1/u)
    Poly2 reverse_v(int n) const;     // v^n * p(u, 1/v)
    Poly2 scale_exponents(int ru, int rv, bool down) const;
    Poly2 swap_uv() const;

    std::string str() const;

    // Construct from unsorted terms.
    static Poly2 from_terms(std::vector<Term> t);

private:
    std::vector<Term> t_;  // sorted by key ascending, no zeros
};

// Greatest common divisor with positive lex-leading coefficient.
Poly2 gcd(const Poly2& f, const Poly2& g);

}  // namespace hecke
