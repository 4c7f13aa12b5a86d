#pragma once

#include <initializer_list>
#include <string>
#include <utility>
#include <vector>

#include "coxarith/rational.hpp"

namespace coxarith {

/* Dense polynomial over Q. Coefficients are stored lowest degree first:
 * coeffs()[i] multiplies x^i. The zero polynomial has no coefficients. */
class Polynomial {
public:
    Polynomial() = default;
    explicit Polynomial(std::vector<Rational> coeffs);
    Polynomial(std::initializer_list<long> coeffs);
    static Polynomial constant(const Rational& c);
    static Polynomial monomial(const Rational& c, int deg);
    static Polynomial x() { return monomial(1, 1); }

    int degree() const { return int(c_.size()) - 1; }
    bool is_zero() const { return c_.empty(); }
    bool is_constant() const { return c_.size() <= 1; }
    const std::vector<Rational>& coeffs() const { return c_; }
    Rational coeff(int i) const;
    const Rational& lc() const { return c_.back(); }

    Polynomial monic() const;
    Polynomial derivative() const;
    Rational eval(const Rational& x) const;
    int sign_at(const Rational& x) const;
    /* p(q(x)) */
    Polynomial compose(const Polynomial& q) const;
    /* p(a*x) */
    Polynomial scale(const Rational& a) const;
    /* p(-x) */
    Polynomial reflect() const { return scale(-1); }
    /* x^deg * p(1/x) */
    Polynomial reverse() const;
    /* p(x^2) */
    Polynomial substitute_square() const;

    Polynomial operator-() const;
    Polynomial& operator+=(const Polynomial& o);
    Polynomial& operator-=(const Polynomial& o);
    Polynomial& operator*=(const Rational& c);
    friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
    friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
    friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
    friend Polynomial operator*(Polynomial a, const Rational& c) { return a *= c; }
    friend Polynomial operator*(const Rational& c, Polynomial a) { return a *= c; }
    friend bool operator==(const Polynomial& a, const Polynomial& b) { return a.c_ == b.c_; }

    std::string str(const std::string& var = "x") const;

private:
    void trim();
    std::vector<Rational> c_;
};

/* Euclidean division, b nonzero. */
std::pair<Polynomial, Polynomial> divmod(const Polynomial& a, const Polynomial& b);
Polynomial operator%(const Polynomial& a, const Polynomial& b);
Polynomial operator/(const Polynomial& a, const Polynomial& b);
Polynomial pow(const Polynomial& p, unsigned e);

/* Monic gcd; gcd(0, 0) = 0. */
Polynomial gcd(const Polynomial& a, const Polynomial& b);
/* s*a + t*b = g (monic gcd). */
Polynomial xgcd(const Polynomial& a, const Polynomial& b, Polynomial& s, Polynomial& t);

/* Yun's algorithm: monic squarefree factors paired with multiplicity. */
std::vector<std::pair<Polynomial, int>> squarefree_decomposition(const Polynomial& p);
Polynomial squarefree_part(const Polynomial& p);

Rational resultant(const Polynomial& a, const Polynomial& b);

/* Smallest integer multiple with content 1 and positive leading coefficient. */
std::vector<Integer> primitive_integer(const Polynomial& p);
Polynomial from_integer(const std::vector<Integer>& z);

/* Power sums s_0..s_count of the roots of monic p (Newton identities). */
std::vector<Rational> power_sums(const Polynomial& monic_p, int count);
/* Monic polynomial of degree n with the given power sums s_0..s_n. */
Polynomial from_power_sums(const std::vector<Rational>& s, int n);

/* Monic polynomials whose roots are {a+b} and {a*b} over the roots of p, q. */
Polynomial composed_sum(const Polynomial& p, const Polynomial& q);
Polynomial composed_product(const Polynomial& p, const Polynomial& q);

/* 2cos(jx) as a polynomial in 2cos(x). */
Polynomial vieta_lucas(int j);
Polynomial cyclotomic(int n);

}  // namespace coxarith
