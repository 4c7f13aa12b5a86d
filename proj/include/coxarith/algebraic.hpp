#pragma once

#include <functional>
#include <string>
#include <utility>
#include <vector>

#include "coxarith/polynomial.hpp"
#include "coxarith/roots.hpp"

namespace coxarith {

/* Real algebraic number: monic irreducible minimal polynomial over Q plus an
 * open isolating interval with rational endpoints. Rationals use the linear
 * minimal polynomial and the interval (r - 1, r + 1). */
class AlgebraicReal {
public:
    AlgebraicReal() : AlgebraicReal(Rational(0)) {}
    AlgebraicReal(const Rational& r);
    AlgebraicReal(long v) : AlgebraicReal(Rational(v)) {}

    /* Root of p (any nonzero polynomial) isolated by (lo, hi). */
    static AlgebraicReal from_root(const Polynomial& p, const Rational& lo, const Rational& hi);
    /* Root of a monic irreducible polynomial in an isolating interval; not rechecked. */
    static AlgebraicReal from_irreducible(const Polynomial& monic_irreducible, const RootInterval& iv);
    /* Distinct real roots of p in increasing order. */
    static std::vector<AlgebraicReal> real_roots(const Polynomial& p);

    const Polynomial& minpoly() const { return minpoly_; }
    int degree() const { return minpoly_.degree(); }
    bool is_rational() const { return degree() == 1; }
    Rational rational_value() const;
    const Rational& lo() const { return iv_.lo; }
    const Rational& hi() const { return iv_.hi; }
    void refine(const Rational& width) const;
    /* Rational within eps of the value. */
    Rational approx(const Rational& eps) const;

    int sign() const;
    AlgebraicReal operator-() const;
    AlgebraicReal inverse() const;
    friend AlgebraicReal operator+(const AlgebraicReal& a, const AlgebraicReal& b);
    friend AlgebraicReal operator-(const AlgebraicReal& a, const AlgebraicReal& b) { return a + (-b); }
    friend AlgebraicReal operator*(const AlgebraicReal& a, const AlgebraicReal& b);
    friend AlgebraicReal operator/(const AlgebraicReal& a, const AlgebraicReal& b) { return a * b.inverse(); }

    friend int compare(const AlgebraicReal& a, const AlgebraicReal& b);
    friend bool operator==(const AlgebraicReal& a, const AlgebraicReal& b) { return compare(a, b) == 0; }
    friend bool operator!=(const AlgebraicReal& a, const AlgebraicReal& b) { return compare(a, b) != 0; }
    friend bool operator<(const AlgebraicReal& a, const AlgebraicReal& b) { return compare(a, b) < 0; }
    friend bool operator>(const AlgebraicReal& a, const AlgebraicReal& b) { return compare(a, b) > 0; }
    friend bool operator<=(const AlgebraicReal& a, const AlgebraicReal& b) { return compare(a, b) <= 0; }
    friend bool operator>=(const AlgebraicReal& a, const AlgebraicReal& b) { return compare(a, b) >= 0; }

    /* Rounded decimal expansion. */
    std::string to_decimal(int digits) const;
    /* "minpoly=[c0,...,cn]; interval=(lo, hi)" with integer coefficients. */
    std::string serialize() const;
    static AlgebraicReal parse(const std::string& s);

private:
    AlgebraicReal(Polynomial minpoly, RootInterval iv);
    Polynomial minpoly_;
    mutable RootInterval iv_;
};

/* The root of candidate inside the closed enclosure returned for some
 * iteration; enclosures must shrink to the value. */
AlgebraicReal identify_root(const Polynomial& candidate,
                            const std::function<std::pair<Rational, Rational>(int)>& enclosure);

AlgebraicReal sqrt_nonneg(const AlgebraicReal& a);
/* 2cos(p*pi/q) */
AlgebraicReal two_cos_pi(long p, long q);
inline AlgebraicReal two_cos_pi_over(long m) { return two_cos_pi(1, m); }
AlgebraicReal cos_pi(long p, long q);

bool is_algebraic_integer(const AlgebraicReal& a);
bool is_totally_real(const AlgebraicReal& a);

}  // namespace coxarith
