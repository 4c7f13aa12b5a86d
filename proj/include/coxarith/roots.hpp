#pragma once

#include <vector>

#include "coxarith/polynomial.hpp"

namespace coxarith {

/* Open interval (lo, hi) holding exactly one root; endpoints are not roots. */
struct RootInterval {
    Rational lo, hi;
};

/* Sign of p at a rational point using integer arithmetic only. */
int sign_at(const std::vector<Integer>& p, const Rational& x);

/* Kept as an independent root counter. */
class SturmSequence {
public:
    explicit SturmSequence(const Polynomial& p);
    int sign_changes(const Rational& x) const;
    int sign_changes_at_infinity(int direction) const;
    /* Distinct roots in (a, b]. */
    int count_roots(const Rational& a, const Rational& b) const;
    int count_real_roots() const;

private:
    std::vector<std::vector<Integer>> seq_;
};

/* Power of two strictly above every root modulus. */
Rational cauchy_bound(const Polynomial& p);

int count_real_roots(const Polynomial& p);

/* Isolating intervals of the distinct real roots, in increasing order.
 * Descartes rule of signs with bisection on integer polynomials. */
std::vector<RootInterval> isolate_real_roots(const Polynomial& p);
/* Same inside (lo, hi); the endpoints must not be roots. */
std::vector<RootInterval> isolate_real_roots(const Polynomial& p, const Rational& lo, const Rational& hi);
/* Distinct roots in the open interval (lo, hi); endpoints must not be roots. */
int count_roots_between(const Polynomial& p, const Rational& lo, const Rational& hi);

/* Halve an isolating interval of a root of p. */
void bisect(const std::vector<Integer>& p, RootInterval& iv);
void refine(const Polynomial& p, RootInterval& iv, const Rational& width);

}  // namespace coxarith
