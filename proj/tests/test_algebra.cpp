#include <cmath>
#include <numeric>
#include <random>

#include "doctest.h"

#include "coxarith/algebraic.hpp"
#include "coxarith/factor.hpp"
#include "coxarith/polynomial.hpp"
#include "coxarith/roots.hpp"

using namespace coxarith;

namespace {

Polynomial random_poly(std::mt19937& rng, int max_deg, int bound = 9)
{
    std::uniform_int_distribution<int> deg(0, max_deg), c(-bound, bound);
    int d = deg(rng);
    std::vector<Rational> v(d + 1);
    for (auto& x : v)
        x = c(rng);
    if (v[d] == 0)
        v[d] = 1;
    return Polynomial(v);
}

Rational random_rational(std::mt19937& rng)
{
    std::uniform_int_distribution<int> n(-50, 50), d(1, 13);
    Rational r(n(rng), d(rng));
    r.canonicalize();
    return r;
}

double approx(const AlgebraicReal& a) { return a.approx(Rational(1, 1000000000)).get_d(); }

int euler_phi(int n)
{
    int r = 0;
    for (int i = 1; i <= n; ++i)
        r += std::gcd(i, n) == 1;
    return r;
}

}  // namespace

TEST_CASE("polynomial ring axioms agree with evaluation")
{
    std::mt19937 rng(20240501);
    for (int it = 0; it < 1000; ++it) {
        Polynomial a = random_poly(rng, 4), b = random_poly(rng, 4), c = random_poly(rng, 4);
        CHECK(a + b == b + a);
        CHECK(a * b == b * a);
        CHECK((a + b) + c == a + (b + c));
        CHECK((a * b) * c == a * (b * c));
        CHECK(a * (b + c) == a * b + a * c);
        CHECK((a - a).is_zero());
        Rational x = random_rational(rng);
        CHECK((a * b + c).eval(x) == a.eval(x) * b.eval(x) + c.eval(x));
        if (!b.is_zero()) {
            auto [q, r] = divmod(a, b);
            CHECK(q * b + r == a);
            CHECK(r.degree() < b.degree());
        }
    }
}

TEST_CASE("algebraic real field axioms")
{
    std::mt19937 rng(7);
    std::vector<AlgebraicReal> pool;
    while (pool.size() < 40) {
        Polynomial p = random_poly(rng, 4, 5);
        if (p.degree() < 1)
            continue;
        for (const auto& r : AlgebraicReal::real_roots(p))
            if (r.degree() <= 2)
                pool.push_back(r);
    }
    std::uniform_int_distribution<size_t> pick(0, pool.size() - 1);
    for (int it = 0; it < 1000; ++it) {
        const AlgebraicReal& a = pool[pick(rng)];
        const AlgebraicReal& b = pool[pick(rng)];
        AlgebraicReal s = a + b, p = a * b;
        CHECK(s == b + a);
        CHECK(p == b * a);
        CHECK(approx(s) == doctest::Approx(approx(a) + approx(b)).epsilon(1e-7));
        CHECK(approx(p) == doctest::Approx(approx(a) * approx(b)).epsilon(1e-7));
        CHECK((s - b) == a);
        if (a.sign() != 0)
            CHECK(p / a == b);
    }
    for (int it = 0; it < 60; ++it) {
        const AlgebraicReal& a = pool[pick(rng)];
        const AlgebraicReal& b = pool[pick(rng)];
        const AlgebraicReal& c = pool[pick(rng)];
        CHECK(a * (b + c) == a * b + a * c);
        CHECK((a + b) + c == a + (b + c));
    }
}

TEST_CASE("minimal polynomial vanishes and is irreducible")
{
    AlgebraicReal r2 = sqrt_nonneg(AlgebraicReal(2));
    AlgebraicReal r3 = sqrt_nonneg(AlgebraicReal(3));
    AlgebraicReal s = r2 + r3;
    CHECK(s.minpoly() == Polynomial({1, 0, -10, 0, 1}));
    CHECK(is_irreducible(s.minpoly()));
    CHECK(r2 * r2 == AlgebraicReal(2));
    CHECK(s.to_decimal(10) == "3.1462643699");
    CHECK(AlgebraicReal::parse(s.serialize()) == s);
}

TEST_CASE("Sturm and Descartes count the same roots")
{
    std::mt19937 rng(99);
    for (int it = 0; it < 500; ++it) {
        Polynomial p = random_poly(rng, 8, 20);
        if (p.degree() < 1)
            continue;
        SturmSequence st(squarefree_part(p));
        CHECK(st.count_real_roots() == int(isolate_real_roots(p).size()));
        Rational lo = random_rational(rng), hi = lo + 3;
        if (p.eval(lo) != 0 && p.eval(hi) != 0)
            CHECK(st.count_roots(lo, hi) == count_roots_between(p, lo, hi));
    }
}

TEST_CASE("isolating intervals are disjoint and each holds a sign change")
{
    Polynomial w = Polynomial({-1, 1}) * Polynomial({-2, 1}) * Polynomial({-3, 1}) * Polynomial({-4, 1}) *
                   Polynomial({-5, 1}) + Polynomial({1});
    auto iv = isolate_real_roots(w);
    REQUIRE(iv.size() == 5);
    for (size_t i = 0; i < iv.size(); ++i) {
        CHECK(w.sign_at(iv[i].lo) * w.sign_at(iv[i].hi) < 0);
        if (i)
            CHECK(iv[i - 1].hi <= iv[i].lo);
    }
}

TEST_CASE("factorization multiplies back")
{
    std::mt19937 rng(3);
    for (int it = 0; it < 100; ++it) {
        Polynomial a = random_poly(rng, 4, 6), b = random_poly(rng, 4, 6);
        if (a.degree() < 1 || b.degree() < 1)
            continue;
        Polynomial p = (a * b).monic();
        Polynomial back = Polynomial({1});
        for (const auto& [f, e] : factor(p)) {
            CHECK(is_irreducible(f));
            back = back * pow(f, unsigned(e));
        }
        CHECK(back == p);
    }
    CHECK(factor(cyclotomic(105)).size() == 1);
}

TEST_CASE("two_cos_pi_over is an algebraic integer of degree phi(2m)/2")
{
    for (int m = 2; m <= 30; ++m) {
        AlgebraicReal c = two_cos_pi_over(m);
        CHECK(is_algebraic_integer(c));
        CHECK(is_totally_real(c));
        CHECK(approx(c) == doctest::Approx(2 * std::cos(M_PI / m)).epsilon(1e-8));
        if (m >= 3)
            CHECK(c.degree() == euler_phi(2 * m) / 2);
    }
    CHECK(two_cos_pi_over(2) == AlgebraicReal(0));
    CHECK(two_cos_pi_over(3) == AlgebraicReal(1));
    CHECK(!is_algebraic_integer(cos_pi(1, 5)));
}

TEST_CASE("composed sum and product hold the sums and products of roots")
{
    Polynomial p({-2, 0, 1}), q({-3, 0, 1});
    Polynomial s = composed_sum(p, q), m = composed_product(p, q);
    AlgebraicReal r = sqrt_nonneg(AlgebraicReal(2)) + sqrt_nonneg(AlgebraicReal(3));
    CHECK(s.monic() == Polynomial({1, 0, -10, 0, 1}));
    CHECK((pow(Polynomial({0, 1}), 2) - Polynomial({6})) * (pow(Polynomial({0, 1}), 2) - Polynomial({6})) ==
          m.monic());
    CHECK(is_totally_real(r));
    CHECK(!is_totally_real(AlgebraicReal::real_roots(Polynomial({-2, 0, 0, 1}))[0]));
    CHECK(resultant(p, q) == 1);
}
