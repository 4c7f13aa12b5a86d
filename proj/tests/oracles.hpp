#pragma once

#include <algorithm>
#include <cmath>
#include <numeric>
#include <vector>

#include <boost/math/constants/constants.hpp>

#include "coxarith/coxeter.hpp"
#include "coxarith/geometry.hpp"

namespace oracle {

using coxarith::Real;

/* Cyclic Jacobi rotations on a symmetric matrix; returns the diagonal. */
inline std::vector<Real> jacobi_eigenvalues(std::vector<std::vector<Real>> a, int digits)
{
    const size_t n = a.size();
    Real eps = pow(Real(10), -(digits + 5));
    for (int sweep = 0; sweep < 100; ++sweep) {
        Real off = 0;
        for (size_t i = 0; i < n; ++i)
            for (size_t j = i + 1; j < n; ++j)
                off += a[i][j] * a[i][j];
        if (off < eps * eps)
            break;
        for (size_t p = 0; p < n; ++p)
            for (size_t q = p + 1; q < n; ++q) {
                if (a[p][q] == 0)
                    continue;
                Real theta = (a[q][q] - a[p][p]) / (2 * a[p][q]);
                Real t = (theta >= 0 ? 1 : -1) / (abs(theta) + sqrt(theta * theta + 1));
                Real c = 1 / sqrt(t * t + 1), s = t * c;
                for (size_t k = 0; k < n; ++k) {
                    Real akp = a[k][p], akq = a[k][q];
                    a[k][p] = c * akp - s * akq;
                    a[k][q] = s * akp + c * akq;
                }
                for (size_t k = 0; k < n; ++k) {
                    Real apk = a[p][k], aqk = a[q][k];
                    a[p][k] = c * apk - s * aqk;
                    a[q][k] = s * apk + c * aqk;
                }
            }
    }
    std::vector<Real> ev(n);
    for (size_t i = 0; i < n; ++i)
        ev[i] = a[i][i];
    return ev;
}

/* Gram matrix from the labels with -cos(pi/m) in floating point and the
 * dashed entry -a. */
inline std::vector<std::vector<Real>> numeric_gram(const coxarith::GramTemplate& g, const Real& a)
{
    Real pi = boost::math::constants::pi<Real>();
    std::vector<std::vector<Real>> m(g.size, std::vector<Real>(g.size));
    for (int i = 0; i < g.size; ++i)
        for (int j = 0; j < g.size; ++j) {
            int L = g.label[i][j];
            if (i == j)
                m[i][j] = 1;
            else if (L == 0)
                m[i][j] = -a;
            else if (L == 2)
                m[i][j] = 0;
            else
                m[i][j] = -cos(pi / L);
        }
    return m;
}

inline coxarith::Signature numeric_signature(const std::vector<std::vector<Real>>& m, int digits)
{
    coxarith::Signature s;
    Real tol = pow(Real(10), -digits / 2);
    for (const auto& e : jacobi_eigenvalues(m, digits)) {
        if (abs(e) < tol)
            ++s.zero;
        else if (e > 0)
            ++s.pos;
        else
            ++s.neg;
    }
    return s;
}

/* Signature of the prism Gram matrix at 100 digits, a taken from a^2. */
inline coxarith::Signature prism_signature(const coxarith::GramTemplate& g, const coxarith::AlgebraicReal& a2)
{
    coxarith::set_real_digits(100);
    Real a = sqrt(coxarith::to_real(a2, 100));
    return numeric_signature(numeric_gram(g, a), 100);
}

inline Real determinant(std::vector<std::vector<Real>> m)
{
    const size_t n = m.size();
    Real d = 1;
    for (size_t c = 0; c < n; ++c) {
        size_t p = c;
        for (size_t r = c + 1; r < n; ++r)
            if (abs(m[r][c]) > abs(m[p][c]))
                p = r;
        if (m[p][c] == 0)
            return 0;
        if (p != c) {
            std::swap(m[p], m[c]);
            d = -d;
        }
        d *= m[c][c];
        for (size_t r = c + 1; r < n; ++r) {
            Real f = m[r][c] / m[c][c];
            for (size_t k = c; k < n; ++k)
                m[r][k] -= f * m[c][k];
        }
    }
    return d;
}

struct Conjugate {
    int j = 1;
    Real a_squared;
    Real min_eigenvalue;  // meaningful when a_squared >= 0
};

/* Galois conjugate cos(pi/n) -> cos(j pi/n) of the prism Gram matrix, with
 * a^2 solved numerically from det = c0 + c2 t^2. */
inline Conjugate conjugate_gram(const coxarith::GramTemplate& g, int j, int digits = 100)
{
    coxarith::set_real_digits(digits);
    Real pi = boost::math::constants::pi<Real>();
    auto build = [&](const Real& t) {
        std::vector<std::vector<Real>> m(g.size, std::vector<Real>(g.size));
        for (int r = 0; r < g.size; ++r)
            for (int c = 0; c < g.size; ++c) {
                int L = g.label[r][c];
                m[r][c] = r == c ? Real(1) : L == 0 ? Real(-t) : L == 2 ? Real(0) : Real(-cos(j * pi / L));
            }
        return m;
    };
    Conjugate out;
    out.j = j;
    Real c0 = determinant(build(0)), c2 = determinant(build(1)) - c0;
    out.a_squared = -c0 / c2;
    if (out.a_squared >= 0) {
        auto ev = jacobi_eigenvalues(build(sqrt(out.a_squared)), digits);
        out.min_eigenvalue = *std::min_element(ev.begin(), ev.end());
    }
    return out;
}

inline int euler_phi(int n)
{
    int r = 0;
    for (int i = 1; i <= n; ++i)
        r += std::gcd(i, n) == 1;
    return r;
}

/* Degree of Q(cos(2 pi/m)) */
inline int real_cyclotomic_degree(int m) { return m <= 2 ? 1 : euler_phi(m) / 2; }

}  // namespace oracle
