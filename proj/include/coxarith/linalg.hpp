#pragma once

#include <stdexcept>
#include <utility>
#include <vector>

#include "coxarith/rational.hpp"

namespace coxarith {

template <class T>
using Matrix = std::vector<std::vector<T>>;

/* Fraction-free (Bareiss) determinant. zero and one fix the scalar domain. */
template <class T>
T determinant(Matrix<T> m, const T& zero, const T& one)
{
    const size_t n = m.size();
    if (n == 0)
        return one;
    T prev = one;
    bool negate = false;
    for (size_t k = 0; k + 1 < n; ++k) {
        if (m[k][k].is_zero()) {
            size_t r = k + 1;
            while (r < n && m[r][k].is_zero())
                ++r;
            if (r == n)
                return zero;
            std::swap(m[k], m[r]);
            negate = !negate;
        }
        for (size_t i = k + 1; i < n; ++i) {
            for (size_t j = k + 1; j < n; ++j)
                m[i][j] = (m[k][k] * m[i][j] - m[i][k] * m[k][j]) / prev;
        }
        prev = m[k][k];
    }
    return negate ? zero - m[n - 1][n - 1] : m[n - 1][n - 1];
}

/* Coefficients c_0..c_n of det(x I - M), lowest degree first (Faddeev-LeVerrier). */
template <class T>
std::vector<T> characteristic_coeffs(const Matrix<T>& a, const T& zero, const T& one)
{
    const size_t n = a.size();
    std::vector<T> c(n + 1, zero);
    c[n] = one;
    Matrix<T> mk(n, std::vector<T>(n, zero));
    for (size_t k = 1; k <= n; ++k) {
        Matrix<T> next(n, std::vector<T>(n, zero));
        for (size_t i = 0; i < n; ++i)
            for (size_t j = 0; j < n; ++j) {
                T s = zero;
                for (size_t l = 0; l < n; ++l)
                    if (!a[i][l].is_zero() && !mk[l][j].is_zero())
                        s += a[i][l] * mk[l][j];
                next[i][j] = s;
            }
        for (size_t i = 0; i < n; ++i)
            next[i][i] += c[n - k + 1];
        T tr = zero;
        for (size_t i = 0; i < n; ++i)
            for (size_t l = 0; l < n; ++l)
                if (!a[i][l].is_zero() && !next[l][i].is_zero())
                    tr += a[i][l] * next[l][i];
        c[n - k] = (zero - tr) * Rational(1, long(k));
        mk = std::move(next);
    }
    return c;
}

/* Row-echelon basis of a subspace of Q^n, grown one vector at a time. */
class RationalSpan {
public:
    explicit RationalSpan(size_t n) : n_(n) {}
    size_t ambient() const { return n_; }
    size_t dim() const { return rows_.size(); }
    /* Reduces v against the basis; returns true if v was independent and added. */
    bool insert(std::vector<Rational> v);
    bool contains(std::vector<Rational> v) const;

private:
    void reduce(std::vector<Rational>& v) const;
    size_t n_;
    std::vector<std::vector<Rational>> rows_;
    std::vector<size_t> pivots_;
};

/* Solve cols * x = b where cols are the columns of an n x d matrix of full
 * column rank. Returns false if b is outside the column span. */
bool solve_columns(const std::vector<std::vector<Rational>>& cols, const std::vector<Rational>& b,
                   std::vector<Rational>& x);

/* Reusable solver for a fixed full-column-rank system. */
class ColumnSolver {
public:
    explicit ColumnSolver(const std::vector<std::vector<Rational>>& cols);
    bool solve(const std::vector<Rational>& b, std::vector<Rational>& x) const;
    size_t rank() const { return d_; }

private:
    size_t n_ = 0, d_ = 0;
    std::vector<std::vector<Rational>> cols_;
    std::vector<size_t> rows_;                 // independent rows
    std::vector<std::vector<Rational>> inv_;   // inverse of the selected d x d block
};

}  // namespace coxarith
