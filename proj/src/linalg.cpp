#include "coxarith/linalg.hpp"

namespace coxarith {

void RationalSpan::reduce(std::vector<Rational>& v) const
{
    for (size_t r = 0; r < rows_.size(); ++r) {
        const Rational& c = v[pivots_[r]];
        if (c == 0)
            continue;
        Rational f = c;
        for (size_t j = pivots_[r]; j < n_; ++j)
            if (rows_[r][j] != 0)
                v[j] -= f * rows_[r][j];
    }
}

bool RationalSpan::insert(std::vector<Rational> v)
{
    if (v.size() != n_)
        throw std::invalid_argument("vector length mismatch");
    reduce(v);
    size_t p = 0;
    while (p < n_ && v[p] == 0)
        ++p;
    if (p == n_)
        return false;
    Rational inv = 1 / v[p];
    for (size_t j = p; j < n_; ++j)
        v[j] *= inv;
    // keep rows fully reduced so that reduce() is a single pass
    for (auto& row : rows_) {
        Rational c = row[p];
        if (c != 0)
            for (size_t j = p; j < n_; ++j)
                row[j] -= c * v[j];
    }
    size_t pos = 0;
    while (pos < pivots_.size() && pivots_[pos] < p)
        ++pos;
    rows_.insert(rows_.begin() + pos, std::move(v));
    pivots_.insert(pivots_.begin() + pos, p);
    return true;
}

bool RationalSpan::contains(std::vector<Rational> v) const
{
    reduce(v);
    for (const auto& c : v)
        if (c != 0)
            return false;
    return true;
}

ColumnSolver::ColumnSolver(const std::vector<std::vector<Rational>>& cols) : cols_(cols)
{
    d_ = cols.size();
    n_ = d_ ? cols[0].size() : 0;
    RationalSpan rowspan(d_);
    for (size_t i = 0; i < n_ && rows_.size() < d_; ++i) {
        std::vector<Rational> r(d_);
        for (size_t j = 0; j < d_; ++j)
            r[j] = cols[j][i];
        if (rowspan.insert(r))
            rows_.push_back(i);
    }
    if (rows_.size() != d_)
        throw std::invalid_argument("columns are linearly dependent");
    // Gauss-Jordan on the selected block
    std::vector<std::vector<Rational>> a(d_, std::vector<Rational>(2 * d_));
    for (size_t i = 0; i < d_; ++i) {
        for (size_t j = 0; j < d_; ++j)
            a[i][j] = cols[j][rows_[i]];
        a[i][d_ + i] = 1;
    }
    for (size_t k = 0; k < d_; ++k) {
        size_t p = k;
        while (a[p][k] == 0)
            ++p;
        std::swap(a[p], a[k]);
        Rational inv = 1 / a[k][k];
        for (auto& x : a[k])
            x *= inv;
        for (size_t i = 0; i < d_; ++i) {
            if (i == k || a[i][k] == 0)
                continue;
            Rational f = a[i][k];
            for (size_t j = k; j < 2 * d_; ++j)
                if (a[k][j] != 0)
                    a[i][j] -= f * a[k][j];
        }
    }
    inv_.assign(d_, std::vector<Rational>(d_));
    for (size_t i = 0; i < d_; ++i)
        for (size_t j = 0; j < d_; ++j)
            inv_[i][j] = a[i][d_ + j];
}

bool ColumnSolver::solve(const std::vector<Rational>& b, std::vector<Rational>& x) const
{
    x.assign(d_, 0);
    for (size_t i = 0; i < d_; ++i)
        for (size_t j = 0; j < d_; ++j)
            if (inv_[i][j] != 0)
                x[i] += inv_[i][j] * b[rows_[j]];
    for (size_t r = 0; r < n_; ++r) {
        Rational s = 0;
        for (size_t j = 0; j < d_; ++j)
            if (cols_[j][r] != 0)
                s += cols_[j][r] * x[j];
        if (s != b[r])
            return false;
    }
    return true;
}

bool solve_columns(const std::vector<std::vector<Rational>>& cols, const std::vector<Rational>& b,
                   std::vector<Rational>& x)
{
    return ColumnSolver(cols).solve(b, x);
}

}  // namespace coxarith
