#include "coxarith/roots.hpp"

#include <algorithm>
#include <stdexcept>

namespace coxarith {

namespace {

/* Integer multiple of p by a positive constant. */
std::vector<Integer> positive_integer(const Polynomial& p)
{
    auto z = primitive_integer(p);
    if (sgn(p.lc()) < 0)
        for (auto& c : z)
            c = -c;
    return z;
}

int changes(const std::vector<int>& signs)
{
    int n = 0, last = 0;
    for (int s : signs) {
        if (s == 0)
            continue;
        if (last != 0 && s != last)
            ++n;
        last = s;
    }
    return n;
}

}  // namespace

int sign_at(const std::vector<Integer>& p, const Rational& x)
{
    if (p.empty())
        return 0;
    const Integer& a = x.get_num();
    const Integer& b = x.get_den();
    Integer acc = p.back(), bp = 1;
    for (size_t i = p.size() - 1; i-- > 0;) {
        bp *= b;
        acc *= a;
        mpz_addmul(acc.get_mpz_t(), p[i].get_mpz_t(), bp.get_mpz_t());
    }
    return sgn(acc);
}

SturmSequence::SturmSequence(const Polynomial& p)
{
    if (p.is_zero())
        throw std::invalid_argument("Sturm sequence of zero polynomial");
    Polynomial a = p, b = p.derivative();
    seq_.push_back(positive_integer(a));
    while (!b.is_zero()) {
        seq_.push_back(positive_integer(b));
        Polynomial r = -(a % b);
        a = from_integer(seq_.back());
        b = r.is_zero() ? r : from_integer(positive_integer(r));
    }
}

int SturmSequence::sign_changes(const Rational& x) const
{
    std::vector<int> s;
    s.reserve(seq_.size());
    for (const auto& q : seq_)
        s.push_back(sign_at(q, x));
    return changes(s);
}

int SturmSequence::sign_changes_at_infinity(int direction) const
{
    std::vector<int> s;
    for (const auto& q : seq_) {
        int sg = sgn(q.back());
        if (direction < 0 && (q.size() - 1) % 2 == 1)
            sg = -sg;
        s.push_back(sg);
    }
    return changes(s);
}

int SturmSequence::count_roots(const Rational& a, const Rational& b) const
{
    return sign_changes(a) - sign_changes(b);
}

int SturmSequence::count_real_roots() const
{
    return sign_changes_at_infinity(-1) - sign_changes_at_infinity(1);
}

Rational cauchy_bound(const Polynomial& p)
{
    Rational m = 0;
    for (int i = 0; i < p.degree(); ++i) {
        Rational r = abs(p.coeff(i) / p.lc());
        if (r > m)
            m = r;
    }
    Rational b = 1;
    while (b <= m + 1)
        b *= 2;
    return b;
}

int count_real_roots(const Polynomial& p)
{
    return int(isolate_real_roots(p).size());
}

namespace {

using ZPoly = std::vector<Integer>;

/* q(x) -> q(x + u) */
void taylor_shift(ZPoly& q, const Integer& u)
{
    const size_t n = q.size();
    for (size_t i = 0; i + 1 < n; ++i)
        for (size_t j = n - 1; j-- > i;)
            mpz_addmul(q[j].get_mpz_t(), u.get_mpz_t(), q[j + 1].get_mpz_t());
}

void remove_content(ZPoly& q)
{
    Integer g = 0;
    for (const auto& c : q)
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
    if (g > 1)
        for (auto& c : q)
            mpz_divexact(c.get_mpz_t(), c.get_mpz_t(), g.get_mpz_t());
}

/* Sign variations of (1 + x)^n q(1 / (1 + x)): bounds the roots in (0, 1). */
int descartes_01(const ZPoly& q)
{
    ZPoly r(q.rbegin(), q.rend());
    taylor_shift(r, 1);
    int v = 0, last = 0;
    for (const auto& c : r) {
        int s = sgn(c);
        if (s == 0)
            continue;
        if (last != 0 && s != last)
            ++v;
        last = s;
    }
    return v;
}

/* v^n q(u y / v) and v^n q((u + (v - u) y) / v) */
ZPoly left_part(const ZPoly& q, const Integer& u, const Integer& v)
{
    const size_t n = q.size() - 1;
    ZPoly out(q.size());
    Integer up = 1;
    for (size_t i = 0; i <= n; ++i) {
        Integer vp;
        mpz_pow_ui(vp.get_mpz_t(), v.get_mpz_t(), n - i);
        out[i] = q[i] * up * vp;
        up *= u;
    }
    remove_content(out);
    return out;
}

ZPoly right_part(const ZPoly& q, const Integer& u, const Integer& v)
{
    const size_t n = q.size() - 1;
    ZPoly h(q.size());
    for (size_t i = 0; i <= n; ++i) {
        Integer vp;
        mpz_pow_ui(vp.get_mpz_t(), v.get_mpz_t(), n - i);
        h[i] = q[i] * vp;
    }
    taylor_shift(h, u);
    Integer w = v - u, wp = 1;
    for (size_t i = 0; i <= n; ++i) {
        h[i] *= wp;
        wp *= w;
    }
    remove_content(h);
    return h;
}

}  // namespace

std::vector<RootInterval> isolate_real_roots(const Polynomial& p0, const Rational& lo, const Rational& hi)
{
    std::vector<RootInterval> out;
    if (p0.degree() <= 0)
        return out;
    if (!(lo < hi))
        throw std::invalid_argument("empty interval");
    Polynomial p = squarefree_part(p0);
    auto z = primitive_integer(p);
    if (sign_at(z, lo) == 0 || sign_at(z, hi) == 0)
        throw std::invalid_argument("interval endpoint is a root");
    Polynomial lin = Polynomial::constant(lo) + Polynomial::monomial(hi - lo, 1);
    struct Job {
        ZPoly q;  // p(lo + (hi - lo) y) up to a positive factor
        Rational lo, hi;
    };
    std::vector<Job> stack{{primitive_integer(p.compose(lin)), lo, hi}};
    static const int splits[][2] = {{1, 2}, {1, 3}, {2, 3}, {2, 5}, {3, 5}, {3, 7}, {4, 7}, {3, 8}, {5, 8}};
    while (!stack.empty()) {
        Job j = std::move(stack.back());
        stack.pop_back();
        int v = descartes_01(j.q);
        if (v == 0)
            continue;
        if (v == 1) {
            out.push_back({j.lo, j.hi});
            continue;
        }
        Integer u, d;
        Rational t;
        bool ok = false;
        for (const auto& s : splits) {
            t = Rational(s[0], s[1]);
            if (sign_at(j.q, t) != 0) {
                u = s[0];
                d = s[1];
                ok = true;
                break;
            }
        }
        if (!ok)
            throw std::logic_error("no admissible split point");
        Rational mid = j.lo + t * (j.hi - j.lo);
        stack.push_back({right_part(j.q, u, d), mid, j.hi});
        stack.push_back({left_part(j.q, u, d), j.lo, mid});
    }
    std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) { return a.lo < b.lo; });
    return out;
}

std::vector<RootInterval> isolate_real_roots(const Polynomial& p)
{
    if (p.degree() <= 0)
        return {};
    Rational M = cauchy_bound(p);
    return isolate_real_roots(p, -M, M);
}

int count_roots_between(const Polynomial& p, const Rational& lo, const Rational& hi)
{
    return int(isolate_real_roots(p, lo, hi).size());
}

void bisect(const std::vector<Integer>& p, RootInterval& iv)
{
    Rational mid = (iv.lo + iv.hi) / 2;
    int sm = sign_at(p, mid);
    if (sm == 0) {
        Rational q = (iv.hi - iv.lo) / 4;
        iv.lo = mid - q;
        iv.hi = mid + q;
        return;
    }
    if (sign_at(p, iv.lo) * sm < 0)
        iv.hi = mid;
    else
        iv.lo = mid;
}

void refine(const Polynomial& p, RootInterval& iv, const Rational& width)
{
    if (iv.hi - iv.lo <= width)
        return;
    auto z = primitive_integer(p);
    while (iv.hi - iv.lo > width)
        bisect(z, iv);
}

}  // namespace coxarith
