#include "coxarith/polynomial.hpp"

#include <sstream>
#include <stdexcept>

namespace coxarith {

Polynomial::Polynomial(std::vector<Rational> coeffs) : c_(std::move(coeffs)) { trim(); }

Polynomial::Polynomial(std::initializer_list<long> coeffs)
{
    for (long v : coeffs)
        c_.emplace_back(v);
    trim();
}

Polynomial Polynomial::constant(const Rational& c) { return Polynomial(std::vector<Rational>{c}); }

Polynomial Polynomial::monomial(const Rational& c, int deg)
{
    std::vector<Rational> v(deg + 1);
    v[deg] = c;
    return Polynomial(std::move(v));
}

void Polynomial::trim()
{
    while (!c_.empty() && c_.back() == 0)
        c_.pop_back();
}

Rational Polynomial::coeff(int i) const
{
    if (i < 0 || i >= (int)c_.size())
        return 0;
    return c_[i];
}

Polynomial Polynomial::monic() const
{
    if (is_zero())
        return *this;
    Polynomial r = *this;
    Rational l = lc();
    for (auto& c : r.c_)
        c /= l;
    return r;
}

Polynomial Polynomial::derivative() const
{
    if (c_.size() <= 1)
        return {};
    std::vector<Rational> v(c_.size() - 1);
    for (size_t i = 1; i < c_.size(); ++i)
        v[i - 1] = c_[i] * (long)i;
    return Polynomial(std::move(v));
}

Rational Polynomial::eval(const Rational& x) const
{
    Rational r = 0;
    for (size_t i = c_.size(); i-- > 0;)
        r = r * x + c_[i];
    return r;
}

int Polynomial::sign_at(const Rational& x) const { return sgn(eval(x)); }

Polynomial Polynomial::compose(const Polynomial& q) const
{
    Polynomial r;
    for (size_t i = c_.size(); i-- > 0;)
        r = r * q + constant(c_[i]);
    return r;
}

Polynomial Polynomial::scale(const Rational& a) const
{
    Polynomial r = *this;
    Rational f = 1;
    for (auto& c : r.c_) {
        c *= f;
        f *= a;
    }
    r.trim();
    return r;
}

Polynomial Polynomial::reverse() const
{
    std::vector<Rational> v(c_.rbegin(), c_.rend());
    return Polynomial(std::move(v));
}

Polynomial Polynomial::substitute_square() const
{
    if (is_zero())
        return {};
    std::vector<Rational> v(2 * c_.size() - 1);
    for (size_t i = 0; i < c_.size(); ++i)
        v[2 * i] = c_[i];
    return Polynomial(std::move(v));
}

Polynomial Polynomial::operator-() const
{
    Polynomial r = *this;
    for (auto& c : r.c_)
        c = -c;
    return r;
}

Polynomial& Polynomial::operator+=(const Polynomial& o)
{
    if (o.c_.size() > c_.size())
        c_.resize(o.c_.size());
    for (size_t i = 0; i < o.c_.size(); ++i)
        c_[i] += o.c_[i];
    trim();
    return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& o)
{
    if (o.c_.size() > c_.size())
        c_.resize(o.c_.size());
    for (size_t i = 0; i < o.c_.size(); ++i)
        c_[i] -= o.c_[i];
    trim();
    return *this;
}

Polynomial& Polynomial::operator*=(const Rational& c)
{
    if (c == 0) {
        c_.clear();
        return *this;
    }
    for (auto& x : c_)
        x *= c;
    return *this;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b)
{
    if (a.is_zero() || b.is_zero())
        return {};
    std::vector<Rational> v(a.c_.size() + b.c_.size() - 1);
    for (size_t i = 0; i < a.c_.size(); ++i) {
        if (a.c_[i] == 0)
            continue;
        for (size_t j = 0; j < b.c_.size(); ++j)
            v[i + j] += a.c_[i] * b.c_[j];
    }
    return Polynomial(std::move(v));
}

std::string Polynomial::str(const std::string& var) const
{
    if (is_zero())
        return "0";
    std::ostringstream os;
    bool first = true;
    for (int i = degree(); i >= 0; --i) {
        const Rational& c = c_[i];
        if (c == 0)
            continue;
        Rational a = abs(c);
        if (first)
            os << (c < 0 ? "-" : "");
        else
            os << (c < 0 ? " - " : " + ");
        first = false;
        if (i == 0 || a != 1)
            os << a.get_str() << (i > 0 ? "*" : "");
        if (i >= 1)
            os << var;
        if (i >= 2)
            os << "^" << i;
    }
    return os.str();
}

std::pair<Polynomial, Polynomial> divmod(const Polynomial& a, const Polynomial& b)
{
    if (b.is_zero())
        throw std::domain_error("polynomial division by zero");
    if (a.degree() < b.degree())
        return {Polynomial(), a};
    std::vector<Rational> r = a.coeffs();
    const auto& bc = b.coeffs();
    int db = b.degree();
    std::vector<Rational> q(a.degree() - db + 1);
    Rational inv = 1 / b.lc();
    for (int i = a.degree(); i >= db; --i) {
        if (r[i] == 0)
            continue;
        Rational f = r[i] * inv;
        q[i - db] = f;
        for (int j = 0; j <= db; ++j)
            r[i - db + j] -= f * bc[j];
    }
    r.resize(db);
    return {Polynomial(std::move(q)), Polynomial(std::move(r))};
}

Polynomial operator%(const Polynomial& a, const Polynomial& b) { return divmod(a, b).second; }
Polynomial operator/(const Polynomial& a, const Polynomial& b) { return divmod(a, b).first; }

Polynomial pow(const Polynomial& p, unsigned e)
{
    Polynomial r = Polynomial::constant(1), b = p;
    while (e) {
        if (e & 1)
            r = r * b;
        e >>= 1;
        if (e)
            b = b * b;
    }
    return r;
}

Polynomial gcd(const Polynomial& a0, const Polynomial& b0)
{
    Polynomial a = a0, b = b0;
    while (!b.is_zero()) {
        Polynomial r = a % b;
        a = std::move(b);
        b = r.monic();
    }
    return a.monic();
}

Polynomial xgcd(const Polynomial& a, const Polynomial& b, Polynomial& s, Polynomial& t)
{
    Polynomial r0 = a, r1 = b;
    Polynomial s0 = Polynomial::constant(1), s1, t0, t1 = Polynomial::constant(1);
    while (!r1.is_zero()) {
        auto [q, r] = divmod(r0, r1);
        r0 = std::move(r1);
        r1 = std::move(r);
        Polynomial s2 = s0 - q * s1, t2 = t0 - q * t1;
        s0 = std::move(s1);
        s1 = std::move(s2);
        t0 = std::move(t1);
        t1 = std::move(t2);
    }
    if (r0.is_zero()) {
        s = {};
        t = {};
        return r0;
    }
    Rational l = 1 / r0.lc();
    s = s0 * l;
    t = t0 * l;
    return r0 * l;
}

std::vector<std::pair<Polynomial, int>> squarefree_decomposition(const Polynomial& p)
{
    std::vector<std::pair<Polynomial, int>> out;
    if (p.degree() <= 0)
        return out;
    Polynomial f = p.monic();
    Polynomial d = f.derivative();
    Polynomial a = gcd(f, d);
    Polynomial b = f / a;
    Polynomial c = d / a - b.derivative();
    int i = 1;
    while (b.degree() > 0) {
        Polynomial g = gcd(b, c);
        if (g.degree() > 0)
            out.emplace_back(g, i);
        b = b / g;
        c = c / g - b.derivative();
        ++i;
    }
    return out;
}

Polynomial squarefree_part(const Polynomial& p)
{
    if (p.degree() <= 0)
        return p.is_zero() ? p : Polynomial::constant(1);
    Polynomial f = p.monic();
    return f / gcd(f, f.derivative());
}

Rational resultant(const Polynomial& a0, const Polynomial& b0)
{
    if (a0.is_zero() || b0.is_zero())
        return 0;
    Polynomial a = a0, b = b0;
    Rational res = 1;
    while (true) {
        int da = a.degree(), db = b.degree();
        if (db == 0)
            return res * pow(b.lc(), da);
        if (da < db) {
            if ((da * db) % 2)
                res = -res;
            std::swap(a, b);
            continue;
        }
        Polynomial r = a % b;
        if (r.is_zero())
            return 0;
        if ((da * db) % 2)
            res = -res;
        res *= pow(b.lc(), da - r.degree());
        a = std::move(b);
        b = std::move(r);
    }
}

std::vector<Integer> primitive_integer(const Polynomial& p)
{
    std::vector<Integer> z;
    if (p.is_zero())
        return z;
    Integer l = 1;
    for (const auto& c : p.coeffs())
        mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), c.get_den_mpz_t());
    Integer g = 0;
    for (const auto& c : p.coeffs()) {
        Integer v = c.get_num() * (l / c.get_den());
        z.push_back(v);
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), v.get_mpz_t());
    }
    if (z.back() < 0)
        g = -g;
    for (auto& v : z)
        mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), g.get_mpz_t());
    return z;
}

Polynomial from_integer(const std::vector<Integer>& z)
{
    std::vector<Rational> v;
    v.reserve(z.size());
    for (const auto& c : z)
        v.emplace_back(c);
    return Polynomial(std::move(v));
}

std::vector<Rational> power_sums(const Polynomial& p, int count)
{
    int n = p.degree();
    std::vector<Rational> s(count + 1);
    s[0] = n;
    // p = x^n + a_{n-1} x^{n-1} + ... + a_0
    auto a = [&](int i) { return p.coeff(i); };
    for (int k = 1; k <= count; ++k) {
        Rational v = 0;
        if (k <= n)
            v = a(n - k) * k;
        for (int i = 1; i <= std::min(k - 1, n); ++i)
            v += a(n - i) * s[k - i];
        s[k] = -v;
    }
    return s;
}

Polynomial from_power_sums(const std::vector<Rational>& s, int n)
{
    std::vector<Rational> e(n + 1);
    e[0] = 1;
    for (int k = 1; k <= n; ++k) {
        Rational v = 0;
        for (int i = 1; i <= k; ++i) {
            if (i % 2)
                v += e[k - i] * s[i];
            else
                v -= e[k - i] * s[i];
        }
        e[k] = v / k;
    }
    std::vector<Rational> c(n + 1);
    for (int k = 0; k <= n; ++k)
        c[n - k] = (k % 2) ? Rational(-e[k]) : e[k];
    return Polynomial(std::move(c));
}

Polynomial composed_sum(const Polynomial& p, const Polynomial& q)
{
    int n = p.degree() * q.degree();
    auto sp = power_sums(p.monic(), n), sq = power_sums(q.monic(), n);
    std::vector<Rational> s(n + 1);
    for (int k = 0; k <= n; ++k) {
        Rational v = 0;
        for (int t = 0; t <= k; ++t)
            v += Rational(binomial(k, t)) * sp[t] * sq[k - t];
        s[k] = v;
    }
    return from_power_sums(s, n);
}

Polynomial composed_product(const Polynomial& p, const Polynomial& q)
{
    int n = p.degree() * q.degree();
    auto sp = power_sums(p.monic(), n), sq = power_sums(q.monic(), n);
    std::vector<Rational> s(n + 1);
    for (int k = 0; k <= n; ++k)
        s[k] = sp[k] * sq[k];
    return from_power_sums(s, n);
}

Polynomial vieta_lucas(int j)
{
    Polynomial a = Polynomial::constant(2), b = Polynomial::x();
    if (j == 0)
        return a;
    for (int i = 1; i < j; ++i) {
        Polynomial c = Polynomial::x() * b - a;
        a = std::move(b);
        b = std::move(c);
    }
    return b;
}

Polynomial cyclotomic(int n)
{
    // prod over d | n of (x^d - 1)^mu(n/d)
    auto mobius = [](int k) {
        int r = 1;
        for (int p = 2; p * p <= k; ++p) {
            if (k % p)
                continue;
            k /= p;
            if (k % p == 0)
                return 0;
            r = -r;
        }
        return k > 1 ? -r : r;
    };
    Polynomial num = Polynomial::constant(1), den = Polynomial::constant(1);
    for (int d = 1; d <= n; ++d) {
        if (n % d)
            continue;
        int mu = mobius(n / d);
        Polynomial f = Polynomial::monomial(1, d) - Polynomial::constant(1);
        if (mu == 1)
            num = num * f;
        else if (mu == -1)
            den = den * f;
    }
    return num / den;
}

}  // namespace coxarith
