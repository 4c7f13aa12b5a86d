#include "coxarith/factor.hpp"

#include <algorithm>
#include <cstdint>
#include <functional>
#include <set>
#include <stdexcept>

namespace coxarith {

namespace {

using u64 = std::uint64_t;
using FpPoly = std::vector<u64>;
using ZPoly = std::vector<Integer>;

// ---------------------------------------------------------------- mod p

u64 mulmod(u64 a, u64 b, u64 p) { return (a * b) % p; }

u64 powmod(u64 a, u64 e, u64 p)
{
    u64 r = 1;
    a %= p;
    while (e) {
        if (e & 1)
            r = mulmod(r, a, p);
        a = mulmod(a, a, p);
        e >>= 1;
    }
    return r;
}

u64 invmod(u64 a, u64 p) { return powmod(a, p - 2, p); }

void trim(FpPoly& a)
{
    while (!a.empty() && a.back() == 0)
        a.pop_back();
}

int deg(const FpPoly& a) { return int(a.size()) - 1; }

FpPoly fp_reduce(const ZPoly& f, u64 p)
{
    FpPoly r(f.size());
    Integer t;
    for (size_t i = 0; i < f.size(); ++i) {
        mpz_fdiv_r_ui(t.get_mpz_t(), f[i].get_mpz_t(), p);
        r[i] = t.get_ui();
    }
    trim(r);
    return r;
}

FpPoly fp_sub(FpPoly a, const FpPoly& b, u64 p)
{
    if (b.size() > a.size())
        a.resize(b.size(), 0);
    for (size_t i = 0; i < b.size(); ++i)
        a[i] = (a[i] + p - b[i]) % p;
    trim(a);
    return a;
}

FpPoly fp_mul(const FpPoly& a, const FpPoly& b, u64 p)
{
    if (a.empty() || b.empty())
        return {};
    std::vector<u64> r(a.size() + b.size() - 1, 0);
    for (size_t i = 0; i < a.size(); ++i) {
        if (!a[i])
            continue;
        for (size_t j = 0; j < b.size(); ++j)
            r[i + j] = (r[i + j] + a[i] * b[j]) % p;
    }
    trim(r);
    return r;
}

void fp_divmod(const FpPoly& a, const FpPoly& b, FpPoly& q, FpPoly& r, u64 p)
{
    r = a;
    int db = deg(b);
    if (deg(a) < db) {
        q.clear();
        return;
    }
    q.assign(deg(a) - db + 1, 0);
    u64 inv = invmod(b.back(), p);
    for (int i = deg(a); i >= db; --i) {
        u64 c = r[i];
        if (!c)
            continue;
        u64 f = mulmod(c, inv, p);
        q[i - db] = f;
        for (int j = 0; j <= db; ++j)
            r[i - db + j] = (r[i - db + j] + p - mulmod(f, b[j], p)) % p;
    }
    r.resize(db);
    trim(r);
    trim(q);
}

FpPoly fp_rem(const FpPoly& a, const FpPoly& b, u64 p)
{
    FpPoly q, r;
    fp_divmod(a, b, q, r, p);
    return r;
}

FpPoly fp_quo(const FpPoly& a, const FpPoly& b, u64 p)
{
    FpPoly q, r;
    fp_divmod(a, b, q, r, p);
    return q;
}

FpPoly fp_monic(FpPoly a, u64 p)
{
    if (a.empty())
        return a;
    u64 inv = invmod(a.back(), p);
    for (auto& c : a)
        c = mulmod(c, inv, p);
    return a;
}

FpPoly fp_gcd(FpPoly a, FpPoly b, u64 p)
{
    while (!b.empty()) {
        FpPoly r = fp_rem(a, b, p);
        a = std::move(b);
        b = std::move(r);
    }
    return fp_monic(a, p);
}

/* s*a + t*b = 1 for coprime a, b. */
void fp_xgcd(const FpPoly& a, const FpPoly& b, FpPoly& s, FpPoly& t, u64 p)
{
    FpPoly r0 = a, r1 = b, s0{1}, s1, t0, t1{1};
    while (!r1.empty()) {
        FpPoly q, r;
        fp_divmod(r0, r1, q, r, p);
        FpPoly s2 = fp_sub(s0, fp_mul(q, s1, p), p);
        FpPoly t2 = fp_sub(t0, fp_mul(q, t1, p), p);
        r0 = std::move(r1);
        r1 = std::move(r);
        s0 = std::move(s1);
        s1 = std::move(s2);
        t0 = std::move(t1);
        t1 = std::move(t2);
    }
    u64 inv = invmod(r0.back(), p);
    s = s0;
    t = t0;
    for (auto& c : s)
        c = mulmod(c, inv, p);
    for (auto& c : t)
        c = mulmod(c, inv, p);
}

FpPoly fp_powmod(const FpPoly& base, const Integer& e, const FpPoly& mod, u64 p)
{
    FpPoly r{1};
    FpPoly b = fp_rem(base, mod, p);
    size_t bits = mpz_sizeinbase(e.get_mpz_t(), 2);
    for (size_t i = bits; i-- > 0;) {
        r = fp_rem(fp_mul(r, r, p), mod, p);
        if (mpz_tstbit(e.get_mpz_t(), i))
            r = fp_rem(fp_mul(r, b, p), mod, p);
    }
    return r;
}

FpPoly fp_derivative(const FpPoly& a, u64 p)
{
    if (a.size() <= 1)
        return {};
    FpPoly r(a.size() - 1);
    for (size_t i = 1; i < a.size(); ++i)
        r[i - 1] = mulmod(a[i], i % p, p);
    trim(r);
    return r;
}

/* Distinct-degree factorization of a monic squarefree polynomial. */
std::vector<std::pair<FpPoly, int>> fp_ddf(FpPoly f, u64 p)
{
    std::vector<std::pair<FpPoly, int>> out;
    FpPoly x{0, 1};
    FpPoly h = x;
    Integer P = (unsigned long)p;
    for (int d = 1; 2 * d <= deg(f); ++d) {
        h = fp_powmod(h, P, f, p);
        FpPoly g = fp_gcd(fp_sub(h, x, p), f, p);
        if (deg(g) > 0) {
            out.emplace_back(g, d);
            f = fp_quo(f, g, p);
            h = fp_rem(h, f, p);
        }
    }
    if (deg(f) > 0)
        out.emplace_back(f, deg(f));
    return out;
}

struct Lcg {
    u64 state = 0x9e3779b97f4a7c15ULL;
    u64 next()
    {
        state = state * 6364136223846793005ULL + 1442695040888963407ULL;
        return state >> 17;
    }
};

void fp_edf(const FpPoly& g, int d, u64 p, Lcg& rng, std::vector<FpPoly>& out)
{
    if (deg(g) == d) {
        out.push_back(g);
        return;
    }
    Integer e;
    mpz_ui_pow_ui(e.get_mpz_t(), p, d);
    e = (e - 1) / 2;
    while (true) {
        FpPoly a(deg(g));
        for (auto& c : a)
            c = rng.next() % p;
        trim(a);
        if (deg(a) <= 0)
            continue;
        FpPoly b = fp_powmod(a, e, g, p);
        b = fp_sub(b, FpPoly{1}, p);
        FpPoly f1 = fp_gcd(b, g, p);
        if (deg(f1) > 0 && deg(f1) < deg(g)) {
            fp_edf(f1, d, p, rng, out);
            fp_edf(fp_quo(g, f1, p), d, p, rng, out);
            return;
        }
    }
}

// ------------------------------------------------------------- mod m

void ztrim(ZPoly& a)
{
    while (!a.empty() && a.back() == 0)
        a.pop_back();
}

int zdeg(const ZPoly& a) { return int(a.size()) - 1; }

ZPoly zmod(ZPoly a, const Integer& m)
{
    for (auto& c : a)
        mpz_fdiv_r(c.get_mpz_t(), c.get_mpz_t(), m.get_mpz_t());
    ztrim(a);
    return a;
}

ZPoly zsym(ZPoly a, const Integer& m)
{
    Integer half = m / 2;
    for (auto& c : a) {
        mpz_fdiv_r(c.get_mpz_t(), c.get_mpz_t(), m.get_mpz_t());
        if (c > half)
            c -= m;
    }
    ztrim(a);
    return a;
}

ZPoly zadd(ZPoly a, const ZPoly& b)
{
    if (b.size() > a.size())
        a.resize(b.size());
    for (size_t i = 0; i < b.size(); ++i)
        a[i] += b[i];
    ztrim(a);
    return a;
}

ZPoly zsub(ZPoly a, const ZPoly& b)
{
    if (b.size() > a.size())
        a.resize(b.size());
    for (size_t i = 0; i < b.size(); ++i)
        a[i] -= b[i];
    ztrim(a);
    return a;
}

ZPoly zmul(const ZPoly& a, const ZPoly& b)
{
    if (a.empty() || b.empty())
        return {};
    ZPoly r(a.size() + b.size() - 1);
    for (size_t i = 0; i < a.size(); ++i)
        for (size_t j = 0; j < b.size(); ++j)
            mpz_addmul(r[i + j].get_mpz_t(), a[i].get_mpz_t(), b[j].get_mpz_t());
    ztrim(r);
    return r;
}

ZPoly zscale(ZPoly a, const Integer& c)
{
    for (auto& x : a)
        x *= c;
    ztrim(a);
    return a;
}

/* Division by a monic b modulo m. */
void zdivmod_monic(const ZPoly& a, const ZPoly& b, const Integer& m, ZPoly& q, ZPoly& r)
{
    r = zmod(a, m);
    int db = zdeg(b);
    if (zdeg(r) < db) {
        q.clear();
        return;
    }
    q.assign(zdeg(r) - db + 1, 0);
    for (int i = zdeg(r); i >= db; --i) {
        Integer c = r[i];
        mpz_fdiv_r(c.get_mpz_t(), c.get_mpz_t(), m.get_mpz_t());
        if (c == 0)
            continue;
        q[i - db] = c;
        for (int j = 0; j <= db; ++j)
            mpz_submul(r[i - db + j].get_mpz_t(), c.get_mpz_t(), b[j].get_mpz_t());
        for (int j = 0; j <= db; ++j)
            mpz_fdiv_r(r[i - db + j].get_mpz_t(), r[i - db + j].get_mpz_t(), m.get_mpz_t());
    }
    r.resize(db);
    ztrim(r);
    q = zmod(q, m);
}

ZPoly from_fp(const FpPoly& a)
{
    ZPoly r(a.size());
    for (size_t i = 0; i < a.size(); ++i)
        r[i] = (unsigned long)a[i];
    return r;
}

/* One quadratic Hensel step: f = g*h mod m, s*g + t*h = 1 mod m -> same mod m^2. */
void hensel_step(const Integer& m, const ZPoly& f, ZPoly& g, ZPoly& h, ZPoly& s, ZPoly& t)
{
    Integer m2 = m * m;
    ZPoly e = zmod(zsub(f, zmul(g, h)), m2);
    ZPoly q, r;
    zdivmod_monic(zmul(s, e), h, m2, q, r);
    ZPoly gs = zmod(zadd(zadd(g, zmul(t, e)), zmul(q, g)), m2);
    ZPoly hs = zmod(zadd(h, r), m2);
    ZPoly b = zmod(zsub(zadd(zmul(s, gs), zmul(t, hs)), ZPoly{1}), m2);
    ZPoly c, d;
    zdivmod_monic(zmul(s, b), hs, m2, c, d);
    ZPoly ss = zmod(zsub(s, d), m2);
    ZPoly ts = zmod(zsub(zsub(t, zmul(t, b)), zmul(c, gs)), m2);
    g = std::move(gs);
    h = std::move(hs);
    s = std::move(ss);
    t = std::move(ts);
}

/* Lift f = lc(f) * prod(factors) mod p to the same factorization mod p^(2^steps). */
void multifactor_lift(const ZPoly& f, const std::vector<FpPoly>& factors, u64 p, int steps,
                      std::vector<ZPoly>& out)
{
    Integer P = (unsigned long)p;
    for (int i = 0; i < steps; ++i)
        P *= P;
    if (factors.size() == 1) {
        Integer l = f.back(), inv;
        mpz_invert(inv.get_mpz_t(), l.get_mpz_t(), P.get_mpz_t());
        out.push_back(zmod(zscale(f, inv), P));
        return;
    }
    size_t k = factors.size() / 2;
    FpPoly g0{1}, h0{1};
    for (size_t i = 0; i < k; ++i)
        g0 = fp_mul(g0, factors[i], p);
    for (size_t i = k; i < factors.size(); ++i)
        h0 = fp_mul(h0, factors[i], p);
    {
        Integer lcm;
        mpz_fdiv_r_ui(lcm.get_mpz_t(), f.back().get_mpz_t(), p);
        FpPoly lc{lcm.get_ui()};
        g0 = fp_mul(g0, lc, p);
    }
    FpPoly s0, t0;
    fp_xgcd(g0, h0, s0, t0, p);
    ZPoly g = from_fp(g0), h = from_fp(h0), s = from_fp(s0), t = from_fp(t0);
    Integer m = (unsigned long)p;
    for (int i = 0; i < steps; ++i) {
        hensel_step(m, f, g, h, s, t);
        m *= m;
    }
    std::vector<FpPoly> left(factors.begin(), factors.begin() + k);
    std::vector<FpPoly> right(factors.begin() + k, factors.end());
    multifactor_lift(g, left, p, steps, out);
    multifactor_lift(h, right, p, steps, out);
}

// ----------------------------------------------------------- over Z

const std::vector<u64>& small_primes()
{
    static const std::vector<u64> primes = [] {
        std::vector<u64> v;
        for (u64 n = 3; v.size() < 400; n += 2) {
            bool ok = true;
            for (u64 d = 3; d * d <= n; d += 2)
                if (n % d == 0) {
                    ok = false;
                    break;
                }
            if (ok)
                v.push_back(n);
        }
        return v;
    }();
    return primes;
}

/* Subset sums of factor degrees reachable mod p. */
std::vector<bool> degree_set(const std::vector<std::pair<FpPoly, int>>& ddf, int n)
{
    std::vector<bool> reach(n + 1, false);
    reach[0] = true;
    for (const auto& [g, d] : ddf) {
        int cnt = deg(g) / d;
        for (int c = 0; c < cnt; ++c)
            for (int s = n; s >= d; --s)
                if (reach[s - d])
                    reach[s] = true;
    }
    return reach;
}

Integer norm2_ceil(const ZPoly& f)
{
    Integer s = 0;
    for (const auto& c : f)
        s += c * c;
    Integer r;
    mpz_sqrt(r.get_mpz_t(), s.get_mpz_t());
    return r + 1;
}

ZPoly zprimitive(ZPoly a)
{
    Integer g = 0;
    for (const auto& c : a)
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
    if (a.back() < 0)
        g = -g;
    for (auto& c : a)
        mpz_divexact(c.get_mpz_t(), c.get_mpz_t(), g.get_mpz_t());
    return a;
}

/* Exact division over Z; returns false if b does not divide a. */
bool zdivides(const ZPoly& a, const ZPoly& b, ZPoly& q)
{
    ZPoly r = a;
    int db = zdeg(b);
    if (zdeg(a) < db)
        return false;
    q.assign(zdeg(a) - db + 1, 0);
    for (int i = zdeg(a); i >= db; --i) {
        if (r[i] == 0)
            continue;
        if (!mpz_divisible_p(r[i].get_mpz_t(), b.back().get_mpz_t()))
            return false;
        Integer c;
        mpz_divexact(c.get_mpz_t(), r[i].get_mpz_t(), b.back().get_mpz_t());
        q[i - db] = c;
        for (int j = 0; j <= db; ++j)
            mpz_submul(r[i - db + j].get_mpz_t(), c.get_mpz_t(), b[j].get_mpz_t());
    }
    for (int i = 0; i < db; ++i)
        if (r[i] != 0)
            return false;
    ztrim(q);
    return true;
}

/* f primitive, squarefree, positive leading coefficient, f(0) != 0, deg >= 2. */
std::vector<ZPoly> factor_zassenhaus(const ZPoly& f)
{
    int n = zdeg(f);
    u64 best_p = 0;
    size_t best_count = 0;
    std::vector<bool> allowed(n + 1, true);
    int tried = 0;
    for (u64 p : small_primes()) {
        if (mpz_divisible_ui_p(f.back().get_mpz_t(), p))
            continue;
        FpPoly fp = fp_monic(fp_reduce(f, p), p);
        if (deg(fp_gcd(fp, fp_derivative(fp, p), p)) > 0)
            continue;
        auto dd = fp_ddf(fp, p);
        size_t count = 0;
        for (const auto& [g, d] : dd)
            count += deg(g) / d;
        auto reach = degree_set(dd, n);
        for (int i = 0; i <= n; ++i)
            allowed[i] = allowed[i] && reach[i];
        if (best_p == 0 || count < best_count) {
            best_p = p;
            best_count = count;
        }
        bool only_trivial = true;
        for (int i = 1; i < n; ++i)
            if (allowed[i])
                only_trivial = false;
        if (count == 1 || only_trivial)
            return {f};
        if (++tried >= 8)
            break;
    }
    if (best_p == 0)
        throw std::runtime_error("no suitable prime for factorization");
    u64 p = best_p;
    FpPoly fp = fp_monic(fp_reduce(f, p), p);
    std::vector<FpPoly> modfac;
    Lcg rng;
    for (const auto& [g, d] : fp_ddf(fp, p))
        fp_edf(g, d, p, rng, modfac);
    std::sort(modfac.begin(), modfac.end());

    Integer bound = Integer(2) * abs(f.back()) * norm2_ceil(f);
    mpz_mul_2exp(bound.get_mpz_t(), bound.get_mpz_t(), n);
    int steps = 0;
    Integer P = (unsigned long)p;
    while (P <= bound) {
        P *= P;
        ++steps;
    }
    std::vector<ZPoly> lifted;
    multifactor_lift(f, modfac, p, steps, lifted);

    std::vector<ZPoly> result;
    ZPoly F = f;
    std::vector<ZPoly> u = lifted;
    size_t s = 1;
    while (2 * s <= u.size()) {
        bool found = false;
        std::vector<size_t> idx(s);
        for (size_t i = 0; i < s; ++i)
            idx[i] = i;
        while (true) {
            int dsum = 0;
            for (size_t i : idx)
                dsum += zdeg(u[i]);
            if (allowed[dsum]) {
                Integer lc = F.back();
                Integer c0 = lc;
                for (size_t i : idx)
                    c0 = c0 * u[i][0] % P;
                c0 = c0 % P;
                if (c0 < 0)
                    c0 += P;
                if (c0 > P / 2)
                    c0 -= P;
                Integer target = lc * F[0];
                if (c0 != 0 && mpz_divisible_p(target.get_mpz_t(), c0.get_mpz_t())) {
                    ZPoly v{lc};
                    for (size_t i : idx)
                        v = zsym(zmul(v, u[i]), P);
                    ZPoly g = zprimitive(v), q;
                    if (zdivides(F, g, q)) {
                        result.push_back(g);
                        F = q;
                        std::vector<ZPoly> rest;
                        for (size_t i = 0; i < u.size(); ++i)
                            if (std::find(idx.begin(), idx.end(), i) == idx.end())
                                rest.push_back(u[i]);
                        u = std::move(rest);
                        found = true;
                        break;
                    }
                }
            }
            // next combination
            int i = int(s) - 1;
            while (i >= 0 && idx[i] == u.size() - s + i)
                --i;
            if (i < 0)
                break;
            ++idx[i];
            for (size_t j = i + 1; j < s; ++j)
                idx[j] = idx[j - 1] + 1;
        }
        if (!found)
            ++s;
    }
    if (zdeg(F) > 0)
        result.push_back(zprimitive(F));
    return result;
}

bool poly_less(const Polynomial& a, const Polynomial& b)
{
    if (a.degree() != b.degree())
        return a.degree() < b.degree();
    for (int i = a.degree(); i >= 0; --i)
        if (a.coeff(i) != b.coeff(i))
            return a.coeff(i) < b.coeff(i);
    return false;
}

}  // namespace

std::vector<Polynomial> irreducible_factors(const Polynomial& sqf)
{
    std::vector<Polynomial> out;
    if (sqf.degree() <= 0)
        return out;
    ZPoly f = primitive_integer(sqf);
    if (f[0] == 0) {
        out.push_back(Polynomial::x());
        f.erase(f.begin());
    }
    if (zdeg(f) == 1)
        out.push_back(from_integer(f).monic());
    else if (zdeg(f) >= 2)
        for (const auto& g : factor_zassenhaus(f))
            out.push_back(from_integer(g).monic());
    std::sort(out.begin(), out.end(), poly_less);
    return out;
}

std::vector<std::pair<Polynomial, int>> factor(const Polynomial& p)
{
    std::vector<std::pair<Polynomial, int>> out;
    for (const auto& [g, mult] : squarefree_decomposition(p))
        for (auto& h : irreducible_factors(g))
            out.emplace_back(std::move(h), mult);
    std::sort(out.begin(), out.end(),
              [](const auto& a, const auto& b) { return poly_less(a.first, b.first); });
    return out;
}

bool is_irreducible(const Polynomial& p)
{
    if (p.degree() <= 0)
        return false;
    auto f = factor(p);
    return f.size() == 1 && f[0].second == 1;
}

}  // namespace coxarith
