#include "coxarith/algebraic.hpp"

#include <algorithm>

#include <functional>
#include <numeric>
#include <stdexcept>

#include "coxarith/factor.hpp"

namespace coxarith {

namespace {

using Enclosure = std::pair<Rational, Rational>;

Rational width_for(int iter)
{
    Rational w = 1;
    mpz_mul_2exp(w.get_den_mpz_t(), w.get_den_mpz_t(), 16 + 4 * iter);
    w.canonicalize();
    return w;
}

/* floor(sqrt(q) * 2^k) for q >= 0. */
Integer sqrt_scaled(const Rational& q, unsigned k)
{
    Integer num = q.get_num();
    mpz_mul_2exp(num.get_mpz_t(), num.get_mpz_t(), 2 * k);
    Integer t = num / q.get_den();
    Integer r;
    mpz_sqrt(r.get_mpz_t(), t.get_mpz_t());
    return r;
}

std::string format_rounded(const Rational& q, int digits)
{
    Integer scale;
    mpz_ui_pow_ui(scale.get_mpz_t(), 10, digits);
    Rational s = q * Rational(scale) + Rational(1, 2);
    Integer n;
    mpz_fdiv_q(n.get_mpz_t(), s.get_num_mpz_t(), s.get_den_mpz_t());
    bool neg = n < 0;
    if (neg)
        n = -n;
    std::string d = n.get_str();
    if (digits > 0) {
        if (int(d.size()) <= digits)
            d = std::string(digits - d.size() + 1, '0') + d;
        d.insert(d.size() - digits, ".");
    }
    return (neg ? "-" : "") + d;
}

}  // namespace

AlgebraicReal identify_root(const Polynomial& candidate,
                            const std::function<std::pair<Rational, Rational>(int)>& enclosure)
{
    auto facs = irreducible_factors(squarefree_part(candidate));
    for (int iter = 0;; ++iter) {
        Enclosure e = enclosure(iter);
        if (e.first == e.second)
            return AlgebraicReal(e.first);
        bool clean = true;
        int total = 0, which = -1;
        for (size_t i = 0; i < facs.size() && clean; ++i) {
            if (facs[i].sign_at(e.first) == 0 || facs[i].sign_at(e.second) == 0) {
                clean = false;
                break;
            }
            int c = count_roots_between(facs[i], e.first, e.second);
            total += c;
            if (c > 0)
                which = int(i);
        }
        if (clean && total == 1)
            return AlgebraicReal::from_root(facs[which], e.first, e.second);
        if (iter > 4000)
            throw std::runtime_error("root identification did not converge");
    }
}

AlgebraicReal::AlgebraicReal(const Rational& r)
    : minpoly_(std::vector<Rational>{-r, 1}), iv_{r - 1, r + 1}
{
}

AlgebraicReal::AlgebraicReal(Polynomial minpoly, RootInterval iv)
    : minpoly_(std::move(minpoly)), iv_(std::move(iv))
{
}

AlgebraicReal AlgebraicReal::from_root(const Polynomial& p, const Rational& lo, const Rational& hi)
{
    if (!(lo < hi))
        throw std::invalid_argument("empty isolating interval");
    auto facs = irreducible_factors(squarefree_part(p));
    int total = 0;
    const Polynomial* which = nullptr;
    for (const auto& f : facs) {
        if (f.sign_at(lo) == 0 || f.sign_at(hi) == 0)
            throw std::invalid_argument("interval endpoint is a root");
        int c = count_roots_between(f, lo, hi);
        total += c;
        if (c > 0)
            which = &f;
    }
    if (total != 1)
        throw std::invalid_argument("interval does not isolate a single root");
    if (which->degree() == 1)
        return AlgebraicReal(-which->coeff(0));
    return AlgebraicReal(*which, RootInterval{lo, hi});
}

AlgebraicReal AlgebraicReal::from_irreducible(const Polynomial& monic_irreducible, const RootInterval& iv)
{
    if (monic_irreducible.degree() == 1)
        return AlgebraicReal(-monic_irreducible.coeff(0));
    return AlgebraicReal(monic_irreducible, iv);
}

std::vector<AlgebraicReal> AlgebraicReal::real_roots(const Polynomial& p)
{
    std::vector<AlgebraicReal> out;
    if (p.degree() <= 0)
        return out;
    for (const auto& f : irreducible_factors(squarefree_part(p))) {
        if (f.degree() == 1) {
            out.emplace_back(-f.coeff(0) / f.coeff(1));
            continue;
        }
        for (auto& iv : isolate_real_roots(f))
            out.push_back(AlgebraicReal(f, std::move(iv)));
    }
    std::sort(out.begin(), out.end(), [](const AlgebraicReal& a, const AlgebraicReal& b) { return compare(a, b) < 0; });
    return out;
}

Rational AlgebraicReal::rational_value() const
{
    if (!is_rational())
        throw std::logic_error("irrational value");
    return -minpoly_.coeff(0);
}

void AlgebraicReal::refine(const Rational& width) const
{
    if (is_rational()) {
        Rational r = rational_value(), h = width / 4;
        if (iv_.hi - iv_.lo > width)
            iv_ = {r - h, r + h};
        return;
    }
    coxarith::refine(minpoly_, iv_, width);
}

Rational AlgebraicReal::approx(const Rational& eps) const
{
    if (is_rational())
        return rational_value();
    refine(eps);
    return (iv_.lo + iv_.hi) / 2;
}

int AlgebraicReal::sign() const
{
    if (is_rational())
        return sgn(rational_value());
    auto z = primitive_integer(minpoly_);
    while (iv_.lo < 0 && iv_.hi > 0)
        bisect(z, iv_);
    return iv_.lo >= 0 ? 1 : -1;
}

AlgebraicReal AlgebraicReal::operator-() const
{
    if (is_rational())
        return AlgebraicReal(-rational_value());
    Polynomial m = minpoly_.reflect();
    return AlgebraicReal(m.monic(), RootInterval{-iv_.hi, -iv_.lo});
}

AlgebraicReal AlgebraicReal::inverse() const
{
    if (is_rational()) {
        if (rational_value() == 0)
            throw std::domain_error("inverse of zero");
        return AlgebraicReal(1 / rational_value());
    }
    sign();
    while (iv_.lo == 0 || iv_.hi == 0)
        refine((iv_.hi - iv_.lo) / 4);
    return AlgebraicReal(minpoly_.reverse().monic(), RootInterval{1 / iv_.hi, 1 / iv_.lo});
}

AlgebraicReal operator+(const AlgebraicReal& a, const AlgebraicReal& b)
{
    if (a.is_rational() && b.is_rational())
        return AlgebraicReal(a.rational_value() + b.rational_value());
    if (b.is_rational()) {
        Rational r = b.rational_value();
        Polynomial m = a.minpoly_.compose(Polynomial(std::vector<Rational>{-r, 1}));
        return AlgebraicReal(m, RootInterval{a.iv_.lo + r, a.iv_.hi + r});
    }
    if (a.is_rational())
        return b + a;
    Polynomial cand = composed_sum(a.minpoly_, b.minpoly_);
    return identify_root(cand, [&](int iter) {
        Rational w = width_for(iter);
        a.refine(w);
        b.refine(w);
        return Enclosure{a.iv_.lo + b.iv_.lo, a.iv_.hi + b.iv_.hi};
    });
}

AlgebraicReal operator*(const AlgebraicReal& a, const AlgebraicReal& b)
{
    if (a.is_rational() && b.is_rational())
        return AlgebraicReal(a.rational_value() * b.rational_value());
    if (b.is_rational()) {
        Rational r = b.rational_value();
        if (r == 0)
            return AlgebraicReal(0);
        Polynomial m = a.minpoly_.scale(1 / r).monic();
        Rational lo = a.iv_.lo * r, hi = a.iv_.hi * r;
        if (r < 0)
            std::swap(lo, hi);
        return AlgebraicReal(m, RootInterval{lo, hi});
    }
    if (a.is_rational())
        return b * a;
    Polynomial cand = composed_product(a.minpoly_, b.minpoly_);
    return identify_root(cand, [&](int iter) {
        Rational w = width_for(iter);
        a.refine(w);
        b.refine(w);
        Rational p[4] = {a.iv_.lo * b.iv_.lo, a.iv_.lo * b.iv_.hi, a.iv_.hi * b.iv_.lo,
                         a.iv_.hi * b.iv_.hi};
        Rational lo = p[0], hi = p[0];
        for (const auto& v : p) {
            if (v < lo)
                lo = v;
            if (v > hi)
                hi = v;
        }
        return Enclosure{lo, hi};
    });
}

int compare(const AlgebraicReal& a, const AlgebraicReal& b)
{
    if (a.is_rational() && b.is_rational())
        return cmp(a.rational_value(), b.rational_value()) < 0 ? -1
               : a.rational_value() == b.rational_value() ? 0
                                                           : 1;
    if (a.minpoly_ == b.minpoly_) {
        Rational lo = std::max(a.iv_.lo, b.iv_.lo), hi = std::min(a.iv_.hi, b.iv_.hi);
        if (lo < hi && count_roots_between(a.minpoly_, lo, hi) > 0)
            return 0;
    }
    auto za = primitive_integer(a.minpoly_), zb = primitive_integer(b.minpoly_);
    while (true) {
        if (a.iv_.hi <= b.iv_.lo)
            return -1;
        if (b.iv_.hi <= a.iv_.lo)
            return 1;
        if (a.is_rational())
            a.refine((a.iv_.hi - a.iv_.lo) / 2);
        else
            bisect(za, a.iv_);
        if (b.is_rational())
            b.refine((b.iv_.hi - b.iv_.lo) / 2);
        else
            bisect(zb, b.iv_);
    }
}

std::string AlgebraicReal::to_decimal(int digits) const
{
    Rational eps = 1;
    Integer scale;
    mpz_ui_pow_ui(scale.get_mpz_t(), 10, digits + 4);
    eps /= scale;
    return format_rounded(approx(eps), digits);
}

std::string AlgebraicReal::serialize() const
{
    std::string s = "minpoly=[";
    auto z = primitive_integer(minpoly_);
    for (size_t i = 0; i < z.size(); ++i)
        s += (i ? "," : "") + z[i].get_str();
    s += "]; interval=(" + to_string(iv_.lo) + ", " + to_string(iv_.hi) + ")";
    return s;
}

AlgebraicReal AlgebraicReal::parse(const std::string& s)
{
    auto lb = s.find('['), rb = s.find(']', lb == std::string::npos ? 0 : lb);
    auto lp = s.find('(', rb == std::string::npos ? 0 : rb);
    auto rp = s.find(')', lp == std::string::npos ? 0 : lp);
    if (lb == std::string::npos || rb == std::string::npos || lp == std::string::npos ||
        rp == std::string::npos)
        throw std::invalid_argument("malformed algebraic number: " + s);
    std::vector<Rational> coeffs;
    std::string body = s.substr(lb + 1, rb - lb - 1);
    size_t pos = 0;
    while (pos <= body.size()) {
        size_t c = body.find(',', pos);
        if (c == std::string::npos)
            c = body.size();
        coeffs.push_back(parse_rational(body.substr(pos, c - pos)));
        pos = c + 1;
    }
    std::string iv = s.substr(lp + 1, rp - lp - 1);
    size_t comma = iv.find(',');
    if (comma == std::string::npos)
        throw std::invalid_argument("malformed interval: " + s);
    Polynomial p(coeffs);
    if (p.degree() < 1)
        throw std::invalid_argument("constant minimal polynomial: " + s);
    return from_root(p, parse_rational(iv.substr(0, comma)), parse_rational(iv.substr(comma + 1)));
}

AlgebraicReal sqrt_nonneg(const AlgebraicReal& a)
{
    int sg = a.sign();
    if (sg < 0)
        throw std::domain_error("square root of a negative number");
    if (sg == 0)
        return AlgebraicReal(0);
    if (a.is_rational()) {
        Rational r = a.rational_value();
        if (mpz_perfect_square_p(r.get_num_mpz_t()) && mpz_perfect_square_p(r.get_den_mpz_t())) {
            Integer n, d;
            mpz_sqrt(n.get_mpz_t(), r.get_num_mpz_t());
            mpz_sqrt(d.get_mpz_t(), r.get_den_mpz_t());
            return AlgebraicReal(Rational(n, d));
        }
    }
    Polynomial cand = a.minpoly().substitute_square();
    return identify_root(cand, [&](int iter) {
        unsigned k = 16 + 4 * iter;
        a.refine(width_for(iter));
        Rational lo = a.lo() < 0 ? Rational(0) : a.lo();
        Rational den = 1;
        mpz_mul_2exp(den.get_num_mpz_t(), den.get_num_mpz_t(), k);
        Rational slo = Rational(sqrt_scaled(lo, k)) / den;
        Rational shi = Rational(sqrt_scaled(a.hi(), k) + 1) / den;
        return Enclosure{slo, shi};
    });
}

AlgebraicReal two_cos_pi(long p, long q)
{
    if (q <= 0)
        throw std::invalid_argument("denominator must be positive");
    long g = std::gcd(p, q);
    p /= g;
    q /= g;
    p %= 2 * q;
    if (p < 0)
        p += 2 * q;
    if (p > q)
        p = 2 * q - p;
    if (p == 0)
        return AlgebraicReal(2);
    if (p == q)
        return AlgebraicReal(-2);
    long N = 2 * q / std::gcd(p, 2 * q);
    long j = p * N / (2 * q);
    Polynomial phi = cyclotomic(int(N));
    int h = phi.degree() / 2;
    Polynomial psi = Polynomial::constant(phi.coeff(h));
    for (int k = 1; k <= h; ++k)
        psi += phi.coeff(h + k) * vieta_lucas(k);
    long rank = 0;
    for (long i = 1; i < j; ++i)
        if (std::gcd(i, N) == 1)
            ++rank;
    auto roots = isolate_real_roots(psi);
    const auto& iv = roots.at(roots.size() - 1 - rank);
    return AlgebraicReal::from_root(psi, iv.lo, iv.hi);
}

AlgebraicReal cos_pi(long p, long q) { return two_cos_pi(p, q) * AlgebraicReal(Rational(1, 2)); }

bool is_algebraic_integer(const AlgebraicReal& a)
{
    for (const auto& c : a.minpoly().coeffs())
        if (c.get_den() != 1)
            return false;
    return true;
}

bool is_totally_real(const AlgebraicReal& a) { return count_real_roots(a.minpoly()) == a.degree(); }

}  // namespace coxarith
