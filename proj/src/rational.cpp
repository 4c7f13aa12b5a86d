#include "coxarith/rational.hpp"

#include <stdexcept>

namespace coxarith {

std::string to_string(const Integer& z) { return z.get_str(); }

std::string to_string(const Rational& q) { return q.get_str(); }

Rational parse_rational(const std::string& s)
{
    size_t b = s.find_first_not_of(" \t");
    size_t e = s.find_last_not_of(" \t");
    if (b == std::string::npos)
        throw std::invalid_argument("empty rational");
    std::string t = s.substr(b, e - b + 1);
    if (!t.empty() && t[0] == '+')
        t = t.substr(1);
    Rational q;
    if (q.set_str(t, 10) != 0)
        throw std::invalid_argument("bad rational: " + s);
    if (q.get_den() == 0)
        throw std::invalid_argument("zero denominator: " + s);
    q.canonicalize();
    return q;
}

Rational pow(const Rational& q, unsigned e)
{
    Integer n, d;
    mpz_pow_ui(n.get_mpz_t(), q.get_num_mpz_t(), e);
    mpz_pow_ui(d.get_mpz_t(), q.get_den_mpz_t(), e);
    return Rational(n, d);
}

Integer binomial(unsigned n, unsigned k)
{
    Integer r;
    mpz_bin_uiui(r.get_mpz_t(), n, k);
    return r;
}

std::string to_decimal(const Rational& q, int digits)
{
    Integer scale;
    mpz_ui_pow_ui(scale.get_mpz_t(), 10, digits);
    Integer num = q.get_num() * scale;
    Integer v;
    mpz_tdiv_q(v.get_mpz_t(), num.get_mpz_t(), q.get_den_mpz_t());
    bool neg = v < 0;
    if (neg)
        v = -v;
    std::string s = v.get_str();
    if (digits > 0) {
        if ((int)s.size() <= digits)
            s = std::string(digits + 1 - s.size(), '0') + s;
        s.insert(s.size() - digits, ".");
    }
    return neg ? "-" + s : s;
}

}  // namespace coxarith
