#include "coxarith/number_field.hpp"

#include <stdexcept>

#include "coxarith/factor.hpp"
#include "coxarith/linalg.hpp"

namespace coxarith {

// ------------------------------------------------------------ FieldElem

FieldElem::FieldElem(FieldPtr f, const Polynomial& p) : f_(std::move(f)), p_(f_->reduce(p)) {}

FieldElem FieldElem::constant(FieldPtr f, const Rational& c)
{
    return FieldElem(std::move(f), Polynomial::constant(c));
}

Rational FieldElem::rational_value() const
{
    if (!is_rational())
        throw std::logic_error("element is not rational");
    return p_.coeff(0);
}

FieldElem FieldElem::operator-() const
{
    FieldElem r = *this;
    r.p_ = -p_;
    return r;
}

FieldElem FieldElem::inverse() const
{
    FieldElem r = *this;
    r.p_ = f_->inverse(p_);
    return r;
}

FieldElem& FieldElem::operator+=(const FieldElem& o)
{
    if (!f_)
        f_ = o.f_;
    p_ += o.p_;
    return *this;
}

FieldElem& FieldElem::operator-=(const FieldElem& o)
{
    if (!f_)
        f_ = o.f_;
    p_ -= o.p_;
    return *this;
}

FieldElem& FieldElem::operator*=(const FieldElem& o)
{
    if (!f_)
        f_ = o.f_;
    p_ = f_->multiply(p_, o.p_);
    return *this;
}

FieldElem operator*(FieldElem a, const Rational& c)
{
    a.p_ *= c;
    return a;
}

Rational FieldElem::trace() const { return f_->trace(p_); }
Polynomial FieldElem::charpoly() const { return f_->charpoly(p_); }
Polynomial FieldElem::minpoly() const { return squarefree_part(charpoly()); }

int FieldElem::sign(int j) const { return f_->sign_at(p_, j < 0 ? f_->identity() : j); }

AlgebraicReal FieldElem::value(int j) const { return f_->evaluate(p_, j < 0 ? f_->identity() : j); }

// ---------------------------------------------------------- NumberField

FieldPtr NumberField::rationals() { return create(AlgebraicReal(0)); }

FieldPtr NumberField::create(const AlgebraicReal& primitive, std::vector<Generator> gens)
{
    std::shared_ptr<NumberField> f(new NumberField());
    f->minpoly_ = primitive.minpoly();
    f->theta_ = primitive;
    f->gens_ = std::move(gens);
    auto roots = isolate_real_roots(f->minpoly_);
    f->identity_ = -1;
    for (size_t i = 0; i < roots.size(); ++i) {
        const auto& iv = roots[i];
        AlgebraicReal r = AlgebraicReal::from_irreducible(f->minpoly_, iv);
        if (f->identity_ < 0 && compare(r, primitive) == 0) {
            f->identity_ = int(i);
            f->emb_.push_back(primitive);
        } else {
            f->emb_.push_back(r);
        }
    }
    if (f->identity_ < 0)
        throw std::logic_error("primitive element not among real roots");
    int n = f->degree();
    auto s = power_sums(f->minpoly_, 2 * n);
    f->power_traces_.assign(s.begin(), s.end());
    return f;
}

FieldElem NumberField::theta() const { return element(Polynomial::x()); }
FieldElem NumberField::element(const Polynomial& p) const { return FieldElem(shared_from_this(), p); }
FieldElem NumberField::constant(const Rational& c) const
{
    return FieldElem(shared_from_this(), Polynomial::constant(c));
}

Polynomial NumberField::multiply(const Polynomial& a, const Polynomial& b) const
{
    if (a.is_zero() || b.is_zero())
        return {};
    if (a.degree() == 0)
        return b * a.coeff(0);
    if (b.degree() == 0)
        return a * b.coeff(0);
    return reduce(a * b);
}

Polynomial NumberField::inverse(const Polynomial& a) const
{
    if (a.is_zero())
        throw std::domain_error("inverse of zero in number field");
    if (a.degree() == 0)
        return Polynomial::constant(1 / a.coeff(0));
    Polynomial s, t;
    Polynomial g = xgcd(a, minpoly_, s, t);
    if (g.degree() != 0)
        throw std::logic_error("minimal polynomial is reducible");
    return reduce(s * (1 / g.coeff(0)));
}

Rational NumberField::trace(const Polynomial& a) const
{
    Rational t = 0;
    for (int i = 0; i <= a.degree(); ++i)
        t += a.coeff(i) * power_traces_[i];
    return t;
}

Polynomial NumberField::charpoly(const Polynomial& a) const
{
    int n = degree();
    std::vector<Rational> s(n + 1);
    s[0] = n;
    Polynomial p = Polynomial::constant(1);
    for (int k = 1; k <= n; ++k) {
        p = multiply(p, a);
        s[k] = trace(p);
    }
    return from_power_sums(s, n);
}

std::pair<Rational, Rational> NumberField::enclose(const Polynomial& a, int j, int iter) const
{
    const AlgebraicReal& r = emb_.at(j);
    if (a.degree() <= 0) {
        Rational c = a.coeff(0);
        return {c, c};
    }
    Rational w = 1;
    mpz_mul_2exp(w.get_den_mpz_t(), w.get_den_mpz_t(), 8 + 6 * iter);
    w.canonicalize();
    r.refine(w);
    const Rational &lo = r.lo(), &hi = r.hi();
    Rational alo = a.lc(), ahi = a.lc();
    for (int i = a.degree() - 1; i >= 0; --i) {
        Rational p[4] = {alo * lo, alo * hi, ahi * lo, ahi * hi};
        Rational mn = p[0], mx = p[0];
        for (const auto& v : p) {
            if (v < mn)
                mn = v;
            if (v > mx)
                mx = v;
        }
        alo = mn + a.coeff(i);
        ahi = mx + a.coeff(i);
    }
    return {alo, ahi};
}

int NumberField::sign_at(const Polynomial& a, int j) const
{
    if (a.is_zero())
        return 0;
    if (a.degree() == 0)
        return sgn(a.coeff(0));
    for (int iter = 0;; ++iter) {
        auto [lo, hi] = enclose(a, j, iter);
        if (lo > 0)
            return 1;
        if (hi < 0)
            return -1;
    }
}

AlgebraicReal NumberField::evaluate(const Polynomial& a, int j) const
{
    Polynomial r = reduce(a);
    if (r.degree() <= 0)
        return AlgebraicReal(r.coeff(0));
    if (r == Polynomial::x())
        return emb_.at(j);
    Polynomial m = squarefree_part(charpoly(r));
    return identify_root(m, [&](int iter) { return enclose(r, j, iter); });
}

std::vector<Rational> NumberField::coords(const Polynomial& a) const
{
    Polynomial r = reduce(a);
    std::vector<Rational> v(degree());
    for (int i = 0; i <= r.degree(); ++i)
        v[i] = r.coeff(i);
    return v;
}

std::string NumberField::describe() const
{
    if (degree() == 1)
        return "Q";
    std::string s = "Q(theta), theta = " + theta_.to_decimal(12) + ", minpoly " + minpoly_.str();
    if (!gens_.empty()) {
        s += ", generated by ";
        for (size_t i = 0; i < gens_.size(); ++i)
            s += (i ? ", " : "") + gens_[i].label;
    }
    return s;
}

// ------------------------------------------------- fields from generators

namespace {

using PolyL = std::vector<Polynomial>;  // coefficients in a number field, lowest first

void trim(PolyL& p)
{
    while (!p.empty() && p.back().is_zero())
        p.pop_back();
}

PolyL rem_over(const NumberField& L, PolyL a, const PolyL& b)
{
    Polynomial inv = L.inverse(b.back());
    int db = int(b.size()) - 1;
    while (int(a.size()) - 1 >= db && !a.empty()) {
        int shift = int(a.size()) - 1 - db;
        Polynomial f = L.multiply(a.back(), inv);
        for (int j = 0; j <= db; ++j)
            a[shift + j] = L.reduce(a[shift + j] - L.multiply(f, b[j]));
        a.back() = Polynomial();
        trim(a);
    }
    return a;
}

/* Monic gcd over L. */
PolyL gcd_over(const NumberField& L, PolyL a, PolyL b)
{
    trim(a);
    trim(b);
    while (!b.empty()) {
        PolyL r = rem_over(L, a, b);
        a = std::move(b);
        b = std::move(r);
    }
    Polynomial inv = L.inverse(a.back());
    for (auto& c : a)
        c = L.multiply(c, inv);
    return a;
}

/* p(q) for p over Q and q over L. */
PolyL compose_over(const NumberField& L, const Polynomial& p, const PolyL& q)
{
    PolyL r;
    for (int i = p.degree(); i >= 0; --i) {
        PolyL next(r.size() + q.size() > 0 ? r.size() + q.size() - 1 : 0);
        for (size_t a = 0; a < r.size(); ++a)
            for (size_t b = 0; b < q.size(); ++b)
                next[a + b] = next[a + b] + L.multiply(r[a], q[b]);
        if (next.empty())
            next.resize(1);
        next[0] = next[0] + Polynomial::constant(p.coeff(i));
        for (auto& c : next)
            c = L.reduce(c);
        trim(next);
        r = std::move(next);
    }
    return r;
}

long weight(int i) { return i % 2 == 0 ? i / 2 + 1 : -(i / 2 + 1); }

struct Compositum {
    FieldPtr L;
    Polynomial theta_expr;  // old primitive in terms of the new one
    Polynomial a_expr;      // adjoined element in terms of the new one
};

/* Q(theta, a) with primitive element theta + c a, certified by a linear gcd. */
Compositum compositum(const NumberField& F, const AlgebraicReal& a)
{
    if (F.is_rational_field()) {
        auto L = NumberField::create(a);
        return {L, Polynomial(), Polynomial::x()};
    }
    const AlgebraicReal& theta = F.primitive();
    for (int i = 0; i < 64; ++i) {
        long c = weight(i);
        AlgebraicReal gamma = theta + AlgebraicReal(c) * a;
        auto L = NumberField::create(gamma);
        // common roots X of m_theta(X) and m_a((gamma - X)/c)
        PolyL P1;
        for (const auto& co : F.minpoly().coeffs())
            P1.push_back(Polynomial::constant(co));
        PolyL q{Polynomial(std::vector<Rational>{0, Rational(1, c)}), Polynomial::constant(Rational(-1, c))};
        PolyL P2 = compose_over(*L, a.minpoly(), q);
        PolyL g = gcd_over(*L, P1, P2);
        if (g.size() != 2)
            continue;
        Polynomial th = L->reduce(-g[0]);
        Polynomial ae = L->reduce((Polynomial::x() - th) * Rational(1, c));
        return {L, th, ae};
    }
    throw std::runtime_error("no primitive element found within the weight bound");
}

/* p(u) reduced in L. */
Polynomial substitute(const NumberField& L, const Polynomial& p, const Polynomial& u)
{
    Polynomial r;
    for (int i = p.degree(); i >= 0; --i)
        r = L.reduce(L.multiply(r, u) + Polynomial::constant(p.coeff(i)));
    return r;
}

}  // namespace

FieldPtr field_with_embeddings(const std::vector<AlgebraicReal>& gens, const std::vector<std::string>& labels)
{
    FieldPtr F = NumberField::rationals();
    std::vector<NumberField::Generator> out;
    for (size_t i = 0; i < gens.size(); ++i) {
        std::string label = i < labels.size() ? labels[i] : gens[i].to_decimal(12);
        Polynomial e;
        if (express(*F, gens[i], e)) {
            out.push_back({label, gens[i], e});
            continue;
        }
        Compositum c = compositum(*F, gens[i]);
        for (auto& g : out)
            g.expr = substitute(*c.L, g.expr, c.theta_expr);
        out.push_back({label, gens[i], c.a_expr});
        F = c.L;
    }
    return NumberField::create(F->primitive(), out);
}

bool express(const NumberField& F, const AlgebraicReal& a, Polynomial& expr)
{
    if (a.is_rational()) {
        expr = Polynomial::constant(a.rational_value());
        return true;
    }
    if (F.degree() % a.degree() != 0 || F.is_rational_field())
        return false;
    if (a.minpoly() == F.minpoly() && compare(a, F.primitive()) == 0) {
        expr = Polynomial::x();
        return true;
    }
    Compositum c = compositum(F, a);
    if (c.L->degree() != F.degree())
        return false;
    // rewrite a_expr (in gamma) as a polynomial in theta = theta_expr(gamma)
    int n = F.degree();
    std::vector<std::vector<Rational>> cols;
    Polynomial pw = Polynomial::constant(1);
    for (int k = 0; k < n; ++k) {
        cols.push_back(c.L->coords(pw));
        pw = c.L->multiply(pw, c.theta_expr);
    }
    std::vector<Rational> x;
    if (!solve_columns(cols, c.L->coords(c.a_expr), x))
        throw std::logic_error("inconsistent primitive element expression");
    expr = Polynomial(x);
    return true;
}

bool contains(const NumberField& F, const AlgebraicReal& a)
{
    Polynomial e;
    return express(F, a, e);
}

AlgebraicReal embed(const AlgebraicReal& a, const NumberField& F, int j)
{
    Polynomial e;
    if (!express(F, a, e))
        throw std::invalid_argument("element not in field");
    return F.evaluate(e, j);
}

bool is_subfield(const NumberField& small, const NumberField& big)
{
    if (big.degree() % small.degree() != 0)
        return false;
    return contains(big, small.primitive());
}

bool fields_equal(const NumberField& A, const NumberField& B)
{
    return A.degree() == B.degree() && contains(A, B.primitive());
}

}  // namespace coxarith
