#include "coxarith/extension.hpp"

#include <stdexcept>

#include "coxarith/factor.hpp"

namespace coxarith {

namespace {

/* u + v*y in F[y]/(y^2 - alpha) */
struct QuadElem {
    Polynomial u, v;
};

QuadElem quad_mul(const NumberField& F, const Polynomial& alpha, const QuadElem& a, const QuadElem& b)
{
    Polynomial vv = F.multiply(a.v, b.v);
    return {F.reduce(F.multiply(a.u, b.u) + F.multiply(vv, alpha)),
            F.reduce(F.multiply(a.u, b.v) + F.multiply(a.v, b.u))};
}

long weight(int i) { return i % 2 == 0 ? i / 2 + 1 : -(i / 2 + 1); }

Rational dyadic(int bits)
{
    Rational w = 1;
    mpz_mul_2exp(w.get_den_mpz_t(), w.get_den_mpz_t(), bits);
    w.canonicalize();
    return w;
}

/* Rational bounds lo <= sqrt(q) <= hi with hi - lo <= 2^-k. */
std::pair<Rational, Rational> sqrt_bounds(const Rational& q, unsigned k)
{
    Integer t = q.get_num();
    mpz_mul_2exp(t.get_mpz_t(), t.get_mpz_t(), 2 * k);
    t /= q.get_den();
    Integer r;
    mpz_sqrt(r.get_mpz_t(), t.get_mpz_t());
    Rational den = 1 / dyadic(k);
    return {Rational(r) / den, Rational(r + 1) / den};
}

}  // namespace

FieldElem SqrtExtension::lift(const FieldElem& x) const
{
    return A->element(substitute_in(*A, x.poly(), base_in_A));
}

Polynomial substitute_in(const NumberField& L, const Polynomial& p, const Polynomial& u)
{
    Polynomial r;
    for (int i = p.degree(); i >= 0; --i)
        r = L.reduce(L.multiply(r, u) + Polynomial::constant(p.coeff(i)));
    return r;
}

SqrtExtension adjoin_sqrt(const FieldPtr& F, const FieldElem& alpha)
{
    if (alpha.sign() <= 0)
        throw std::domain_error("square root of a non-positive element");
    const int n = F->degree();
    const Polynomial& al = alpha.poly();
    if (alpha.is_rational()) {
        Rational r = alpha.rational_value();
        if (mpz_perfect_square_p(r.get_num_mpz_t()) && mpz_perfect_square_p(r.get_den_mpz_t())) {
            Integer a, b;
            mpz_sqrt(a.get_mpz_t(), r.get_num_mpz_t());
            mpz_sqrt(b.get_mpz_t(), r.get_den_mpz_t());
            return {F, Polynomial::x(), F->constant(Rational(a, b)), true};
        }
    }
    for (int wi = 0; wi < 64; ++wi) {
        long c = weight(wi);
        QuadElem g{F->reduce(Polynomial::x()), Polynomial::constant(c)};
        // powers gamma^k, k = 0..2n, and their traces over Q
        std::vector<QuadElem> pw{{Polynomial::constant(1), Polynomial()}};
        std::vector<Rational> s(2 * n + 1);
        s[0] = 2 * n;
        for (int k = 1; k <= 2 * n; ++k) {
            pw.push_back(quad_mul(*F, al, pw.back(), g));
            s[k] = 2 * F->trace(pw.back().u);
        }
        Polynomial chi = from_power_sums(s, 2 * n);
        if (gcd(chi, chi.derivative()).degree() > 0)
            continue;
        const AlgebraicReal& th = F->embeddings()[F->identity()];
        AlgebraicReal gamma = identify_root(chi, [&](int iter) {
            unsigned k = 10 + 6 * iter;
            th.refine(dyadic(k));
            auto [alo, ahi] = F->enclose(al, F->identity(), iter);
            if (alo < 0)
                alo = 0;
            auto lo = sqrt_bounds(alo, k).first, hi = sqrt_bounds(ahi, k).second;
            Rational clo = c > 0 ? lo * c : hi * c, chi_ = c > 0 ? hi * c : lo * c;
            return std::pair<Rational, Rational>{th.lo() + clo, th.hi() + chi_};
        });
        const Polynomial& f = gamma.minpoly();
        if (f.degree() == 2 * n) {
            auto A = NumberField::create(gamma);
            std::vector<std::vector<Rational>> cols;
            for (int k = 0; k < 2 * n; ++k) {
                auto cu = F->coords(pw[k].u), cv = F->coords(pw[k].v);
                cu.insert(cu.end(), cv.begin(), cv.end());
                cols.push_back(cu);
            }
            ColumnSolver solver(cols);
            std::vector<Rational> eth(2 * n), ey(2 * n), x;
            auto ct = F->coords(Polynomial::x());
            for (int i = 0; i < n; ++i)
                eth[i] = ct[i];
            ey[n] = 1;
            if (!solver.solve(eth, x))
                throw std::logic_error("primitive element does not generate the extension");
            Polynomial base(x);
            if (!solver.solve(ey, x))
                throw std::logic_error("primitive element does not generate the extension");
            FieldElem root = A->element(Polynomial(x));
            if (root.sign() < 0)
                root = -root;
            return {A, base, root, false};
        }
        if (f.degree() != n)
            throw std::logic_error("unexpected factor degree in square root extension");
        // alpha is a square in F: reduce f(theta + c y) modulo y^2 - alpha
        QuadElem r{Polynomial(), Polynomial()};
        for (int i = f.degree(); i >= 0; --i) {
            r = quad_mul(*F, al, r, g);
            r.u = F->reduce(r.u + Polynomial::constant(f.coeff(i)));
        }
        if (r.v.is_zero())
            continue;
        Polynomial beta = F->reduce(F->multiply(-r.u, F->inverse(r.v)));
        if (F->multiply(beta, beta) != F->reduce(al))
            throw std::logic_error("square root certificate failed");
        FieldElem root = F->element(beta);
        if (root.sign() < 0)
            root = -root;
        return {F, Polynomial::x(), root, true};
    }
    throw std::runtime_error("no primitive element found for square root extension");
}

Subfield::Subfield(const FieldPtr& ambient, const std::vector<FieldElem>& gens,
                   const std::vector<std::string>& labels)
    : ambient_(ambient)
{
    const NumberField& A = *ambient;
    const size_t n = A.degree();
    RationalSpan span(n);
    std::vector<Polynomial> basis;
    span.insert(A.coords(Polynomial::constant(1)));
    basis.push_back(Polynomial::constant(1));

    std::vector<Polynomial> used;  // generators that enlarged the field
    Polynomial theta;              // current primitive element
    size_t dim_theta = 1;
    for (const auto& g : gens) {
        if (span.contains(A.coords(g.poly())))
            continue;
        used.push_back(g.poly());
        // close the span under multiplication by all generators used so far
        std::vector<Polynomial> queue;
        for (const auto& b : basis)
            for (const auto& u : used)
                queue.push_back(A.multiply(b, u));
        while (!queue.empty()) {
            Polynomial v = queue.back();
            queue.pop_back();
            if (!span.insert(A.coords(v)))
                continue;
            basis.push_back(v);
            for (const auto& u : used)
                queue.push_back(A.multiply(v, u));
        }
        size_t d = span.dim();
        if (theta.is_zero() && dim_theta == 1) {
            if (squarefree_part(A.charpoly(g.poly())).degree() == int(d)) {
                theta = g.poly();
                dim_theta = d;
                continue;
            }
        }
        bool found = false;
        for (int wi = 0; wi < 64 && !found; ++wi) {
            Polynomial cand = theta + g.poly() * Rational(weight(wi));
            if (squarefree_part(A.charpoly(cand)).degree() == int(d)) {
                theta = A.reduce(cand);
                found = true;
            }
        }
        if (!found)
            throw std::runtime_error("no primitive element found for subfield");
        dim_theta = d;
    }
    const size_t d = span.dim();
    primitive_ = A.element(theta);
    std::vector<std::vector<Rational>> cols;
    Polynomial pw = Polynomial::constant(1);
    for (size_t k = 0; k < d; ++k) {
        cols.push_back(A.coords(pw));
        pw = A.multiply(pw, theta);
    }
    solver_ = std::make_shared<ColumnSolver>(cols);

    AlgebraicReal theta_value = d == 1 ? AlgebraicReal(0) : primitive_.value();
    std::vector<NumberField::Generator> out;
    for (size_t i = 0; i < gens.size(); ++i) {
        std::vector<Rational> x;
        if (!solver_->solve(A.coords(gens[i].poly()), x))
            throw std::logic_error("generator outside its own subfield");
        std::string label = i < labels.size() ? labels[i] : "g" + std::to_string(i);
        bool dup = false;
        for (const auto& o : out)
            if (o.expr == Polynomial(x))
                dup = true;
        if (!dup)
            out.push_back({label, AlgebraicReal(), Polynomial(x)});
    }
    auto tmp = NumberField::create(theta_value);
    for (auto& o : out)
        o.value = tmp->evaluate(o.expr, tmp->identity());
    field_ = NumberField::create(theta_value, out);
}

bool Subfield::express(const FieldElem& a, Polynomial& expr) const
{
    std::vector<Rational> x;
    if (!solver_->solve(ambient_->coords(a.poly()), x))
        return false;
    expr = Polynomial(x);
    return true;
}

FieldElem Subfield::to_subfield(const FieldElem& a) const
{
    Polynomial e;
    if (!express(a, e))
        throw std::invalid_argument("element outside subfield");
    return field_->element(e);
}

}  // namespace coxarith
