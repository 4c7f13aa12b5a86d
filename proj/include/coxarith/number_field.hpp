#pragma once

#include <memory>
#include <string>
#include <utility>
#include <vector>

#include "coxarith/algebraic.hpp"

namespace coxarith {

class NumberField;
using FieldPtr = std::shared_ptr<const NumberField>;

/* Element of a number field, stored as a polynomial in the primitive element
 * reduced modulo its minimal polynomial. */
class FieldElem {
public:
    FieldElem() = default;
    FieldElem(FieldPtr f, const Polynomial& p);
    static FieldElem constant(FieldPtr f, const Rational& c);

    const FieldPtr& field() const { return f_; }
    const Polynomial& poly() const { return p_; }
    bool is_zero() const { return p_.is_zero(); }
    bool is_rational() const { return p_.degree() <= 0; }
    Rational rational_value() const;

    FieldElem operator-() const;
    FieldElem inverse() const;
    FieldElem& operator+=(const FieldElem& o);
    FieldElem& operator-=(const FieldElem& o);
    FieldElem& operator*=(const FieldElem& o);
    friend FieldElem operator+(FieldElem a, const FieldElem& b) { return a += b; }
    friend FieldElem operator-(FieldElem a, const FieldElem& b) { return a -= b; }
    friend FieldElem operator*(FieldElem a, const FieldElem& b) { return a *= b; }
    friend FieldElem operator/(const FieldElem& a, const FieldElem& b) { return a * b.inverse(); }
    friend FieldElem operator*(FieldElem a, const Rational& c);
    friend bool operator==(const FieldElem& a, const FieldElem& b) { return a.p_ == b.p_; }
    friend bool operator!=(const FieldElem& a, const FieldElem& b) { return !(a.p_ == b.p_); }

    Rational trace() const;
    Polynomial charpoly() const;
    Polynomial minpoly() const;
    /* Sign and value under the j-th real embedding; j < 0 means identity. */
    int sign(int j = -1) const;
    AlgebraicReal value(int j = -1) const;

private:
    FieldPtr f_;
    Polynomial p_;
};

/* Real number field Q(theta) with theta a real algebraic number. The real
 * embeddings are the real roots of the minimal polynomial in increasing
 * order; identity() is the index of theta itself. */
class NumberField : public std::enable_shared_from_this<NumberField> {
public:
    struct Generator {
        std::string label;
        AlgebraicReal value;
        Polynomial expr;
    };

    static FieldPtr rationals();
    static FieldPtr create(const AlgebraicReal& primitive, std::vector<Generator> gens = {});

    int degree() const { return minpoly_.degree(); }
    const Polynomial& minpoly() const { return minpoly_; }
    const AlgebraicReal& primitive() const { return theta_; }
    const std::vector<AlgebraicReal>& embeddings() const { return emb_; }
    int identity() const { return identity_; }
    bool is_totally_real() const { return int(emb_.size()) == degree(); }
    bool is_rational_field() const { return degree() == 1; }
    const std::vector<Generator>& generators() const { return gens_; }

    FieldElem theta() const;
    FieldElem element(const Polynomial& p) const;
    FieldElem constant(const Rational& c) const;

    Polynomial reduce(const Polynomial& p) const { return p.degree() < degree() ? p : p % minpoly_; }
    Polynomial multiply(const Polynomial& a, const Polynomial& b) const;
    Polynomial inverse(const Polynomial& a) const;
    Rational trace(const Polynomial& a) const;
    Polynomial charpoly(const Polynomial& a) const;
    int sign_at(const Polynomial& a, int j) const;
    /* Closed rational enclosure of a(theta_j); shrinks with iter. */
    std::pair<Rational, Rational> enclose(const Polynomial& a, int j, int iter) const;
    AlgebraicReal evaluate(const Polynomial& a, int j) const;

    /* Coordinates (length degree) of a reduced element. */
    std::vector<Rational> coords(const Polynomial& a) const;

    std::string describe() const;

private:
    NumberField() = default;
    Polynomial minpoly_;
    AlgebraicReal theta_;
    std::vector<AlgebraicReal> emb_;
    int identity_ = 0;
    std::vector<Rational> power_traces_;
    std::vector<Generator> gens_;
};

/* Q(a_1, ..., a_r) with a primitive element sum c_i a_i; weights are tried
 * in the order 1, -1, 2, -2, ... */
FieldPtr field_with_embeddings(const std::vector<AlgebraicReal>& gens,
                               const std::vector<std::string>& labels = {});

/* Expression of a in the primitive element of F, if a lies in F. */
bool express(const NumberField& F, const AlgebraicReal& a, Polynomial& expr);
bool contains(const NumberField& F, const AlgebraicReal& a);
/* sigma_j(a) for a in F. Throws std::invalid_argument if a is not in F. */
AlgebraicReal embed(const AlgebraicReal& a, const NumberField& F, int j);
bool fields_equal(const NumberField& A, const NumberField& B);
bool is_subfield(const NumberField& small, const NumberField& big);

}  // namespace coxarith
