#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "coxarith/extension.hpp"
#include "coxarith/linalg.hpp"
#include "coxarith/number_field.hpp"

namespace coxarith {

/* Edge label: m >= 3 for an angle pi/m, 0 for a dashed edge. */
struct DiagramEdge {
    int i = 0, j = 0;
    int m = 0;
};

struct CoxeterDiagram {
    int nodes = 0;
    int dim = 0;
    std::vector<DiagramEdge> edges;

    /* Text form: header "nodes N dim d", then "i j m" or "i j -" per edge. */
    static CoxeterDiagram parse(const std::string& text);
    std::string to_text() const;
    void validate() const;
};

/* Symmetric label matrix: 1 on the diagonal, 2 for a right angle, m >= 3,
 * 0 for the single dashed pair. */
struct GramTemplate {
    int size = 0;
    int dim = 0;
    std::vector<std::vector<int>> label;
    std::pair<int, int> dashed{-1, -1};

    bool has_unknown() const { return dashed.first >= 0; }
    /* Least common multiple of the labels whose cosine is irrational. */
    int cosine_level() const;
    /* Labels >= 4 that occur. */
    std::vector<int> labels() const;
    std::string entry_string(int i, int j) const;
};

GramTemplate gram_from_diagram(const CoxeterDiagram& d, int dim);

/* Real field generated by cos(pi/n) over a set of labels. When the Galois
 * group of Q(zeta_2L) fixes more than +-1 on all of them (L = lcm), the
 * compositum is built directly instead of Q(2cos(pi/L)). */
class CosineField {
public:
    CosineField() = default;
    static CosineField for_labels(const std::vector<int>& labels);
    /* Q(2cos(pi/L)), or Q when L <= 3. */
    static CosineField cyclotomic(int L);
    /* Degree of the compositum of Q(cos(pi/n)), from the Galois group. */
    static int predicted_degree(const std::vector<int>& labels);

    const FieldPtr& field() const { return F_; }
    int level() const { return level_; }
    bool is_cyclotomic() const { return cyclotomic_; }
    bool has(int m) const;
    /* cos(pi/m); throws std::invalid_argument if m is not covered. */
    FieldElem cos_pi(int m) const;

private:
    FieldPtr F_;
    int level_ = 1;
    bool cyclotomic_ = true;
    std::map<int, Polynomial> two_cos_;  // 2cos(pi/n) in the primitive element
};

CosineField cosine_field(const GramTemplate& g);

using GramMatrix = Matrix<FieldElem>;

/* Entries in F with the dashed entry set to -t. */
GramMatrix gram_over(const GramTemplate& g, const CosineField& C, const FieldElem& t);

/* det G(t) = c0 + c1 t + c2 t^2 */
struct DetInT {
    FieldElem c0, c1, c2;
};
DetInT det_in_t(const GramTemplate& g, const CosineField& C);

struct Signature {
    int pos = 0, neg = 0, zero = 0;
    friend bool operator==(const Signature& a, const Signature& b)
    {
        return a.pos == b.pos && a.neg == b.neg && a.zero == b.zero;
    }
};
std::string to_string(const Signature& s);

/* Inertia at the identity embedding from the characteristic polynomial. */
Signature signature(const GramMatrix& G);

/* a^2 = -c0/c2 in the cosine field, checked to exceed 1. */
struct SquaredDistance {
    CosineField C;
    FieldPtr F;
    FieldElem a_squared;
};
SquaredDistance solve_a_squared(const GramTemplate& g);

struct SolvedGram {
    GramTemplate tmpl;
    CosineField C;
    FieldPtr F;            // cosine field
    FieldElem a_squared;   // in F
    SqrtExtension ext;     // A = F(a)
    GramMatrix G;          // over A
    FieldElem a;           // in A

    AlgebraicReal a_value() const { return a.value(); }
    AlgebraicReal a_squared_value() const { return a_squared.value(); }
};

/* Solves det G = 0 for the root a > 1 and checks signature (dim, 1, 1).
 * Throws std::domain_error if no admissible root exists. */
SolvedGram solve_base_distance(const GramTemplate& g);

/* Numeric Gram matrix (no unknown) over its cosine field. */
GramMatrix gram_numeric(const GramTemplate& g, FieldPtr* field_out = nullptr);

struct CyclicProduct {
    std::vector<int> cycle;  // closed index sequence without repetition of the start
    FieldElem value;
    std::string label() const;
};

/* Generators of Cyc(scale * G): diagonal entries, squares of nonzero
 * off-diagonal entries, and the products around every simple cycle of the
 * support graph of length >= 3. */
std::vector<CyclicProduct> cyclic_products(const GramMatrix& G, const Rational& scale = 1);

struct FieldPair {
    Subfield K;  // entries field
    Subfield k;  // cyclic-product field
};
FieldPair field_pair(const GramMatrix& G);

/* Ground field of a solved Gram computed inside F. Conjugating G by a
 * diagonal matrix keeps every cyclic product; scaling the dashed row by a puts
 * all entries in F when one end of the dashed pair has no other neighbour.
 * Throws std::invalid_argument otherwise. */
Subfield ground_field_in_base(const GramTemplate& g, const SquaredDistance& s);

/* Principal minors indexed by bitmask (index 0 unused). */
std::vector<FieldElem> principal_minors(const GramMatrix& G);

}  // namespace coxarith
