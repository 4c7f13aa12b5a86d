#pragma once

#include <string>
#include <vector>

#include "coxarith/linalg.hpp"
#include "coxarith/number_field.hpp"

namespace coxarith {

/* A = F(sqrt(alpha)) for alpha in F positive at the identity embedding. The
 * square root is the positive one; A = F when alpha is already a square. */
struct SqrtExtension {
    FieldPtr A;
    Polynomial base_in_A;  // primitive element of F written in A
    FieldElem root;        // sqrt(alpha) in A
    bool is_square = false;

    FieldElem lift(const FieldElem& x) const;
};

SqrtExtension adjoin_sqrt(const FieldPtr& F, const FieldElem& alpha);

/* p(u) computed in the field L. */
Polynomial substitute_in(const NumberField& L, const Polynomial& p, const Polynomial& u);

/* Subfield Q(g_1, ..., g_r) of an ambient field, with its own primitive
 * element and real embeddings. */
class Subfield {
public:
    Subfield() = default;
    Subfield(const FieldPtr& ambient, const std::vector<FieldElem>& gens,
             const std::vector<std::string>& labels);

    const FieldPtr& field() const { return field_; }
    const FieldPtr& ambient() const { return ambient_; }
    const FieldElem& primitive_in_ambient() const { return primitive_; }
    int degree() const { return field_->degree(); }
    /* Expression in the subfield's primitive element; false if a is outside. */
    bool express(const FieldElem& a, Polynomial& expr) const;
    FieldElem to_subfield(const FieldElem& a) const;

private:
    FieldPtr ambient_, field_;
    FieldElem primitive_;
    std::shared_ptr<ColumnSolver> solver_;
};

}  // namespace coxarith
