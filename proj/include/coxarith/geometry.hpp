#pragma once

#include <optional>
#include <string>
#include <vector>

#include <boost/multiprecision/mpfr.hpp>

#include "coxarith/catalog.hpp"
#include "coxarith/coxeter.hpp"
#include "coxarith/vinberg.hpp"

namespace coxarith {

using Real = boost::multiprecision::mpfr_float;

/* Sets the working precision of Real to digits plus guard digits. */
void set_real_digits(int digits);
std::string real_str(const Real& x, int digits);
/* Rational approximation of an algebraic real, converted to Real. */
Real to_real(const AlgebraicReal& x, int digits);

/* 2 arccosh(a) from cosh^2 d = a^2. */
Real systole_bound_from_cosh2(const Real& cosh2);
std::string systole_upper_bound(const PrismSpec& spec, int digits = 50);

/* Closed forms of cosh^2 d for the compact families 1-3 as functions of m. */
struct ClosedFormRow {
    int family = 0;
    int k = 0, l = 0;
    std::string expr;
    bool uses_sqrt2 = false;
    bool uses_sqrt5 = false;
};
const std::vector<ClosedFormRow>& closed_form_rows();
/* Throws std::invalid_argument if (family, k, l) has no closed form. */
const ClosedFormRow& closed_form_row(int family, int k, int l);

/* Value in a cosine field covering m, and 4 or 5 when the row needs them. */
FieldElem closed_form_value(const ClosedFormRow& row, int m, const CosineField& C);
Real closed_form_real(const ClosedFormRow& row, long m);
/* The expression with m substituted. */
std::string closed_form_instance(const ClosedFormRow& row, long m);

struct ClosedFormCheck {
    PrismSpec spec;
    bool equal = false;
    std::string solved;  // decimals
    std::string closed;
};
ClosedFormCheck closed_form_compare(int family, int k, int l, int m);
bool closed_form_check(int family, int k, int l, int m);
/* Legal m in [lo, hi] for the row. */
std::vector<int> legal_m(int family, int k, int l, int lo, int hi);

struct SystoleRow {
    int family = 0;
    int k = 0, l = 0;
    long m = 0;
    std::string cosh2_exact;
    Real cosh2;
    Real bound;
};
std::vector<SystoleRow> systole_limit_report(int family, int k, int l, long m_max, int digits = 50,
                                             long m_min = 0);
std::string systole_csv(const std::vector<SystoleRow>& rows, int digits);

/* cosh(d1 + d2) = a1 a2 + sqrt(a1^2 - 1) sqrt(a2^2 - 1) */
AlgebraicReal cosh_addition(const AlgebraicReal& a1, const AlgebraicReal& a2);

/* Two straight prisms glued along their common base. Facets: top of left
 * (0), top of right (1), then the shared laterals. */
struct GluedPrism {
    PrismSpec left, right;
    GramTemplate tmpl;  // dashed pair (0, 1)
    CosineField C;
    FieldPtr F;
    FieldElem alpha_left, alpha_right;  // a_i^2
    FieldElem cross;                    // r_left^T G_L^{-1} r_right
    bool feet_aligned = false;          // r_left parallel to r_right
    bool standard_pair = false;         // families {1,2} with 3

    /* cosh of the distance between the two tops. */
    AlgebraicReal top_distance() const;
    /* Exact Gram over F(sqrt(alpha_left alpha_right)). */
    SqrtExtension ambient() const;
    GramMatrix gram(const SqrtExtension& ext) const;
};

/* Throws std::invalid_argument if the bases differ. */
GluedPrism glue(const PrismSpec& left, const PrismSpec& right);

struct Theorem2Record {
    int j = 0, k = 0, l = 0, m = 0;
    bool applicable = false;
    std::string note;
    PrismSpec left, right;
    /* sqrt5 in k(P): a cyclic product g of the glued Gram with sqrt5 in Q(g). */
    bool sqrt5_in_kP = false;
    std::string kP_cycle;
    AlgebraicReal kP_generator;
    Polynomial sqrt5_in_generator;  // sqrt5 = p(g)
    /* sqrt5 not in k(F) for the base triangle. */
    bool sqrt5_in_kF = true;
    FieldPtr kF;
    std::optional<Verdict> verdict;

    nlohmann::json to_json() const;
};
FieldPtr triangle_ground_field(int k, int l, int m);
Theorem2Record theorem2_check(int j, int k, int l, int m);

/* V1 and V2 on the exact glued Gram; nullopt when the ambient degree exceeds max_degree. */
std::optional<Verdict> glued_direct_verdict(const GluedPrism& p, int max_degree);

struct FieldClass {
    FieldPtr k;
    std::vector<PrismSpec> members;
};
struct CommensurabilityPartition {
    std::vector<FieldClass> classes;
    /* "distinct" across classes, "undetermined" within one. */
    std::string relation(const PrismSpec& a, const PrismSpec& b) const;
    nlohmann::json to_json() const;
};
FieldPtr prism_ground_field(const PrismSpec& spec);
CommensurabilityPartition commensurability_separation(const std::vector<PrismSpec>& specs);

}  // namespace coxarith
