#pragma once

#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "coxarith/catalog.hpp"
#include "coxarith/coxeter.hpp"

namespace coxarith {

enum class Verdict { Arithmetic, ProperlyQuasiArithmetic, NotQuasiArithmetic };
std::string to_string(Verdict v);
/* "A", "PQA", "NQA" */
std::string short_name(Verdict v);
Verdict parse_verdict(const std::string& s);

struct V1Result {
    bool holds = true;
    int degree = 1;
    int real_embeddings = 1;
    Polynomial minpoly;  // of the primitive element of K
    int negative_conjugate = -1;  // embedding of F with sigma(a^2) < 0
    std::string conjugate_value;
};

struct V2Result {
    bool holds = true;
    bool methods_agree = true;
    int embeddings = 0;   // real embeddings of K
    int nontrivial = 0;   // those not the identity on k
    int failing_embedding = -1;
    int negative_minor = -1;  // bitmask of a negative principal minor
    std::string minor_value;  // decimal value of that minor
};

struct V3Result {
    bool holds = true;
    int products = 0;
    std::string cycle;    // first non-integral cyclic product of 2G
    Polynomial minpoly;
};

V1Result check_V1(const NumberField& K);
/* V1 for K = F(a) with F totally real: a^2 must be positive at every real
 * embedding of F. */
V1Result check_V1_sqrt(const NumberField& F, const FieldElem& a_squared);
/* PSD of G^sigma for every real embedding sigma of K that moves k. Principal
 * minors and characteristic-polynomial signs are both evaluated. */
V2Result check_V2(const GramMatrix& G, const FieldPair& fp);
V3Result check_V3(const GramMatrix& G);

/* Sign of the determinant of G^sigma for every sigma; cached minors. */
struct EmbeddedGram {
    int embedding = 0;
    bool moves_k = false;
    std::vector<int> minor_signs;  // indexed by bitmask
    std::vector<int> charpoly_signs;
};
std::vector<EmbeddedGram> conjugate_grams(const GramMatrix& G, const FieldPair& fp);

/* PSD from principal minor signs / from det(xI - M) coefficient signs. */
bool psd_by_minors(const std::vector<int>& minor_signs);
bool psd_by_charpoly(const std::vector<int>& coeff_signs);

struct ClassificationReport {
    PrismSpec spec;
    Verdict verdict = Verdict::NotQuasiArithmetic;
    std::string path;  // "full" or "pruned"
    std::string prune_reason;
    std::optional<AlgebraicReal> a_squared;
    FieldPtr K, k;  // null when V1 fails on a large ambient field
    bool v2_evaluated = false;
    bool v3_evaluated = false;
    V1Result v1;
    V2Result v2;
    V3Result v3;

    nlohmann::json to_json() const;
    std::string witness() const;
};

enum class ClassifyMode { Auto, Full };

/* Ambient degree up to which fields, V2 and V3 are computed even after V1 fails. */
constexpr int kEagerFieldDegree = 24;

/* Throws std::invalid_argument for invalid specs and std::logic_error when an
 * internal cross-check fails. */
ClassificationReport classify(const PrismSpec& spec, ClassifyMode mode = ClassifyMode::Auto);
ClassificationReport classify_gram(const PrismSpec& spec, const GramTemplate& g);

/* Arithmeticity of the triangle group (k,l,m) by explicit conjugation
 * cos(pi/n) -> cos(j pi/n) over j coprime to 2 lcm. */
bool triangle_arithmetic(int k, int l, int m);
/* Same decision through the general field machinery (slow for large lcm). */
bool triangle_arithmetic_generic(int k, int l, int m);

}  // namespace coxarith
