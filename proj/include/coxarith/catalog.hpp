#pragma once

#include <map>
#include <string>
#include <vector>

#include "coxarith/coxeter.hpp"

namespace coxarith {

std::string sha256_hex(const std::string& s);

/* Parameters k, l, m; 0 marks a slot the family does not use. */
struct PrismSpec {
    int family = 0;
    int k = 0, l = 0, m = 0;
    int dim = 0;
    bool compact = true;

    int param(char name) const;
    void set_param(char name, int value);
    std::string str() const;
    /* Key used for sorting and caching: "family:k:l:m". */
    std::string key() const;
    friend bool operator==(const PrismSpec& a, const PrismSpec& b)
    {
        return a.family == b.family && a.k == b.k && a.l == b.l && a.m == b.m;
    }
    friend bool operator<(const PrismSpec& a, const PrismSpec& b)
    {
        if (a.family != b.family)
            return a.family < b.family;
        if (a.k != b.k)
            return a.k < b.k;
        if (a.l != b.l)
            return a.l < b.l;
        return a.m < b.m;
    }
};

struct ParamRange {
    char name = 0;
    int lo = 0, hi = -1;      // hi < 0: unbounded
    std::vector<int> values;  // nonempty: explicit set

    bool allows(int v) const;
    bool bounded() const { return !values.empty() || hi >= 0; }
};

struct TemplateEdge {
    int i = 0, j = 0;
    int m = 0;        // fixed label, 0 dashed
    char slot = 0;    // parameter name, or 0 for a fixed label
};

struct FamilyTemplate {
    int id = 0;
    int dim = 0;
    bool compact = true;
    std::vector<ParamRange> params;
    std::vector<std::vector<std::string>> hyperbolic;
    std::vector<std::pair<char, char>> symmetric;
    std::vector<TemplateEdge> edges;

    int nodes() const { return dim + 2; }
    const ParamRange* range(char name) const;
};

class Catalog {
public:
    static Catalog parse(const std::string& text);
    /* Catalog shipped with the library. */
    static const Catalog& builtin();

    const std::string& text() const { return text_; }
    /* SHA-256 of the catalog text, hex. */
    const std::string& checksum() const { return checksum_; }
    const std::map<int, FamilyTemplate>& families() const { return fam_; }
    const FamilyTemplate& family(int id) const;

    /* Fills single-valued slots, canonicalizes symmetric pairs and checks
     * every constraint. Throws std::invalid_argument on violation. */
    PrismSpec make_spec(int family, int k, int l, int m) const;
    CoxeterDiagram diagram_for(const PrismSpec& spec) const;
    GramTemplate gram_for(const PrismSpec& spec) const;

    /* Every spec of the given dimension with free parameters <= max_m. */
    std::vector<PrismSpec> enumerate(int dim, int max_m) const;
    std::vector<PrismSpec> enumerate_family(int family, int max_m) const;

private:
    std::string text_, checksum_;
    std::map<int, FamilyTemplate> fam_;
};

inline PrismSpec make_spec(int family, int k = 0, int l = 0, int m = 0)
{
    return Catalog::builtin().make_spec(family, k, l, m);
}
inline CoxeterDiagram diagram_for(const PrismSpec& s) { return Catalog::builtin().diagram_for(s); }
inline GramTemplate gram_for(const PrismSpec& s) { return Catalog::builtin().gram_for(s); }
inline std::vector<PrismSpec> enumerate(int dim, int max_m) { return Catalog::builtin().enumerate(dim, max_m); }

/* Labels of the base face: the lateral-lateral block of the diagram. For a
 * prism in H^3 this is the triangle (sorted). */
std::vector<int> base_triangle(const PrismSpec& spec);

/* Finite set of specs in H^3 that can still be quasi-arithmetic: compact
 * families pruned by the base triangle, noncompact families by labels in
 * {2,3,4,6}. Default bound on m for the compact families is 30. */
std::vector<PrismSpec> finite_qa_candidate_set(int dim = 3, int max_m = 30);

}  // namespace coxarith
