#include "doctest.h"

#include "coxarith/catalog.hpp"
#include "coxarith/coxeter.hpp"
#include "oracles.hpp"

using namespace coxarith;

namespace {

AlgebraicReal rt(long n) { return sqrt_nonneg(AlgebraicReal(n)); }

}  // namespace

TEST_CASE("diagram text round trip")
{
    CoxeterDiagram d = CoxeterDiagram::parse("nodes 5 dim 3\n0 1 -\n1 4 3\n2 4 4\n2 3 6\n");
    CHECK(d.nodes == 5);
    CHECK(d.edges.size() == 4);
    CHECK(CoxeterDiagram::parse(d.to_text()).to_text() == d.to_text());
    GramTemplate g = gram_from_diagram(d, 3);
    CHECK(g.dashed == std::pair<int, int>{0, 1});
    CHECK(g.label[2][4] == 4);
    CHECK(g.label[4][2] == 4);
    CHECK(g.label[0][2] == 2);
    CHECK(g.cosine_level() == 12);
    CHECK_THROWS(CoxeterDiagram::parse("nodes 3 dim 1\n0 1 x\n"));
}

TEST_CASE("cosine field degree matches an independent field construction")
{
    std::vector<std::vector<int>> sets = {{4}, {5}, {7}, {4, 5}, {4, 6}, {5, 7}, {8, 12}, {4, 5, 6}, {9, 5}, {7, 4}};
    for (const auto& s : sets) {
        CosineField C = CosineField::for_labels(s);
        std::vector<AlgebraicReal> gens;
        for (int n : s)
            gens.push_back(cos_pi(1, n));
        FieldPtr ref = field_with_embeddings(gens);
        CHECK(C.field()->degree() == ref->degree());
        CHECK(CosineField::predicted_degree(s) == ref->degree());
        CHECK(fields_equal(*C.field(), *ref));
        for (int n : s)
            CHECK(C.cos_pi(n).value() == cos_pi(1, n));
    }
    CHECK(CosineField::cyclotomic(3).field()->degree() == 1);
    CHECK(CosineField::cyclotomic(7).field()->degree() == 3);
    CHECK_THROWS_AS(CosineField::for_labels({5}).cos_pi(7), std::invalid_argument);
}

TEST_CASE("a^2 of the right-angled-base prisms")
{
    SquaredDistance s = solve_a_squared(gram_for(make_spec(1, 2, 4, 6)));
    CHECK(s.a_squared.value() == AlgebraicReal(Rational(5, 4)));
    DetInT d = det_in_t(gram_for(make_spec(1, 2, 4, 6)), s.C);
    CHECK(d.c1.is_zero());
    CHECK((-d.c0 / d.c2) == s.a_squared);

    SolvedGram g = solve_base_distance(gram_for(make_spec(2, 2, 3, 8)));
    CHECK(g.a_squared_value() == (rt(2) + AlgebraicReal(2)) / AlgebraicReal(2));
    CHECK(g.a_value() * g.a_value() == g.a_squared_value());
    CHECK(g.a_value() > AlgebraicReal(1));
}

TEST_CASE("signature agrees with the numeric eigenvalue oracle")
{
    std::vector<PrismSpec> specs = {make_spec(1, 2, 3, 7), make_spec(1, 2, 4, 6), make_spec(1, 3, 3, 4),
                                    make_spec(1, 5, 5, 3), make_spec(1, 2, 3, 13), make_spec(2, 2, 3, 8),
                                    make_spec(3, 3, 3, 5), make_spec(5, 0, 0, 4), make_spec(8, 3, 4, 4)};
    for (int f = 12; f <= 24; ++f)
        for (const auto& s : Catalog::builtin().enumerate_family(f, 6))
            specs.push_back(s);
    for (const auto& spec : specs) {
        CAPTURE(spec.str());
        GramTemplate t = gram_for(spec);
        SolvedGram g = solve_base_distance(t);
        Signature exact = signature(g.G);
        CHECK(exact == Signature{spec.dim, 1, 1});
        CHECK(oracle::prism_signature(t, g.a_squared_value()) == exact);
    }
}

TEST_CASE("no admissible root for a spherical base")
{
    GramTemplate g = gram_from_diagram(CoxeterDiagram::parse("nodes 5 dim 3\n0 1 -\n1 4 3\n2 4 3\n2 3 3\n"), 3);
    CHECK_THROWS_AS(solve_base_distance(g), std::domain_error);
}

TEST_CASE("cyclic products of a triangle")
{
    GramTemplate t;
    t.size = 3;
    t.dim = 2;
    t.label = {{1, 3, 5}, {3, 1, 4}, {5, 4, 1}};
    FieldPtr F;
    GramMatrix G = gram_numeric(t, &F);
    auto cyc = cyclic_products(G, 2);
    // 3 diagonal, 3 squares, one triangle
    CHECK(cyc.size() == 7);
    AlgebraicReal tri = AlgebraicReal(-8) * cos_pi(1, 3) * cos_pi(1, 4) * cos_pi(1, 5);
    bool found = false;
    for (const auto& c : cyc)
        found = found || (c.cycle.size() == 3 && c.value.value() == tri);
    CHECK(found);
    FieldPair fp = field_pair(G);
    CHECK(fp.k.degree() == 4);
    CHECK(principal_minors(G).size() == 8);
}
