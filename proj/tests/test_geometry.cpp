#include <cmath>

#include "doctest.h"

#include "coxarith/geometry.hpp"
#include "coxarith/report.hpp"
#include "oracles.hpp"

using namespace coxarith;

namespace {

AlgebraicReal rt(long n) { return sqrt_nonneg(AlgebraicReal(n)); }

}  // namespace

TEST_CASE("systole bound of (2,4,6)")
{
    double expected = 2 * std::acosh(std::sqrt(1.25));
    std::string s = systole_upper_bound(make_spec(1, 2, 4, 6), 30);
    CHECK(std::stod(s) == doctest::Approx(expected).epsilon(1e-14));
    CHECK(s.substr(0, 8) == "0.962423");
    set_real_digits(50);
    CHECK(systole_bound_from_cosh2(Real(1)) == 0);
}

TEST_CASE("closed forms agree with the solved a^2")
{
    for (const auto& row : closed_form_rows()) {
        if (row.family == 1 && row.l == 5 && row.k >= 3)
            continue;
        for (int m : legal_m(row.family, row.k, row.l, 2, 16)) {
            CAPTURE(row.family);
            CAPTURE(row.k);
            CAPTURE(row.l);
            CAPTURE(m);
            CHECK(closed_form_check(row.family, row.k, row.l, m));
        }
    }
    CHECK_THROWS_AS(closed_form_row(4, 2, 3), std::invalid_argument);
}

TEST_CASE("closed forms evaluated in floating point match the exact value")
{
    set_real_digits(40);
    const ClosedFormRow& r = closed_form_row(1, 2, 3);
    for (long m : {7L, 8L, 10L, 19L}) {
        Real x = closed_form_real(r, m);
        SolvedGram g = solve_base_distance(gram_for(make_spec(1, 2, 3, int(m))));
        CHECK(abs(x - to_real(g.a_squared_value(), 40)) < Real("1e-35"));
    }
    CHECK(closed_form_instance(r, 7).find("7") != std::string::npos);
}

TEST_CASE("(2,3) row matches the arithmetic entries at m = 7, 8, 10")
{
    const ClosedFormRow& r = closed_form_row(1, 2, 3);
    for (auto [m, expr] : std::vector<std::pair<int, std::string>>{
             {7, "(3*cos(1/7)^2-2)/(4*cos(1/7)^2-3)"}, {8, "(sqrt(2)-3)/(2*(sqrt(2)-2))"}, {10, "(sqrt(5)+7)/8"}}) {
        CosineField C = CosineField::for_labels({m, 4, 5});
        CHECK(closed_form_value(r, m, C).value() == parse_expression(expr));
    }
}

TEST_CASE("cosh^2 d decreases to 1 along (2,3,m)")
{
    auto rows = systole_limit_report(1, 2, 3, 60, 50, 7);
    REQUIRE(rows.size() == 54);
    for (size_t i = 1; i < rows.size(); ++i)
        CHECK(rows[i].cosh2 < rows[i - 1].cosh2);
    auto far = systole_limit_report(1, 2, 3, 10000, 50, 10000);
    REQUIRE(far.size() == 1);
    CHECK(far[0].cosh2 - 1 < Real("1e-3"));
    CHECK(far[0].bound < Real("0.05"));
    CHECK(far[0].cosh2 > 1);
}

TEST_CASE("cosh addition")
{
    AlgebraicReal a = rt(2), one(1);
    CHECK(cosh_addition(a, one) == a);
    CHECK(cosh_addition(a, AlgebraicReal(3)) == cosh_addition(AlgebraicReal(3), a));
    // cosh(2d) = 2 cosh^2 d - 1
    CHECK(cosh_addition(a, a) == AlgebraicReal(3));
}

TEST_CASE("glued prism")
{
    GluedPrism p = glue(make_spec(1, 2, 3, 7), make_spec(3, 2, 3, 7));
    CHECK(p.standard_pair);
    CHECK(p.tmpl.size == 5);
    CHECK(p.top_distance() > AlgebraicReal(1));
    SqrtExtension X = p.ambient();
    GramMatrix G = p.gram(X);
    CHECK(signature(G) == Signature{3, 1, 1});

    GluedPrism q = glue(make_spec(3, 2, 3, 7), make_spec(1, 2, 3, 7));
    CHECK(q.top_distance() == p.top_distance());
    CHECK_THROWS_AS(glue(make_spec(1, 2, 3, 7), make_spec(3, 2, 3, 8)), std::invalid_argument);
}

TEST_CASE("glued top distance from the numeric Gram matrix")
{
    GluedPrism p = glue(make_spec(2, 3, 3, 4), make_spec(3, 3, 3, 4));
    set_real_digits(60);
    Real t = to_real(p.top_distance(), 60);
    std::vector<std::vector<Real>> m = oracle::numeric_gram(p.tmpl, t);
    CHECK(abs(oracle::determinant(m)) < Real("1e-50"));
    CHECK(oracle::numeric_signature(m, 60) == Signature{3, 1, 1});
}

TEST_CASE("glued prisms over a base with m prime to 5")
{
    for (int j : {1, 2})
        for (int m : {7, 8, 11}) {
            Theorem2Record r = theorem2_check(j, 2, 3, m);
            CAPTURE(j);
            CAPTURE(m);
            CHECK(r.applicable);
            CHECK(r.sqrt5_in_kP);
            CHECK(!r.sqrt5_in_kF);
            CHECK(r.verdict == Verdict::NotQuasiArithmetic);
            AlgebraicReal g = r.kP_generator;
            AlgebraicReal s5(0), pw(1);
            for (int i = 0; i <= r.sqrt5_in_generator.degree(); ++i) {
                s5 = s5 + AlgebraicReal(r.sqrt5_in_generator.coeff(i)) * pw;
                pw = pw * g;
            }
            CHECK(s5 == rt(5));
            CHECK(!contains(*r.kF, rt(5)));
        }
    Theorem2Record n = theorem2_check(1, 2, 3, 10);
    CHECK(!n.applicable);
    CHECK(!n.verdict);
}

TEST_CASE("ground field of a triangle")
{
    FieldPtr k = triangle_ground_field(2, 3, 7);
    CHECK(k->degree() == 3);
    CHECK(contains(*k, cos_pi(2, 7)));
    CHECK(triangle_ground_field(2, 4, 6)->degree() == 1);
}

TEST_CASE("commensurability classes from ground fields")
{
    std::vector<PrismSpec> specs;
    for (int m : {7, 11, 13})
        specs.push_back(make_spec(1, 2, 3, m));
    CommensurabilityPartition p = commensurability_separation(specs);
    REQUIRE(p.classes.size() == 3);
    for (const auto& c : p.classes)
        CHECK(c.k->degree() == oracle::real_cyclotomic_degree(c.members[0].m));
    CHECK(p.relation(specs[0], specs[1]) == "distinct");

    auto same = commensurability_separation({make_spec(1, 2, 3, 10), make_spec(1, 3, 3, 5)});
    CHECK(same.classes.size() == 1);
    CHECK(same.relation(make_spec(1, 2, 3, 10), make_spec(1, 3, 3, 5)) == "undetermined");
    CHECK(commensurability_separation({make_spec(1, 2, 3, 7), make_spec(1, 2, 3, 7)}).classes.size() == 1);
}
