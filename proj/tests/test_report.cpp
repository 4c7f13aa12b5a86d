#include <filesystem>
#include <fstream>

#include "doctest.h"

#include "coxarith/report.hpp"

using namespace coxarith;

namespace {

AlgebraicReal rt(long n) { return sqrt_nonneg(AlgebraicReal(n)); }

std::string temp_path(const std::string& name)
{
    auto p = std::filesystem::temp_directory_path() / ("coxarith_test_" + name);
    std::filesystem::remove(p);
    return p.string();
}

}  // namespace

TEST_CASE("expression parser")
{
    CHECK(parse_expression("5/4") == AlgebraicReal(Rational(5, 4)));
    CHECK(parse_expression("(sqrt(5)+7)/8") == (rt(5) + AlgebraicReal(7)) / AlgebraicReal(8));
    CHECK(parse_expression("3/8*sqrt(2)+1") == AlgebraicReal(Rational(3, 8)) * rt(2) + AlgebraicReal(1));
    CHECK(parse_expression("2*cos(1/5)") == two_cos_pi_over(5));
    CHECK(parse_expression("cos(1/3)^2") == AlgebraicReal(Rational(1, 4)));
    CHECK(parse_expression("-2^2") == AlgebraicReal(-4));
    CHECK(parse_expression(" sqrt(8) ") == AlgebraicReal(2) * rt(2));
    CHECK_THROWS_AS(parse_expression("sqrt(2"), std::invalid_argument);
    CHECK_THROWS_AS(parse_expression("1/0"), std::invalid_argument);
    CHECK_THROWS_AS(parse_expression("2 $ 3"), std::invalid_argument);
}

TEST_CASE("field parser")
{
    CHECK(parse_field("Q")->degree() == 1);
    CHECK(parse_field("sqrt(2), sqrt(3)")->degree() == 4);
    CHECK(fields_equal(*parse_field("cos(2/5)"), *parse_field("sqrt(5)")));
}

TEST_CASE("canonical form survives refinement")
{
    AlgebraicReal x = rt(2) + rt(3);
    nlohmann::json a = canonical_json(x);
    x.refine(Rational(1, 1000000));
    CHECK(canonical_json(x) == a);
    CHECK(from_canonical_json(a) == x);
    CHECK(a["root_index"] == 3);
    CHECK(a["minpoly_coeffs"] == "[1,0,-10,0,1]");
    AlgebraicReal y = -x;
    CHECK(canonical_json(y)["root_index"] == 0);
}

TEST_CASE("expected data")
{
    const ExpectedData& e = ExpectedData::builtin();
    CHECK(e.triangles.size() == 44);
    std::map<int, int> per;
    for (const auto& r : e.rows)
        per[r.table]++;
    CHECK(per[2] == 19);
    CHECK(per[3] == 15);
    CHECK(per[4] == 11);
    CHECK(per[5] == 7);
    CHECK(per[6] == 10);
    CHECK(e.totals.at("all").counts == Counts{37, 25});
    for (const auto& r : e.rows)
        parse_expression(r.a2);

    ExpectedData d = ExpectedData::parse("row 2 1 2 4 6 A | 5/4 | Q | a2 # note\ntriangle 2 3 7\ntotal all 1 0\n");
    REQUIRE(d.rows.size() == 1);
    CHECK(d.rows[0].flagged("a2"));
    CHECK(d.rows[0].flags.at("a2") == "note");
    CHECK_THROWS_AS(ExpectedData::parse("row 2 1 2 4 6 X | 5/4 | Q\n"), std::invalid_argument);
}

TEST_CASE("row check")
{
    Classifier c;
    ExpectedData d = ExpectedData::parse("row 2 1 2 4 6 A | 5/4 | Q\nrow 2 1 2 3 7 A | 9/8 | Q | a2 # wrong on purpose\n");
    RowCheck ok = check_row(d.rows[0], c);
    CHECK(ok.ok());
    RowCheck bad = check_row(d.rows[1], c);
    CHECK(bad.verdict_ok);
    CHECK(!bad.a2_ok);
    CHECK(!bad.field_ok);
    CHECK(!bad.explained());
}

TEST_CASE("cached record equals a fresh one")
{
    std::string path = temp_path("cache");
    std::string sum = Catalog::builtin().checksum();
    PrismSpec s = make_spec(1, 2, 3, 8);
    ClassRecord fresh = ClassRecord::from_report(classify(s));
    {
        ResultCache cache(path, sum);
        Classifier c(&cache);
        c.classify(s);
        CHECK(cache.misses() == 1);
    }
    ResultCache cache(path, sum);
    Classifier c(&cache);
    ClassRecord again = c.classify(s);
    CHECK(cache.hits() == 1);
    CHECK(again.json == fresh.json);
    CHECK(again.verdict == fresh.verdict);
    CHECK(*again.a_squared == *fresh.a_squared);
    CHECK(fields_equal(*again.ground_field(), *fresh.ground_field()));
    CHECK(render_records({again}, Format::Csv) == render_records({fresh}, Format::Csv));

    ResultCache other(path, "different");
    CHECK(!other.find(s));
    std::ifstream in(path);
    std::string first;
    std::getline(in, first);
    CHECK(nlohmann::json::parse(first)["catalog"] == "different");
    std::filesystem::remove(path);
}

TEST_CASE("run id ignores the wall clock")
{
    RunManifest a;
    a.command_line = "reproduce-tables";
    a.catalog_checksum = "abc";
    a.bounds = {{"max_m", 30}};
    a.row_counts = {{"table2", 18}};
    a.wall_clock = 1.5;
    RunManifest b = a;
    b.wall_clock = 99;
    CHECK(a.run_id() == b.run_id());
    CHECK(a.run_id().size() == 16);
    b.row_counts["table2"] = 19;
    CHECK(a.run_id() != b.run_id());
    CHECK(a.to_json()["run_id"] == a.run_id());
}

TEST_CASE("rendering")
{
    Classifier c;
    std::vector<ClassRecord> rs = {c.classify(make_spec(1, 2, 4, 6)), c.classify(make_spec(7, 3, 0, 7))};
    std::string csv = render_records(rs, Format::Csv);
    CHECK(csv.rfind("family,k,l,m,dim,verdict,a_squared_minpoly,a_squared_decimal,ground_field,witness\n", 0) == 0);
    CHECK(csv.find("Arithmetic") != std::string::npos);
    CHECK(csv.find("NotQuasiArithmetic") != std::string::npos);
    nlohmann::json j = nlohmann::json::parse(render_records(rs, Format::Json));
    CHECK(j.size() == 2);
    CHECK(render_records(rs, Format::Markdown).find("| ") != std::string::npos);
    CHECK(parse_format("csv") == Format::Csv);
    CHECK_THROWS_AS(parse_format("xml"), std::invalid_argument);
}

TEST_CASE("table assignment")
{
    Classifier c;
    CHECK(table_of(c.classify(make_spec(1, 2, 3, 7))) == 2);
    CHECK(table_of(c.classify(make_spec(1, 3, 4, 4))) == 3);
    CHECK(table_of(c.classify(make_spec(2, 2, 3, 8))) == 4);
    CHECK(table_of(c.classify(make_spec(5, 0, 0, 4))) == 5);
    CHECK(table_of(c.classify(make_spec(12))) == 6);
    CHECK(table_of(c.classify(make_spec(1, 2, 3, 11))) == 0);
}

TEST_CASE("verdict counts by dimension")
{
    Classifier c;
    auto n = count_verdicts({c.classify(make_spec(1, 2, 3, 7)), c.classify(make_spec(1, 3, 4, 4)),
                             c.classify(make_spec(12)), c.classify(make_spec(1, 2, 3, 11))});
    CHECK(n["all"] == Counts{2, 1});
    CHECK(n["dim3"] == Counts{1, 1});
    CHECK(n["dim4"] == Counts{1, 0});
}
