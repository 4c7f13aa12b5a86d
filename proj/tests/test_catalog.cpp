#include <set>

#include "doctest.h"

#include "coxarith/catalog.hpp"

using namespace coxarith;

TEST_CASE("builtin catalog has 24 families")
{
    const Catalog& c = Catalog::builtin();
    CHECK(c.families().size() == 24);
    CHECK(c.checksum() == sha256_hex(c.text()));
    CHECK(c.checksum().size() == 64);
    CHECK(Catalog::parse(c.text()).checksum() == c.checksum());
    for (const auto& [id, f] : c.families()) {
        CAPTURE(id);
        CHECK(f.dim == (id <= 11 ? 3 : id <= 20 ? 4 : 5));
        CHECK(f.nodes() == f.dim + 2);
    }
}

TEST_CASE("sha256 of known strings")
{
    CHECK(sha256_hex("") == "e3b0c44298fc1c149afbf4c8996fb92427ae41e4649b934ca495991b7852b855");
    CHECK(sha256_hex("abc") == "ba7816bf8f01cfea414140de5dae2223b00361a396177a9cb410ff61f20015ad");
}

TEST_CASE("make_spec canonicalizes and validates")
{
    PrismSpec a = make_spec(1, 3, 2, 7);
    CHECK(a.k == 2);
    CHECK(a.l == 3);
    CHECK(a == make_spec(1, 2, 3, 7));
    CHECK(a.key() == "1:2:3:7");
    CHECK(a.dim == 3);
    CHECK(a.compact);
    CHECK_THROWS_AS(make_spec(1, 2, 3, 6), std::invalid_argument);
    CHECK_THROWS_AS(make_spec(1, 2, 3, 0), std::invalid_argument);
    CHECK_THROWS_AS(make_spec(25), std::invalid_argument);
    CHECK_THROWS_AS(make_spec(2, 4, 3, 7), std::invalid_argument);
    CHECK(make_spec(1, 4, 5, 2).m == 2);
    CHECK(!make_spec(7, 3, 0, 7).compact);
    CHECK(make_spec(12).dim == 4);
}

TEST_CASE("diagram of a family 1 prism")
{
    PrismSpec s = make_spec(1, 2, 4, 6);
    CoxeterDiagram d = diagram_for(s);
    CHECK(d.nodes == 5);
    GramTemplate g = gram_for(s);
    CHECK(g.size == 5);
    CHECK(g.has_unknown());
    CHECK(base_triangle(s) == std::vector<int>{2, 4, 6});
    std::multiset<int> lateral;
    for (int i = 2; i < 5; ++i)
        for (int j = i + 1; j < 5; ++j)
            lateral.insert(g.label[i][j]);
    CHECK(lateral == std::multiset<int>{2, 4, 6});
}

TEST_CASE("enumeration in dimensions 4 and 5")
{
    auto d5 = enumerate(5, 30);
    std::set<int> fam5;
    for (const auto& s : d5)
        fam5.insert(s.family);
    CHECK(d5.size() == 5);
    CHECK(fam5 == std::set<int>{21, 22, 23, 24});

    auto d4 = enumerate(4, 30);
    std::set<int> fam4;
    for (const auto& s : d4)
        fam4.insert(s.family);
    CHECK(d4.size() == 12);
    CHECK(fam4.size() == 9);
    for (const auto& s : d4)
        CHECK(s.dim == 4);
}

TEST_CASE("family 1 enumeration respects the hyperbolic condition")
{
    for (const auto& s : Catalog::builtin().enumerate_family(1, 12)) {
        CHECK(s.k <= s.l);
        CHECK(Rational(1, s.k) + Rational(1, s.l) + Rational(1, s.m) < 1);
    }
}

TEST_CASE("finite candidate set in H^3")
{
    auto c = finite_qa_candidate_set(3);
    std::set<std::string> keys;
    for (const auto& s : c)
        keys.insert(s.key());
    CHECK(keys.size() == c.size());
    CHECK(keys.count("1:2:3:7"));
    CHECK(keys.count("1:5:5:3"));
    CHECK(!keys.count("1:2:3:13"));
    CHECK(keys.count("1:2:4:7"));
    for (const auto& s : c) {
        CHECK(s.dim == 3);
        CHECK(s.m <= 30);
    }
}
