#include <array>
#include <numeric>
#include <random>

#include "doctest.h"

#include "coxarith/vinberg.hpp"
#include "oracles.hpp"

using namespace coxarith;

namespace {

AlgebraicReal rt(long n) { return sqrt_nonneg(AlgebraicReal(n)); }

GramTemplate permuted(const GramTemplate& g, const std::vector<int>& p)
{
    GramTemplate h = g;
    for (int i = 0; i < g.size; ++i)
        for (int j = 0; j < g.size; ++j)
            h.label[i][j] = g.label[p[i]][p[j]];
    for (int i = 0; i < g.size; ++i) {
        if (p[i] == g.dashed.first)
            h.dashed.first = i;
        if (p[i] == g.dashed.second)
            h.dashed.second = i;
    }
    if (h.dashed.first > h.dashed.second)
        std::swap(h.dashed.first, h.dashed.second);
    return h;
}

std::vector<int> signs_of(const std::vector<FieldElem>& xs)
{
    std::vector<int> s;
    for (const auto& x : xs)
        s.push_back(x.sign());
    return s;
}

}  // namespace

TEST_CASE("V1 on simple fields")
{
    CHECK(check_V1(*field_with_embeddings({rt(2)})).holds);
    AlgebraicReal cbrt2 = AlgebraicReal::real_roots(Polynomial({-2, 0, 0, 1}))[0];
    V1Result r = check_V1(*field_with_embeddings({cbrt2}));
    CHECK(!r.holds);
    CHECK(r.degree == 3);
    CHECK(r.real_embeddings == 1);
    CHECK(check_V1(*NumberField::rationals()).holds);
}

TEST_CASE("V3 on type 5")
{
    ClassificationReport six = classify(make_spec(5, 0, 0, 6));
    CHECK(six.v1.holds);
    CHECK(six.v2.holds);
    CHECK(!six.v3.holds);
    CHECK(*six.a_squared == AlgebraicReal(Rational(9, 8)));
    CHECK(six.verdict == Verdict::ProperlyQuasiArithmetic);

    ClassificationReport four = classify(make_spec(5, 0, 0, 4));
    CHECK(four.v3.holds);
    CHECK(*four.a_squared == AlgebraicReal(Rational(3, 2)));
    CHECK(four.verdict == Verdict::Arithmetic);
}

TEST_CASE("known verdicts")
{
    ClassificationReport a = classify(make_spec(1, 3, 4, 4));
    CHECK(a.verdict == Verdict::ProperlyQuasiArithmetic);
    CHECK(*a.a_squared == AlgebraicReal(Rational(7, 6)));
    CHECK(a.k->degree() == 1);

    ClassificationReport b = classify(make_spec(2, 2, 3, 8));
    CHECK(b.verdict == Verdict::Arithmetic);
    CHECK(*b.a_squared == (rt(2) + AlgebraicReal(2)) / AlgebraicReal(2));
    CHECK(fields_equal(*b.k, *field_with_embeddings({rt(2)})));

    ClassificationReport c = classify(make_spec(18, 4));
    CHECK(c.verdict == Verdict::ProperlyQuasiArithmetic);
    CHECK(*c.a_squared == AlgebraicReal(Rational(8, 7)));

    ClassificationReport d = classify(make_spec(1, 2, 4, 6));
    CHECK(d.verdict == Verdict::Arithmetic);
    CHECK(d.k->degree() == 1);
    CHECK(d.v2.holds);

    ClassificationReport e = classify(make_spec(1, 2, 3, 7));
    CHECK(e.verdict == Verdict::Arithmetic);
    CHECK(e.v1.holds);
}

TEST_CASE("(2,3,13) fails V2 and a conjugate Gram matrix has a negative eigenvalue")
{
    PrismSpec s = make_spec(1, 2, 3, 13);
    CHECK(classify(s).path == "pruned");
    ClassificationReport r = classify(s, ClassifyMode::Full);
    CHECK(r.verdict == Verdict::NotQuasiArithmetic);
    CHECK((!r.v1.holds || !r.v2.holds));
    GramTemplate g = gram_for(s);
    bool negative = false;
    for (int j = 3; j < 78; j += 2)
        if (std::gcd(j, 78) == 1) {
            oracle::Conjugate c = oracle::conjugate_gram(g, j);
            negative = negative || c.a_squared < 0 || c.min_eigenvalue < -1e-50;
        }
    CHECK(negative);
}

TEST_CASE("pruned and full paths agree")
{
    for (auto t : std::vector<std::array<int, 4>>{{1, 2, 3, 11}, {1, 2, 4, 7}, {1, 2, 3, 13}, {1, 3, 3, 10},
                                                  {1, 2, 5, 7}, {7, 3, 0, 7}, {9, 0, 0, 5}}) {
        PrismSpec s = make_spec(t[0], t[1], t[2], t[3]);
        CAPTURE(s.str());
        CHECK(classify(s).verdict == classify(s, ClassifyMode::Full).verdict);
    }
}

TEST_CASE("verdict does not depend on the facet order")
{
    std::mt19937 rng(5);
    for (auto spec : {make_spec(1, 2, 3, 7), make_spec(1, 3, 4, 4), make_spec(1, 2, 3, 11), make_spec(5, 0, 0, 6)}) {
        GramTemplate g = gram_for(spec);
        Verdict v = classify_gram(spec, g).verdict;
        for (int it = 0; it < 3; ++it) {
            std::vector<int> p(g.size);
            std::iota(p.begin(), p.end(), 0);
            std::shuffle(p.begin(), p.end(), rng);
            CHECK(classify_gram(spec, permuted(g, p)).verdict == v);
        }
    }
}

TEST_CASE("PSD by minors and by characteristic polynomial agree")
{
    std::mt19937 rng(17);
    std::uniform_int_distribution<int> c(-4, 4);
    FieldPtr Q = NumberField::rationals();
    int psd = 0;
    for (int it = 0; it < 300; ++it) {
        int n = 2 + it % 4;
        // B^T B is PSD; perturbing the diagonal breaks it sometimes
        std::vector<std::vector<int>> B(n, std::vector<int>(n));
        for (auto& row : B)
            for (auto& x : row)
                x = c(rng);
        GramMatrix M(n, std::vector<FieldElem>(n, Q->constant(0)));
        std::vector<std::vector<Real>> num(n, std::vector<Real>(n));
        int shift = it % 3 == 0 ? -c(rng) * c(rng) : 0;
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) {
                long s = i == j ? shift : 0;
                for (int k = 0; k < n - it % 2; ++k)
                    s += B[k][i] * B[k][j];
                M[i][j] = Q->constant(s);
                num[i][j] = s;
            }
        auto minors = signs_of(principal_minors(M));
        auto coeffs = signs_of(characteristic_coeffs(M, Q->constant(0), Q->constant(1)));
        bool a = psd_by_minors(minors), b = psd_by_charpoly(coeffs);
        CHECK(a == b);
        auto ev = oracle::jacobi_eigenvalues(num, 30);
        bool numeric = *std::min_element(ev.begin(), ev.end()) > -1e-20;
        CHECK(a == numeric);
        psd += a;
    }
    CHECK(psd > 50);
    CHECK(psd < 300);
}

TEST_CASE("V2 methods agree on every conjugate of a table prism")
{
    for (auto spec : {make_spec(1, 2, 3, 7), make_spec(1, 3, 3, 9), make_spec(2, 2, 3, 18), make_spec(13)}) {
        SolvedGram s = solve_base_distance(gram_for(spec));
        FieldPair fp = field_pair(s.G);
        for (const auto& e : conjugate_grams(s.G, fp))
            CHECK(psd_by_minors(e.minor_signs) == psd_by_charpoly(e.charpoly_signs));
        CHECK(check_V2(s.G, fp).methods_agree);
    }
}

TEST_CASE("triangle groups")
{
    CHECK(triangle_arithmetic(2, 3, 7));
    CHECK(!triangle_arithmetic(2, 3, 13));
    CHECK(triangle_arithmetic(5, 5, 5));
    CHECK(triangle_arithmetic(2, 3, 30));
    CHECK(!triangle_arithmetic(2, 3, 31));
    CHECK_THROWS_AS(triangle_arithmetic(2, 3, 6), std::invalid_argument);
    for (int m = 7; m <= 16; ++m)
        CHECK(triangle_arithmetic(2, 3, m) == triangle_arithmetic_generic(2, 3, m));
    for (int m = 4; m <= 10; ++m)
        CHECK(triangle_arithmetic(3, 4, m) == triangle_arithmetic_generic(3, 4, m));
}
