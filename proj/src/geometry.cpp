#include "coxarith/geometry.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <set>
#include <sstream>
#include <stdexcept>

#include <boost/math/constants/constants.hpp>

namespace coxarith {

void set_real_digits(int digits)
{
    Real::default_precision(unsigned(digits + 20));
}

std::string real_str(const Real& x, int digits)
{
    std::ostringstream out;
    out.precision(digits);
    out << std::fixed << x;
    return out.str();
}

static Real rational_real(const Rational& q)
{
    return Real(q.get_num().get_str()) / Real(q.get_den().get_str());
}

Real to_real(const AlgebraicReal& x, int digits)
{
    Rational eps(1);
    eps /= pow(Rational(10), unsigned(digits + 30));
    return rational_real(x.approx(eps));
}

Real systole_bound_from_cosh2(const Real& cosh2)
{
    if (cosh2 < 1)
        throw std::domain_error("cosh^2 d below 1");
    return 2 * acosh(sqrt(cosh2));
}

std::string systole_upper_bound(const PrismSpec& spec, int digits)
{
    set_real_digits(digits);
    SquaredDistance sq = solve_a_squared(gram_for(spec));
    return real_str(systole_bound_from_cosh2(to_real(sq.a_squared.value(), digits)), digits);
}

const std::vector<ClosedFormRow>& closed_form_rows()
{
    static const std::vector<ClosedFormRow> rows = {
        {1, 2, 3, "(3cos(2pi/m)-1)/(4cos(2pi/m)-2)"},
        {1, 2, 4, "(3cos(2pi/m)+1)/(4cos(2pi/m))"},
        {1, 2, 5, "(3cos(2pi/m)+sqrt5)/(4cos(2pi/m)+sqrt5-1)", false, true},
        {1, 3, 3, "(1-3cos(pi/m))/(2-4cos(pi/m))"},
        {1, 3, 4, "(3e^2+2sqrt2e)/(4e^2+2sqrt2e-1), e=cos(pi/m)", true, false},
        {1, 3, 5, "(6e^2+2e+2sqrt5e-1)/(8e^2+2sqrt5e+2e-3), e=cos(pi/m)", false, true},
        {1, 4, 4, "(3cos(pi/m)+1)/(4cos(pi/m))"},
        {1, 4, 5, "(sqrt5+3cos(pi/m))/(sqrt5+4cos(pi/m)-1)", false, true},
        {1, 5, 5, "(3cos(pi/m)+sqrt5)/(4cos(pi/m)+sqrt5-1)", false, true},
        {2, 2, 3, "(2cos(pi/m)^2-1)/(4cos(pi/m)^2-3)"},
        {2, 3, 3, "cos(pi/m)/(2cos(pi/m)-1)"},
        {3, 2, 3, "(-(sqrt5-5)cos(pi/m)^2+sqrt5-3)/(8cos(pi/m)^2-6)", false, true},
        {3, 3, 3, "(-(sqrt5-5)cos(pi/m)+sqrt5-1)/(8cos(pi/m)-4)", false, true},
    };
    return rows;
}

const ClosedFormRow& closed_form_row(int family, int k, int l)
{
    for (const auto& r : closed_form_rows())
        if (r.family == family && ((r.k == k && r.l == l) || (r.k == l && r.l == k)))
            return r;
    throw std::invalid_argument("no closed form for type " + std::to_string(family) + " (" + std::to_string(k) +
                                "," + std::to_string(l) + ")");
}

namespace {

FieldElem scaled(const FieldElem& x, int v) { return x * Rational(v); }
Real scaled(const Real& x, int v) { return x * v; }

template <class T>
T evaluate_row(int row, const T& c, const T& s2, const T& s5, const T& one)
{
    auto n = [&](int v) { return scaled(one, v); };
    T c2 = scaled(c * c, 2) - one;
    T e2 = c * c;
    switch (row) {
    case 0: return (scaled(c2, 3) - one) / (scaled(c2, 4) - n(2));
    case 1: return (scaled(c2, 3) + one) / scaled(c2, 4);
    case 2: return (scaled(c2, 3) + s5) / (scaled(c2, 4) + s5 - one);
    case 3: return (one - scaled(c, 3)) / (n(2) - scaled(c, 4));
    case 4: return (scaled(e2, 3) + scaled(s2 * c, 2)) / (scaled(e2, 4) + scaled(s2 * c, 2) - one);
    case 5:
        return (scaled(e2, 6) + scaled(c, 2) + scaled(s5 * c, 2) - one) /
               (scaled(e2, 8) + scaled(s5 * c, 2) + scaled(c, 2) - n(3));
    case 6: return (scaled(c, 3) + one) / scaled(c, 4);
    case 7: return (s5 + scaled(c, 3)) / (s5 + scaled(c, 4) - one);
    case 8: return (scaled(c, 3) + s5) / (scaled(c, 4) + s5 - one);
    case 9: return (scaled(e2, 2) - one) / (scaled(e2, 4) - n(3));
    case 10: return c / (scaled(c, 2) - one);
    case 11: return ((n(5) - s5) * e2 + s5 - n(3)) / (scaled(e2, 8) - n(6));
    case 12: return ((s5 - n(5)) * (-c) + s5 - one) / (scaled(c, 8) - n(4));
    }
    throw std::invalid_argument("bad closed form row");
}

int row_index(const ClosedFormRow& row)
{
    const auto& rows = closed_form_rows();
    for (size_t i = 0; i < rows.size(); ++i)
        if (&rows[i] == &row)
            return int(i);
    return int(&closed_form_row(row.family, row.k, row.l) - rows.data());
}

std::string decimal_at_identity(const FieldElem& x)
{
    const FieldPtr& F = x.field();
    auto [lo, hi] = F->enclose(x.poly(), F->identity(), 80);
    return to_decimal((lo + hi) / 2, 15);
}

}  // namespace

FieldElem closed_form_value(const ClosedFormRow& row, int m, const CosineField& C)
{
    const FieldPtr& F = C.field();
    FieldElem c = C.cos_pi(m);
    FieldElem s2 = row.uses_sqrt2 ? C.cos_pi(4) * Rational(2) : F->constant(0);
    FieldElem s5 = row.uses_sqrt5 ? C.cos_pi(5) * Rational(4) - F->constant(1) : F->constant(0);
    return evaluate_row(row_index(row), c, s2, s5, F->constant(1));
}

Real closed_form_real(const ClosedFormRow& row, long m)
{
    Real pi = boost::math::constants::pi<Real>();
    Real c = cos(pi / m);
    return evaluate_row(row_index(row), c, Real(sqrt(Real(2))), Real(sqrt(Real(5))), Real(1));
}

std::string closed_form_instance(const ClosedFormRow& row, long m)
{
    std::string out;
    for (char ch : row.expr)
        out += ch == 'm' ? std::to_string(m) : std::string(1, ch);
    return out;
}

ClosedFormCheck closed_form_compare(int family, int k, int l, int m)
{
    const ClosedFormRow& row = closed_form_row(family, k, l);
    ClosedFormCheck c;
    c.spec = make_spec(family, k, l, m);
    SquaredDistance sq = solve_a_squared(gram_for(c.spec));
    FieldElem v = closed_form_value(row, m, sq.C);
    c.equal = v == sq.a_squared;
    c.solved = decimal_at_identity(sq.a_squared);
    c.closed = decimal_at_identity(v);
    return c;
}

bool closed_form_check(int family, int k, int l, int m)
{
    return closed_form_compare(family, k, l, m).equal;
}

std::vector<int> legal_m(int family, int k, int l, int lo, int hi)
{
    std::vector<int> out;
    for (int m = std::max(lo, 2); m <= hi; ++m) {
        try {
            make_spec(family, k, l, m);
            out.push_back(m);
        } catch (const std::invalid_argument&) {
        }
    }
    return out;
}

std::vector<SystoleRow> systole_limit_report(int family, int k, int l, long m_max, int digits, long m_min)
{
    const ClosedFormRow& row = closed_form_row(family, k, l);
    if (m_min <= 0) {
        auto ms = legal_m(family, k, l, 2, 64);
        if (ms.empty())
            throw std::invalid_argument("no legal m");
        m_min = ms.front();
    }
    set_real_digits(digits);
    std::vector<SystoleRow> out;
    for (long m = m_min; m <= m_max; ++m) {
        SystoleRow r;
        r.family = family;
        r.k = row.k;
        r.l = row.l;
        r.m = m;
        r.cosh2_exact = closed_form_instance(row, m);
        r.cosh2 = closed_form_real(row, m);
        r.bound = systole_bound_from_cosh2(r.cosh2);
        out.push_back(std::move(r));
    }
    return out;
}

std::string systole_csv(const std::vector<SystoleRow>& rows, int digits)
{
    std::ostringstream out;
    out << "family,k,l,m,cosh2_d_exact,cosh2_d_decimal,bound_decimal\n";
    for (const auto& r : rows)
        out << r.family << "," << r.k << "," << r.l << "," << r.m << ",\"" << r.cosh2_exact << "\","
            << real_str(r.cosh2, digits) << "," << real_str(r.bound, digits) << "\n";
    return out.str();
}

AlgebraicReal cosh_addition(const AlgebraicReal& a1, const AlgebraicReal& a2)
{
    AlgebraicReal one(1);
    return a1 * a2 + sqrt_nonneg(a1 * a1 - one) * sqrt_nonneg(a2 * a2 - one);
}

namespace {

struct PrismNodes {
    int base = -1, top = -1;
    std::vector<int> laterals;
};

PrismNodes split_nodes(const GramTemplate& g)
{
    auto lonely = [&](int v) {
        for (int w = 0; w < g.size; ++w)
            if (w != v && g.label[v][w] != 2 && g.label[v][w] != 0)
                return false;
        return true;
    };
    PrismNodes p;
    if (!g.has_unknown())
        throw std::invalid_argument("template has no dashed pair");
    if (lonely(g.dashed.first)) {
        p.base = g.dashed.first;
        p.top = g.dashed.second;
    } else if (lonely(g.dashed.second)) {
        p.base = g.dashed.second;
        p.top = g.dashed.first;
    } else {
        throw std::invalid_argument("not a straight prism");
    }
    for (int v = 0; v < g.size; ++v)
        if (v != p.base && v != p.top)
            p.laterals.push_back(v);
    return p;
}

FieldElem alpha_in(const GramTemplate& g, const CosineField& C)
{
    const FieldPtr& F = C.field();
    DetInT d = det_in_t(g, C);
    if (d.c2.is_zero() || !d.c1.is_zero())
        throw std::domain_error("unexpected determinant equation");
    FieldElem a2 = -d.c0 / d.c2;
    if ((a2 - F->constant(1)).sign() <= 0)
        throw std::domain_error("no root a > 1 of the determinant equation");
    return a2;
}

/* x^T M^{-1} y from a bordered determinant. */
FieldElem bilinear_inverse(const GramMatrix& M, const std::vector<FieldElem>& x, const std::vector<FieldElem>& y,
                           const FieldPtr& F)
{
    const size_t n = M.size();
    GramMatrix B(n + 1, std::vector<FieldElem>(n + 1, F->constant(0)));
    for (size_t i = 0; i < n; ++i) {
        for (size_t j = 0; j < n; ++j)
            B[i][j] = M[i][j];
        B[i][n] = y[i];
        B[n][i] = x[i];
    }
    FieldElem zero = F->constant(0), one = F->constant(1);
    return -determinant(B, zero, one) / determinant(M, zero, one);
}

}  // namespace

GluedPrism glue(const PrismSpec& left, const PrismSpec& right)
{
    const Catalog& C = Catalog::builtin();
    GramTemplate gl = C.gram_for(left), gr = C.gram_for(right);
    PrismNodes pl = split_nodes(gl), pr = split_nodes(gr);
    if (gl.dim != gr.dim || pl.laterals.size() != pr.laterals.size())
        throw std::invalid_argument("bases differ in dimension");
    const size_t n = pl.laterals.size();
    std::vector<int> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    bool found = false;
    do {
        found = true;
        for (size_t i = 0; i < n && found; ++i)
            for (size_t j = 0; j < n && found; ++j)
                found = gl.label[pl.laterals[i]][pl.laterals[j]] == gr.label[pr.laterals[perm[i]]][pr.laterals[perm[j]]];
    } while (!found && std::next_permutation(perm.begin(), perm.end()));
    if (!found)
        throw std::invalid_argument("bases differ: " + left.str() + " and " + right.str());

    GluedPrism p;
    p.left = left;
    p.right = right;
    GramTemplate& t = p.tmpl;
    t.size = int(n) + 2;
    t.dim = gl.dim;
    t.label.assign(t.size, std::vector<int>(t.size, 2));
    for (int i = 0; i < t.size; ++i)
        t.label[i][i] = 1;
    t.label[0][1] = t.label[1][0] = 0;
    t.dashed = {0, 1};
    for (size_t i = 0; i < n; ++i) {
        int a = int(i) + 2;
        t.label[0][a] = t.label[a][0] = gl.label[pl.top][pl.laterals[i]];
        t.label[1][a] = t.label[a][1] = gr.label[pr.top][pr.laterals[perm[i]]];
        for (size_t j = 0; j < n; ++j)
            t.label[a][int(j) + 2] = gl.label[pl.laterals[i]][pl.laterals[j]];
    }
    p.standard_pair = (left.family == 1 || left.family == 2) ? right.family == 3
                                                             : left.family == 3 && (right.family == 1 || right.family == 2);

    std::vector<int> labels = gl.labels();
    for (int n : gr.labels())
        labels.push_back(n);
    p.C = CosineField::for_labels(labels);
    p.F = p.C.field();
    p.alpha_left = alpha_in(gl, p.C);
    p.alpha_right = alpha_in(gr, p.C);

    GramMatrix G = gram_over(t, p.C, p.F->constant(0));
    GramMatrix GL(n, std::vector<FieldElem>(n));
    std::vector<FieldElem> r1(n), r2(n);
    for (size_t i = 0; i < n; ++i) {
        for (size_t j = 0; j < n; ++j)
            GL[i][j] = G[i + 2][j + 2];
        r1[i] = G[0][i + 2];
        r2[i] = G[1][i + 2];
    }
    FieldElem one = p.F->constant(1);
    if (bilinear_inverse(GL, r1, r1, p.F) != one - p.alpha_left ||
        bilinear_inverse(GL, r2, r2, p.F) != one - p.alpha_right)
        throw std::logic_error("top normals inconsistent with the solved distances");
    p.cross = bilinear_inverse(GL, r1, r2, p.F);
    p.feet_aligned = true;
    for (size_t i = 0; i < n; ++i)
        for (size_t j = i + 1; j < n; ++j)
            if (r1[i] * r2[j] != r1[j] * r2[i])
                p.feet_aligned = false;
    if (p.feet_aligned) {
        FieldElem prod = (p.alpha_left - one) * (p.alpha_right - one);
        if (p.cross * p.cross != prod || p.cross.sign() > 0)
            throw std::logic_error("cosh addition identity fails for aligned tops");
    }
    return p;
}

AlgebraicReal GluedPrism::top_distance() const
{
    return sqrt_nonneg((alpha_left * alpha_right).value()) - cross.value();
}

SqrtExtension GluedPrism::ambient() const
{
    return adjoin_sqrt(F, alpha_left * alpha_right);
}

GramMatrix GluedPrism::gram(const SqrtExtension& ext) const
{
    GramMatrix base = gram_over(tmpl, C, F->constant(0));
    GramMatrix G(tmpl.size, std::vector<FieldElem>(tmpl.size));
    for (int i = 0; i < tmpl.size; ++i)
        for (int j = 0; j < tmpl.size; ++j)
            G[i][j] = ext.lift(base[i][j]);
    G[0][1] = G[1][0] = ext.lift(cross) - ext.root;
    return G;
}

std::optional<Verdict> glued_direct_verdict(const GluedPrism& p, int max_degree)
{
    if (2 * p.F->degree() > max_degree)
        return std::nullopt;
    SqrtExtension ext = p.ambient();
    GramMatrix G = p.gram(ext);
    FieldPair fp = field_pair(G);
    if (!check_V1(*fp.K.field()).holds)
        return Verdict::NotQuasiArithmetic;
    V2Result v2 = check_V2(G, fp);
    if (!v2.methods_agree)
        throw std::logic_error("PSD methods disagree on a glued prism");
    if (!v2.holds)
        return Verdict::NotQuasiArithmetic;
    return check_V3(G).holds ? Verdict::Arithmetic : Verdict::ProperlyQuasiArithmetic;
}

FieldPtr triangle_ground_field(int k, int l, int m)
{
    std::vector<AlgebraicReal> gens = {cos_pi(2, k), cos_pi(2, l), cos_pi(2, m),
                                       cos_pi(1, k) * cos_pi(1, l) * cos_pi(1, m)};
    std::vector<std::string> labels = {"cos(2pi/" + std::to_string(k) + ")", "cos(2pi/" + std::to_string(l) + ")",
                                       "cos(2pi/" + std::to_string(m) + ")",
                                       "cos(pi/" + std::to_string(k) + ")cos(pi/" + std::to_string(l) + ")cos(pi/" +
                                           std::to_string(m) + ")"};
    return field_with_embeddings(gens, labels);
}

Theorem2Record theorem2_check(int j, int k, int l, int m)
{
    if (j != 1 && j != 2)
        throw std::invalid_argument("j must be 1 or 2");
    if (k > 3 || l > 3)
        throw std::invalid_argument("k, l must be at most 3");
    Theorem2Record r;
    r.j = j;
    r.k = k;
    r.l = l;
    r.m = m;
    r.left = make_spec(j, k, l, m);
    r.right = make_spec(3, k, l, m);
    r.applicable = std::gcd(m, 5) == 1;
    if (!r.applicable) {
        r.note = "m is divisible by 5";
        return r;
    }
    GluedPrism P = glue(r.left, r.right);
    const GramTemplate& t = P.tmpl;
    const AlgebraicReal sqrt5 = sqrt_nonneg(AlgebraicReal(5));

    // cyclic products avoiding the unknown entry, squares first
    std::vector<std::vector<int>> cycles;
    for (int a = 0; a < t.size; ++a)
        for (int b = a + 1; b < t.size; ++b)
            if (t.label[a][b] != 2 && t.label[a][b] != 0)
                cycles.push_back({a, b});
    std::vector<int> path;
    std::vector<bool> on;
    std::function<void(int, int)> dfs = [&](int start, int v) {
        for (int w = start + 1; w < t.size; ++w) {
            if (t.label[v][w] == 2 || t.label[v][w] == 0 || on[w])
                continue;
            path.push_back(w);
            on[w] = true;
            if (path.size() >= 3 && t.label[w][start] != 2 && t.label[w][start] != 0 && path[1] < path.back())
                cycles.push_back(path);
            dfs(start, w);
            on[w] = false;
            path.pop_back();
        }
    };
    for (int s = 0; s < t.size; ++s) {
        path = {s};
        on.assign(t.size, false);
        on[s] = true;
        dfs(s, s);
    }
    auto entry = [&](int a, int b) { return -cos_pi(1, t.label[a][b]); };
    for (const auto& c : cycles) {
        AlgebraicReal g(1);
        if (c.size() == 2) {
            g = entry(c[0], c[1]) * entry(c[0], c[1]);
        } else {
            for (size_t i = 0; i < c.size(); ++i)
                g = g * entry(c[i], c[(i + 1) % c.size()]);
        }
        if (g.is_rational())
            continue;
        FieldPtr Qg = NumberField::create(g);
        Polynomial expr;
        if (express(*Qg, sqrt5, expr)) {
            r.sqrt5_in_kP = true;
            std::string lab = "(";
            for (size_t i = 0; i < c.size(); ++i)
                lab += (i ? " " : "") + std::to_string(c[i]);
            r.kP_cycle = lab + ")";
            r.kP_generator = g;
            r.sqrt5_in_generator = expr;
            break;
        }
    }
    r.kF = triangle_ground_field(r.left.k, r.left.l, r.left.m);
    r.sqrt5_in_kF = contains(*r.kF, sqrt5);
    if (r.sqrt5_in_kP && !r.sqrt5_in_kF) {
        r.verdict = Verdict::NotQuasiArithmetic;
        r.note = "k(P) contains sqrt5, k(F) does not";
    } else {
        r.note = "no certificate";
    }
    return r;
}

nlohmann::json Theorem2Record::to_json() const
{
    nlohmann::json j;
    j["j"] = this->j;
    j["k"] = k;
    j["l"] = l;
    j["m"] = m;
    j["applicable"] = applicable;
    j["note"] = note;
    j["verdict"] = verdict ? nlohmann::json(to_string(*verdict)) : nlohmann::json(nullptr);
    if (!applicable)
        return j;
    j["sqrt5_in_kP"] = {{"holds", sqrt5_in_kP},
                        {"cycle", kP_cycle},
                        {"generator_minpoly", kP_generator.minpoly().str()},
                        {"sqrt5_as_polynomial_in_generator", sqrt5_in_generator.str("g")}};
    j["sqrt5_in_kF"] = {{"holds", sqrt5_in_kF}, {"kF_degree", kF->degree()}, {"kF_minpoly", kF->minpoly().str()}};
    return j;
}

FieldPtr prism_ground_field(const PrismSpec& spec)
{
    GramTemplate g = gram_for(spec);
    return ground_field_in_base(g, solve_a_squared(g)).field();
}

std::string CommensurabilityPartition::relation(const PrismSpec& a, const PrismSpec& b) const
{
    if (a == b)
        return "same";
    int ia = -1, ib = -1;
    for (size_t i = 0; i < classes.size(); ++i)
        for (const auto& s : classes[i].members) {
            if (s == a)
                ia = int(i);
            if (s == b)
                ib = int(i);
        }
    if (ia < 0 || ib < 0)
        throw std::invalid_argument("spec not in the partition");
    return ia == ib ? "undetermined" : "distinct";
}

nlohmann::json CommensurabilityPartition::to_json() const
{
    nlohmann::json j = nlohmann::json::array();
    for (const auto& c : classes) {
        nlohmann::json members = nlohmann::json::array();
        for (const auto& s : c.members)
            members.push_back(s.str());
        j.push_back({{"ground_field_degree", c.k->degree()},
                     {"ground_field_minpoly", c.k->minpoly().str()},
                     {"members", members},
                     {"within_class", c.members.size() > 1 ? "undetermined" : "single"}});
    }
    return j;
}

CommensurabilityPartition commensurability_separation(const std::vector<PrismSpec>& specs)
{
    std::set<PrismSpec> uniq(specs.begin(), specs.end());
    CommensurabilityPartition p;
    for (const auto& s : uniq) {
        FieldPtr k = prism_ground_field(s);
        bool placed = false;
        for (auto& c : p.classes)
            if (c.k->degree() == k->degree() && fields_equal(*c.k, *k)) {
                c.members.push_back(s);
                placed = true;
                break;
            }
        if (!placed)
            p.classes.push_back({k, {s}});
    }
    return p;
}

}  // namespace coxarith
