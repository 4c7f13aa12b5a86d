#include "coxarith/vinberg.hpp"

#include <numeric>
#include <stdexcept>

#include "coxarith/roots.hpp"

namespace coxarith {

std::string to_string(Verdict v)
{
    switch (v) {
    case Verdict::Arithmetic: return "Arithmetic";
    case Verdict::ProperlyQuasiArithmetic: return "ProperlyQuasiArithmetic";
    case Verdict::NotQuasiArithmetic: return "NotQuasiArithmetic";
    }
    return "?";
}

std::string short_name(Verdict v)
{
    switch (v) {
    case Verdict::Arithmetic: return "A";
    case Verdict::ProperlyQuasiArithmetic: return "PQA";
    case Verdict::NotQuasiArithmetic: return "NQA";
    }
    return "?";
}

Verdict parse_verdict(const std::string& s)
{
    if (s == "A" || s == "Arithmetic")
        return Verdict::Arithmetic;
    if (s == "PQA" || s == "ProperlyQuasiArithmetic")
        return Verdict::ProperlyQuasiArithmetic;
    if (s == "NQA" || s == "NotQuasiArithmetic")
        return Verdict::NotQuasiArithmetic;
    throw std::invalid_argument("unknown verdict " + s);
}

V1Result check_V1(const NumberField& K)
{
    V1Result r;
    r.degree = K.degree();
    r.real_embeddings = int(K.embeddings().size());
    r.minpoly = K.minpoly();
    r.holds = K.is_totally_real();
    return r;
}

V1Result check_V1_sqrt(const NumberField& F, const FieldElem& a_squared)
{
    V1Result r;
    if (!F.is_totally_real())
        throw std::invalid_argument("base field is not totally real");
    r.degree = 2 * F.degree();
    r.real_embeddings = 0;
    for (int j = 0; j < int(F.embeddings().size()); ++j) {
        int s = F.sign_at(a_squared.poly(), j);
        r.real_embeddings += s > 0 ? 2 : s == 0 ? 1 : 0;
        if (s < 0 && r.holds) {
            r.holds = false;
            r.negative_conjugate = j;
            r.conjugate_value = F.evaluate(a_squared.poly(), j).to_decimal(12);
        }
    }
    r.minpoly = a_squared.minpoly();
    return r;
}

namespace {

/* Index of the real embedding of k that sigma_j of K restricts to, where h
 * writes the primitive element of k in that of K. */
int restriction_index(const NumberField& K, const Polynomial& h, int j, const NumberField& k)
{
    if (k.degree() == 1)
        return 0;
    const auto& roots = k.embeddings();
    for (int iter = 0;; ++iter) {
        auto [lo, hi] = K.enclose(h, j, iter);
        int hit = -1, hits = 0;
        for (int i = 0; i < int(roots.size()); ++i) {
            Rational w = hi - lo;
            if (w > 0)
                roots[i].refine(w);
            if (roots[i].hi() >= lo && roots[i].lo() <= hi) {
                hit = i;
                ++hits;
            }
        }
        if (hits == 1)
            return hit;
        if (hits == 0 && iter > 64)
            throw std::logic_error("conjugate of the ground field generator is not a root");
    }
}

std::string decimal(const NumberField& K, const Polynomial& p, int j)
{
    return K.evaluate(p, j).to_decimal(12);
}

}  // namespace

bool psd_by_minors(const std::vector<int>& minor_signs)
{
    for (size_t mask = 1; mask < minor_signs.size(); ++mask)
        if (minor_signs[mask] < 0)
            return false;
    return true;
}

bool psd_by_charpoly(const std::vector<int>& c)
{
    const int n = int(c.size()) - 1;
    for (int i = 0; i <= n; ++i) {
        int s = (n - i) % 2 == 0 ? c[i] : -c[i];
        if (s < 0)
            return false;
    }
    return true;
}

std::vector<EmbeddedGram> conjugate_grams(const GramMatrix& G, const FieldPair& fp)
{
    const FieldPtr& A = G[0][0].field();
    const NumberField& K = *fp.K.field();
    const NumberField& k = *fp.k.field();
    Polynomial hk;
    if (!fp.K.express(fp.k.primitive_in_ambient(), hk))
        throw std::logic_error("ground field not inside the entries field");

    auto minors = principal_minors(G);
    auto coeffs = characteristic_coeffs(G, A->constant(0), A->constant(1));
    std::vector<Polynomial> mk(minors.size()), ck(coeffs.size());
    for (size_t i = 1; i < minors.size(); ++i)
        if (!fp.K.express(minors[i], mk[i]))
            throw std::logic_error("principal minor outside the entries field");
    for (size_t i = 0; i < coeffs.size(); ++i)
        if (!fp.K.express(coeffs[i], ck[i]))
            throw std::logic_error("characteristic coefficient outside the entries field");

    std::vector<EmbeddedGram> out;
    for (int j = 0; j < int(K.embeddings().size()); ++j) {
        EmbeddedGram e;
        e.embedding = j;
        e.moves_k = restriction_index(K, hk, j, k) != (k.degree() == 1 ? 0 : k.identity());
        if (e.moves_k) {
            e.minor_signs.assign(mk.size(), 1);
            for (size_t i = 1; i < mk.size(); ++i)
                e.minor_signs[i] = K.sign_at(mk[i], j);
            for (const auto& c : ck)
                e.charpoly_signs.push_back(K.sign_at(c, j));
        }
        out.push_back(std::move(e));
    }
    return out;
}

V2Result check_V2(const GramMatrix& G, const FieldPair& fp)
{
    V2Result r;
    const NumberField& K = *fp.K.field();
    auto conj = conjugate_grams(G, fp);
    r.embeddings = int(conj.size());
    std::vector<FieldElem> minors;
    for (const auto& e : conj) {
        if (!e.moves_k)
            continue;
        ++r.nontrivial;
        bool a = psd_by_minors(e.minor_signs);
        bool b = psd_by_charpoly(e.charpoly_signs);
        if (a != b)
            r.methods_agree = false;
        if (!a && r.holds) {
            r.holds = false;
            r.failing_embedding = e.embedding;
            if (minors.empty())
                minors = principal_minors(G);
            for (size_t mask = 1; mask < e.minor_signs.size(); ++mask)
                if (e.minor_signs[mask] < 0) {
                    r.negative_minor = int(mask);
                    Polynomial p;
                    fp.K.express(minors[mask], p);
                    r.minor_value = decimal(K, p, e.embedding);
                    break;
                }
        }
    }
    return r;
}

V3Result check_V3(const GramMatrix& G)
{
    V3Result r;
    auto cyc = cyclic_products(G, 2);
    r.products = int(cyc.size());
    for (const auto& c : cyc) {
        Polynomial mp = c.value.minpoly();
        bool integral = true;
        for (const auto& q : mp.coeffs())
            if (q.get_den() != 1)
                integral = false;
        if (!integral) {
            r.holds = false;
            r.cycle = c.label();
            r.minpoly = mp;
            break;
        }
    }
    return r;
}

namespace {

int cos_sign_pi(Rational r)
{
    // sign of cos(pi r)
    Integer q;
    mpz_fdiv_q(q.get_mpz_t(), r.get_num_mpz_t(), Integer(r.get_den() * 2).get_mpz_t());
    r -= Rational(q * 2);
    Rational half(1, 2), three_half(3, 2);
    if (r == half || r == three_half)
        return 0;
    return (r < half || r > three_half) ? 1 : -1;
}

void require_hyperbolic(int k, int l, int m)
{
    if (k < 2 || l < 2 || m < 2 || Rational(1, k) + Rational(1, l) + Rational(1, m) >= 1)
        throw std::invalid_argument("triangle (" + std::to_string(k) + "," + std::to_string(l) + "," +
                                    std::to_string(m) + ") is not hyperbolic");
}

}  // namespace

bool triangle_arithmetic(int k, int l, int m)
{
    require_hyperbolic(k, l, m);
    const int n[3] = {k, l, m};
    const int L = std::lcm(std::lcm(k, l), m);
    const int N = 2 * L;
    const bool product_nonzero = k > 2 && l > 2 && m > 2;
    for (int j = 1; j < L; j += 2) {
        if (std::gcd(j, N) != 1)
            continue;
        // does sigma_j fix the cyclic products cos^2(pi/n_i) and the triple product?
        bool fixes = true;
        int parity = 0;
        for (int x : n) {
            if (x <= 2)
                continue;
            int r = j % x;
            if (r == 1)
                parity += (j - 1) / x;
            else if (r == x - 1)
                parity += (j + 1) / x;
            else
                fixes = false;
        }
        if (fixes && product_nonzero && parity % 2 != 0)
            fixes = false;
        if (fixes)
            continue;
        // det G^sigma = -4 prod cos((+-A+B+C)/2) with A = j pi/k etc.
        Rational A(j, k), B(j, l), C(j, m);
        int s = -cos_sign_pi((A + B + C) / 2) * cos_sign_pi((-A + B + C) / 2) *
                cos_sign_pi((A - B + C) / 2) * cos_sign_pi((A + B - C) / 2);
        if (s < 0)
            return false;
    }
    return true;
}

bool triangle_arithmetic_generic(int k, int l, int m)
{
    require_hyperbolic(k, l, m);
    GramTemplate g;
    g.size = 3;
    g.dim = 2;
    g.label = {{1, m, l}, {m, 1, k}, {l, k, 1}};
    GramMatrix G = gram_numeric(g);
    FieldPair fp = field_pair(G);
    if (!check_V1(*fp.K.field()).holds)
        return false;
    V2Result v2 = check_V2(G, fp);
    if (!v2.methods_agree)
        throw std::logic_error("PSD methods disagree on a triangle");
    return v2.holds;
}

nlohmann::json ClassificationReport::to_json() const
{
    using nlohmann::json;
    auto field_json = [](const FieldPtr& F) -> json {
        if (!F)
            return nullptr;
        json j;
        j["degree"] = F->degree();
        json mp = json::array();
        for (const auto& c : F->minpoly().coeffs())
            mp.push_back(to_string(c));
        j["minpoly"] = mp;
        j["primitive"] = F->degree() == 1 ? std::string("0") : F->primitive().to_decimal(20);
        j["totally_real"] = F->is_totally_real();
        json gens = json::array();
        for (const auto& g : F->generators())
            gens.push_back({{"label", g.label}, {"expr", g.expr.str("theta")}});
        j["generators"] = gens;
        return j;
    };
    json j;
    j["family"] = spec.family;
    j["params"] = {{"k", spec.k}, {"l", spec.l}, {"m", spec.m}};
    j["dim"] = spec.dim;
    j["compact"] = spec.compact;
    j["verdict"] = to_string(verdict);
    j["path"] = path;
    if (a_squared) {
        j["a_squared"] = a_squared->serialize();
        j["a_squared_decimal"] = a_squared->to_decimal(20);
    } else {
        j["a_squared"] = nullptr;
    }
    j["ground_field"] = field_json(k);
    j["entries_field"] = field_json(K);
    json w;
    if (path == "pruned") {
        w["condition"] = "pruned";
        w["reason"] = prune_reason;
    } else {
        w["V1"] = {{"holds", v1.holds}, {"degree", v1.degree}, {"real_embeddings", v1.real_embeddings}};
        if (!v1.holds) {
            w["V1"]["minpoly"] = v1.minpoly.str();
            w["V1"]["negative_conjugate_of_a_squared"] = v1.conjugate_value;
        }
        if (!v2_evaluated) {
            w["V2"] = "not evaluated";
            w["V3"] = "not evaluated";
            j["witness"] = w;
            return j;
        }
        w["V2"] = {{"holds", v2.holds},
                   {"embeddings", v2.embeddings},
                   {"nontrivial", v2.nontrivial},
                   {"methods_agree", v2.methods_agree}};
        if (!v2.holds) {
            w["V2"]["failing_embedding"] = v2.failing_embedding;
            w["V2"]["negative_minor_mask"] = v2.negative_minor;
            w["V2"]["negative_minor_value"] = v2.minor_value;
        }
        w["V3"] = {{"holds", v3.holds}, {"products", v3.products}};
        if (!v3.holds) {
            w["V3"]["cycle"] = v3.cycle;
            w["V3"]["minpoly"] = v3.minpoly.str();
        }
    }
    j["witness"] = w;
    return j;
}

std::string ClassificationReport::witness() const
{
    if (path == "pruned")
        return prune_reason;
    if (!v1.holds && !K)
        return "V1 fails: a^2 has the negative conjugate " + v1.conjugate_value;
    if (!v1.holds)
        return "V1 fails: entries field has " + std::to_string(v1.real_embeddings) + " real embeddings of " +
               std::to_string(v1.degree) + ", a conjugate of a^2 is " + v1.conjugate_value;
    if (!v2.holds)
        return "V2 fails: embedding " + std::to_string(v2.failing_embedding) + " has principal minor mask " +
               std::to_string(v2.negative_minor) + " = " + v2.minor_value;
    if (!v3.holds)
        return "V3 fails: cyclic product " + v3.cycle + " of 2G has minimal polynomial " + v3.minpoly.str();
    return "V1, V2, V3 hold";
}

ClassificationReport classify_gram(const PrismSpec& spec, const GramTemplate& g)
{
    ClassificationReport r;
    r.spec = spec;
    r.path = "full";
    SolvedGram s = solve_base_distance(g);
    r.a_squared = s.a_squared_value();
    V1Result v1 = check_V1_sqrt(*s.F, s.a_squared);
    r.v1 = v1;
    if (v1.holds || s.ext.A->degree() <= kEagerFieldDegree) {
        FieldPair fp = field_pair(s.G);
        r.K = fp.K.field();
        r.k = fp.k.field();
        r.v1 = check_V1(*r.K);
        if (r.v1.holds != v1.holds)
            throw std::logic_error(spec.str() + ": V1 by entries field and by a^2 disagree");
        r.v1.negative_conjugate = v1.negative_conjugate;
        r.v1.conjugate_value = v1.conjugate_value;
        r.v2 = check_V2(s.G, fp);
        r.v2_evaluated = true;
        if (!r.v2.methods_agree)
            throw std::logic_error(spec.str() + ": principal minors and characteristic polynomial disagree");
        r.v3 = check_V3(s.G);
        r.v3_evaluated = true;
    }
    if (!(r.v1.holds && r.v2.holds))
        r.verdict = Verdict::NotQuasiArithmetic;
    else
        r.verdict = r.v3.holds ? Verdict::Arithmetic : Verdict::ProperlyQuasiArithmetic;
    if (!spec.compact && r.verdict != Verdict::NotQuasiArithmetic && r.k->degree() != 1)
        throw std::logic_error(spec.str() + ": noncompact quasi-arithmetic prism with ground field " +
                               r.k->describe());
    return r;
}

ClassificationReport classify(const PrismSpec& spec_in, ClassifyMode mode)
{
    PrismSpec spec = Catalog::builtin().make_spec(spec_in.family, spec_in.k, spec_in.l, spec_in.m);
    if (mode == ClassifyMode::Auto) {
        ClassificationReport r;
        r.spec = spec;
        r.path = "pruned";
        r.verdict = Verdict::NotQuasiArithmetic;
        if (spec.compact && spec.dim == 3 && spec.family <= 3) {
            auto t = base_triangle(spec);
            if (!triangle_arithmetic(t[0], t[1], t[2])) {
                r.prune_reason = "base triangle (" + std::to_string(t[0]) + "," + std::to_string(t[1]) + "," +
                                 std::to_string(t[2]) + ") is not arithmetic";
                return r;
            }
        }
        if (!spec.compact)
            for (const auto& e : diagram_for(spec).edges)
                if (e.m == 5 || e.m > 6) {
                    r.prune_reason = "noncompact with angle pi/" + std::to_string(e.m) +
                                     ": cos^2 irrational, ground field is not Q";
                    return r;
                }
    }
    return classify_gram(spec, gram_for(spec));
}

}  // namespace coxarith
