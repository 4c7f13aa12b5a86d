#include "coxarith/coxeter.hpp"

#include <functional>
#include <numeric>
#include <set>
#include <sstream>
#include <stdexcept>

namespace coxarith {

CoxeterDiagram CoxeterDiagram::parse(const std::string& text)
{
    CoxeterDiagram d;
    std::istringstream in(text);
    std::string line;
    bool header = false;
    while (std::getline(in, line)) {
        auto hash = line.find('#');
        if (hash != std::string::npos)
            line = line.substr(0, hash);
        std::istringstream ls(line);
        std::string a;
        if (!(ls >> a))
            continue;
        if (a == "nodes") {
            std::string dimkw;
            if (!(ls >> d.nodes >> dimkw >> d.dim) || dimkw != "dim")
                throw std::invalid_argument("bad header: " + line);
            header = true;
            continue;
        }
        if (!header)
            throw std::invalid_argument("edge before header: " + line);
        DiagramEdge e;
        std::string lab;
        try {
            e.i = std::stoi(a);
        } catch (const std::exception&) {
            throw std::invalid_argument("bad edge: " + line);
        }
        if (!(ls >> e.j >> lab))
            throw std::invalid_argument("bad edge: " + line);
        if (lab == "-")
            e.m = 0;
        else
            e.m = std::stoi(lab);
        if (e.i > e.j)
            std::swap(e.i, e.j);
        d.edges.push_back(e);
    }
    if (!header)
        throw std::invalid_argument("missing header");
    d.validate();
    return d;
}

std::string CoxeterDiagram::to_text() const
{
    std::ostringstream out;
    out << "nodes " << nodes << " dim " << dim << "\n";
    for (const auto& e : edges) {
        out << e.i << " " << e.j << " ";
        if (e.m == 0)
            out << "-";
        else
            out << e.m;
        out << "\n";
    }
    return out.str();
}

void CoxeterDiagram::validate() const
{
    if (nodes <= 0)
        throw std::invalid_argument("diagram needs at least one node");
    int dashed = 0;
    std::vector<std::vector<bool>> seen(nodes, std::vector<bool>(nodes, false));
    for (const auto& e : edges) {
        if (e.i < 0 || e.j >= nodes || e.i >= e.j)
            throw std::invalid_argument("edge endpoints out of range");
        if (seen[e.i][e.j])
            throw std::invalid_argument("duplicate edge");
        seen[e.i][e.j] = true;
        if (e.m == 0)
            ++dashed;
        else if (e.m < 3)
            throw std::invalid_argument("edge label must be >= 3 or dashed");
    }
    if (dashed > 1)
        throw std::invalid_argument("more than one dashed edge");
}

int GramTemplate::cosine_level() const
{
    int L = 1;
    for (int i = 0; i < size; ++i)
        for (int j = i + 1; j < size; ++j)
            if (label[i][j] >= 4)
                L = std::lcm(L, label[i][j]);
    return L;
}

std::string GramTemplate::entry_string(int i, int j) const
{
    int m = label[i][j];
    if (m == 1)
        return "1";
    if (m == 2)
        return "0";
    if (m == 0)
        return "-t";
    return "-cos(pi/" + std::to_string(m) + ")";
}

GramTemplate gram_from_diagram(const CoxeterDiagram& d, int dim)
{
    d.validate();
    if (d.nodes != dim + 2)
        throw std::invalid_argument("node count must equal dimension + 2");
    GramTemplate g;
    g.size = d.nodes;
    g.dim = dim;
    g.label.assign(d.nodes, std::vector<int>(d.nodes, 2));
    for (int i = 0; i < d.nodes; ++i)
        g.label[i][i] = 1;
    for (const auto& e : d.edges) {
        g.label[e.i][e.j] = g.label[e.j][e.i] = e.m;
        if (e.m == 0)
            g.dashed = {e.i, e.j};
    }
    return g;
}

std::vector<int> GramTemplate::labels() const
{
    std::set<int> out;
    for (int i = 0; i < size; ++i)
        for (int j = i + 1; j < size; ++j)
            if (label[i][j] >= 4)
                out.insert(label[i][j]);
    return {out.begin(), out.end()};
}

namespace {

int euler_phi(int n)
{
    int r = n;
    for (int p = 2; p * p <= n; ++p)
        if (n % p == 0) {
            while (n % p == 0)
                n /= p;
            r -= r / p;
        }
    if (n > 1)
        r -= r / n;
    return r;
}

/* Labels >= 4 not dividing another label. */
std::vector<int> maximal_labels(const std::vector<int>& labels)
{
    std::set<int> s;
    for (int n : labels)
        if (n >= 4)
            s.insert(n);
    std::vector<int> out;
    for (int n : s) {
        bool divides = false;
        for (int m : s)
            if (m != n && m % n == 0)
                divides = true;
        if (!divides)
            out.push_back(n);
    }
    return out;
}

/* In Q[x_1..x_r]/(p_1(x_1), ..., p_r(x_r)), monic p_i, write each x_i as a
 * polynomial in theta = sum w_i x_i. theta must generate the algebra, i.e.
 * the composed sum must be squarefree. */
std::vector<Polynomial> tensor_expressions(const std::vector<Polynomial>& p, const std::vector<long>& w)
{
    const size_t r = p.size();
    std::vector<size_t> deg(r), stride(r);
    size_t D = 1;
    for (size_t i = 0; i < r; ++i) {
        deg[i] = size_t(p[i].degree());
        stride[i] = D;
        D *= deg[i];
    }
    auto times_theta = [&](const std::vector<Rational>& v) {
        std::vector<Rational> out(D, Rational(0));
        for (size_t idx = 0; idx < D; ++idx) {
            if (v[idx] == 0)
                continue;
            for (size_t i = 0; i < r; ++i) {
                size_t ei = (idx / stride[i]) % deg[i];
                Rational c = v[idx] * Rational(w[i]);
                if (ei + 1 < deg[i]) {
                    out[idx + stride[i]] += c;
                } else {
                    size_t base = idx - ei * stride[i];
                    for (size_t k = 0; k < deg[i]; ++k)
                        out[base + k * stride[i]] -= c * p[i].coeff(int(k));
                }
            }
        }
        return out;
    };
    std::vector<std::vector<Rational>> cols;
    std::vector<Rational> v(D, Rational(0));
    v[0] = 1;
    for (size_t k = 0; k < D; ++k) {
        cols.push_back(v);
        v = times_theta(v);
    }
    ColumnSolver solver(cols);
    if (solver.rank() != D)
        throw std::logic_error("weighted sum does not generate the tensor algebra");
    std::vector<Polynomial> out;
    for (size_t i = 0; i < r; ++i) {
        std::vector<Rational> b(D, Rational(0)), x;
        b[deg[i] > 1 ? stride[i] : 0] = deg[i] > 1 ? Rational(1) : Rational(-p[i].coeff(0));
        if (!solver.solve(b, x))
            throw std::logic_error("generator outside the tensor algebra");
        out.push_back(Polynomial(x));
    }
    return out;
}

}  // namespace

int CosineField::predicted_degree(const std::vector<int>& labels)
{
    std::vector<int> top = maximal_labels(labels);
    int L = 1;
    for (int n : top)
        L = std::lcm(L, n);
    if (L <= 3)
        return 1;
    int units = 0, fixing = 0;
    for (int j = 1; j < 2 * L; ++j) {
        if (std::gcd(j, 2 * L) != 1)
            continue;
        ++units;
        bool fixes = true;
        for (int n : top) {
            int r = j % (2 * n);
            if (r != 1 && r != 2 * n - 1)
                fixes = false;
        }
        fixing += fixes;
    }
    return units / fixing;
}

CosineField CosineField::cyclotomic(int L)
{
    CosineField c;
    c.level_ = std::max(L, 1);
    c.cyclotomic_ = true;
    c.F_ = L <= 3 ? NumberField::rationals() : NumberField::create(two_cos_pi_over(L));
    return c;
}

CosineField CosineField::for_labels(const std::vector<int>& labels)
{
    std::vector<int> top = maximal_labels(labels);
    int L = 1;
    for (int n : top)
        L = std::lcm(L, n);
    int deg = predicted_degree(labels);
    if (L <= 3 || deg == euler_phi(2 * L) / 2)
        return cyclotomic(L);
    CosineField c;
    c.level_ = L;
    c.cyclotomic_ = false;
    std::vector<AlgebraicReal> gens;
    std::vector<Polynomial> mp;
    for (int n : top) {
        gens.push_back(two_cos_pi_over(n));
        mp.push_back(gens.back().minpoly());
    }
    std::vector<long> w;
    Polynomial P;
    for (long step = 0;; ++step) {
        if (step > 16)
            throw std::runtime_error("no squarefree weighted sum of cosines");
        w.assign(top.size(), 1);
        for (size_t i = 0; i < w.size(); ++i)
            w[i] = 1 + long(i) * step;
        P = Polynomial::constant(0);
        for (size_t i = 0; i < top.size(); ++i) {
            Polynomial q = mp[i].scale(Rational(1, w[i])).monic();
            P = i == 0 ? q : composed_sum(P, q);
        }
        if (gcd(P, P.derivative()).degree() == 0)
            break;
    }
    auto e = tensor_expressions(mp, w);
    AlgebraicReal theta = identify_root(P, [&](int iter) {
        Rational width(1);
        width /= pow(Rational(2), unsigned(iter + 8));
        Rational lo = 0, hi = 0;
        for (size_t i = 0; i < gens.size(); ++i) {
            gens[i].refine(width);
            lo += Rational(w[i]) * gens[i].lo();
            hi += Rational(w[i]) * gens[i].hi();
        }
        return std::make_pair(lo, hi);
    });
    std::vector<NumberField::Generator> out;
    for (size_t i = 0; i < top.size(); ++i)
        out.push_back({"2cos(pi/" + std::to_string(top[i]) + ")", gens[i], e[i] % theta.minpoly()});
    c.F_ = NumberField::create(theta, out);
    if (c.F_->degree() != deg)
        throw std::logic_error("cosine compositum has unexpected degree");
    for (size_t i = 0; i < top.size(); ++i)
        c.two_cos_[top[i]] = out[i].expr;
    return c;
}

bool CosineField::has(int m) const
{
    if (m <= 3)
        return true;
    if (cyclotomic_)
        return level_ % m == 0;
    for (const auto& [n, e] : two_cos_)
        if (n % m == 0)
            return true;
    return false;
}

FieldElem CosineField::cos_pi(int m) const
{
    if (m == 1)
        return F_->constant(-1);
    if (m == 2)
        return F_->constant(0);
    if (m == 3)
        return F_->constant(Rational(1, 2));
    if (m >= 4 && cyclotomic_ && level_ % m == 0)
        return F_->element(vieta_lucas(level_ / m) * Rational(1, 2));
    if (m >= 4 && !cyclotomic_)
        for (const auto& [n, e] : two_cos_)
            if (n % m == 0)
                return F_->element(substitute_in(*F_, vieta_lucas(n / m), e) * Rational(1, 2));
    throw std::invalid_argument("cos(pi/" + std::to_string(m) + ") not in the cosine field");
}

CosineField cosine_field(const GramTemplate& g)
{
    return CosineField::for_labels(g.labels());
}

GramMatrix gram_over(const GramTemplate& g, const CosineField& C, const FieldElem& t)
{
    const FieldPtr& F = C.field();
    std::map<int, FieldElem> cache;
    GramMatrix G(g.size, std::vector<FieldElem>(g.size));
    for (int i = 0; i < g.size; ++i)
        for (int j = 0; j < g.size; ++j) {
            int m = g.label[i][j];
            if (m == 1)
                G[i][j] = F->constant(1);
            else if (m == 0)
                G[i][j] = -t;
            else {
                auto it = cache.find(m);
                if (it == cache.end())
                    it = cache.emplace(m, -C.cos_pi(m)).first;
                G[i][j] = it->second;
            }
        }
    return G;
}

DetInT det_in_t(const GramTemplate& g, const CosineField& C)
{
    const FieldPtr& F = C.field();
    if (!g.has_unknown())
        throw std::invalid_argument("Gram template has no unknown entry");
    auto det_at = [&](long t) {
        return determinant(gram_over(g, C, F->constant(t)), F->constant(0), F->constant(1));
    };
    FieldElem d0 = det_at(0), d1 = det_at(1), dm = det_at(-1);
    FieldElem c2 = (d1 + dm) * Rational(1, 2) - d0;
    FieldElem c1 = (d1 - dm) * Rational(1, 2);
    return {d0, c1, c2};
}

std::string to_string(const Signature& s)
{
    return "(" + std::to_string(s.pos) + "," + std::to_string(s.neg) + "," + std::to_string(s.zero) + ")";
}

Signature signature(const GramMatrix& G)
{
    const int n = int(G.size());
    if (n == 0)
        return {};
    const FieldPtr& A = G[0][0].field();
    auto c = characteristic_coeffs(G, A->constant(0), A->constant(1));
    std::vector<int> s;
    for (const auto& x : c)
        s.push_back(x.sign());
    Signature sig;
    while (sig.zero <= n && s[sig.zero] == 0)
        ++sig.zero;
    auto changes = [&](bool alternate) {
        int cnt = 0, last = 0;
        for (int i = sig.zero; i <= n; ++i) {
            int v = s[i];
            if (alternate && i % 2 == 1)
                v = -v;
            if (v == 0)
                continue;
            if (last != 0 && v != last)
                ++cnt;
            last = v;
        }
        return cnt;
    };
    sig.pos = changes(false);
    sig.neg = changes(true);
    if (sig.pos + sig.neg + sig.zero != n)
        throw std::logic_error("characteristic polynomial of a symmetric matrix is not real-rooted");
    return sig;
}

SquaredDistance solve_a_squared(const GramTemplate& g)
{
    SquaredDistance s;
    s.C = cosine_field(g);
    s.F = s.C.field();
    DetInT d = det_in_t(g, s.C);
    if (d.c2.is_zero())
        throw std::domain_error("determinant does not depend on the unknown");
    if (!d.c1.is_zero())
        throw std::domain_error("determinant has a linear term in the unknown");
    s.a_squared = -d.c0 / d.c2;
    if ((s.a_squared - s.F->constant(1)).sign() <= 0)
        throw std::domain_error("no root a > 1 of the determinant equation");
    return s;
}

SolvedGram solve_base_distance(const GramTemplate& g)
{
    SolvedGram s;
    s.tmpl = g;
    SquaredDistance sq = solve_a_squared(g);
    s.C = sq.C;
    s.F = sq.F;
    s.a_squared = sq.a_squared;
    s.ext = adjoin_sqrt(s.F, s.a_squared);
    s.a = s.ext.root;
    GramMatrix base = gram_over(g, s.C, s.F->constant(0));
    s.G.assign(g.size, std::vector<FieldElem>(g.size));
    for (int i = 0; i < g.size; ++i)
        for (int j = 0; j < g.size; ++j)
            s.G[i][j] = g.label[i][j] == 0 ? -s.a : s.ext.lift(base[i][j]);
    Signature sig = signature(s.G);
    if (!(sig == Signature{g.dim, 1, 1}))
        throw std::domain_error("solved Gram matrix has signature " + to_string(sig));
    return s;
}

GramMatrix gram_numeric(const GramTemplate& g, FieldPtr* field_out)
{
    if (g.has_unknown())
        throw std::invalid_argument("Gram template has an unknown entry");
    CosineField C = cosine_field(g);
    if (field_out)
        *field_out = C.field();
    return gram_over(g, C, C.field()->constant(0));
}

std::string CyclicProduct::label() const
{
    std::string s = "(";
    for (size_t i = 0; i < cycle.size(); ++i)
        s += (i ? " " : "") + std::to_string(cycle[i]);
    return s + ")";
}

std::vector<CyclicProduct> cyclic_products(const GramMatrix& G, const Rational& scale)
{
    const int n = int(G.size());
    std::vector<CyclicProduct> out;
    for (int i = 0; i < n; ++i)
        out.push_back({{i}, G[i][i] * scale});
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (!G[i][j].is_zero())
                out.push_back({{i, j}, G[i][j] * G[j][i] * (scale * scale)});
    // simple cycles of length >= 3, rooted at their smallest vertex
    std::vector<int> path;
    std::vector<bool> on(n, false);
    std::function<void(int, int)> dfs = [&](int start, int v) {
        for (int w = start + 1; w < n; ++w) {
            if (G[v][w].is_zero() || on[w])
                continue;
            path.push_back(w);
            on[w] = true;
            if (path.size() >= 3 && !G[w][start].is_zero() && path[1] < path.back()) {
                FieldElem p = G[path.back()][start] * scale;
                for (size_t k = 0; k + 1 < path.size(); ++k)
                    p = p * G[path[k]][path[k + 1]] * scale;
                out.push_back({path, p});
            }
            dfs(start, w);
            on[w] = false;
            path.pop_back();
        }
    };
    for (int s = 0; s < n; ++s) {
        path = {s};
        on.assign(n, false);
        on[s] = true;
        dfs(s, s);
    }
    return out;
}

FieldPair field_pair(const GramMatrix& G)
{
    const int n = int(G.size());
    const FieldPtr& A = G[0][0].field();
    std::vector<FieldElem> entries;
    std::vector<std::string> labels;
    for (int i = 0; i < n; ++i)
        for (int j = i; j < n; ++j) {
            entries.push_back(G[i][j]);
            labels.push_back("g" + std::to_string(i) + std::to_string(j));
        }
    std::vector<FieldElem> cyc;
    std::vector<std::string> clabels;
    for (const auto& c : cyclic_products(G)) {
        cyc.push_back(c.value);
        clabels.push_back("cyc" + c.label());
    }
    FieldPair fp{Subfield(A, entries, labels), Subfield(A, cyc, clabels)};
    Polynomial e;
    if (!fp.K.express(fp.k.primitive_in_ambient(), e))
        throw std::logic_error("cyclic-product field is not contained in the entries field");
    return fp;
}

Subfield ground_field_in_base(const GramTemplate& g, const SquaredDistance& s)
{
    auto lonely = [&](int v) {
        for (int w = 0; w < g.size; ++w)
            if (w != v && g.label[v][w] != 2 && g.label[v][w] != 0)
                return false;
        return true;
    };
    int b = lonely(g.dashed.first) ? g.dashed.first : lonely(g.dashed.second) ? g.dashed.second : -1;
    if (b < 0)
        throw std::invalid_argument("dashed pair has neighbours on both ends");
    GramMatrix G = gram_over(g, s.C, s.F->constant(0));
    int t = b == g.dashed.first ? g.dashed.second : g.dashed.first;
    G[b][t] = -s.a_squared;
    G[t][b] = s.F->constant(-1);
    std::vector<FieldElem> cyc;
    std::vector<std::string> labels;
    for (const auto& c : cyclic_products(G)) {
        cyc.push_back(c.value);
        labels.push_back("cyc" + c.label());
    }
    return Subfield(s.F, cyc, labels);
}

std::vector<FieldElem> principal_minors(const GramMatrix& G)
{
    const int n = int(G.size());
    const FieldPtr& A = G[0][0].field();
    std::vector<FieldElem> out(size_t(1) << n);
    out[0] = A->constant(1);
    for (unsigned mask = 1; mask < (1u << n); ++mask) {
        std::vector<int> idx;
        for (int i = 0; i < n; ++i)
            if (mask & (1u << i))
                idx.push_back(i);
        GramMatrix sub(idx.size(), std::vector<FieldElem>(idx.size()));
        for (size_t a = 0; a < idx.size(); ++a)
            for (size_t b = 0; b < idx.size(); ++b)
                sub[a][b] = G[idx[a]][idx[b]];
        out[mask] = determinant(sub, A->constant(0), A->constant(1));
    }
    return out;
}

}  // namespace coxarith
