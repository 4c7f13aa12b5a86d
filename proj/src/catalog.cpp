#include "coxarith/catalog.hpp"

#include <openssl/evp.h>

#include <algorithm>
#include <cstdio>
#include <sstream>
#include <stdexcept>

#include "coxarith/vinberg.hpp"

namespace coxarith {

const char* builtin_catalog_text();

std::string sha256_hex(const std::string& s)
{
    unsigned char md[EVP_MAX_MD_SIZE];
    unsigned int len = 0;
    if (!EVP_Digest(s.data(), s.size(), md, &len, EVP_sha256(), nullptr))
        throw std::runtime_error("sha256 failed");
    std::string hex;
    char buf[3];
    for (unsigned i = 0; i < len; ++i) {
        std::snprintf(buf, sizeof buf, "%02x", md[i]);
        hex += buf;
    }
    return hex;
}

namespace {

ParamRange parse_range(char name, const std::string& s)
{
    ParamRange r;
    r.name = name;
    if (!s.empty() && s.front() == '{') {
        if (s.back() != '}')
            throw std::invalid_argument("bad parameter set: " + s);
        std::istringstream in(s.substr(1, s.size() - 2));
        std::string tok;
        while (std::getline(in, tok, ','))
            r.values.push_back(std::stoi(tok));
        if (r.values.empty())
            throw std::invalid_argument("empty parameter set");
        std::sort(r.values.begin(), r.values.end());
        return r;
    }
    auto dots = s.find("..");
    if (dots == std::string::npos)
        throw std::invalid_argument("bad parameter range: " + s);
    r.lo = std::stoi(s.substr(0, dots));
    std::string hi = s.substr(dots + 2);
    r.hi = hi.empty() ? -1 : std::stoi(hi);
    return r;
}

char slot_name(const std::string& s)
{
    if (s.size() != 1 || (s[0] != 'k' && s[0] != 'l' && s[0] != 'm'))
        throw std::invalid_argument("unknown parameter: " + s);
    return s[0];
}

int resolve(const PrismSpec& spec, const std::string& tok)
{
    if (tok.size() == 1 && std::isalpha(static_cast<unsigned char>(tok[0])))
        return spec.param(tok[0]);
    return std::stoi(tok);
}

bool hyperbolic_triple(int a, int b, int c)
{
    // 1/a + 1/b + 1/c < 1
    return Rational(1, a) + Rational(1, b) + Rational(1, c) < 1;
}

}  // namespace

int PrismSpec::param(char name) const
{
    switch (name) {
    case 'k': return k;
    case 'l': return l;
    case 'm': return m;
    }
    throw std::invalid_argument(std::string("unknown parameter ") + name);
}

void PrismSpec::set_param(char name, int value)
{
    switch (name) {
    case 'k': k = value; return;
    case 'l': l = value; return;
    case 'm': m = value; return;
    }
    throw std::invalid_argument(std::string("unknown parameter ") + name);
}

std::string PrismSpec::str() const
{
    std::string s = "type " + std::to_string(family);
    std::string p;
    for (char c : {'k', 'l', 'm'})
        if (param(c))
            p += (p.empty() ? "" : ",") + std::string(1, c) + "=" + std::to_string(param(c));
    if (!p.empty())
        s += " (" + p + ")";
    return s;
}

std::string PrismSpec::key() const
{
    return std::to_string(family) + ":" + std::to_string(k) + ":" + std::to_string(l) + ":" +
           std::to_string(m);
}

bool ParamRange::allows(int v) const
{
    if (!values.empty())
        return std::find(values.begin(), values.end(), v) != values.end();
    return v >= lo && (hi < 0 || v <= hi);
}

const ParamRange* FamilyTemplate::range(char name) const
{
    for (const auto& r : params)
        if (r.name == name)
            return &r;
    return nullptr;
}

Catalog Catalog::parse(const std::string& text)
{
    Catalog c;
    c.text_ = text;
    c.checksum_ = sha256_hex(text);
    std::istringstream in(text);
    std::string line;
    FamilyTemplate cur;
    bool open = false;
    int lineno = 0;
    auto fail = [&](const std::string& what) {
        throw std::invalid_argument("catalog line " + std::to_string(lineno) + ": " + what);
    };
    while (std::getline(in, line)) {
        ++lineno;
        auto hash = line.find('#');
        if (hash != std::string::npos)
            line = line.substr(0, hash);
        std::istringstream ls(line);
        std::string kw;
        if (!(ls >> kw))
            continue;
        if (kw == "family") {
            if (open)
                fail("nested family block");
            cur = FamilyTemplate{};
            if (!(ls >> cur.id))
                fail("family id expected");
            open = true;
            continue;
        }
        if (!open)
            fail("statement outside a family block");
        if (kw == "end") {
            if (cur.dim < 2)
                fail("family without dimension");
            int dashed = 0;
            for (const auto& e : cur.edges) {
                if (e.i < 0 || e.j >= cur.nodes() || e.i >= e.j)
                    fail("edge out of range");
                if (!e.slot && e.m == 0)
                    ++dashed;
                if (e.slot && !cur.range(e.slot))
                    fail("slot without parameter");
            }
            if (dashed != 1)
                fail("family needs exactly one dashed edge");
            if (c.fam_.count(cur.id))
                fail("duplicate family");
            c.fam_[cur.id] = cur;
            open = false;
        } else if (kw == "dim") {
            ls >> cur.dim;
        } else if (kw == "compact") {
            std::string v;
            ls >> v;
            if (v != "yes" && v != "no")
                fail("compact must be yes or no");
            cur.compact = v == "yes";
        } else if (kw == "param") {
            std::string name, r;
            if (!(ls >> name >> r))
                fail("param NAME RANGE expected");
            cur.params.push_back(parse_range(slot_name(name), r));
        } else if (kw == "hyperbolic") {
            std::vector<std::string> t(3);
            if (!(ls >> t[0] >> t[1] >> t[2]))
                fail("hyperbolic needs three terms");
            cur.hyperbolic.push_back(t);
        } else if (kw == "symmetric") {
            std::string a, b;
            if (!(ls >> a >> b))
                fail("symmetric needs two parameters");
            cur.symmetric.push_back({slot_name(a), slot_name(b)});
        } else if (kw == "edge") {
            TemplateEdge e;
            std::string lab;
            if (!(ls >> e.i >> e.j >> lab))
                fail("edge i j label expected");
            if (lab == "-")
                e.m = 0;
            else if (lab.rfind("slot:", 0) == 0)
                e.slot = slot_name(lab.substr(5));
            else
                e.m = std::stoi(lab);
            if (!e.slot && e.m != 0 && e.m < 3)
                fail("fixed label must be >= 3");
            cur.edges.push_back(e);
        } else {
            fail("unknown keyword " + kw);
        }
    }
    if (open)
        fail("unterminated family block");
    return c;
}

const Catalog& Catalog::builtin()
{
    static const Catalog c = parse(builtin_catalog_text());
    return c;
}

const FamilyTemplate& Catalog::family(int id) const
{
    auto it = fam_.find(id);
    if (it == fam_.end())
        throw std::invalid_argument("unknown family " + std::to_string(id));
    return it->second;
}

PrismSpec Catalog::make_spec(int family_id, int k, int l, int m) const
{
    const FamilyTemplate& f = family(family_id);
    PrismSpec s;
    s.family = family_id;
    s.dim = f.dim;
    s.compact = f.compact;
    s.k = k, s.l = l, s.m = m;
    for (char c : {'k', 'l', 'm'}) {
        const ParamRange* r = f.range(c);
        if (!r) {
            if (s.param(c) != 0)
                throw std::invalid_argument(s.str() + ": family has no parameter " + std::string(1, c));
            continue;
        }
        if (s.param(c) == 0 && r->values.size() == 1)
            s.set_param(c, r->values[0]);
        if (s.param(c) == 0)
            throw std::invalid_argument(s.str() + ": parameter " + std::string(1, c) + " missing");
    }
    for (auto [a, b] : f.symmetric)
        if (s.param(a) > s.param(b) && f.range(a)->allows(s.param(b)) && f.range(b)->allows(s.param(a))) {
            int t = s.param(a);
            s.set_param(a, s.param(b));
            s.set_param(b, t);
        }
    for (const auto& r : f.params)
        if (!r.allows(s.param(r.name)))
            throw std::invalid_argument(s.str() + ": parameter " + std::string(1, r.name) + " out of range");
    for (const auto& h : f.hyperbolic)
        if (!hyperbolic_triple(resolve(s, h[0]), resolve(s, h[1]), resolve(s, h[2])))
            throw std::invalid_argument(s.str() + ": base triangle is not hyperbolic");
    return s;
}

CoxeterDiagram Catalog::diagram_for(const PrismSpec& spec) const
{
    const FamilyTemplate& f = family(spec.family);
    PrismSpec s = make_spec(spec.family, spec.k, spec.l, spec.m);
    CoxeterDiagram d;
    d.nodes = f.nodes();
    d.dim = f.dim;
    for (const auto& e : f.edges) {
        int m = e.slot ? s.param(e.slot) : e.m;
        if (e.slot && m == 2)
            continue;
        d.edges.push_back({e.i, e.j, m});
    }
    d.validate();
    return d;
}

GramTemplate Catalog::gram_for(const PrismSpec& spec) const
{
    return gram_from_diagram(diagram_for(spec), family(spec.family).dim);
}

std::vector<PrismSpec> Catalog::enumerate_family(int family_id, int max_m) const
{
    const FamilyTemplate& f = family(family_id);
    std::vector<PrismSpec> out;
    std::vector<std::vector<int>> choices;
    std::vector<char> names;
    for (char c : {'k', 'l', 'm'}) {
        const ParamRange* r = f.range(c);
        names.push_back(c);
        if (!r) {
            choices.push_back({0});
        } else if (!r->values.empty()) {
            choices.push_back(r->values);
        } else {
            std::vector<int> v;
            int hi = r->hi >= 0 ? r->hi : max_m;
            for (int x = r->lo; x <= hi; ++x)
                v.push_back(x);
            choices.push_back(v);
        }
    }
    for (int k : choices[0])
        for (int l : choices[1])
            for (int m : choices[2]) {
                PrismSpec s;
                try {
                    s = make_spec(family_id, k, l, m);
                } catch (const std::invalid_argument&) {
                    continue;
                }
                if (s.k == k && s.l == l && s.m == m)
                    out.push_back(s);
            }
    return out;
}

std::vector<PrismSpec> Catalog::enumerate(int dim, int max_m) const
{
    std::vector<PrismSpec> out;
    for (const auto& [id, f] : fam_)
        if (f.dim == dim)
            for (auto& s : enumerate_family(id, max_m))
                out.push_back(s);
    return out;
}

std::vector<int> base_triangle(const PrismSpec& spec)
{
    CoxeterDiagram d = diagram_for(spec);
    std::vector<int> t;
    for (int i = 2; i < d.nodes; ++i)
        for (int j = i + 1; j < d.nodes; ++j) {
            int m = 2;
            for (const auto& e : d.edges)
                if (e.i == i && e.j == j)
                    m = e.m;
            t.push_back(m);
        }
    std::sort(t.begin(), t.end());
    return t;
}

std::vector<PrismSpec> finite_qa_candidate_set(int dim, int max_m)
{
    std::vector<PrismSpec> out;
    for (const auto& s : enumerate(dim, max_m)) {
        if (s.compact && dim == 3 && s.family <= 3) {
            auto t = base_triangle(s);
            if (triangle_arithmetic(t[0], t[1], t[2]))
                out.push_back(s);
            continue;
        }
        if (!s.compact) {
            bool ok = true;
            for (const auto& e : diagram_for(s).edges)
                if (e.m != 0 && e.m != 3 && e.m != 4 && e.m != 6)
                    ok = false;
            if (!ok)
                continue;
        }
        out.push_back(s);
    }
    return out;
}

}  // namespace coxarith
