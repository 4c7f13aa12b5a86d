#include "coxarith/report.hpp"

#include <algorithm>
#include <cctype>
#include <cstdlib>
#include <fstream>
#include <iomanip>
#include <sstream>
#include <stdexcept>

namespace coxarith {

const char* builtin_expected_text();

namespace {

class ExprParser {
public:
    explicit ExprParser(const std::string& s) : s_(s) {}

    AlgebraicReal parse()
    {
        AlgebraicReal v = sum();
        skip();
        if (pos_ != s_.size())
            fail("trailing input");
        return v;
    }

private:
    const std::string& s_;
    size_t pos_ = 0;

    [[noreturn]] void fail(const std::string& what) const
    {
        throw std::invalid_argument("expression '" + s_ + "': " + what + " at " + std::to_string(pos_));
    }
    void skip()
    {
        while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_])))
            ++pos_;
    }
    bool eat(char c)
    {
        skip();
        if (pos_ < s_.size() && s_[pos_] == c) {
            ++pos_;
            return true;
        }
        return false;
    }
    void expect(char c)
    {
        if (!eat(c))
            fail(std::string("expected '") + c + "'");
    }
    bool word(const char* w)
    {
        skip();
        size_t n = std::char_traits<char>::length(w);
        if (s_.compare(pos_, n, w) == 0) {
            pos_ += n;
            return true;
        }
        return false;
    }
    long integer()
    {
        skip();
        size_t start = pos_;
        while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_])))
            ++pos_;
        if (start == pos_)
            fail("expected integer");
        return std::stol(s_.substr(start, pos_ - start));
    }

    AlgebraicReal sum()
    {
        AlgebraicReal v = product();
        for (;;) {
            if (eat('+'))
                v = v + product();
            else if (eat('-'))
                v = v - product();
            else
                return v;
        }
    }
    AlgebraicReal product()
    {
        AlgebraicReal v = unary();
        for (;;) {
            if (eat('*')) {
                v = v * unary();
            } else if (eat('/')) {
                AlgebraicReal d = unary();
                if (d.sign() == 0)
                    fail("division by zero");
                v = v / d;
            } else {
                return v;
            }
        }
    }
    AlgebraicReal unary()
    {
        if (eat('-'))
            return -unary();
        AlgebraicReal b = atom();
        if (eat('^')) {
            long e = integer();
            AlgebraicReal r(1);
            for (long i = 0; i < e; ++i)
                r = r * b;
            return r;
        }
        return b;
    }
    AlgebraicReal atom()
    {
        if (eat('(')) {
            AlgebraicReal v = sum();
            expect(')');
            return v;
        }
        if (word("sqrt")) {
            expect('(');
            AlgebraicReal v = sum();
            expect(')');
            if (v.sign() < 0)
                fail("square root of a negative number");
            return sqrt_nonneg(v);
        }
        if (word("cos")) {
            expect('(');
            long p = integer();
            expect('/');
            long q = integer();
            expect(')');
            if (q <= 0)
                fail("bad denominator");
            return cos_pi(p, q);
        }
        return AlgebraicReal(Rational(integer()));
    }
};

std::string trim(const std::string& s)
{
    size_t a = s.find_first_not_of(" \t\r");
    if (a == std::string::npos)
        return "";
    size_t b = s.find_last_not_of(" \t\r");
    return s.substr(a, b - a + 1);
}

std::vector<std::string> split(const std::string& s, char sep)
{
    std::vector<std::string> out;
    std::string cur;
    for (char c : s) {
        if (c == sep) {
            out.push_back(trim(cur));
            cur.clear();
        } else {
            cur += c;
        }
    }
    out.push_back(trim(cur));
    return out;
}

/* "text # reason" */
std::pair<std::string, std::string> split_reason(const std::string& s)
{
    auto h = s.find('#');
    if (h == std::string::npos)
        return {trim(s), ""};
    return {trim(s.substr(0, h)), trim(s.substr(h + 1))};
}

std::string scope_of(int dim) { return "dim" + std::to_string(dim); }

void add(std::map<std::string, Counts>& t, int dim, Verdict v, int delta)
{
    for (const std::string& key : {std::string("all"), scope_of(dim)}) {
        Counts& c = t[key];
        if (v == Verdict::Arithmetic)
            c.a += delta;
        else if (v == Verdict::ProperlyQuasiArithmetic)
            c.pqa += delta;
    }
}

std::string csv_quote(const std::string& s)
{
    if (s.find_first_of(",\"\n") == std::string::npos)
        return s;
    std::string o = "\"";
    for (char c : s) {
        if (c == '"')
            o += '"';
        o += c;
    }
    return o + "\"";
}

std::string md_escape(const std::string& s)
{
    std::string o;
    for (char c : s) {
        if (c == '|')
            o += '\\';
        o += c;
    }
    return o;
}

std::string field_summary(const nlohmann::json& f)
{
    if (f.is_null())
        return "-";
    if (f["degree"].get<int>() == 1)
        return "Q";
    return "degree " + std::to_string(f["degree"].get<int>()) + ", " + f["minpoly_text"].get<std::string>();
}

std::string a2_decimal(const nlohmann::json& j)
{
    if (j["a_squared"].is_null())
        return "-";
    return j["a_squared"]["decimal"].get<std::string>();
}

std::string a2_minpoly(const nlohmann::json& j)
{
    if (j["a_squared"].is_null())
        return "-";
    return j["a_squared"]["minpoly"].get<std::string>();
}

}  // namespace

AlgebraicReal parse_expression(const std::string& s) { return ExprParser(s).parse(); }

FieldPtr parse_field(const std::string& s)
{
    std::string t = trim(s);
    if (t == "Q")
        return NumberField::rationals();
    std::vector<AlgebraicReal> gens;
    std::vector<std::string> labels;
    for (const auto& g : split(t, ',')) {
        gens.push_back(parse_expression(g));
        labels.push_back(g);
    }
    return field_with_embeddings(gens, labels);
}

nlohmann::json canonical_json(const AlgebraicReal& x, int digits)
{
    nlohmann::json j;
    auto roots = AlgebraicReal::real_roots(x.minpoly());
    int index = -1;
    for (size_t i = 0; i < roots.size(); ++i)
        if (roots[i] == x)
            index = int(i);
    if (index < 0)
        throw std::logic_error("value is not a root of its minimal polynomial");
    auto z = primitive_integer(x.minpoly());
    std::string mp = "[";
    for (size_t i = 0; i < z.size(); ++i)
        mp += (i ? "," : "") + z[i].get_str();
    j["minpoly_coeffs"] = mp + "]";
    j["minpoly"] = x.minpoly().str();
    j["root_index"] = index;
    j["decimal"] = x.to_decimal(digits);
    return j;
}

AlgebraicReal from_canonical_json(const nlohmann::json& j)
{
    std::string mp = j.at("minpoly_coeffs").get<std::string>();
    if (mp.size() < 2 || mp.front() != '[' || mp.back() != ']')
        throw std::invalid_argument("bad minimal polynomial " + mp);
    std::vector<Rational> c;
    for (const auto& t : split(mp.substr(1, mp.size() - 2), ','))
        c.push_back(parse_rational(t));
    auto roots = AlgebraicReal::real_roots(Polynomial(c));
    int i = j.at("root_index").get<int>();
    if (i < 0 || size_t(i) >= roots.size())
        throw std::invalid_argument("root index out of range");
    return roots[size_t(i)];
}

std::string ExpectedRow::label() const
{
    std::ostringstream o;
    o << "table " << table << " type " << family;
    if (k || l || m) {
        o << " (";
        std::vector<std::string> parts;
        if (k)
            parts.push_back("k=" + std::to_string(k));
        if (l)
            parts.push_back("l=" + std::to_string(l));
        if (m)
            parts.push_back("m=" + std::to_string(m));
        for (size_t i = 0; i < parts.size(); ++i)
            o << (i ? "," : "") << parts[i];
        o << ")";
    }
    return o.str();
}

ExpectedData ExpectedData::parse(const std::string& text)
{
    ExpectedData d;
    d.text = text;
    std::istringstream in(text);
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        std::string t = trim(line);
        if (t.empty() || t[0] == '#')
            continue;
        std::istringstream w(t);
        std::string kind;
        w >> kind;
        auto bad = [&](const std::string& why) {
            return std::invalid_argument("expected rows line " + std::to_string(lineno) + ": " + why);
        };
        if (kind == "row") {
            auto cols = split(t.substr(3), '|');
            if (cols.size() < 3)
                throw bad("row needs a2 and field columns");
            std::istringstream h(cols[0]);
            ExpectedRow r;
            std::string v;
            if (!(h >> r.table >> r.family >> r.k >> r.l >> r.m >> v))
                throw bad("row header");
            r.verdict = parse_verdict(v);
            r.line = lineno;
            r.a2 = cols[1];
            r.field = cols[2];
            for (size_t i = 3; i < cols.size(); ++i) {
                auto [name, reason] = split_reason(cols[i]);
                if (name != "verdict" && name != "a2" && name != "field" && name != "duplicate")
                    throw bad("unknown flag " + name);
                r.flags[name] = reason;
            }
            d.rows.push_back(r);
        } else if (kind == "extra") {
            auto [head, reason] = split_reason(t.substr(5));
            std::istringstream h(head);
            ExtraRow e;
            std::string v;
            if (!(h >> e.family >> e.k >> e.l >> e.m >> v))
                throw bad("extra header");
            e.verdict = parse_verdict(v);
            e.reason = reason;
            d.extras.push_back(e);
        } else if (kind == "total") {
            auto [head, reason] = split_reason(t.substr(5));
            std::istringstream h(head);
            std::string scope;
            PublishedTotal p;
            if (!(h >> scope >> p.counts.a >> p.counts.pqa))
                throw bad("total");
            p.flag = reason;
            d.totals[scope] = p;
        } else if (kind == "triangle") {
            std::array<int, 3> tr{};
            if (!(w >> tr[0] >> tr[1] >> tr[2]))
                throw bad("triangle");
            d.triangles.push_back(tr);
        } else {
            throw bad("unknown entry " + kind);
        }
    }
    return d;
}

const ExpectedData& ExpectedData::builtin()
{
    static const ExpectedData d = parse(builtin_expected_text());
    return d;
}

FieldPtr ClassRecord::ground_field() const
{
    if (!ground_primitive)
        return nullptr;
    if (ground_primitive->is_rational())
        return NumberField::rationals();
    return NumberField::create(*ground_primitive);
}

ClassRecord ClassRecord::from_report(const ClassificationReport& r)
{
    ClassRecord c;
    c.spec = r.spec;
    c.verdict = r.verdict;
    c.a_squared = r.a_squared;
    c.witness = r.witness();
    nlohmann::json j = r.to_json();
    j["key"] = r.spec.key();
    j["spec"] = r.spec.str();
    j["a_squared"] = r.a_squared ? canonical_json(*r.a_squared) : nlohmann::json(nullptr);
    for (const char* name : {"ground_field", "entries_field"}) {
        if (j[name].is_null())
            continue;
        const FieldPtr& F = std::string(name) == "ground_field" ? r.k : r.K;
        j[name]["primitive"] = canonical_json(F->primitive());
        j[name]["minpoly_text"] = F->minpoly().str();
    }
    if (r.k)
        c.ground_primitive = r.k->primitive();
    j["witness_text"] = c.witness;
    c.json = j;
    return c;
}

ClassRecord ClassRecord::from_json(const nlohmann::json& j)
{
    ClassRecord c;
    const auto& p = j.at("params");
    c.spec = make_spec(j.at("family").get<int>(), p.at("k").get<int>(), p.at("l").get<int>(), p.at("m").get<int>());
    c.verdict = parse_verdict(j.at("verdict").get<std::string>());
    if (!j.at("a_squared").is_null())
        c.a_squared = from_canonical_json(j["a_squared"]);
    if (!j.at("ground_field").is_null())
        c.ground_primitive = from_canonical_json(j["ground_field"]["primitive"]);
    c.witness = j.at("witness_text").get<std::string>();
    c.json = j;
    return c;
}

ResultCache::ResultCache(std::string path, std::string checksum)
    : path_(std::move(path)), checksum_(std::move(checksum))
{
    if (path_.empty())
        return;
    bool valid = false;
    {
        std::ifstream in(path_);
        std::string line;
        if (in && std::getline(in, line)) {
            auto h = nlohmann::json::parse(line, nullptr, false);
            valid = !h.is_discarded() && h.contains("catalog") && h["catalog"] == checksum_;
            while (valid && std::getline(in, line)) {
                auto e = nlohmann::json::parse(line, nullptr, false);
                if (e.is_discarded() || !e.contains("key") || !e.contains("record"))
                    continue;  // torn write
                entries_[e["key"].get<std::string>()] = e["record"];
            }
        }
    }
    if (!valid) {
        entries_.clear();
        std::ofstream out(path_, std::ios::trunc);
        if (!out)
            throw std::runtime_error("cannot write cache " + path_);
        out << nlohmann::json{{"catalog", checksum_}}.dump() << "\n";
    }
}

std::optional<ClassRecord> ResultCache::find(const PrismSpec& spec) const
{
    auto it = entries_.find(spec.key());
    if (it == entries_.end()) {
        ++misses_;
        return std::nullopt;
    }
    ++hits_;
    return ClassRecord::from_json(it->second);
}

void ResultCache::store(const ClassRecord& r)
{
    if (!enabled())
        return;
    entries_[r.spec.key()] = r.json;
    std::ofstream out(path_, std::ios::app);
    out << nlohmann::json{{"key", r.spec.key()}, {"record", r.json}}.dump() << "\n";
}

std::string default_cache_path()
{
    const char* p = std::getenv("COXARITH_CACHE");
    return p ? std::string(p) : std::string();
}

ClassRecord Classifier::classify(const PrismSpec& spec)
{
    if (cache_ && cache_->enabled())
        if (auto r = cache_->find(spec))
            return *r;
    ClassRecord r = ClassRecord::from_report(coxarith::classify(spec));
    if (cache_)
        cache_->store(r);
    return r;
}

std::vector<PrismSpec> exhaustive_specs(int max_m)
{
    std::vector<PrismSpec> v = finite_qa_candidate_set(3, max_m);
    for (int dim : {4, 5})
        for (const auto& s : enumerate(dim, max_m))
            v.push_back(s);
    std::sort(v.begin(), v.end());
    v.erase(std::unique(v.begin(), v.end()), v.end());
    return v;
}

bool RowCheck::explained() const
{
    if (!error.empty())
        return false;
    if (!verdict_ok && !row.flagged("verdict"))
        return false;
    if (!a2_ok && !row.flagged("a2"))
        return false;
    if (!field_ok && !row.flagged("field"))
        return false;
    if (duplicate && !row.flagged("duplicate"))
        return false;
    return true;
}

std::string RowCheck::detail() const
{
    if (!error.empty())
        return error;
    std::vector<std::string> bad;
    if (!verdict_ok)
        bad.push_back("verdict " + short_name(row.verdict) + " vs " + short_name(got->verdict));
    if (!a2_ok)
        bad.push_back("a^2 " + row.a2 + " vs " + (got->a_squared ? got->a_squared->to_decimal(15) : "-"));
    if (!field_ok)
        bad.push_back("field " + row.field + " vs " + field_summary(got->json["ground_field"]));
    std::string s;
    for (size_t i = 0; i < bad.size(); ++i)
        s += (i ? "; " : "") + bad[i];
    return s.empty() ? "ok" : s;
}

RowCheck check_row(const ExpectedRow& row, Classifier& c)
{
    RowCheck r;
    r.row = row;
    try {
        PrismSpec spec = make_spec(row.family, row.k, row.l, row.m);
        r.got = c.classify(spec);
    } catch (const std::exception& e) {
        r.error = e.what();
        return r;
    }
    r.verdict_ok = r.got->verdict == row.verdict;
    r.a2_ok = r.got->a_squared && *r.got->a_squared == parse_expression(row.a2);
    FieldPtr k = r.got->ground_field();
    r.field_ok = k && fields_equal(*k, *parse_field(row.field));
    return r;
}

std::map<std::string, Counts> count_verdicts(const std::vector<ClassRecord>& rs)
{
    std::map<std::string, Counts> t;
    for (const std::string& s : {"all", "dim3", "dim4", "dim5"})
        t[s] = Counts{};
    for (const auto& r : rs)
        add(t, r.spec.dim, r.verdict, 1);
    return t;
}

int table_of(const ClassRecord& r)
{
    if (r.verdict == Verdict::NotQuasiArithmetic)
        return 0;
    int f = r.spec.family;
    if (f == 1)
        return r.verdict == Verdict::Arithmetic ? 2 : 3;
    if (f <= 4)
        return 4;
    if (f <= 11)
        return 5;
    return 6;
}

bool TableReproduction::rows_ok() const
{
    return std::all_of(checks.begin(), checks.end(), [](const RowCheck& c) { return c.ok(); });
}

bool TableReproduction::diff_explained() const
{
    return std::all_of(diff.begin(), diff.end(), [](const DiffLine& d) { return d.explained; });
}

bool TableReproduction::totals_match(const ExpectedData& e) const
{
    for (const auto& [scope, p] : e.totals) {
        auto it = engine_totals.find(scope);
        if (it == engine_totals.end() || !(it->second == p.counts))
            return false;
    }
    return true;
}

bool TableReproduction::totals_reconciled() const { return reconciled == engine_totals; }

TableReproduction reproduce_tables(Classifier& c, const ExpectedData& expected, bool with_closed_forms,
                                   int max_m, int closed_form_max_m)
{
    TableReproduction t;
    for (const auto& s : exhaustive_specs(max_m))
        t.exhaustive.push_back(c.classify(s));
    for (const auto& r : t.exhaustive)
        if (int n = table_of(r))
            t.tables[n].push_back(r);
    t.engine_totals = count_verdicts(t.exhaustive);

    for (const std::string& s : {"all", "dim3", "dim4", "dim5"})
        t.printed_row_totals[s] = Counts{};
    std::set<std::string> seen;
    for (const auto& row : expected.rows) {
        RowCheck rc = check_row(row, c);
        int dim = rc.got ? rc.got->spec.dim : 3;
        add(t.printed_row_totals, dim, row.verdict, 1);
        std::string key = rc.got ? rc.got->spec.key() : row.label();
        rc.duplicate = !seen.insert(std::to_string(row.table) + ":" + key).second;
        t.checks.push_back(rc);
    }
    t.reconciled = t.printed_row_totals;

    std::set<std::string> listed;
    for (const auto& rc : t.checks) {
        const ExpectedRow& row = rc.row;
        std::string spec = rc.got ? rc.got->spec.str() : row.label();
        int dim = rc.got ? rc.got->spec.dim : 3;
        if (rc.got)
            listed.insert(rc.got->spec.key());
        auto line = [&](const std::string& kind, const std::string& printed, const std::string& engine) {
            DiffLine d{kind, spec + " [" + row.label() + "]", printed, engine, row.flagged(kind), ""};
            if (d.explained)
                d.reason = row.flags.at(kind);
            t.diff.push_back(d);
        };
        if (rc.duplicate) {
            line("duplicate", "listed again", "counted once");
            add(t.reconciled, dim, row.verdict, -1);
            continue;
        }
        if (!rc.error.empty()) {
            line("error", short_name(row.verdict), rc.error);
            add(t.reconciled, dim, row.verdict, -1);
            continue;
        }
        if (!rc.verdict_ok) {
            line("verdict", short_name(row.verdict), short_name(rc.got->verdict));
            add(t.reconciled, dim, row.verdict, -1);
            add(t.reconciled, dim, rc.got->verdict, 1);
        }
        if (!rc.a2_ok)
            line("a2", row.a2, rc.got->a_squared ? rc.got->a_squared->to_decimal(15) : "-");
        if (!rc.field_ok)
            line("field", row.field, field_summary(rc.got->json["ground_field"]));
    }
    for (const auto& r : t.exhaustive) {
        if (r.verdict == Verdict::NotQuasiArithmetic || listed.count(r.spec.key()))
            continue;
        DiffLine d{"extra", r.spec.str(), "absent", short_name(r.verdict), false, ""};
        for (const auto& e : expected.extras)
            if (make_spec(e.family, e.k, e.l, e.m) == r.spec && e.verdict == r.verdict) {
                d.explained = true;
                d.reason = e.reason;
            }
        t.diff.push_back(d);
        add(t.reconciled, r.spec.dim, r.verdict, 1);
    }
    for (const auto& [scope, p] : expected.totals) {
        const Counts& rows = t.printed_row_totals[scope];
        if (p.counts == rows)
            continue;
        std::ostringstream printed, counted;
        printed << p.counts.a << " A, " << p.counts.pqa << " PQA";
        counted << rows.a << " A, " << rows.pqa << " PQA in the table rows";
        t.diff.push_back({"total", scope, printed.str(), counted.str(), !p.flag.empty(), p.flag});
    }

    if (with_closed_forms)
        for (const auto& row : closed_form_rows())
            for (int m : legal_m(row.family, row.k, row.l, 2, closed_form_max_m))
                t.closed_forms.push_back(closed_form_compare(row.family, row.k, row.l, m));
    return t;
}

std::string RunManifest::run_id() const { return to_json()["run_id"].get<std::string>(); }

nlohmann::json RunManifest::to_json() const
{
    nlohmann::json j;
    j["command_line"] = command_line;
    j["catalog_checksum"] = catalog_checksum;
    j["bounds"] = bounds;
    j["row_counts"] = row_counts;
    j["discrepancies"] = discrepancies;
    j["wall_clock_seconds"] = wall_clock;
    nlohmann::json k = j;
    k.erase("wall_clock_seconds");
    j["run_id"] = sha256_hex(k.dump()).substr(0, 16);
    return j;
}

Format parse_format(const std::string& s)
{
    if (s == "md")
        return Format::Markdown;
    if (s == "csv")
        return Format::Csv;
    if (s == "json")
        return Format::Json;
    throw std::invalid_argument("unknown format " + s);
}

std::string render_records(const std::vector<ClassRecord>& rs, Format f, const std::string& run_id)
{
    std::ostringstream o;
    switch (f) {
    case Format::Json: {
        nlohmann::json a = nlohmann::json::array();
        for (const auto& r : rs)
            a.push_back(r.json);
        if (run_id.empty())
            o << (rs.size() == 1 ? rs[0].json : a).dump(2) << "\n";
        else
            o << nlohmann::json{{"run", run_id}, {"rows", a}}.dump(2) << "\n";
        break;
    }
    case Format::Csv:
        if (!run_id.empty())
            o << "# run " << run_id << "\n";
        o << "family,k,l,m,dim,verdict,a_squared_minpoly,a_squared_decimal,ground_field,witness\n";
        for (const auto& r : rs)
            o << r.spec.family << "," << r.spec.k << "," << r.spec.l << "," << r.spec.m << "," << r.spec.dim << ","
              << to_string(r.verdict) << "," << csv_quote(a2_minpoly(r.json)) << "," << a2_decimal(r.json) << ","
              << csv_quote(field_summary(r.json["ground_field"])) << "," << csv_quote(r.witness) << "\n";
        break;
    case Format::Markdown:
        if (!run_id.empty())
            o << "run " << run_id << "\n\n";
        o << "| prism | dim | verdict | a^2 | minimal polynomial of a^2 | k | witness |\n";
        o << "|---|---|---|---|---|---|---|\n";
        for (const auto& r : rs)
            o << "| " << r.spec.str() << " | " << r.spec.dim << " | " << to_string(r.verdict) << " | "
              << a2_decimal(r.json) << " | " << md_escape(a2_minpoly(r.json)) << " | "
              << md_escape(field_summary(r.json["ground_field"])) << " | " << md_escape(r.witness) << " |\n";
        break;
    }
    return o.str();
}

std::string render_table(int table, const std::vector<ClassRecord>& rs, Format f, const std::string& run_id)
{
    static const std::map<int, std::string> titles = {
        {2, "Compact arithmetic prisms in H^3 of type 1"},
        {3, "Compact properly quasi-arithmetic prisms in H^3 of type 1"},
        {4, "Quasi-arithmetic compact prisms in H^3 of types 2, 3, 4"},
        {5, "Quasi-arithmetic noncompact prisms in H^3"},
        {6, "Quasi-arithmetic prisms in H^4 and H^5"},
    };
    std::string body = render_records(rs, f, run_id);
    if (f != Format::Markdown)
        return body;
    return "## Table " + std::to_string(table) + ". " + titles.at(table) + "\n\n" + body;
}

std::string render_closed_forms(const std::vector<ClosedFormCheck>& cs, Format f, const std::string& run_id)
{
    std::ostringstream o;
    auto expr = [](const ClosedFormCheck& c) {
        return closed_form_row(c.spec.family, c.spec.k, c.spec.l).expr;
    };
    switch (f) {
    case Format::Json: {
        nlohmann::json a = nlohmann::json::array();
        for (const auto& c : cs)
            a.push_back({{"family", c.spec.family},
                         {"k", c.spec.k},
                         {"l", c.spec.l},
                         {"m", c.spec.m},
                         {"closed_form", expr(c)},
                         {"equal", c.equal},
                         {"solved", c.solved},
                         {"closed", c.closed}});
        o << nlohmann::json{{"run", run_id}, {"rows", a}}.dump(2) << "\n";
        break;
    }
    case Format::Csv:
        o << "# run " << run_id << "\n";
        o << "family,k,l,m,closed_form,equal,solved_decimal,closed_decimal\n";
        for (const auto& c : cs)
            o << c.spec.family << "," << c.spec.k << "," << c.spec.l << "," << c.spec.m << "," << csv_quote(expr(c))
              << "," << (c.equal ? "true" : "false") << "," << c.solved << "," << c.closed << "\n";
        break;
    case Format::Markdown:
        o << "## Table 7. cosh^2 d as a function of m\n\nrun " << run_id << "\n\n";
        o << "| type | k | l | m | closed form | equal | solved | closed form value |\n";
        o << "|---|---|---|---|---|---|---|---|\n";
        for (const auto& c : cs)
            o << "| " << c.spec.family << " | " << c.spec.k << " | " << c.spec.l << " | " << c.spec.m << " | "
              << md_escape(expr(c)) << " | " << (c.equal ? "yes" : "NO") << " | " << c.solved << " | " << c.closed
              << " |\n";
        break;
    }
    return o.str();
}

std::string render_diff(const TableReproduction& t, const ExpectedData& e)
{
    std::ostringstream o;
    o << "# Differences from the published tables\n\n";
    if (t.diff.empty())
        o << "none\n";
    for (const auto& d : t.diff) {
        o << "- [" << (d.explained ? "flagged" : "UNEXPLAINED") << "] " << d.kind << " " << d.spec << ": printed "
          << d.printed << ", engine " << d.engine;
        if (!d.reason.empty())
            o << " (" << d.reason << ")";
        o << "\n";
    }
    int bad = 0;
    for (const auto& c : t.closed_forms)
        if (!c.equal) {
            if (!bad++)
                o << "\n## Closed forms that differ from the solved value\n\n";
            o << "- " << c.spec.str() << ": " << closed_form_row(c.spec.family, c.spec.k, c.spec.l).expr
              << " = " << c.closed << ", solved " << c.solved << "\n";
        }
    o << "\n" << totals_line(t, e) << "\n";
    return o.str();
}

std::string totals_line(const TableReproduction& t, const ExpectedData& e)
{
    auto fmt = [](const std::map<std::string, Counts>& m) {
        std::ostringstream o;
        auto get = [&](const std::string& k) {
            auto it = m.find(k);
            return it == m.end() ? Counts{} : it->second;
        };
        Counts a = get("all");
        o << a.a << " A / " << a.pqa << " PQA (";
        bool first = true;
        for (const char* s : {"dim3", "dim4", "dim5"}) {
            Counts c = get(s);
            o << (first ? "" : ", ") << s << " " << c.a << "/" << c.pqa;
            first = false;
        }
        o << ")";
        return o.str();
    };
    std::map<std::string, Counts> published;
    for (const auto& [scope, p] : e.totals)
        published[scope] = p.counts;
    std::ostringstream o;
    o << "totals: engine " << fmt(t.engine_totals) << "; published " << fmt(published) << "; "
      << (t.totals_match(e) ? "match" : "MISMATCH") << "; reconciled by the diff: "
      << (t.totals_reconciled() ? "yes" : "no");
    return o.str();
}

}  // namespace coxarith
