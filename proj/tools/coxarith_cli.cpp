#include <chrono>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <set>
#include <sstream>

#include "CLI11.hpp"

#include "coxarith/report.hpp"

using namespace coxarith;

namespace {

constexpr int kOk = 0;
constexpr int kInvalidSpec = 2;
constexpr int kInternal = 3;
constexpr int kDiscrepancy = 4;

struct Options {
    int family = 0, k = 0, l = 0, m = 0, dim = 0, j = 0;
    int max_m = 30, max_kl = 5, m_min = 0, table = 0;
    int precision = 50;
    std::string format = "md";
    std::string out;
    bool no_cache = false;
    std::string ms;
};

void emit(const Options& o, const std::string& text)
{
    if (o.out.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream f(o.out);
    if (!f)
        throw std::runtime_error("cannot write " + o.out);
    f << text;
}

std::string command_line(int argc, char** argv)
{
    std::string s;
    for (int i = 1; i < argc; ++i)
        s += (i > 1 ? " " : "") + std::string(argv[i]);
    return s;
}

ResultCache open_cache(const Options& o)
{
    if (o.no_cache)
        return ResultCache();
    return ResultCache(default_cache_path(), Catalog::builtin().checksum());
}

int cmd_classify(const Options& o)
{
    ResultCache cache = open_cache(o);
    Classifier c(&cache);
    PrismSpec spec = make_spec(o.family, o.k, o.l, o.m);
    emit(o, render_records({c.classify(spec)}, parse_format(o.format)));
    return kOk;
}

int cmd_enumerate(const Options& o)
{
    std::vector<PrismSpec> specs;
    if (o.family)
        specs = Catalog::builtin().enumerate_family(o.family, o.max_m);
    else
        for (int d : o.dim ? std::vector<int>{o.dim} : std::vector<int>{3, 4, 5})
            for (const auto& s : enumerate(d, o.max_m))
                specs.push_back(s);
    std::sort(specs.begin(), specs.end());
    Format f = parse_format(o.format);
    std::ostringstream out;
    if (f == Format::Json) {
        nlohmann::json a = nlohmann::json::array();
        for (const auto& s : specs)
            a.push_back({{"family", s.family}, {"k", s.k}, {"l", s.l}, {"m", s.m}, {"dim", s.dim},
                         {"compact", s.compact}});
        out << a.dump(2) << "\n";
    } else if (f == Format::Csv) {
        out << "family,k,l,m,dim,compact\n";
        for (const auto& s : specs)
            out << s.family << "," << s.k << "," << s.l << "," << s.m << "," << s.dim << ","
                << (s.compact ? "true" : "false") << "\n";
    } else {
        for (const auto& s : specs)
            out << s.str() << " dim " << s.dim << (s.compact ? "" : " noncompact") << "\n";
        std::set<int> fams;
        for (const auto& s : specs)
            fams.insert(s.family);
        out << specs.size() << " specs in " << fams.size() << " families\n";
    }
    emit(o, out.str());
    return kOk;
}

int cmd_systole(const Options& o)
{
    set_real_digits(o.precision);
    std::vector<SystoleRow> rows;
    if (o.m) {
        rows = systole_limit_report(o.family, o.k, o.l, o.m, o.precision, o.m);
    } else {
        rows = systole_limit_report(o.family, o.k, o.l, o.max_m, o.precision, o.m_min);
    }
    emit(o, systole_csv(rows, o.precision));
    return kOk;
}

int cmd_glue(const Options& o)
{
    Theorem2Record r = theorem2_check(o.j, o.k, o.l, o.m);
    Format f = parse_format(o.format);
    if (f == Format::Json) {
        emit(o, r.to_json().dump(2) + "\n");
        return kOk;
    }
    std::ostringstream out;
    out << "glued prism: " << r.left.str() << " + " << r.right.str() << "\n";
    if (!r.applicable) {
        out << "not applicable: " << r.note << "\n";
    } else {
        out << "sqrt5 in k(P): " << (r.sqrt5_in_kP ? "yes" : "no") << ", cyclic product " << r.kP_cycle
            << " = g with minimal polynomial " << r.kP_generator.minpoly().str() << ", sqrt5 = "
            << r.sqrt5_in_generator.str("g") << "\n";
        out << "sqrt5 in k(F): " << (r.sqrt5_in_kF ? "yes" : "no") << ", k(F) of degree " << r.kF->degree()
            << " with minimal polynomial " << r.kF->minpoly().str() << "\n";
        out << "verdict: " << (r.verdict ? to_string(*r.verdict) : std::string("undecided")) << "\n";
    }
    emit(o, out.str());
    return kOk;
}

int cmd_triangles(const Options& o)
{
    std::ostringstream out;
    int count = 0;
    for (int k = 2; k <= o.max_kl; ++k)
        for (int l = k; l <= o.max_kl; ++l)
            for (int m = l; m <= o.max_m; ++m) {
                if (Rational(1, k) + Rational(1, l) + Rational(1, m) >= 1)
                    continue;
                if (triangle_arithmetic(k, l, m)) {
                    out << "(" << k << "," << l << "," << m << ")\n";
                    ++count;
                }
            }
    out << count << " arithmetic triangles\n";
    emit(o, out.str());
    return kOk;
}

int cmd_commensurability(const Options& o)
{
    std::vector<PrismSpec> specs;
    std::istringstream in(o.ms);
    std::string t;
    while (std::getline(in, t, ','))
        specs.push_back(make_spec(o.family, o.k, o.l, std::stoi(t)));
    emit(o, commensurability_separation(specs).to_json().dump(2) + "\n");
    return kOk;
}

int cmd_reproduce(const Options& o, const std::string& argv_line)
{
    auto t0 = std::chrono::steady_clock::now();
    ResultCache cache = open_cache(o);
    Classifier c(&cache);
    const ExpectedData& e = ExpectedData::builtin();
    bool want7 = o.table == 0 || o.table == 7;
    TableReproduction t = reproduce_tables(c, e, want7, o.max_m, o.max_m);

    RunManifest man;
    man.command_line = argv_line;
    man.catalog_checksum = Catalog::builtin().checksum();
    man.bounds = {{"max_m", o.max_m}, {"table", o.table}};
    for (int n = 2; n <= 6; ++n)
        man.row_counts["table" + std::to_string(n)] = int(t.tables[n].size());
    man.row_counts["table7"] = int(t.closed_forms.size());
    for (const auto& d : t.diff)
        man.discrepancies.push_back(d.kind + " " + d.spec + (d.explained ? " (flagged)" : " (unexplained)"));
    for (const auto& cf : t.closed_forms)
        if (!cf.equal)
            man.discrepancies.push_back("closed form " + cf.spec.str());
    std::string id = man.run_id();

    Format f = parse_format(o.format);
    std::string ext = f == Format::Json ? "json" : f == Format::Csv ? "csv" : "md";
    std::filesystem::path dir = o.out.empty() ? std::filesystem::path("tables") : std::filesystem::path(o.out);
    std::filesystem::create_directories(dir);
    auto write = [&](const std::string& name, const std::string& text) {
        std::ofstream out(dir / name);
        if (!out)
            throw std::runtime_error("cannot write " + (dir / name).string());
        out << text;
    };
    for (int n = 2; n <= 6; ++n)
        if (o.table == 0 || o.table == n)
            write("table" + std::to_string(n) + "." + ext, render_table(n, t.tables[n], f, id));
    if (want7)
        write("table7." + ext, render_closed_forms(t.closed_forms, f, id));
    write("diff.md", render_diff(t, e));

    int unexplained = 0, flagged = 0;
    for (const auto& d : t.diff)
        (d.explained ? flagged : unexplained)++;
    int cf_bad = 0;
    for (const auto& cf : t.closed_forms)
        cf_bad += !cf.equal;
    for (int n = 2; n <= 6; ++n)
        if (o.table == 0 || o.table == n)
            std::cout << "table " << n << ": " << t.tables[n].size() << " rows\n";
    if (want7)
        std::cout << "table 7: " << t.closed_forms.size() << " closed-form checks, " << cf_bad << " unequal\n";
    std::cout << "diff: " << flagged << " flagged, " << unexplained << " unexplained\n";
    std::cout << totals_line(t, e) << "\n";
    std::cout << "run " << id << ", output in " << dir.string() << "\n";

    man.wall_clock = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    write("manifest.json", man.to_json().dump(2) + "\n");
    bool clean = t.diff.empty() && cf_bad == 0 && t.totals_match(e);
    return clean ? kOk : kDiscrepancy;
}

}  // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Arithmeticity of straight hyperbolic Coxeter prisms"};
    app.require_subcommand(1);
    Options o;

    auto spec_flags = [&](CLI::App* s) {
        s->add_option("--family", o.family, "prism type 1..24")->required();
        s->add_option("--k", o.k);
        s->add_option("--l", o.l);
        s->add_option("--m", o.m);
    };
    auto common = [&](CLI::App* s) {
        s->add_option("--format", o.format)->check(CLI::IsMember({"md", "csv", "json"}));
        s->add_option("--out", o.out, "output file (directory for reproduce-tables)");
        s->add_option("--precision", o.precision, "decimal digits");
        s->add_flag("--no-cache", o.no_cache);
    };

    auto* classify = app.add_subcommand("classify", "classify one prism");
    spec_flags(classify);
    common(classify);

    auto* tables = app.add_subcommand("reproduce-tables", "regenerate the tables and diff them");
    tables->add_option("--table", o.table, "2..7, all by default")->check(CLI::Range(2, 7));
    tables->add_option("--max-m", o.max_m, "bound on m");
    common(tables);

    auto* en = app.add_subcommand("enumerate", "list catalog prisms");
    en->add_option("--family", o.family);
    en->add_option("--dim", o.dim)->check(CLI::Range(3, 5));
    en->add_option("--max-m", o.max_m);
    common(en);

    auto* sys = app.add_subcommand("systole", "cosh^2 d and the systole bound as CSV");
    spec_flags(sys);
    sys->add_option("--max-m", o.max_m);
    sys->add_option("--min-m", o.m_min);
    common(sys);

    auto* glue = app.add_subcommand("glue", "glued prism of a type 1 or 2 prism with a type 3 prism");
    glue->add_option("--j", o.j)->required()->check(CLI::IsMember({1, 2}));
    glue->add_option("--k", o.k)->required();
    glue->add_option("--l", o.l)->required();
    glue->add_option("--m", o.m)->required();
    common(glue);

    auto* tri = app.add_subcommand("triangles", "arithmetic compact triangle groups");
    tri->add_option("--max", o.max_kl, "bound on the two smallest labels");
    tri->add_option("--max-m", o.max_m, "bound on the largest label");
    common(tri);

    auto* comm = app.add_subcommand("commensurability", "separate prisms by ground field");
    comm->add_option("--family", o.family)->required();
    comm->add_option("--k", o.k);
    comm->add_option("--l", o.l);
    comm->add_option("--ms", o.ms, "comma-separated values of m")->required();
    common(comm);

    CLI11_PARSE(app, argc, argv);

    try {
        if (*classify)
            return cmd_classify(o);
        if (*tables)
            return cmd_reproduce(o, command_line(argc, argv));
        if (*en)
            return cmd_enumerate(o);
        if (*sys)
            return cmd_systole(o);
        if (*glue)
            return cmd_glue(o);
        if (*tri)
            return cmd_triangles(o);
        if (*comm)
            return cmd_commensurability(o);
    } catch (const std::invalid_argument& e) {
        std::cerr << "invalid: " << e.what() << "\n";
        return kInvalidSpec;
    } catch (const std::domain_error& e) {
        std::cerr << "invalid: " << e.what() << "\n";
        return kInvalidSpec;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return kInternal;
    }
    return kOk;
}
