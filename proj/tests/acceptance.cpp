#include <sys/wait.h>

#include <array>
#include <chrono>
#include <cstdlib>
#include <filesystem>
#include <iostream>
#include <random>
#include <set>
#include <sstream>

#include "coxarith/report.hpp"
#include "oracles.hpp"

using namespace coxarith;

namespace {

struct Outcome {
    bool pass = false;
    std::string summary;
    std::vector<std::string> notes;
};

void report(int n, const std::string& name, const Outcome& o)
{
    std::cout << (o.pass ? "PASS" : "FAIL") << " criterion " << n << " (" << name << "): " << o.summary << std::endl;
    for (const auto& s : o.notes)
        std::cout << "    " << s << "\n";
}

std::string counts(const Counts& c) { return std::to_string(c.a) + " A / " + std::to_string(c.pqa) + " PQA"; }

AlgebraicReal rt(long n) { return sqrt_nonneg(AlgebraicReal(n)); }

AlgebraicReal eval_at(const Polynomial& p, const AlgebraicReal& x)
{
    AlgebraicReal s(0), pw(1);
    for (int i = 0; i <= p.degree(); ++i) {
        if (p.coeff(i) != 0)
            s = s + AlgebraicReal(p.coeff(i)) * pw;
        pw = pw * x;
    }
    return s;
}

Outcome table_rows(const TableReproduction& t)
{
    Outcome o;
    int total = 0, exact = 0;
    for (const auto& rc : t.checks) {
        if (rc.duplicate)
            continue;
        ++total;
        if (rc.ok()) {
            ++exact;
            continue;
        }
        o.notes.push_back(rc.row.label() + ": " + rc.detail() + (rc.explained() ? " [flagged]" : " [unflagged]"));
    }
    o.pass = exact == total;
    o.summary = std::to_string(exact) + "/" + std::to_string(total) + " distinct rows match in verdict, a^2 and field";
    if (!o.pass)
        o.summary += "; the others differ from the printed tables and are listed below";
    return o;
}

int run_cli_reproduce(const std::string& cache, const std::string& out)
{
    std::string cmd = "COXARITH_CACHE='" + cache + "' '" + COXARITH_CLI + "' reproduce-tables --out '" + out +
                      "' > '" + out + ".log' 2>&1";
    int st = std::system(cmd.c_str());
    return WIFEXITED(st) ? WEXITSTATUS(st) : -1;
}

Outcome totals(const TableReproduction& t, const ExpectedData& e, bool rows_pass, int cli_exit,
               const std::string& out)
{
    Outcome o;
    bool match = t.totals_match(e);
    int unexplained = 0;
    for (const auto& d : t.diff)
        unexplained += !d.explained;
    o.notes.push_back("engine: all " + counts(t.engine_totals.at("all")) + ", dim3 " +
                      counts(t.engine_totals.at("dim3")) + ", dim4 " + counts(t.engine_totals.at("dim4")) +
                      ", dim5 " + counts(t.engine_totals.at("dim5")));
    o.notes.push_back("published: all " + counts(e.totals.at("all").counts) + ", dim3 " +
                      counts(e.totals.at("dim3").counts) + ", dim4 " + counts(e.totals.at("dim4").counts) +
                      ", dim5 " + counts(e.totals.at("dim5").counts));
    o.notes.push_back(std::to_string(t.diff.size()) + " diff lines, " + std::to_string(unexplained) +
                      " unexplained; published row counts corrected by the diff " +
                      (t.totals_reconciled() ? "equal" : "do not equal") + " the engine totals");
    o.notes.push_back("reproduce-tables exit code " + std::to_string(cli_exit) + ", diff written to " + out +
                      "/diff.md");
    bool surfaced = match ? cli_exit == 0 : cli_exit == 4 && std::filesystem::exists(out + "/diff.md");
    o.pass = rows_pass && unexplained == 0 && surfaced && t.totals_reconciled();
    std::ostringstream s;
    s << "totals " << (match ? "match" : "differ") << " (" << counts(t.engine_totals.at("all")) << " vs "
      << counts(e.totals.at("all").counts) << ")";
    if (!match)
        s << ", surfaced with exit code " << cli_exit;
    s << "; diff " << (unexplained ? "has unexplained lines" : "fully flagged");
    if (!rows_pass)
        s << "; red because the per-row checks of criterion 1 do not all pass";
    o.summary = s.str();
    return o;
}

Outcome negative_controls(Classifier& c)
{
    Outcome o;
    std::vector<std::array<int, 4>> specs = {{1, 2, 3, 11}, {1, 2, 3, 13}, {1, 2, 4, 7}};
    for (int m = 4; m <= 10; ++m)
        specs.push_back({7, 3, 0, m});
    for (int f : {19, 20, 23, 24})
        specs.push_back({f, 0, 0, 0});
    int ok = 0;
    for (const auto& s : specs) {
        std::string label = "type " + std::to_string(s[0]) + " (" + std::to_string(s[1]) + "," +
                            std::to_string(s[2]) + "," + std::to_string(s[3]) + ")";
        try {
            ClassRecord r = c.classify(make_spec(s[0], s[1], s[2], s[3]));
            if (r.verdict == Verdict::NotQuasiArithmetic)
                ++ok;
            else
                o.notes.push_back(label + ": " + to_string(r.verdict));
        } catch (const std::invalid_argument& e) {
            std::string why;
            if (s[0] == 7 && s[3] <= 6)
                why = " (the base triangle (2,3," + std::to_string(s[3]) + ") is not hyperbolic)";
            o.notes.push_back(label + ": rejected, " + std::string(e.what()) + why);
        }
    }
    o.pass = ok == int(specs.size());
    o.summary = std::to_string(ok) + "/" + std::to_string(specs.size()) + " controls classified NotQuasiArithmetic";
    return o;
}

Outcome closed_forms(const TableReproduction& t, const ExpectedData& e)
{
    Outcome o;
    std::map<std::string, std::pair<int, int>> per_row;  // unequal, total
    int bad = 0;
    for (const auto& cf : t.closed_forms) {
        auto& p = per_row["type " + std::to_string(cf.spec.family) + " (" + std::to_string(cf.spec.k) + "," +
                          std::to_string(cf.spec.l) + ")"];
        ++p.second;
        if (!cf.equal) {
            ++p.first;
            ++bad;
        }
    }
    for (const auto& [row, p] : per_row)
        if (p.first)
            o.notes.push_back(row + ": " + std::to_string(p.first) + " of " + std::to_string(p.second) +
                              " values of m differ from the solved a^2");
    int cross = 0;
    const ClosedFormRow& r23 = closed_form_row(1, 2, 3);
    for (int m : {7, 8, 10}) {
        for (const auto& row : e.rows)
            if (row.table == 2 && row.family == 1 && row.k == 2 && row.l == 3 && row.m == m) {
                CosineField C = CosineField::for_labels({m, 4, 5});
                if (closed_form_value(r23, m, C).value() == parse_expression(row.a2))
                    ++cross;
                else
                    o.notes.push_back("(2,3) closed form at m = " + std::to_string(m) + " differs from the table entry");
            }
    }
    o.pass = bad == 0 && cross == 3;
    o.summary = std::to_string(t.closed_forms.size() - bad) + "/" + std::to_string(t.closed_forms.size()) +
                " closed-form values equal, (2,3) row matches " + std::to_string(cross) + "/3 table entries";
    return o;
}

Outcome glued_prisms()
{
    Outcome o;
    int ok = 0, total = 0, skipped = 0;
    for (int j : {1, 2})
        for (auto kl : std::vector<std::pair<int, int>>{{2, 2}, {2, 3}, {3, 3}})
            for (int m : {4, 7, 8, 9, 11, 12, 13, 14}) {
                auto [k, l] = kl;
                if (Rational(1, k) + Rational(1, l) + Rational(1, m) >= 1) {
                    ++skipped;
                    continue;
                }
                ++total;
                std::string label = "(" + std::to_string(j) + "," + std::to_string(k) + "," + std::to_string(l) +
                                    "," + std::to_string(m) + ")";
                try {
                    Theorem2Record r = theorem2_check(j, k, l, m);
                    bool cert_in = r.sqrt5_in_kP && eval_at(r.sqrt5_in_generator, r.kP_generator) == rt(5);
                    bool cert_out = !r.sqrt5_in_kF && !contains(*r.kF, rt(5));
                    if (r.applicable && cert_in && cert_out && r.verdict == Verdict::NotQuasiArithmetic)
                        ++ok;
                    else
                        o.notes.push_back(label + ": certificate incomplete");
                } catch (const std::exception& e) {
                    o.notes.push_back(label + ": " + e.what());
                }
            }
    o.pass = ok == total;
    o.summary = std::to_string(ok) + "/" + std::to_string(total) +
                " glued prisms certified (sqrt5 in k(P), sqrt5 not in k(F)); " + std::to_string(skipped) +
                " parameter sets skipped as non-hyperbolic bases";
    return o;
}

Outcome commensurability()
{
    Outcome o;
    std::vector<PrismSpec> specs;
    for (int m : {7, 11, 13, 17, 19, 23, 29})
        specs.push_back(make_spec(1, 2, 3, m));
    CommensurabilityPartition p = commensurability_separation(specs);
    bool degrees = true;
    for (const auto& c : p.classes)
        degrees = degrees && c.k->degree() == oracle::real_cyclotomic_degree(c.members[0].m);

    auto rows = systole_limit_report(1, 2, 3, 100, 50, 7);
    bool decreasing = rows.size() == 94;
    for (size_t i = 1; i < rows.size(); ++i)
        decreasing = decreasing && rows[i].cosh2 < rows[i - 1].cosh2;
    auto far = systole_limit_report(1, 2, 3, 10000, 50, 10000);
    Real gap = far.at(0).cosh2 - 1;
    bool small = gap > 0 && gap < Real("1e-3");

    o.pass = p.classes.size() == 7 && degrees && decreasing && small;
    o.summary = std::to_string(p.classes.size()) + " ground-field classes for 7 primes" +
                (degrees ? "" : " (degree oracle disagrees)") + "; cosh^2 d " +
                (decreasing ? "strictly decreasing" : "not strictly decreasing") +
                " on m = 7..100; cosh^2 d - 1 = " + gap.str(4, std::ios::scientific) + " at m = 10^4";
    return o;
}

Outcome triangles(const ExpectedData& e)
{
    Outcome o;
    std::set<std::array<int, 3>> expected, got;
    for (const auto& t : e.triangles)
        if (t[0] <= 5 && t[1] <= 5 && t[2] <= 30)
            expected.insert(t);
    int checked = 0;
    for (int k = 2; k <= 5; ++k)
        for (int l = k; l <= 5; ++l)
            for (int m = l; m <= 60; ++m) {
                if (Rational(1, k) + Rational(1, l) + Rational(1, m) >= 1)
                    continue;
                ++checked;
                if (triangle_arithmetic(k, l, m)) {
                    if (m > 30)
                        o.notes.push_back("unexpected arithmetic triangle with m > 30");
                    else
                        got.insert({k, l, m});
                }
            }
    for (const auto& t : expected)
        if (!got.count(t))
            o.notes.push_back("missing (" + std::to_string(t[0]) + "," + std::to_string(t[1]) + "," +
                              std::to_string(t[2]) + ")");
    for (const auto& t : got)
        if (!expected.count(t))
            o.notes.push_back("extra (" + std::to_string(t[0]) + "," + std::to_string(t[1]) + "," +
                              std::to_string(t[2]) + ")");
    o.pass = o.notes.empty();
    o.summary = std::to_string(got.size()) + " arithmetic of " + std::to_string(checked) +
                " hyperbolic triples with k <= l <= 5, m <= 60; list has " + std::to_string(expected.size());
    return o;
}

Outcome kernel(const TableReproduction& t)
{
    Outcome o;
    std::mt19937 rng(1);
    std::uniform_int_distribution<int> c(-9, 9), deg(0, 4);
    auto rpoly = [&] {
        std::vector<Rational> v(deg(rng) + 1);
        for (auto& x : v)
            x = c(rng);
        return Polynomial(v);
    };
    int ring_bad = 0;
    FieldPtr F = field_with_embeddings({rt(2), two_cos_pi_over(5)});
    for (int it = 0; it < 1000; ++it) {
        Polynomial a = rpoly(), b = rpoly(), d = rpoly();
        ring_bad += !(a * (b + d) == a * b + a * d && (a * b) * d == a * (b * d) && a + b == b + a);
        FieldElem x = F->element(rpoly()), y = F->element(rpoly()), z = F->element(rpoly());
        ring_bad += !(x * (y + z) == x * y + x * z && (x * y) * z == x * (y * z));
        if (!x.is_zero())
            ring_bad += !(x * x.inverse() == F->constant(1));
    }
    for (int it = 0; it < 100; ++it) {
        Polynomial p = rpoly();
        auto roots = p.degree() > 0 ? AlgebraicReal::real_roots(p) : std::vector<AlgebraicReal>{};
        if (roots.size() >= 2 && roots[0].degree() <= 2 && roots[1].degree() <= 2)
            ring_bad += !((roots[0] + roots[1]) - roots[1] == roots[0] && roots[0] * roots[1] == roots[1] * roots[0]);
    }
    if (ring_bad)
        o.notes.push_back(std::to_string(ring_bad) + " ring axiom violations");

    int cos_bad = 0;
    for (int m = 2; m <= 30; ++m) {
        AlgebraicReal x = two_cos_pi_over(m);
        cos_bad += !is_algebraic_integer(x);
        if (m >= 3)
            cos_bad += x.degree() != oracle::euler_phi(2 * m) / 2;
    }
    if (cos_bad)
        o.notes.push_back(std::to_string(cos_bad) + " failures for 2cos(pi/m)");

    int solved = 0, sig_bad = 0, psd_checked = 0, psd_bad = 0;
    for (const auto& r : t.exhaustive) {
        if (r.json.value("path", "") != "full")
            continue;
        GramTemplate g = gram_for(r.spec);
        SolvedGram s = solve_base_distance(g);
        ++solved;
        Signature exact = signature(s.G);
        Signature numeric = oracle::prism_signature(g, s.a_squared_value());
        if (!(exact == numeric) || !(exact == Signature{r.spec.dim, 1, 1})) {
            ++sig_bad;
            o.notes.push_back(r.spec.str() + ": exact " + to_string(exact) + ", numeric " + to_string(numeric));
        }
        const auto& w = r.json["witness"];
        if (w.contains("V2") && w["V2"].is_object()) {
            ++psd_checked;
            psd_bad += !w["V2"].value("methods_agree", false);
        }
    }
    if (psd_bad)
        o.notes.push_back(std::to_string(psd_bad) + " prisms where the two PSD tests disagree");
    o.pass = ring_bad == 0 && cos_bad == 0 && sig_bad == 0 && psd_bad == 0 && solved > 0;
    o.summary = "ring axioms on 1000 cases, 2cos(pi/m) for m <= 30, signature vs 100-digit eigenvalues on " +
                std::to_string(solved) + " solved Gram matrices, PSD methods on " + std::to_string(psd_checked) +
                " V2 evaluations";
    if (!o.pass)
        o.summary += ": failures below";
    return o;
}

}  // namespace

int main()
{
    auto t0 = std::chrono::steady_clock::now();
    auto dir = std::filesystem::temp_directory_path() / "coxarith_acceptance";
    std::filesystem::remove_all(dir);
    std::filesystem::create_directories(dir);
    std::string cache_path = (dir / "cache.jsonl").string();
    std::string out = (dir / "tables").string();

    try {
        ResultCache cache(cache_path, Catalog::builtin().checksum());
        Classifier c(&cache);
        const ExpectedData& e = ExpectedData::builtin();
        TableReproduction t = reproduce_tables(c, e, true, 30, 30);
        int cli_exit = run_cli_reproduce(cache_path, out);

        Outcome c1 = table_rows(t);
        report(1, "table rows", c1);
        report(2, "totals", totals(t, e, c1.pass, cli_exit, out));
        report(3, "negative controls", negative_controls(c));
        report(4, "closed forms", closed_forms(t, e));
        report(5, "glued prisms", glued_prisms());
        report(6, "commensurability and systoles", commensurability());
        report(7, "arithmetic triangles", triangles(e));
        report(8, "kernel properties", kernel(t));
    } catch (const std::exception& ex) {
        std::cout << "acceptance aborted: " << ex.what() << "\n";
        return 1;
    }
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    std::cout << "elapsed " << int(secs) << " s\n";
    std::filesystem::remove_all(dir);
    return 0;
}
