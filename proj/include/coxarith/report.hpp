#pragma once

#include <array>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include <json.hpp>

#include "coxarith/catalog.hpp"
#include "coxarith/geometry.hpp"
#include "coxarith/vinberg.hpp"

namespace coxarith {

/* Integers, + - * / ^, parentheses, sqrt(x) and cos(p/q) = cos(p pi/q).
 * Throws std::invalid_argument on syntax errors. */
AlgebraicReal parse_expression(const std::string& s);
/* "Q" or generators separated by commas. */
FieldPtr parse_field(const std::string& s);

/* Minimal polynomial with integer coefficients and the index of the root
 * among the real roots in increasing order; independent of refinement. */
nlohmann::json canonical_json(const AlgebraicReal& x, int digits = 20);
AlgebraicReal from_canonical_json(const nlohmann::json& j);

struct ExpectedRow {
    int table = 0;
    int line = 0;
    int family = 0, k = 0, l = 0, m = 0;
    Verdict verdict = Verdict::NotQuasiArithmetic;
    std::string a2, field;
    std::map<std::string, std::string> flags;  // column -> reason

    bool flagged(const std::string& what) const { return flags.count(what) > 0; }
    std::string label() const;
};

struct ExtraRow {
    int family = 0, k = 0, l = 0, m = 0;
    Verdict verdict = Verdict::NotQuasiArithmetic;
    std::string reason;
};

struct Counts {
    int a = 0, pqa = 0;
    friend bool operator==(const Counts& x, const Counts& y) { return x.a == y.a && x.pqa == y.pqa; }
};

struct PublishedTotal {
    Counts counts;
    std::string flag;  // reason when the published count differs from the rows
};

struct ExpectedData {
    std::vector<ExpectedRow> rows;
    std::vector<ExtraRow> extras;
    std::map<std::string, PublishedTotal> totals;  // "all", "dim3", "dim4", "dim5"
    std::vector<std::array<int, 3>> triangles;

    static ExpectedData parse(const std::string& text);
    static const ExpectedData& builtin();
    std::string text;
};

/* Classification result reduced to what the reports and the cache need. */
struct ClassRecord {
    PrismSpec spec;
    Verdict verdict = Verdict::NotQuasiArithmetic;
    std::optional<AlgebraicReal> a_squared;
    std::optional<AlgebraicReal> ground_primitive;  // set when k was computed
    std::string witness;
    nlohmann::json json;

    FieldPtr ground_field() const;
    static ClassRecord from_report(const ClassificationReport& r);
    static ClassRecord from_json(const nlohmann::json& j);
};

/* Append-only JSON lines. The first line records the catalog checksum; a
 * different checksum empties the file. */
class ResultCache {
public:
    ResultCache() = default;
    ResultCache(std::string path, std::string checksum);
    bool enabled() const { return !path_.empty(); }
    std::optional<ClassRecord> find(const PrismSpec& spec) const;
    void store(const ClassRecord& r);
    size_t hits() const { return hits_; }
    size_t misses() const { return misses_; }

private:
    std::string path_, checksum_;
    std::map<std::string, nlohmann::json> entries_;
    mutable size_t hits_ = 0, misses_ = 0;
};

/* $COXARITH_CACHE, or empty when unset. */
std::string default_cache_path();

class Classifier {
public:
    explicit Classifier(ResultCache* cache = nullptr) : cache_(cache) {}
    ClassRecord classify(const PrismSpec& spec);

private:
    ResultCache* cache_;
};

/* Specs of the exhaustive run: the H^3 candidate set and all of H^4, H^5. */
std::vector<PrismSpec> exhaustive_specs(int max_m = 30);

struct RowCheck {
    ExpectedRow row;
    std::optional<ClassRecord> got;
    std::string error;  // spec rejected or computation failed
    bool verdict_ok = false, a2_ok = false, field_ok = false;
    bool duplicate = false;

    bool ok() const { return error.empty() && verdict_ok && a2_ok && field_ok; }
    /* Every failing column carries a flag. */
    bool explained() const;
    std::string detail() const;
};
RowCheck check_row(const ExpectedRow& row, Classifier& c);

/* Keys "all", "dim3", "dim4", "dim5". */
std::map<std::string, Counts> count_verdicts(const std::vector<ClassRecord>& rs);

struct DiffLine {
    std::string kind;  // verdict, a2, field, error, duplicate, extra, total
    std::string spec;
    std::string printed, engine;
    bool explained = false;
    std::string reason;
};

struct TableReproduction {
    std::vector<RowCheck> checks;
    std::vector<ClassRecord> exhaustive;   // quasi-arithmetic and not, sorted by spec
    std::map<int, std::vector<ClassRecord>> tables;  // 2..6, engine rows in table scope
    std::vector<DiffLine> diff;
    std::map<std::string, Counts> engine_totals;
    std::map<std::string, Counts> printed_row_totals;  // counted from the table rows
    std::map<std::string, Counts> reconciled;        // row counts corrected by the diff
    std::vector<ClosedFormCheck> closed_forms;

    bool rows_ok() const;
    bool diff_explained() const;
    /* Engine totals equal the published ones. */
    bool totals_match(const ExpectedData& e) const;
    /* Engine totals equal the row counts corrected by every diff line. */
    bool totals_reconciled() const;
};

/* Table number (2..6) an engine row belongs to, or 0 if not quasi-arithmetic. */
int table_of(const ClassRecord& r);

TableReproduction reproduce_tables(Classifier& c, const ExpectedData& expected, bool with_closed_forms,
                                   int max_m = 30, int closed_form_max_m = 30);

struct RunManifest {
    std::string command_line;
    std::string catalog_checksum;
    std::map<std::string, int> bounds;
    double wall_clock = 0;
    std::map<std::string, int> row_counts;
    std::vector<std::string> discrepancies;

    /* Hash of everything except the wall clock. */
    std::string run_id() const;
    nlohmann::json to_json() const;
};

enum class Format { Markdown, Csv, Json };
Format parse_format(const std::string& s);

std::string render_records(const std::vector<ClassRecord>& rs, Format f, const std::string& run_id = "");
std::string render_table(int table, const std::vector<ClassRecord>& rs, Format f, const std::string& run_id);
std::string render_closed_forms(const std::vector<ClosedFormCheck>& cs, Format f, const std::string& run_id);
std::string render_diff(const TableReproduction& t, const ExpectedData& e);
std::string totals_line(const TableReproduction& t, const ExpectedData& e);

}  // namespace coxarith
