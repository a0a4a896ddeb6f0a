#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

namespace qturan {

/// One result row of a verification suite: ordered (key, value) cells plus a
/// status.  Cells keep insertion order so reports are byte-stable; the key
/// "status" is reserved for the row status itself and must not be used as a
/// cell key.
struct ReportRow {
    std::vector<std::pair<std::string, std::string>> cells;
    std::string status = "pass";  ///< "pass" | "fail" | "undetermined"

    void add(const std::string& key, const std::string& value);
    /// Value for a key, or nullptr when absent.
    const std::string* find(const std::string& key) const;
};

/// Aggregated outcome of one suite run, serialisable to JSON/CSV/text.
struct SuiteReport {
    std::string theorem;        ///< suite identifier, e.g. "T1"
    std::string grid = "default";
    std::string mode = "exact";
    long order = 0;
    std::uint64_t seed = 0;
    std::string label;          ///< e.g. "CONJECTURE"; empty when none
    std::vector<std::string> notes;
    std::vector<ReportRow> rows;
    long pass = 0;
    long fail = 0;
    long undetermined = 0;

    /// Append a row, updating the summary counters from its status.
    void push(ReportRow row);
    bool all_pass() const { return fail == 0 && undetermined == 0; }
    /// 0 when every row passed; 1 otherwise (usage errors exit 2 upstream).
    int exit_code() const { return all_pass() ? 0 : 1; }
};

/// JSON document {meta:{theorem,grid,mode,order,seed,...}, rows:[...],
/// summary:{pass,fail,undetermined}}.  Field order is fixed; two identical
/// runs produce byte-identical text.
std::string to_json_string(const SuiteReport& report);

/// Inverse of to_json_string.  Throws grid_error on malformed input or a
/// summary that contradicts the rows.
SuiteReport suite_report_from_json(const std::string& text);

/// CSV with a header row: every cell key in first-appearance order, then
/// "status".  Missing cells are empty fields; fields containing separators
/// are quoted.
std::string to_csv_string(const SuiteReport& report);

/// Human-readable table: a header block, one line per row, a summary line.
std::string to_text_string(const SuiteReport& report);

} // namespace qturan
