#include <qturan/report.hpp>

#include <qturan/errors.hpp>

#include <nlohmann/json.hpp>

#include <algorithm>
#include <sstream>

namespace qturan {

using ordered_json = nlohmann::ordered_json;

void ReportRow::add(const std::string& key, const std::string& value) {
    if (key == "status")
        throw grid_error("ReportRow: \"status\" is reserved for the row status");
    cells.emplace_back(key, value);
}

const std::string* ReportRow::find(const std::string& key) const {
    for (const auto& [k, v] : cells)
        if (k == key) return &v;
    return nullptr;
}

void SuiteReport::push(ReportRow row) {
    if (row.status == "pass")
        ++pass;
    else if (row.status == "fail")
        ++fail;
    else if (row.status == "undetermined")
        ++undetermined;
    else
        throw grid_error("SuiteReport: unknown row status \"" + row.status + "\"");
    rows.push_back(std::move(row));
}

std::string to_json_string(const SuiteReport& report) {
    ordered_json meta;
    meta["theorem"] = report.theorem;
    meta["grid"] = report.grid;
    meta["mode"] = report.mode;
    meta["order"] = report.order;
    meta["seed"] = report.seed;
    if (!report.label.empty()) meta["label"] = report.label;
    if (!report.notes.empty()) meta["notes"] = report.notes;

    ordered_json rows = ordered_json::array();
    for (const ReportRow& row : report.rows) {
        ordered_json jrow;
        for (const auto& [k, v] : row.cells) jrow[k] = v;
        jrow["status"] = row.status;
        rows.push_back(std::move(jrow));
    }

    ordered_json doc;
    doc["meta"] = std::move(meta);
    doc["rows"] = std::move(rows);
    doc["summary"] = {{"pass", report.pass},
                      {"fail", report.fail},
                      {"undetermined", report.undetermined}};
    return doc.dump(2) + "\n";
}

SuiteReport suite_report_from_json(const std::string& text) {
    ordered_json doc;
    try {
        doc = ordered_json::parse(text);
    } catch (const std::exception& e) {
        throw grid_error(std::string("report: JSON parse failure: ") + e.what());
    }
    if (!doc.is_object() || !doc.contains("meta") || !doc.contains("rows") ||
        !doc.contains("summary"))
        throw grid_error("report: document needs meta, rows, and summary");

    SuiteReport rep;
    const auto& meta = doc["meta"];
    rep.theorem = meta.at("theorem").get<std::string>();
    rep.grid = meta.at("grid").get<std::string>();
    rep.mode = meta.at("mode").get<std::string>();
    rep.order = meta.at("order").get<long>();
    rep.seed = meta.at("seed").get<std::uint64_t>();
    if (meta.contains("label")) rep.label = meta.at("label").get<std::string>();
    if (meta.contains("notes"))
        rep.notes = meta.at("notes").get<std::vector<std::string>>();

    for (const auto& jrow : doc["rows"]) {
        if (!jrow.is_object()) throw grid_error("report: row is not an object");
        ReportRow row;
        for (auto it = jrow.begin(); it != jrow.end(); ++it) {
            if (it.key() == "status") {
                row.status = it.value().get<std::string>();
            } else {
                row.cells.emplace_back(it.key(), it.value().get<std::string>());
            }
        }
        rep.push(std::move(row));
    }

    const auto& summary = doc["summary"];
    if (rep.pass != summary.at("pass").get<long>() ||
        rep.fail != summary.at("fail").get<long>() ||
        rep.undetermined != summary.at("undetermined").get<long>())
        throw grid_error("report: summary counters disagree with rows");
    return rep;
}

namespace {

std::string csv_escape(const std::string& field) {
    if (field.find_first_of(",\"\n") == std::string::npos) return field;
    std::string out = "\"";
    for (char c : field) {
        if (c == '"') out += '"';
        out += c;
    }
    out += '"';
    return out;
}

std::vector<std::string> csv_header(const SuiteReport& report) {
    std::vector<std::string> keys;
    for (const ReportRow& row : report.rows)
        for (const auto& [k, v] : row.cells)
            if (std::find(keys.begin(), keys.end(), k) == keys.end()) keys.push_back(k);
    return keys;
}

} // namespace

std::string to_csv_string(const SuiteReport& report) {
    const std::vector<std::string> keys = csv_header(report);
    std::ostringstream out;
    for (const std::string& k : keys) out << csv_escape(k) << ',';
    out << "status\n";
    for (const ReportRow& row : report.rows) {
        for (const std::string& k : keys) {
            if (const std::string* v = row.find(k)) out << csv_escape(*v);
            out << ',';
        }
        out << row.status << '\n';
    }
    return out.str();
}

std::string to_text_string(const SuiteReport& report) {
    std::ostringstream out;
    out << "suite " << report.theorem << "  grid=" << report.grid
        << "  mode=" << report.mode << "  order=" << report.order
        << "  seed=" << report.seed << '\n';
    if (!report.label.empty()) out << "label: " << report.label << '\n';
    for (const std::string& note : report.notes) out << "note: " << note << '\n';
    for (const ReportRow& row : report.rows) {
        out << '[' << row.status << ']';
        for (const auto& [k, v] : row.cells) out << ' ' << k << '=' << v;
        out << '\n';
    }
    out << "summary: pass=" << report.pass << " fail=" << report.fail
        << " undetermined=" << report.undetermined << '\n';
    return out.str();
}

} // namespace qturan
