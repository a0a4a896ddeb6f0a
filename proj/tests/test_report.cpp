#include "doctest.h"

#include "qturan/errors.hpp"
#include "qturan/manifest.hpp"
#include "qturan/report.hpp"

#include <fstream>
#include <sstream>

using namespace qturan;

namespace {
SuiteReport sample_report() {
    SuiteReport rep;
    rep.theorem = "T1";
    rep.grid = "small";
    rep.mode = "exact";
    rep.order = 32;
    rep.seed = 1729;
    rep.notes.push_back("note one");

    ReportRow r1;
    r1.add("q", "1/2");
    r1.add("check", "turanian");
    r1.status = "pass";
    rep.push(r1);

    ReportRow r2;
    r2.add("q", "1/2");
    r2.add("detail", "has,comma and \"quotes\"");
    r2.status = "undetermined";
    rep.push(r2);

    ReportRow r3;
    r3.add("check", "bound");
    r3.status = "fail";
    rep.push(r3);
    return rep;
}
}  // namespace

TEST_CASE("rows keep cell order and count into the summary") {
    const SuiteReport rep = sample_report();
    CHECK(rep.pass == 1);
    CHECK(rep.fail == 1);
    CHECK(rep.undetermined == 1);
    CHECK(!rep.all_pass());
    CHECK(rep.exit_code() == 1);
    REQUIRE(rep.rows.size() == 3);
    const std::string* q = rep.rows[0].find("q");
    REQUIRE(q != nullptr);
    CHECK(*q == "1/2");
    CHECK(rep.rows[0].find("absent") == nullptr);

    SuiteReport ok;
    ok.theorem = "X";
    ReportRow r;
    r.add("k", "v");
    ok.push(r);
    CHECK(ok.all_pass());
    CHECK(ok.exit_code() == 0);

    ReportRow bogus;
    bogus.status = "maybe";
    CHECK_THROWS(ok.push(bogus));
    ReportRow reserved;
    CHECK_THROWS(reserved.add("status", "x"));
}

TEST_CASE("JSON round trip preserves the report") {
    const SuiteReport rep = sample_report();
    const std::string text = to_json_string(rep);
    const SuiteReport back = suite_report_from_json(text);
    CHECK(back.theorem == rep.theorem);
    CHECK(back.grid == rep.grid);
    CHECK(back.mode == rep.mode);
    CHECK(back.order == rep.order);
    CHECK(back.seed == rep.seed);
    CHECK(back.pass == rep.pass);
    CHECK(back.fail == rep.fail);
    CHECK(back.undetermined == rep.undetermined);
    REQUIRE(back.rows.size() == rep.rows.size());
    for (std::size_t i = 0; i < rep.rows.size(); ++i) {
        CHECK(back.rows[i].status == rep.rows[i].status);
        CHECK(back.rows[i].cells == rep.rows[i].cells);
    }
    // Serialization is deterministic.
    CHECK(to_json_string(back) == text);
    CHECK_THROWS_AS(suite_report_from_json("not json"), grid_error);
}

TEST_CASE("CSV header collects keys in first-appearance order") {
    const SuiteReport rep = sample_report();
    const std::string csv = to_csv_string(rep);
    std::istringstream in(csv);
    std::string header;
    std::getline(in, header);
    CHECK(header == "q,check,detail,status");
    std::string row1;
    std::getline(in, row1);
    CHECK(row1 == "1/2,turanian,,pass");
    std::string row2;
    std::getline(in, row2);
    // Embedded comma and quotes force quoting.
    CHECK(row2 == "1/2,,\"has,comma and \"\"quotes\"\",undetermined");
}

TEST_CASE("text rendering mentions the identifier and summary") {
    const SuiteReport rep = sample_report();
    const std::string text = to_text_string(rep);
    CHECK(text.find("T1") != std::string::npos);
    CHECK(text.find("pass") != std::string::npos);
}

TEST_CASE("embedded manifest matches the shipped file byte for byte") {
    std::ifstream in(std::string(QTURAN_SOURCE_DIR) + "/data/example_grids.manifest",
                     std::ios::binary);
    REQUIRE(in.good());
    std::ostringstream buf;
    buf << in.rdbuf();
    CHECK(buf.str() == default_manifest_text());
}

TEST_CASE("manifest parsing") {
    const Manifest& m = default_manifest();
    CHECK(m.version >= 1);
    CHECK(m.has_section("theorem-quads"));
    const ManifestSection& sec = m.section("theorem-quads");
    CHECK(sec.rationals("q").size() == 3);
    CHECK(sec.integer("order") == 32);
    CHECK(sec.strings("bases").size() == 3);
    CHECK(!m.has_section("nope"));
    CHECK_THROWS_AS(m.section("nope"), grid_error);
    CHECK_THROWS_AS(sec.raw("missing-key"), grid_error);

    const Manifest custom = parse_manifest("version = 7\n[alpha]\nkey = 1/3 2/3\n");
    CHECK(custom.version == 7);
    CHECK(custom.section("alpha").rationals("key")[1] == Rational(2, 3));
    CHECK_THROWS_AS(parse_manifest("key-without-section = 1\n"), grid_error);
    CHECK_THROWS_AS(load_manifest_file("/nonexistent/path.manifest"), grid_error);
}
