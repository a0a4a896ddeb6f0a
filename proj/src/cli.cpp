#include "qturan/cli.hpp"

#include "qturan/bounded_float.hpp"
#include "qturan/errors.hpp"
#include "qturan/manifest.hpp"
#include "qturan/rational.hpp"
#include "qturan/report.hpp"
#include "qturan/suites.hpp"

#include "CLI11.hpp"

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

namespace qturan {
namespace {

std::optional<Rational> parse_opt(const std::string& text, const char* flag) {
    if (text.empty()) return std::nullopt;
    try {
        return Rational::parse(text);
    } catch (const std::exception&) {
        throw grid_error(std::string("could not parse ") + flag + " value '" + text +
                         "' as a rational number");
    }
}

/// Working precision for interval arithmetic: --prec wins, then the
/// QTURAN_PREC environment variable, then 128 bits.
void apply_precision(long prec_flag) {
    long bits = 128;
    if (const char* env = std::getenv("QTURAN_PREC")) {
        try {
            bits = std::stol(env);
        } catch (const std::exception&) {
            throw grid_error("QTURAN_PREC must be an integer bit count");
        }
    }
    if (prec_flag > 0) bits = prec_flag;
    if (bits < 16 || bits > 16384)
        throw grid_error("precision must lie between 16 and 16384 bits");
    BoundedFloat::set_default_precision(bits);
}

std::string render(const SuiteReport& rep, const std::string& format) {
    if (format == "json") return to_json_string(rep);
    if (format == "csv") return to_csv_string(rep);
    return to_text_string(rep);
}

void emit(const std::string& text, const std::string& out_path) {
    if (out_path.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream out(out_path, std::ios::binary);
    if (!out) throw grid_error("could not open output file '" + out_path + "'");
    out << text;
}

}  // namespace

int run_cli(int argc, char** argv) {
    CLI::App app{
        "qturan: certified sign-pattern, bound, and identity checks for q-series Turanians"};
    app.require_subcommand(1);

    const std::vector<std::string> formats = {"text", "json", "csv"};

    // ----- verify -----------------------------------------------------------
    CLI::App* vcmd = app.add_subcommand("verify", "run one named verification suite");
    std::string v_id;
    std::string v_grid = "default", v_mode = "exact", v_format = "text", v_out, v_manifest;
    std::string v_q, v_mu, v_alpha, v_beta;
    long v_order = -1, v_m_max = -1, v_prec = -1;
    std::uint64_t v_seed = kDefaultSeed;
    {
        std::string ids;
        for (const std::string& s : verify_suite_ids()) {
            if (!ids.empty()) ids += ", ";
            ids += s;
        }
        vcmd->add_option("id", v_id, "suite id: " + ids)->required();
    }
    vcmd->add_option("--grid", v_grid, "grid density (small, default, full)")
        ->check(CLI::IsMember({"small", "default", "full"}));
    vcmd->add_option("--mode", v_mode, "arithmetic route (exact, float)")
        ->check(CLI::IsMember({"exact", "float"}));
    vcmd->add_option("--order", v_order, "series truncation order");
    vcmd->add_option("--m-max", v_m_max, "highest coefficient index to certify");
    vcmd->add_option("--q", v_q, "restrict the grid to one rational q in (0, 1)");
    vcmd->add_option("--mu", v_mu, "override the exponent mu");
    vcmd->add_option("--alpha", v_alpha, "override the shift alpha");
    vcmd->add_option("--beta", v_beta, "override the shift beta");
    vcmd->add_option("--seed", v_seed, "seed for sampled grids");
    vcmd->add_option("--prec", v_prec, "interval precision in bits");
    vcmd->add_option("--format", v_format, "output format (text, json, csv)")
        ->check(CLI::IsMember(formats));
    vcmd->add_option("--out", v_out, "write the report to this file instead of stdout");
    vcmd->add_option("--manifest", v_manifest, "read grids from this manifest file");

    // ----- conjecture --------------------------------------------------------
    CLI::App* ccmd = app.add_subcommand(
        "conjecture", "numerically explore the open positivity statement for non-integer alpha");
    std::string c_amin, c_amax, c_format = "text", c_out, c_manifest;
    long c_samples = -1, c_order = -1, c_prec = -1;
    std::uint64_t c_seed = kDefaultSeed;
    ccmd->add_option("--alpha-min", c_amin, "lower end of the sampled alpha range");
    ccmd->add_option("--alpha-max", c_amax, "upper end of the sampled alpha range");
    ccmd->add_option("--samples", c_samples, "number of sampled alpha values");
    ccmd->add_option("--order", c_order, "series truncation order");
    ccmd->add_option("--seed", c_seed, "seed for the alpha sampler");
    ccmd->add_option("--prec", c_prec, "interval precision in bits");
    ccmd->add_option("--format", c_format, "output format (text, json, csv)")
        ->check(CLI::IsMember(formats));
    ccmd->add_option("--out", c_out, "write the report to this file instead of stdout");
    ccmd->add_option("--manifest", c_manifest, "read grids from this manifest file");

    // ----- table -------------------------------------------------------------
    CLI::App* tcmd =
        app.add_subcommand("table", "two-sided bound table for a cataloged function");
    std::string t_target, t_nu = "1", t_q, t_ymax, t_format = "text", t_out, t_manifest;
    long t_points = -1, t_order = -1, t_prec = -1;
    tcmd->add_option("target", t_target, "QBessel1 or QBessel2")->required();
    tcmd->add_option("--nu", t_nu, "order parameter nu > 0");
    tcmd->add_option("--q", t_q, "rational q in (0, 1)");
    tcmd->add_option("--points", t_points, "number of uniformly spaced x points");
    tcmd->add_option("--y-max", t_ymax, "upper end of the uniform x grid");
    tcmd->add_option("--order", t_order, "series truncation order");
    tcmd->add_option("--prec", t_prec, "interval precision in bits");
    tcmd->add_option("--format", t_format, "output format (text, json, csv)")
        ->check(CLI::IsMember(formats));
    tcmd->add_option("--out", t_out, "write the report to this file instead of stdout");
    tcmd->add_option("--manifest", t_manifest, "read grids from this manifest file");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        std::optional<Manifest> loaded;
        SuiteReport rep;
        if (vcmd->parsed()) {
            apply_precision(v_prec);
            SuiteOptions opts;
            opts.grid = v_grid;
            opts.mode = v_mode;
            opts.order = v_order;
            opts.m_max = v_m_max;
            opts.seed = v_seed;
            opts.q_filter = parse_opt(v_q, "--q");
            opts.mu = parse_opt(v_mu, "--mu");
            opts.alpha = parse_opt(v_alpha, "--alpha");
            opts.beta = parse_opt(v_beta, "--beta");
            if (!v_manifest.empty()) {
                loaded = load_manifest_file(v_manifest);
                opts.manifest = &*loaded;
            }
            rep = run_verify(v_id, opts);
            emit(render(rep, v_format), v_out);
        } else if (ccmd->parsed()) {
            apply_precision(c_prec);
            ConjectureOptions opts;
            if (auto v = parse_opt(c_amin, "--alpha-min")) opts.alpha_min = *v;
            if (auto v = parse_opt(c_amax, "--alpha-max")) opts.alpha_max = *v;
            if (c_samples != -1) opts.samples = c_samples;
            opts.order = c_order;
            opts.seed = c_seed;
            if (!c_manifest.empty()) {
                loaded = load_manifest_file(c_manifest);
                opts.manifest = &*loaded;
            }
            rep = run_conjecture(opts);
            emit(render(rep, c_format), c_out);
        } else {
            apply_precision(t_prec);
            TableOptions opts;
            opts.target = t_target;
            if (auto v = parse_opt(t_nu, "--nu")) opts.nu = *v;
            opts.q = parse_opt(t_q, "--q");
            opts.points = t_points;
            opts.y_max = parse_opt(t_ymax, "--y-max");
            opts.order = t_order;
            if (!t_manifest.empty()) {
                loaded = load_manifest_file(t_manifest);
                opts.manifest = &*loaded;
            }
            rep = run_table(opts);
            emit(render(rep, t_format), t_out);
        }
        return rep.exit_code();
    } catch (const qturan::error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
}

}  // namespace qturan
