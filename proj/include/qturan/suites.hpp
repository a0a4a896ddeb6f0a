#pragma once

#include <qturan/manifest.hpp>
#include <qturan/rational.hpp>
#include <qturan/report.hpp>

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace qturan {

/// Fixed default seed so randomized grids reproduce byte-identically unless
/// the caller overrides it.
inline constexpr std::uint64_t kDefaultSeed = 1729;

/// Options shared by the verification suites.  Every field has a meaningful
/// default; overrides that violate a suite's domain throw domain_error.
struct SuiteOptions {
    std::string grid = "default";  ///< "small" | "default" | "full"
    std::string mode = "exact";    ///< "exact" | "float"
    long order = -1;               ///< coefficient order; -1 = suite default
    long m_max = -1;               ///< telescoping-sum depth; -1 = suite default
    std::uint64_t seed = kDefaultSeed;
    std::optional<Rational> q_filter;  ///< restrict grids to this q
    std::optional<Rational> mu;        ///< parameter overrides where meaningful
    std::optional<Rational> alpha;
    std::optional<Rational> beta;
    const Manifest* manifest = nullptr;  ///< nullptr = default_manifest()
};

/// Identifiers accepted by run_verify, in display order.
const std::vector<std::string>& verify_suite_ids();

/// Run one verification suite and return its report.  Throws grid_error for
/// an unknown id or malformed grid and domain_error/mode_error for parameter
/// overrides outside a suite's domain.
SuiteReport run_verify(const std::string& id, const SuiteOptions& opts);

/// Options for the open-question explorer over non-integer exponents.
struct ConjectureOptions {
    Rational alpha_min = Rational(0);
    Rational alpha_max = Rational(3);
    long samples = 200;
    long order = -1;  ///< -1 = manifest default
    std::uint64_t seed = kDefaultSeed;
    const Manifest* manifest = nullptr;
};

/// Sample non-integer first exponents and tabulate the certified signs of
/// the gamma-denominator Turánian coefficients.  The report is labeled
/// CONJECTURE; integer-exponent control rows are included and must pass.
/// On any certified negative coefficient the lexicographically smallest
/// counterexample (by coefficient index, then exponent, then parameters) is
/// re-checked at doubled precision and emitted as its own row.
SuiteReport run_conjecture(const ConjectureOptions& opts);

/// Options for bound-sandwich / example tables.
struct TableOptions {
    std::string target;  ///< "QBessel1" | "QBessel2"
    Rational nu = Rational(1);
    std::optional<Rational> q;      ///< default from the manifest
    long points = -1;               ///< -1 = manifest grid
    std::optional<Rational> y_max;  ///< with points: uniform grid i*y_max/(points+1)
    long order = -1;
    const Manifest* manifest = nullptr;
};

/// Evaluate a two-sided sandwich on a grid with bit-stable columns
/// (params..., x, lower, value, upper, margin_lower, margin_upper).  Points
/// beyond the certified radius are flagged, never dropped.
SuiteReport run_table(const TableOptions& opts);

} // namespace qturan
