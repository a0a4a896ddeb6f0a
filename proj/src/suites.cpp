#include "qturan/suites.hpp"

#include "qturan/errors.hpp"
#include "qturan/examples.hpp"
#include "qturan/identities.hpp"
#include "qturan/manifest.hpp"
#include "qturan/qcore.hpp"
#include "qturan/report.hpp"
#include "qturan/seqprops.hpp"
#include "qturan/series.hpp"
#include "qturan/turanian.hpp"
#include "qturan/turanian_bounds.hpp"

#include <algorithm>
#include <cstdint>
#include <functional>
#include <optional>
#include <sstream>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

namespace qturan {
namespace {

// ---------------------------------------------------------------------------
// deterministic sampling
// ---------------------------------------------------------------------------

/// SplitMix64: tiny deterministic generator with portable output, so sampled
/// grids are byte-identical across platforms and standard-library versions.
struct SplitMix64 {
    std::uint64_t state;

    explicit SplitMix64(std::uint64_t seed) : state(seed) {}

    std::uint64_t next() {
        state += 0x9E3779B97F4A7C15ULL;
        std::uint64_t z = state;
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
        return z ^ (z >> 31);
    }

    /// Uniform value in [0, n).
    std::uint64_t below(std::uint64_t n) { return next() % n; }
};

/// Random rational strictly inside (0, 1) with denominator at most max_den.
Rational random_unit_rational(SplitMix64& rng, long max_den) {
    const long den = 2 + static_cast<long>(rng.below(static_cast<std::uint64_t>(max_den - 1)));
    const long num = 1 + static_cast<long>(rng.below(static_cast<std::uint64_t>(den - 1)));
    return Rational(num, den);
}

// ---------------------------------------------------------------------------
// small shared helpers
// ---------------------------------------------------------------------------

const Manifest& manifest_or_default(const Manifest* m) {
    return m != nullptr ? *m : default_manifest();
}

std::string rstr(const Rational& r) { return r.to_string(); }

std::vector<BoundedFloat> to_float_vec(const std::vector<Rational>& base, long prec = 0) {
    std::vector<BoundedFloat> out;
    out.reserve(base.size());
    for (const Rational& r : base) out.push_back(BoundedFloat::from_rational(r, prec));
    return out;
}

/// Named exact base sequences used by the verification grids.
std::vector<Rational> exact_base(const std::string& name, const Rational& q, long len) {
    std::vector<Rational> base;
    base.reserve(static_cast<std::size_t>(len));
    if (name == "ones") {
        base.assign(static_cast<std::size_t>(len), Rational(1));
        return base;
    }
    if (name == "inv-qpoch") {
        const std::vector<Rational> poch = q_pochhammer_table(q, q, len - 1);
        for (const Rational& p : poch) base.push_back(Rational(1) / p);
        return base;
    }
    if (name == "poch-ratio") {
        const Rational one(1);
        Rational qp = q;  // q^(n+1)
        for (long n = 0; n < len; ++n) {
            base.push_back((one - qp) / (one - q));
            qp = qp * q;
        }
        return base;
    }
    throw grid_error("unknown base name '" + name + "' (expected ones, inv-qpoch, or poch-ratio)");
}

Rational token_value(const std::string& token, const Rational& q) {
    if (token == "q") return q;
    if (token == "q^2") return q * q;
    return Rational::parse(token);
}

void push_unique(std::vector<Rational>& vals, const Rational& r) {
    for (const Rational& v : vals)
        if (v == r) return;
    vals.push_back(r);
}

std::vector<Rational> grid_q(const ManifestSection& sec, const SuiteOptions& opts) {
    if (opts.q_filter) {
        const Rational& f = *opts.q_filter;
        if (!(Rational(0) < f && f < Rational(1)))
            throw domain_error("q must lie strictly inside (0, 1)");
        return {f};
    }
    if (opts.grid == "small") return {Rational(1, 2)};
    return sec.rationals("q");
}

/// Usage guard: reject parameter overrides a suite has no slot for.
void reject_overrides(const char* id, const SuiteOptions& o, bool allow_q, bool allow_mu,
                      bool allow_alpha, bool allow_beta) {
    auto bad = [&](const char* flag) {
        throw grid_error(std::string("suite ") + id + " does not take " + flag);
    };
    if (!allow_q && o.q_filter) bad("--q");
    if (!allow_mu && o.mu) bad("--mu");
    if (!allow_alpha && o.alpha) bad("--alpha");
    if (!allow_beta && o.beta) bad("--beta");
}

void begin_report(SuiteReport& rep, const char* id, const SuiteOptions& opts, long order) {
    rep.theorem = id;
    rep.grid = opts.grid;
    rep.mode = opts.mode;
    rep.order = order;
    rep.seed = opts.seed;
}

/// Row for a classified double-positivity check of a base sequence.
ReportRow dp_row(const std::vector<Rational>& base, bool expect_dp) {
    const SequenceProfile prof = is_doubly_positive(base);
    ReportRow row;
    row.add("check", "base-double-positivity");
    row.add("expected", expect_dp ? "doubly-positive" : "not-doubly-positive");
    row.add("classified", prof.doubly_positive ? "doubly-positive" : "not-doubly-positive");
    if (!prof.certified)
        row.status = "undetermined";
    else
        row.status = prof.doubly_positive == expect_dp ? "pass" : "fail";
    return row;
}

/// Expected verdict pattern of a family's normalized difference coefficients.
struct DeltaExpectation {
    bool zero_at_origin = false;  ///< coefficient 0 must vanish exactly
    Sign sign = Sign::Positive;   ///< required sign from m = first_signed on
    long first_signed = 0;
    std::string text;
};

DeltaExpectation family_expectation(Family family) {
    switch (family) {
        case Family::F:
            return {true, Sign::Positive, 1, "delta(0) = 0, delta(m) > 0 for m >= 1"};
        case Family::D:
            return {false, Sign::Negative, 0, "delta(m) < 0 for m >= 0"};
        case Family::G:
            return {false, Sign::Positive, 0, "delta(m) > 0 for m >= 0"};
        default:
            return {true, Sign::Negative, 1, "delta(0) = 0, delta(m) < 0 for m >= 1"};
    }
}

/// Scan a verdict vector against the family expectation over 0..top.
/// Returns pass/fail/undetermined plus a description of the first problem.
template <typename ReportT>
std::pair<std::string, std::string> scan_verdicts(const ReportT& tr, const DeltaExpectation& want,
                                                  long top) {
    bool ok = true, undecided = false;
    std::string first_bad;
    auto note = [&](long m, const SignVerdict& v) {
        if (first_bad.empty())
            first_bad = "m=" + std::to_string(m) + " is " + to_cstring(v.sign);
    };
    if (want.zero_at_origin) {
        const SignVerdict& v0 = tr.verdicts[0];
        if (v0.is_undetermined())
            undecided = true;
        else if (!v0.is_zero()) {
            ok = false;
            note(0, v0);
        }
    }
    for (long m = want.first_signed; m <= top; ++m) {
        const SignVerdict& v = tr.verdicts[static_cast<std::size_t>(m)];
        if (v.is_undetermined()) {
            undecided = true;
            continue;
        }
        if (v.sign != want.sign) {
            ok = false;
            note(m, v);
        }
    }
    if (!ok) return {"fail", first_bad};
    if (undecided) return {"undetermined", "some coefficients could not be signed"};
    return {"pass", "verified"};
}

// ---------------------------------------------------------------------------
// T1 / T2 / T4: value-quadruple suites over the shared grid
// ---------------------------------------------------------------------------

SuiteReport run_quad_suite(const char* id, Family family, const SuiteOptions& opts) {
    const Manifest& man = manifest_or_default(opts.manifest);
    const ManifestSection& sec = man.section("theorem-quads");
    SuiteReport rep;
    const long M = opts.order > 0 ? opts.order : sec.integer("order");
    begin_report(rep, id, opts, M);
    const long top = (opts.m_max > 0 && opts.m_max < M) ? opts.m_max : M;
    const DeltaExpectation want = family_expectation(family);
    const bool force_float = opts.mode == "float";

    if (opts.mu) {
        if (family == Family::F) {
            if (opts.mu->sign_int() < 0)
                throw domain_error(std::string("suite ") + id +
                                   " needs mu >= 0 so the substituted value stays in (0, 1]");
        } else if (!(Rational(0) < *opts.mu)) {
            throw domain_error(std::string("suite ") + id +
                               " needs mu > 0 so the substituted value lies strictly inside (0, 1)");
        }
    }
    if (opts.alpha && !(Rational(0) < *opts.alpha))
        throw domain_error("shift alpha must be positive");
    if (opts.beta && !(Rational(0) < *opts.beta))
        throw domain_error("shift beta must be positive");

    std::vector<std::string> token_names = sec.strings("tokens");
    std::vector<std::string> base_names = sec.strings("bases");
    if (opts.grid == "small") {
        token_names = {"q", "1/2"};
        base_names = {"ones"};
    }

    for (const Rational& q : grid_q(sec, opts)) {
        std::vector<Rational> vals;
        for (const std::string& t : token_names) push_unique(vals, token_value(t, q));

        auto exact_power = [&](const Rational& e, const char* what) {
            std::optional<Rational> v = exact_qpow(q, e);
            if (!v)
                throw mode_error(std::string("q^") + what + " is irrational at q = " + rstr(q) +
                                 "; choose an exponent with an exact q-power");
            return *v;
        };
        std::vector<Rational> a_list =
            opts.mu ? std::vector<Rational>{exact_power(*opts.mu, "mu")} : vals;
        std::vector<Rational> s_list =
            opts.alpha ? std::vector<Rational>{exact_power(*opts.alpha, "alpha")} : vals;
        std::vector<Rational> t_list =
            opts.beta ? std::vector<Rational>{exact_power(*opts.beta, "beta")} : vals;
        const bool unordered = !opts.alpha && !opts.beta;

        for (const std::string& base_name : base_names) {
            const std::vector<Rational> base = exact_base(base_name, q, M + 2);
            {
                ReportRow dp = dp_row(base, true);
                ReportRow row;
                row.add("q", rstr(q));
                row.add("base", base_name);
                for (const auto& cell : dp.cells) row.add(cell.first, cell.second);
                row.status = dp.status;
                rep.push(std::move(row));
            }

            for (const Rational& a : a_list) {
                for (std::size_t i = 0; i < s_list.size(); ++i) {
                    const std::size_t j0 = unordered ? i : 0;
                    for (std::size_t j = j0; j < t_list.size(); ++j) {
                        const Rational& s = s_list[i];
                        const Rational& t = t_list[j];

                        ReportRow row;
                        row.add("q", rstr(q));
                        row.add("base", base_name);
                        row.add("a", rstr(a));
                        row.add("s", rstr(s));
                        row.add("t", rstr(t));
                        row.add("m-range", std::to_string(want.first_signed) + ".." +
                                               std::to_string(top));
                        row.add("expected", want.text);

                        std::string route = "exact";
                        std::string norm;
                        std::pair<std::string, std::string> verdict;

                        auto run_float = [&]() {
                            const BoundedFloat fq = BoundedFloat::from_rational(q);
                            FamilySpec<BoundedFloat> spec{family, to_float_vec(base), fq,
                                                          BoundedFloat::from_rational(a)};
                            auto tr = turanian_coeffs(
                                spec,
                                make_value_quad(fq, BoundedFloat::from_rational(a),
                                                BoundedFloat::from_rational(s),
                                                BoundedFloat::from_rational(t)),
                                M);
                            norm = to_cstring(tr.normalization);
                            verdict = scan_verdicts(tr, want, top);
                        };

                        if (force_float) {
                            route = "float-interval";
                            run_float();
                        } else {
                            FamilySpec<Rational> spec{family, base, q, a};
                            try {
                                auto tr =
                                    turanian_coeffs(spec, make_value_quad(q, a, s, t), M);
                                norm = to_cstring(tr.normalization);
                                verdict = scan_verdicts(tr, want, top);
                            } catch (const mode_error&) {
                                // No integer shift between the multipliers: fall back to
                                // certified interval arithmetic for this quadruple.
                                route = "float-interval";
                                run_float();
                            }
                        }

                        row.add("route", route);
                        row.add("normalization", norm);
                        row.add("outcome", verdict.second);
                        row.status = verdict.first;
                        rep.push(std::move(row));
                    }
                }
            }
        }
    }
    return rep;
}

// ---------------------------------------------------------------------------
// T3: exponent suite for the gamma-denominator family, with coefficient
// diagnostics (alternating-block sign changes and the closed-form block sum)
// ---------------------------------------------------------------------------

SuiteReport run_t3(const SuiteOptions& opts) {
    const Manifest& man = manifest_or_default(opts.manifest);
    const ManifestSection& sec = man.section("family-g");
    SuiteReport rep;
    const long M = opts.order > 0 ? opts.order : sec.integer("order");
    begin_report(rep, "T3", opts, M);
    long diag_top = sec.integer("diag-order");
    if (opts.m_max > 0) diag_top = opts.m_max;
    if (diag_top > M) diag_top = M;

    if (opts.alpha && (!opts.alpha->is_integer() || opts.alpha->sign_int() <= 0))
        throw domain_error(
            "suite T3 requires a positive integer alpha; non-integer alpha is handled by the "
            "conjecture command");
    if (opts.beta && !(Rational(0) < *opts.beta))
        throw domain_error("suite T3 requires beta > 0");
    if (opts.mu && *opts.mu < Rational(-1))
        throw domain_error("suite T3 requires mu >= -1");

    std::vector<Rational> qs = grid_q(sec, opts);
    std::vector<Rational> alphas = opts.alpha ? std::vector<Rational>{*opts.alpha}
                                              : sec.rationals("alpha");
    std::vector<Rational> betas = opts.beta ? std::vector<Rational>{*opts.beta}
                                            : sec.rationals("beta");
    std::vector<Rational> mus = opts.mu ? std::vector<Rational>{*opts.mu} : sec.rationals("mu");
    if (opts.grid == "small" && !opts.q_filter) qs = {Rational(1, 2)};
    if (opts.grid == "small" && !opts.alpha) alphas = {Rational(1), Rational(2)};
    if (opts.grid == "small" && !opts.beta) betas = {Rational(1), Rational(2)};
    if (opts.grid == "small" && !opts.mu) mus = {Rational(0), Rational(1)};

    const DeltaExpectation want = family_expectation(Family::G);
    long skipped = 0;

    for (const Rational& q : qs) {
        for (const Rational& mu : mus) {
            for (const Rational& beta : betas) {
                if (!(Rational(0) < mu + beta)) continue;
                const std::optional<Rational> value = exact_qpow(q, mu);
                const std::optional<Rational> qbeta = exact_qpow(q, beta);
                if (!value || !qbeta) {
                    ++skipped;
                    continue;
                }
                for (const Rational& alpha : alphas) {
                    if (beta + Rational(1) < alpha) continue;  // proved range: alpha <= beta + 1

                    const std::vector<Rational> base = exact_base("ones", q, M + 2);
                    FamilySpec<Rational> spec{Family::G, base, q, *value};
                    auto tr = turanian_coeffs(spec, alpha, beta, M);
                    const auto verdict = scan_verdicts(tr, want, M);

                    ReportRow row;
                    row.add("q", rstr(q));
                    row.add("mu", rstr(mu));
                    row.add("alpha", rstr(alpha));
                    row.add("beta", rstr(beta));
                    row.add("m-range", "0.." + std::to_string(M));
                    row.add("expected", want.text);
                    row.add("normalization", to_cstring(tr.normalization));
                    row.add("outcome", verdict.second);
                    row.status = verdict.first;
                    rep.push(std::move(row));

                    // Coefficient diagnostics: each normalized coefficient splits
                    // into blocks A_k with at most one sign change in k, and for
                    // alpha = 1 the plain block sum has a closed form.
                    bool diag_ok = true, diag_undecided = false;
                    std::string diag_bad;
                    const bool sum_checked = alpha == Rational(1);
                    for (long m = 0; m <= diag_top; ++m) {
                        const auto diag = ak_diagnostics(spec, alpha, beta, m);
                        if (!diag.sign_changes_certified) {
                            diag_undecided = true;
                            continue;
                        }
                        if (diag.sign_changes > 1) {
                            diag_ok = false;
                            if (diag_bad.empty())
                                diag_bad = "m=" + std::to_string(m) + " has " +
                                           std::to_string(diag.sign_changes) + " sign changes";
                            continue;
                        }
                        if (sum_checked) {
                            const Rational closed =
                                s_m_closed(*value, *value * *qbeta, q, m);
                            if (!(diag.unweighted_sum == closed) || closed.sign_int() <= 0) {
                                diag_ok = false;
                                if (diag_bad.empty())
                                    diag_bad = "m=" + std::to_string(m) +
                                               " block sum differs from the closed form";
                            }
                        }
                    }
                    ReportRow drow;
                    drow.add("q", rstr(q));
                    drow.add("mu", rstr(mu));
                    drow.add("alpha", rstr(alpha));
                    drow.add("beta", rstr(beta));
                    drow.add("m-range", "0.." + std::to_string(diag_top));
                    drow.add("expected",
                             sum_checked
                                 ? "<= 1 sign change per block list; block sum matches the "
                                   "closed form and is positive"
                                 : "<= 1 sign change per block list");
                    drow.add("outcome", diag_ok ? (diag_undecided ? "incomplete" : "verified")
                                                : diag_bad);
                    drow.status = !diag_ok ? "fail" : (diag_undecided ? "undetermined" : "pass");
                    rep.push(std::move(drow));
                }
            }
        }
    }
    if (skipped > 0)
        rep.notes.push_back(std::to_string(skipped) +
                            " grid combinations skipped: q^mu or q^beta is irrational there");
    if (rep.rows.empty()) throw grid_error("suite T3: the requested grid admits no combination");
    return rep;
}

// ---------------------------------------------------------------------------
// identity suites
// ---------------------------------------------------------------------------

SuiteReport run_vandermonde(const SuiteOptions& opts) {
    const Manifest& man = manifest_or_default(opts.manifest);
    const ManifestSection& sec = man.section("identities");
    SuiteReport rep;
    const long M = opts.order > 0 ? opts.order : sec.integer("vandermonde-order");
    begin_report(rep, "L6", opts, M);
    rep.mode = "exact";
    const long n = opts.grid == "small" ? 10 : sec.integer("vandermonde-samples");
    SplitMix64 rng(opts.seed);
    for (long i = 0; i < n; ++i) {
        const Rational a = random_unit_rational(rng, 32);
        const Rational b = random_unit_rational(rng, 32);
        const Rational q = random_unit_rational(rng, 32);
        const IdentityReport idr = verify_symmetric_vandermonde(a, b, q, M);
        ReportRow row;
        row.add("sample", std::to_string(i));
        row.add("a", rstr(a));
        row.add("b", rstr(b));
        row.add("q", rstr(q));
        row.add("order", std::to_string(idr.order));
        row.add("residual", idr.max_residual);
        row.status = idr.pass && idr.certified ? "pass" : "fail";
        rep.push(std::move(row));
    }
    return rep;
}

SuiteReport run_qbinomial(const SuiteOptions& opts) {
    const Manifest& man = manifest_or_default(opts.manifest);
    const ManifestSection& sec = man.section("identities");
    SuiteReport rep;
    const long M = opts.order > 0 ? opts.order : sec.integer("qbinomial-order");
    begin_report(rep, "QBINOM", opts, M);
    rep.mode = "exact";
    const long n = opts.grid == "small" ? 10 : sec.integer("qbinomial-samples");
    SplitMix64 rng(opts.seed);
    for (long i = 0; i < n; ++i) {
        const Rational a = random_unit_rational(rng, 32);
        const Rational q = random_unit_rational(rng, 32);
        const IdentityReport idr = verify_q_binomial(a, q, M);
        ReportRow row;
        row.add("sample", std::to_string(i));
        row.add("a", rstr(a));
        row.add("q", rstr(q));
        row.add("order", std::to_string(idr.order));
        row.add("residual", idr.max_residual);
        row.status = idr.pass && idr.certified ? "pass" : "fail";
        rep.push(std::move(row));
    }
    return rep;
}

SuiteReport run_heine(const SuiteOptions& opts) {
    const Manifest& man = manifest_or_default(opts.manifest);
    const ManifestSection& sec = man.section("identities");
    SuiteReport rep;
    const long M = opts.order > 0 ? opts.order : sec.integer("heine-order");
    begin_report(rep, "HEINE", opts, M);
    rep.mode = "float";
    rep.notes.push_back(
        "summation value is a convergent infinite product, so this suite always uses certified "
        "interval arithmetic");
    const long n = opts.grid == "small" ? 5 : sec.integer("heine-samples");
    SplitMix64 rng(opts.seed);
    for (long i = 0; i < n; ++i) {
        const Rational a = random_unit_rational(rng, 32);
        const Rational b = random_unit_rational(rng, 32);
        const Rational r = random_unit_rational(rng, 32);  // series argument c/(a b)
        const Rational q = random_unit_rational(rng, 32);
        const Rational c = a * b * r;
        const IdentityReport idr =
            verify_heine_gauss(BoundedFloat::from_rational(a), BoundedFloat::from_rational(b),
                               BoundedFloat::from_rational(c), BoundedFloat::from_rational(q), M);
        ReportRow row;
        row.add("sample", std::to_string(i));
        row.add("a", rstr(a));
        row.add("b", rstr(b));
        row.add("c", rstr(c));
        row.add("q", rstr(q));
        row.add("order", std::to_string(idr.order));
        row.add("residual", idr.max_residual);
        if (!idr.note.empty()) row.add("note", idr.note);
        row.status = idr.pass ? (idr.certified ? "pass" : "undetermined") : "fail";
        rep.push(std::move(row));
    }
    return rep;
}

SuiteReport run_l7(const SuiteOptions& opts) {
    const Manifest& man = manifest_or_default(opts.manifest);
    const ManifestSection& sec = man.section("family-g");
    SuiteReport rep;
    const long M = opts.m_max > 0 ? opts.m_max : 20;
    begin_report(rep, "L7", opts, M);
    rep.mode = "exact";

    std::vector<Rational> qs = grid_q(sec, opts);
    std::vector<Rational> mus =
        opts.mu ? std::vector<Rational>{*opts.mu}
                : std::vector<Rational>{Rational(0), Rational(1, 2), Rational(1)};
    std::vector<Rational> betas = opts.beta ? std::vector<Rational>{*opts.beta}
                                            : std::vector<Rational>{Rational(1, 2), Rational(1),
                                                                    Rational(2)};
    if (opts.grid == "small" && !opts.q_filter) qs = {Rational(1, 2)};
    if (opts.grid == "small" && !opts.mu) mus = {Rational(0), Rational(1)};
    if (opts.grid == "small" && !opts.beta) betas = {Rational(1), Rational(2)};
    if (opts.beta && !(Rational(0) < *opts.beta)) throw domain_error("suite L7 requires beta > 0");

    long skipped = 0;
    for (const Rational& q : qs) {
        for (const Rational& mu : mus) {
            for (const Rational& beta : betas) {
                const std::optional<Rational> a = exact_qpow(q, mu);
                const std::optional<Rational> qbeta = exact_qpow(q, beta);
                if (!a || !qbeta) {
                    ++skipped;
                    continue;
                }
                const Rational c = *a * *qbeta;
                Rational max_res(0);
                bool ok = true;
                for (long m = 0; m <= M; ++m) {
                    const Rational res = s_m_direct(*a, c, q, m) - s_m_closed(*a, c, q, m);
                    if (res.sign_int() != 0) {
                        ok = false;
                        if (max_res < res.abs()) max_res = res.abs();
                    }
                }
                ReportRow row;
                row.add("q", rstr(q));
                row.add("mu", rstr(mu));
                row.add("beta", rstr(beta));
                row.add("m-range", "0.." + std::to_string(M));
                row.add("residual", rstr(max_res));
                row.status = ok ? "pass" : "fail";
                rep.push(std::move(row));
            }
        }
    }
    if (skipped > 0)
        rep.notes.push_back(std::to_string(skipped) +
                            " grid combinations skipped: q^mu or q^beta is irrational there");
    if (rep.rows.empty()) throw grid_error("suite L7: the requested grid admits no combination");
    return rep;
}

// ---------------------------------------------------------------------------
// two-sided bound suites
// ---------------------------------------------------------------------------

void append_bounds_rows(SuiteReport& rep, const BoundsReport& br,
                        const std::vector<std::pair<std::string, std::string>>& front = {}) {
    for (const std::string& n : br.notes) rep.notes.push_back(br.mode + ": " + n);
    for (const BoundsRow& brow : br.rows) {
        for (const BoundEntry& e : brow.entries) {
            ReportRow row;
            for (const auto& cell : front) row.add(cell.first, cell.second);
            row.add("arithmetic", br.mode);
            row.add("x", rstr(brow.x));
            row.add("in-radius", brow.in_radius ? "yes" : "no");
            row.add("bound", e.name);
            row.add("expected", e.expectation == BoundExpectation::StrictAll
                                    ? "strict"
                                    : "strict for x > 0, equality at x = 0");
            row.add("margin", e.margin);
            if (!e.lhs.empty()) row.add("lhs", e.lhs);
            if (!e.rhs.empty()) row.add("rhs", e.rhs);
            row.add("certified", e.certified ? "yes" : "no");
            if (!e.note.empty()) row.add("note", e.note);
            row.status = to_cstring(e.status);
            rep.push(std::move(row));
        }
    }
}

/// Lay out the x grid as fixed fractions of the convergence-radius estimate
/// of the series at the shifted value q^(mu+alpha).
std::vector<Rational> bounds_x_grid(Family family, const std::vector<Rational>& base,
                                    const Rational& q, const Rational& mu, const Rational& alpha,
                                    const std::vector<Rational>& fractions, long M,
                                    Rational* scale_out) {
    const std::optional<Rational> vb = exact_qpow(q, mu + alpha);
    if (!vb)
        throw mode_error("bound grids need an exact q^(mu+alpha) to lay out the x points");
    FamilySpec<Rational> spec{family, base, q, *vb};
    const TruncatedSeries<Rational> s = family_series(spec, M);
    const RadiusEstimate<Rational> est = radius_estimate(s.c, M);
    const Rational scale = est.value.sign_int() > 0 ? est.value : Rational(1);
    if (scale_out != nullptr) *scale_out = scale;
    std::vector<Rational> grid;
    grid.reserve(fractions.size());
    for (const Rational& f : fractions) grid.push_back(f * scale);
    return grid;
}

SuiteReport run_bounds_suite(const char* id, Family family, const SuiteOptions& opts) {
    const Manifest& man = manifest_or_default(opts.manifest);
    const ManifestSection& sec = man.section("bounds");
    SuiteReport rep;
    const long M = opts.order > 0 ? opts.order : sec.integer("order");
    begin_report(rep, id, opts, M);
    rep.mode = "exact+float";
    rep.notes.push_back(
        "both certificate styles always run: exact arithmetic for the ratio sides, interval "
        "arithmetic for the absolute sides");

    const Rational q = opts.q_filter ? *opts.q_filter : sec.rational("q");
    const Rational mu = opts.mu ? *opts.mu : sec.rational("mu");
    const Rational alpha = opts.alpha ? *opts.alpha : sec.rational("alpha");
    const Rational beta = opts.beta ? *opts.beta : sec.rational("beta");
    std::string base_key = "base-f";
    if (family == Family::D) base_key = "base-d";
    if (family == Family::G) base_key = "base-g";
    if (family == Family::H) base_key = "base-h";
    const std::string base_name = sec.strings(base_key).at(0);
    const std::vector<Rational> base = exact_base(base_name, q, M + 2);

    Rational scale(1);
    const std::vector<Rational> x_grid =
        bounds_x_grid(family, base, q, mu, alpha, sec.rationals("x-fractions"), M, &scale);
    rep.notes.push_back("x grid scale (radius estimate at the shifted value): " + rstr(scale));

    const std::vector<std::pair<std::string, std::string>> front = {
        {"q", rstr(q)}, {"mu", rstr(mu)}, {"alpha", rstr(alpha)},
        {"beta", rstr(beta)}, {"base", base_name}};

    const BoundsReport ex = bounds_check<Rational>(family, base, q, mu, alpha, beta, x_grid, M);
    append_bounds_rows(rep, ex, front);
    const BoundsReport fl =
        bounds_check<BoundedFloat>(family, to_float_vec(base), BoundedFloat::from_rational(q), mu,
                                   alpha, beta, x_grid, M);
    append_bounds_rows(rep, fl, front);
    return rep;
}

// ---------------------------------------------------------------------------
// duality suite: normalized series of paired families agree coefficientwise
// ---------------------------------------------------------------------------

SuiteReport run_dual(const SuiteOptions& opts) {
    const Manifest& man = manifest_or_default(opts.manifest);
    const ManifestSection& sec = man.section("duality");
    SuiteReport rep;
    const long M = opts.order > 0 ? opts.order : sec.integer("order");
    begin_report(rep, "DUAL", opts, M);
    rep.mode = "exact";
    const long n = opts.grid == "small" ? 5 : sec.integer("tuples");
    SplitMix64 rng(opts.seed);

    const std::pair<Family, Family> maps[4] = {{Family::D, Family::F},
                                               {Family::F, Family::D},
                                               {Family::H, Family::G},
                                               {Family::G, Family::H}};
    auto map_label = [](Family a, Family b) {
        return std::string(to_cstring(a)) + "->" + to_cstring(b);
    };

    for (long i = 0; i < n; ++i) {
        const Rational q = random_unit_rational(rng, 16);
        const Rational a = random_unit_rational(rng, 16);
        std::vector<Rational> base;
        base.reserve(static_cast<std::size_t>(M) + 1);
        for (long k = 0; k <= M; ++k) {
            const long den = 1 + static_cast<long>(rng.below(9));
            const long num = 1 + static_cast<long>(rng.below(9));
            base.push_back(Rational(num, den));
        }
        for (const auto& mp : maps) {
            FamilySpec<Rational> from{mp.first, base, q, a};
            FamilySpec<Rational> to{mp.second, dual_base(mp.first, base, q), q, a};
            const TruncatedSeries<Rational> s1 = family_series(from, M);
            const TruncatedSeries<Rational> s2 = family_series(to, M);
            long first_diff = -1;
            for (long m = 0; m <= M; ++m) {
                if (!(s1[static_cast<std::size_t>(m)] == s2[static_cast<std::size_t>(m)])) {
                    first_diff = m;
                    break;
                }
            }
            ReportRow row;
            row.add("tuple", std::to_string(i));
            row.add("q", rstr(q));
            row.add("value", rstr(a));
            row.add("map", map_label(mp.first, mp.second));
            row.add("order", std::to_string(M));
            row.add("outcome", first_diff < 0 ? "coefficients identical"
                                              : "first difference at m=" +
                                                    std::to_string(first_diff));
            row.status = first_diff < 0 ? "pass" : "fail";
            rep.push(std::move(row));
        }
    }
    return rep;
}

// ---------------------------------------------------------------------------
// sequence-property suite: double positivity of the cataloged bases,
// geometric equality case, three-point multiplicative convexity, and the
// complete-monotonicity finite-difference proxy
// ---------------------------------------------------------------------------

/// Certified evaluator for the normalized difference Delta(x) (sign-adjusted
/// so the expected direction is always "convex"), built once per family.
struct DeltaEvaluator {
    int sign = 1;  ///< +1 when Delta itself is the target, -1 for -Delta
    std::vector<TruncatedSeries<BoundedFloat>> series;  ///< A, B, C, D
    std::vector<BoundedFloat> tail_unit;                ///< rho/x per series

    BoundedFloat eval(const BoundedFloat& x) const {
        std::vector<BoundedFloat> v;
        v.reserve(4);
        for (std::size_t k = 0; k < 4; ++k) {
            const detail::SeriesEnclosure e =
                detail::eval_with_tail(series[k], x, tail_unit[k] * x);
            if (!e.certified)
                throw domain_error(
                    "series tail not certified at the requested point; shrink the grid");
            v.push_back(e.value);
        }
        const BoundedFloat delta = v[1] * v[2] - v[0] * v[3];
        return sign < 0 ? -delta : delta;
    }
};

DeltaEvaluator make_delta_evaluator(Family family, const std::vector<Rational>& base,
                                    const Rational& q, const Rational& mu, const Rational& alpha,
                                    const Rational& beta, long M) {
    DeltaEvaluator ev;
    ev.sign = (family == Family::D || family == Family::H) ? -1 : 1;
    const std::vector<BoundedFloat> fbase = to_float_vec(base);
    const BoundedFloat fq = BoundedFloat::from_rational(q);
    const std::optional<BoundedFloat> bsup = detail::derive_base_ratio_sup(fbase, M);
    if (!bsup)
        throw domain_error("base ratio certificate unavailable for the requested base sequence");

    const Rational exps[4] = {mu, mu + alpha, mu + beta, mu + alpha + beta};
    for (const Rational& e : exps) {
        if (family == Family::D || family == Family::G) {
            ev.series.push_back(family_series_absolute(family, fbase, fq, e, M + 1));
        } else {
            FamilySpec<BoundedFloat> spec{family, fbase, fq, qpow(fq, e)};
            ev.series.push_back(family_series(spec, M + 1));
        }
        const std::optional<BoundedFloat> wsup =
            detail::weight_ratio_sup(family, qpow(fq, e), e, fq, M);
        if (!wsup) throw domain_error("weight ratio certificate unavailable");
        ev.tail_unit.push_back(*bsup * *wsup);
    }
    return ev;
}

SuiteReport run_seq(const SuiteOptions& opts) {
    const Manifest& man = manifest_or_default(opts.manifest);
    const ManifestSection& sec = man.section("seqprops");
    SuiteReport rep;
    const long M = opts.order > 0 ? opts.order : sec.integer("order");
    begin_report(rep, "SEQ", opts, M);

    const Rational q = sec.rational("q");
    const Rational mu = sec.rational("mu");
    const Rational alpha = sec.rational("alpha");
    const Rational beta = sec.rational("beta");

    // --- geometric sequences sit exactly on the double-positivity boundary
    {
        std::vector<Rational> geo;
        Rational term(3);
        const Rational ratio(2, 3);
        for (long nIdx = 0; nIdx <= 20; ++nIdx) {
            geo.push_back(term);
            term = term * ratio;
        }
        const SequenceProfile prof = is_doubly_positive(geo);
        bool gaps_zero = true;
        for (std::size_t nIdx = 1; nIdx + 1 < geo.size(); ++nIdx) {
            const Rational gap = geo[nIdx] * geo[nIdx] - geo[nIdx - 1] * geo[nIdx + 1];
            if (gap.sign_int() != 0) gaps_zero = false;
        }
        ReportRow row;
        row.add("check", "geometric-boundary");
        row.add("sequence", "3*(2/3)^n, n = 0..20");
        row.add("expected", "doubly positive with every log-concavity gap exactly zero");
        row.add("classified", prof.doubly_positive ? "doubly-positive" : "not-doubly-positive");
        row.add("gaps", gaps_zero ? "all zero" : "nonzero gap found");
        row.status = prof.certified && prof.doubly_positive && gaps_zero ? "pass" : "fail";
        rep.push(std::move(row));
    }

    // --- classification of the cataloged base sequences
    struct CatalogEntry {
        ExampleName name;
        bool expect_dp;
        std::string params;
    };
    const Rational third(1, 3), half(1, 2);
    std::vector<CatalogEntry> catalog = {
        {ExampleName::QBessel1, true, "nu=1"},
        {ExampleName::QBessel2, true, "nu=1"},
        {ExampleName::QKummer1, true, "upper shift, a=q, b=1/3"},
        {ExampleName::QKummer2, true, "upper shift, a=q, b=1/3"},
        {ExampleName::Heine2phi1Upper, true, "a=q, b=q^2, c=q"},
        {ExampleName::Heine2phi1Lower, false, "a=1/3, b=1/2, c=q"},
        {ExampleName::RPlus1PhiS, true, "a=q, alphas=(2), betas=(1,1)"},
        {ExampleName::RPhiSUnitDenominator, true, "mu=1, alphas=(2,2), betas=(1)"},
    };
    for (const CatalogEntry& entry : catalog) {
        ExampleParams<Rational> p;
        p.nu = Rational(1);
        p.mu = Rational(1);
        switch (entry.name) {
            case ExampleName::QKummer1:
            case ExampleName::QKummer2:
                p.a = q;
                p.b = third;
                p.shift = ShiftRole::Upper;
                break;
            case ExampleName::Heine2phi1Upper:
                p.a = q;
                p.b = q * q;
                p.c = q;
                break;
            case ExampleName::Heine2phi1Lower:
                p.a = third;
                p.b = half;
                p.c = q;
                break;
            case ExampleName::RPlus1PhiS:
                p.a = q;
                p.alphas = {Rational(2)};
                p.betas = {Rational(1), Rational(1)};
                break;
            case ExampleName::RPhiSUnitDenominator:
                p.alphas = {Rational(2), Rational(2)};
                p.betas = {Rational(1)};
                break;
            default:
                break;
        }
        std::vector<Rational> base;
        std::string note;
        if (entry.expect_dp) {
            base = example_spec(entry.name, p, q, M).spec.base;
        } else {
            // The catalog constructor enforces double positivity, so the
            // log-convex instance is rebuilt directly from its factors.
            const std::vector<Rational> ap = q_pochhammer_table(p.a, q, M + 1);
            const std::vector<Rational> bp = q_pochhammer_table(p.b, q, M + 1);
            for (long nIdx = 0; nIdx <= M + 1; ++nIdx)
                base.push_back(ap[static_cast<std::size_t>(nIdx)] *
                               bp[static_cast<std::size_t>(nIdx)]);
            note = "term ratio increases toward 1, so the sequence is log-convex";
        }
        ReportRow row = dp_row(base, entry.expect_dp);
        ReportRow out;
        out.add("check", "catalog-double-positivity");
        out.add("instance", example_label(entry.name));
        out.add("params", entry.params);
        for (const auto& cell : row.cells)
            if (cell.first != "check") out.add(cell.first, cell.second);
        if (!note.empty()) out.add("note", note);
        out.status = row.status;
        rep.push(std::move(out));
    }

    // --- three-point multiplicative convexity of the sign-adjusted differences
    const BoundedFloat fq = BoundedFloat::from_rational(q);
    const BoundedFloat fstep = BoundedFloat::from_rational(sec.rational("gg-step"));
    struct GgTarget {
        Family family;
        const char* label;
        const char* grid_key;
        const char* base_name;
    };
    const GgTarget targets[4] = {{Family::F, "Delta_F", "gg-x-f", "ones"},
                                 {Family::D, "-Delta_D", "gg-x-d", "inv-qpoch"},
                                 {Family::G, "Delta_G", "gg-x-g", "ones"},
                                 {Family::H, "-Delta_H", "gg-x-h", "ones"}};
    for (const GgTarget& t : targets) {
        const std::vector<Rational> base = exact_base(t.base_name, q, M + 2);
        const DeltaEvaluator ev = make_delta_evaluator(t.family, base, q, mu, alpha, beta, M);
        const std::function<BoundedFloat(const BoundedFloat&)> fn =
            [&ev](const BoundedFloat& x) { return ev.eval(x); };
        for (const Rational& x : sec.rationals(t.grid_key)) {
            const SignVerdict v = check_gg_three_point<BoundedFloat>(
                fn, BoundedFloat::from_rational(x), fstep, GGDirection::Convex);
            ReportRow row;
            row.add("check", "three-point-mult-convexity");
            row.add("function", t.label);
            row.add("base", t.base_name);
            row.add("variable", "x");
            row.add("point", rstr(x));
            row.add("direction", "convex");
            row.add("verdict", to_cstring(v.sign));
            row.status = v.is_undetermined() ? "undetermined"
                                             : (v.nonnegative() ? "pass" : "fail");
            rep.push(std::move(row));
        }
    }

    // --- parameter-direction convexity of the functions themselves
    struct ValueTarget {
        Family family;
        const char* label;
        GGDirection direction;
        const char* x_key;
    };
    const ValueTarget vtargets[2] = {{Family::F, "f(a; x0) in a", GGDirection::Concave, "gg-a-x-f"},
                                     {Family::H, "h(a; x0) in a", GGDirection::Convex, "gg-a-x-h"}};
    for (const ValueTarget& t : vtargets) {
        const std::vector<Rational> base = exact_base("ones", q, M + 2);
        const std::vector<BoundedFloat> fbase = to_float_vec(base);
        const std::optional<BoundedFloat> bsup = detail::derive_base_ratio_sup(fbase, M);
        if (!bsup) throw domain_error("base ratio certificate unavailable");
        const BoundedFloat x0 = BoundedFloat::from_rational(sec.rational(t.x_key));
        const Family fam = t.family;
        const std::function<BoundedFloat(const BoundedFloat&)> fn =
            [&, fam, x0](const BoundedFloat& v) {
                FamilySpec<BoundedFloat> spec{fam, fbase, fq, v};
                const TruncatedSeries<BoundedFloat> s = family_series(spec, M + 1);
                const std::optional<BoundedFloat> wsup =
                    detail::weight_ratio_sup(fam, v, Rational(0), fq, M);
                if (!wsup) throw domain_error("weight ratio certificate unavailable");
                const detail::SeriesEnclosure e = detail::eval_with_tail(s, x0, *bsup * *wsup * x0);
                if (!e.certified)
                    throw domain_error("series tail not certified at the requested point");
                return e.value;
            };
        for (const Rational& a : sec.rationals("gg-a-points")) {
            const SignVerdict v = check_gg_three_point<BoundedFloat>(
                fn, BoundedFloat::from_rational(a), fstep, t.direction);
            ReportRow row;
            row.add("check", "three-point-mult-convexity");
            row.add("function", t.label);
            row.add("base", "ones");
            row.add("variable", "a");
            row.add("point", rstr(a));
            row.add("x0", rstr(sec.rational(t.x_key)));
            row.add("direction", t.direction == GGDirection::Concave ? "concave" : "convex");
            row.add("verdict", to_cstring(v.sign));
            row.status = v.is_undetermined() ? "undetermined"
                                             : (v.nonnegative() ? "pass" : "fail");
            rep.push(std::move(row));
        }
    }

    // --- complete-monotonicity proxy for y -> Delta(1/y) on uniform grids
    const long cm_order = sec.integer("cm-order");
    struct CmTarget {
        Family family;
        const char* label;
        const char* grid_key;
        const char* base_name;
    };
    const CmTarget ctargets[4] = {{Family::F, "Delta_F(1/y)", "cm-y-f", "ones"},
                                  {Family::D, "-Delta_D(1/y)", "cm-y-d", "inv-qpoch"},
                                  {Family::G, "Delta_G(1/y)", "cm-y-g", "ones"},
                                  {Family::H, "-Delta_H(1/y)", "cm-y-h", "ones"}};
    for (const CmTarget& t : ctargets) {
        const std::vector<Rational> base = exact_base(t.base_name, q, M + 2);
        const DeltaEvaluator ev = make_delta_evaluator(t.family, base, q, mu, alpha, beta, M);
        const BoundedFloat one = BoundedFloat::from_long(1);
        const std::function<BoundedFloat(const BoundedFloat&)> fn =
            [&ev, one](const BoundedFloat& y) { return ev.eval(one / y); };
        std::vector<BoundedFloat> grid;
        for (const Rational& y : sec.rationals(t.grid_key))
            grid.push_back(BoundedFloat::from_rational(y));
        const CmProxyReport proxy = check_cm_proxy<BoundedFloat>(fn, grid, cm_order);
        ReportRow row;
        row.add("check", "alternating-differences");
        row.add("label", proxy.label);
        row.add("function", t.label);
        row.add("base", t.base_name);
        row.add("order", std::to_string(proxy.order));
        row.add("grid-points", std::to_string(proxy.grid_points));
        row.add("violations", std::to_string(proxy.violations));
        row.add("undecided", std::to_string(proxy.undecided));
        row.status = proxy.violations > 0 ? "fail"
                                          : (proxy.undecided > 0 ? "undetermined" : "pass");
        rep.push(std::move(row));
    }
    return rep;
}

// ---------------------------------------------------------------------------
// worked-instance suites
// ---------------------------------------------------------------------------

ReportRow expected_throw_row(const char* check, const std::string& params,
                             const std::function<void()>& attempt) {
    ReportRow row;
    row.add("check", check);
    row.add("params", params);
    try {
        attempt();
        row.add("outcome", "no error raised");
        row.status = "fail";
    } catch (const qturan::error& e) {
        row.add("outcome", std::string("rejected: ") + e.what());
        row.status = "pass";
    }
    return row;
}

/// Turanian sign row for a prepared family instance.
ReportRow delta_sign_row(const char* check, const std::string& params,
                         const FamilySpec<Rational>& spec, const Rational& alpha,
                         const Rational& beta, long M) {
    const DeltaExpectation want = family_expectation(spec.family);
    auto tr = turanian_coeffs(spec, alpha, beta, M);
    const auto verdict = scan_verdicts(tr, want, M);
    ReportRow row;
    row.add("check", check);
    row.add("params", params);
    row.add("alpha", rstr(alpha));
    row.add("beta", rstr(beta));
    row.add("m-range", "0.." + std::to_string(M));
    row.add("expected", want.text);
    row.add("normalization", to_cstring(tr.normalization));
    row.add("outcome", verdict.second);
    row.status = verdict.first;
    return row;
}

SuiteReport run_ex1(const SuiteOptions& opts) {
    const Manifest& man = manifest_or_default(opts.manifest);
    const ManifestSection& sec = man.section("bessel");
    SuiteReport rep;
    const long M = opts.order > 0 ? opts.order : sec.integer("order");
    begin_report(rep, "EX1", opts, M);
    rep.mode = "float";

    const Rational q = opts.q_filter ? *opts.q_filter : sec.rational("q");
    const BoundedFloat fq = BoundedFloat::from_rational(q);
    std::vector<Rational> nus = sec.rationals("nu");
    if (opts.grid == "small") nus = {Rational(1)};

    for (long variant = 1; variant <= 2; ++variant) {
        std::vector<Rational> ys =
            sec.rationals(variant == 1 ? "variant-1-y" : "variant-2-y");
        if (opts.grid == "small" && ys.size() > 3) ys.resize(3);
        for (const Rational& nu : nus) {
            for (const Rational& y : ys) {
                const BesselTuranRow r =
                    q_bessel_turan_row(variant, nu, BoundedFloat::from_rational(y), fq, M);
                ReportRow row;
                row.add("check", "turan-sandwich");
                row.add("variant", std::to_string(variant));
                row.add("nu", rstr(nu));
                row.add("q", rstr(q));
                row.add("y", rstr(y));
                row.add("lower", r.lower.to_string());
                row.add("value", r.middle.to_string());
                row.add("upper", r.upper.to_string());
                row.add("margin-lower", (r.middle - r.lower).to_string());
                row.add("margin-upper", (r.upper - r.middle).to_string());
                row.status = r.undecided ? "undetermined"
                                         : (r.lower_ok && r.upper_ok ? "pass" : "fail");
                rep.push(std::move(row));
            }
        }
    }

    const BesselLimitRow lim = q_bessel_limit_row(
        1, sec.integer("limit-nu"), BoundedFloat::from_rational(sec.rational("limit-y")),
        BoundedFloat::from_rational(sec.rational("limit-q")), sec.integer("limit-order"));
    ReportRow row;
    row.add("check", "classical-limit");
    row.add("variant", "1");
    row.add("nu", std::to_string(sec.integer("limit-nu")));
    row.add("q", rstr(sec.rational("limit-q")));
    row.add("y", rstr(sec.rational("limit-y")));
    row.add("q-analogue", lim.q_value.to_string());
    row.add("classical", lim.classical_value.to_string());
    row.add("relative-gap", lim.relative_gap.to_string());
    row.add("tolerance", "1/100");
    row.status = lim.within_tolerance ? "pass" : "fail";
    rep.push(std::move(row));
    return rep;
}

SuiteReport run_ex2(const SuiteOptions& opts) {
    const Manifest& man = manifest_or_default(opts.manifest);
    const ManifestSection& sec = man.section("kummer");
    SuiteReport rep;
    const long M = opts.order > 0 ? opts.order : sec.integer("order");
    begin_report(rep, "EX2", opts, M);

    const Rational q = sec.rational("q");
    const Rational b = sec.rational("b");
    const Rational x = sec.rational("x");

    for (long variant = 1; variant <= 2; ++variant) {
        const ExampleName name = variant == 1 ? ExampleName::QKummer1 : ExampleName::QKummer2;
        ExampleParams<Rational> p;
        p.a = q;
        p.b = b;
        p.shift = ShiftRole::Upper;
        const NamedExample<Rational> ex = example_spec(name, p, q, M);
        const std::string params = "variant " + std::to_string(variant) + ", a=q, b=" + rstr(b) +
                                   ", q=" + rstr(q);

        ReportRow dp = dp_row(ex.spec.base, true);
        ReportRow out;
        out.add("check", "base-double-positivity");
        out.add("params", params);
        for (const auto& cell : dp.cells)
            if (cell.first != "check") out.add(cell.first, cell.second);
        out.status = dp.status;
        rep.push(std::move(out));

        rep.push(delta_sign_row("turanian-sign", params, ex.spec, Rational(1), Rational(2), M));
    }

    for (const std::string& pair : sec.strings("pairs")) {
        const std::size_t colon = pair.find(':');
        if (colon == std::string::npos)
            throw grid_error("malformed shift pair '" + pair + "' (expected t:m)");
        const Rational t = Rational::parse(pair.substr(0, colon));
        const long m = std::stol(pair.substr(colon + 1));
        for (long variant = 1; variant <= 2; ++variant) {
            const SignVerdict v = kummer_concavity_probe(
                variant, t, m, BoundedFloat::from_rational(b), BoundedFloat::from_rational(q),
                BoundedFloat::from_rational(x), M);
            ReportRow row;
            row.add("check", "parameter-log-concavity");
            row.add("variant", std::to_string(variant));
            row.add("t", rstr(t));
            row.add("m", std::to_string(m));
            row.add("b", rstr(b));
            row.add("x", rstr(x));
            row.add("expected", "phi(q^t)^2 > phi(q^(t+m)) phi(q^(t-m))");
            row.add("verdict", to_cstring(v.sign));
            row.status = v.is_undetermined() ? "undetermined"
                                             : (v.is_positive() ? "pass" : "fail");
            rep.push(std::move(row));
        }
    }

    // Two-sided bounds for the second variant reproduce its displayed sandwich.
    {
        ExampleParams<Rational> p;
        p.a = q;
        p.b = b;
        p.shift = ShiftRole::Upper;
        const NamedExample<Rational> ex = example_spec(ExampleName::QKummer2, p, q, M);
        const std::vector<Rational> fractions = {Rational(0), Rational(1, 8), Rational(1, 4),
                                                 Rational(3, 8)};
        const std::vector<Rational> x_grid =
            bounds_x_grid(Family::F, ex.spec.base, q, Rational(1), Rational(1), fractions, M,
                          nullptr);
        const BoundsReport br = bounds_check<Rational>(Family::F, ex.spec.base, q, Rational(1),
                                                       Rational(1), Rational(2), x_grid, M);
        append_bounds_rows(rep, br, {{"check", "two-sided-bounds"}, {"variant", "2"}});
    }
    return rep;
}

SuiteReport run_ex3(const SuiteOptions& opts) {
    const Manifest& man = manifest_or_default(opts.manifest);
    const ManifestSection& sec = man.section("kummer");
    SuiteReport rep;
    const long M = opts.order > 0 ? opts.order : sec.integer("order");
    begin_report(rep, "EX3", opts, M);

    const Rational q = sec.rational("q");
    const Rational b = sec.rational("b");
    const Rational a = q * q;  // 0 < a < q, the double-positivity window

    for (long variant = 1; variant <= 2; ++variant) {
        const ExampleName name = variant == 1 ? ExampleName::QKummer1 : ExampleName::QKummer2;
        ExampleParams<Rational> p;
        p.a = a;
        p.b = b;
        p.shift = ShiftRole::Lower;
        const NamedExample<Rational> ex = example_spec(name, p, q, M);
        const std::string params = "variant " + std::to_string(variant) + ", a=q^2, b=" + rstr(b) +
                                   ", q=" + rstr(q);

        ReportRow dp = dp_row(ex.spec.base, true);
        ReportRow out;
        out.add("check", "base-double-positivity");
        out.add("params", params);
        for (const auto& cell : dp.cells)
            if (cell.first != "check") out.add(cell.first, cell.second);
        out.status = dp.status;
        rep.push(std::move(out));

        rep.push(delta_sign_row("turanian-sign", params, ex.spec, Rational(1), Rational(2), M));
    }

    rep.push(expected_throw_row("restriction-enforced", "lower shift with a=3/4 >= q", [&]() {
        ExampleParams<Rational> p;
        p.a = Rational(3, 4);
        p.b = b;
        p.shift = ShiftRole::Lower;
        example_spec(ExampleName::QKummer2, p, q, M);
    }));

    // Negativity persists for a merely nonnegative (not doubly positive) base.
    {
        const Rational a_wide(3, 4);
        const std::vector<Rational> ap = q_pochhammer_table(a_wide, q, M + 1);
        const std::vector<Rational> qp = q_pochhammer_table(q, q, M + 1);
        std::vector<Rational> base;
        for (long n = 0; n <= M + 1; ++n)
            base.push_back(ap[static_cast<std::size_t>(n)] / qp[static_cast<std::size_t>(n)]);
        FamilySpec<Rational> spec{Family::H, base, q, b};
        rep.push(delta_sign_row("negativity-beyond-double-positivity",
                                "a=3/4, b=" + rstr(b) + ", q=" + rstr(q), spec, Rational(1),
                                Rational(2), M));
    }
    return rep;
}

SuiteReport run_ex4(const SuiteOptions& opts) {
    const Manifest& man = manifest_or_default(opts.manifest);
    const ManifestSection& sec = man.section("kummer");
    SuiteReport rep;
    const long M = opts.order > 0 ? opts.order : sec.integer("order");
    begin_report(rep, "EX4", opts, M);

    const Rational q = sec.rational("q");
    ExampleParams<Rational> p;
    p.a = q;
    p.b = q * q;
    p.c = q;
    const NamedExample<Rational> ex = example_spec(ExampleName::Heine2phi1Upper, p, q, M);
    const std::string params = "a=q, b=q^2, c=q, q=" + rstr(q);

    {
        ReportRow dp = dp_row(ex.spec.base, true);
        ReportRow out;
        out.add("check", "base-double-positivity");
        out.add("params", params);
        for (const auto& cell : dp.cells)
            if (cell.first != "check") out.add(cell.first, cell.second);
        out.status = dp.status;
        rep.push(std::move(out));
    }
    rep.push(delta_sign_row("turanian-sign", params, ex.spec, Rational(1), Rational(2), M));

    rep.push(expected_throw_row("restriction-enforced", "b=1/2 > c=1/4", [&]() {
        ExampleParams<Rational> p2;
        p2.a = q;
        p2.b = Rational(1, 2);
        p2.c = Rational(1, 4);
        example_spec(ExampleName::Heine2phi1Upper, p2, q, M);
    }));

    // With b > c the term ratio increases, so the base turns log-convex.
    {
        const std::vector<Rational> bp = q_pochhammer_table(Rational(1, 2), q, M + 1);
        const std::vector<Rational> cp = q_pochhammer_table(Rational(1, 4), q, M + 1);
        std::vector<Rational> base;
        for (long n = 0; n <= M + 1; ++n)
            base.push_back(bp[static_cast<std::size_t>(n)] / cp[static_cast<std::size_t>(n)]);
        ReportRow dp = dp_row(base, false);
        ReportRow out;
        out.add("check", "reversed-parameters-not-doubly-positive");
        out.add("params", "b=1/2, c=1/4, q=" + rstr(q));
        for (const auto& cell : dp.cells)
            if (cell.first != "check") out.add(cell.first, cell.second);
        out.status = dp.status;
        rep.push(std::move(out));
    }

    {
        const std::vector<Rational> fractions = {Rational(0), Rational(1, 8), Rational(1, 4),
                                                 Rational(3, 8)};
        const std::vector<Rational> x_grid = bounds_x_grid(Family::F, ex.spec.base, q, Rational(1),
                                                           Rational(1), fractions, M, nullptr);
        const BoundsReport br = bounds_check<Rational>(Family::F, ex.spec.base, q, Rational(1),
                                                       Rational(1), Rational(2), x_grid, M);
        append_bounds_rows(rep, br, {{"check", "two-sided-bounds"}});
    }
    return rep;
}

SuiteReport run_ex5(const SuiteOptions& opts) {
    const Manifest& man = manifest_or_default(opts.manifest);
    const ManifestSection& sec = man.section("kummer");
    SuiteReport rep;
    const long M = opts.order > 0 ? opts.order : sec.integer("order");
    begin_report(rep, "EX5", opts, M);
    rep.notes.push_back(
        "the base (a;q)_n (b;q)_n is log-convex, so only the absolute upper bound is displayed; "
        "the lower side would need double positivity");

    const Rational q = sec.rational("q");
    const Rational a(1, 3), b(1, 2);
    const std::string params = "a=1/3, b=1/2, c=q, q=" + rstr(q);

    // The base is intentionally outside the doubly-positive class.
    const std::vector<Rational> ap = q_pochhammer_table(a, q, M + 1);
    const std::vector<Rational> bp = q_pochhammer_table(b, q, M + 1);
    std::vector<Rational> base;
    for (long n = 0; n <= M + 1; ++n)
        base.push_back(ap[static_cast<std::size_t>(n)] * bp[static_cast<std::size_t>(n)]);
    {
        ReportRow dp = dp_row(base, false);
        ReportRow out;
        out.add("check", "base-double-positivity");
        out.add("params", params);
        for (const auto& cell : dp.cells)
            if (cell.first != "check") out.add(cell.first, cell.second);
        out.add("note", "term ratio (1-a q^n)(1-b q^n) increases toward 1: log-convex");
        out.status = dp.status;
        rep.push(std::move(out));
    }

    // Absolute upper bound via certified interval arithmetic.  The term
    // ratios increase, so the monotone certificate is supplied explicitly:
    // they stay below 1.
    {
        const std::vector<Rational> fractions = {Rational(0), Rational(1, 8), Rational(1, 4),
                                                 Rational(3, 8)};
        const std::vector<Rational> x_grid = bounds_x_grid(Family::H, base, q, Rational(1),
                                                           Rational(1), fractions, M, nullptr);
        const BoundsReport br = bounds_check<BoundedFloat>(
            Family::H, to_float_vec(base), BoundedFloat::from_rational(q), Rational(1),
            Rational(1), Rational(2), x_grid, M, default_truncation_eps(), Rational(1));
        SuiteReport scratch;
        append_bounds_rows(scratch, br, {{"check", "upper-bound-only"}});
        for (ReportRow& row : scratch.rows) {
            const std::string* bound = row.find("bound");
            if (bound != nullptr && *bound == "abs-upper") rep.push(std::move(row));
        }
        for (const std::string& n : scratch.notes) rep.notes.push_back(n);
    }
    return rep;
}

SuiteReport run_ex6(const SuiteOptions& opts) {
    const Manifest& man = manifest_or_default(opts.manifest);
    SuiteReport rep;
    const ManifestSection& sec = man.section("kummer");
    const long M = opts.order > 0 ? opts.order : sec.integer("order");
    begin_report(rep, "EX6", opts, M);

    const Rational q = sec.rational("q");
    const std::vector<Rational> alphas = {Rational(2)};
    const std::vector<Rational> betas = {Rational(1), Rational(1)};
    const std::string params = "alphas=(2), betas=(1,1), a=q, q=" + rstr(q);

    {
        const DecrReport decr = decr_condition(alphas, betas, q);
        ReportRow row;
        row.add("check", "decreasing-chain");
        row.add("params", params);
        row.add("links", std::to_string(decr.links.size()));
        row.add("first-failure", std::to_string(decr.first_failure));
        row.status = !decr.certified ? "undetermined" : (decr.holds ? "pass" : "fail");
        rep.push(std::move(row));
    }

    ExampleParams<Rational> p;
    p.a = q;
    p.alphas = alphas;
    p.betas = betas;
    const NamedExample<Rational> ex = example_spec(ExampleName::RPlus1PhiS, p, q, M);
    {
        ReportRow dp = dp_row(ex.spec.base, true);
        ReportRow out;
        out.add("check", "base-double-positivity");
        out.add("params", params);
        for (const auto& cell : dp.cells)
            if (cell.first != "check") out.add(cell.first, cell.second);
        out.status = dp.status;
        rep.push(std::move(out));
    }
    rep.push(delta_sign_row("turanian-sign", params, ex.spec, Rational(1), Rational(2), M));

    // Reversed exponents break the chain at its first link.
    {
        const DecrReport decr = decr_condition({Rational(1)}, {Rational(2)}, q);
        ReportRow row;
        row.add("check", "reversed-chain-fails");
        row.add("params", "alphas=(1), betas=(2), q=" + rstr(q));
        row.add("links", std::to_string(decr.links.size()));
        row.add("first-failure", std::to_string(decr.first_failure));
        row.status = !decr.certified ? "undetermined" : (!decr.holds ? "pass" : "fail");
        rep.push(std::move(row));
    }
    rep.push(expected_throw_row("restriction-enforced", "alphas=(1), betas=(2), a=q", [&]() {
        ExampleParams<Rational> p2;
        p2.a = q;
        p2.alphas = {Rational(1)};
        p2.betas = {Rational(2)};
        example_spec(ExampleName::RPlus1PhiS, p2, q, M);
    }));
    {
        const std::vector<Rational> base =
            detail::phi_ratio_base<Rational>(q, {Rational(1)}, {Rational(2)}, 0, M + 2);
        ReportRow dp = dp_row(base, false);
        ReportRow out;
        out.add("check", "reversed-parameters-not-doubly-positive");
        out.add("params", "alphas=(1), betas=(2), q=" + rstr(q));
        for (const auto& cell : dp.cells)
            if (cell.first != "check") out.add(cell.first, cell.second);
        out.status = dp.status;
        rep.push(std::move(out));
    }
    return rep;
}

SuiteReport run_ex7(const SuiteOptions& opts) {
    const Manifest& man = manifest_or_default(opts.manifest);
    SuiteReport rep;
    const ManifestSection& sec = man.section("kummer");
    const long M = opts.order > 0 ? opts.order : sec.integer("order");
    begin_report(rep, "EX7", opts, M);

    const Rational q(1, 4);  // square q keeps half-integer exponents exact
    rep.notes.push_back("q = 1/4 so the half-integer gamma argument stays rational");

    // r <= s instance: the decreasing chain is checked by the constructor.
    {
        ExampleParams<Rational> p;
        p.mu = Rational(1);
        p.alphas = {Rational(1)};
        p.betas = {Rational(1, 2), Rational(1)};
        const NamedExample<Rational> ex = example_spec(ExampleName::RPhiSUnitDenominator, p, q, M);
        const std::string params = "mu=1, alphas=(1), betas=(1/2,1), q=1/4";
        ReportRow dp = dp_row(ex.spec.base, true);
        ReportRow out;
        out.add("check", "base-double-positivity");
        out.add("params", params);
        for (const auto& cell : dp.cells)
            if (cell.first != "check") out.add(cell.first, cell.second);
        out.status = dp.status;
        rep.push(std::move(out));
        rep.push(delta_sign_row("turanian-sign", params, ex.spec, Rational(1), Rational(1), M));
    }

    // r = s + 1 instance: double positivity is certified directly on the
    // generated prefix (the chain criterion does not cover this shape).
    {
        ExampleParams<Rational> p;
        p.mu = Rational(1, 2);
        p.alphas = {Rational(2), Rational(2)};
        p.betas = {Rational(1)};
        const NamedExample<Rational> ex = example_spec(ExampleName::RPhiSUnitDenominator, p, q, M);
        const std::string params = "mu=1/2, alphas=(2,2), betas=(1), q=1/4";
        ReportRow dp = dp_row(ex.spec.base, true);
        ReportRow out;
        out.add("check", "base-double-positivity");
        out.add("params", params);
        for (const auto& cell : dp.cells)
            if (cell.first != "check") out.add(cell.first, cell.second);
        out.status = dp.status;
        rep.push(std::move(out));
        rep.push(delta_sign_row("turanian-sign", params, ex.spec, Rational(1), Rational(1), M));
    }

    rep.push(expected_throw_row("restriction-enforced", "alphas=(1,1), betas=(1), q=1/4", [&]() {
        ExampleParams<Rational> p;
        p.mu = Rational(1);
        p.alphas = {Rational(1), Rational(1)};
        p.betas = {Rational(1)};
        example_spec(ExampleName::RPhiSUnitDenominator, p, q, M);
    }));
    rep.push(expected_throw_row("unit-denominator-enforced", "betas=(1/2), q=1/4", [&]() {
        ExampleParams<Rational> p;
        p.mu = Rational(1);
        p.alphas = {Rational(1)};
        p.betas = {Rational(1, 2)};
        example_spec(ExampleName::RPhiSUnitDenominator, p, q, M);
    }));
    return rep;
}

}  // namespace

// ---------------------------------------------------------------------------
// public entry points
// ---------------------------------------------------------------------------

const std::vector<std::string>& verify_suite_ids() {
    static const std::vector<std::string> ids = {
        "T1",         "T2",         "T3",         "T4",         "L6",  "L7",  "QBINOM",
        "HEINE",      "C-bounds-F", "C-bounds-D", "C-bounds-G", "C-bounds-H",
        "DUAL",       "SEQ",        "EX1",        "EX2",        "EX3", "EX4", "EX5",
        "EX6",        "EX7"};
    return ids;
}

SuiteReport run_verify(const std::string& id, const SuiteOptions& opts) {
    if (opts.grid != "default" && opts.grid != "small" && opts.grid != "full")
        throw grid_error("unknown grid '" + opts.grid + "' (expected small, default, or full)");
    if (opts.mode != "exact" && opts.mode != "float")
        throw grid_error("unknown mode '" + opts.mode + "' (expected exact or float)");

    if (id == "T1") return run_quad_suite("T1", Family::F, opts);
    if (id == "T2") return run_quad_suite("T2", Family::D, opts);
    if (id == "T4") return run_quad_suite("T4", Family::H, opts);
    if (id == "T3") return run_t3(opts);
    if (id == "L6") {
        reject_overrides("L6", opts, false, false, false, false);
        return run_vandermonde(opts);
    }
    if (id == "QBINOM") {
        reject_overrides("QBINOM", opts, false, false, false, false);
        return run_qbinomial(opts);
    }
    if (id == "HEINE") {
        reject_overrides("HEINE", opts, false, false, false, false);
        return run_heine(opts);
    }
    if (id == "L7") {
        reject_overrides("L7", opts, true, true, false, true);
        return run_l7(opts);
    }
    if (id == "C-bounds-F") return run_bounds_suite("C-bounds-F", Family::F, opts);
    if (id == "C-bounds-D") return run_bounds_suite("C-bounds-D", Family::D, opts);
    if (id == "C-bounds-G") return run_bounds_suite("C-bounds-G", Family::G, opts);
    if (id == "C-bounds-H") return run_bounds_suite("C-bounds-H", Family::H, opts);
    if (id == "DUAL") {
        reject_overrides("DUAL", opts, false, false, false, false);
        return run_dual(opts);
    }
    if (id == "SEQ") {
        reject_overrides("SEQ", opts, false, false, false, false);
        return run_seq(opts);
    }
    if (id == "EX1") {
        reject_overrides("EX1", opts, true, false, false, false);
        return run_ex1(opts);
    }
    if (id == "EX2") {
        reject_overrides("EX2", opts, false, false, false, false);
        return run_ex2(opts);
    }
    if (id == "EX3") {
        reject_overrides("EX3", opts, false, false, false, false);
        return run_ex3(opts);
    }
    if (id == "EX4") {
        reject_overrides("EX4", opts, false, false, false, false);
        return run_ex4(opts);
    }
    if (id == "EX5") {
        reject_overrides("EX5", opts, false, false, false, false);
        return run_ex5(opts);
    }
    if (id == "EX6") {
        reject_overrides("EX6", opts, false, false, false, false);
        return run_ex6(opts);
    }
    if (id == "EX7") {
        reject_overrides("EX7", opts, false, false, false, false);
        return run_ex7(opts);
    }

    std::string known;
    for (const std::string& s : verify_suite_ids()) {
        if (!known.empty()) known += ", ";
        known += s;
    }
    throw grid_error("unknown theorem id '" + id + "'; known ids: " + known);
}

SuiteReport run_conjecture(const ConjectureOptions& opts) {
    const Manifest& man = manifest_or_default(opts.manifest);
    const ManifestSection& sec = man.section("conjecture");
    const ManifestSection& gsec = man.section("family-g");

    if (opts.samples <= 0) throw grid_error("sample count must be positive");
    if (!(opts.alpha_min < opts.alpha_max))
        throw grid_error("empty alpha range: need alpha-min < alpha-max");
    if (opts.alpha_min.sign_int() < 0)
        throw grid_error("alpha range must sit inside (0, +infinity)");

    SuiteReport rep;
    rep.theorem = "CONJ-G";
    rep.label = "CONJECTURE";
    rep.mode = "float";
    const long M = opts.order > 0 ? opts.order : sec.integer("order");
    rep.order = M;
    rep.seed = opts.seed;
    rep.notes.push_back(
        "statement under numerical exploration, not a proved theorem: the positivity pattern of "
        "the gamma-denominator family is expected to persist for every real alpha > 0, with the "
        "remaining parameter conditions unchanged");

    const std::vector<Rational> qs = gsec.rationals("q");
    const std::vector<Rational> betas = gsec.rationals("beta");
    const std::vector<Rational> mus = gsec.rationals("mu");
    struct Combo {
        Rational q, beta, mu;
    };
    std::vector<Combo> combos;
    for (const Rational& q : qs)
        for (const Rational& beta : betas)
            for (const Rational& mu : mus) combos.push_back({q, beta, mu});

    const DeltaExpectation want = family_expectation(Family::G);
    const long base_prec = BoundedFloat::default_precision();

    auto check_instance = [&](const Rational& alpha, const Combo& c, long prec)
        -> std::pair<std::string, long> {
        const BoundedFloat fq = BoundedFloat::from_rational(c.q, prec);
        std::vector<BoundedFloat> base(static_cast<std::size_t>(M) + 2,
                                       BoundedFloat::from_long(1, prec));
        FamilySpec<BoundedFloat> spec{Family::G, std::move(base), fq, qpow(fq, c.mu)};
        const auto tr = turanian_coeffs(spec, alpha, c.beta, M);
        for (long m = 0; m <= M; ++m) {
            const SignVerdict& v = tr.verdicts[static_cast<std::size_t>(m)];
            if (v.is_undetermined()) return {"undetermined", m};
            if (v.sign != want.sign) return {"fail", m};
        }
        return {"pass", -1};
    };

    struct Counterexample {
        long m;
        Rational alpha, q, beta, mu;
    };
    std::vector<Counterexample> counterexamples;

    // Integer controls inside the proved range must pass.
    for (const Rational& q : qs) {
        for (long a = 1; a <= 2; ++a) {
            const Combo c{q, Rational(1), Rational(1)};
            auto res = check_instance(Rational(a), c, base_prec);
            if (res.first == "undetermined")
                res = check_instance(Rational(a), c, 2 * base_prec);
            ReportRow row;
            row.add("role", "control");
            row.add("alpha", std::to_string(a));
            row.add("q", rstr(q));
            row.add("beta", "1");
            row.add("mu", "1");
            row.add("m-range", "0.." + std::to_string(M));
            row.add("outcome", res.first == "pass"
                                   ? "all coefficients positive"
                                   : "problem at m=" + std::to_string(res.second));
            row.status = res.first;
            rep.push(std::move(row));
        }
    }

    SplitMix64 rng(opts.seed);
    const Rational span = opts.alpha_max - opts.alpha_min;
    for (long i = 0; i < opts.samples; ++i) {
        Rational alpha(0);
        for (int tries = 0; tries < 64; ++tries) {
            const long den = 2 + static_cast<long>(rng.below(31));
            const long num = 1 + static_cast<long>(rng.below(static_cast<std::uint64_t>(den - 1)));
            alpha = opts.alpha_min + span * Rational(num, den);
            if (!alpha.is_integer() && alpha.sign_int() > 0) break;
        }
        const Combo& c = combos[static_cast<std::size_t>(i) % combos.size()];

        auto res = check_instance(alpha, c, base_prec);
        if (res.first == "undetermined") res = check_instance(alpha, c, 2 * base_prec);
        if (res.first == "fail")
            counterexamples.push_back({res.second, alpha, c.q, c.beta, c.mu});

        ReportRow row;
        row.add("role", "sample");
        row.add("sample", std::to_string(i));
        row.add("alpha", rstr(alpha));
        row.add("q", rstr(c.q));
        row.add("beta", rstr(c.beta));
        row.add("mu", rstr(c.mu));
        row.add("m-range", "0.." + std::to_string(M));
        row.add("outcome", res.first == "pass"
                               ? "all coefficients positive"
                               : (res.first == "fail"
                                      ? "certified negative coefficient at m=" +
                                            std::to_string(res.second)
                                      : "sign undecided at m=" + std::to_string(res.second)));
        row.status = res.first;
        rep.push(std::move(row));
    }

    if (counterexamples.empty()) {
        rep.notes.push_back("no counterexample found in " + std::to_string(opts.samples) +
                            " samples");
    } else {
        std::sort(counterexamples.begin(), counterexamples.end(),
                  [](const Counterexample& a, const Counterexample& b) {
                      return std::tie(a.m, a.alpha, a.q, a.beta, a.mu) <
                             std::tie(b.m, b.alpha, b.q, b.beta, b.mu);
                  });
        const Counterexample& cx = counterexamples.front();
        const auto recheck =
            check_instance(cx.alpha, {cx.q, cx.beta, cx.mu}, 2 * base_prec);
        ReportRow row;
        row.add("role", "minimized-counterexample");
        row.add("alpha", rstr(cx.alpha));
        row.add("q", rstr(cx.q));
        row.add("beta", rstr(cx.beta));
        row.add("mu", rstr(cx.mu));
        row.add("m", std::to_string(cx.m));
        row.add("outcome", recheck.first == "fail"
                               ? "confirmed at doubled precision"
                               : "not reproduced at doubled precision");
        row.status = "fail";
        rep.push(std::move(row));
        rep.notes.push_back("minimized counterexample: alpha=" + rstr(cx.alpha) +
                            ", q=" + rstr(cx.q) + ", beta=" + rstr(cx.beta) +
                            ", mu=" + rstr(cx.mu) + ", m=" + std::to_string(cx.m));
    }
    return rep;
}

SuiteReport run_table(const TableOptions& opts) {
    const Manifest& man = manifest_or_default(opts.manifest);
    const ManifestSection& sec = man.section("bessel");

    long variant = 0;
    if (opts.target == "QBessel1") variant = 1;
    if (opts.target == "QBessel2") variant = 2;
    if (variant == 0)
        throw grid_error("unknown table target '" + opts.target +
                         "' (expected QBessel1 or QBessel2)");

    SuiteReport rep;
    rep.theorem = opts.target;
    rep.mode = "float";
    const long M = opts.order > 0 ? opts.order : sec.integer("order");
    rep.order = M;

    const Rational q = opts.q ? *opts.q : sec.rational("q");
    if (!(Rational(0) < q && q < Rational(1)))
        throw domain_error("q must lie strictly inside (0, 1)");
    const Rational nu = opts.nu;
    if (!(Rational(0) < nu)) throw domain_error("table requires nu > 0");

    std::vector<Rational> ys;
    if (opts.points > 0) {
        const Rational y_max = opts.y_max ? *opts.y_max : Rational(variant == 1 ? 2 : 4);
        if (!(Rational(0) < y_max)) throw domain_error("y-max must be positive");
        for (long i = 1; i <= opts.points; ++i)
            ys.push_back(y_max * Rational(i, opts.points + 1));
    } else {
        ys = sec.rationals(variant == 1 ? "variant-1-y" : "variant-2-y");
    }

    const BoundedFloat fq = BoundedFloat::from_rational(q);
    for (const Rational& y : ys) {
        ReportRow row;
        row.add("variant", std::to_string(variant));
        row.add("nu", rstr(nu));
        row.add("q", rstr(q));
        row.add("x", rstr(y));
        try {
            const BesselTuranRow r =
                q_bessel_turan_row(variant, nu, BoundedFloat::from_rational(y), fq, M);
            row.add("lower", r.lower.to_string());
            row.add("value", r.middle.to_string());
            row.add("upper", r.upper.to_string());
            row.add("margin_lower", (r.middle - r.lower).to_string());
            row.add("margin_upper", (r.upper - r.middle).to_string());
            row.add("radius", "inside");
            row.status = r.undecided ? "undetermined"
                                     : (r.lower_ok && r.upper_ok ? "pass" : "fail");
        } catch (const qturan::error& e) {
            row.add("lower", "");
            row.add("value", "");
            row.add("upper", "");
            row.add("margin_lower", "");
            row.add("margin_upper", "");
            row.add("radius", "outside");
            row.add("note", e.what());
            row.status = "undetermined";
        }
        rep.push(std::move(row));
    }
    return rep;
}

}  // namespace qturan
