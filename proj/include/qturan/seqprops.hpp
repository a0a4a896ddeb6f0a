#pragma once

#include "qturan/qcore.hpp"

#include <functional>
#include <string>
#include <vector>

namespace qturan {

/// Relative tolerance for weak inequalities evaluated in Float mode:
/// a quantity expected to be >= 0 passes when it is >= -tol * scale.
/// Exact mode never applies a tolerance.
inline const Rational& weak_inequality_tolerance() {
    static const Rational tol = Rational(1, 2).pow_int(66);
    return tol;
}

namespace detail {

/// Weak sign check with scale-relative tolerance: classifies `v >= -tol*scale`.
/// Returns {Positive/Zero-ish pass as nonnegative, Negative = definite
/// violation, Undetermined = cannot decide}.  Exact mode ignores the scale.
inline SignVerdict weakly_nonnegative(const Rational& v, const Rational&) {
    SignVerdict sv = sign_of(v);
    return sv;
}

inline SignVerdict weakly_nonnegative(const BoundedFloat& v, const BoundedFloat& scale) {
    const BoundedFloat thr =
        scale.abs_enclosure() * BoundedFloat::from_rational(weak_inequality_tolerance());
    const BoundedFloat neg_thr = BoundedFloat::from_long(0) - thr;
    if (certainly_less(v, neg_thr)) return {Sign::Negative, true};
    if (neg_thr.definitely_at_most(v)) {
        // Certified to clear the tolerated threshold; report the best sign.
        SignVerdict sv = v.sign();
        if (sv.certified) return sv;
        return {Sign::Zero, true};  // within tolerance of zero, treated as weak pass
    }
    return {Sign::Undetermined, false};
}

} // namespace detail

// ---------------------------------------------------------------------------
// Doubly positive sequences
// ---------------------------------------------------------------------------

/// Structural profile of a finite sequence prefix.  `doubly_positive` holds
/// exactly when the prefix is nonnegative, log-concave (b_k^2 >= b_(k-1)
/// b_(k+1) for interior k), free of internal zeros (a zero entry forces a
/// zero prefix block or zero suffix block), and nontrivial.  `certified`
/// records whether every comparison was decidable (always true in exact
/// mode).
struct SequenceProfile {
    bool nonneg = false;
    bool log_concave = false;
    std::vector<std::size_t> internal_zeros;
    bool nontrivial = false;
    bool doubly_positive = false;
    bool certified = true;
};

template <ScalarLike S>
SequenceProfile is_doubly_positive(const std::vector<S>& seq) {
    SequenceProfile p;
    const std::size_t n = seq.size();

    // Signs, with certification tracking.
    std::vector<SignVerdict> sv;
    sv.reserve(n);
    for (const S& v : seq) sv.push_back(sign_of(v));

    p.nonneg = true;
    for (const SignVerdict& s : sv) {
        if (!s.certified) p.certified = false;
        if (s.certified && s.is_negative()) p.nonneg = false;
        if (!s.certified) p.nonneg = false;
    }

    // Nontrivial: at least one certainly nonzero entry.
    for (const SignVerdict& s : sv)
        if (s.certified && !s.is_zero()) p.nontrivial = true;

    // Internal zeros: a certified zero strictly between certified nonzeros.
    std::ptrdiff_t first_nz = -1, last_nz = -1;
    for (std::size_t i = 0; i < n; ++i) {
        if (sv[i].certified && !sv[i].is_zero()) {
            if (first_nz < 0) first_nz = static_cast<std::ptrdiff_t>(i);
            last_nz = static_cast<std::ptrdiff_t>(i);
        }
    }
    if (first_nz >= 0) {
        for (std::ptrdiff_t i = first_nz + 1; i < last_nz; ++i) {
            const auto ui = static_cast<std::size_t>(i);
            if (sv[ui].certified && sv[ui].is_zero())
                p.internal_zeros.push_back(ui);
            if (!sv[ui].certified) p.certified = false;
        }
    }

    // Log-concavity with weak tolerance in Float mode.
    p.log_concave = n >= 1;
    for (std::size_t k = 1; k + 1 < n; ++k) {
        const S diff = seq[k] * seq[k] - seq[k - 1] * seq[k + 1];
        S scale = seq[k] * seq[k];
        if constexpr (!is_exact_v<S>) {
            scale = scale.abs_enclosure().hull((seq[k - 1] * seq[k + 1]).abs_enclosure());
        }
        const SignVerdict w = detail::weakly_nonnegative(diff, scale);
        if (!w.certified) {
            p.certified = false;
            p.log_concave = false;
        } else if (w.is_negative()) {
            p.log_concave = false;
        }
    }

    p.doubly_positive =
        p.nonneg && p.log_concave && p.internal_zeros.empty() && p.nontrivial;
    return p;
}

// ---------------------------------------------------------------------------
// Three-point multiplicative convexity / concavity
// ---------------------------------------------------------------------------

enum class GGDirection { Concave, Convex };

inline const char* to_cstring(GGDirection d) {
    return d == GGDirection::Concave ? "concave" : "convex";
}

/// Three-point test of Jensen multiplicative concavity (f(a)^2 >=
/// f(a/qstep) f(a*qstep)) or convexity (the reverse).  Returns the sign of
/// the oriented difference, so a nonnegative verdict means the requested
/// direction holds at this triple.
template <ScalarLike S>
SignVerdict check_gg_three_point(const std::function<S(const S&)>& evaluator, const S& a,
                                 const S& qstep, GGDirection direction) {
    const S zero = make_scalar<S>(0L);
    const S one = make_scalar<S>(1L);
    if (!certainly_less(zero, qstep) || !certainly_less(qstep, one))
        throw domain_error("check_gg_three_point: need 0 < qstep < 1");
    if (!certainly_less(zero, a))
        throw domain_error("check_gg_three_point: need a > 0");
    const S mid = evaluator(a);
    const S left = evaluator(a / qstep);
    const S right = evaluator(a * qstep);
    const S concave_gap = mid * mid - left * right;
    if (direction == GGDirection::Concave) return sign_of(concave_gap);
    return sign_of(zero - concave_gap);
}

// ---------------------------------------------------------------------------
// Complete-monotonicity finite-difference proxy
// ---------------------------------------------------------------------------

/// Report of the alternating-difference check.  `pass` means no difference
/// certainly violated (-1)^n Delta^n f >= 0 (up to the weak tolerance in
/// Float mode); `certified` means every comparison was decidable.  The label
/// records that this is a necessary condition only.
struct CmProxyReport {
    long order = 0;
    long grid_points = 0;
    bool pass = false;
    bool certified = true;
    long violations = 0;
    long undecided = 0;
    std::vector<std::string> notes;
    std::string label = "finite-difference proxy (necessary condition only)";
};

/// Verifies (-1)^n Delta^n f(y_i) >= 0 for 0 <= n <= n_max at every
/// admissible start of a uniform grid, where Delta is the forward difference
/// with the grid step.  Implied by complete monotonicity on an interval
/// containing the grid; a definite violation falsifies it.
template <ScalarLike S>
CmProxyReport check_cm_proxy(const std::function<S(const S&)>& evaluator,
                             const std::vector<S>& y_grid, long n_max) {
    const long npts = static_cast<long>(y_grid.size());
    if (n_max < 0) throw order_error("check_cm_proxy: negative order");
    if (npts < n_max + 1) throw grid_error("check_cm_proxy: grid too short for the order");

    // Uniformity: all consecutive steps must agree (exactly in exact mode,
    // compatibly in Float mode).
    if (npts >= 2) {
        const S h0 = y_grid[1] - y_grid[0];
        for (long i = 1; i + 1 < npts; ++i) {
            const S hi = y_grid[static_cast<std::size_t>(i) + 1] -
                         y_grid[static_cast<std::size_t>(i)];
            bool same;
            if constexpr (is_exact_v<S>) {
                same = (hi == h0);
            } else {
                same = hi.intersects(h0);
            }
            if (!same) throw grid_error("check_cm_proxy: grid is not uniform");
        }
    }

    CmProxyReport rep;
    rep.order = n_max;
    rep.grid_points = npts;
    rep.pass = true;

    std::vector<S> row;
    row.reserve(static_cast<std::size_t>(npts));
    for (const S& y : y_grid) row.push_back(evaluator(y));

    for (long n = 0; n <= n_max; ++n) {
        // Check (-1)^n * row >= 0 entrywise.
        S scale = make_scalar<S>(0L);
        if constexpr (!is_exact_v<S>) {
            for (const S& v : row) scale = scale.hull(v.abs_enclosure());
        }
        for (long i = 0; i < static_cast<long>(row.size()); ++i) {
            const S oriented = (n % 2 == 0) ? row[static_cast<std::size_t>(i)]
                                            : make_scalar<S>(0L) - row[static_cast<std::size_t>(i)];
            const SignVerdict w = detail::weakly_nonnegative(oriented, scale);
            if (!w.certified) {
                rep.certified = false;
                ++rep.undecided;
            } else if (w.is_negative()) {
                rep.pass = false;
                ++rep.violations;
                if (rep.notes.size() < 8)
                    rep.notes.push_back("order " + std::to_string(n) + " at grid start " +
                                        std::to_string(i) + ": sign violated");
            }
        }
        // Next forward-difference row.
        if (n == n_max) break;
        std::vector<S> next;
        next.reserve(row.size() - 1);
        for (std::size_t i = 0; i + 1 < row.size(); ++i) next.push_back(row[i + 1] - row[i]);
        row = std::move(next);
    }
    if (rep.undecided > 0)
        rep.notes.push_back(std::to_string(rep.undecided) + " comparisons undecided");
    return rep;
}

} // namespace qturan
