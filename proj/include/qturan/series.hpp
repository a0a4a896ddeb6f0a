#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "qturan/qcore.hpp"
#include "qturan/scalar.hpp"

namespace qturan {

/// Default truncation order for power-series work.  All series-level claims
/// of the library are statements about coefficients up to this horizon
/// unless a caller asks for more.
inline constexpr long kDefaultOrder = 32;

/// A power series truncated at a fixed order: coefficients c[0..M].
template <ScalarLike S>
struct TruncatedSeries {
    std::vector<S> c;

    TruncatedSeries() = default;
    explicit TruncatedSeries(std::vector<S> coeffs) : c(std::move(coeffs)) {
        if (c.empty()) throw order_error("TruncatedSeries: no coefficients");
    }
    static TruncatedSeries constant(const S& value, long order) {
        std::vector<S> v(static_cast<std::size_t>(order) + 1, make_scalar<S>(0L));
        v[0] = value;
        return TruncatedSeries(std::move(v));
    }

    long order() const { return static_cast<long>(c.size()) - 1; }
    const S& operator[](std::size_t i) const { return c.at(i); }
    S& operator[](std::size_t i) { return c.at(i); }
};

template <ScalarLike S>
TruncatedSeries<S> operator+(const TruncatedSeries<S>& a, const TruncatedSeries<S>& b) {
    if (a.order() != b.order()) throw order_error("series addition: order mismatch");
    std::vector<S> out;
    out.reserve(a.c.size());
    for (std::size_t i = 0; i < a.c.size(); ++i) out.push_back(a.c[i] + b.c[i]);
    return TruncatedSeries<S>(std::move(out));
}

template <ScalarLike S>
TruncatedSeries<S> operator-(const TruncatedSeries<S>& a, const TruncatedSeries<S>& b) {
    if (a.order() != b.order()) throw order_error("series subtraction: order mismatch");
    std::vector<S> out;
    out.reserve(a.c.size());
    for (std::size_t i = 0; i < a.c.size(); ++i) out.push_back(a.c[i] - b.c[i]);
    return TruncatedSeries<S>(std::move(out));
}

template <ScalarLike S>
TruncatedSeries<S> scale(const TruncatedSeries<S>& a, const S& s) {
    std::vector<S> out;
    out.reserve(a.c.size());
    for (const S& x : a.c) out.push_back(x * s);
    return TruncatedSeries<S>(std::move(out));
}

/// Cauchy product truncated at the common order of the operands.
template <ScalarLike S>
TruncatedSeries<S> cauchy_product(const TruncatedSeries<S>& a, const TruncatedSeries<S>& b) {
    if (a.order() != b.order()) throw order_error("cauchy_product: order mismatch");
    const long M = a.order();
    std::vector<S> out;
    out.reserve(a.c.size());
    for (long m = 0; m <= M; ++m) {
        S acc = make_scalar<S>(0L);
        for (long k = 0; k <= m; ++k)
            acc = acc + a.c[static_cast<std::size_t>(k)] * b.c[static_cast<std::size_t>(m - k)];
        out.push_back(acc);
    }
    return TruncatedSeries<S>(std::move(out));
}

/// Horner evaluation of the truncated polynomial at x.
template <ScalarLike S>
S eval(const TruncatedSeries<S>& a, const S& x) {
    S acc = a.c.back();
    for (std::size_t i = a.c.size() - 1; i-- > 0;) acc = acc * x + a.c[i];
    return acc;
}

/// The four weighted series families.  Each multiplies a caller-supplied
/// base sequence by a parameter-dependent weight; a = the substituted
/// parameter value (some q^mu):
///   F: base_n * (a;q)_n / (q;q)_n          (shifted-factorial weight)
///   D: base_n * (a;q)_n / (1-q)^n          (gamma-quotient weight,
///                                           i.e. the gamma-weighted series
///                                           normalised by its own gamma)
///   G: base_n * (1-q)^n / (a;q)_n          (reciprocal-gamma weight,
///                                           normalised likewise)
///   H: base_n / (a;q)_n                    (reciprocal shifted factorial)
enum class Family { F, D, G, H };

inline const char* to_cstring(Family f) {
    switch (f) {
        case Family::F: return "F";
        case Family::D: return "D";
        case Family::G: return "G";
        default: return "H";
    }
}

template <ScalarLike S>
struct FamilySpec {
    Family family = Family::F;
    std::vector<S> base;  ///< base coefficients, length at least order+1
    S q = make_scalar<S>(0L);
    S value = make_scalar<S>(0L);  ///< substituted parameter value (q^mu)
};

/// Coefficients of the weighted family series up to order M.  For families
/// D and G this is the gamma-normalised form, whose coefficients are exact
/// scalars; the absolute (gamma-weighted) variant lives in
/// `family_series_absolute`.  Throws on vanishing shifted-factorial
/// divisors, naming the offending index.
template <ScalarLike S>
TruncatedSeries<S> family_series(const FamilySpec<S>& spec, long M = kDefaultOrder) {
    if (M < 0) throw order_error("family_series: negative order");
    if (static_cast<long>(spec.base.size()) < M + 1)
        throw order_error("family_series: base sequence shorter than order+1");
    QParams<S> env{spec.q, {}};
    env.validate();
    if (!certainly_less(make_scalar<S>(0L), spec.value))
        throw domain_error("family_series: parameter value must be positive");

    const S one = make_scalar<S>(1L);
    std::vector<S> apoch = q_pochhammer_table(spec.value, spec.q, M);
    std::vector<S> out;
    out.reserve(static_cast<std::size_t>(M) + 1);

    switch (spec.family) {
        case Family::F: {
            std::vector<S> qpoch = q_pochhammer_table(spec.q, spec.q, M);
            for (long n = 0; n <= M; ++n)
                out.push_back(spec.base[n] * apoch[n] / qpoch[n]);
            break;
        }
        case Family::D: {
            S pw = one;
            for (long n = 0; n <= M; ++n) {
                out.push_back(spec.base[n] * apoch[n] / pw);
                pw = pw * (one - spec.q);
            }
            break;
        }
        case Family::G: {
            S pw = one;
            for (long n = 0; n <= M; ++n) {
                if (sign_of(apoch[n]).is_zero())
                    throw domain_error("family_series: zero divisor (value;q)_" + std::to_string(n));
                out.push_back(spec.base[n] * pw / apoch[n]);
                pw = pw * (one - spec.q);
            }
            break;
        }
        case Family::H: {
            for (long n = 0; n <= M; ++n) {
                if (sign_of(apoch[n]).is_zero())
                    throw domain_error("family_series: zero divisor (value;q)_" + std::to_string(n));
                out.push_back(spec.base[n] / apoch[n]);
            }
            break;
        }
    }
    return TruncatedSeries<S>(std::move(out));
}

/// Absolute (un-normalised) gamma-weighted series for families D and G in
/// Float mode: term_n = base_n * Gamma_q(mu+n) * x^n (D) or
/// base_n / Gamma_q(mu+n) (G).  Needed for the absolute sides of two-sided
/// bounds; mu is the real exponent itself.
inline TruncatedSeries<BoundedFloat> family_series_absolute(
    Family family, const std::vector<BoundedFloat>& base, const BoundedFloat& q,
    const Rational& mu, long M = kDefaultOrder,
    const Rational& eps = default_truncation_eps()) {
    if (static_cast<long>(base.size()) < M + 1)
        throw order_error("family_series_absolute: base sequence shorter than order+1");
    if (family != Family::D && family != Family::G)
        throw domain_error("family_series_absolute: only gamma-weighted families D and G");
    std::vector<BoundedFloat> ig = inv_q_gamma_ladder(mu, q, M, eps);
    std::vector<BoundedFloat> out;
    out.reserve(static_cast<std::size_t>(M) + 1);
    for (long n = 0; n <= M; ++n) {
        if (family == Family::G) {
            out.push_back(base[n] * ig[n]);
        } else {
            if (ig[n].contains_zero())
                throw domain_error("family_series_absolute: gamma pole at shift " + std::to_string(n));
            out.push_back(base[n] / ig[n]);
        }
    }
    return TruncatedSeries<BoundedFloat>(std::move(out));
}

/// Parameters of a basic hypergeometric sum: upper list (a_1..a_r), lower
/// list (b_1..b_s), base q.
template <ScalarLike S>
struct HypergeometricParams {
    std::vector<S> upper;
    std::vector<S> lower;
    S q = make_scalar<S>(0L);
};

/// Truncated basic hypergeometric series coefficients in the argument z:
/// c_n = (a_1..a_r; q)_n / ((q; q)_n (b_1..b_s; q)_n) *
///       [(-1)^n q^(n(n-1)/2)]^(1+s-r).
/// Requires r <= s+1; throws when a lower parameter makes a divisor vanish
/// within the truncation window (e.g. b = q^-k), naming parameter and index.
template <ScalarLike S>
TruncatedSeries<S> rphis(const HypergeometricParams<S>& p, long M = kDefaultOrder) {
    QParams<S> env{p.q, {}};
    env.validate();
    const long r = static_cast<long>(p.upper.size());
    const long s = static_cast<long>(p.lower.size());
    if (r > s + 1)
        throw domain_error("rphis: requires r <= s+1 upper parameters");
    const long w = 1 + s - r;  // power of the alternating-sign q-power factor

    const S one = make_scalar<S>(1L);
    std::vector<std::vector<S>> up, lo;
    for (const S& a : p.upper) up.push_back(q_pochhammer_table(a, p.q, M));
    for (long j = 0; j < s; ++j) {
        auto t = q_pochhammer_table(p.lower[static_cast<std::size_t>(j)], p.q, M);
        for (long n = 0; n <= M; ++n)
            if (sign_of(t[static_cast<std::size_t>(n)]).is_zero())
                throw domain_error("rphis: lower parameter " + std::to_string(j + 1) +
                                   " gives a vanishing divisor at term " + std::to_string(n));
        lo.push_back(std::move(t));
    }
    std::vector<S> qpoch = q_pochhammer_table(p.q, p.q, M);

    std::vector<S> out;
    out.reserve(static_cast<std::size_t>(M) + 1);
    for (long n = 0; n <= M; ++n) {
        S num = one;
        for (const auto& t : up) num = num * t[static_cast<std::size_t>(n)];
        S den = qpoch[static_cast<std::size_t>(n)];
        for (const auto& t : lo) den = den * t[static_cast<std::size_t>(n)];
        S coeff = num / den;
        if (w != 0) {
            S f = scalar_traits<S>::pow_int(p.q, n * (n - 1) / 2);
            if (n % 2 == 1) f = -f;
            coeff = coeff * scalar_traits<S>::pow_int(f, w);
        }
        out.push_back(coeff);
    }
    return TruncatedSeries<S>(std::move(out));
}

/// Ratio-test estimate of the radius of convergence from a coefficient
/// prefix: |c_(N-1)/c_N|, with a monotonicity flag over the whole prefix.
template <ScalarLike S>
struct RadiusEstimate {
    S value = make_scalar<S>(0L);
    bool ratios_nondecreasing = true;  ///< false if some step certainly decreases
    long using_terms = 0;
};

template <ScalarLike S>
RadiusEstimate<S> radius_estimate(const std::vector<S>& coeffs, long N) {
    if (N < 1 || static_cast<long>(coeffs.size()) < N + 1)
        throw order_error("radius_estimate: need coefficients up to index N >= 1");
    for (long k = 1; k <= N; ++k)
        if (sign_of(coeffs[static_cast<std::size_t>(k)]).is_zero())
            throw domain_error("radius_estimate: zero coefficient at index " + std::to_string(k));

    auto abs_of = [](const S& x) {
        if constexpr (is_exact_v<S>) return x.abs(); else return x.abs_enclosure();
    };
    RadiusEstimate<S> est;
    est.using_terms = N;
    S prev = make_scalar<S>(0L);
    for (long k = 1; k <= N; ++k) {
        S r = abs_of(coeffs[static_cast<std::size_t>(k - 1)]) / abs_of(coeffs[static_cast<std::size_t>(k)]);
        if (k > 1 && certainly_less(r, prev)) est.ratios_nondecreasing = false;
        prev = r;
        if (k == N) est.value = r;
    }
    return est;
}

} // namespace qturan
