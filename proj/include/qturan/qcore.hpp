#pragma once

#include <cmath>
#include <optional>
#include <vector>

#include "qturan/scalar.hpp"

namespace qturan {

/// Default relative tolerance for truncating infinite products:
/// 2^-100 (~7.9e-31).
inline const Rational& default_truncation_eps() {
    static const Rational eps = Rational(1) / Rational(2).pow_int(100);
    return eps;
}

/// Validated q-environment: a base q in (0,1) plus optional substituted
/// parameter values (each standing for some q^nu).
template <ScalarLike S>
struct QParams {
    S q;
    std::vector<S> values;

    /// Throws domain_error unless q is certified in (0,1) and every value is
    /// certified positive.  With `unit_interval_values`, values must also be
    /// certified < 1 (the standard hypothesis; relaxed branches pass false).
    void validate(bool unit_interval_values = true) const {
        const S zero = make_scalar<S>(0L);
        const S one = make_scalar<S>(1L);
        if (!certainly_less(zero, q) || !certainly_less(q, one))
            throw domain_error("QParams: q must lie strictly inside (0,1)");
        for (const S& v : values) {
            if (!certainly_less(zero, v))
                throw domain_error("QParams: substituted parameter values must be positive");
            if (unit_interval_values && !certainly_less(v, one))
                throw domain_error("QParams: substituted parameter value must be < 1");
        }
    }
};

/// Bracket number [x]_q = (1 - q^x)/(1 - q) for integer x (both modes).
template <ScalarLike S>
S q_number(long x, const S& q) {
    const S one = make_scalar<S>(1L);
    return (one - scalar_traits<S>::pow_int(q, x)) / (one - q);
}

/// Bracket number for scalar x.  Exact mode requires an integer x; Float
/// mode accepts any real x via q^x = exp(x log q).
inline Rational q_number(const Rational& x, const Rational& q) {
    if (!x.is_integer())
        throw mode_error("q_number: exact mode requires an integer argument");
    return q_number(x.to_long(), q);
}

inline BoundedFloat q_number(const BoundedFloat& x, const BoundedFloat& q) {
    const BoundedFloat one = BoundedFloat::from_long(1);
    return (one - pow(q, x)) / (one - q);
}

/// Finite shifted factorial (a; q)_n = prod_{k=0}^{n-1} (1 - a q^k).
template <ScalarLike S>
S q_pochhammer(const S& a, const S& q, long n) {
    if (n < 0) throw domain_error("q_pochhammer: negative length");
    S acc = make_scalar<S>(1L);
    S aqk = a;
    for (long k = 0; k < n; ++k) {
        acc = acc * (make_scalar<S>(1L) - aqk);
        if (k + 1 < n) aqk = aqk * q;
    }
    return acc;
}

/// Table of (v; q)_k for k = 0..n (n+1 entries); one pass, reused by the
/// series and Turánian layers.
template <ScalarLike S>
std::vector<S> q_pochhammer_table(const S& v, const S& q, long n) {
    std::vector<S> t;
    t.reserve(static_cast<std::size_t>(n) + 1);
    t.push_back(make_scalar<S>(1L));
    S vqk = v;
    for (long k = 0; k < n; ++k) {
        t.push_back(t.back() * (make_scalar<S>(1L) - vqk));
        vqk = vqk * q;
    }
    return t;
}

/// q^e for a rational exponent.  Float mode: integer exponents use exact
/// interval powers; fractional ones go through exp/log enclosures.
inline BoundedFloat qpow(const BoundedFloat& q, const Rational& e) {
    if (e.is_integer()) return q.pow_int(e.to_long());
    return pow(q, BoundedFloat::from_rational(e, q.precision()));
}

/// Infinite shifted factorial (a; q)_inf with a certified truncation tail.
///
/// Requires certified 0 <= a < 1 and 0 < q < 1.  The tail after N factors is
/// controlled through -log(1-x) <= x/(1-x):
///     0 <= -log prod_{k>=N}(1 - a q^k) <= a q^N / ((1-q)(1-a q^N)) =: T_N,
/// and N is grown until T_N <= eps, so the result enclosure
/// P_N * exp([-T_N, 0]) carries relative error at most about 2*eps on top of
/// the rounding already tracked by the interval.
inline BoundedFloat q_pochhammer_inf(const BoundedFloat& a, const BoundedFloat& q,
                                     const Rational& eps = default_truncation_eps()) {
    const BoundedFloat one = BoundedFloat::from_long(1, a.precision());
    const BoundedFloat zero = BoundedFloat::from_long(0, a.precision());
    if (eps.sign_int() <= 0) throw domain_error("q_pochhammer_inf: eps must be positive");
    if (!q.at_least(Rational(0)) || !certainly_less(q, one) || !certainly_less(zero, q))
        throw domain_error("q_pochhammer_inf: q must lie strictly inside (0,1)");
    if (!a.at_least(Rational(0)) || !certainly_less(a, one))
        throw domain_error("q_pochhammer_inf: parameter must lie in [0,1)");
    if (a.at_most(Rational(0))) return one;

    // Double-precision guess for N, then rigorous verification of T_N.
    double ad = a.hi_double(), qd = q.hi_double(), epsd = eps.to_double();
    double guess = (std::log(epsd) + std::log1p(-qd) - std::log(ad)) / std::log(qd);
    long n = guess > 0 ? static_cast<long>(guess) + 8 : 8;
    BoundedFloat tail(a.precision());
    for (int attempt = 0;; ++attempt) {
        if (attempt > 64) throw domain_error("q_pochhammer_inf: tail bound did not converge");
        BoundedFloat aqn = a * q.pow_int(n);
        if (certainly_less(aqn, one)) {
            tail = aqn / ((one - q) * (one - aqn));
            if (tail.at_most(eps)) break;
        }
        n = n + n / 4 + 8;
    }

    BoundedFloat prod = one;
    BoundedFloat aqk = a;
    for (long k = 0; k < n; ++k) {
        prod = prod * (one - aqk);
        aqk = aqk * q;
    }
    // Multiply by exp([-T_N, 0]) to absorb the discarded factors.
    return prod * exp(zero.hull(-tail));
}

/// Infinite q-Pochhammer for any parameter a < 1/q^J for a moderate J:
/// leading factors with a q^k >= 1 (or of ambiguous size) are peeled off as
/// exact interval products, (a; q)_inf = prod_{k<j} (1 - a q^k) * (a q^j; q)_inf,
/// which also yields an exact zero when some a q^k == 1.  Needed for values
/// such as a = q^mu with mu in (-1, 0].
inline BoundedFloat q_pochhammer_inf_ext(const BoundedFloat& a, const BoundedFloat& q,
                                         const Rational& eps = default_truncation_eps()) {
    const BoundedFloat one = BoundedFloat::from_long(1, a.precision());
    BoundedFloat head = one;
    BoundedFloat cur = a;
    for (int peel = 0; !certainly_less(cur, one); ++peel) {
        if (peel > 64)
            throw domain_error("q_pochhammer_inf_ext: parameter too far above 1 to peel");
        head = head * (one - cur);
        cur = cur * q;
    }
    if (!cur.at_least(Rational(0))) {
        // A peeled odd number of negative factors is fine; the remaining tail
        // parameter must be nonnegative for the log-based bound.
        throw domain_error("q_pochhammer_inf_ext: remaining parameter must be nonnegative");
    }
    return head * q_pochhammer_inf(cur, q, eps);
}

/// q-gamma at a positive integer argument, valid in both modes:
/// (1-q)^(1-n) * (q; q)_(n-1).
template <ScalarLike S>
S q_gamma(long n, const S& q) {
    if (n <= 0) throw domain_error("q_gamma: argument must be positive");
    const S one = make_scalar<S>(1L);
    return scalar_traits<S>::pow_int(one - q, 1 - n) * q_pochhammer(q, q, n - 1);
}

/// Exact-mode q-gamma: restricted to positive integer arguments.
inline Rational q_gamma(const Rational& z, const Rational& q, const Rational& = Rational(0)) {
    if (!z.is_integer() || z.sign_int() <= 0)
        throw mode_error("q_gamma: exact mode requires a positive integer argument");
    return q_gamma(z.to_long(), q);
}

/// Float-mode q-gamma for real z > 0:
/// (1-q)^(1-z) * (q; q)_inf / (q^z; q)_inf, both products eps-truncated
/// with certified tails.
inline BoundedFloat q_gamma(const BoundedFloat& z, const BoundedFloat& q,
                            const Rational& eps = default_truncation_eps()) {
    const BoundedFloat zero = BoundedFloat::from_long(0, z.precision());
    const BoundedFloat one = BoundedFloat::from_long(1, z.precision());
    if (!certainly_less(zero, z))
        throw domain_error("q_gamma: argument must be certified positive");
    BoundedFloat qz = pow(q, z);
    BoundedFloat base = q_pochhammer_inf(q, q, eps);
    BoundedFloat shifted = q_pochhammer_inf(qz, q, eps);
    return pow(one - q, one - z) * base / shifted;
}

/// Reciprocal q-gamma 1/Gamma_q(z) for any rational z (Float mode).  Poles
/// of Gamma_q at nonpositive integers become exact zeros here, which keeps
/// evaluation graceful on theorem boundaries.  Factors with nonpositive
/// shifted argument are peeled off exactly:
/// 1/Gamma_q(z) = (q^z; q)_inf * (1-q)^(z-1) / (q; q)_inf.
inline BoundedFloat inv_q_gamma(const Rational& z, const BoundedFloat& q,
                                const Rational& eps = default_truncation_eps()) {
    const BoundedFloat one = BoundedFloat::from_long(1, q.precision());
    // Peel factors (1 - q^(z+i)) until the remaining exponent is positive.
    BoundedFloat head = one;
    Rational zi = z;
    while (zi.sign_int() <= 0) {
        if (zi.is_zero()) return BoundedFloat::from_long(0, q.precision());
        head = head * (one - qpow(q, zi));
        zi += Rational(1);
    }
    BoundedFloat shifted = q_pochhammer_inf(qpow(q, zi), q, eps);
    BoundedFloat base = q_pochhammer_inf(q, q, eps);
    return head * shifted * pow(one - q, BoundedFloat::from_rational(z - Rational(1), q.precision())) / base;
}

/// Gamma-quotient in shifted-factorial form: for a = q^x and integer k >= 0,
/// Gamma_q(x+k)/Gamma_q(x) = (a; q)_k / (1-q)^k.  Exact in both modes.
template <ScalarLike S>
S q_gamma_ratio(const S& a, const S& q, long k) {
    if (k < 0) throw domain_error("q_gamma_ratio: negative shift");
    const S one = make_scalar<S>(1L);
    return q_pochhammer(a, q, k) / scalar_traits<S>::pow_int(one - q, k);
}

/// Signed-shift reciprocal quotient: Gamma_q(x)/Gamma_q(x+i) for v = q^x and
/// any integer i.  For i >= 0 this is (1-q)^i / (v; q)_i (requires
/// (v; q)_i != 0); for i < 0 it is (v q^i; q)_(-i) / (1-q)^(-i), which needs
/// no division at all.
template <ScalarLike S>
S q_gamma_shift_ratio(const S& v, const S& q, long i) {
    const S one = make_scalar<S>(1L);
    if (i >= 0) {
        S denom = q_pochhammer(v, q, i);
        if (sign_of(denom).is_zero())
            throw domain_error("q_gamma_shift_ratio: vanishing shifted factorial divisor");
        return scalar_traits<S>::pow_int(one - q, i) / denom;
    }
    S shifted_v = v * scalar_traits<S>::pow_int(q, i);
    return q_pochhammer(shifted_v, q, -i) / scalar_traits<S>::pow_int(one - q, -i);
}

/// Ladder of reciprocal q-gamma values 1/Gamma_q(z0 + k), k = 0..n, sharing
/// one pair of infinite products and then recurring upward via
/// 1/Gamma_q(z+1) = (1-q)/(1-q^z) * 1/Gamma_q(z).
inline std::vector<BoundedFloat> inv_q_gamma_ladder(const Rational& z0, const BoundedFloat& q,
                                                    long n,
                                                    const Rational& eps = default_truncation_eps()) {
    std::vector<BoundedFloat> out;
    out.reserve(static_cast<std::size_t>(n) + 1);
    const BoundedFloat one = BoundedFloat::from_long(1, q.precision());
    long k = 0;
    // Nonpositive arguments (and the first positive one) are computed directly.
    while (k <= n && (z0 + Rational(k)).sign_int() <= 0) {
        out.push_back(inv_q_gamma(z0 + Rational(k), q, eps));
        ++k;
    }
    if (k <= n) out.push_back(inv_q_gamma(z0 + Rational(k), q, eps));
    for (++k; k <= n; ++k) {
        Rational zprev = z0 + Rational(k - 1);
        out.push_back(out.back() * ((one - q) / (one - qpow(q, zprev))));
    }
    return out;
}

} // namespace qturan
