#pragma once

/// Ready-made series instances: the q-analogue modified Bessel pair, the
/// confluent pair in both shift roles, the Gauss-type series in both shift
/// roles, and the two general basic hypergeometric constructions — each
/// packaged as a FamilySpec whose base sequence satisfies the relevant
/// positivity hypothesis under the instance's stated parameter restrictions.
/// Also: the elementary-symmetric admissibility chain that certifies double
/// positivity of the general instances, certified evaluators for the
/// Bessel-type functions, the classical modified Bessel series used by the
/// q -> 1 sanity check, and a three-point concavity probe for the confluent
/// family.

#include <array>
#include <cstddef>
#include <functional>
#include <string>
#include <vector>

#include "qturan/errors.hpp"
#include "qturan/qcore.hpp"
#include "qturan/seqprops.hpp"
#include "qturan/series.hpp"
#include "qturan/turanian.hpp"

namespace qturan {

/// The named ready-made instances.
enum class ExampleName {
    QBessel1,
    QBessel2,
    QKummer1,
    QKummer2,
    Heine2phi1Upper,
    Heine2phi1Lower,
    RPlus1PhiS,
    RPhiSUnitDenominator,
};

inline const char* example_label(ExampleName n) {
    switch (n) {
        case ExampleName::QBessel1: return "QBessel1";
        case ExampleName::QBessel2: return "QBessel2";
        case ExampleName::QKummer1: return "QKummer1";
        case ExampleName::QKummer2: return "QKummer2";
        case ExampleName::Heine2phi1Upper: return "Heine2phi1Upper";
        case ExampleName::Heine2phi1Lower: return "Heine2phi1Lower";
        case ExampleName::RPlus1PhiS: return "RPlus1PhiS";
        default: return "RPhiSUnitDenominator";
    }
}

inline const std::array<ExampleName, 8>& all_example_names() {
    static const std::array<ExampleName, 8> names = {
        ExampleName::QBessel1,        ExampleName::QBessel2,
        ExampleName::QKummer1,        ExampleName::QKummer2,
        ExampleName::Heine2phi1Upper, ExampleName::Heine2phi1Lower,
        ExampleName::RPlus1PhiS,      ExampleName::RPhiSUnitDenominator,
    };
    return names;
}

/// Which parameter of the confluent pair carries the shift: Upper selects the
/// numerator parameter (family F, log-concave direction), Lower selects the
/// denominator parameter (family H, log-convex direction, with the stricter
/// 0 < a < q restriction that makes the base doubly positive).
enum class ShiftRole { Upper, Lower };

/// Parameter slots; each named instance reads the slots it needs.
template <ScalarLike S>
struct ExampleParams {
    Rational nu = Rational(1);  ///< Bessel order exponent; the family value is q^(nu+1)
    Rational mu = Rational(1);  ///< unit-denominator instance: gamma-argument exponent
    S a = make_scalar<S>(0L);   ///< numerator parameter value / free shifted value
    S b = make_scalar<S>(0L);   ///< confluent denominator / second numerator value
    S c = make_scalar<S>(0L);   ///< Gauss denominator value
    ShiftRole shift = ShiftRole::Upper;  ///< confluent instances only
    std::vector<Rational> alphas;  ///< general instances: numerator exponents
    std::vector<Rational> betas;   ///< general instances: denominator exponents
};

/// A named instance: the family mapping plus the metadata needed to
/// reconstruct the displayed function (stripped prefactor, argument map).
template <ScalarLike S>
struct NamedExample {
    ExampleName name = ExampleName::QBessel1;
    ExampleParams<S> params;
    FamilySpec<S> spec;           ///< family, base sequence, q, shifted-parameter value
    std::string prefactor = "1";  ///< explicit factor stripped from the displayed function
    std::string argument = "x";   ///< how the family argument maps to the displayed variable
    std::vector<std::string> notes;
};

/// m-th elementary symmetric polynomial of the entries of c, by the stable
/// prefix recurrence e_j <- e_j + c_i * e_{j-1} (exact in exact mode).
template <ScalarLike S>
S elementary_symmetric(long m, const std::vector<S>& c) {
    if (m < 0 || m > static_cast<long>(c.size()))
        throw order_error("elementary_symmetric: index must lie in [0, length]");
    std::vector<S> e(static_cast<std::size_t>(m) + 1, make_scalar<S>(0L));
    e[0] = make_scalar<S>(1L);
    long seen = 0;
    for (const S& ci : c) {
        ++seen;
        const long top = seen < m ? seen : m;
        for (long j = top; j >= 1; --j)
            e[static_cast<std::size_t>(j)] =
                e[static_cast<std::size_t>(j)] + ci * e[static_cast<std::size_t>(j - 1)];
    }
    return e[static_cast<std::size_t>(m)];
}

/// One link of the admissibility chain, stored as the sign of the
/// cross-multiplied gap (nonnegative = the link holds).
struct DecrLink {
    std::string label;
    SignVerdict gap;
    bool holds = false;
};

struct DecrReport {
    bool holds = false;       ///< every link decided and nonnegative
    bool certified = false;   ///< no link left undecided
    long first_failure = -1;  ///< index of the first certainly-failing link, or -1
    std::vector<DecrLink> links;
};

/// Admissibility chain for the general basic hypergeometric bases:
///     e_s(b)/e_r(a) <= e_{s-1}(b)/e_{r-1}(a) <= ... <= e_{s-r}(b),
/// where a_k = q^{-alpha_k} - 1 and b_k = q^{-beta_k} - 1.  All quantities
/// are positive, so each link is decided by the sign of the cross-multiplied
/// difference; exact scalars decide every link exactly.  Requires r <= s and
/// positive exponents.  The report lists each link and the first failure.
template <ScalarLike S>
DecrReport decr_condition(const std::vector<Rational>& alphas, const std::vector<Rational>& betas,
                          const S& q) {
    const long r = static_cast<long>(alphas.size());
    const long s = static_cast<long>(betas.size());
    if (r > s)
        throw order_error(
            "decr_condition: the chain needs the numerator list no longer than the denominator "
            "list (r <= s)");
    for (const Rational& e : alphas)
        if (e.sign_int() <= 0) throw domain_error("decr_condition: exponents must be positive");
    for (const Rational& e : betas)
        if (e.sign_int() <= 0) throw domain_error("decr_condition: exponents must be positive");
    QParams<S> env{q, {}};
    env.validate();

    const S one = make_scalar<S>(1L);
    std::vector<S> av, bv;
    av.reserve(alphas.size());
    bv.reserve(betas.size());
    for (const Rational& e : alphas) av.push_back(detail::quad_power(q, Rational(0) - e) - one);
    for (const Rational& e : betas) bv.push_back(detail::quad_power(q, Rational(0) - e) - one);

    std::vector<S> ea, eb;
    for (long j = 0; j <= r; ++j) ea.push_back(elementary_symmetric(j, av));
    for (long j = 0; j <= s; ++j) eb.push_back(elementary_symmetric(j, bv));

    DecrReport rep;
    rep.holds = true;
    rep.certified = true;
    for (long i = 0; i < r; ++i) {
        // Link i: e_{s-i}(b)/e_{r-i}(a) <= e_{s-i-1}(b)/e_{r-i-1}(a).
        const S gap = eb[static_cast<std::size_t>(s - i - 1)] * ea[static_cast<std::size_t>(r - i)] -
                      eb[static_cast<std::size_t>(s - i)] * ea[static_cast<std::size_t>(r - i - 1)];
        DecrLink link;
        link.label = "e_" + std::to_string(s - i) + "(b)/e_" + std::to_string(r - i) +
                     "(a) <= e_" + std::to_string(s - i - 1) + "(b)/e_" +
                     std::to_string(r - i - 1) + "(a)";
        link.gap = sign_of(gap);
        link.holds = link.gap.nonnegative();
        if (link.gap.is_undetermined()) {
            rep.certified = false;
            rep.holds = false;
        } else if (!link.holds) {
            rep.holds = false;
            if (rep.first_failure < 0) rep.first_failure = i;
        }
        rep.links.push_back(std::move(link));
    }
    return rep;
}

namespace detail {

/// Base of the general numerator/denominator instances:
///     q^{n(n-1)d/2} * prod_i (q^{alpha_i};q)_n / prod_j (q^{beta_j};q)_n,
/// n = 0..len-1, with d >= 0 the triangular-power multiplicity.
template <ScalarLike S>
std::vector<S> phi_ratio_base(const S& q, const std::vector<Rational>& alphas,
                              const std::vector<Rational>& betas, long d, long len) {
    const S one = make_scalar<S>(1L);
    std::vector<std::vector<S>> num, den;
    for (const Rational& e : alphas)
        num.push_back(q_pochhammer_table(detail::quad_power(q, e), q, len - 1));
    for (const Rational& e : betas)
        den.push_back(q_pochhammer_table(detail::quad_power(q, e), q, len - 1));
    std::vector<S> out;
    out.reserve(static_cast<std::size_t>(len));
    S tri = one;   // q^{n(n-1)d/2}
    S step = one;  // q^{nd}
    const S qd = scalar_traits<S>::pow_int(q, d);
    for (long n = 0; n < len; ++n) {
        S v = tri;
        for (const auto& t : num) v = v * t[static_cast<std::size_t>(n)];
        for (const auto& t : den) v = v / t[static_cast<std::size_t>(n)];
        out.push_back(v);
        tri = tri * step;
        step = step * qd;
    }
    return out;
}

}  // namespace detail

/// Build a named instance.  Validates the instance's stated restrictions and
/// throws a named error when one is violated; for the general instances the
/// admissibility chain (or, where the chain is not applicable, a certified
/// double-positivity check of the generated prefix) guards the hypothesis.
/// The returned base has M+2 entries, enough for series order M and for the
/// Turánian machinery at the same order.
template <ScalarLike S>
NamedExample<S> example_spec(ExampleName name, const ExampleParams<S>& params, const S& q,
                             long M = kDefaultOrder) {
    if (M < 0) throw order_error("example_spec: negative order");
    QParams<S> env{q, {}};
    env.validate();
    const long len = M + 2;
    const S one = make_scalar<S>(1L);
    const S zero = make_scalar<S>(0L);

    NamedExample<S> out;
    out.name = name;
    out.params = params;
    out.spec.q = q;

    switch (name) {
        case ExampleName::QBessel1:
        case ExampleName::QBessel2: {
            const Rational& nu = params.nu;
            if (!(Rational(-2) < nu))
                throw domain_error("bessel instance requires nu > -2");
            if (nu.is_integer() && nu.sign_int() < 0)
                throw domain_error("bessel instance: negative integer nu hits a gamma pole");
            out.spec.family = Family::G;
            out.spec.value = detail::quad_power(q, nu + Rational(1));
            std::vector<S> qpoch = q_pochhammer_table(q, q, len - 1);
            std::vector<S> base;
            base.reserve(static_cast<std::size_t>(len));
            S pw = one;    // (1-q)^n
            S tri = one;   // q^{n(n-1)}
            S step = one;  // q^{2n}
            S vpow = one;  // (q^{nu+1})^n
            const S qsq = q * q;
            for (long n = 0; n < len; ++n) {
                S v = one / (qpoch[static_cast<std::size_t>(n)] * pw);
                if (name == ExampleName::QBessel2) v = v * tri * vpow;
                base.push_back(v);
                pw = pw * (one - q);
                tri = tri * step;
                step = step * qsq;
                vpow = vpow * out.spec.value;
            }
            out.spec.base = std::move(base);
            out.prefactor = "(y/2)^nu * (1-q)^(-nu)";
            out.argument = "x = (y/2)^2";
            out.notes.push_back("family value is q^(nu+1)");
            if (name == ExampleName::QBessel2)
                out.notes.push_back(
                    "base carries q^(n^2+n*nu) = q^(n(n-1)) * (q^(nu+1))^n; entire in y");
            break;
        }
        case ExampleName::QKummer1:
        case ExampleName::QKummer2: {
            const bool triangular = (name == ExampleName::QKummer1);
            std::vector<S> qpoch = q_pochhammer_table(q, q, len - 1);
            std::vector<S> tri;  // q^{n(n-1)/2}
            {
                S t = one, step = one;
                for (long n = 0; n < len; ++n) {
                    tri.push_back(t);
                    t = t * step;
                    step = step * q;
                }
            }
            if (params.shift == ShiftRole::Upper) {
                if (!(certainly_less(zero, params.b) && certainly_less(params.b, one)))
                    throw domain_error("confluent instance requires 0 < b < 1");
                if (!certainly_less(zero, params.a))
                    throw domain_error("confluent instance: shifted parameter value must be positive");
                std::vector<S> bpoch = q_pochhammer_table(params.b, q, len - 1);
                std::vector<S> base;
                base.reserve(static_cast<std::size_t>(len));
                for (long n = 0; n < len; ++n) {
                    S v = one / bpoch[static_cast<std::size_t>(n)];
                    if (triangular) v = v * tri[static_cast<std::size_t>(n)];
                    base.push_back(v);
                }
                out.spec.family = Family::F;
                out.spec.base = std::move(base);
                out.spec.value = params.a;
                out.argument = triangular ? "series variable z with phi(a;b;z) = 1phi1(a;b;q;-z)"
                                          : "series variable z, |z| < 1";
            } else {
                if (!(certainly_less(zero, params.a) && certainly_less(params.a, q)))
                    throw domain_error(
                        "confluent instance (lower shift) requires 0 < a < q for double positivity");
                if (!(certainly_less(zero, params.b) && certainly_less(params.b, one)))
                    throw domain_error(
                        "confluent instance (lower shift): denominator value must lie in (0,1)");
                std::vector<S> apoch = q_pochhammer_table(params.a, q, len - 1);
                std::vector<S> base;
                base.reserve(static_cast<std::size_t>(len));
                for (long n = 0; n < len; ++n) {
                    S v = apoch[static_cast<std::size_t>(n)] / qpoch[static_cast<std::size_t>(n)];
                    if (triangular) v = v * tri[static_cast<std::size_t>(n)];
                    base.push_back(v);
                }
                out.spec.family = Family::H;
                out.spec.base = std::move(base);
                out.spec.value = params.b;
                out.argument = "series variable z, denominator parameter shifted";
                out.notes.push_back("log-convex direction; restriction 0 < a < q");
            }
            break;
        }
        case ExampleName::Heine2phi1Upper: {
            if (!(certainly_less(zero, params.b) && certainly_less(params.b, params.c) &&
                  certainly_less(params.c, one)))
                throw domain_error("upper-shift Gauss instance requires 0 < b < c < 1");
            if (!certainly_less(zero, params.a))
                throw domain_error("upper-shift Gauss instance: shifted parameter value must be positive");
            std::vector<S> bpoch = q_pochhammer_table(params.b, q, len - 1);
            std::vector<S> cpoch = q_pochhammer_table(params.c, q, len - 1);
            std::vector<S> base;
            base.reserve(static_cast<std::size_t>(len));
            for (long n = 0; n < len; ++n)
                base.push_back(bpoch[static_cast<std::size_t>(n)] /
                               cpoch[static_cast<std::size_t>(n)]);
            out.spec.family = Family::F;
            out.spec.base = std::move(base);
            out.spec.value = params.a;
            out.argument = "series variable x, |x| < 1";
            break;
        }
        case ExampleName::Heine2phi1Lower: {
            if (!(certainly_less(zero, params.a) && certainly_less(params.a, one)))
                throw domain_error("lower-shift Gauss instance requires 0 < a < 1");
            if (!(certainly_less(zero, params.b) && certainly_less(params.b, one)))
                throw domain_error("lower-shift Gauss instance requires 0 < b < 1");
            if (!(certainly_less(zero, params.c) && certainly_less(params.c, one)))
                throw domain_error(
                    "lower-shift Gauss instance: denominator value must lie in (0,1)");
            std::vector<S> apoch = q_pochhammer_table(params.a, q, len - 1);
            std::vector<S> bpoch = q_pochhammer_table(params.b, q, len - 1);
            std::vector<S> base;
            base.reserve(static_cast<std::size_t>(len));
            for (long n = 0; n < len; ++n)
                base.push_back(apoch[static_cast<std::size_t>(n)] *
                               bpoch[static_cast<std::size_t>(n)]);
            out.spec.family = Family::H;
            out.spec.base = std::move(base);
            out.spec.value = params.c;
            out.argument = "series variable x, denominator parameter shifted";
            break;
        }
        case ExampleName::RPlus1PhiS: {
            const long r = static_cast<long>(params.alphas.size());
            const long s = static_cast<long>(params.betas.size());
            if (r > s)
                throw domain_error("general numerator instance requires r <= s");
            if (!certainly_less(zero, params.a))
                throw domain_error("general numerator instance: shifted parameter value must be positive");
            DecrReport decr = decr_condition(params.alphas, params.betas, q);
            if (!decr.holds) {
                if (decr.certified && decr.first_failure >= 0)
                    throw domain_error(
                        "general numerator instance: admissibility chain fails at link " +
                        std::to_string(decr.first_failure) + " (" +
                        decr.links[static_cast<std::size_t>(decr.first_failure)].label + ")");
                throw domain_error(
                    "general numerator instance: admissibility chain could not be certified");
            }
            out.spec.family = Family::F;
            out.spec.base = detail::phi_ratio_base(q, params.alphas, params.betas, s - r, len);
            out.spec.value = params.a;
            out.argument = "phi-series argument z = (-1)^(s-r) x";
            out.notes.push_back("admissibility chain verified (" +
                                std::to_string(decr.links.size()) + " links)");
            break;
        }
        case ExampleName::RPhiSUnitDenominator: {
            const long r = static_cast<long>(params.alphas.size());
            const long s = static_cast<long>(params.betas.size());
            if (s < 1 || !(params.betas.back() == Rational(1)))
                throw domain_error(
                    "unit-denominator instance requires beta_s = 1 (append the unit exponent as "
                    "the last denominator entry)");
            if (r > s + 1)
                throw domain_error("unit-denominator instance requires r <= s+1");
            const Rational& mu = params.mu;
            if (!(Rational(-1) < mu))
                throw domain_error("unit-denominator instance requires mu > -1");
            if (mu.is_integer() && mu.sign_int() <= 0)
                throw domain_error(
                    "unit-denominator instance: nonpositive integer mu hits a gamma pole");
            out.spec.family = Family::G;
            out.spec.base = detail::phi_ratio_base(q, params.alphas, params.betas, 1 + s - r, len);
            out.spec.value = detail::quad_power(q, mu);
            out.prefactor = "1/Gamma_q(mu)";
            out.argument = "phi-series argument z = (1-q) * (-1)^(1+s-r) x";
            if (r <= s) {
                DecrReport decr = decr_condition(params.alphas, params.betas, q);
                if (!decr.holds) {
                    if (decr.certified && decr.first_failure >= 0)
                        throw domain_error(
                            "unit-denominator instance: admissibility chain fails at link " +
                            std::to_string(decr.first_failure) + " (" +
                            decr.links[static_cast<std::size_t>(decr.first_failure)].label + ")");
                    throw domain_error(
                        "unit-denominator instance: admissibility chain could not be certified");
                }
                out.notes.push_back("admissibility chain verified (" +
                                    std::to_string(decr.links.size()) + " links)");
            } else {
                // r = s+1: the chain is not applicable; certify double
                // positivity of the generated prefix directly.
                SequenceProfile prof = is_doubly_positive(out.spec.base);
                if (!(prof.doubly_positive && prof.certified))
                    throw domain_error(
                        "unit-denominator instance: double positivity of the base prefix could "
                        "not be certified for r = s+1");
                out.notes.push_back("r = s+1: double positivity certified on the generated prefix");
            }
            break;
        }
    }
    return out;
}

/// Certified value of the q-analogue modified Bessel function
///     I_nu(y; q) = (y/2)^nu (1-q)^(-nu) sum_n c_n (y/2)^(2n) / Gamma_q(nu+n+1),
/// where c_n = 1/((q;q)_n (1-q)^n) for variant 1 and the same times
/// q^(n^2+n*nu) for variant 2.  The truncation tail is bounded by a geometric
/// majorant and folded into the enclosure, so the bracket is rigorous.
/// Requires nu > -1 and an argument small enough for the tail ratio to
/// certify below one (variant 1 converges only for y < 2).
inline BoundedFloat q_bessel_i(long variant, const Rational& nu, const BoundedFloat& y,
                               const BoundedFloat& q, long M = kDefaultOrder,
                               const Rational& eps = default_truncation_eps()) {
    if (variant != 1 && variant != 2)
        throw domain_error("q_bessel_i: variant must be 1 or 2");
    if (M < 1) throw order_error("q_bessel_i: order must be at least 1");
    QParams<BoundedFloat> env{q, {}};
    env.validate();
    const BoundedFloat one = BoundedFloat::from_long(1, q.precision());
    const BoundedFloat zero = BoundedFloat::from_long(0, q.precision());
    if (!(Rational(-1) < nu)) throw domain_error("q_bessel_i: requires nu > -1");
    if (!certainly_less(zero, y)) throw domain_error("q_bessel_i: argument must be positive");

    const BoundedFloat half = one / BoundedFloat::from_long(2, q.precision());
    const BoundedFloat yh = y * half;
    const BoundedFloat x = yh * yh;
    const BoundedFloat qnu = qpow(q, nu);
    const BoundedFloat vnu1 = qnu * q;  // q^(nu+1)

    std::vector<BoundedFloat> invg = inv_q_gamma_ladder(nu + Rational(1), q, M + 1, eps);
    std::vector<BoundedFloat> qpoch = q_pochhammer_table(q, q, M + 1);

    BoundedFloat head = zero;
    BoundedFloat t_last = zero;
    {
        BoundedFloat pw = one;    // (1-q)^n
        BoundedFloat xpw = one;   // x^n
        BoundedFloat tri = one;   // q^{n(n-1)}
        BoundedFloat step = one;  // q^{2n}
        BoundedFloat vpow = one;  // (q^{nu+1})^n
        const BoundedFloat qsq = q * q;
        for (long n = 0; n <= M + 1; ++n) {
            BoundedFloat term =
                xpw * invg[static_cast<std::size_t>(n)] / (qpoch[static_cast<std::size_t>(n)] * pw);
            if (variant == 2) term = term * tri * vpow;
            if (n <= M)
                head = head + term;
            else
                t_last = term;
            pw = pw * (one - q);
            xpw = xpw * x;
            tri = tri * step;
            step = step * qsq;
            vpow = vpow * vnu1;
        }
    }
    // Term ratio at index n:  x / ((1-q^{n+1})(1-q^{nu+n+1})), times
    // q^{2n+1+nu} for variant 2 — decreasing in n, so its value at n = M+1
    // majorises every later ratio.
    BoundedFloat rho = x / ((one - q.pow_int(M + 2)) * (one - vnu1 * q.pow_int(M + 1)));
    if (variant == 2) rho = rho * qnu * q.pow_int(2 * M + 3);
    if (!certainly_less(rho, one))
        throw domain_error(
            "q_bessel_i: truncation tail not certified; increase the order or shrink the argument");
    const BoundedFloat tail_hi = t_last / (one - rho);
    const BoundedFloat series = head + t_last.hull(tail_hi);
    const BoundedFloat prefactor = qpow(yh / (one - q), nu);
    return prefactor * series;
}

/// Classical modified Bessel function of integer order by its power series,
/// with a certified geometric tail.
inline BoundedFloat classical_bessel_i(long nu, const BoundedFloat& y, long M = 30) {
    if (nu < 0) throw domain_error("classical_bessel_i: integer order must be nonnegative");
    if (M < 1) throw order_error("classical_bessel_i: order must be at least 1");
    const BoundedFloat one = BoundedFloat::from_long(1, y.precision());
    const BoundedFloat zero = BoundedFloat::from_long(0, y.precision());
    if (!certainly_less(zero, y)) throw domain_error("classical_bessel_i: argument must be positive");
    const BoundedFloat half = one / BoundedFloat::from_long(2, y.precision());
    const BoundedFloat yh = y * half;
    const BoundedFloat x = yh * yh;

    BoundedFloat fact = one;  // nu!
    for (long k = 2; k <= nu; ++k) fact = fact * BoundedFloat::from_long(k, y.precision());
    BoundedFloat term = yh.pow_int(nu) / fact;  // t_0
    BoundedFloat head = zero;
    BoundedFloat t_last = zero;
    for (long n = 0; n <= M + 1; ++n) {
        if (n <= M)
            head = head + term;
        else
            t_last = term;
        term = term * x /
               (BoundedFloat::from_long(n + 1, y.precision()) *
                BoundedFloat::from_long(n + nu + 1, y.precision()));
    }
    const BoundedFloat rho =
        x / (BoundedFloat::from_long(M + 2, y.precision()) *
             BoundedFloat::from_long(M + nu + 2, y.precision()));
    if (!certainly_less(rho, one))
        throw domain_error("classical_bessel_i: truncation tail not certified; increase the order");
    const BoundedFloat tail_hi = t_last / (one - rho);
    return head + t_last.hull(tail_hi);
}

/// One row of the Bessel-type sandwich
///     (y/2)^(2nu) q^nu (1-q)^(-2nu) / ([nu+1]_q Gamma_q(nu+1)^2)
///         <= I_nu^2 - I_{nu-1} I_{nu+1}
///         <= q^nu / [nu+1]_q * I_nu^2,
/// evaluated in certified interval arithmetic.
struct BesselTuranRow {
    BoundedFloat lower, middle, upper;
    bool lower_ok = false;   ///< lower <= middle certified
    bool upper_ok = false;   ///< middle <= upper certified
    bool undecided = false;  ///< a comparison could not be certified either way
};

inline BesselTuranRow q_bessel_turan_row(long variant, const Rational& nu, const BoundedFloat& y,
                                         const BoundedFloat& q, long M = kDefaultOrder,
                                         const Rational& eps = default_truncation_eps()) {
    if (!(Rational(0) < nu))
        throw domain_error("q_bessel_turan_row: requires nu > 0 (the order nu-1 must stay above -1)");
    const BoundedFloat one = BoundedFloat::from_long(1, q.precision());
    const BoundedFloat half = one / BoundedFloat::from_long(2, q.precision());
    const BoundedFloat i0 = q_bessel_i(variant, nu, y, q, M, eps);
    const BoundedFloat im = q_bessel_i(variant, nu - Rational(1), y, q, M, eps);
    const BoundedFloat ip = q_bessel_i(variant, nu + Rational(1), y, q, M, eps);

    BesselTuranRow row;
    row.middle = i0 * i0 - im * ip;
    const BoundedFloat qnu = qpow(q, nu);
    const BoundedFloat bracket = (one - qnu * q) / (one - q);  // [nu+1]_q
    const BoundedFloat invg1 = inv_q_gamma(nu + Rational(1), q, eps);
    row.lower = qpow((y * half) / (one - q), Rational(2) * nu) * qnu * invg1 * invg1 / bracket;
    row.upper = qnu / bracket * i0 * i0;
    row.lower_ok = row.lower.definitely_at_most(row.middle);
    row.upper_ok = row.middle.definitely_at_most(row.upper);
    const bool lower_violated = row.middle.definitely_less(row.lower);
    const bool upper_violated = row.upper.definitely_less(row.middle);
    row.undecided = (!row.lower_ok && !lower_violated) || (!row.upper_ok && !upper_violated);
    return row;
}

/// q -> 1 sanity row: the q-analogue at argument (1-q)y approaches the
/// classical modified Bessel function at argument y.
struct BesselLimitRow {
    BoundedFloat q_value, classical_value, relative_gap;
    bool within_tolerance = false;
};

inline BesselLimitRow q_bessel_limit_row(long variant, long nu, const BoundedFloat& y,
                                         const BoundedFloat& q, long M = 24,
                                         const Rational& eps = default_truncation_eps(),
                                         const Rational& tol = Rational(1, 100)) {
    if (nu < 0) throw domain_error("q_bessel_limit_row: integer order must be nonnegative");
    const BoundedFloat one = BoundedFloat::from_long(1, q.precision());
    BesselLimitRow row;
    row.q_value = q_bessel_i(variant, Rational(nu), (one - q) * y, q, M, eps);
    row.classical_value = classical_bessel_i(nu, y, M);
    row.relative_gap = ((row.q_value - row.classical_value) / row.classical_value).abs_enclosure();
    row.within_tolerance =
        certainly_less(row.relative_gap, BoundedFloat::from_rational(tol, q.precision()));
    return row;
}

/// Certified value of the confluent series at parameter value a:
///     sum_n [q^{n(n-1)/2}]^{variant==1} (a;q)_n x^n / ((b;q)_n (q;q)_n).
/// Requires 0 < a <= 1, 0 < b < 1 and an argument small enough for the tail
/// ratio to certify below one.
inline BoundedFloat q_kummer_value(long variant, const BoundedFloat& a_value, const BoundedFloat& b,
                                   const BoundedFloat& q, const BoundedFloat& x,
                                   long M = kDefaultOrder) {
    if (variant != 1 && variant != 2)
        throw domain_error("q_kummer_value: variant must be 1 or 2");
    if (M < 1) throw order_error("q_kummer_value: order must be at least 1");
    QParams<BoundedFloat> env{q, {}};
    env.validate();
    const BoundedFloat one = BoundedFloat::from_long(1, q.precision());
    const BoundedFloat zero = BoundedFloat::from_long(0, q.precision());
    if (!certainly_less(zero, a_value) || !a_value.at_most(Rational(1)))
        throw domain_error("q_kummer_value: parameter value must lie in (0,1]");
    if (!(certainly_less(zero, b) && certainly_less(b, one)))
        throw domain_error("q_kummer_value: requires 0 < b < 1");
    if (!certainly_less(zero, x)) throw domain_error("q_kummer_value: argument must be positive");

    std::vector<BoundedFloat> apoch = q_pochhammer_table(a_value, q, M + 1);
    std::vector<BoundedFloat> bpoch = q_pochhammer_table(b, q, M + 1);
    std::vector<BoundedFloat> qpoch = q_pochhammer_table(q, q, M + 1);
    BoundedFloat head = zero;
    BoundedFloat t_last = zero;
    {
        BoundedFloat xpw = one;
        BoundedFloat tri = one;   // q^{n(n-1)/2}
        BoundedFloat step = one;  // q^n
        for (long n = 0; n <= M + 1; ++n) {
            BoundedFloat term = apoch[static_cast<std::size_t>(n)] * xpw /
                                (bpoch[static_cast<std::size_t>(n)] *
                                 qpoch[static_cast<std::size_t>(n)]);
            if (variant == 1) term = term * tri;
            if (n <= M)
                head = head + term;
            else
                t_last = term;
            xpw = xpw * x;
            tri = tri * step;
            step = step * q;
        }
    }
    // Term ratio at index n: (1 - a q^n) x / ((1 - b q^n)(1 - q^{n+1})),
    // times q^n for variant 1; bounded for n >= M+1 by rho below.
    BoundedFloat rho = x / ((one - b * q.pow_int(M + 1)) * (one - q.pow_int(M + 2)));
    if (variant == 1) rho = rho * q.pow_int(M + 1);
    if (!certainly_less(rho, one))
        throw domain_error(
            "q_kummer_value: truncation tail not certified; increase the order or shrink the "
            "argument");
    const BoundedFloat tail_hi = t_last / (one - rho);
    return head + t_last.hull(tail_hi);
}

/// Three-point log-concavity probe for the confluent function in its upper
/// parameter: the sign of  f(q^t)^2 - f(q^{t-m}) f(q^{t+m})  at fixed
/// argument x (positive means the strict three-point inequality holds).
/// Requires t >= m so all three parameter values lie in (0,1].
inline SignVerdict kummer_concavity_probe(long variant, const Rational& t, long m,
                                          const BoundedFloat& b, const BoundedFloat& q,
                                          const BoundedFloat& x, long M = kDefaultOrder) {
    if (m <= 0) throw domain_error("kummer_concavity_probe: shift must be positive");
    if (t < Rational(m))
        throw domain_error(
            "kummer_concavity_probe: requires t >= m so all three parameter values lie in (0,1]");
    std::function<BoundedFloat(const BoundedFloat&)> eval =
        [&](const BoundedFloat& v) { return q_kummer_value(variant, v, b, q, x, M); };
    return check_gg_three_point<BoundedFloat>(eval, qpow(q, t), q.pow_int(m),
                                              GGDirection::Concave);
}

}  // namespace qturan
