#pragma once

#include "qturan/series.hpp"

#include <string>
#include <vector>

namespace qturan {

/// Outcome of a coefficientwise or enclosure-based identity check.
struct IdentityReport {
    bool pass = false;
    bool certified = true;   ///< false when Float tails could not be certified
    long order = 0;
    std::string max_residual;
    std::string note;
};

// ---------------------------------------------------------------------------
// q-binomial theorem
// ---------------------------------------------------------------------------

/// Coefficientwise check of
///   sum_n (a;q)_n / (q;q)_n z^n  ==  (az;q)_inf / (z;q)_inf
/// to order M.  The right side is expanded independently through the two
/// Euler expansions — (az;q)_inf = sum_k (-1)^k q^(k(k-1)/2) a^k/(q;q)_k z^k
/// and 1/(z;q)_inf = sum_k z^k/(q;q)_k — convolved exactly.
inline IdentityReport verify_q_binomial(const Rational& a, const Rational& q, long M = 20) {
    if (M < 0) throw order_error("verify_q_binomial: negative order");
    QParams<Rational>{q, {}}.validate();
    if (a.sign_int() < 0 || Rational(1) < a)
        throw domain_error("verify_q_binomial: need 0 <= a <= 1");

    const std::vector<Rational> qpoch = q_pochhammer_table(q, q, M);
    const std::vector<Rational> apoch = q_pochhammer_table(a, q, M);

    std::vector<Rational> lhs, euler_num, euler_den;
    lhs.reserve(static_cast<std::size_t>(M) + 1);
    euler_num.reserve(static_cast<std::size_t>(M) + 1);
    euler_den.reserve(static_cast<std::size_t>(M) + 1);
    Rational apow(1), qtri(1);  // a^k and q^(k(k-1)/2)
    for (long k = 0; k <= M; ++k) {
        const auto uk = static_cast<std::size_t>(k);
        lhs.push_back(apoch[uk] / qpoch[uk]);
        Rational term = apow * qtri / qpoch[uk];
        if (k % 2 == 1) term = -term;
        euler_num.push_back(term);
        euler_den.push_back(Rational(1) / qpoch[uk]);
        apow = apow * a;
        qtri = qtri * q.pow_int(k);  // multiply by q^k: C(k+1,2) = C(k,2) + k
    }
    const TruncatedSeries<Rational> rhs =
        cauchy_product(TruncatedSeries<Rational>(std::move(euler_num)),
                       TruncatedSeries<Rational>(std::move(euler_den)));

    IdentityReport rep;
    rep.order = M;
    Rational worst(0);
    bool all_zero = true;
    for (long m = 0; m <= M; ++m) {
        const Rational diff =
            (lhs[static_cast<std::size_t>(m)] - rhs[static_cast<std::size_t>(m)]).abs();
        if (!diff.is_zero()) all_zero = false;
        if (worst < diff) worst = diff;
    }
    rep.pass = all_zero;
    rep.max_residual = worst.to_string();
    rep.note = "two-Euler-expansion convolution oracle";
    return rep;
}

// ---------------------------------------------------------------------------
// Symmetric q-Vandermonde product identity
// ---------------------------------------------------------------------------

/// Coefficientwise check of
///   1phi0(a;z) 1phi0(b;z) == 1phi0(ab;z) * 2phi1(a, b; abz; q; z)
/// to order M.  The right factor has the argument inside its lower parameter;
/// its k-th term is expanded exactly via
///   1/(abz;q)_k = sum_j (q^k;q)_j / (q;q)_j (ab)^j z^j
/// (an instance of the q-binomial theorem), then convolved.
inline IdentityReport verify_symmetric_vandermonde(const Rational& a, const Rational& b,
                                                   const Rational& q, long M = 16) {
    if (M < 0) throw order_error("verify_symmetric_vandermonde: negative order");
    QParams<Rational>{q, {}}.validate();
    for (const Rational* v : {&a, &b})
        if (v->sign_int() < 0 || Rational(1) < *v)
            throw domain_error("verify_symmetric_vandermonde: need 0 <= a, b <= 1");

    const std::vector<Rational> qpoch = q_pochhammer_table(q, q, M);
    auto one_phi_zero = [&](const Rational& v) {
        const std::vector<Rational> vp = q_pochhammer_table(v, q, M);
        std::vector<Rational> c;
        c.reserve(static_cast<std::size_t>(M) + 1);
        for (long n = 0; n <= M; ++n) {
            const auto un = static_cast<std::size_t>(n);
            c.push_back(vp[un] / qpoch[un]);
        }
        return TruncatedSeries<Rational>(std::move(c));
    };

    const TruncatedSeries<Rational> lhs =
        cauchy_product(one_phi_zero(a), one_phi_zero(b));

    // 2phi1(a,b;abz;q;z) coefficient of z^m:
    //   sum_{k<=m} (a;q)_k (b;q)_k / (q;q)_k * (q^k;q)_(m-k)/(q;q)_(m-k) (ab)^(m-k)
    const Rational ab = a * b;
    const std::vector<Rational> ap = q_pochhammer_table(a, q, M);
    const std::vector<Rational> bp = q_pochhammer_table(b, q, M);
    std::vector<Rational> phi21(static_cast<std::size_t>(M) + 1, Rational(0));
    for (long k = 0; k <= M; ++k) {
        const auto uk = static_cast<std::size_t>(k);
        const Rational head = ap[uk] * bp[uk] / qpoch[uk];
        const std::vector<Rational> shift = q_pochhammer_table(q.pow_int(k), q, M - k);
        Rational abpow(1);
        for (long j = 0; k + j <= M; ++j) {
            const auto uj = static_cast<std::size_t>(j);
            phi21[static_cast<std::size_t>(k + j)] =
                phi21[static_cast<std::size_t>(k + j)] +
                head * shift[uj] / qpoch[uj] * abpow;
            abpow = abpow * ab;
        }
    }
    const TruncatedSeries<Rational> rhs =
        cauchy_product(one_phi_zero(ab), TruncatedSeries<Rational>(std::move(phi21)));

    IdentityReport rep;
    rep.order = M;
    Rational worst(0);
    bool all_zero = true;
    for (long m = 0; m <= M; ++m) {
        const Rational diff =
            (lhs[static_cast<std::size_t>(m)] - rhs[static_cast<std::size_t>(m)]).abs();
        if (!diff.is_zero()) all_zero = false;
        if (worst < diff) worst = diff;
    }
    rep.pass = all_zero;
    rep.max_residual = worst.to_string();
    rep.note = "lower-parameter factor re-expanded via the q-binomial theorem";
    return rep;
}

// ---------------------------------------------------------------------------
// Heine q-Gauss summation
// ---------------------------------------------------------------------------

/// Certified-interval check of Heine's q-Gauss sum
///   2phi1(a, b; c; q; c/(ab)) == (c/a; q)_inf (c/b; q)_inf /
///                                ((c; q)_inf (c/(ab); q)_inf).
/// The series side is truncated at order M with a certified geometric tail;
/// the product side uses certified infinite products.  Passes when the two
/// enclosures are consistent (difference contains zero) with certified tails.
inline IdentityReport verify_heine_gauss(const BoundedFloat& a, const BoundedFloat& b,
                                         const BoundedFloat& c, const BoundedFloat& q,
                                         long M = 48,
                                         const Rational& eps = default_truncation_eps()) {
    QParams<BoundedFloat>{q, {}}.validate();
    const BoundedFloat one = BoundedFloat::from_long(1, q.precision());
    const BoundedFloat arg = c / (a * b);
    if (!arg.definitely_less(one))
        throw domain_error("verify_heine_gauss: series argument c/(ab) must be < 1");
    if (!certainly_less(BoundedFloat::from_long(0, q.precision()), arg))
        throw domain_error("verify_heine_gauss: need positive parameters with c/(ab) > 0");

    IdentityReport rep;
    rep.order = M;

    // Series side: terms t_n = (a;q)_n (b;q)_n / ((q;q)_n (c;q)_n) arg^n.
    const std::vector<BoundedFloat> ap = q_pochhammer_table(a, q, M + 1);
    const std::vector<BoundedFloat> bp = q_pochhammer_table(b, q, M + 1);
    const std::vector<BoundedFloat> cp = q_pochhammer_table(c, q, M + 1);
    const std::vector<BoundedFloat> qp = q_pochhammer_table(q, q, M + 1);
    BoundedFloat head = BoundedFloat::from_long(0, q.precision());
    BoundedFloat argpow = one;
    for (long n = 0; n <= M + 1; ++n) {
        const auto un = static_cast<std::size_t>(n);
        head = head + ap[un] * bp[un] / (qp[un] * cp[un]) * argpow;
        argpow = argpow * arg;
    }
    // Term-ratio bound for n >= M+1:
    //   |t_(n+1)/t_n| <= (1 + a q^(M+1)) (1 + b q^(M+1)) /
    //                    ((1 - q^(M+2)) (1 - c q^(M+1))) * arg
    const BoundedFloat qa = a * q.pow_int(M + 1);
    const BoundedFloat qb = b * q.pow_int(M + 1);
    const BoundedFloat qc = c * q.pow_int(M + 1);
    BoundedFloat lhs = head;
    bool certified = false;
    if (qc.definitely_less(one)) {
        const BoundedFloat rho = (one + qa) * (one + qb) /
                                 ((one - q.pow_int(M + 2)) * (one - qc)) * arg;
        if (certainly_less(rho, one)) {
            const auto ulast = static_cast<std::size_t>(M + 1);
            const BoundedFloat last =
                (ap[ulast] * bp[ulast] / (qp[ulast] * cp[ulast])).abs_enclosure() *
                arg.pow_int(M + 1).abs_enclosure();
            const BoundedFloat tail = (last * rho / (one - rho)).abs_enclosure();
            lhs = head.widen_symmetric(tail);
            certified = true;
        }
    }
    if (!certified) rep.note = "series tail not certified; ";

    // Product side.
    const BoundedFloat rhs = q_pochhammer_inf_ext(c / a, q, eps) *
                             q_pochhammer_inf_ext(c / b, q, eps) /
                             (q_pochhammer_inf_ext(c, q, eps) *
                              q_pochhammer_inf_ext(arg, q, eps));

    const BoundedFloat residual = lhs - rhs;
    rep.certified = certified;
    rep.pass = certified && residual.contains_zero();
    rep.max_residual = residual.to_string();
    rep.note += "series enclosure vs certified infinite-product quotient";
    return rep;
}

} // namespace qturan
