#pragma once

#include <mpfr.h>

#include <string>

#include "qturan/errors.hpp"
#include "qturan/rational.hpp"
#include "qturan/sign.hpp"

namespace qturan {

/// Directed-rounding interval scalar: a closed interval [lo, hi] of MPFR
/// floats that is guaranteed to contain the exact real value it stands for.
/// Every operation rounds outward, so enclosures are preserved under
/// arithmetic; sign queries return Undetermined when the enclosure straddles
/// zero.  This is the Float-mode scalar of the library.
///
/// Precision is per-value (bits of each endpoint); results carry the widest
/// operand precision.  The process-wide default precision is adjustable
/// (CLI `--prec`, environment `QTURAN_PREC`).
class BoundedFloat {
  public:
    static long default_precision();
    static void set_default_precision(long bits);

    BoundedFloat();
    explicit BoundedFloat(long prec_bits);
    BoundedFloat(const BoundedFloat& o);
    BoundedFloat(BoundedFloat&& o) noexcept;
    BoundedFloat& operator=(const BoundedFloat& o);
    BoundedFloat& operator=(BoundedFloat&& o) noexcept;
    ~BoundedFloat();

    /// Tightest enclosure of an exact rational at the given precision
    /// (0 = current default).
    static BoundedFloat from_rational(const Rational& r, long prec = 0);
    static BoundedFloat from_long(long n, long prec = 0);
    /// Exact point interval (doubles are representable exactly).
    static BoundedFloat from_double(double d, long prec = 0);
    /// Enclosure [lo, hi] of two exact rationals; requires lo <= hi.
    static BoundedFloat from_endpoints(const Rational& lo, const Rational& hi, long prec = 0);

    long precision() const;

    BoundedFloat operator-() const;
    friend BoundedFloat operator+(const BoundedFloat& a, const BoundedFloat& b);
    friend BoundedFloat operator-(const BoundedFloat& a, const BoundedFloat& b);
    friend BoundedFloat operator*(const BoundedFloat& a, const BoundedFloat& b);
    /// Requires the divisor enclosure to exclude zero.
    friend BoundedFloat operator/(const BoundedFloat& a, const BoundedFloat& b);
    BoundedFloat& operator+=(const BoundedFloat& o) { return *this = *this + o; }
    BoundedFloat& operator-=(const BoundedFloat& o) { return *this = *this - o; }
    BoundedFloat& operator*=(const BoundedFloat& o) { return *this = *this * o; }
    BoundedFloat& operator/=(const BoundedFloat& o) { return *this = *this / o; }

    /// Enclosure of |x|.
    BoundedFloat abs_enclosure() const;
    /// Integer power (interval binary exponentiation; negative exponents
    /// require an enclosure excluding zero).
    BoundedFloat pow_int(long e) const;

    friend BoundedFloat exp(const BoundedFloat& x);
    /// Requires a strictly positive enclosure.
    friend BoundedFloat log(const BoundedFloat& x);
    /// base^expo via exp(expo * log(base)); requires base > 0.
    friend BoundedFloat pow(const BoundedFloat& base, const BoundedFloat& expo);

    bool contains_zero() const;
    bool contains(const Rational& r) const;
    bool intersects(const BoundedFloat& o) const;
    bool is_point() const;
    /// Smallest interval containing both enclosures.
    BoundedFloat hull(const BoundedFloat& o) const;
    /// Enclosure of x + t for an unknown t in [0, delta_hi] — used to attach
    /// one-sided truncation-tail certificates.  `delta_hi` must be >= 0.
    BoundedFloat widen_upper(const BoundedFloat& delta) const;
    /// Enclosure of x + t for |t| <= delta_hi.
    BoundedFloat widen_symmetric(const BoundedFloat& delta) const;

    /// True when this enclosure's upper end lies strictly below o's lower end.
    bool definitely_less(const BoundedFloat& o) const;
    /// Certified x <= y: this enclosure's upper end is at most o's lower end.
    bool definitely_at_most(const BoundedFloat& o) const;
    /// Certified x <= r (upper endpoint at most r).
    bool at_most(const Rational& r) const;
    /// Certified x >= r (lower endpoint at least r).
    bool at_least(const Rational& r) const;

    double lo_double() const;
    double hi_double() const;
    double mid_double() const;
    double width_double() const;
    /// width / min|endpoint|; infinity when the enclosure touches zero.
    double rel_width_double() const;

    /// Deterministic "[lo, hi]" rendering (round-trip not required).
    std::string to_string(int digits = 20) const;
    /// Deterministic midpoint rendering for report columns.
    std::string mid_string(int digits = 20) const;

    SignVerdict sign() const;

    /// Raw endpoint access for the few call sites that need direct MPFR work.
    const mpfr_t& lo_raw() const { return lo_; }
    const mpfr_t& hi_raw() const { return hi_; }

  private:
    mpfr_t lo_;
    mpfr_t hi_;
};

inline SignVerdict sign_of(const BoundedFloat& x) { return x.sign(); }

BoundedFloat operator+(const BoundedFloat& a, const BoundedFloat& b);
BoundedFloat operator-(const BoundedFloat& a, const BoundedFloat& b);
BoundedFloat operator*(const BoundedFloat& a, const BoundedFloat& b);
BoundedFloat operator/(const BoundedFloat& a, const BoundedFloat& b);
BoundedFloat exp(const BoundedFloat& x);
BoundedFloat log(const BoundedFloat& x);
BoundedFloat pow(const BoundedFloat& base, const BoundedFloat& expo);

} // namespace qturan
