#include "qturan/bounded_float.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdio>
#include <vector>

namespace qturan {

namespace {

std::atomic<long> g_default_prec{128};

long resolve_prec(long prec) { return prec > 0 ? prec : g_default_prec.load(); }

// min/max over a set of mpfr candidates, written into `out`.
void assign_min(mpfr_t out, const std::vector<const __mpfr_struct*>& xs) {
    mpfr_set(out, xs[0], MPFR_RNDD);
    for (std::size_t i = 1; i < xs.size(); ++i)
        if (mpfr_cmp(xs[i], out) < 0) mpfr_set(out, xs[i], MPFR_RNDD);
}
void assign_max(mpfr_t out, const std::vector<const __mpfr_struct*>& xs) {
    mpfr_set(out, xs[0], MPFR_RNDU);
    for (std::size_t i = 1; i < xs.size(); ++i)
        if (mpfr_cmp(xs[i], out) > 0) mpfr_set(out, xs[i], MPFR_RNDU);
}

} // namespace

long BoundedFloat::default_precision() { return g_default_prec.load(); }

void BoundedFloat::set_default_precision(long bits) {
    if (bits < 16 || bits > 1 << 20)
        throw domain_error("BoundedFloat: precision must lie in [16, 2^20] bits");
    g_default_prec.store(bits);
}

BoundedFloat::BoundedFloat() : BoundedFloat(resolve_prec(0)) {}

BoundedFloat::BoundedFloat(long prec_bits) {
    mpfr_init2(lo_, resolve_prec(prec_bits));
    mpfr_init2(hi_, resolve_prec(prec_bits));
    mpfr_set_zero(lo_, 1);
    mpfr_set_zero(hi_, 1);
}

BoundedFloat::BoundedFloat(const BoundedFloat& o) {
    mpfr_init2(lo_, mpfr_get_prec(o.lo_));
    mpfr_init2(hi_, mpfr_get_prec(o.hi_));
    mpfr_set(lo_, o.lo_, MPFR_RNDD);
    mpfr_set(hi_, o.hi_, MPFR_RNDU);
}

BoundedFloat::BoundedFloat(BoundedFloat&& o) noexcept {
    mpfr_init2(lo_, mpfr_get_prec(o.lo_));
    mpfr_init2(hi_, mpfr_get_prec(o.hi_));
    mpfr_swap(lo_, o.lo_);
    mpfr_swap(hi_, o.hi_);
}

BoundedFloat& BoundedFloat::operator=(const BoundedFloat& o) {
    if (this != &o) {
        mpfr_set_prec(lo_, mpfr_get_prec(o.lo_));
        mpfr_set_prec(hi_, mpfr_get_prec(o.hi_));
        mpfr_set(lo_, o.lo_, MPFR_RNDD);
        mpfr_set(hi_, o.hi_, MPFR_RNDU);
    }
    return *this;
}

BoundedFloat& BoundedFloat::operator=(BoundedFloat&& o) noexcept {
    if (this != &o) {
        mpfr_swap(lo_, o.lo_);
        mpfr_swap(hi_, o.hi_);
    }
    return *this;
}

BoundedFloat::~BoundedFloat() {
    mpfr_clear(lo_);
    mpfr_clear(hi_);
}

BoundedFloat BoundedFloat::from_rational(const Rational& r, long prec) {
    BoundedFloat x(resolve_prec(prec));
    mpfr_set_q(x.lo_, r.raw().get_mpq_t(), MPFR_RNDD);
    mpfr_set_q(x.hi_, r.raw().get_mpq_t(), MPFR_RNDU);
    return x;
}

BoundedFloat BoundedFloat::from_long(long n, long prec) {
    BoundedFloat x(resolve_prec(prec));
    mpfr_set_si(x.lo_, n, MPFR_RNDD);
    mpfr_set_si(x.hi_, n, MPFR_RNDU);
    return x;
}

BoundedFloat BoundedFloat::from_double(double d, long prec) {
    if (!std::isfinite(d)) throw domain_error("BoundedFloat: non-finite double");
    BoundedFloat x(resolve_prec(prec));
    mpfr_set_d(x.lo_, d, MPFR_RNDD);
    mpfr_set_d(x.hi_, d, MPFR_RNDU);
    return x;
}

BoundedFloat BoundedFloat::from_endpoints(const Rational& lo, const Rational& hi, long prec) {
    if (lo > hi) throw domain_error("BoundedFloat: endpoints out of order");
    BoundedFloat x(resolve_prec(prec));
    mpfr_set_q(x.lo_, lo.raw().get_mpq_t(), MPFR_RNDD);
    mpfr_set_q(x.hi_, hi.raw().get_mpq_t(), MPFR_RNDU);
    return x;
}

long BoundedFloat::precision() const { return mpfr_get_prec(lo_); }

BoundedFloat BoundedFloat::operator-() const {
    BoundedFloat r(precision());
    mpfr_neg(r.lo_, hi_, MPFR_RNDD);
    mpfr_neg(r.hi_, lo_, MPFR_RNDU);
    return r;
}

BoundedFloat operator+(const BoundedFloat& a, const BoundedFloat& b) {
    BoundedFloat r(std::max(a.precision(), b.precision()));
    mpfr_add(r.lo_, a.lo_, b.lo_, MPFR_RNDD);
    mpfr_add(r.hi_, a.hi_, b.hi_, MPFR_RNDU);
    return r;
}

BoundedFloat operator-(const BoundedFloat& a, const BoundedFloat& b) {
    BoundedFloat r(std::max(a.precision(), b.precision()));
    mpfr_sub(r.lo_, a.lo_, b.hi_, MPFR_RNDD);
    mpfr_sub(r.hi_, a.hi_, b.lo_, MPFR_RNDU);
    return r;
}

BoundedFloat operator*(const BoundedFloat& a, const BoundedFloat& b) {
    BoundedFloat r(std::max(a.precision(), b.precision()));
    // Fast path: both enclosures nonnegative (the common case in q-series
    // work, where factors live in (0, 1]).
    if (mpfr_sgn(a.lo_) >= 0 && mpfr_sgn(b.lo_) >= 0) {
        mpfr_mul(r.lo_, a.lo_, b.lo_, MPFR_RNDD);
        mpfr_mul(r.hi_, a.hi_, b.hi_, MPFR_RNDU);
        return r;
    }
    mpfr_t c[4];
    for (auto& x : c) mpfr_init2(x, r.precision());
    mpfr_mul(c[0], a.lo_, b.lo_, MPFR_RNDD);
    mpfr_mul(c[1], a.lo_, b.hi_, MPFR_RNDD);
    mpfr_mul(c[2], a.hi_, b.lo_, MPFR_RNDD);
    mpfr_mul(c[3], a.hi_, b.hi_, MPFR_RNDD);
    assign_min(r.lo_, {c[0], c[1], c[2], c[3]});
    mpfr_mul(c[0], a.lo_, b.lo_, MPFR_RNDU);
    mpfr_mul(c[1], a.lo_, b.hi_, MPFR_RNDU);
    mpfr_mul(c[2], a.hi_, b.lo_, MPFR_RNDU);
    mpfr_mul(c[3], a.hi_, b.hi_, MPFR_RNDU);
    assign_max(r.hi_, {c[0], c[1], c[2], c[3]});
    for (auto& x : c) mpfr_clear(x);
    return r;
}

BoundedFloat operator/(const BoundedFloat& a, const BoundedFloat& b) {
    if (b.contains_zero())
        throw domain_error("BoundedFloat: division by an enclosure containing zero");
    BoundedFloat r(std::max(a.precision(), b.precision()));
    if (mpfr_sgn(a.lo_) >= 0 && mpfr_sgn(b.lo_) > 0) {
        mpfr_div(r.lo_, a.lo_, b.hi_, MPFR_RNDD);
        mpfr_div(r.hi_, a.hi_, b.lo_, MPFR_RNDU);
        return r;
    }
    mpfr_t c[4];
    for (auto& x : c) mpfr_init2(x, r.precision());
    mpfr_div(c[0], a.lo_, b.lo_, MPFR_RNDD);
    mpfr_div(c[1], a.lo_, b.hi_, MPFR_RNDD);
    mpfr_div(c[2], a.hi_, b.lo_, MPFR_RNDD);
    mpfr_div(c[3], a.hi_, b.hi_, MPFR_RNDD);
    assign_min(r.lo_, {c[0], c[1], c[2], c[3]});
    mpfr_div(c[0], a.lo_, b.lo_, MPFR_RNDU);
    mpfr_div(c[1], a.lo_, b.hi_, MPFR_RNDU);
    mpfr_div(c[2], a.hi_, b.lo_, MPFR_RNDU);
    mpfr_div(c[3], a.hi_, b.hi_, MPFR_RNDU);
    assign_max(r.hi_, {c[0], c[1], c[2], c[3]});
    for (auto& x : c) mpfr_clear(x);
    return r;
}

BoundedFloat BoundedFloat::abs_enclosure() const {
    BoundedFloat r(precision());
    if (mpfr_sgn(lo_) >= 0) return *this;
    if (mpfr_sgn(hi_) <= 0) return -*this;
    // Straddles zero: [0, max(|lo|, hi)].
    mpfr_set_zero(r.lo_, 1);
    mpfr_neg(r.hi_, lo_, MPFR_RNDU);
    if (mpfr_cmp(hi_, r.hi_) > 0) mpfr_set(r.hi_, hi_, MPFR_RNDU);
    return r;
}

BoundedFloat BoundedFloat::pow_int(long e) const {
    if (e == 0) return from_long(1, precision());
    if (e < 0) return from_long(1, precision()) / pow_int(-e);
    // Interval binary exponentiation; sound for every sign pattern.
    BoundedFloat base = *this;
    BoundedFloat acc = from_long(1, precision());
    unsigned long k = static_cast<unsigned long>(e);
    while (k > 0) {
        if (k & 1ul) acc = acc * base;
        k >>= 1;
        if (k > 0) base = base * base;
    }
    return acc;
}

BoundedFloat exp(const BoundedFloat& x) {
    BoundedFloat r(x.precision());
    mpfr_exp(r.lo_, x.lo_, MPFR_RNDD);
    mpfr_exp(r.hi_, x.hi_, MPFR_RNDU);
    return r;
}

BoundedFloat log(const BoundedFloat& x) {
    if (mpfr_sgn(x.lo_) <= 0)
        throw domain_error("BoundedFloat: log requires a strictly positive enclosure");
    BoundedFloat r(x.precision());
    mpfr_log(r.lo_, x.lo_, MPFR_RNDD);
    mpfr_log(r.hi_, x.hi_, MPFR_RNDU);
    return r;
}

BoundedFloat pow(const BoundedFloat& base, const BoundedFloat& expo) {
    return exp(expo * log(base));
}

bool BoundedFloat::contains_zero() const {
    return mpfr_sgn(lo_) <= 0 && mpfr_sgn(hi_) >= 0;
}

bool BoundedFloat::contains(const Rational& r) const {
    return mpfr_cmp_q(lo_, r.raw().get_mpq_t()) <= 0 &&
           mpfr_cmp_q(hi_, r.raw().get_mpq_t()) >= 0;
}

bool BoundedFloat::intersects(const BoundedFloat& o) const {
    return mpfr_cmp(lo_, o.hi_) <= 0 && mpfr_cmp(o.lo_, hi_) <= 0;
}

bool BoundedFloat::is_point() const { return mpfr_cmp(lo_, hi_) == 0; }

BoundedFloat BoundedFloat::hull(const BoundedFloat& o) const {
    BoundedFloat r(std::max(precision(), o.precision()));
    mpfr_set(r.lo_, mpfr_cmp(lo_, o.lo_) <= 0 ? lo_ : o.lo_, MPFR_RNDD);
    mpfr_set(r.hi_, mpfr_cmp(hi_, o.hi_) >= 0 ? hi_ : o.hi_, MPFR_RNDU);
    return r;
}

BoundedFloat BoundedFloat::widen_upper(const BoundedFloat& delta) const {
    if (mpfr_sgn(delta.lo_) < 0)
        throw domain_error("BoundedFloat: tail certificate must be nonnegative");
    BoundedFloat r(*this);
    mpfr_add(r.hi_, hi_, delta.hi_, MPFR_RNDU);
    return r;
}

BoundedFloat BoundedFloat::widen_symmetric(const BoundedFloat& delta) const {
    if (mpfr_sgn(delta.lo_) < 0)
        throw domain_error("BoundedFloat: tail certificate must be nonnegative");
    BoundedFloat r(*this);
    mpfr_sub(r.lo_, lo_, delta.hi_, MPFR_RNDD);
    mpfr_add(r.hi_, hi_, delta.hi_, MPFR_RNDU);
    return r;
}

bool BoundedFloat::definitely_less(const BoundedFloat& o) const {
    return mpfr_cmp(hi_, o.lo_) < 0;
}

bool BoundedFloat::definitely_at_most(const BoundedFloat& o) const {
    return mpfr_cmp(hi_, o.lo_) <= 0;
}

bool BoundedFloat::at_most(const Rational& r) const {
    return mpfr_cmp_q(hi_, r.raw().get_mpq_t()) <= 0;
}

bool BoundedFloat::at_least(const Rational& r) const {
    return mpfr_cmp_q(lo_, r.raw().get_mpq_t()) >= 0;
}

double BoundedFloat::lo_double() const { return mpfr_get_d(lo_, MPFR_RNDD); }
double BoundedFloat::hi_double() const { return mpfr_get_d(hi_, MPFR_RNDU); }

double BoundedFloat::mid_double() const {
    mpfr_t m;
    mpfr_init2(m, precision());
    mpfr_add(m, lo_, hi_, MPFR_RNDN);
    mpfr_div_ui(m, m, 2, MPFR_RNDN);
    double d = mpfr_get_d(m, MPFR_RNDN);
    mpfr_clear(m);
    return d;
}

double BoundedFloat::width_double() const {
    mpfr_t w;
    mpfr_init2(w, precision());
    mpfr_sub(w, hi_, lo_, MPFR_RNDU);
    double d = mpfr_get_d(w, MPFR_RNDU);
    mpfr_clear(w);
    return d;
}

double BoundedFloat::rel_width_double() const {
    if (contains_zero()) {
        return is_point() ? 0.0 : std::numeric_limits<double>::infinity();
    }
    double w = width_double();
    double m = std::min(std::abs(lo_double()), std::abs(hi_double()));
    return w / m;
}

namespace {
std::string format_one(const mpfr_t& x, int digits, mpfr_rnd_t rnd) {
    char buf[256];
    mpfr_snprintf(buf, sizeof buf, "%.*R*g", digits, rnd, x);
    return std::string(buf);
}
} // namespace

std::string BoundedFloat::to_string(int digits) const {
    if (is_point()) return format_one(lo_, digits, MPFR_RNDN);
    return "[" + format_one(lo_, digits, MPFR_RNDD) + ", " +
           format_one(hi_, digits, MPFR_RNDU) + "]";
}

std::string BoundedFloat::mid_string(int digits) const {
    mpfr_t m;
    mpfr_init2(m, precision());
    mpfr_add(m, lo_, hi_, MPFR_RNDN);
    mpfr_div_ui(m, m, 2, MPFR_RNDN);
    std::string s = format_one(m, digits, MPFR_RNDN);
    mpfr_clear(m);
    return s;
}

SignVerdict BoundedFloat::sign() const {
    // Outward rounding makes a definite enclosure sign a rigorous certificate;
    // only an interval straddling zero is undecided.
    if (mpfr_sgn(lo_) > 0) return {Sign::Positive, true};
    if (mpfr_sgn(hi_) < 0) return {Sign::Negative, true};
    if (mpfr_zero_p(lo_) && mpfr_zero_p(hi_)) return {Sign::Zero, true};
    return {Sign::Undetermined, false};
}

} // namespace qturan
