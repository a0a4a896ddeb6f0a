#pragma once

#include <gmpxx.h>

#include <compare>
#include <cstdint>
#include <optional>
#include <string>

#include "qturan/errors.hpp"
#include "qturan/sign.hpp"

namespace qturan {

/// Arbitrary-precision rational scalar.  All operations are exact; sign
/// queries are always certified.  This is the Exact-mode scalar of the
/// library.
class Rational {
  public:
    Rational() : v_(0) {}
    Rational(long n) : v_(n) {}          // NOLINT: implicit by design
    Rational(int n) : v_(n) {}           // NOLINT
    Rational(long num, long den) {
        if (den == 0) throw domain_error("Rational: zero denominator");
        v_ = mpq_class(num, den);
        v_.canonicalize();
    }
    explicit Rational(const mpq_class& v) : v_(v) { v_.canonicalize(); }
    explicit Rational(const mpz_class& num, const mpz_class& den) {
        if (den == 0) throw domain_error("Rational: zero denominator");
        v_ = mpq_class(num, den);
        v_.canonicalize();
    }

    /// Parse "p/q", an integer, or a plain decimal such as "0.999"
    /// (decimals are converted exactly).
    static Rational parse(const std::string& text);

    const mpq_class& raw() const { return v_; }
    mpz_class numerator() const { return v_.get_num(); }
    mpz_class denominator() const { return v_.get_den(); }

    bool is_zero() const { return sgn(v_) == 0; }
    bool is_one() const { return v_ == 1; }
    bool is_integer() const { return v_.get_den() == 1; }
    int sign_int() const { return sgn(v_); }

    /// Value as long; requires an integer that fits.
    long to_long() const {
        if (!is_integer() || !v_.get_num().fits_slong_p())
            throw domain_error("Rational: value is not a representable integer");
        return v_.get_num().get_si();
    }
    double to_double() const { return v_.get_d(); }
    std::string to_string() const { return v_.get_str(); }

    Rational operator-() const { return Rational(mpq_class(-v_)); }
    Rational& operator+=(const Rational& o) { v_ += o.v_; return *this; }
    Rational& operator-=(const Rational& o) { v_ -= o.v_; return *this; }
    Rational& operator*=(const Rational& o) { v_ *= o.v_; return *this; }
    Rational& operator/=(const Rational& o) {
        if (o.is_zero()) throw domain_error("Rational: division by zero");
        v_ /= o.v_;
        return *this;
    }

    friend Rational operator+(Rational a, const Rational& b) { return a += b; }
    friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
    friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
    friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

    friend bool operator==(const Rational& a, const Rational& b) { return a.v_ == b.v_; }
    friend bool operator!=(const Rational& a, const Rational& b) { return a.v_ != b.v_; }
    friend bool operator<(const Rational& a, const Rational& b) { return a.v_ < b.v_; }
    friend bool operator<=(const Rational& a, const Rational& b) { return a.v_ <= b.v_; }
    friend bool operator>(const Rational& a, const Rational& b) { return a.v_ > b.v_; }
    friend bool operator>=(const Rational& a, const Rational& b) { return a.v_ >= b.v_; }

    Rational abs() const { return Rational(mpq_class(::abs(v_))); }

    /// Integer power; negative exponents require a nonzero base.
    Rational pow_int(long e) const {
        if (e == 0) return Rational(1);
        bool inv = e < 0;
        unsigned long k = inv ? static_cast<unsigned long>(-(e + 1)) + 1ul
                              : static_cast<unsigned long>(e);
        if (inv && is_zero()) throw domain_error("Rational: zero to a negative power");
        mpz_class num, den;
        mpz_pow_ui(num.get_mpz_t(), v_.get_num().get_mpz_t(), k);
        mpz_pow_ui(den.get_mpz_t(), v_.get_den().get_mpz_t(), k);
        return inv ? Rational(den, num) : Rational(num, den);
    }

    /// Exact r-th root when both numerator and denominator are perfect
    /// r-th powers; empty otherwise.  Requires r >= 1 and a nonnegative
    /// value for even r.
    std::optional<Rational> exact_root(unsigned long r) const {
        if (r == 0) throw domain_error("Rational: zeroth root");
        if (r == 1) return *this;
        if (sign_int() < 0 && r % 2 == 0) return std::nullopt;
        mpz_class num, den;
        int num_exact = mpz_root(num.get_mpz_t(), v_.get_num().get_mpz_t(), r);
        int den_exact = mpz_root(den.get_mpz_t(), v_.get_den().get_mpz_t(), r);
        if (!num_exact || !den_exact) return std::nullopt;
        return Rational(num, den);
    }

  private:
    mpq_class v_;
};

inline SignVerdict sign_of(const Rational& x) {
    int s = x.sign_int();
    return SignVerdict{s > 0 ? Sign::Positive : s < 0 ? Sign::Negative : Sign::Zero, true};
}

inline Rational Rational::parse(const std::string& text) {
    std::string t = text;
    if (t.empty()) throw domain_error("Rational: empty numeric literal");
    auto slash = t.find('/');
    try {
        if (slash != std::string::npos) {
            Rational num = parse(t.substr(0, slash));
            Rational den = parse(t.substr(slash + 1));
            return num / den;
        }
        auto dot = t.find('.');
        if (dot == std::string::npos) {
            return Rational(mpq_class(mpz_class(t), 1));
        }
        std::string digits = t.substr(0, dot) + t.substr(dot + 1);
        std::size_t frac_len = t.size() - dot - 1;
        if (digits.empty() || digits == "-") throw domain_error("Rational: bad literal");
        mpz_class den = 1;
        for (std::size_t i = 0; i < frac_len; ++i) den *= 10;
        return Rational(mpz_class(digits), den);
    } catch (const std::invalid_argument&) {
        throw domain_error("Rational: cannot parse numeric literal '" + text + "'");
    }
}

/// q^e for rational exponent e, when exactly representable: integer e always
/// works; e = p/r needs q to possess an exact r-th root.  Returns empty when
/// the power is irrational.
inline std::optional<Rational> exact_qpow(const Rational& q, const Rational& e) {
    if (e.is_integer()) return q.pow_int(e.to_long());
    if (q.sign_int() <= 0) return std::nullopt;
    unsigned long r = e.denominator().get_ui();
    if (!e.denominator().fits_ulong_p()) return std::nullopt;
    auto root = q.exact_root(r);
    if (!root) return std::nullopt;
    if (!e.numerator().fits_slong_p()) return std::nullopt;
    return root->pow_int(e.numerator().get_si());
}

} // namespace qturan
