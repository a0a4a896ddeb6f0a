#pragma once

#include <concepts>
#include <string>
#include <type_traits>

#include "qturan/bounded_float.hpp"
#include "qturan/rational.hpp"
#include "qturan/sign.hpp"

namespace qturan {

/// Uniform construction / conversion surface over the two scalar modes.
/// Generic series and Turánian code is written once against this interface;
/// `Rational` instantiations are exact, `BoundedFloat` instantiations carry
/// rigorous enclosures.
template <class S>
struct scalar_traits;

template <>
struct scalar_traits<Rational> {
    static constexpr bool is_exact = true;
    static Rational from_rational(const Rational& r) { return r; }
    static Rational from_long(long n) { return Rational(n); }
    static Rational pow_int(const Rational& x, long e) { return x.pow_int(e); }
    static std::string to_string(const Rational& x) { return x.to_string(); }
    static double to_double(const Rational& x) { return x.to_double(); }
};

template <>
struct scalar_traits<BoundedFloat> {
    static constexpr bool is_exact = false;
    static BoundedFloat from_rational(const Rational& r) { return BoundedFloat::from_rational(r); }
    static BoundedFloat from_long(long n) { return BoundedFloat::from_long(n); }
    static BoundedFloat pow_int(const BoundedFloat& x, long e) { return x.pow_int(e); }
    static std::string to_string(const BoundedFloat& x) { return x.to_string(); }
    static double to_double(const BoundedFloat& x) { return x.mid_double(); }
};

template <class S>
concept ScalarLike = requires(const S a, const S b) {
    { a + b } -> std::convertible_to<S>;
    { a - b } -> std::convertible_to<S>;
    { a * b } -> std::convertible_to<S>;
    { a / b } -> std::convertible_to<S>;
    { -a } -> std::convertible_to<S>;
    { sign_of(a) } -> std::convertible_to<SignVerdict>;
    { scalar_traits<S>::from_long(1L) } -> std::convertible_to<S>;
    { scalar_traits<S>::from_rational(Rational(1)) } -> std::convertible_to<S>;
};

template <ScalarLike S>
constexpr bool is_exact_v = scalar_traits<S>::is_exact;

template <ScalarLike S>
S make_scalar(long n) { return scalar_traits<S>::from_long(n); }

template <ScalarLike S>
S make_scalar(const Rational& r) { return scalar_traits<S>::from_rational(r); }

/// Certified strict comparison a < b (exact: definite; float: endpointwise).
template <ScalarLike S>
bool certainly_less(const S& a, const S& b) {
    if constexpr (is_exact_v<S>) {
        return a < b;
    } else {
        return a.definitely_less(b);
    }
}

} // namespace qturan
