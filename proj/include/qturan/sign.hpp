#pragma once

#include <string>

namespace qturan {

/// Outcome of a sign query on a scalar.
enum class Sign { Negative = -1, Zero = 0, Positive = 1, Undetermined = 2 };

/// A sign together with its epistemic status.  Exact-mode scalars always
/// produce certified verdicts; interval scalars produce certified verdicts
/// only in the sense that Positive/Negative/Zero are rigorous enclosure
/// statements, while `Undetermined` means the enclosure straddles zero.
struct SignVerdict {
    Sign sign = Sign::Undetermined;
    /// True when the verdict came from exact arithmetic.
    bool certified = false;

    bool is_positive() const { return sign == Sign::Positive; }
    bool is_negative() const { return sign == Sign::Negative; }
    bool is_zero() const { return sign == Sign::Zero; }
    bool is_undetermined() const { return sign == Sign::Undetermined; }
    /// Rigorously known to be >= 0.
    bool nonnegative() const { return sign == Sign::Positive || sign == Sign::Zero; }
    /// Rigorously known to be <= 0.
    bool nonpositive() const { return sign == Sign::Negative || sign == Sign::Zero; }
};

inline const char* to_cstring(Sign s) {
    switch (s) {
        case Sign::Negative: return "negative";
        case Sign::Zero: return "zero";
        case Sign::Positive: return "positive";
        default: return "undetermined";
    }
}

inline std::string to_string(const SignVerdict& v) {
    std::string s = to_cstring(v.sign);
    if (v.certified) s += " (exact)";
    return s;
}

} // namespace qturan
