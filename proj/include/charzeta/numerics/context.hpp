#pragma once

#include <cmath>
#include <string>

#include "charzeta/error.hpp"
#include "charzeta/numerics/real.hpp"

namespace charzeta {

// Target precision plus the guard digits carried through intermediate work.
struct PrecisionContext {
    int digits = 30;
    int guard_digits = 13;

    int working_digits() const { return digits + guard_digits; }
    mpfr_prec_t bits() const { return bits_for_digits(working_digits()) + 4; }

    // Same target, more working digits.
    PrecisionContext with_extra(int extra_digits) const {
        return {digits, guard_digits + std::max(0, extra_digits)};
    }

    Real zero() const { return Real(bits()); }
    Real real(long value) const { return Real(value, bits()); }
    Real parse(const std::string& text) const { return Real::parse(text, bits()); }
    Real pi() const { return const_pi(bits()); }

    // 10^{-digits-guard}: the default absolute tail target of every series.
    Real target_tail() const { return pow10(-working_digits(), bits()); }
    // 10^{-digits}
    Real target_digits() const { return pow10(-digits, bits()); }

    friend bool operator==(const PrecisionContext&, const PrecisionContext&) = default;
};

inline PrecisionContext make_context(int digits) {
    require(digits >= 15, ErrorKind::invalid_precision,
            "digits must be at least 15 (got " + std::to_string(digits) + ")");
    require(digits <= 100000, ErrorKind::invalid_precision, "digits too large");
    return {digits, 10 + (digits + 9) / 10};
}

}  // namespace charzeta
