#pragma once

#include <random>
#include <string>

#include "charzeta/numerics/complex.hpp"
#include "charzeta/numerics/context.hpp"

namespace charzeta::testing {

inline Real rel_error(const Complex& a, const Complex& b) {
    Real scale = max(max(abs(a), abs(b)), Real(1, a.prec()));
    return abs(a - b) / scale;
}

inline Real abs_error(const Complex& a, const Complex& b) { return abs(a - b); }

// -log10 of an error; large means small error.
inline double digits_of(const Real& err) { return err.is_zero() ? 1e9 : -err.log10_abs(); }

inline Complex cplx(double re, double im, const PrecisionContext& ctx) {
    return {Real::from_double(re, ctx.bits()), Real::from_double(im, ctx.bits())};
}

inline Complex cplx(const std::string& re, const std::string& im, const PrecisionContext& ctx) {
    return {Real::parse(re, ctx.bits()), Real::parse(im, ctx.bits())};
}

inline std::mt19937_64 rng(unsigned long seed) { return std::mt19937_64(seed); }

inline double uniform(std::mt19937_64& g, double lo, double hi) {
    return std::uniform_real_distribution<double>(lo, hi)(g);
}

}  // namespace charzeta::testing
