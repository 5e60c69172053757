#pragma once

#include <cmath>

#include "charzeta/error.hpp"
#include "charzeta/numerics/bernoulli.hpp"
#include "charzeta/numerics/complex.hpp"
#include "charzeta/numerics/context.hpp"

namespace charzeta {

inline Real euler_gamma(const PrecisionContext& ctx) {
    Real r(ctx.bits());
    mpfr_const_euler(r.raw(), MPFR_RNDN);
    return r;
}

namespace detail {

// log Gamma(z) by the Stirling series; needs |z| large enough that the
// optimally truncated remainder is below 2^{-prec}.
inline Complex stirling_log_gamma(const Complex& z, mpfr_prec_t prec) {
    Real half(prec);
    mpfr_set_d(half.raw(), 0.5, MPFR_RNDN);
    Complex logz = log(z);
    Complex sum = (z - half) * logz - z;
    sum += ldexp(log(ldexp(const_pi(prec), 1)), -1);
    Complex inv = Complex(1, prec) / z;
    Complex inv2 = inv * inv;
    Complex power = inv;
    Real eps = ldexp(Real(1, prec), -static_cast<long>(prec));
    Real threshold = eps * max(abs(sum), Real(1, prec));
    Real previous(prec);
    for (long k = 1;; ++k) {
        Real coef(bernoulli_number(2 * k), prec);
        coef /= (2 * k) * (2 * k - 1);
        Complex term = power * coef;
        Real size = abs(term);
        if (size < threshold) break;
        require(k == 1 || size < previous, ErrorKind::non_convergence,
                "Stirling series for log Gamma diverged before reaching precision");
        sum += term;
        previous = size;
        power *= inv2;
    }
    return sum;
}

inline bool is_nonpositive_integer(const Complex& s) {
    return s.im.is_zero() && s.re.is_integer() && s.re.sign() <= 0;
}

}  // namespace detail

// Gamma(s) for complex s; reflection below Re(s) = 1/2.
inline Complex gamma_function(const Complex& s, const PrecisionContext& ctx) {
    require(!detail::is_nonpositive_integer(s), ErrorKind::pole,
            "Gamma has a pole at s = " + s.re.to_string(10));
    double mag = std::max(1.0, std::hypot(s.re.to_double(), s.im.to_double()));
    mpfr_prec_t prec = ctx.bits() + 16 + static_cast<mpfr_prec_t>(std::log2(mag * std::log(mag + 2.0) + 2.0));
    Complex z = s;
    z.round_to(prec);
    Real half(prec);
    mpfr_set_d(half.raw(), 0.5, MPFR_RNDN);

    if (z.re < half) {
        Real pi = const_pi(prec);
        Complex one_minus = Complex(1, prec) - z;
        Complex g = gamma_function(one_minus, ctx.with_extra(static_cast<int>(std::log10(mag)) + 2));
        g.round_to(prec);
        Complex den = sin(z * pi) * g;
        require(!den.is_zero(), ErrorKind::pole, "Gamma reflection hit a zero of sin(pi s)");
        Complex r = Complex(pi) / den;
        r.round_to(ctx.bits());
        require_finite(r, "Gamma(s)");
        return r;
    }

    double radius = 0.37 * (static_cast<double>(prec) * 0.30103) + 2.0;
    long shift = 0;
    if (std::fabs(z.im.to_double()) < radius) {
        double gap = radius - z.re.to_double();
        if (gap > 0) shift = static_cast<long>(std::ceil(gap));
    }
    Complex product(1, prec);
    Complex shifted = z;
    for (long k = 0; k < shift; ++k) {
        product *= shifted;
        shifted += 1L;
    }
    Complex r = exp(detail::stirling_log_gamma(shifted, prec));
    if (shift > 0) r /= product;
    r.round_to(ctx.bits());
    require_finite(r, "Gamma(s)");
    return r;
}

inline Real gamma_function(const Real& s, const PrecisionContext& ctx) {
    return gamma_function(Complex(s), ctx).re;
}

// log Gamma(x) for real x > 0.
inline Real log_gamma(const Real& x, const PrecisionContext& ctx) {
    require(x.sign() > 0, ErrorKind::parameter, "log_gamma requires a positive argument");
    Real r(ctx.bits());
    int sign = 0;
    mpfr_lgamma(r.raw(), &sign, x.raw(), MPFR_RNDN);
    return r;
}

}  // namespace charzeta
