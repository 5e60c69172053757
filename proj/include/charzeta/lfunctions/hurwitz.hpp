#pragma once

#include <algorithm>
#include <cmath>
#include <vector>

#include "charzeta/error.hpp"
#include "charzeta/numerics/bernoulli.hpp"
#include "charzeta/numerics/complex.hpp"
#include "charzeta/numerics/context.hpp"

namespace charzeta {

namespace detail {

// Euler-Maclaurin pieces of zeta(s, a):
//   zeta(s, a) = regular + (M + a)^{1-s} / (s - 1)
// where regular = sum_{n<M} (n+a)^{-s} + (M+a)^{-s}/2 + sum_k B_{2k}/(2k)! (s)_{2k-1} (M+a)^{-s-2k+1}.
struct EulerMaclaurinParts {
    Complex regular;
    Real log_tail_start;  // log(M + a)
    long head_terms = 0;
    long correction_terms = 0;
};

// Working precision for evaluating zeta(s, .) with M head terms: the head sum
// cancels down to the result when Re(s) < 1.
inline mpfr_prec_t hurwitz_precision(const Complex& s, long head, const PrecisionContext& ctx) {
    double sigma = s.re.to_double();
    double extra = std::max(0.0, 1.0 - sigma) * std::log10(static_cast<double>(head) + 1.0) + 5.0;
    return ctx.bits() + bits_for_digits(static_cast<long>(std::ceil(extra)));
}

inline long hurwitz_head_terms(const Complex& s, const PrecisionContext& ctx) {
    double im = std::fabs(s.im.to_double());
    return std::max<long>(ctx.digits, static_cast<long>(std::ceil(3.0 * im)));
}

// One attempt with a fixed M; returns false when the correction series stops
// decreasing before it reaches the tolerance.
inline bool euler_maclaurin_attempt(const Complex& s, const Real& a, long head, mpfr_prec_t prec,
                                    const Real& tolerance, EulerMaclaurinParts& out) {
    Complex ms = -s;
    Complex sum(prec);
    for (long n = 0; n < head; ++n) {
        Real base = a + n;
        sum += pow(base, ms);
    }
    Real tail_start = a + head;
    Real log_start = log(tail_start);
    Complex start_pow = exp(Complex(ms.re * log_start, ms.im * log_start));  // (M+a)^{-s}
    sum += start_pow * ldexp(Real(1, prec), -1);

    Real inv_sq = Real(1, prec) / (tail_start * tail_start);
    Complex rising = s;                           // (s)_{2k-1}
    Complex power = start_pow / tail_start;  // (M+a)^{-s-2k+1}
    Real scale = max(abs(sum), Real(1, prec));
    Real previous(prec);
    long k = 1;
    for (;; ++k) {
        Real coef(mpq_class(bernoulli_number(2 * k)) / mpq_class(factorial(2 * k)), prec);
        Complex term = rising * power * coef;
        Real size = abs(term);
        if (size < tolerance * scale) break;
        if (k > 2 && size > previous) return false;
        sum += term;
        previous = size;
        rising *= (s + (2 * k - 1)) * (s + 2 * k);
        power *= inv_sq;
        if (k > 4 * head + 400) return false;
    }
    out.regular = std::move(sum);
    out.log_tail_start = std::move(log_start);
    out.head_terms = head;
    out.correction_terms = k;
    return true;
}

inline EulerMaclaurinParts euler_maclaurin_parts(const Complex& s, const Real& a, long head, mpfr_prec_t prec,
                                                 const PrecisionContext& ctx) {
    Real tolerance = pow10(-ctx.working_digits(), prec);
    EulerMaclaurinParts parts{Complex(prec), Real(prec)};
    for (int attempt = 0; attempt < 8; ++attempt) {
        if (euler_maclaurin_attempt(s, a, head, prec, tolerance, parts)) return parts;
        head *= 2;
    }
    fail(ErrorKind::non_convergence, "Euler-Maclaurin correction series for zeta(s, a) did not settle");
}

inline bool is_one(const Complex& s) { return s.im.is_zero() && s.re == 1L; }

}  // namespace detail

// zeta(s, a) for a in (0, 1] (any a > 0 is accepted) by Euler-Maclaurin summation.
inline Complex hurwitz_zeta(const Complex& s, const Real& a, const PrecisionContext& ctx) {
    require(!detail::is_one(s), ErrorKind::pole, "zeta(s, a) has a pole at s = 1");
    require(a.sign() > 0, ErrorKind::parameter, "Hurwitz parameter must be positive");
    long head = detail::hurwitz_head_terms(s, ctx);
    mpfr_prec_t prec = detail::hurwitz_precision(s, head, ctx);
    Complex sw = s;
    sw.round_to(prec);
    Real aw(a, prec);
    auto parts = detail::euler_maclaurin_parts(sw, aw, head, prec, ctx);
    Complex one_minus = Complex(1, prec) - sw;
    Complex pole = exp(one_minus * parts.log_tail_start) / (sw - 1L);
    Complex r = parts.regular + pole;
    r.round_to(ctx.bits());
    require_finite(r, "zeta(s, a)");
    return r;
}

inline Complex riemann_zeta(const Complex& s, const PrecisionContext& ctx) {
    return hurwitz_zeta(s, Real(1, ctx.bits()), ctx);
}

inline Real riemann_zeta(const Real& s, const PrecisionContext& ctx) { return riemann_zeta(Complex(s), ctx).re; }

inline Real riemann_zeta(long s, const PrecisionContext& ctx) { return riemann_zeta(Complex(s, ctx.bits()), ctx).re; }

}  // namespace charzeta
