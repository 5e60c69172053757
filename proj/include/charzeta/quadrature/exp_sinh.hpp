#pragma once

#include <cstdlib>

#include "charzeta/error.hpp"
#include "charzeta/numerics/complex.hpp"

namespace charzeta::quadrature {

struct QuadratureResult {
    Complex value;
    Real error_estimate;
    long evaluations = 0;
};

// Double-exponential rule for integrals over [0, inf): w = exp(pi/2 sinh t).
// The integrand must be smooth on (0, inf), integrable at 0 and decay at inf.
// Step halving stops once two consecutive levels agree to `tolerance` (absolute).
template <class F>
QuadratureResult exp_sinh(F&& f, const Real& tolerance, mpfr_prec_t prec, int max_levels = 14) {
    Real half_pi = ldexp(const_pi(prec), -1);
    Real tiny = ldexp(tolerance, -20);

    long evaluations = 0;
    // Sum of f(w(t)) w'(t) over t = offset + k*step, k in Z, until terms fall below tiny.
    auto sweep = [&](const Real& offset, const Real& step) {
        Complex total(prec);
        for (int direction : {1, -1}) {
            int quiet = 0;
            for (long k = (direction == 1 ? 0 : 1);; ++k) {
                Real t = offset + step * (direction * k);
                Real sh = sinh(t);
                Real arg = half_pi * sh;
                // Below ~ -2^20 the abscissa underflows; the weight vanishes there.
                if (arg < -1000000L) break;
                Real w = exp(arg);
                Real dw = half_pi * cosh(t) * w;
                if (w.is_zero() || dw.is_zero()) break;
                if (!w.is_finite()) break;
                Complex term = f(w) * dw;
                ++evaluations;
                require_finite(term, "exp-sinh integrand");
                total += term;
                if (abs(term) < tiny) {
                    if (++quiet >= 2) break;
                } else {
                    quiet = 0;
                }
                require(k < 100000, ErrorKind::non_convergence, "exp-sinh sweep did not terminate");
            }
        }
        return total;
    };

    Real step(1, prec);
    step = ldexp(step, -1);
    Real zero(prec);
    Complex sum = sweep(zero, step);
    Complex estimate = sum * step;
    for (int level = 1; level <= max_levels; ++level) {
        Real offset = ldexp(step, -1);
        sum += sweep(offset, step);
        step = offset;
        Complex next = sum * step;
        Real diff = abs(next - estimate);
        estimate = std::move(next);
        if (level >= 3 && diff < tolerance) return {estimate, diff, evaluations};
    }
    fail(ErrorKind::non_convergence, "exp-sinh quadrature did not converge");
}

}  // namespace charzeta::quadrature
