#pragma once

#include "charzeta/characters/character.hpp"
#include "charzeta/numerics/complex.hpp"
#include "charzeta/numerics/context.hpp"

namespace charzeta {

enum class TrigKernel { sin_sin, sin_cos, cos_cos };

// |closed form - sum''| for
//   sin(mz)/sin(z) = sum'' e^{izj}
//   sin(mz)/cos(z) = (-1)^{m/2} sum'' i^j e^{izj}          (m even)
//   cos(mz)/cos(z) = (-1)^{(m-1)/2} sum'' i^j e^{-izj}     (m odd)
// with j = -(m-1), -(m-3), ..., m-1.
inline Real trig_kernel_residual(long m, const Complex& z, TrigKernel variant) {
    require(m >= 1, ErrorKind::parameter, "m must be positive");
    require(variant != TrigKernel::sin_cos || m % 2 == 0, ErrorKind::parameter, "sin/cos form needs even m");
    require(variant != TrigKernel::cos_cos || m % 2 == 1, ErrorKind::parameter, "cos/cos form needs odd m");
    mpfr_prec_t prec = z.prec();
    Complex mz = z * m;
    Complex closed = variant == TrigKernel::sin_sin   ? sin(mz) / sin(z)
                     : variant == TrigKernel::sin_cos ? sin(mz) / cos(z)
                                                      : cos(mz) / cos(z);
    Complex sum(prec);
    for (long j = -(m - 1); j <= m - 1; j += 2) {
        Complex phase = variant == TrigKernel::cos_cos ? -(z * j) : z * j;
        Complex term = exp(times_i(phase));
        if (variant != TrigKernel::sin_sin) term *= DirichletCharacter::root_of_unity(j, 4, prec);
        sum += term;
    }
    long half = variant == TrigKernel::sin_cos ? m / 2 : (m - 1) / 2;
    if (variant != TrigKernel::sin_sin && half % 2 != 0) sum = -sum;
    return abs(closed - sum);
}

// |2 Re(e^{i a b}/(exp(g e^{-i a}) - 1))
//   - (cos(g sin a + a b) - e^{-g cos a} cos(a b)) / (cosh(g cos a) - cos(g sin a))|
inline Real real_form_residual(const Real& alpha, const Real& beta, const Real& gamma, const PrecisionContext& ctx) {
    mpfr_prec_t prec = ctx.bits();
    Real a(alpha, prec), b(beta, prec), g(gamma, prec);
    Real gc = g * cos(a);
    Real gs = g * sin(a);
    Real denom = cosh(gc) - cos(gs);
    require(!denom.is_zero() && abs(denom) > ctx.target_tail(), ErrorKind::singular_input,
            "cosh(g cos a) = cos(g sin a): both forms are singular");
    Real ab = a * b;
    Real real_form = (cos(gs + ab) - exp(-gc) * cos(ab)) / denom;
    Complex w = polar(g, -a);
    Complex lhs = expi(ab) / expm1(w);
    return abs(ldexp(lhs.re, 1) - real_form);
}

}  // namespace charzeta
