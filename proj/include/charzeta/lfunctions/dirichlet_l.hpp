#pragma once

#include "charzeta/characters/character.hpp"
#include "charzeta/lfunctions/hurwitz.hpp"

namespace charzeta {

namespace detail {

// (e^z - 1)/z, equal to 1 at z = 0.
inline Complex phi1(const Complex& z) {
    if (z.is_zero()) return Complex(1, z.prec());
    return expm1(z) / z;
}

}  // namespace detail

// L(s, chi) = q^{-s} sum_r chi(r) zeta(s, r/q). For non-principal chi the
// 1/(s-1) parts of the Hurwitz terms cancel; they are combined analytically so
// that s = 1 is an ordinary point.
inline Complex dirichlet_l(const Complex& s, const DirichletCharacter& chi, const PrecisionContext& ctx) {
    long q = chi.modulus();
    if (q == 1) return riemann_zeta(s, ctx);
    require(!(chi.is_principal() && detail::is_one(s)), ErrorKind::pole,
            "L(s, chi) has a pole at s = 1 for principal chi");

    long head = detail::hurwitz_head_terms(s, ctx);
    mpfr_prec_t prec = detail::hurwitz_precision(s, head * q, ctx) + bits_for_digits(2);
    Complex sw = s;
    sw.round_to(prec);
    auto values = chi.value_table(prec);
    Complex one_minus = Complex(1, prec) - sw;

    Complex total(prec);
    for (long r = 1; r <= q; ++r) {
        const Complex& w = values[static_cast<std::size_t>(r % q)];
        if (w.is_zero()) continue;
        Real a = Real(r, prec) / q;
        auto parts = detail::euler_maclaurin_parts(sw, a, head, prec, ctx);
        Complex term = parts.regular;
        if (chi.is_principal()) {
            term += exp(one_minus * parts.log_tail_start) / (sw - 1L);
        } else {
            // ((M+a)^{1-s} - 1)/(s-1), the constant cancels in the character sum.
            Real lg = parts.log_tail_start;
            term -= detail::phi1(one_minus * lg) * lg;
        }
        total += w * term;
    }
    Real lq = log(Real(q, prec));
    total *= exp(-(sw * lq));
    total.round_to(ctx.bits());
    require_finite(total, "L(s, chi)");
    return total;
}

inline Complex dirichlet_l(const Real& s, const DirichletCharacter& chi, const PrecisionContext& ctx) {
    return dirichlet_l(Complex(s), chi, ctx);
}

}  // namespace charzeta
