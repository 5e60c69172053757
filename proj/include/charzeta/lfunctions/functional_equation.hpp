#pragma once

#include "charzeta/characters/character.hpp"
#include "charzeta/lfunctions/dirichlet_l.hpp"
#include "charzeta/numerics/gamma.hpp"

namespace charzeta {

namespace detail {

inline Real fe_relative(const Complex& lhs, const Complex& rhs) {
    Real denom = max(abs(lhs), Real(1, lhs.prec()));
    return abs(lhs - rhs) / denom;
}

}  // namespace detail

// zeta(s) against 2^s pi^{s-1} sin(pi s/2) Gamma(1-s) zeta(1-s).
inline Real zeta_fe_residual(const Complex& s, const PrecisionContext& ctx) {
    Real pi = ctx.pi();
    Complex one_minus = 1L - s;
    Complex lhs = riemann_zeta(s, ctx);
    Complex rhs = pow(Real(2, ctx.bits()), s) * pow(pi, s - 1L) * sin(s * pi / 2L) * gamma_function(one_minus, ctx) *
                  riemann_zeta(one_minus, ctx);
    return detail::fe_relative(lhs, rhs);
}

// Root number G(chi) / (i^a sqrt q).
inline Complex root_number(const DirichletCharacter& chi, const PrecisionContext& ctx) {
    Complex eps = gauss_sum(chi, ctx) / sqrt(Real(chi.modulus(), ctx.bits()));
    return chi.is_odd() ? Complex(eps.im, -eps.re) : eps;
}

// L(s, chi) against eps 2^s pi^{s-1} q^{1/2-s} sin(pi (s+a)/2) Gamma(1-s) L(1-s, conj chi).
inline Real l_fe_residual(const Complex& s, const DirichletCharacter& chi, const PrecisionContext& ctx) {
    require(chi.is_primitive(), ErrorKind::primitivity, "functional equation needs a primitive character");
    mpfr_prec_t prec = ctx.bits();
    Real pi = ctx.pi();
    Real q(chi.modulus(), prec);
    long a = chi.is_odd() ? 1 : 0;
    Complex one_minus = 1L - s;
    Complex lhs = dirichlet_l(s, chi, ctx);
    Complex rhs = root_number(chi, ctx) * pow(Real(2, prec), s) * pow(pi, s - 1L) *
                  pow(q, Complex(Real(mpq_class(1, 2), prec)) - s) * sin((s + a) * pi / 2L) *
                  gamma_function(one_minus, ctx) * dirichlet_l(one_minus, chi.conjugate(), ctx);
    return detail::fe_relative(lhs, rhs);
}

}  // namespace charzeta
