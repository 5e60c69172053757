#pragma once

#include "charzeta/characters/character.hpp"
#include "charzeta/lfunctions/dirichlet_l.hpp"
#include "charzeta/lfunctions/generalized_bernoulli.hpp"
#include "charzeta/numerics/gamma.hpp"

namespace charzeta {

// zeta(-k) = (-1)^k B_{k+1}/(k+1), exact.
inline mpq_class zeta_at_nonpositive(long k) {
    require(k >= 0, ErrorKind::parameter, "expects k >= 0");
    mpq_class v = bernoulli_number(k + 1) / (k + 1);
    return (k % 2 == 0) ? v : mpq_class(-v);
}

// r_{2m} with zeta(2m) = r_{2m} pi^{2m}.
inline mpq_class even_zeta_coefficient(long m) {
    require(m >= 1, ErrorKind::parameter, "expects m >= 1");
    mpz_class four_m = mpz_class(1) << static_cast<mp_bitcnt_t>(2 * m);
    mpq_class r = mpq_class(four_m) * bernoulli_number(2 * m) / (2 * mpq_class(factorial(2 * m)));
    return (m % 2 == 1) ? r : mpq_class(-r);
}

inline Real zeta_even(long m, const PrecisionContext& ctx) {
    return Real(even_zeta_coefficient(m), ctx.bits()) * pow(ctx.pi(), 2 * m);
}

// zeta(n) for an integer n != 1; exact closed forms where they exist.
inline Real zeta_integer(long n, const PrecisionContext& ctx) {
    require(n != 1, ErrorKind::pole, "zeta has a pole at s = 1");
    if (n <= 0) return Real(zeta_at_nonpositive(-n), ctx.bits());
    if (n % 2 == 0) return zeta_even(n / 2, ctx);
    return riemann_zeta(n, ctx);
}

// L(-k, chi) = -B_{k+1,chi}/(k+1), k >= 1.
inline Complex l_at_negative_integer(long k, const DirichletCharacter& chi, const PrecisionContext& ctx) {
    require(k >= 1, ErrorKind::parameter, "expects k >= 1");
    Complex b = generalized_bernoulli(k + 1, chi, ctx);
    return -(b / (k + 1));
}

inline Complex l_at_zero(const DirichletCharacter& chi, const PrecisionContext& ctx) {
    long q = chi.modulus();
    if (q == 1) return Complex(Real(mpq_class(-1, 2), ctx.bits()));
    if (chi.is_even()) return Complex(ctx.bits());
    Complex total(ctx.bits());
    for (long r = 1; r < q; ++r) total += chi.evaluate(r, ctx.bits()) * r;
    return -(total / q);
}

// L(n, chi) at an integer n; exact forms for n <= 0 when chi is primitive.
inline Complex l_at_integer(long n, const DirichletCharacter& chi, const PrecisionContext& ctx) {
    if (chi.modulus() == 1) return Complex(zeta_integer(n, ctx));
    if (n == 0) return l_at_zero(chi, ctx);
    if (n < 0 && chi.is_primitive()) return l_at_negative_integer(-n, chi, ctx);
    return dirichlet_l(Complex(n, ctx.bits()), chi, ctx);
}

inline Complex l_derivative_at_zero(const DirichletCharacter& chi, const PrecisionContext& ctx) {
    long q = chi.modulus();
    mpfr_prec_t prec = ctx.bits();
    if (q == 1) return Complex(-ldexp(log(ldexp(ctx.pi(), 1)), -1));
    require(!chi.is_principal(), ErrorKind::unsupported_case,
            "L'(0, chi) for the principal character with q > 1 is not provided");
    Complex total(prec);
    if (chi.is_even()) {
        for (long r = 1; r < q; ++r) {
            auto e = chi.exponent(r);
            if (!e) continue;
            Real angle = ctx.pi() * r / q;
            total += chi.evaluate(r, prec) * log(sin(angle));
        }
        return -(total * ldexp(Real(1, prec), -1));
    }
    for (long r = 1; r < q; ++r) {
        if (!chi.exponent(r)) continue;
        total += chi.evaluate(r, prec) * log_gamma(Real(r, prec) / q, ctx);
    }
    return total - l_at_zero(chi, ctx) * log(Real(q, prec));
}

// Gamma(s) L(s, chi) at s = -2m for even primitive chi, where the pole of
// Gamma meets the trivial zero of L:
//   (-1)^m q / (2 G(conj chi)) (q / 2 pi)^{2m} L(2m+1, conj chi).
inline Complex gamma_l_at_negative_even(long m, const DirichletCharacter& chi, const PrecisionContext& ctx) {
    require(m >= 1, ErrorKind::parameter, "expects m >= 1");
    require(chi.is_even(), ErrorKind::unsupported_case, "needs an even character");
    long q = chi.modulus();
    auto bar = chi.conjugate();
    Complex g_bar = gauss_sum(bar, ctx);
    Real ratio = Real(q, ctx.bits()) / ldexp(ctx.pi(), 1);
    Complex v = l_at_integer(2 * m + 1, bar, ctx) * pow(ratio, 2 * m) * Real(q, ctx.bits()) / (g_bar * 2L);
    return (m % 2 == 0) ? v : -v;
}

}  // namespace charzeta
