#pragma once

#include <string>

#include "charzeta/series/kernel.hpp"

namespace charzeta {

namespace detail {

inline Complex turn(long k, long order, mpfr_prec_t prec) { return DirichletCharacter::root_of_unity(k, order, prec); }

inline long sign_power(long e) { return (e % 2 == 0) ? 1 : -1; }

inline void require_double_prime_index(long N, long j) {
    require(j >= -(N - 1) && j <= N - 1 && (j - (N - 1)) % 2 == 0, ErrorKind::parameter,
            "j must be one of -(N-1), -(N-3), ..., N-1 (got j = " + std::to_string(j) + ")");
}

}  // namespace detail

// v(j) = 1 for even chi, (-1)^{N/2} i^{j-1} for odd chi with N even.
inline Complex v_weight(long N, const DirichletCharacter& chi, long j, mpfr_prec_t prec) {
    require_parity_admissible(N, chi);
    if (chi.is_even()) return Complex(1, prec);
    Complex v = detail::turn(j - 1, 4, prec);
    return detail::sign_power(N / 2) == 1 ? v : -v;
}

inline Complex v_weight(long N, const DirichletCharacter& chi, long j, const PrecisionContext& ctx) {
    return v_weight(N, chi, j, ctx.bits());
}

namespace detail {

// c = 2 pi y^{1/N} e^{-i pi j/2N}
inline Complex g_kernel_scale(long N, long j, const Real& y, mpfr_prec_t prec) {
    Real yr(y, prec);
    Real scale = ldexp(const_pi(prec), 1) * (N == 1 ? yr : root(yr, static_cast<unsigned long>(N)));
    return turn(-j, 4 * N, prec) * scale;
}

// Assembles J from a callback evaluating G_j((2h-1)/N, 2 pi/x, conj chi) for given j and inner budget.
template <class EvaluateG>
SeriesValue assemble_J(const SeriesParams& p, const PrecisionContext& ctx, const TruncationBudget& budget,
                       EvaluateG&& evaluate) {
    validate(p);
    require_parity_admissible(p.N, p.chi);
    mpfr_prec_t prec = ctx.bits();
    long N = p.N;
    long h = p.h;
    Real y = ldexp(ctx.pi(), 1) / p.x;
    Real nu(mpq_class(2 * h - 1, N), prec);
    auto bar = p.chi.conjugate();
    // The prefactor can be large; tighten the inner tails accordingly.
    Real prefactor = pow(y, Real(mpq_class(N - 2 * h + 1, N), prec));
    Real prefactor_size = prefactor * sqrt(Real(p.chi.modulus(), prec));
    TruncationBudget inner = budget;
    if (prefactor_size > 1L) inner.target_tail = budget.target_tail / prefactor_size;
    inner.target_tail /= N;

    Complex sum(prec);
    long used = 0;
    for (long j = -(N - 1); j <= N - 1; j += 2) {
        SeriesValue g = evaluate(j, nu, y, bar, inner);
        used += g.terms_used;
        sum += v_weight(N, p.chi, j, prec) * turn(j * (2 * h - 1), 4 * N, prec) * g.value;
    }
    Complex J = sum * gauss_sum(p.chi, ctx) * prefactor / N;
    if (sign_power(h + 1) < 0) J = -J;
    J.round_to(ctx.bits());
    return {std::move(J), used};
}

}  // namespace detail

// G_j(nu, y, chi) = sum_n chi(n) n^{-nu} / (exp(2 pi (n y)^{1/N} e^{-i pi j/2N}) - 1).
inline SeriesValue series_G(long N, long j, const Real& nu, const Real& y, const DirichletCharacter& chi,
                            const PrecisionContext& ctx, const TruncationBudget& budget,
                            KernelMethod method = KernelMethod::automatic) {
    detail::require_double_prime_index(N, j);
    require_positive_x(y);
    mpfr_prec_t prec = ctx.bits() + bits_for_digits(5);
    return exponential_kernel_sum(chi, nu, N, detail::g_kernel_scale(N, j, y, prec), ctx, budget, method);
}

// The first `terms` terms of G_j.
inline SeriesValue series_G_truncated(long N, long j, const Real& nu, const Real& y, const DirichletCharacter& chi,
                                      long terms, const PrecisionContext& ctx) {
    detail::require_double_prime_index(N, j);
    require_positive_x(y);
    mpfr_prec_t prec = ctx.bits() + bits_for_digits(5);
    return exponential_kernel_partial(chi, nu, N, detail::g_kernel_scale(N, j, y, prec), terms, ctx);
}

// J = (-1)^{h+1} (G(chi)/N) (2 pi/x)^{(N-2h+1)/N}
//     sum''_j v(j) e^{i pi j (2h-1)/2N} G_j((2h-1)/N, 2 pi/x, conj chi)
inline SeriesValue correction_J(const SeriesParams& p, const PrecisionContext& ctx, const TruncationBudget& budget) {
    return detail::assemble_J(p, ctx, budget,
                              [&](long j, const Real& nu, const Real& y, const DirichletCharacter& bar,
                                  const TruncationBudget& inner) {
                                  return series_G(p.N, j, nu, y, bar, ctx, inner);
                              });
}

// J with every G_j cut at `terms` terms.
inline SeriesValue correction_J_truncated(const SeriesParams& p, long terms, const PrecisionContext& ctx) {
    return detail::assemble_J(p, ctx, TruncationBudget::from(ctx),
                              [&](long j, const Real& nu, const Real& y, const DirichletCharacter& bar,
                                  const TruncationBudget&) {
                                  return series_G_truncated(p.N, j, nu, y, bar, terms, ctx);
                              });
}

// K_{chi,N}(x) = (-1)^{(N+3)/2} (G(chi)/N) sum''_j e^{i pi j/2} G_j(1, 2 pi/x, conj chi), N odd.
inline SeriesValue sum_K(long N, const Real& x, const DirichletCharacter& chi, const PrecisionContext& ctx,
                         const TruncationBudget& budget) {
    require(N >= 1, ErrorKind::parameter, "N must be positive");
    require(N % 2 == 1, ErrorKind::unsupported_case, "K needs odd N");
    require(chi.is_even(), ErrorKind::unsupported_case, "K needs an even character");
    require(chi.is_primitive(), ErrorKind::primitivity, "K needs a primitive character");
    require_positive_x(x);
    mpfr_prec_t prec = ctx.bits();
    Real y = ldexp(ctx.pi(), 1) / x;
    Real one(1, prec);
    auto bar = chi.conjugate();
    TruncationBudget inner = budget;
    inner.target_tail = budget.target_tail / sqrt(Real(chi.modulus(), prec));
    Complex sum(prec);
    long used = 0;
    for (long j = -(N - 1); j <= N - 1; j += 2) {
        auto g = series_G(N, j, one, y, bar, ctx, inner);
        used += g.terms_used;
        sum += detail::turn(j, 4, prec) * g.value;
    }
    Complex K = sum * gauss_sum(chi, ctx) / N;
    if (detail::sign_power((N + 3) / 2) < 0) K = -K;
    K.round_to(ctx.bits());
    return {std::move(K), used};
}

}  // namespace charzeta
