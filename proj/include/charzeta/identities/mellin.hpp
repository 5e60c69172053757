#pragma once

#include <cmath>

#include "charzeta/identities/main_theorem.hpp"
#include "charzeta/quadrature/gauss_legendre.hpp"

namespace charzeta {

// |lhs - rhs| target of the contour check, 10^{-8}.
inline constexpr long mellin_target_exponent = -8;

namespace detail {

// Adaptive panels: accept [a, b] once the low and high order rules agree to tol * (b - a).
template <class F>
Complex adaptive_panel(F& f, const quadrature::GaussLegendre& low, const quadrature::GaussLegendre& high,
                       const Real& a, const Real& b, const Real& density, int depth, long& evaluations) {
    Complex coarse = low.integrate(f, a, b);
    Complex fine = high.integrate(f, a, b);
    evaluations += low.size() + high.size();
    if (abs(fine - coarse) <= density * (b - a)) return fine;
    require(depth < 30, ErrorKind::non_convergence, "contour quadrature failed to converge");
    Real mid = ldexp(a + b, -1);
    return adaptive_panel(f, low, high, a, mid, density, depth + 1, evaluations) +
           adaptive_panel(f, low, high, mid, b, density, depth + 1, evaluations);
}

}  // namespace detail

// Bound on the two omitted pieces |t| > T of (1/2 pi) int Gamma L zeta(Ns - N + 2h) (q/x)^s dt,
// from |L| <= zeta(c0), |zeta(Ns - N + 2h)| <= zeta(N c0 - N + 2h) and Stirling for |Gamma|.
inline Real mellin_tail_bound(const SeriesParams& p, const Real& c0, const Real& T, const PrecisionContext& ctx) {
    mpfr_prec_t prec = ctx.bits();
    Real pi = ctx.pi();
    Real a = c0 - Real(mpq_class(1, 2), prec);
    Real ratio = ldexp(a, 1) / (pi * T);
    require(ratio < 1L, ErrorKind::insufficient_range, "T is too small for the tail estimate");
    Real shifted = c0 * p.N - (p.N - 2 * p.h);
    Real zeta_bounds = riemann_zeta(c0, ctx) * riemann_zeta(shifted, ctx);
    Real q_over_x = Real(p.chi.modulus(), prec) / p.x;
    Real gamma_tail = sqrt(ldexp(pi, 1)) * exp(Real(1, prec) / (T * 6L)) * pow(T, a) * exp(-(pi * T) / 2L) *
                      (Real(2, prec) / pi) / (1L - ratio);
    return zeta_bounds * pow(q_over_x, c0) * gamma_tail / pi;
}

// F(2h - N, x, chi) against its inverse Mellin integral on Re s = c0, cut at |Im s| = T.
// Passes when |lhs - rhs| < 1e-8 + tail bound.
inline IdentityReport mellin_contour_check(const SeriesParams& p, const Real& c0, const Real& T,
                                           const PrecisionContext& ctx, const TruncationBudget& budget) {
    validate(p);
    require(T.sign() > 0, ErrorKind::parameter, "T must be positive");
    Real s0(mpq_class(p.N - 2 * p.h + 1, p.N), ctx.bits());
    require(c0 > 1L && c0 > s0, ErrorKind::parameter, "c0 must exceed max(1, (N - 2h + 1)/N)");

    ReportBuilder report(IdentityId::mellin, ctx);
    for (auto& [k, v] : detail::series_param_list(p, ctx.digits)) report.param(k, v);
    report.param("c0", c0).param("T", T);

    Real tail = mellin_tail_bound(p, c0, T, ctx);
    require(tail < pow10(mellin_target_exponent, tail.prec()), ErrorKind::insufficient_range,
            "tail bound " + tail.to_string(3) + " exceeds the quadrature target; increase T");

    mpfr_prec_t prec = ctx.bits();
    Real log_q_over_x = log(Real(p.chi.modulus(), prec) / p.x);
    long shift = p.N - 2 * p.h;
    auto integrand = [&](const Real& t) {
        Complex s(c0, t);
        Complex shifted = s * p.N - shift;
        return gamma_function(s, ctx) * dirichlet_l(s, p.chi, ctx) * riemann_zeta(shifted, ctx) *
               exp(s * log_q_over_x);
    };
    quadrature::GaussLegendre low(10, prec), high(20, prec);
    // Integrand tolerance per unit length, so that the sum stays a decade under target.
    Real density = pow10(mellin_target_exponent, prec) * ldexp(ctx.pi(), 1) / (T * 20L);
    Complex integral(prec);
    long evaluations = 0;
    long panels = std::max(1L, static_cast<long>(std::ceil(2.0 * T.to_double())));
    Real width = ldexp(T, 1) / panels;
    for (long k = 0; k < panels; ++k) {
        Real a = -T + width * k;
        Real b = k + 1 == panels ? T : a + width;
        integral += detail::adaptive_panel(integrand, low, high, a, b, density, 0, evaluations);
    }
    Complex rhs = integral / ldexp(ctx.pi(), 1);
    report.count("quadrature", evaluations);

    auto F = lambert_F(p, ctx, budget);
    report.count("F", F.terms_used);
    report.extra("tail_bound", Complex(tail));
    IdentityReport r = report.finish(std::move(F.value), std::move(rhs));
    r.pass = r.abs_residual < pow10(mellin_target_exponent, prec) + tail;
    return r;
}

}  // namespace charzeta
