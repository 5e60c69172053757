#pragma once

#include <cmath>

#include "charzeta/identities/ramanujan.hpp"

namespace charzeta {

namespace detail {

// sum_{n >= 1} term(n) until bound(n) (the log of a tail majorant past n) drops below log_target.
template <class Term, class LogBound>
SeriesValue sum_until(Term&& term, LogBound&& log_bound, double log_target, const TruncationBudget& budget,
                      mpfr_prec_t prec) {
    Complex total(prec);
    for (long n = 1;; ++n) {
        require(n <= budget.max_terms, ErrorKind::non_convergence, "series hit the term cap");
        total += term(n);
        if (log_bound(n) < log_target) return {std::move(total), n};
    }
}

// log of n^{-a} K e^{-t} (1 + N n^{1-1/N}/c) / (1 - e^{-t}) at t = c n^{1/N},
// valid once the summand is decreasing; +inf before that.
inline double root_exponential_tail(long n, double a, long N, double c, double K) {
    double ln_n = std::log(static_cast<double>(n));
    double Nd = static_cast<double>(N);
    double t = c * std::exp(ln_n / Nd);
    if (t <= -a * Nd + 1.0) return INFINITY;
    double spread = Nd * std::exp(ln_n * (1.0 - 1.0 / Nd)) / c;
    return -a * ln_n + std::log(K) - t + std::log1p(spread) - std::log(-std::expm1(-t));
}

inline const DirichletCharacter& quintic_character() {
    static const DirichletCharacter chi = character_from_values(5, {"1", "-1", "-1", "1"});
    return chi;
}

}  // namespace detail

// sum_m chi5(m) m^{-1/3} [e^{-t}/(2 sinh t) + (cos(sqrt3 t + pi/3) - e^{-t}/2)/(cosh t - cos(sqrt3 t))],
// t = (m beta)^{1/3}.
inline SeriesValue cubic_bracket_sum(const Real& beta, const PrecisionContext& ctx, const TruncationBudget& budget) {
    mpfr_prec_t prec = ctx.bits() + bits_for_digits(5);
    const auto& chi = detail::quintic_character();
    Real b(beta, prec);
    Real sqrt3 = sqrt(Real(3, prec));
    Real pi_third = const_pi(prec) / 3L;
    auto term = [&](long n) {
        auto e = chi.exponent(n);
        if (!e) return Complex(prec);
        Real t = root(b * n, 3);
        Real et = exp(-t);
        Real s3 = sqrt3 * t;
        Real bracket = et / ldexp(sinh(t), 1) + (cos(s3 + pi_third) - ldexp(et, -1)) / (cosh(t) - cos(s3));
        Real v = bracket / root(Real(n, prec), 3);
        return *e == 0 ? Complex(v) : Complex(-v);
    };
    double c = std::cbrt(b.to_double());
    auto bound = [&](long n) { return detail::root_exponential_tail(n, 1.0 / 3.0, 3, c, 4.0); };
    auto s = detail::sum_until(term, bound, detail::log_of(budget.target_tail) - std::log(4.0), budget, prec);
    s.value.round_to(ctx.bits());
    return s;
}

// alpha^3 beta = 2 pi^4:
//   sum_r sum_n chi5(r) n e^{-(r/5)(n alpha)^3}/(1 - e^{-(n alpha)^3})
//     = (G(chi5)/3) (2 pi/alpha^3)^{2/3} [L(1/3, chi5) + cubic_bracket_sum(beta)]
// Extras: the bracket through the complex G_j form, the recovered L(1/3, chi5) and the direct value.
inline IdentityReport verify_L_one_third(const Real& alpha, const PrecisionContext& ctx, const TruncationBudget& budget) {
    detail::require_positive_alpha(alpha);
    ReportBuilder report(IdentityId::l_one_third, ctx);
    report.param("alpha", alpha);

    mpfr_prec_t prec = ctx.bits();
    const auto& chi = detail::quintic_character();
    Real pi = ctx.pi();
    Real x = pow(alpha, 3);
    Real beta = ldexp(pow(pi, 4), 1) / x;

    SeriesParams p{3, 1, x, chi};
    auto F = lambert_F(p, ctx, budget);
    report.count("F", F.terms_used);

    Complex scale = gauss_sum(chi, ctx) * pow(ldexp(pi, 1) / x, Real(mpq_class(2, 3), prec)) / 3L;
    TruncationBudget inner = budget;
    Real size = abs(scale);
    if (size > 1L) inner.target_tail = budget.target_tail / size;
    auto bracket = cubic_bracket_sum(beta, ctx, inner);
    report.count("bracket", bracket.terms_used);
    Complex l_third = dirichlet_l(Real(mpq_class(1, 3), prec), chi, ctx);
    Complex rhs = scale * (l_third + bracket.value);

    auto J = correction_J(p, ctx, budget);
    report.count("G", J.terms_used);
    report.extra("bracket_real", bracket.value);
    report.extra("bracket_complex", J.value / scale);
    report.extra("L_recovered", F.value / scale - bracket.value);
    report.extra("L_direct", l_third);
    report.extra("beta", Complex(beta));
    return report.finish(std::move(F.value), std::move(rhs));
}

// F(N, (N+1)/2, x) = R0 + R1 + R(N) + K for odd N and even primitive chi.
inline IdentityReport verify_h_special(long N, const Real& x, const DirichletCharacter& chi,
                                       const PrecisionContext& ctx, const TruncationBudget& budget) {
    require(N >= 1, ErrorKind::parameter, "N must be positive");
    require(N % 2 == 1, ErrorKind::unsupported_case, "needs odd N");
    require(chi.is_even(), ErrorKind::unsupported_case, "needs an even character");
    require(chi.is_primitive(), ErrorKind::primitivity, "needs a primitive character");
    require_positive_x(x);

    ReportBuilder report(IdentityId::h_special, ctx);
    report.param("N", N).param("x", x).param("q", chi.modulus()).param("chi", chi.literal());

    long q = chi.modulus();
    SeriesParams p{N, (N + 1) / 2, x, chi};
    auto F = lambert_F(p, ctx, budget);
    report.count("F", F.terms_used);

    Complex R0 = logarithmic_residue_at_zero(N, x, chi, ctx);
    Complex rhs = R0;
    if (q == 1) rhs += Complex(zeta_integer(N + 1, ctx) / x);
    if (N == 1) rhs += l_at_integer(-1, chi, ctx) * x / (2L * q);
    auto K = sum_K(N, x, chi, ctx, budget);
    report.count("G", K.terms_used);
    rhs += K.value;
    report.extra("R0", R0);
    report.extra("K", K.value);
    return report.finish(std::move(F.value), std::move(rhs));
}

// alpha beta = pi^2:
//   sum 1/(n(e^{2n alpha} - 1)) - sum 1/(n(e^{2n beta} - 1)) = (beta - alpha)/12 + log(alpha/beta)/4
inline IdentityReport verify_eta_identity(const Real& alpha, const PrecisionContext& ctx,
                                          const TruncationBudget& budget) {
    detail::require_positive_alpha(alpha);
    ReportBuilder report(IdentityId::eta, ctx);
    report.param("alpha", alpha);

    mpfr_prec_t prec = ctx.bits();
    Real beta = ctx.pi() * ctx.pi() / alpha;
    Real one(1, prec);
    auto a = detail::plain_kernel(one, 1, Complex(ldexp(alpha, 1)), ctx, budget);
    auto b = detail::plain_kernel(one, 1, Complex(ldexp(beta, 1)), ctx, budget);
    report.count("alpha", a.terms_used);
    report.count("beta", b.terms_used);
    Complex lhs = a.value - b.value;
    Complex rhs((beta - alpha) / 12L + ldexp(log(alpha / beta), -2));
    return report.finish(std::move(lhs), std::move(rhs));
}

// sum_m (cos t - sin t - e^{-t}) / (sqrt(m) (cosh t - cos t)), t = sqrt(m beta).
inline SeriesValue half_bracket_sum(const Real& beta, const PrecisionContext& ctx, const TruncationBudget& budget) {
    mpfr_prec_t prec = ctx.bits() + bits_for_digits(5);
    Real b(beta, prec);
    auto term = [&](long n) {
        Real t = sqrt(b * n);
        Real s(prec), c(prec);
        sin_cos(t, s, c);
        return Complex((c - s - exp(-t)) / (sqrt(Real(n, prec)) * (cosh(t) - c)));
    };
    double c = std::sqrt(b.to_double());
    auto bound = [&](long n) { return detail::root_exponential_tail(n, 0.5, 2, c, 8.0); };
    auto s = detail::sum_until(term, bound, detail::log_of(budget.target_tail) - std::log(4.0), budget, prec);
    s.value.round_to(ctx.bits());
    return s;
}

// alpha beta = 4 pi^3:
//   sum 1/(e^{n^2 alpha} - 1) = 1/4 + pi^2/(6 alpha) + (sqrt(beta)/4 pi) (zeta(1/2) + half_bracket_sum(beta))
// Extras: zeta(1/2) recovered from the lhs, and the direct value.
inline IdentityReport verify_zeta_half(const Real& alpha, const PrecisionContext& ctx, const TruncationBudget& budget) {
    detail::require_positive_alpha(alpha);
    ReportBuilder report(IdentityId::zeta_half, ctx);
    report.param("alpha", alpha);

    mpfr_prec_t prec = ctx.bits();
    Real pi = ctx.pi();
    Real beta = ldexp(pow(pi, 3), 2) / alpha;
    auto F = lambert_F({2, 1, alpha, principal_character(1)}, ctx, budget);
    report.count("F", F.terms_used);

    Real scale = sqrt(beta) / ldexp(pi, 2);
    TruncationBudget inner = budget;
    if (scale > 1L) inner.target_tail = budget.target_tail / scale;
    auto bracket = half_bracket_sum(beta, ctx, inner);
    report.count("bracket", bracket.terms_used);
    Real zeta_half = riemann_zeta(Real(mpq_class(1, 2), prec), ctx);
    Real head = ldexp(Real(1, prec), -2) + pi * pi / (alpha * 6L);
    Complex rhs = Complex(head) + (Complex(zeta_half) + bracket.value) * scale;
    report.extra("zeta_recovered", (F.value - Complex(head)) / scale - bracket.value);
    report.extra("zeta_direct", Complex(zeta_half));
    return report.finish(std::move(F.value), std::move(rhs));
}

}  // namespace charzeta
