#pragma once

#include <cmath>
#include <string>

#include "charzeta/identities/main_theorem.hpp"

namespace charzeta {

namespace detail {

inline Real factorial_real(long n, mpfr_prec_t prec) { return Real(mpq_class(factorial(n)), prec); }

// B_a / a! as a Real; a >= 0.
inline Real bernoulli_over_factorial(long a, mpfr_prec_t prec) {
    return Real(bernoulli_number(a) / mpq_class(factorial(a)), prec);
}

inline void require_nonzero_m(long m) { require(m != 0, ErrorKind::parameter, "m must be nonzero"); }

inline void require_positive_alpha(const Real& alpha) {
    require(alpha.sign() > 0 && alpha.is_finite(), ErrorKind::parameter, "alpha must be a positive real");
}

// sum_n n^{-nu} / (exp(c n^{1/N}) - 1) with chi trivial
inline SeriesValue plain_kernel(const Real& nu, long N, const Complex& c, const PrecisionContext& ctx,
                                const TruncationBudget& budget) {
    return exponential_kernel_sum(principal_character(1), nu, N, c, ctx, budget);
}

}  // namespace detail

// Character analogue of the two-variable zeta(2m+1) identity, alpha beta^N = pi^{N+1}.
// lhs = alpha^{-2Nm/(N+1)} [F(N, (N+1)/2 + Nm, 2^N alpha) - zeta(2Nm+1) L(0, chi)]
inline IdentityReport verify_character_ramanujan(long N, long m, const Real& alpha, const DirichletCharacter& chi,
                                                 const PrecisionContext& ctx, const TruncationBudget& budget) {
    require(N >= 1, ErrorKind::parameter, "N must be positive");
    require(N % 2 == 1, ErrorKind::unsupported_case, "needs odd N");
    require(chi.is_even(), ErrorKind::unsupported_case, "needs an even character");
    detail::require_nonzero_m(m);
    detail::require_positive_alpha(alpha);
    require(chi.is_primitive(), ErrorKind::primitivity, "needs a primitive character");

    ReportBuilder report(IdentityId::character_ramanujan, ctx);
    report.param("N", N).param("m", m).param("alpha", alpha).param("q", chi.modulus()).param("chi", chi.literal());

    mpfr_prec_t prec = ctx.bits();
    long q = chi.modulus();
    Real pi = ctx.pi();
    Real beta = root(pow(pi, N + 1) / alpha, static_cast<unsigned long>(N));
    report.extra("beta", Complex(beta));
    Real exponent(mpq_class(-2 * N * m, N + 1), prec);

    SeriesParams lp{N, (N + 1) / 2 + N * m, ldexp(alpha, N), chi};
    auto F = lambert_F(lp, ctx, budget);
    report.count("F", F.terms_used);
    Complex lhs = (F.value - Complex(zeta_integer(2 * N * m + 1, ctx)) * l_at_zero(chi, ctx)) * pow(alpha, exponent);

    auto bar = chi.conjugate();
    Complex gauss = gauss_sum(chi, ctx);
    Complex l_part = l_at_integer(2 * m + 1, bar, ctx) * Real(q, prec) / (gauss_sum(bar, ctx) * 2L);

    Real nu(2 * m + 1, prec);
    Real radius = root(Real(2, prec), static_cast<unsigned long>(N)) * beta;
    TruncationBudget inner = budget;
    Real outer_scale = pow(beta, exponent) * pow(Real(2, prec), 2 * m * (N - 1)) * sqrt(Real(q, prec));
    if (outer_scale > 1L) inner.target_tail = budget.target_tail / outer_scale;
    Complex kernel_sum(prec);
    long half = (N - 1) / 2;
    for (long j = -half; j <= half; ++j) {
        Complex c = detail::turn(-j, 2 * N, prec) * radius;
        auto g = exponential_kernel_sum(bar, nu, N, c, ctx, inner);
        report.count("G", g.terms_used);
        kernel_sum += (j % 2 == 0) ? g.value : -g.value;
    }
    kernel_sum *= gauss;
    if (detail::sign_power((N + 3) / 2) < 0) kernel_sum = -kernel_sum;

    Real prefactor = pow(beta, exponent) * pow(Real(2, prec), 2 * m * (N - 1)) / N;
    if (detail::sign_power(m) < 0) prefactor = -prefactor;
    Complex rhs = (l_part + kernel_sum) * prefactor;

    // Bernoulli double products, j = 1 .. floor(m + (N+1)/2N)
    Real outer = pow(Real(2, prec), 2 * N * m);
    if (detail::sign_power(m + (N + 3) / 2) < 0) outer = -outer;
    long upper = detail::floor_div(2 * N * m + N + 1, 2 * N);
    Real beta_base(mpq_class(N, 1), prec);
    for (long j = 1; j <= upper; ++j) {
        long index = 2 * N * (m - j) + N + 1;
        if (index < 0) continue;
        Complex b = generalized_bernoulli(2 * j, chi, ctx) / detail::factorial_real(2 * j, prec);
        Real weight = detail::bernoulli_over_factorial(index, prec) / pow(Real(q, prec), 2 * j - 1) *
                      pow(alpha, Real(mpq_class(2 * j, N + 1), prec)) *
                      pow(beta, Real(mpq_class(N * (N + 1) + 2 * N * N * (m - j), N + 1), prec));
        Complex term = b * weight * outer;
        rhs += (j % 2 == 0) ? term : -term;
    }
    if (q == 1) {
        long index = 2 * N * m + N + 1;
        if (index >= 0) {
            Real r = outer * detail::bernoulli_over_factorial(index, prec) *
                     pow(beta, Real(mpq_class(N * (N + 1) + 2 * N * N * m, N + 1), prec));
            rhs += Complex(r);
        }
    }
    return report.finish(std::move(lhs), std::move(rhs));
}

// The q = 1 two-variable identity, evaluated from its own closed form:
//   alpha^{-2Nm/(N+1)} (zeta(2Nm+1)/2 + sum_n n^{-2Nm-1}/(exp((2n)^N alpha) - 1)) = ...
inline IdentityReport verify_two_variable(long N, long m, const Real& alpha, const PrecisionContext& ctx,
                                        const TruncationBudget& budget) {
    require(N >= 1, ErrorKind::parameter, "N must be positive");
    require(N % 2 == 1, ErrorKind::unsupported_case, "needs odd N");
    detail::require_nonzero_m(m);
    detail::require_positive_alpha(alpha);

    ReportBuilder report(IdentityId::two_variable, ctx);
    report.param("N", N).param("m", m).param("alpha", alpha);

    mpfr_prec_t prec = ctx.bits() + bits_for_digits(5);
    Real pi = const_pi(prec);
    Real a(alpha, prec);
    Real beta = root(pow(pi, N + 1) / a, static_cast<unsigned long>(N));
    Real exponent(mpq_class(-2 * N * m, N + 1), prec);

    // sum_n n^{-2Nm-1} / (exp((2n)^N alpha) - 1), summed until the terms fall below target
    double log_target = detail::log_of(budget.target_tail) - std::log(4.0);
    double power = static_cast<double>(-2 * N * m - 1);
    Complex direct(prec);
    long n = 1;
    for (;; ++n) {
        require(n <= budget.max_terms, ErrorKind::non_convergence, "series hit the term cap");
        mpz_class twon;
        mpz_ui_pow_ui(twon.get_mpz_t(), static_cast<unsigned long>(2 * n), static_cast<unsigned long>(N));
        Real t = Real(twon, prec) * a;
        direct += Complex(pow(Real(n, prec), -2 * N * m - 1) / expm1(t));
        double ln_n = std::log(static_cast<double>(n));
        double decay = t.to_double();
        if (decay > 2.0 * std::fabs(power) * ln_n + 1.0 &&
            power * ln_n - decay + std::log(2.0) < log_target)
            break;
    }
    report.count("direct", n);
    Complex lhs = (direct + Complex(ldexp(zeta_integer(2 * N * m + 1, ctx), -1))) * pow(a, exponent);

    Real nu(2 * m + 1, prec);
    Real radius = root(Real(2, prec), static_cast<unsigned long>(N)) * beta;
    Complex kernel_sum(prec);
    long half = (N - 1) / 2;
    TruncationBudget inner = budget;
    Real scale = pow(beta, exponent) * pow(Real(2, prec), 2 * m * (N - 1));
    if (scale > 1L) inner.target_tail = budget.target_tail / scale;
    for (long j = -half; j <= half; ++j) {
        Complex c = polar(radius, pi * j / N);
        auto g = detail::plain_kernel(nu, N, c, ctx, inner);
        report.count("G", g.terms_used);
        kernel_sum += (j % 2 == 0) ? g.value : -g.value;
    }
    if (((N + 3) / 2) % 2 != 0) kernel_sum = -kernel_sum;
    // (-beta^{2N/(N+1)})^{-m}
    Real prefactor = pow(beta, exponent) * pow(Real(2, prec), 2 * m * (N - 1)) / N;
    if (m % 2 != 0) prefactor = -prefactor;
    Complex rhs = (kernel_sum + Complex(ldexp(zeta_integer(2 * m + 1, ctx), -1))) * prefactor;

    Real outer = pow(Real(2, prec), 2 * N * m);
    if (((m + (N + 3) / 2) % 2 + 2) % 2 != 0) outer = -outer;
    long upper = detail::floor_div(2 * N * m + N + 1, 2 * N);
    for (long j = 0; j <= upper; ++j) {
        long index = N + 1 + 2 * N * (m - j);
        if (index < 0) continue;
        Real term = outer * detail::bernoulli_over_factorial(2 * j, prec) * detail::bernoulli_over_factorial(index, prec) *
                    pow(a, Real(mpq_class(2 * j, N + 1), prec)) *
                    pow(beta, Real(mpq_class(N * (N + 1) + 2 * N * N * (m - j), N + 1), prec));
        rhs += Complex(j % 2 == 0 ? term : -term);
    }
    lhs.round_to(ctx.bits());
    rhs.round_to(ctx.bits());
    return report.finish(std::move(lhs), std::move(rhs));
}

// alpha beta = pi^2, chi even primitive mod q > 1:
//   alpha^{-m} F(1, m+1, 2 alpha)
//     = (-beta)^{-m} {q/(2 G(conj chi)) L(2m+1, conj chi) + G(chi) sum conj chi(n) n^{-2m-1}/(e^{2n beta} - 1)}
//       + (-1)^m 2^{2m} sum_{j=1}^{m+1} (-1)^j q^{1-2j} B_{2j,chi}/(2j)! B_{2m-2j+2}/(2m-2j+2)! alpha^j beta^{m-j+1}
inline IdentityReport verify_katayama(long m, const Real& alpha, const DirichletCharacter& chi,
                                      const PrecisionContext& ctx, const TruncationBudget& budget) {
    detail::require_nonzero_m(m);
    detail::require_positive_alpha(alpha);
    require(chi.modulus() > 1, ErrorKind::parameter, "needs modulus q > 1");
    require(chi.is_even(), ErrorKind::unsupported_case, "needs an even character");
    require(chi.is_primitive(), ErrorKind::primitivity, "needs a primitive character");

    ReportBuilder report(IdentityId::katayama, ctx);
    report.param("m", m).param("alpha", alpha).param("q", chi.modulus()).param("chi", chi.literal());

    mpfr_prec_t prec = ctx.bits();
    long q = chi.modulus();
    Real pi = ctx.pi();
    Real beta = pi * pi / alpha;

    SeriesParams lp{1, m + 1, ldexp(alpha, 1), chi};
    auto F = lambert_F(lp, ctx, budget);
    report.count("F", F.terms_used);
    Complex lhs = F.value * pow(alpha, -m);

    auto bar = chi.conjugate();
    Real scale = pow(beta, -m) * sqrt(Real(q, prec));
    TruncationBudget inner = budget;
    if (scale > 1L) inner.target_tail = budget.target_tail / scale;
    auto g = exponential_kernel_sum(bar, Real(2 * m + 1, prec), 1, Complex(ldexp(beta, 1)), ctx, inner);
    report.count("G", g.terms_used);
    Complex braces = l_at_integer(2 * m + 1, bar, ctx) * Real(q, prec) / (gauss_sum(bar, ctx) * 2L) +
                     gauss_sum(chi, ctx) * g.value;
    Real front = pow(beta, -m);
    if (m % 2 != 0) front = -front;  // (-beta)^{-m}
    Complex rhs = braces * front;

    Real outer = pow(Real(2, prec), 2 * m);
    if (m % 2 != 0) outer = -outer;
    for (long j = 1; j <= m + 1; ++j) {
        Complex b = generalized_bernoulli(2 * j, chi, ctx) / detail::factorial_real(2 * j, prec);
        Real weight = outer * detail::bernoulli_over_factorial(2 * m - 2 * j + 2, prec) /
                      pow(Real(q, prec), 2 * j - 1) * pow(alpha, j) * pow(beta, m - j + 1);
        Complex term = b * weight;
        rhs += (j % 2 == 0) ? term : -term;
    }
    return report.finish(std::move(lhs), std::move(rhs));
}

// Ramanujan's formula for zeta(2m+1), alpha beta = pi^2:
//   F_m(alpha) = (-1)^m F_m(beta) - 2^{2m} sum_{k=0}^{m+1} (-1)^k B_{2k} B_{2m+2-2k}/((2k)!(2m+2-2k)!) alpha^{m+1-k} beta^k
// with F_m(x) = x^{-m} (zeta(2m+1)/2 + sum_n n^{-2m-1}/(e^{2nx} - 1)).
inline IdentityReport verify_classical_ramanujan(long m, const Real& alpha, const PrecisionContext& ctx,
                                                 const TruncationBudget& budget) {
    detail::require_nonzero_m(m);
    detail::require_positive_alpha(alpha);

    ReportBuilder report(IdentityId::classical_ramanujan, ctx);
    report.param("m", m).param("alpha", alpha);

    mpfr_prec_t prec = ctx.bits();
    Real beta = ctx.pi() * ctx.pi() / alpha;
    Real half_zeta = ldexp(zeta_integer(2 * m + 1, ctx), -1);
    Real nu(2 * m + 1, prec);
    auto F_m = [&](const Real& x, const char* name) {
        TruncationBudget inner = budget;
        Real scale = pow(x, -m);
        if (scale > 1L) inner.target_tail = budget.target_tail / scale;
        auto s = detail::plain_kernel(nu, 1, Complex(ldexp(x, 1)), ctx, inner);
        report.count(name, s.terms_used);
        return (s.value + Complex(half_zeta)) * pow(x, -m);
    };
    Complex lhs = F_m(alpha, "alpha");
    Complex rhs = F_m(beta, "beta");
    if (m % 2 != 0) rhs = -rhs;

    Real sum(prec);
    for (long k = 0; k <= m + 1; ++k) {
        Real term = detail::bernoulli_over_factorial(2 * k, prec) *
                    detail::bernoulli_over_factorial(2 * m + 2 - 2 * k, prec) * pow(alpha, m + 1 - k) * pow(beta, k);
        sum += (k % 2 == 0) ? term : -term;
    }
    rhs -= Complex(ldexp(sum, 2 * m));
    return report.finish(std::move(lhs), std::move(rhs));
}

}  // namespace charzeta
