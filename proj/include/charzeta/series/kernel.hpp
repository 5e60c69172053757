#pragma once

#include <algorithm>
#include <cmath>
#include <numbers>
#include <vector>

#include "charzeta/numerics/bernoulli.hpp"
#include "charzeta/quadrature/exp_sinh.hpp"
#include "charzeta/series/budget.hpp"

namespace charzeta {

enum class KernelMethod { automatic, direct, euler_maclaurin };

namespace detail {

// g(u) = u^{-nu} / (exp(c u^{1/N}) - 1)
class ExponentialKernel {
public:
    ExponentialKernel(const Real& nu, long N, const Complex& c, mpfr_prec_t prec)
        : nu_(nu, prec), N_(N), c_(Complex(c).round_to(prec)), prec_(prec) {}

    Complex operator()(const Real& u) const {
        Real ur(u, prec_);
        Real v = N_ == 1 ? ur : root(ur, static_cast<unsigned long>(N_));
        return Complex(pow(ur, -nu_)) / expm1(c_ * v);
    }

    const Real& nu() const { return nu_; }
    long N() const { return N_; }
    const Complex& c() const { return c_; }
    mpfr_prec_t prec() const { return prec_; }

    // Whether the tail past n, bounded by
    //   n^{-nu} e^{-c_r n^{1/N}} (1 + N n^{1-1/N}/c_r) / (1 - e^{-c_r n^{1/N}}),  c_r = Re c,
    // is below exp(log_target). Held false while n^{-nu} e^{-c_r n^{1/N}} may still be rising.
    bool tail_below(long n, double log_target) const {
        double cr = c_.re.to_double();
        double ln_n = std::log(static_cast<double>(n));
        double nu = nu_.to_double();
        double vroot = std::exp(ln_n / static_cast<double>(N_));
        double decay = cr * vroot;
        if (decay <= -nu * static_cast<double>(N_)) return false;
        double spread = static_cast<double>(N_) * std::exp(ln_n * (1.0 - 1.0 / static_cast<double>(N_))) / cr;
        double log_bound = -nu * ln_n - decay + std::log1p(spread) - std::log(-std::expm1(-decay));
        return log_bound < log_target;
    }

    // Smallest n for which tail_below is expected to hold.
    double predicted_terms(double log_target) const {
        double cr = c_.re.to_double();
        double nu = std::fabs(nu_.to_double());
        double Nd = static_cast<double>(N_);
        double v = -log_target / cr;
        for (int it = 0; it < 30; ++it) {
            double ln_v = std::log(std::max(v, 1.0));
            double spread = Nd * std::exp((Nd - 1.0) * ln_v) / cr;
            v = (-log_target + nu * Nd * ln_v + std::log1p(spread)) / cr;
        }
        return std::pow(std::max(v, 1.0), Nd);
    }

    // Taylor coefficients in t of g(u0 (1 + t)), indices 0..count-1.
    std::vector<Complex> taylor(const Real& u0, long count) const {
        auto L = static_cast<std::size_t>(count);
        Real inv_N = Real(1, prec_) / N_;
        std::vector<Real> binom_nu(L, Real(prec_));  // binomial(-nu, m)
        std::vector<Real> binom_root(L, Real(prec_));  // binomial(1/N, m)
        binom_nu[0] = Real(1, prec_);
        binom_root[0] = Real(1, prec_);
        for (std::size_t m = 1; m < L; ++m) {
            long mm = static_cast<long>(m);
            binom_nu[m] = binom_nu[m - 1] * (-nu_ - (mm - 1)) / mm;
            binom_root[m] = binom_root[m - 1] * (inv_N - (mm - 1)) / mm;
        }
        Real v0 = N_ == 1 ? u0 : root(u0, static_cast<unsigned long>(N_));
        Complex cv0 = c_ * v0;
        // exp(c v0 ((1+t)^{1/N} - 1)) = sum E_m t^m
        std::vector<Complex> A(L, Complex(prec_));
        for (std::size_t m = 1; m < L; ++m) A[m] = cv0 * binom_root[m];
        std::vector<Complex> E(L, Complex(prec_));
        E[0] = Complex(1, prec_);
        for (std::size_t m = 1; m < L; ++m) {
            Complex acc(prec_);
            for (std::size_t k = 1; k <= m; ++k) acc += A[k] * E[m - k] * static_cast<long>(k);
            E[m] = acc / static_cast<long>(m);
        }
        // 1/(e^{c v0} E(t) - 1) by series division
        Complex e0 = exp(cv0);
        std::vector<Complex> D(L, Complex(prec_));
        D[0] = e0 - 1L;
        for (std::size_t m = 1; m < L; ++m) D[m] = e0 * E[m];
        std::vector<Complex> R(L, Complex(prec_));
        R[0] = Complex(1, prec_) / D[0];
        for (std::size_t m = 1; m < L; ++m) {
            Complex acc(prec_);
            for (std::size_t k = 1; k <= m; ++k) acc += D[k] * R[m - k];
            R[m] = -(acc * R[0]);
        }
        Real scale = pow(u0, -nu_);
        std::vector<Complex> out(L, Complex(prec_));
        for (std::size_t m = 0; m < L; ++m) {
            Complex acc(prec_);
            for (std::size_t k = 0; k <= m; ++k) acc += R[m - k] * binom_nu[k];
            out[m] = acc * scale;
        }
        return out;
    }

private:
    Real nu_;
    long N_;
    Complex c_;
    mpfr_prec_t prec_;
};

struct EulerMaclaurinPlan {
    long blocks = 0;      // K: residues r are summed directly for n = qk + r, k < K
    long max_order = 0;   // cap on the number of Bernoulli corrections
};

// u0 = qK + r must sit at distance >= delta (in units of the step q) from the
// singularities of k -> g(qk + r): the branch point u = 0 and the nearest pole
// of 1/(exp(c u^{1/N}) - 1). delta = 1.25 D log(10) / 2 pi for D target digits.
inline EulerMaclaurinPlan plan_euler_maclaurin(long q, long N, double abs_c, double log_target) {
    double delta = 1.25 * (-log_target) / (2.0 * std::numbers::pi);
    double u_min = static_cast<double>(q) * delta;
    if (N > 1) {
        double need = static_cast<double>(q) * abs_c * delta / (static_cast<double>(N) * std::numbers::pi);
        u_min = std::max(u_min, std::pow(need, static_cast<double>(N) / static_cast<double>(N - 1)));
    }
    EulerMaclaurinPlan plan;
    plan.blocks = std::max<long>(1, static_cast<long>(std::ceil(u_min / static_cast<double>(q))));
    plan.max_order = static_cast<long>(std::ceil(std::numbers::pi * delta)) + 4;
    return plan;
}

// Natural log of an upper bound for |u^{-nu} e^{-c_r u^{1/N}}| over u >= 1 and for the
// integrand |v^{N - N nu - 1} e^{-|c| w}| of the tail integral; 0 when nu >= 0.
inline double log_peak(double nu, long N, double c_re, double c_abs) {
    if (nu >= 0.0) return 0.0;
    double Nd = static_cast<double>(N);
    double a = -nu * Nd;  // exponent of v = u^{1/N}
    double summand = a * std::log(std::max(1.0, a / c_re)) - std::min(a, c_re);
    double b = a + Nd - 1.0;
    double integrand = b * std::log(std::max(1.0, b / c_abs));
    return std::max(summand, integrand);
}

inline Complex weight_at(const std::vector<Complex>& values, long n) {
    return values[static_cast<std::size_t>(n % static_cast<long>(values.size()))];
}

// sum_{k >= 0} g(qk + r) for k >= K by Euler-Maclaurin at u0 = qK + r, with the
// integral taken along the ray where c v is real.
inline Complex euler_maclaurin_tail(const ExponentialKernel& g, long q, long r, long K, long max_order,
                                    const Real& tolerance, long& used) {
    mpfr_prec_t prec = g.prec();
    Real u0(q * K + r, prec);
    long N = g.N();
    Complex tail = g(u0) * ldexp(Real(1, prec), -1);

    auto coeffs = g.taylor(u0, 2 * max_order + 2);
    Real ratio = Real(q, prec) / u0;
    Real ratio_sq = ratio * ratio;
    Real rpow = ratio;
    Real smallest(prec);
    bool settled = false;
    for (long p = 1; p <= max_order; ++p) {
        Real coef(bernoulli_number(2 * p) / (2 * p), prec);
        Complex term = coeffs[static_cast<std::size_t>(2 * p - 1)] * (coef * rpow);
        Real size = abs(term);
        tail -= term;
        ++used;
        if (size < tolerance) {
            settled = true;
            break;
        }
        // Sizes may dip where a coefficient changes sign; only sustained growth is fatal.
        require(p < 3 || size < smallest * 100L, ErrorKind::non_convergence,
                "Euler-Maclaurin corrections for the exponential kernel stopped decreasing");
        if (p == 1 || size < smallest) smallest = size;
        rpow *= ratio_sq;
    }
    require(settled, ErrorKind::non_convergence, "Euler-Maclaurin corrections did not reach the target");

    // (N/q) int_{v0}^inf v^{b-1}/(e^{cv} - 1) dv, b = N - N nu, along v = v0 + w e^{i theta}
    Real v0 = N == 1 ? u0 : root(u0, static_cast<unsigned long>(N));
    const Complex& c = g.c();
    Complex direction = expi(-arg(c));
    Real c_abs = abs(c);
    Complex cv0 = c * v0;
    Real b_minus_one = Real(N, prec) - g.nu() * N - 1L;
    Complex exponent(b_minus_one);
    auto integrand = [&](const Real& w) {
        Complex v = direction * w + v0;
        return pow(v, exponent) / expm1(cv0 + c_abs * w) * direction;
    };
    Real tol_int = tolerance * q / N;
    auto integral = quadrature::exp_sinh(integrand, tol_int, prec);
    used += integral.evaluations;
    tail += integral.value * Real(N, prec) / q;
    return tail;
}

}  // namespace detail

// sum_{n >= 1} chi(n) n^{-nu} / (exp(c n^{1/N}) - 1) for Re c > 0.
// Direct summation stops on the monotone tail bound of ExponentialKernel::tail_below.
// When more than 20000 terms would be needed (N > 1) the tail from n = qK on is
// replaced by Euler-Maclaurin per residue class.
inline SeriesValue exponential_kernel_sum(const DirichletCharacter& chi, const Real& nu, long N, const Complex& c,
                                          const PrecisionContext& ctx, const TruncationBudget& budget,
                                          KernelMethod method = KernelMethod::automatic) {
    require(N >= 1, ErrorKind::parameter, "N must be positive");
    require(c.re.sign() > 0, ErrorKind::parameter, "kernel needs Re c > 0");
    mpfr_prec_t prec = ctx.bits() + bits_for_digits(5);
    detail::ExponentialKernel g(nu, N, c, prec);
    long q = chi.modulus();
    auto values = chi.value_table(prec);
    double log_target = detail::log_of(budget.target_tail) - std::log(4.0);

    double predicted = g.predicted_terms(log_target);
    if (method == KernelMethod::automatic)
        method = (N == 1 || predicted <= 20000.0) ? KernelMethod::direct : KernelMethod::euler_maclaurin;
    require(method == KernelMethod::direct || N > 1, ErrorKind::parameter,
            "Euler-Maclaurin tail needs N > 1");

    Complex total(prec);
    if (method == KernelMethod::direct) {
        for (long n = 1;; ++n) {
            require(n <= budget.max_terms, ErrorKind::non_convergence, "G series hit the term cap");
            const Complex& w = detail::weight_at(values, n);
            if (!w.is_zero()) total += w * g(Real(n, prec));
            if (g.tail_below(n, log_target)) {
                total.round_to(ctx.bits());
                require_finite(total, "G");
                return {std::move(total), n};
            }
        }
    }

    auto plan = detail::plan_euler_maclaurin(q, N, abs(c).to_double(), log_target);
    long head = q * plan.blocks;
    require(head <= budget.max_terms, ErrorKind::non_convergence, "G series hit the term cap");
    // The Taylor recurrences cancel by up to e^{2|c| v0}; carry those digits, plus the
    // size of the kernel's peak when nu < 0 (the tolerances are absolute).
    double v0 = std::pow(static_cast<double>(head + q), 1.0 / static_cast<double>(N));
    double magnitude = detail::log_peak(nu.to_double(), N, c.re.to_double(), abs(c).to_double()) +
                       std::log(static_cast<double>(head + q));
    long extra = static_cast<long>(std::ceil((2.0 * abs(c).to_double() * v0 + std::max(0.0, magnitude)) /
                                             std::log(10.0))) + 10;
    mpfr_prec_t wide = prec + bits_for_digits(extra);
    detail::ExponentialKernel gw(nu, N, c, wide);

    for (long n = 1; n <= head; ++n) {
        const Complex& w = detail::weight_at(values, n);
        if (!w.is_zero()) total += w * g(Real(n, prec));
    }
    long used = head;
    long active = 0;
    for (long r = 1; r <= q; ++r)
        if (!detail::weight_at(values, r).is_zero()) ++active;
    Real tolerance = Real(budget.target_tail, wide) / (8L * active);
    for (long r = 1; r <= q; ++r) {
        const Complex& w = detail::weight_at(values, r);
        if (w.is_zero()) continue;
        Complex tail = detail::euler_maclaurin_tail(gw, q, r, plan.blocks, plan.max_order, tolerance, used);
        tail.round_to(prec);
        total += w * tail;
    }
    total.round_to(ctx.bits());
    require_finite(total, "G");
    return {std::move(total), used};
}

// The first `terms` terms of the kernel sum, without a tail test.
inline SeriesValue exponential_kernel_partial(const DirichletCharacter& chi, const Real& nu, long N, const Complex& c,
                                              long terms, const PrecisionContext& ctx) {
    require(N >= 1, ErrorKind::parameter, "N must be positive");
    require(terms >= 1, ErrorKind::parameter, "need at least one term");
    require(c.re.sign() > 0, ErrorKind::parameter, "kernel needs Re c > 0");
    mpfr_prec_t prec = ctx.bits() + bits_for_digits(5);
    detail::ExponentialKernel g(nu, N, c, prec);
    auto values = chi.value_table(prec);
    Complex total(prec);
    for (long n = 1; n <= terms; ++n) {
        const Complex& w = detail::weight_at(values, n);
        if (!w.is_zero()) total += w * g(Real(n, prec));
    }
    total.round_to(ctx.bits());
    require_finite(total, "G");
    return {std::move(total), terms};
}

}  // namespace charzeta
