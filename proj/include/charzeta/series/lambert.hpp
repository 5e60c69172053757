#pragma once

#include <cmath>
#include <vector>

#include "charzeta/series/budget.hpp"

namespace charzeta {

namespace detail {

// The n-th term of F with the r-sum closed:
//   n^{N-2h} sum_r chi(r) E^r / (1 - e^{-n^N x}),  E = e^{-n^N x/q}.
class LambertTerms {
public:
    LambertTerms(const SeriesParams& p, mpfr_prec_t prec)
        : N_(p.N), power_(p.N - 2 * p.h), q_(p.chi.modulus()), x_(p.x, prec), prec_(prec),
          values_(p.chi.value_table(prec)) {}

    Complex operator()(long n) const {
        mpz_class nN;
        mpz_ui_pow_ui(nN.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(N_));
        Real t = Real(nN, prec_) * x_;
        Real ratio = exp(-(t / q_));
        Real rpow = ratio;
        Complex acc(prec_);
        for (long r = 1; r <= q_; ++r) {
            const Complex& w = values_[static_cast<std::size_t>(r % q_)];
            if (!w.is_zero()) acc += w * rpow;
            rpow *= ratio;
        }
        Real denom = -expm1(-t);
        return acc * pow(Real(n, prec_), power_) / denom;
    }

    // Whether log(n^{N-2h} e^{-n^N x/q} q / (1 - e^{-x})) < log_target. Held
    // false while n^N x/q < 2(N-2h) log n, where the polynomial factor may still win.
    bool below(long n, double log_target) const {
        double ln_n = std::log(static_cast<double>(n));
        double decay = std::exp(static_cast<double>(N_) * ln_n) * x_.to_double() / static_cast<double>(q_);
        if (!std::isfinite(decay)) return true;
        if (power_ > 0 && decay < 2.0 * static_cast<double>(power_) * ln_n) return false;
        double xd = x_.to_double();
        double log_bound = static_cast<double>(power_) * ln_n - decay + std::log(static_cast<double>(q_)) -
                           std::log(-std::expm1(-xd));
        return log_bound < log_target;
    }

private:
    long N_;
    long power_;
    long q_;
    Real x_;
    mpfr_prec_t prec_;
    std::vector<Complex> values_;
};

}  // namespace detail

// F(2h-N, x, chi) = sum_r sum_n chi(r) n^{N-2h} e^{-(r/q) n^N x} / (1 - e^{-n^N x}),
// n-outer; stops once the n-term bound is below target_tail/4.
inline SeriesValue lambert_F(const SeriesParams& p, const PrecisionContext& ctx, const TruncationBudget& budget) {
    validate(p);
    mpfr_prec_t prec = ctx.bits() + bits_for_digits(5);
    detail::LambertTerms term(p, prec);
    double log_target = detail::log_of(budget.target_tail) - std::log(4.0);
    Complex total(prec);
    for (long n = 1;; ++n) {
        require(n <= budget.max_terms, ErrorKind::non_convergence, "F series hit the term cap");
        total += term(n);
        if (term.below(n, log_target)) {
            total.round_to(ctx.bits());
            require_finite(total, "F");
            return {std::move(total), n};
        }
    }
}

// The first `terms` terms of F, without a tail test.
inline SeriesValue lambert_F_truncated(const SeriesParams& p, long terms, const PrecisionContext& ctx) {
    validate(p);
    require(terms >= 1, ErrorKind::parameter, "need at least one term");
    mpfr_prec_t prec = ctx.bits() + bits_for_digits(5);
    detail::LambertTerms term(p, prec);
    Complex total(prec);
    for (long n = 1; n <= terms; ++n) total += term(n);
    total.round_to(ctx.bits());
    require_finite(total, "F");
    return {std::move(total), terms};
}

}  // namespace charzeta
