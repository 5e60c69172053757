#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "charzeta/identities/report.hpp"
#include "charzeta/lfunctions/special_values.hpp"
#include "charzeta/series.hpp"

namespace charzeta {

enum class ResidueTag { R0, R1, R_main, R_neg_j };

constexpr std::string_view to_string(ResidueTag tag) noexcept {
    switch (tag) {
        case ResidueTag::R0: return "R0";
        case ResidueTag::R1: return "R1";
        case ResidueTag::R_main: return "R_main";
        case ResidueTag::R_neg_j: return "R_neg_j";
    }
    return "unknown";
}

struct ResidueEntry {
    Complex location;
    Complex value;
    ResidueTag tag = ResidueTag::R0;
    long j = 0;  // for R_neg_j, the pole sits at s = -j
};

struct ResidueLedger {
    std::vector<ResidueEntry> entries;

    Complex total(mpfr_prec_t prec) const {
        Complex sum(prec);
        for (const auto& e : entries) sum += e.value;
        return sum;
    }

    std::vector<const ResidueEntry*> with_tag(ResidueTag tag) const {
        std::vector<const ResidueEntry*> out;
        for (const auto& e : entries)
            if (e.tag == tag) out.push_back(&e);
        return out;
    }
};

namespace detail {

inline long floor_div(long a, long b) {
    long q = a / b;
    return (a % b != 0 && ((a < 0) != (b < 0))) ? q - 1 : q;
}

inline void require_main_theorem(const SeriesParams& p) {
    validate(p);
    require(p.chi.is_primitive(), ErrorKind::primitivity, "the transformation needs a primitive character");
    require(p.N - 2 * p.h != -1, ErrorKind::parameter, "N - 2h = -1 is the separate logarithmic case");
    require_parity_admissible(p.N, p.chi);
}

// The Gamma pole at s = -2m lands on (N-2h+1)/N when 2h - 1 = N(2m+1), m >= 1.
// Only even chi reaches this (odd chi forces N even), so L has a trivial zero there.
inline long coincident_pole(const SeriesParams& p) {
    long num = 2 * p.h - 1;
    if (p.N % 2 == 0 || num <= p.N || num % p.N != 0) return 0;
    long odd = num / p.N;
    return odd % 2 == 1 ? (odd - 1) / 2 : 0;
}

inline void require_logarithmic_case(const SeriesParams& p) {
    validate(p);
    require(p.N % 2 == 1, ErrorKind::unsupported_case, "N - 2h = -1 needs odd N");
    require(p.chi.is_even(), ErrorKind::unsupported_case, "N - 2h = -1 needs an even character");
    require(p.chi.is_primitive(), ErrorKind::primitivity, "needs a primitive character");
}

inline ParamList series_param_list(const SeriesParams& p, int digits) {
    return {{"N", std::to_string(p.N)},
            {"h", std::to_string(p.h)},
            {"x", p.x.to_string(digits)},
            {"q", std::to_string(p.chi.modulus())},
            {"chi", p.chi.literal()}};
}

}  // namespace detail

// Residue at s = 0 when N - 2h = -1, where the pole of zeta(Ns + 1) meets s = 0:
//   q = 1: (Euler's constant (1 - N) - log 2 pi + log x) / 2N
//   q > 1: -(1/2N) sum_r chi(r) log sin(r pi/q)
inline Complex logarithmic_residue_at_zero(long N, const Real& x, const DirichletCharacter& chi,
                                           const PrecisionContext& ctx) {
    mpfr_prec_t prec = ctx.bits();
    long q = chi.modulus();
    Real pi = ctx.pi();
    if (q == 1) return Complex((euler_gamma(ctx) * (1 - N) + log(x) - log(ldexp(pi, 1))) / (2L * N));
    Complex total(prec);
    for (long r = 1; r < q; ++r)
        if (chi.exponent(r)) total -= chi.evaluate(r, prec) * log(sin(pi * r / q));
    return total / (2L * N);
}

// Residues of Gamma(s) L(s, chi) zeta(Ns - N + 2h) (q/x)^s at s = 0, 1 (q = 1 only),
// (N-2h+1)/N and s = -j for 1 <= j <= 2 floor(h/N) + 1. When N - 2h = -1 the
// point (N-2h+1)/N is s = 0 itself and the single R0 entry carries the double pole.
inline ResidueLedger residue_ledger(const SeriesParams& p, const PrecisionContext& ctx) {
    bool logarithmic = p.N - 2 * p.h == -1;
    if (logarithmic) detail::require_logarithmic_case(p);
    else detail::require_main_theorem(p);
    mpfr_prec_t prec = ctx.bits();
    long N = p.N;
    long h = p.h;
    long q = p.chi.modulus();
    Real x_over_q = p.x / q;
    ResidueLedger ledger;

    Complex at_zero = logarithmic ? logarithmic_residue_at_zero(N, p.x, p.chi, ctx)
                                  : Complex(zeta_integer(2 * h - N, ctx)) * l_at_zero(p.chi, ctx);
    ledger.entries.push_back({Complex(prec), std::move(at_zero), ResidueTag::R0, 0});
    if (q == 1)
        ledger.entries.push_back({Complex(1, prec), Complex(zeta_integer(2 * h, ctx) / p.x), ResidueTag::R1, 0});

    long coincident = logarithmic ? 0 : detail::coincident_pole(p);
    if (!logarithmic) {
        Real s0(mpq_class(N - 2 * h + 1, N), prec);
        Complex main(prec);
        if (coincident > 0) {
            main = gamma_l_at_negative_even(coincident, p.chi, ctx) * pow(x_over_q, 2 * coincident) / N;
        } else {
            Complex gl = gamma_function(Complex(s0), ctx) * dirichlet_l(s0, p.chi, ctx);
            main = gl * pow(x_over_q, -s0) / N;
        }
        ledger.entries.push_back({Complex(s0), std::move(main), ResidueTag::R_main, 0});
    }

    long upper = 2 * detail::floor_div(h, N) + 1;
    mpz_class factorial_j1 = 1;
    for (long j = 1; j <= upper; ++j) {
        factorial_j1 *= (j + 1);
        if (j == 2 * coincident) continue;
        Complex b = generalized_bernoulli(j + 1, p.chi, ctx);
        Complex term = b * zeta_integer(-N * j - N + 2 * h, ctx) * pow(x_over_q, j) / Real(mpq_class(factorial_j1), prec);
        if (j % 2 == 0) term = -term;
        ledger.entries.push_back({Complex(-j, prec), std::move(term), ResidueTag::R_neg_j, j});
    }
    return ledger;
}

// Both sides of the transformation for F(2h - N, x, chi).
inline IdentityReport verify_main_theorem(const SeriesParams& p, const PrecisionContext& ctx,
                                          const TruncationBudget& budget) {
    detail::require_main_theorem(p);
    ReportBuilder report(IdentityId::main_theorem, ctx);
    for (auto& [k, v] : detail::series_param_list(p, ctx.digits)) report.param(k, v);

    auto lhs = lambert_F(p, ctx, budget);
    report.count("F", lhs.terms_used);
    auto ledger = residue_ledger(p, ctx);
    auto J = correction_J(p, ctx, budget);
    report.count("G", J.terms_used);
    Complex rhs = ledger.total(ctx.bits()) + J.value;
    report.extra("J", J.value);
    return report.finish(std::move(lhs.value), std::move(rhs));
}

struct TruncatedSides {
    Complex lhs;
    Complex rhs;
};

// F cut at `lhs_terms` terms; each G_j inside J cut at `rhs_terms` terms.
inline TruncatedSides main_theorem_truncated(const SeriesParams& p, long lhs_terms, long rhs_terms,
                                             const PrecisionContext& ctx) {
    detail::require_main_theorem(p);
    auto lhs = lambert_F_truncated(p, lhs_terms, ctx);
    auto J = correction_J_truncated(p, rhs_terms, ctx);
    return {std::move(lhs.value), residue_ledger(p, ctx).total(ctx.bits()) + J.value};
}

}  // namespace charzeta
