#pragma once

#include <cmath>
#include <string>

#include "charzeta/characters/character.hpp"
#include "charzeta/error.hpp"
#include "charzeta/numerics/complex.hpp"
#include "charzeta/numerics/context.hpp"

namespace charzeta {

// Per-series truncation policy. target_tail bounds the omitted tail (absolute).
struct TruncationBudget {
    Real target_tail;
    long max_terms = 10'000'000;

    static TruncationBudget from(const PrecisionContext& ctx) { return {ctx.target_tail()}; }

    TruncationBudget tightened(long factor_pow10) const {
        return {target_tail * pow10(-factor_pow10, target_tail.prec()), max_terms};
    }
};

struct SeriesValue {
    Complex value;
    long terms_used = 0;
};

// Parameters (N, h, x, chi) shared by F, J and the identity evaluators.
struct SeriesParams {
    long N = 1;
    long h = 0;
    Real x;
    DirichletCharacter chi;
};

namespace detail {

// natural log of a positive Real, as a double (safe far outside double range)
inline double log_of(const Real& positive) { return positive.log10_abs() * std::log(10.0); }

}  // namespace detail

inline void require_positive_x(const Real& x) {
    require(x.sign() > 0 && x.is_finite(), ErrorKind::parameter, "x must be a positive real");
}

// (chi even) or (chi odd and N even).
inline void require_parity_admissible(long N, const DirichletCharacter& chi) {
    require(chi.is_even() || N % 2 == 0, ErrorKind::unsupported_case,
            "odd characters need even N (got N = " + std::to_string(N) + ")");
}

inline void validate(const SeriesParams& p) {
    require(p.N >= 1, ErrorKind::parameter, "N must be positive");
    require_positive_x(p.x);
}

}  // namespace charzeta
