#pragma once

#include <vector>

#include "charzeta/characters/character.hpp"
#include "charzeta/numerics/bernoulli.hpp"

namespace charzeta {

// B_{n,chi} = q^{n-1} sum_r chi(r) B_n(r/q), held exactly as a rational
// combination sum_k coefficients[k] e(k/order) of roots of unity.
class GeneralizedBernoulli {
public:
    GeneralizedBernoulli(long n, DirichletCharacter chi) : n_(n), chi_(std::move(chi)) {
        require(n >= 0, ErrorKind::parameter, "generalized Bernoulli index must be non-negative");
        coefficients_.assign(static_cast<std::size_t>(chi_.order()), mpq_class(0));
        long q = chi_.modulus();
        mpz_class scale;
        mpq_class factor;
        if (n >= 1) {
            mpz_ui_pow_ui(scale.get_mpz_t(), static_cast<unsigned long>(q), static_cast<unsigned long>(n - 1));
            factor = scale;
        } else {
            factor = mpq_class(1, q);
        }
        for (long r = 1; r <= q; ++r) {
            auto e = chi_.exponent(r);
            if (!e) continue;
            coefficients_[static_cast<std::size_t>(*e)] += bernoulli_polynomial(n, mpq_class(r, q)) * factor;
        }
    }

    long index() const { return n_; }
    const DirichletCharacter& character() const { return chi_; }
    const std::vector<mpq_class>& coefficients() const { return coefficients_; }

    Complex value(mpfr_prec_t prec) const {
        Complex total(prec);
        for (long k = 0; k < chi_.order(); ++k) {
            const auto& c = coefficients_[static_cast<std::size_t>(k)];
            if (c == 0) continue;
            total += DirichletCharacter::root_of_unity(k, chi_.order(), prec) * Real(c, prec);
        }
        return total;
    }
    Complex value(const PrecisionContext& ctx) const { return value(ctx.bits()); }

private:
    long n_;
    DirichletCharacter chi_;
    std::vector<mpq_class> coefficients_;
};

inline GeneralizedBernoulli generalized_bernoulli(long n, const DirichletCharacter& chi) { return {n, chi}; }

inline Complex generalized_bernoulli(long n, const DirichletCharacter& chi, const PrecisionContext& ctx) {
    return GeneralizedBernoulli(n, chi).value(ctx);
}

}  // namespace charzeta
