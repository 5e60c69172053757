#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <vector>

#include "charzeta/error.hpp"
#include "charzeta/numerics/real.hpp"

namespace charzeta {

inline mpz_class factorial(long n) {
    require(n >= 0, ErrorKind::parameter, "factorial of a negative integer");
    mpz_class r;
    mpz_fac_ui(r.get_mpz_t(), static_cast<unsigned long>(n));
    return r;
}

inline mpz_class binomial(long n, long k) {
    if (k < 0 || n < 0 || k > n) return 0;
    mpz_class r;
    mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
    return r;
}

namespace detail {

// Even-index Bernoulli numbers B_0, B_2, ..., B_{2m} from tangent numbers.
inline std::vector<mpq_class> even_bernoulli(long m) {
    std::vector<mpz_class> tangent(static_cast<std::size_t>(m + 1));
    std::vector<mpq_class> out(static_cast<std::size_t>(m + 1));
    out[0] = 1;
    if (m == 0) return out;
    tangent[1] = 1;
    for (long k = 2; k <= m; ++k) tangent[k] = (k - 1) * tangent[k - 1];
    for (long k = 2; k <= m; ++k)
        for (long j = k; j <= m; ++j) {
            mpz_class next = (j - k) * tangent[j - 1] + (j - k + 2) * tangent[j];
            tangent[j].swap(next);
        }
    for (long k = 1; k <= m; ++k) {
        mpz_class four_k = mpz_class(1) << static_cast<mp_bitcnt_t>(2 * k);
        mpq_class b(mpz_class(2 * k) * tangent[k], four_k * (four_k - 1));
        b.canonicalize();
        out[k] = (k % 2 == 1) ? b : mpq_class(-b);
    }
    return out;
}

inline constexpr long cached_bernoulli_pairs = 320;

inline const std::vector<mpq_class>& bernoulli_table() {
    static const std::vector<mpq_class> table = even_bernoulli(cached_bernoulli_pairs);
    return table;
}

}  // namespace detail

// Exact B_n with B_1 = -1/2.
inline mpq_class bernoulli_number(long n) {
    require(n >= 0, ErrorKind::parameter, "Bernoulli index must be non-negative");
    if (n == 1) return mpq_class(-1, 2);
    if (n % 2 == 1) return 0;
    long half = n / 2;
    if (half <= detail::cached_bernoulli_pairs) return detail::bernoulli_table()[static_cast<std::size_t>(half)];
    return detail::even_bernoulli(half).back();
}

inline Real bernoulli_real(long n, mpfr_prec_t prec) { return Real(bernoulli_number(n), prec); }

// B_n(x) = sum_k C(n,k) B_k x^{n-k}, exact for rational x.
inline mpq_class bernoulli_polynomial(long n, const mpq_class& x) {
    require(n >= 0, ErrorKind::parameter, "Bernoulli polynomial degree must be non-negative");
    // Horner in x over the coefficients C(n,k) B_k of x^{n-k}.
    mpq_class acc = 0;
    for (long k = 0; k <= n; ++k) {
        acc *= x;
        acc += mpq_class(binomial(n, k)) * bernoulli_number(k);
    }
    return acc;
}

inline Real bernoulli_polynomial(long n, const Real& x) {
    require(n >= 0, ErrorKind::parameter, "Bernoulli polynomial degree must be non-negative");
    Real acc(x.prec());
    for (long k = 0; k <= n; ++k) {
        acc *= x;
        acc += Real(mpq_class(binomial(n, k)) * bernoulli_number(k), x.prec());
    }
    return acc;
}

}  // namespace charzeta
