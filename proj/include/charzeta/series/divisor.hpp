#pragma once

#include "charzeta/characters/character.hpp"
#include "charzeta/numerics/complex.hpp"

namespace charzeta {

// sigma_{r,chi}^{(N)}(n) = sum over d with d^N | n of d^r chi(n / d^N).
inline Complex divisor_sigma(const Complex& r, long N, const DirichletCharacter& chi, long n) {
    require(n >= 1, ErrorKind::parameter, "n must be positive");
    require(N >= 1, ErrorKind::parameter, "N must be positive");
    mpfr_prec_t prec = r.prec();
    Complex total(prec);
    for (long d = 1;; ++d) {
        // d^N, stopping as soon as it passes n
        long step = 1;
        for (long k = 0; k < N && step <= n; ++k) step = step > n / d ? n + 1 : step * d;
        if (step > n) break;
        if (n % step != 0) continue;
        long cofactor = n / step;
        if (!chi.exponent(cofactor)) continue;
        Complex term = chi.evaluate(cofactor, prec);
        if (d > 1) term *= pow(Real(d, prec), r);
        total += term;
    }
    return total;
}

}  // namespace charzeta
