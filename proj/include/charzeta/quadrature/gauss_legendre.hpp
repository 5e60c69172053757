#pragma once

#include <cmath>
#include <vector>

#include "charzeta/error.hpp"
#include "charzeta/numerics/complex.hpp"

namespace charzeta::quadrature {

// n-point Gauss-Legendre rule on [-1, 1].
class GaussLegendre {
public:
    GaussLegendre(int points, mpfr_prec_t prec) {
        require(points >= 1, ErrorKind::parameter, "Gauss-Legendre needs at least one node");
        nodes_.reserve(static_cast<std::size_t>(points));
        weights_.reserve(static_cast<std::size_t>(points));
        Real pi = const_pi(prec);
        Real eps = ldexp(Real(1, prec), -static_cast<long>(prec) + 4);
        for (int i = 1; i <= points; ++i) {
            // Tricomi initial guess, then Newton on P_n.
            Real x = cos(pi * (4L * i - 1) / (4L * points + 2));
            Real derivative(prec);
            for (int iter = 0; iter < 100; ++iter) {
                Real p0(1, prec), p1 = x;
                for (int k = 2; k <= points; ++k) {
                    Real p2 = ((2L * k - 1) * x * p1 - (k - 1L) * p0) / static_cast<long>(k);
                    p0 = std::move(p1);
                    p1 = std::move(p2);
                }
                // P_n' = n (x P_n - P_{n-1}) / (x^2 - 1)
                derivative = static_cast<long>(points) * (x * p1 - p0) / (x * x - 1L);
                Real dx = p1 / derivative;
                x -= dx;
                if (abs(dx) < eps) break;
            }
            Real p0(1, prec), p1 = x;
            for (int k = 2; k <= points; ++k) {
                Real p2 = ((2L * k - 1) * x * p1 - (k - 1L) * p0) / static_cast<long>(k);
                p0 = std::move(p1);
                p1 = std::move(p2);
            }
            derivative = static_cast<long>(points) * (x * p1 - p0) / (x * x - 1L);
            weights_.push_back(2L / ((1L - x * x) * derivative * derivative));
            nodes_.push_back(std::move(x));
        }
    }

    int size() const { return static_cast<int>(nodes_.size()); }

    // Integral of f over [a, b].
    template <class F>
    Complex integrate(F&& f, const Real& a, const Real& b) const {
        Real half_width = ldexp(b - a, -1);
        Real mid = ldexp(a + b, -1);
        Complex acc(a.prec());
        for (std::size_t i = 0; i < nodes_.size(); ++i) acc += f(mid + half_width * nodes_[i]) * weights_[i];
        return acc * half_width;
    }

private:
    std::vector<Real> nodes_;
    std::vector<Real> weights_;
};

}  // namespace charzeta::quadrature
