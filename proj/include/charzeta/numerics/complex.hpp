#pragma once

#include <ostream>
#include <string>
#include <utility>

#include "charzeta/numerics/real.hpp"

namespace charzeta {

// Complex number over Real with plain value semantics.
struct Complex {
    Real re;
    Real im;

    explicit Complex(mpfr_prec_t prec) : re(prec), im(prec) {}
    Complex(Real real_part, Real imag_part) : re(std::move(real_part)), im(std::move(imag_part)) {}
    explicit Complex(Real real_part) : re(std::move(real_part)), im(re.prec()) {}
    Complex(long real_part, mpfr_prec_t prec) : re(real_part, prec), im(prec) {}

    static Complex i(mpfr_prec_t prec) { return {Real(prec), Real(1, prec)}; }

    mpfr_prec_t prec() const { return std::max(re.prec(), im.prec()); }
    bool is_zero() const { return re.is_zero() && im.is_zero(); }
    bool is_finite() const { return re.is_finite() && im.is_finite(); }
    bool is_real() const { return im.is_zero(); }

    Complex& round_to(mpfr_prec_t prec) {
        re.round_to(prec);
        im.round_to(prec);
        return *this;
    }

    Complex& operator+=(const Complex& o) {
        re += o.re;
        im += o.im;
        return *this;
    }
    Complex& operator-=(const Complex& o) {
        re -= o.re;
        im -= o.im;
        return *this;
    }
    Complex& operator*=(const Complex& o) {
        Real r = re * o.re - im * o.im;
        im = re * o.im + im * o.re;
        re = std::move(r);
        return *this;
    }
    Complex& operator/=(const Complex& o);
    Complex& operator*=(const Real& o) {
        re *= o;
        im *= o;
        return *this;
    }
    Complex& operator/=(const Real& o) {
        re /= o;
        im /= o;
        return *this;
    }
    Complex& operator+=(const Real& o) {
        re += o;
        return *this;
    }
    Complex& operator-=(const Real& o) {
        re -= o;
        return *this;
    }
    Complex& operator*=(long o) {
        re *= o;
        im *= o;
        return *this;
    }
    Complex& operator/=(long o) {
        re /= o;
        im /= o;
        return *this;
    }
    Complex& operator+=(long o) {
        re += o;
        return *this;
    }
    Complex& operator-=(long o) {
        re -= o;
        return *this;
    }

    Complex operator-() const { return {-re, -im}; }

    friend Complex operator+(Complex a, const Complex& b) { return a += b; }
    friend Complex operator-(Complex a, const Complex& b) { return a -= b; }
    friend Complex operator*(Complex a, const Complex& b) { return a *= b; }
    friend Complex operator/(Complex a, const Complex& b) { return a /= b; }
    friend Complex operator+(Complex a, const Real& b) { return a += b; }
    friend Complex operator-(Complex a, const Real& b) { return a -= b; }
    friend Complex operator*(Complex a, const Real& b) { return a *= b; }
    friend Complex operator/(Complex a, const Real& b) { return a /= b; }
    friend Complex operator+(const Real& a, Complex b) { return b += a; }
    friend Complex operator*(const Real& a, Complex b) { return b *= a; }
    friend Complex operator-(const Real& a, const Complex& b) { return {a - b.re, -b.im}; }
    friend Complex operator/(const Real& a, const Complex& b) { return Complex(a) / b; }
    friend Complex operator+(Complex a, long b) { return a += b; }
    friend Complex operator-(Complex a, long b) { return a -= b; }
    friend Complex operator*(Complex a, long b) { return a *= b; }
    friend Complex operator/(Complex a, long b) { return a /= b; }
    friend Complex operator*(long a, Complex b) { return b *= a; }
    friend Complex operator+(long a, Complex b) { return b += a; }
    friend Complex operator-(long a, const Complex& b) { return {a - b.re, -b.im}; }

    friend bool operator==(const Complex& a, const Complex& b) { return a.re == b.re && a.im == b.im; }

    friend std::ostream& operator<<(std::ostream& os, const Complex& z) {
        os << z.re;
        if (!z.im.is_zero()) os << (z.im.sign() < 0 ? " - " : " + ") << abs(z.im) << "i";
        return os;
    }
};

inline Real norm(const Complex& z) { return z.re * z.re + z.im * z.im; }
inline Real abs(const Complex& z) { return hypot(z.re, z.im); }
inline Real arg(const Complex& z) { return atan2(z.im, z.re); }
inline Complex conj(const Complex& z) { return {z.re, -z.im}; }
inline Complex times_i(const Complex& z) { return {-z.im, z.re}; }

inline Complex& Complex::operator/=(const Complex& o) {
    if (o.im.is_zero()) return *this /= o.re;
    // Smith's algorithm keeps the intermediate magnitudes bounded.
    if (abs(o.re) >= abs(o.im)) {
        Real ratio = o.im / o.re;
        Real den = o.re + o.im * ratio;
        Real r = (re + im * ratio) / den;
        im = (im - re * ratio) / den;
        re = std::move(r);
    } else {
        Real ratio = o.re / o.im;
        Real den = o.re * ratio + o.im;
        Real r = (re * ratio + im) / den;
        im = (im * ratio - re) / den;
        re = std::move(r);
    }
    return *this;
}

// e^{i t}
inline Complex expi(const Real& t) {
    Real s(t.prec()), c(t.prec());
    sin_cos(t, s, c);
    return {std::move(c), std::move(s)};
}

inline Complex exp(const Complex& z) {
    Real m = exp(z.re);
    Complex u = expi(z.im);
    u *= m;
    return u;
}

// e^z - 1 without cancellation near zero.
inline Complex expm1(const Complex& z) {
    if (z.im.is_zero()) return Complex(expm1(z.re));
    Real s(z.prec()), c(z.prec());
    sin_cos(z.im, s, c);
    Real half_sin = sin(ldexp(z.im, -1));
    // cos(b) - 1 = -2 sin^2(b/2)
    Real cm1 = ldexp(half_sin * half_sin, 1);
    Real em1 = expm1(z.re);
    Real re = em1 * c - cm1;
    Real im = (em1 + 1) * s;
    return {std::move(re), std::move(im)};
}

inline Complex log(const Complex& z) { return {log(abs(z)), arg(z)}; }

inline Complex sqrt(const Complex& z) {
    if (z.im.is_zero() && z.re.sign() >= 0) return Complex(sqrt(z.re));
    Real m = abs(z);
    Real a = sqrt(ldexp(m + abs(z.re), -1));
    if (z.re.sign() >= 0) return {a, z.im / ldexp(a, 1)};
    Real b = z.im.sign() < 0 ? -a : a;
    return {abs(z.im) / ldexp(a, 1), std::move(b)};
}

inline Complex pow(const Complex& base, const Complex& e) {
    if (base.is_zero()) return Complex(base.prec());
    return exp(e * log(base));
}

// base^e for a positive real base (principal branch).
inline Complex pow(const Real& base, const Complex& e) {
    Real lb = log(base);
    return exp(Complex(e.re * lb, e.im * lb));
}

inline Complex pow(const Complex& base, long e) {
    Complex result(1, base.prec());
    Complex b = base;
    bool invert = e < 0;
    unsigned long k = invert ? static_cast<unsigned long>(-(e + 1)) + 1UL : static_cast<unsigned long>(e);
    while (k != 0) {
        if (k & 1UL) result *= b;
        k >>= 1;
        if (k != 0) b *= b;
    }
    if (invert) return Complex(1, base.prec()) / result;
    return result;
}

inline Complex sin(const Complex& z) {
    Real s(z.prec()), c(z.prec());
    sin_cos(z.re, s, c);
    return {s * cosh(z.im), c * sinh(z.im)};
}

inline Complex cos(const Complex& z) {
    Real s(z.prec()), c(z.prec());
    sin_cos(z.re, s, c);
    return {c * cosh(z.im), -(s * sinh(z.im))};
}

inline Complex sinh(const Complex& z) { return -times_i(sin(times_i(z))); }
inline Complex cosh(const Complex& z) { return cos(times_i(z)); }

inline Complex polar(const Real& modulus, const Real& angle) { return expi(angle) * modulus; }

inline void require_finite(const Complex& z, std::string_view what) {
    require(z.is_finite(), ErrorKind::overflow, std::string(what) + " is not finite");
}

}  // namespace charzeta
