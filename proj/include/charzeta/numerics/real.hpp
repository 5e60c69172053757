#pragma once

#include <mpfr.h>
#include <gmpxx.h>

#include <algorithm>
#include <cmath>
#include <compare>
#include <cstdlib>
#include <memory>
#include <ostream>
#include <string>
#include <string_view>
#include <utility>

#include "charzeta/error.hpp"

namespace charzeta {

// Owning wrapper over mpfr_t. The result of a binary operation carries the
// larger of the two operand precisions; every operation rounds to nearest.
class Real {
public:
    explicit Real(mpfr_prec_t prec) {
        mpfr_init2(v_, clamp_prec(prec));
        mpfr_set_zero(v_, 1);
    }
    Real(long value, mpfr_prec_t prec) : Real(prec) { mpfr_set_si(v_, value, MPFR_RNDN); }
    Real(const mpq_class& value, mpfr_prec_t prec) : Real(prec) {
        mpfr_set_q(v_, value.get_mpq_t(), MPFR_RNDN);
    }
    Real(const mpz_class& value, mpfr_prec_t prec) : Real(prec) {
        mpfr_set_z(v_, value.get_mpz_t(), MPFR_RNDN);
    }
    Real(const Real& other, mpfr_prec_t prec) : Real(prec) { mpfr_set(v_, other.v_, MPFR_RNDN); }

    static Real from_double(double value, mpfr_prec_t prec) {
        Real r(prec);
        mpfr_set_d(r.v_, value, MPFR_RNDN);
        return r;
    }

    // Accepts anything mpfr_strtofr understands in base 10 ("1.25", "-3e-7", "inf" is rejected).
    static Real parse(std::string_view text, mpfr_prec_t prec) {
        Real r(prec);
        std::string buf(text);
        char* end = nullptr;
        mpfr_strtofr(r.v_, buf.c_str(), &end, 10, MPFR_RNDN);
        require(end != buf.c_str() && *end == '\0' && mpfr_number_p(r.v_), ErrorKind::format,
                "not a finite decimal number: '" + buf + "'");
        return r;
    }

    Real(const Real& other) {
        mpfr_init2(v_, mpfr_get_prec(other.v_));
        mpfr_set(v_, other.v_, MPFR_RNDN);
    }
    Real(Real&& other) noexcept {
        v_[0] = other.v_[0];
        other.v_[0]._mpfr_d = nullptr;
    }
    Real& operator=(const Real& other) {
        if (this == &other) return *this;
        if (!live()) {
            mpfr_init2(v_, mpfr_get_prec(other.v_));
        } else if (mpfr_get_prec(v_) != mpfr_get_prec(other.v_)) {
            mpfr_set_prec(v_, mpfr_get_prec(other.v_));
        }
        mpfr_set(v_, other.v_, MPFR_RNDN);
        return *this;
    }
    Real& operator=(Real&& other) noexcept {
        if (this != &other) std::swap(v_[0], other.v_[0]);
        return *this;
    }
    ~Real() {
        if (live()) mpfr_clear(v_);
    }

    mpfr_prec_t prec() const { return mpfr_get_prec(v_); }
    mpfr_ptr raw() { return v_; }
    mpfr_srcptr raw() const { return v_; }

    // Rounds in place to a new precision.
    Real& round_to(mpfr_prec_t prec) {
        mpfr_prec_round(v_, clamp_prec(prec), MPFR_RNDN);
        return *this;
    }
    Real rounded(mpfr_prec_t prec) const { return Real(*this, prec); }

    bool is_zero() const { return mpfr_zero_p(v_) != 0; }
    bool is_finite() const { return mpfr_number_p(v_) != 0; }
    bool is_integer() const { return mpfr_integer_p(v_) != 0; }
    int sign() const { return mpfr_sgn(v_); }
    double to_double() const { return mpfr_get_d(v_, MPFR_RNDN); }
    long to_long() const { return mpfr_get_si(v_, MPFR_RNDN); }
    // Binary exponent e with 0.5 <= |x| / 2^e < 1; very negative for zero.
    long exponent2() const { return is_zero() ? -(1L << 40) : static_cast<long>(mpfr_get_exp(v_)); }
    // Decimal order of magnitude estimate, log10|x|.
    double log10_abs() const {
        if (is_zero()) return -1e300;
        long e = 0;
        double m = mpfr_get_d_2exp(&e, v_, MPFR_RNDN);
        return std::log10(std::fabs(m)) + static_cast<double>(e) * 0.30102999566398120;
    }

    // Shortest decimal string that reads back to the same value at this precision.
    std::string to_exact_string() const { return format(0); }
    // Scientific notation with the given number of significant digits.
    std::string to_string(int significant) const { return format(std::max(1, significant)); }

    Real& operator+=(const Real& o) { return apply(mpfr_add, o); }
    Real& operator-=(const Real& o) { return apply(mpfr_sub, o); }
    Real& operator*=(const Real& o) { return apply(mpfr_mul, o); }
    Real& operator/=(const Real& o) { return apply(mpfr_div, o); }
    Real& operator+=(long o) { mpfr_add_si(v_, v_, o, MPFR_RNDN); return *this; }
    Real& operator-=(long o) { mpfr_sub_si(v_, v_, o, MPFR_RNDN); return *this; }
    Real& operator*=(long o) { mpfr_mul_si(v_, v_, o, MPFR_RNDN); return *this; }
    Real& operator/=(long o) { mpfr_div_si(v_, v_, o, MPFR_RNDN); return *this; }

    Real operator-() const {
        Real r(*this);
        mpfr_neg(r.v_, r.v_, MPFR_RNDN);
        return r;
    }

    friend Real operator+(const Real& a, const Real& b) { return binary(mpfr_add, a, b); }
    friend Real operator-(const Real& a, const Real& b) { return binary(mpfr_sub, a, b); }
    friend Real operator*(const Real& a, const Real& b) { return binary(mpfr_mul, a, b); }
    friend Real operator/(const Real& a, const Real& b) { return binary(mpfr_div, a, b); }
    friend Real operator+(Real&& a, const Real& b) { return reuse(mpfr_add, std::move(a), b); }
    friend Real operator-(Real&& a, const Real& b) { return reuse(mpfr_sub, std::move(a), b); }
    friend Real operator*(Real&& a, const Real& b) { return reuse(mpfr_mul, std::move(a), b); }
    friend Real operator/(Real&& a, const Real& b) { return reuse(mpfr_div, std::move(a), b); }

    friend Real operator+(Real a, long b) { return a += b; }
    friend Real operator-(Real a, long b) { return a -= b; }
    friend Real operator*(Real a, long b) { return a *= b; }
    friend Real operator/(Real a, long b) { return a /= b; }
    friend Real operator+(long a, Real b) { return b += a; }
    friend Real operator*(long a, Real b) { return b *= a; }
    friend Real operator-(long a, Real b) {
        mpfr_si_sub(b.v_, a, b.v_, MPFR_RNDN);
        return b;
    }
    friend Real operator/(long a, Real b) {
        mpfr_si_div(b.v_, a, b.v_, MPFR_RNDN);
        return b;
    }

    friend bool operator==(const Real& a, const Real& b) { return mpfr_equal_p(a.v_, b.v_) != 0; }
    friend std::partial_ordering operator<=>(const Real& a, const Real& b) {
        if (mpfr_unordered_p(a.v_, b.v_)) return std::partial_ordering::unordered;
        int c = mpfr_cmp(a.v_, b.v_);
        return c < 0 ? std::partial_ordering::less
                     : (c > 0 ? std::partial_ordering::greater : std::partial_ordering::equivalent);
    }
    friend bool operator==(const Real& a, long b) { return mpfr_cmp_si(a.v_, b) == 0; }
    friend std::partial_ordering operator<=>(const Real& a, long b) {
        int c = mpfr_cmp_si(a.v_, b);
        return c < 0 ? std::partial_ordering::less
                     : (c > 0 ? std::partial_ordering::greater : std::partial_ordering::equivalent);
    }

    friend std::ostream& operator<<(std::ostream& os, const Real& x) { return os << x.to_string(20); }

    template <class F>
    Real unary(F f) const {
        Real r(prec());
        f(r.v_, v_, MPFR_RNDN);
        return r;
    }

private:
    mpfr_t v_;

    bool live() const { return v_[0]._mpfr_d != nullptr; }

    static mpfr_prec_t clamp_prec(mpfr_prec_t prec) {
        return std::clamp<mpfr_prec_t>(prec, MPFR_PREC_MIN, MPFR_PREC_MAX);
    }

    using BinaryFn = int (*)(mpfr_ptr, mpfr_srcptr, mpfr_srcptr, mpfr_rnd_t);

    Real& apply(BinaryFn f, const Real& o) {
        if (o.prec() > prec()) mpfr_prec_round(v_, o.prec(), MPFR_RNDN);
        f(v_, v_, o.v_, MPFR_RNDN);
        return *this;
    }
    static Real binary(BinaryFn f, const Real& a, const Real& b) {
        Real r(std::max(a.prec(), b.prec()));
        f(r.v_, a.v_, b.v_, MPFR_RNDN);
        return r;
    }
    static Real reuse(BinaryFn f, Real&& a, const Real& b) {
        if (a.prec() < b.prec()) return binary(f, a, b);
        f(a.v_, a.v_, b.v_, MPFR_RNDN);
        return std::move(a);
    }

    std::string format(int significant) const {
        if (mpfr_nan_p(v_)) return "nan";
        if (mpfr_inf_p(v_)) return mpfr_sgn(v_) > 0 ? "inf" : "-inf";
        if (mpfr_zero_p(v_)) return "0";
        mpfr_exp_t exp10 = 0;
        std::unique_ptr<char, void (*)(char*)> digits(
            mpfr_get_str(nullptr, &exp10, 10, static_cast<size_t>(significant), v_, MPFR_RNDN),
            [](char* p) { mpfr_free_str(p); });
        std::string mant(digits.get());
        std::string sign;
        if (!mant.empty() && mant.front() == '-') {
            sign = "-";
            mant.erase(0, 1);
        }
        // Strip trailing zeros of the mantissa; keeps the representation short.
        while (mant.size() > 1 && mant.back() == '0') mant.pop_back();
        std::string out = sign + mant.substr(0, 1);
        if (mant.size() > 1) out += "." + mant.substr(1);
        long e = static_cast<long>(exp10) - 1;
        if (e != 0) out += "e" + std::to_string(e);
        return out;
    }
};

inline Real abs(const Real& x) { return x.unary(mpfr_abs); }
inline Real sqrt(const Real& x) { return x.unary(mpfr_sqrt); }
inline Real exp(const Real& x) { return x.unary(mpfr_exp); }
inline Real expm1(const Real& x) { return x.unary(mpfr_expm1); }
inline Real log(const Real& x) { return x.unary(mpfr_log); }
inline Real log1p(const Real& x) { return x.unary(mpfr_log1p); }
inline Real sin(const Real& x) { return x.unary(mpfr_sin); }
inline Real cos(const Real& x) { return x.unary(mpfr_cos); }
inline Real tan(const Real& x) { return x.unary(mpfr_tan); }
inline Real sinh(const Real& x) { return x.unary(mpfr_sinh); }
inline Real cosh(const Real& x) { return x.unary(mpfr_cosh); }
inline Real atan(const Real& x) { return x.unary(mpfr_atan); }
inline Real floor(const Real& x) {
    Real r(x.prec());
    mpfr_floor(r.raw(), x.raw());
    return r;
}
inline Real ceil(const Real& x) {
    Real r(x.prec());
    mpfr_ceil(r.raw(), x.raw());
    return r;
}
inline Real round_nearest(const Real& x) {
    Real r(x.prec());
    mpfr_round(r.raw(), x.raw());
    return r;
}
inline Real atan2(const Real& y, const Real& x) {
    Real r(std::max(y.prec(), x.prec()));
    mpfr_atan2(r.raw(), y.raw(), x.raw(), MPFR_RNDN);
    return r;
}
inline Real hypot(const Real& a, const Real& b) {
    Real r(std::max(a.prec(), b.prec()));
    mpfr_hypot(r.raw(), a.raw(), b.raw(), MPFR_RNDN);
    return r;
}
inline Real pow(const Real& base, const Real& e) {
    Real r(std::max(base.prec(), e.prec()));
    mpfr_pow(r.raw(), base.raw(), e.raw(), MPFR_RNDN);
    return r;
}
inline Real pow(const Real& base, long e) {
    Real r(base.prec());
    mpfr_pow_si(r.raw(), base.raw(), e, MPFR_RNDN);
    return r;
}
inline Real pow_int(long base, long e, mpfr_prec_t prec) {
    Real b(base, prec);
    return pow(b, e);
}
inline Real root(const Real& x, unsigned long k) {
    Real r(x.prec());
    mpfr_rootn_ui(r.raw(), x.raw(), k, MPFR_RNDN);
    return r;
}
inline Real ldexp(const Real& x, long e) {
    Real r(x);
    mpfr_mul_2si(r.raw(), r.raw(), e, MPFR_RNDN);
    return r;
}
inline Real max(const Real& a, const Real& b) { return a < b ? b : a; }
inline Real min(const Real& a, const Real& b) { return b < a ? b : a; }

inline Real const_pi(mpfr_prec_t prec) {
    Real r(prec);
    mpfr_const_pi(r.raw(), MPFR_RNDN);
    return r;
}
inline Real const_log2(mpfr_prec_t prec) {
    Real r(prec);
    mpfr_const_log2(r.raw(), MPFR_RNDN);
    return r;
}
// 10^e exactly rounded.
inline Real pow10(long e, mpfr_prec_t prec) {
    Real r(10, prec);
    return pow(r, e);
}

inline void sin_cos(const Real& x, Real& s, Real& c) {
    s = Real(x.prec());
    c = Real(x.prec());
    mpfr_sin_cos(s.raw(), c.raw(), x.raw(), MPFR_RNDN);
}

// Bits needed for a given number of decimal digits.
inline mpfr_prec_t bits_for_digits(long digits) {
    return static_cast<mpfr_prec_t>(std::ceil(static_cast<double>(digits) * 3.3219280948873623)) + 4;
}

inline void require_finite(const Real& x, std::string_view what) {
    require(x.is_finite(), ErrorKind::overflow, std::string(what) + " is not finite");
}

}  // namespace charzeta
