#include <gtest/gtest.h>

#include <cmath>

#include "charzeta/numerics/bernoulli.hpp"
#include "charzeta/numerics/gamma.hpp"
#include "support.hpp"

using namespace charzeta;
using charzeta::testing::cplx;
using charzeta::testing::digits_of;
using charzeta::testing::rel_error;

namespace {

// Bernoulli numbers from sum_{k=0}^{n} C(n+1,k) B_k = 0.
std::vector<mpq_class> bernoulli_by_recurrence(long n_max) {
    std::vector<mpq_class> b(static_cast<std::size_t>(n_max + 1));
    b[0] = 1;
    for (long n = 1; n <= n_max; ++n) {
        mpq_class acc = 0;
        for (long k = 0; k < n; ++k) acc += mpq_class(binomial(n + 1, k)) * b[static_cast<std::size_t>(k)];
        b[static_cast<std::size_t>(n)] = -acc / (n + 1);
    }
    return b;
}

// Brent-McMillan: gamma = U/V - log n with Bessel-type sums.
Real euler_gamma_brent_mcmillan(long digits) {
    mpfr_prec_t prec = bits_for_digits(digits + 20);
    long n = static_cast<long>(std::ceil(static_cast<double>(digits + 5) * std::log(10.0) / 4.0)) + 1;
    Real log_n = log(Real(n, prec));
    Real a = -log_n;
    Real b(1, prec);
    Real u = a, v = b;
    Real n2(n * n, prec);
    for (long k = 1; k < 5 * n; ++k) {
        b *= n2;
        b /= k * k;
        a = (a * n2 / k + b) / k;
        u += a;
        v += b;
    }
    return u / v;
}

}  // namespace

TEST(Context, GuardPolicy) {
    EXPECT_EQ(make_context(30).guard_digits, 13);
    EXPECT_EQ(make_context(15).guard_digits, 12);
    EXPECT_EQ(make_context(30).digits, 30);
    try {
        make_context(14);
        FAIL() << "expected an invalid-precision error";
    } catch (const Error& e) {
        EXPECT_EQ(e.kind(), ErrorKind::invalid_precision);
    }
}

TEST(Real, ExactStringRoundTrip) {
    auto ctx = make_context(30);
    Real x = ctx.pi() / 7L;
    Real back = Real::parse(x.to_exact_string(), ctx.bits());
    EXPECT_TRUE(back == x);
    EXPECT_EQ(Real(-3, ctx.bits()).to_exact_string(), "-3");
}

TEST(Bernoulli, SmallValues) {
    EXPECT_EQ(bernoulli_number(0), mpq_class(1));
    EXPECT_EQ(bernoulli_number(1), mpq_class(-1, 2));
    EXPECT_EQ(bernoulli_number(12), mpq_class(-691, 2730));
}

TEST(Bernoulli, MatchesRecurrenceOracle) {
    auto oracle = bernoulli_by_recurrence(60);
    for (long n = 0; n <= 60; ++n) EXPECT_EQ(bernoulli_number(n), oracle[static_cast<std::size_t>(n)]) << n;
    for (long k = 1; k <= 20; ++k) EXPECT_EQ(bernoulli_number(2 * k + 1), mpq_class(0));
}

TEST(Bernoulli, LargeIndexBeyondCache) {
    // B_{2k} sign alternates and |B_{2k}| = 2 (2k)! zeta(2k) / (2 pi)^{2k} ~ 2 (2k)!/(2 pi)^{2k}.
    mpq_class b = bernoulli_number(700);
    EXPECT_LT(b, 0);
    EXPECT_GT(bernoulli_number(702), 0);
    auto ctx = make_context(30);
    Real ratio = Real(bernoulli_number(642), ctx.bits()) / Real(bernoulli_number(640), ctx.bits());
    // B_{2k+2}/B_{2k} -> -(2k+1)(2k+2)/(2 pi)^2
    Real expect = Real(-641L * 642L, ctx.bits()) / (ldexp(ctx.pi(), 1) * ldexp(ctx.pi(), 1));
    EXPECT_LT(abs(ratio / expect - 1L).to_double(), 1e-10);
}

TEST(BernoulliPolynomial, Examples) {
    auto ctx = make_context(30);
    EXPECT_EQ(bernoulli_polynomial(0, mpq_class(7, 10)), mpq_class(1));
    EXPECT_EQ(bernoulli_polynomial(1, mpq_class(1, 2)), mpq_class(0));
    // direct evaluation of x^2 - x + 1/6 at 1/3
    mpq_class x(1, 3);
    EXPECT_EQ(bernoulli_polynomial(2, x), x * x - x + mpq_class(1, 6));
    EXPECT_EQ(bernoulli_polynomial(2, x), mpq_class(-1, 18));
    Real xr(x, ctx.bits());
    EXPECT_GT(digits_of(abs(bernoulli_polynomial(2, xr) + Real(mpq_class(1, 18), ctx.bits()))), 38);
}

TEST(BernoulliPolynomial, ShiftProperty) {
    auto ctx = make_context(30);
    auto g = charzeta::testing::rng(11);
    for (long n = 1; n <= 12; ++n) {
        for (int t = 0; t < 20; ++t) {
            Real x = Real::from_double(charzeta::testing::uniform(g, -3, 3), ctx.bits());
            Real lhs = bernoulli_polynomial(n, x + 1L) - bernoulli_polynomial(n, x);
            Real rhs = n * pow(x, n - 1);
            EXPECT_GT(digits_of(abs(lhs - rhs) / max(abs(rhs), Real(1, ctx.bits()))), 30) << n;
        }
    }
}

TEST(EulerGamma, AgreesWithBrentMcMillan) {
    for (int d : {15, 30, 60}) {
        auto ctx = make_context(d);
        Real oracle = euler_gamma_brent_mcmillan(d + 20);
        EXPECT_GT(digits_of(abs(euler_gamma(ctx) - oracle)), d) << d;
    }
    auto c30 = make_context(30);
    EXPECT_EQ(euler_gamma(c30).to_string(30), "5.77215664901532860606512090082e-1");
    EXPECT_EQ(euler_gamma(make_context(15)).to_string(15), "5.77215664901533e-1");
}

TEST(Gamma, ClassicalValues) {
    auto ctx = make_context(30);
    EXPECT_GT(digits_of(rel_error(gamma_function(Complex(1, ctx.bits()), ctx), Complex(1, ctx.bits()))), 30);
    Complex half(Real(mpq_class(1, 2), ctx.bits()));
    EXPECT_GT(digits_of(rel_error(gamma_function(half, ctx), Complex(sqrt(ctx.pi())))), 30);
    Complex two_thirds(Real(mpq_class(2, 3), ctx.bits()));
    Complex expect(ctx.parse("1.35411793942640041694528802815451378551932726605679369839"));
    EXPECT_GT(digits_of(rel_error(gamma_function(two_thirds, ctx), expect)), 30);
}

TEST(Gamma, PoleIsAnError) {
    auto ctx = make_context(30);
    for (long k : {0L, -1L, -5L}) {
        try {
            gamma_function(Complex(k, ctx.bits()), ctx);
            FAIL() << "expected pole error";
        } catch (const Error& e) {
            EXPECT_EQ(e.kind(), ErrorKind::pole);
        }
    }
}

TEST(Gamma, RealAxisMatchesMpfr) {
    auto ctx = make_context(40);
    auto g = charzeta::testing::rng(5);
    for (int t = 0; t < 40; ++t) {
        Real x = Real::from_double(charzeta::testing::uniform(g, -15.0, 25.0), ctx.bits());
        if (abs(x - round_nearest(x)) < Real::from_double(0.1, ctx.bits())) continue;
        Real ref(ctx.bits());
        mpfr_gamma(ref.raw(), x.raw(), MPFR_RNDN);
        EXPECT_GT(digits_of(rel_error(gamma_function(Complex(x), ctx), Complex(ref))), 40) << x;
    }
}

// Random s with |s| <= 20, |Im s| <= 20, at least 0.1 from the poles.
class GammaProperties : public ::testing::Test {
protected:
    std::vector<Complex> sample(const PrecisionContext& ctx) {
        auto g = charzeta::testing::rng(1234);
        std::vector<Complex> out;
        while (out.size() < 100) {
            double re = charzeta::testing::uniform(g, -20, 20);
            double im = charzeta::testing::uniform(g, -20, 20);
            if (std::hypot(re, im) > 20) continue;
            if (std::fabs(im) < 0.1 && re < 0.1 && std::fabs(re - std::round(re)) < 0.1) continue;
            out.push_back(cplx(re, im, ctx));
        }
        return out;
    }
};

TEST_F(GammaProperties, Recurrence) {
    auto ctx = make_context(30);
    for (const auto& s : sample(ctx)) {
        Complex lhs = gamma_function(s + 1L, ctx);
        Complex rhs = s * gamma_function(s, ctx);
        Real rel = abs(lhs - rhs) / abs(lhs);
        EXPECT_LT(rel, ctx.target_digits()) << s;
    }
}

TEST_F(GammaProperties, Reflection) {
    auto ctx = make_context(30);
    Real pi = ctx.pi();
    for (const auto& s : sample(ctx)) {
        Complex prod = gamma_function(s, ctx) * gamma_function(1L - s, ctx) * sin(s * pi) / pi;
        EXPECT_LT(abs(prod - 1L), ctx.target_digits()) << s;
    }
}

TEST_F(GammaProperties, DoublingDigitsKeepsReportedDigits) {
    auto c30 = make_context(30);
    auto c60 = make_context(60);
    auto s30 = sample(c30);
    for (std::size_t i = 0; i < 20; ++i) {
        Complex a = gamma_function(s30[i], c30);
        Complex b = gamma_function(Complex(s30[i]).round_to(c60.bits()), c60);
        EXPECT_LT(abs(a - b) / abs(b), c30.target_digits());
    }
}

TEST(ComplexOps, ElementaryIdentities) {
    auto ctx = make_context(30);
    Complex z = cplx(0.3, -1.7, ctx);
    EXPECT_LT(abs(exp(log(z)) - z), ctx.target_digits());
    EXPECT_LT(abs(sqrt(z) * sqrt(z) - z), ctx.target_digits());
    Complex small = cplx(1e-20, 3e-21, ctx);
    EXPECT_LT(abs(expm1(small) - small - small * small / 2L) / abs(small), Real::from_double(1e-38, ctx.bits()));
    Complex w = sin(z) * sin(z) + cos(z) * cos(z);
    EXPECT_LT(abs(w - 1L), ctx.target_digits());
    EXPECT_LT(abs(pow(z, -3L) * z * z * z - 1L), ctx.target_digits());
}
