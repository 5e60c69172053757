#include <gtest/gtest.h>

#include <cmath>
#include <random>
#include <vector>

#include "charzeta/identities.hpp"
#include "support.hpp"

using namespace charzeta;
using charzeta::testing::digits_of;
using charzeta::testing::rel_error;
using charzeta::testing::uniform;

namespace {

DirichletCharacter chi53() { return parse_character("q=5;values=1,-1,-1,1"); }
DirichletCharacter chi52() { return parse_character("q=5;values=1,i,-i,-1"); }
DirichletCharacter trivial() { return principal_character(1); }

const PrecisionContext& ctx30() {
    static const PrecisionContext ctx = make_context(30);
    return ctx;
}

TruncationBudget budget30() { return TruncationBudget::from(ctx30()); }

Real from(double v) { return Real::from_double(v, ctx30().bits()); }

template <class Fn>
void expect_error(ErrorKind kind, Fn&& fn) {
    try {
        fn();
        ADD_FAILURE() << "expected " << to_string(kind);
    } catch (const Error& e) {
        EXPECT_EQ(e.kind(), kind) << e.what();
    }
}

void expect_pass(const IdentityReport& r, double max_rel = 1e-25) {
    EXPECT_TRUE(r.pass) << to_string(r.identity_id) << " rel " << r.rel_residual.to_string(3);
    EXPECT_GT(digits_of(r.rel_residual), -std::log10(max_rel))
        << to_string(r.identity_id) << " lhs " << r.lhs.re.to_string(20) << " rhs " << r.rhs.re.to_string(20);
}

std::vector<DirichletCharacter> primitive_characters(long q, bool even_only) {
    std::vector<DirichletCharacter> out;
    for (auto& chi : enumerate_characters(q))
        if (chi.is_primitive() && (!even_only || chi.is_even())) out.push_back(chi);
    return out;
}

const DirichletCharacter& pick(std::mt19937_64& g, const std::vector<DirichletCharacter>& pool) {
    return pool[std::uniform_int_distribution<std::size_t>(0, pool.size() - 1)(g)];
}

long pick_long(std::mt19937_64& g, long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(g); }

long pick_nonzero(std::mt19937_64& g, long lo, long hi) {
    long v = 0;
    while (v == 0) v = pick_long(g, lo, hi);
    return v;
}

std::vector<DirichletCharacter> pooled(bool even_only) {
    std::vector<DirichletCharacter> pool;
    for (long q : {1L, 5L, 7L, 8L, 12L})
        for (auto& chi : primitive_characters(q, even_only)) pool.push_back(chi);
    return pool;
}

// sum_n f(n) until |f(n)| < 1e-60, written out directly.
template <class Term>
Complex sum_small(Term&& term, mpfr_prec_t prec) {
    Complex total(prec);
    Real cutoff = pow10(-60, prec);
    for (long n = 1; n < 1'000'000; ++n) {
        Complex t = term(n);
        total += t;
        if (n > 5 && abs(t) < cutoff) break;
    }
    return total;
}

}  // namespace

TEST(MainTheorem, TableRowOne) {
    auto p = table1_params(table1_rows()[0], ctx30());
    auto r = verify_main_theorem(p, ctx30(), budget30());
    expect_pass(r);
    EXPECT_TRUE(matches_printed(r.lhs, "0.0929631"));
    EXPECT_TRUE(matches_printed(r.rhs, "0.0929631"));
}

TEST(MainTheorem, TableRowTwoConvergedLhs) {
    auto p = table1_params(table1_rows()[1], ctx30());
    auto r = verify_main_theorem(p, ctx30(), budget30());
    expect_pass(r);
    EXPECT_TRUE(matches_printed(r.lhs, "0.472922+0.138771i"));
    EXPECT_TRUE(matches_printed(r.rhs, "0.472922+0.138771i"));
}

TEST(MainTheorem, TableRowFive) {
    auto p = table1_params(table1_rows()[4], ctx30());
    auto r = verify_main_theorem(p, ctx30(), budget30());
    expect_pass(r);
    EXPECT_TRUE(matches_printed(r.lhs, "399.495-12.846i"));
    EXPECT_TRUE(matches_printed(r.rhs, "399.495-12.846i"));
}

TEST(MainTheorem, Preconditions) {
    auto& ctx = ctx30();
    auto nonprimitive = principal_character(5);
    expect_error(ErrorKind::primitivity,
                 [&] { verify_main_theorem({4, 7, from(1.22), nonprimitive}, ctx, budget30()); });
    expect_error(ErrorKind::parameter, [&] { verify_main_theorem({3, 2, from(1.0), chi53()}, ctx, budget30()); });
    expect_error(ErrorKind::unsupported_case,
                 [&] { verify_main_theorem({3, 1, from(1.0), chi52()}, ctx, budget30()); });
    expect_error(ErrorKind::parameter, [&] { verify_main_theorem({3, 1, from(-1.0), chi53()}, ctx, budget30()); });
}

// 2h - 1 = N(2m + 1): the main residue sits on a Gamma pole at s = -2m.
TEST(MainTheorem, CoincidentPole) {
    auto& ctx = ctx30();
    expect_pass(verify_main_theorem({1, 2, from(1.7), trivial()}, ctx, budget30()));
    expect_pass(verify_main_theorem({1, 3, from(2.5), chi53()}, ctx, budget30()));
    expect_pass(verify_main_theorem({3, 5, from(0.9), chi53()}, ctx, budget30()));
    auto ledger = residue_ledger({3, 5, from(0.9), chi53()}, ctx);
    for (const auto& e : ledger.entries) EXPECT_NE(e.j, 2);
}

TEST(MainTheorem, RandomDraws) {
    auto g = charzeta::testing::rng(20261014);
    auto pool = pooled(false);
    int done = 0;
    while (done < 50) {
        long N = pick_long(g, 1, 8);
        long h = pick_long(g, -12, 12);
        const auto& chi = pick(g, pool);
        if (N - 2 * h == -1 || (chi.is_odd() && N % 2 == 1)) continue;
        Real x = from(uniform(g, 0.3, 10.0));
        auto r = verify_main_theorem({N, h, x, chi}, ctx30(), budget30());
        expect_pass(r);
        if (!r.pass) ADD_FAILURE() << "N=" << N << " h=" << h << " x=" << x.to_string(8) << " chi=" << chi.literal();
        ++done;
    }
}

TEST(ResidueLedger, Examples) {
    auto& ctx = ctx30();
    auto ledger = residue_ledger({4, 7, from(1.22), chi53()}, ctx);
    auto r0 = ledger.with_tag(ResidueTag::R0);
    ASSERT_EQ(r0.size(), 1u);
    EXPECT_TRUE(r0[0]->value.is_zero());
    EXPECT_TRUE(ledger.with_tag(ResidueTag::R1).empty());
    // s = -j for j = 1 .. 2 floor(7/4) + 1 = 3
    EXPECT_EQ(ledger.with_tag(ResidueTag::R_neg_j).size(), 3u);

    Real x = from(1.3);
    auto q1 = residue_ledger({1, 1, x, trivial()}, ctx);
    auto r1 = q1.with_tag(ResidueTag::R1);
    ASSERT_EQ(r1.size(), 1u);
    Complex expected(ctx.pi() * ctx.pi() / (x * 6L));
    EXPECT_GT(digits_of(rel_error(r1[0]->value, expected)), 40);
    EXPECT_TRUE(r1[0]->location.re == 1L);

    auto negative = residue_ledger({4, -3, from(2.0), chi53()}, ctx);
    EXPECT_TRUE(negative.with_tag(ResidueTag::R_neg_j).empty());
    auto main = negative.with_tag(ResidueTag::R_main);
    ASSERT_EQ(main.size(), 1u);
    EXPECT_TRUE(main[0]->location.re == Real(mpq_class(11, 4), ctx.bits()));
}

// N - 2h = -1: the ledger carries the logarithmic residues of the separate case.
TEST(ResidueLedger, LogarithmicCase) {
    auto& ctx = ctx30();
    for (long N : {1L, 3L, 5L}) {
        for (const auto& chi : {trivial(), chi53()}) {
            Real x = from(1.4);
            auto r = verify_h_special(N, x, chi, ctx, budget30());
            auto ledger = residue_ledger({N, (N + 1) / 2, x, chi}, ctx);
            EXPECT_TRUE(ledger.with_tag(ResidueTag::R_main).empty());
            Complex rebuilt = ledger.total(ctx.bits()) + *r.extra("K");
            EXPECT_GT(digits_of(rel_error(rebuilt, r.rhs)), 40) << N << " " << chi.literal();
        }
    }
    expect_error(ErrorKind::unsupported_case, [&] { residue_ledger({3, 2, from(1.0), chi52()}, ctx); });
}

TEST(ResidueLedger, CompletenessOverRandomDraws) {
    auto g = charzeta::testing::rng(77);
    auto pool = pooled(false);
    int done = 0;
    while (done < 20) {
        long N = pick_long(g, 1, 6);
        long h = pick_long(g, -6, 8);
        const auto& chi = pick(g, pool);
        if (N - 2 * h == -1 || (chi.is_odd() && N % 2 == 1)) continue;
        SeriesParams p{N, h, from(uniform(g, 0.5, 4.0)), chi};
        auto r = verify_main_theorem(p, ctx30(), budget30());
        auto ledger = residue_ledger(p, ctx30());
        Complex rebuilt = ledger.total(ctx30().bits()) + *r.extra("J");
        EXPECT_GT(digits_of(rel_error(rebuilt, r.rhs)), 40);
        // s = 0, s = (N-2h+1)/N, s = 1 when q = 1, then one entry per j
        long upper = std::max(0L, 2 * detail::floor_div(h, N) + 1);
        std::size_t expected = 2 + (chi.modulus() == 1 ? 1 : 0) + static_cast<std::size_t>(upper);
        if (detail::coincident_pole(p) > 0) --expected;
        EXPECT_EQ(ledger.entries.size(), expected);
        ++done;
    }
}

TEST(Table1, TruncatedValues) {
    auto reports = run_table1(ctx30(), budget30());
    ASSERT_EQ(reports.size(), 5u);
    for (std::size_t i = 0; i < reports.size(); ++i) {
        const auto& row = table1_rows()[i];
        const auto& r = reports[i];
        EXPECT_TRUE(r.pass);
        // The converged sides and the 100-term lhs all show the printed lhs.
        EXPECT_TRUE(matches_printed(*r.extra("lhs_100"), row.printed_lhs)) << i;
        EXPECT_TRUE(matches_printed(r.lhs, row.printed_lhs)) << i;
        // The printed rhs column is what each G_j cut at ten terms gives.
        EXPECT_TRUE(matches_printed(*r.extra("rhs_g10"), row.printed_rhs)) << i;
        EXPECT_EQ(*r.param("x"), row.x);
    }
    EXPECT_TRUE(matches_printed(*reports[0].extra("rhs_100"), "0.0929631"));
    EXPECT_TRUE(matches_printed(*reports[4].extra("rhs_100"), "399.495-12.846i"));
    // With 100 terms there, the rhs converges and no longer shows the printed row-3 rhs.
    EXPECT_FALSE(matches_printed(*reports[2].extra("rhs_100"), table1_rows()[2].printed_rhs));
}

TEST(Table1, MatchesPrinted) {
    auto& ctx = ctx30();
    Complex v(Real::parse("0.40680702", ctx.bits()), Real::parse("-0.10917505", ctx.bits()));
    EXPECT_TRUE(matches_printed(v, "0.406807-0.109175i"));
    EXPECT_FALSE(matches_printed(v, "0.406808-0.109175i"));
    Complex w(Real::parse("0.13877025", ctx.bits()));
    EXPECT_TRUE(matches_printed(w, "0.13877"));
    EXPECT_FALSE(matches_printed(w, "0.138771"));
}

TEST(CharacterRamanujan, ReducesToClassicalAtSelfReciprocalPoint) {
    auto& ctx = ctx30();
    auto a = verify_character_ramanujan(1, 1, ctx.pi(), trivial(), ctx, budget30());
    auto b = verify_classical_ramanujan(1, ctx.pi(), ctx, budget30());
    expect_pass(a);
    expect_pass(b);
    EXPECT_GT(digits_of(rel_error(a.lhs, b.lhs)), 40);
}

TEST(CharacterRamanujan, MatchesTwoVariableIdentityForCubicN) {
    auto& ctx = ctx30();
    auto a = verify_character_ramanujan(3, 1, ctx.pi(), trivial(), ctx, budget30());
    auto b = verify_two_variable(3, 1, ctx.pi(), ctx, budget30());
    expect_pass(a);
    expect_pass(b);
    EXPECT_GT(digits_of(rel_error(a.lhs, b.lhs)), 28);
    EXPECT_GT(digits_of(rel_error(a.rhs, b.rhs)), 28);
}

TEST(CharacterRamanujan, MatchesKatayamaForLinearN) {
    auto& ctx = ctx30();
    auto a = verify_character_ramanujan(1, 2, ctx.real(2), chi53(), ctx, budget30());
    auto b = verify_katayama(2, ctx.real(2), chi53(), ctx, budget30());
    expect_pass(a);
    expect_pass(b);
    EXPECT_GT(digits_of(rel_error(a.lhs, b.lhs)), 28);
    EXPECT_GT(digits_of(rel_error(a.rhs, b.rhs)), 28);
}

TEST(CharacterRamanujan, Preconditions) {
    auto& ctx = ctx30();
    expect_error(ErrorKind::unsupported_case,
                 [&] { verify_character_ramanujan(2, 1, ctx.pi(), chi53(), ctx, budget30()); });
    expect_error(ErrorKind::unsupported_case,
                 [&] { verify_character_ramanujan(3, 1, ctx.pi(), chi52(), ctx, budget30()); });
    expect_error(ErrorKind::parameter,
                 [&] { verify_character_ramanujan(3, 0, ctx.pi(), chi53(), ctx, budget30()); });
    expect_error(ErrorKind::primitivity,
                 [&] { verify_character_ramanujan(3, 1, ctx.pi(), principal_character(5), ctx, budget30()); });
}

TEST(CharacterRamanujan, RandomDraws) {
    auto g = charzeta::testing::rng(31);
    auto pool = pooled(true);
    for (int i = 0; i < 50; ++i) {
        long N = 2 * pick_long(g, 0, 3) + 1;
        long m = pick_nonzero(g, -3, 3);
        const auto& chi = pick(g, pool);
        Real alpha = from(uniform(g, 0.3, 10.0));
        auto r = verify_character_ramanujan(N, m, alpha, chi, ctx30(), budget30());
        expect_pass(r);
        if (!r.pass) ADD_FAILURE() << "N=" << N << " m=" << m << " alpha=" << alpha.to_string(8) << " " << chi.literal();
    }
}

// lhs of the character identity, unscaled, equals F of the general transformation
// at x = 2^N alpha and h = (N+1)/2 + Nm.
TEST(CharacterRamanujan, ScalingConsistency) {
    auto& ctx = ctx30();
    auto g = charzeta::testing::rng(5);
    auto pool = pooled(true);
    for (int i = 0; i < 10; ++i) {
        long N = 2 * pick_long(g, 0, 2) + 1;
        long m = pick_nonzero(g, -2, 2);
        const auto& chi = pick(g, pool);
        Real alpha = from(uniform(g, 0.3, 3.0));
        auto cr = verify_character_ramanujan(N, m, alpha, chi, ctx, budget30());
        auto main = verify_main_theorem({N, (N + 1) / 2 + N * m, ldexp(alpha, N), chi}, ctx, budget30());
        Complex unscaled = cr.lhs * pow(alpha, Real(mpq_class(2 * N * m, N + 1), ctx.bits())) +
                           Complex(zeta_integer(2 * N * m + 1, ctx)) * l_at_zero(chi, ctx);
        EXPECT_GT(digits_of(rel_error(unscaled, main.lhs)), 25) << N << " " << m;
    }
}

TEST(TwoVariable, RandomDraws) {
    auto g = charzeta::testing::rng(41);
    for (int i = 0; i < 50; ++i) {
        long N = 2 * pick_long(g, 0, 3) + 1;
        long m = pick_nonzero(g, -3, 3);
        Real alpha = from(uniform(g, 0.3, 10.0));
        auto r = verify_two_variable(N, m, alpha, ctx30(), budget30());
        expect_pass(r);
        if (!r.pass) ADD_FAILURE() << "N=" << N << " m=" << m << " alpha=" << alpha.to_string(8);
    }
}

TEST(Katayama, Examples) {
    auto& ctx = ctx30();
    expect_pass(verify_katayama(1, ctx.pi(), chi53(), ctx, budget30()));
    expect_pass(verify_katayama(-2, ctx.real(1), chi53(), ctx, budget30()));
    // even characters mod 7: the cubic pair
    for (auto& chi : primitive_characters(7, true)) {
        auto a = verify_katayama(1, ctx.real(2), chi, ctx, budget30());
        auto b = verify_character_ramanujan(1, 1, ctx.real(2), chi, ctx, budget30());
        expect_pass(a);
        EXPECT_GT(digits_of(rel_error(a.rhs, b.rhs)), 28);
    }
    expect_error(ErrorKind::parameter, [&] { verify_katayama(1, ctx.pi(), trivial(), ctx, budget30()); });
    expect_error(ErrorKind::unsupported_case, [&] { verify_katayama(1, ctx.pi(), chi52(), ctx, budget30()); });
}

TEST(Katayama, RandomDraws) {
    auto g = charzeta::testing::rng(43);
    std::vector<DirichletCharacter> pool;
    for (long q : {5L, 7L, 8L, 12L})
        for (auto& chi : primitive_characters(q, true)) pool.push_back(chi);
    for (int i = 0; i < 50; ++i) {
        long m = pick_nonzero(g, -4, 4);
        const auto& chi = pick(g, pool);
        Real alpha = from(uniform(g, 0.3, 10.0));
        expect_pass(verify_katayama(m, alpha, chi, ctx30(), budget30()));
    }
}

TEST(ClassicalRamanujan, Examples) {
    auto& ctx = ctx30();
    auto r = verify_classical_ramanujan(1, ctx.pi(), ctx, budget30());
    expect_pass(r);
    expect_pass(verify_classical_ramanujan(-2, ctx.real(1), ctx, budget30()));
    expect_pass(verify_classical_ramanujan(3, ctx.real(2), ctx, budget30()));
    expect_error(ErrorKind::parameter, [&] { verify_classical_ramanujan(0, ctx.real(2), ctx, budget30()); });
}

TEST(ClassicalRamanujan, RandomDraws) {
    auto g = charzeta::testing::rng(47);
    for (int i = 0; i < 50; ++i) {
        long m = pick_nonzero(g, -5, 5);
        Real alpha = from(uniform(g, 0.3, 10.0));
        expect_pass(verify_classical_ramanujan(m, alpha, ctx30(), budget30()));
    }
}

TEST(ClassicalRamanujan, SpecializationChain) {
    auto& ctx = ctx30();
    Real tolerance = pow10(-ctx.digits + default_tolerance_margin, ctx.bits());
    for (long m : {-3L, -1L, 1L, 2L, 4L}) {
        for (double a : {0.7, 1.9}) {
            auto cr = verify_character_ramanujan(1, m, from(a), trivial(), ctx, budget30());
            auto cl = verify_classical_ramanujan(m, from(a), ctx, budget30());
            EXPECT_TRUE(abs(cr.rel_residual - cl.rel_residual) < tolerance * 10L) << m;
            EXPECT_GT(digits_of(rel_error(cr.lhs, cl.lhs)), 28) << m;
        }
    }
}

TEST(LOneThird, Examples) {
    auto& ctx = ctx30();
    expect_pass(verify_L_one_third(ctx.real(1), ctx, budget30()));
    auto r = verify_L_one_third(from(1.5), ctx, budget30());
    expect_pass(r);
    EXPECT_GT(digits_of(rel_error(*r.extra("L_recovered"), *r.extra("L_direct"))), 25);
    auto two = verify_L_one_third(ctx.real(2), ctx, budget30());
    EXPECT_TRUE(abs(*two.extra("bracket_real") - *two.extra("bracket_complex")) < ctx.target_tail() * 10L)
        << (*two.extra("bracket_real") - *two.extra("bracket_complex")).re.to_string(3);
}

TEST(LOneThird, RandomDraws) {
    auto g = charzeta::testing::rng(53);
    for (int i = 0; i < 50; ++i) {
        Real alpha = from(uniform(g, 0.5, 2.5));
        auto r = verify_L_one_third(alpha, ctx30(), budget30());
        expect_pass(r);
        EXPECT_GT(digits_of(rel_error(*r.extra("L_recovered"), *r.extra("L_direct"))), 25);
    }
}

TEST(HSpecial, EtaSpecialization) {
    auto& ctx = ctx30();
    mpfr_prec_t prec = ctx.bits();
    Real x = ldexp(ctx.pi(), 1);
    auto r = verify_h_special(1, x, trivial(), ctx, budget30());
    expect_pass(r);
    // (1/2) log(x/2 pi) + pi^2/(6x) - x/24 + sum 1/(n(e^{4 pi^2 n/x} - 1))
    Real four_pi2 = ldexp(ctx.pi() * ctx.pi(), 2);
    Complex tail = sum_small([&](long n) { return Complex(Real(1, prec) / (expm1(four_pi2 * n / x) * n)); }, prec);
    Complex oracle = Complex(ldexp(log(x / ldexp(ctx.pi(), 1)), -1) + ctx.pi() * ctx.pi() / (x * 6L) - x / 24L) + tail;
    EXPECT_GT(digits_of(rel_error(oracle, r.lhs)), 28);
}

TEST(HSpecial, CubicTrivialCharacter) {
    auto& ctx = ctx30();
    mpfr_prec_t prec = ctx.bits();
    Real x(1, prec);
    auto r = verify_h_special(3, x, trivial(), ctx, budget30());
    expect_pass(r);
    // (1/6)(-2 gamma + log(x/2pi)) + zeta(4)/x - (1/3) sum'' sum_n (1/n) i^j / (exp(2 pi (2 pi n/x)^{1/3} e^{-i pi j/6}) - 1)
    Real pi = ctx.pi();
    Complex inner(prec);
    for (long j : {-2L, 0L, 2L}) {
        Complex rot = polar(Real(1, prec), -(pi * j) / 6L);
        Complex ij = polar(Real(1, prec), pi * j / 2L);
        inner += ij * sum_small(
                          [&](long n) {
                              Real mag = ldexp(pi, 1) * root(ldexp(pi, 1) * n / x, 3);
                              return Complex(Real(1, prec) / n) / (exp(rot * mag) - 1L);
                          },
                          prec);
    }
    Complex oracle = Complex((log(x / ldexp(pi, 1)) - ldexp(euler_gamma(ctx), 1)) / 6L + zeta_even(2, ctx) / x) -
                     inner / 3L;
    EXPECT_GT(digits_of(rel_error(oracle, r.lhs)), 28);
}

TEST(HSpecial, QuinticCharacter) {
    auto& ctx = ctx30();
    auto r = verify_h_special(3, ctx.real(1), chi53(), ctx, budget30());
    expect_pass(r);
    // chi(1) = chi(4) = 1, chi(2) = chi(3) = -1
    Real pi = ctx.pi();
    Real expected = -(log(sin(pi / 5L)) - log(sin(pi * 2L / 5L)) - log(sin(pi * 3L / 5L)) + log(sin(pi * 4L / 5L))) / 6L;
    EXPECT_GT(digits_of(rel_error(*r.extra("R0"), Complex(expected))), 40);
}

TEST(HSpecial, Preconditions) {
    auto& ctx = ctx30();
    expect_error(ErrorKind::unsupported_case, [&] { verify_h_special(2, ctx.real(1), chi53(), ctx, budget30()); });
    expect_error(ErrorKind::unsupported_case, [&] { verify_h_special(3, ctx.real(1), chi52(), ctx, budget30()); });
    expect_error(ErrorKind::primitivity,
                 [&] { verify_h_special(3, ctx.real(1), principal_character(5), ctx, budget30()); });
}

TEST(HSpecial, RandomDraws) {
    auto g = charzeta::testing::rng(59);
    auto pool = pooled(true);
    for (int i = 0; i < 50; ++i) {
        long N = 2 * pick_long(g, 0, 3) + 1;
        const auto& chi = pick(g, pool);
        Real x = from(uniform(g, 0.3, 10.0));
        auto r = verify_h_special(N, x, chi, ctx30(), budget30());
        expect_pass(r);
        if (!r.pass) ADD_FAILURE() << "N=" << N << " x=" << x.to_string(8) << " " << chi.literal();
    }
}

TEST(Eta, Examples) {
    auto& ctx = ctx30();
    auto sym = verify_eta_identity(ctx.pi(), ctx, budget30());
    EXPECT_GT(digits_of(abs(sym.lhs)), 40);
    EXPECT_GT(digits_of(abs(sym.rhs)), 40);
    expect_pass(verify_eta_identity(ctx.real(1), ctx, budget30()));
    expect_pass(verify_eta_identity(from(0.1), ctx, budget30()));
    TruncationBudget tiny = budget30();
    tiny.max_terms = 50;
    expect_error(ErrorKind::non_convergence, [&] { verify_eta_identity(from(0.1), ctx, tiny); });
}

TEST(Eta, RandomDraws) {
    auto g = charzeta::testing::rng(61);
    for (int i = 0; i < 50; ++i) expect_pass(verify_eta_identity(from(uniform(g, 0.3, 10.0)), ctx30(), budget30()));
}

TEST(ZetaHalf, Examples) {
    auto& ctx = ctx30();
    expect_pass(verify_zeta_half(ldexp(pow(ctx.pi(), Real(mpq_class(3, 2), ctx.bits())), 1), ctx, budget30()));
    expect_pass(verify_zeta_half(ctx.real(1), ctx, budget30()));
    auto r = verify_zeta_half(ctx.real(4), ctx, budget30());
    expect_pass(r);
    EXPECT_GT(digits_of(rel_error(*r.extra("zeta_recovered"), *r.extra("zeta_direct"))), 25);
}

TEST(ZetaHalf, RandomDraws) {
    auto g = charzeta::testing::rng(67);
    for (int i = 0; i < 50; ++i) expect_pass(verify_zeta_half(from(uniform(g, 0.3, 10.0)), ctx30(), budget30()));
}

TEST(Mellin, ListedParameterSets) {
    auto ctx = make_context(20);
    auto budget = TruncationBudget::from(ctx);
    auto a = mellin_contour_check({1, 1, ctx.real(1), trivial()}, ctx.parse("2.5"), ctx.real(40), ctx, budget);
    EXPECT_TRUE(a.pass) << a.abs_residual.to_string(3);
    auto b = mellin_contour_check({2, 1, ctx.real(2), chi53()}, ctx.real(2), ctx.real(40), ctx, budget);
    EXPECT_TRUE(b.pass) << b.abs_residual.to_string(3);
    EXPECT_TRUE(a.extra("tail_bound") != nullptr);
}

TEST(Mellin, ShortContourRejected) {
    auto ctx = make_context(20);
    expect_error(ErrorKind::insufficient_range, [&] {
        mellin_contour_check({1, 1, ctx.real(1), trivial()}, ctx.parse("2.5"), ctx.real(1), ctx,
                             TruncationBudget::from(ctx));
    });
    expect_error(ErrorKind::parameter, [&] {
        mellin_contour_check({1, 1, ctx.real(1), trivial()}, ctx.parse("0.5"), ctx.real(40), ctx,
                             TruncationBudget::from(ctx));
    });
}

TEST(Mellin, LongerContourStaysWithinTail) {
    auto ctx = make_context(20);
    auto budget = TruncationBudget::from(ctx);
    SeriesParams p{1, 1, ctx.real(1), trivial()};
    for (long T : {16L, 24L}) {
        auto shorter = mellin_contour_check(p, ctx.real(3), ctx.real(T), ctx, budget);
        auto longer = mellin_contour_check(p, ctx.real(3), ctx.real(T + T / 2), ctx, budget);
        EXPECT_TRUE(longer.abs_residual <= shorter.abs_residual + shorter.extra("tail_bound")->re)
            << T << " " << longer.abs_residual.to_string(3) << " " << shorter.abs_residual.to_string(3);
    }
}

TEST(Report, Fields) {
    auto& ctx = ctx30();
    auto r = verify_eta_identity(ctx.real(1), ctx, budget30());
    EXPECT_EQ(r.identity_id, IdentityId::eta);
    EXPECT_EQ(r.digits, 30);
    EXPECT_GE(r.elapsed_ms, 0.0);
    ASSERT_TRUE(r.param("alpha") != nullptr);
    EXPECT_EQ(r.terms_used.count("alpha"), 1u);
    EXPECT_TRUE(r.abs_residual == abs(r.lhs - r.rhs));
    EXPECT_TRUE(r.rel_residual == relative_residual(r.lhs, r.rhs));
    for (IdentityId id : all_identity_ids) EXPECT_EQ(parse_identity_id(to_string(id)), id);
    expect_error(ErrorKind::parameter, [] { parse_identity_id("nope"); });
    EXPECT_TRUE(passes(pow10(-26, 64), 30));
    EXPECT_FALSE(passes(pow10(-24, 64), 30));
}
