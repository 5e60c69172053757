#pragma once

#include <optional>
#include <string>
#include <vector>

#include "charzeta/identities/main_theorem.hpp"

namespace charzeta {

struct Table1Row {
    long N;
    long h;
    std::string x;  // "1.22", "pi", "pi+1", "e", "e+1"
    long q;
    std::string values;  // character value tuple chi(1), ..., chi(q-1)
    std::string printed_lhs;
    std::string printed_rhs;
};

inline const std::vector<Table1Row>& table1_rows() {
    static const std::vector<Table1Row> rows = {
        {4, 7, "1.22", 5, "1,-1,-1,1", "0.0929631", "0.0929631"},
        {6, 10, "pi", 5, "1,i,-i,-1", "0.472922+0.138771i", "0.472921+0.13877i"},
        {8, 10, "pi+1", 5, "1,-i,i,-1", "0.406854-0.109186i", "0.406807-0.109175i"},
        {10, 8, "e+1", 7, "1,e(1/3),e(1/6),e(2/3),e(5/6),-1", "0.462001+0.318763i", "0.465286+0.318555i"},
        {2, -3, "e", 7, "1,e(-1/3),e(1/3),e(1/3),e(-1/3),1", "399.495-12.846i", "399.495-12.846i"},
    };
    return rows;
}

// "pi", "e", an optional "+k" with integer k, or a plain decimal.
inline Real table1_argument(const std::string& text, const PrecisionContext& ctx) {
    auto base_of = [&](const std::string& name) -> std::optional<Real> {
        if (name == "pi") return ctx.pi();
        if (name == "e") return exp(ctx.real(1));
        return std::nullopt;
    };
    auto plus = text.find('+');
    std::string head = text.substr(0, plus);
    auto base = base_of(head);
    if (!base) return ctx.parse(text);
    if (plus == std::string::npos) return *base;
    return *base + detail::parse_long(text.substr(plus + 1), "offset");
}

inline SeriesParams table1_params(const Table1Row& row, const PrecisionContext& ctx) {
    return {row.N, row.h, table1_argument(row.x, ctx),
            parse_character("q=" + std::to_string(row.q) + ";values=" + row.values)};
}

inline constexpr long table1_terms = 100;

// One report per row: lhs/rhs converged, with extras lhs_100 / rhs_100 (every n-series cut at
// 100 terms) and rhs_g10 (each G_j cut at 10 terms).
inline std::vector<IdentityReport> run_table1(const PrecisionContext& ctx, const TruncationBudget& budget) {
    std::vector<IdentityReport> out;
    for (const auto& row : table1_rows()) {
        SeriesParams p = table1_params(row, ctx);
        IdentityReport r = verify_main_theorem(p, ctx, budget);
        for (auto& [key, value] : r.params)
            if (key == "x") value = row.x;
        auto hundred = main_theorem_truncated(p, table1_terms, table1_terms, ctx);
        auto ten = main_theorem_truncated(p, table1_terms, 10, ctx);
        auto keep = [&](const char* name, const Complex& z) {
            r.extras.emplace_back(name, Complex(z.re.rounded(ctx.bits()), z.im.rounded(ctx.bits())));
        };
        keep("lhs_100", hundred.lhs);
        keep("rhs_100", hundred.rhs);
        keep("rhs_g10", ten.rhs);
        out.push_back(std::move(r));
    }
    return out;
}

// Whether value, rounded to the decimals shown in `printed` ("a+bi", "a-bi" or "a"),
// reproduces each printed component.
inline bool matches_printed(const Complex& value, const std::string& printed) {
    std::string re_text = printed;
    std::string im_text = "0";
    if (!printed.empty() && printed.back() == 'i') {
        auto split = printed.find_first_of("+-", 1);
        re_text = printed.substr(0, split);
        im_text = printed.substr(split, printed.size() - split - 1);
        if (im_text.front() == '+') im_text.erase(0, 1);
    }
    auto close = [](const Real& v, const std::string& text) {
        auto dot = text.find('.');
        long decimals = dot == std::string::npos ? 0 : static_cast<long>(text.size() - dot - 1);
        Real shown = Real::parse(text, v.prec());
        // half a unit in the last printed place, plus slack for binary rounding of the literal
        Real half_ulp = ldexp(pow10(-decimals, v.prec()), -1) * Real(mpq_class(1000001, 1000000), v.prec());
        return abs(v - shown) <= half_ulp;
    };
    return close(value.re, re_text) && close(value.im, im_text);
}

}  // namespace charzeta
