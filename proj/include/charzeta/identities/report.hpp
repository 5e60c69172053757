#pragma once

#include <chrono>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "charzeta/error.hpp"
#include "charzeta/numerics/complex.hpp"
#include "charzeta/numerics/context.hpp"

namespace charzeta {

enum class IdentityId {
    main_theorem,
    character_ramanujan,
    two_variable,
    katayama,
    l_one_third,
    h_special,
    eta,
    zeta_half,
    classical_ramanujan,
    mellin,
};

inline constexpr IdentityId all_identity_ids[] = {
    IdentityId::main_theorem, IdentityId::character_ramanujan, IdentityId::two_variable,
    IdentityId::katayama,     IdentityId::l_one_third,         IdentityId::h_special,
    IdentityId::eta,          IdentityId::zeta_half,           IdentityId::classical_ramanujan,
    IdentityId::mellin,
};

constexpr std::string_view to_string(IdentityId id) noexcept {
    switch (id) {
        case IdentityId::main_theorem: return "main";
        case IdentityId::character_ramanujan: return "character_ramanujan";
        case IdentityId::two_variable: return "two_variable";
        case IdentityId::katayama: return "katayama";
        case IdentityId::l_one_third: return "l_one_third";
        case IdentityId::h_special: return "h_special";
        case IdentityId::eta: return "eta";
        case IdentityId::zeta_half: return "zeta_half";
        case IdentityId::classical_ramanujan: return "classical_ramanujan";
        case IdentityId::mellin: return "mellin";
    }
    return "unknown";
}

inline IdentityId parse_identity_id(std::string_view name) {
    for (IdentityId id : all_identity_ids)
        if (to_string(id) == name) return id;
    throw Error(ErrorKind::parameter, "unknown identity id '" + std::string(name) + "'");
}

inline constexpr int default_tolerance_margin = 5;

// Ordered (name, value) echo of the inputs.
using ParamList = std::vector<std::pair<std::string, std::string>>;

struct IdentityReport {
    IdentityId identity_id = IdentityId::main_theorem;
    ParamList params;
    Complex lhs;
    Complex rhs;
    Real abs_residual;
    Real rel_residual;
    std::map<std::string, long> terms_used;
    // Named auxiliary values: truncated sides, recovered constants, tail bounds.
    std::vector<std::pair<std::string, Complex>> extras;
    int digits = 0;
    double elapsed_ms = 0.0;
    bool pass = false;

    friend bool operator==(const IdentityReport&, const IdentityReport&) = default;

    const Complex* extra(std::string_view name) const {
        for (const auto& [key, value] : extras)
            if (key == name) return &value;
        return nullptr;
    }

    const std::string* param(std::string_view name) const {
        for (const auto& [key, value] : params)
            if (key == name) return &value;
        return nullptr;
    }
};

// abs/max(|lhs|, |rhs|, 1)
inline Real relative_residual(const Complex& lhs, const Complex& rhs) {
    Real diff = abs(lhs - rhs);
    Real scale = max(max(abs(lhs), abs(rhs)), Real(1, diff.prec()));
    return diff / scale;
}

inline bool passes(const Real& rel_residual, int digits, int margin = default_tolerance_margin) {
    return rel_residual < pow10(-digits + margin, rel_residual.prec());
}

// Stopwatch plus accumulators for one identity evaluation.
class ReportBuilder {
public:
    ReportBuilder(IdentityId id, const PrecisionContext& ctx)
        : id_(id), digits_(ctx.digits), bits_(ctx.bits()), start_(std::chrono::steady_clock::now()) {}

    ReportBuilder& param(std::string name, std::string value) {
        params_.emplace_back(std::move(name), std::move(value));
        return *this;
    }
    ReportBuilder& param(std::string name, long value) { return param(std::move(name), std::to_string(value)); }
    ReportBuilder& param(std::string name, const Real& value) {
        return param(std::move(name), value.to_string(digits_));
    }

    void count(const std::string& series, long terms) { terms_[series] += terms; }
    void extra(std::string name, Complex value) { extras_.emplace_back(std::move(name), rounded(value)); }

    // Every stored number is rounded to the context's working precision.
    IdentityReport finish(Complex lhs, Complex rhs, int margin = default_tolerance_margin) {
        lhs = rounded(lhs);
        rhs = rounded(rhs);
        Real abs_residual = abs(lhs - rhs);
        Real rel_residual = relative_residual(lhs, rhs).rounded(bits_);
        abs_residual = abs_residual.rounded(bits_);
        bool ok = passes(rel_residual, digits_, margin);
        double elapsed =
            std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start_).count();
        IdentityReport r{id_,
                         std::move(params_),
                         std::move(lhs),
                         std::move(rhs),
                         std::move(abs_residual),
                         std::move(rel_residual),
                         std::move(terms_),
                         std::move(extras_),
                         digits_,
                         elapsed,
                         ok};
        return r;
    }

private:
    Complex rounded(const Complex& z) const { return {z.re.rounded(bits_), z.im.rounded(bits_)}; }

    IdentityId id_;
    int digits_;
    mpfr_prec_t bits_;
    std::chrono::steady_clock::time_point start_;
    ParamList params_;
    std::map<std::string, long> terms_;
    std::vector<std::pair<std::string, Complex>> extras_;
};

}  // namespace charzeta
