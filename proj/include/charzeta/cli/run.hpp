#pragma once

#include <cstdlib>
#include <functional>
#include <future>
#include <optional>
#include <string>
#include <vector>

#include "charzeta/cli/report_io.hpp"
#include "charzeta/identities.hpp"

namespace charzeta::cli {

enum class Command { table1, verify, eval, suite };

inline constexpr const char* digits_env_var = "CHARZETA_DIGITS";
inline constexpr int fallback_digits = 30;

struct RunConfig {
    Command command = Command::verify;
    std::string identity_id;      // verify
    std::string function;         // eval
    ParamList params;             // name -> text exactly as given
    int digits = fallback_digits;
    std::optional<long> max_terms;
    int extra_tail_digits = 0;    // tightens every series tail target by this many decades
    OutputFormat format = OutputFormat::json;
    std::string output_path;      // empty: stdout
    int jobs = 1;                 // suite only

    const std::string* param(std::string_view name) const {
        for (const auto& [k, v] : params)
            if (k == name) return &v;
        return nullptr;
    }
};

// CHARZETA_DIGITS when set and numeric, else 30.
inline int default_digits() {
    const char* raw = std::getenv(digits_env_var);
    if (!raw || !*raw) return fallback_digits;
    long value = charzeta::detail::parse_long(raw, digits_env_var);
    require(value > 0 && value < 1'000'000, ErrorKind::invalid_precision,
            std::string(digits_env_var) + " out of range");
    return static_cast<int>(value);
}

enum ExitCode : int { exit_pass = 0, exit_residual_fail = 1, exit_parameter = 2, exit_non_convergence = 3 };

inline int exit_code(ErrorKind kind) {
    switch (kind) {
        case ErrorKind::non_convergence:
        case ErrorKind::overflow: return exit_non_convergence;
        default: return exit_parameter;
    }
}

inline TruncationBudget make_budget(const RunConfig& cfg, const PrecisionContext& ctx) {
    TruncationBudget budget = TruncationBudget::from(ctx).tightened(cfg.extra_tail_digits);
    if (cfg.max_terms) {
        require(*cfg.max_terms > 0, ErrorKind::parameter, "max-terms must be positive");
        budget.max_terms = *cfg.max_terms;
    }
    return budget;
}

// Decimal, "pi", "e", optionally "+k", or "a*pi" / "a*e".
inline Real parse_real_argument(const std::string& text, const PrecisionContext& ctx) {
    auto star = text.find('*');
    if (star == std::string::npos) return table1_argument(charzeta::detail::trim(text), ctx);
    return table1_argument(charzeta::detail::trim(text.substr(0, star)), ctx) *
           table1_argument(charzeta::detail::trim(text.substr(star + 1)), ctx);
}

// "a", "bi", "a+bi", "a-bi" with decimal parts ("i" alone is 1i).
inline Complex parse_complex_argument(const std::string& raw, const PrecisionContext& ctx) {
    std::string text = charzeta::detail::trim(raw);
    require(!text.empty(), ErrorKind::format, "empty complex number");
    if (text.back() != 'i') return Complex(parse_real_argument(text, ctx));
    std::string body = text.substr(0, text.size() - 1);
    std::size_t split = std::string::npos;
    for (std::size_t k = body.size(); k-- > 1;)
        if ((body[k] == '+' || body[k] == '-') && body[k - 1] != 'e' && body[k - 1] != 'E') {
            split = k;
            break;
        }
    std::string re_text = split == std::string::npos ? "0" : body.substr(0, split);
    std::string im_text = split == std::string::npos ? body : body.substr(split);
    if (im_text.empty() || im_text == "+") im_text = "1";
    if (im_text == "-") im_text = "-1";
    if (im_text.front() == '+') im_text.erase(0, 1);
    return {ctx.parse(re_text), ctx.parse(im_text)};
}

namespace detail {

inline const std::string& required_param(const RunConfig& cfg, std::string_view name) {
    const std::string* v = cfg.param(name);
    require(v != nullptr, ErrorKind::parameter, "missing --" + std::string(name));
    return *v;
}

inline long long_param(const RunConfig& cfg, std::string_view name) {
    return charzeta::detail::parse_long(required_param(cfg, name), name);
}

inline Real real_param(const RunConfig& cfg, std::string_view name, const PrecisionContext& ctx) {
    return parse_real_argument(required_param(cfg, name), ctx);
}

inline DirichletCharacter chi_param(const RunConfig& cfg) {
    const std::string* v = cfg.param("chi");
    return v ? parse_character(*v) : principal_character(1);
}

inline SeriesParams series_params(const RunConfig& cfg, const PrecisionContext& ctx) {
    return {long_param(cfg, "N"), long_param(cfg, "h"), real_param(cfg, "x", ctx), chi_param(cfg)};
}

// Replace the report's echo of each command-line parameter by the text as typed.
inline void echo_verbatim(IdentityReport& r, const RunConfig& cfg) {
    for (auto& [key, value] : r.params)
        if (const std::string* given = cfg.param(key)) value = *given;
    for (const auto& [key, value] : cfg.params)
        if (!r.param(key)) r.params.emplace_back(key, value);
}

}  // namespace detail

inline IdentityReport run_verify(const RunConfig& cfg) {
    using namespace detail;
    PrecisionContext ctx = make_context(cfg.digits);
    TruncationBudget budget = make_budget(cfg, ctx);
    IdentityReport r = [&] {
        switch (parse_identity_id(cfg.identity_id)) {
            case IdentityId::main_theorem: return verify_main_theorem(series_params(cfg, ctx), ctx, budget);
            case IdentityId::character_ramanujan:
                return verify_character_ramanujan(long_param(cfg, "N"), long_param(cfg, "m"),
                                                  real_param(cfg, "alpha", ctx), chi_param(cfg), ctx, budget);
            case IdentityId::two_variable:
                return verify_two_variable(long_param(cfg, "N"), long_param(cfg, "m"), real_param(cfg, "alpha", ctx), ctx,
                                         budget);
            case IdentityId::katayama:
                return verify_katayama(long_param(cfg, "m"), real_param(cfg, "alpha", ctx), chi_param(cfg), ctx, budget);
            case IdentityId::l_one_third: return verify_L_one_third(real_param(cfg, "alpha", ctx), ctx, budget);
            case IdentityId::h_special:
                return verify_h_special(long_param(cfg, "N"), real_param(cfg, "x", ctx), chi_param(cfg), ctx, budget);
            case IdentityId::eta: return verify_eta_identity(real_param(cfg, "alpha", ctx), ctx, budget);
            case IdentityId::zeta_half: return verify_zeta_half(real_param(cfg, "alpha", ctx), ctx, budget);
            case IdentityId::classical_ramanujan:
                return verify_classical_ramanujan(long_param(cfg, "m"), real_param(cfg, "alpha", ctx), ctx, budget);
            case IdentityId::mellin:
                return mellin_contour_check(series_params(cfg, ctx), real_param(cfg, "c0", ctx),
                                            real_param(cfg, "T", ctx), ctx, budget);
        }
        fail(ErrorKind::parameter, "unhandled identity");
    }();
    echo_verbatim(r, cfg);
    return r;
}

struct EvalResult {
    std::string function;
    ParamList params;
    Complex value;
    long terms_used = 0;
    int digits = 0;
};

inline constexpr const char* eval_functions[] = {
    "dirichlet_l", "zeta", "hurwitz_zeta", "gamma", "gauss_sum", "generalized_bernoulli",
    "lambert_F", "correction_J", "series_G",
};

inline EvalResult run_eval(const RunConfig& cfg) {
    using namespace detail;
    PrecisionContext ctx = make_context(cfg.digits);
    TruncationBudget budget = make_budget(cfg, ctx);
    const std::string& fn = cfg.function;
    EvalResult out{fn, cfg.params, Complex(ctx.bits()), 0, cfg.digits};
    auto s = [&] { return parse_complex_argument(required_param(cfg, "s"), ctx); };
    if (fn == "dirichlet_l") {
        out.value = dirichlet_l(s(), chi_param(cfg), ctx);
    } else if (fn == "zeta") {
        out.value = riemann_zeta(s(), ctx);
    } else if (fn == "hurwitz_zeta") {
        out.value = hurwitz_zeta(s(), real_param(cfg, "a", ctx), ctx);
    } else if (fn == "gamma") {
        out.value = gamma_function(s(), ctx);
    } else if (fn == "gauss_sum") {
        out.value = gauss_sum(chi_param(cfg), ctx);
    } else if (fn == "generalized_bernoulli") {
        out.value = generalized_bernoulli(long_param(cfg, "n"), chi_param(cfg), ctx);
    } else if (fn == "lambert_F" || fn == "correction_J") {
        auto v = fn == "lambert_F" ? lambert_F(series_params(cfg, ctx), ctx, budget)
                                   : correction_J(series_params(cfg, ctx), ctx, budget);
        out.value = std::move(v.value);
        out.terms_used = v.terms_used;
    } else if (fn == "series_G") {
        auto v = series_G(long_param(cfg, "N"), long_param(cfg, "j"), real_param(cfg, "nu", ctx),
                          real_param(cfg, "y", ctx), chi_param(cfg), ctx, budget);
        out.value = std::move(v.value);
        out.terms_used = v.terms_used;
    } else {
        fail(ErrorKind::parameter, "unknown function '" + fn + "'");
    }
    out.value = {out.value.re.rounded(ctx.bits()), out.value.im.rounded(ctx.bits())};
    return out;
}

inline Json to_json(const EvalResult& e) {
    Json params = Json::object();
    for (const auto& [k, v] : e.params) params[k] = v;
    Json out = {{"function", e.function}, {"params", std::move(params)}, {"value", to_json(e.value)},
                {"digits", e.digits}};
    if (e.terms_used > 0) out["terms_used"] = e.terms_used;
    return out;
}

inline void write_eval(std::ostream& out, const EvalResult& e, OutputFormat format) {
    switch (format) {
        case OutputFormat::json: out << to_json(e).dump(2) << '\n'; break;
        case OutputFormat::csv:
            out << "function,re,im\n"
                << e.function << ',' << e.value.re.to_exact_string() << ',' << e.value.im.to_exact_string() << '\n';
            break;
        case OutputFormat::text: out << complex_text(e.value, e.digits) << '\n'; break;
    }
}

struct SuiteCheck {
    std::string label;
    std::function<IdentityReport(const PrecisionContext&, const TruncationBudget&)> run;
};

// Fixed parameter sets covering every identity; Table 1 rows first.
inline std::vector<SuiteCheck> suite_checks() {
    std::vector<SuiteCheck> checks;
    for (const auto& row : table1_rows()) {
        checks.push_back({"table1 N=" + std::to_string(row.N) + " h=" + std::to_string(row.h),
                          [row](const PrecisionContext& c, const TruncationBudget& b) {
                              return verify_main_theorem(table1_params(row, c), c, b);
                          }});
    }
    for (long m : {-3L, -2L, 1L, 2L, 3L})
        for (const char* a : {"1", "pi", "2"})
            checks.push_back({"classical_ramanujan m=" + std::to_string(m) + " alpha=" + a,
                              [m, a](const PrecisionContext& c, const TruncationBudget& b) {
                                  return verify_classical_ramanujan(m, parse_real_argument(a, c), c, b);
                              }});
    for (const char* a : {"0.5", "1", "pi"})
        checks.push_back({std::string("eta alpha=") + a, [a](const PrecisionContext& c, const TruncationBudget& b) {
                              return verify_eta_identity(parse_real_argument(a, c), c, b);
                          }});
    for (const char* a : {"1", "1.5", "2"})
        checks.push_back({std::string("l_one_third alpha=") + a,
                          [a](const PrecisionContext& c, const TruncationBudget& b) {
                              return verify_L_one_third(parse_real_argument(a, c), c, b);
                          }});
    checks.push_back({"zeta_half alpha=1", [](const PrecisionContext& c, const TruncationBudget& b) {
                          return verify_zeta_half(c.real(1), c, b);
                      }});
    checks.push_back({"zeta_half alpha=2pi^(3/2)", [](const PrecisionContext& c, const TruncationBudget& b) {
                          Real p = c.pi();
                          return verify_zeta_half(ldexp(p * sqrt(p), 1), c, b);
                      }});
    checks.push_back({"zeta_half alpha=4", [](const PrecisionContext& c, const TruncationBudget& b) {
                          return verify_zeta_half(c.real(4), c, b);
                      }});
    checks.push_back({"character_ramanujan N=3 m=1 q=5", [](const PrecisionContext& c, const TruncationBudget& b) {
                          return verify_character_ramanujan(3, 1, c.pi(), parse_character("q=5;values=1,-1,-1,1"),
                                                            c, b);
                      }});
    checks.push_back({"two_variable N=3 m=1", [](const PrecisionContext& c, const TruncationBudget& b) {
                          return verify_two_variable(3, 1, c.real(1), c, b);
                      }});
    checks.push_back({"katayama m=2 q=5", [](const PrecisionContext& c, const TruncationBudget& b) {
                          return verify_katayama(2, c.real(1), parse_character("q=5;values=1,-1,-1,1"), c, b);
                      }});
    checks.push_back({"h_special N=3 q=1", [](const PrecisionContext& c, const TruncationBudget& b) {
                          return verify_h_special(3, c.real(2), principal_character(1), c, b);
                      }});
    checks.push_back({"h_special N=1 q=5", [](const PrecisionContext& c, const TruncationBudget& b) {
                          return verify_h_special(1, c.real(1), parse_character("q=5;values=1,-1,-1,1"), c, b);
                      }});
    return checks;
}

struct SuiteSummary {
    std::vector<IdentityReport> reports;
    std::vector<std::pair<std::string, std::string>> errors;  // label, message

    long passed() const {
        long n = 0;
        for (const auto& r : reports) n += r.pass ? 1 : 0;
        return n;
    }
    bool all_passed() const { return errors.empty() && passed() == static_cast<long>(reports.size()); }
};

// Checks run on up to cfg.jobs threads; results keep the check order.
inline SuiteSummary run_suite(const RunConfig& cfg) {
    PrecisionContext ctx = make_context(cfg.digits);
    TruncationBudget budget = make_budget(cfg, ctx);
    auto checks = suite_checks();
    struct Outcome {
        std::optional<IdentityReport> report;
        std::string error;
    };
    auto run_one = [&](const SuiteCheck& check) {
        Outcome o;
        try {
            o.report = check.run(ctx, budget);
        } catch (const Error& e) {
            o.error = e.what();
        }
        return o;
    };
    std::vector<Outcome> outcomes(checks.size());
    std::size_t jobs = static_cast<std::size_t>(std::max(1, cfg.jobs));
    for (std::size_t start = 0; start < checks.size(); start += jobs) {
        std::vector<std::future<Outcome>> batch;
        for (std::size_t k = start; k < std::min(checks.size(), start + jobs); ++k)
            batch.push_back(std::async(jobs == 1 ? std::launch::deferred : std::launch::async, run_one,
                                       std::cref(checks[k])));
        for (std::size_t k = 0; k < batch.size(); ++k) outcomes[start + k] = batch[k].get();
    }
    SuiteSummary summary;
    for (std::size_t k = 0; k < checks.size(); ++k) {
        if (outcomes[k].report) summary.reports.push_back(std::move(*outcomes[k].report));
        else summary.errors.emplace_back(checks[k].label, outcomes[k].error);
    }
    return summary;
}

inline Json to_json(const SuiteSummary& s) {
    Json errors = Json::array();
    for (const auto& [label, message] : s.errors) errors.push_back({{"check", label}, {"error", message}});
    return {{"passed", s.passed()},
            {"total", static_cast<long>(s.reports.size() + s.errors.size())},
            {"reports", to_json(s.reports)},
            {"errors", std::move(errors)}};
}

inline void write_suite(std::ostream& out, const SuiteSummary& s, OutputFormat format) {
    switch (format) {
        case OutputFormat::json: out << to_json(s).dump(2) << '\n'; return;
        case OutputFormat::csv: write_reports_csv(out, s.reports); break;
        case OutputFormat::text: write_reports(out, s.reports, format); break;
    }
    for (const auto& [label, message] : s.errors) out << "# " << label << ": " << message << '\n';
    if (format == OutputFormat::text)
        out << s.passed() << '/' << s.reports.size() + s.errors.size() << " checks passed\n";
}

}  // namespace charzeta::cli
