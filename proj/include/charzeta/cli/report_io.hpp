#pragma once

#include <nlohmann/json.hpp>

#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include "charzeta/identities.hpp"

namespace charzeta::cli {

using Json = nlohmann::ordered_json;

enum class OutputFormat { json, csv, text };

inline OutputFormat parse_output_format(std::string_view name) {
    if (name == "json") return OutputFormat::json;
    if (name == "csv") return OutputFormat::csv;
    if (name == "text") return OutputFormat::text;
    throw Error(ErrorKind::format, "unknown output format '" + std::string(name) + "'");
}

inline Json to_json(const Complex& z) { return {{"re", z.re.to_exact_string()}, {"im", z.im.to_exact_string()}}; }

inline Complex complex_from_json(const Json& j, mpfr_prec_t prec) {
    return {Real::parse(j.at("re").get<std::string>(), prec), Real::parse(j.at("im").get<std::string>(), prec)};
}

// Numbers are exact decimal strings; precision_bits lets a reader rebuild them bit for bit.
inline Json to_json(const IdentityReport& r) {
    Json params = Json::object();
    for (const auto& [k, v] : r.params) params[k] = v;
    Json terms = Json::object();
    for (const auto& [k, v] : r.terms_used) terms[k] = v;
    Json extras = Json::object();
    for (const auto& [k, v] : r.extras) extras[k] = to_json(v);
    return {
        {"identity_id", std::string(to_string(r.identity_id))},
        {"params", std::move(params)},
        {"lhs", to_json(r.lhs)},
        {"rhs", to_json(r.rhs)},
        {"abs_residual", r.abs_residual.to_exact_string()},
        {"rel_residual", r.rel_residual.to_exact_string()},
        {"terms_used", std::move(terms)},
        {"digits", r.digits},
        {"elapsed_ms", r.elapsed_ms},
        {"pass", r.pass},
        {"extras", std::move(extras)},
        {"precision_bits", static_cast<long>(r.lhs.re.prec())},
    };
}

inline IdentityReport report_from_json(const Json& j) {
    try {
        auto prec = static_cast<mpfr_prec_t>(j.at("precision_bits").get<long>());
        IdentityReport r{parse_identity_id(j.at("identity_id").get<std::string>()),
                         {},
                         complex_from_json(j.at("lhs"), prec),
                         complex_from_json(j.at("rhs"), prec),
                         Real::parse(j.at("abs_residual").get<std::string>(), prec),
                         Real::parse(j.at("rel_residual").get<std::string>(), prec),
                         {},
                         {},
                         j.at("digits").get<int>(),
                         j.at("elapsed_ms").get<double>(),
                         j.at("pass").get<bool>()};
        for (const auto& [k, v] : j.at("params").items()) r.params.emplace_back(k, v.get<std::string>());
        for (const auto& [k, v] : j.at("terms_used").items()) r.terms_used[k] = v.get<long>();
        if (j.contains("extras"))
            for (const auto& [k, v] : j.at("extras").items()) r.extras.emplace_back(k, complex_from_json(v, prec));
        return r;
    } catch (const Json::exception& e) {
        throw Error(ErrorKind::format, std::string("malformed report: ") + e.what());
    }
}

inline IdentityReport parse_report(std::string_view text) {
    Json j;
    try {
        j = Json::parse(text);
    } catch (const Json::exception& e) {
        throw Error(ErrorKind::format, std::string("malformed report: ") + e.what());
    }
    return report_from_json(j);
}

inline Json to_json(const std::vector<IdentityReport>& reports) {
    Json out = Json::array();
    for (const auto& r : reports) out.push_back(to_json(r));
    return out;
}

// printf-style %g: positional notation for moderate exponents, trailing zeros dropped.
inline std::string plain_decimal(const Real& v, int significant) {
    char* buf = nullptr;
    int n = mpfr_asprintf(&buf, "%.*Rg", significant, v.raw());
    require(n >= 0, ErrorKind::format, "number formatting failed");
    std::string out(buf);
    mpfr_free_str(buf);
    return out;
}

// "a+bi" or "a-bi", "a" when the imaginary part is zero; significant = 0 gives exact decimals.
inline std::string complex_text(const Complex& z, int significant) {
    auto text = [&](const Real& v) { return significant > 0 ? plain_decimal(v, significant) : v.to_exact_string(); };
    if (z.im.is_zero()) return text(z.re);
    std::string im = text(z.im);
    return text(z.re) + (im.front() == '-' ? "" : "+") + im + "i";
}

inline std::string csv_field(const std::string& text) {
    if (text.find_first_of(",\"\n") == std::string::npos) return text;
    std::string out = "\"";
    for (char c : text) {
        if (c == '"') out += '"';
        out += c;
    }
    return out + "\"";
}

// Columns N, h, x, q, character, lhs, rhs with every n-series cut at 100 terms, then the
// G-at-10-terms rhs and both converged sides.
inline void write_table1_csv(std::ostream& out, const std::vector<IdentityReport>& reports) {
    out << "N,h,x,q,character,lhs,rhs,rhs_g10,lhs_converged,rhs_converged\n";
    auto exact = [](const Complex* z) { return z ? complex_text(*z, 0) : std::string(); };
    for (const auto& r : reports) {
        auto field = [&](const char* name) { return csv_field(r.param(name) ? *r.param(name) : ""); };
        out << field("N") << ',' << field("h") << ',' << field("x") << ',' << field("q") << ',' << field("chi")
            << ',' << exact(r.extra("lhs_100")) << ',' << exact(r.extra("rhs_100")) << ','
            << exact(r.extra("rhs_g10")) << ',' << exact(&r.lhs) << ',' << exact(&r.rhs) << '\n';
    }
}

// One row per report: identity, params as name=value, lhs, rhs, residuals, pass.
inline void write_reports_csv(std::ostream& out, const std::vector<IdentityReport>& reports) {
    out << "identity_id,params,lhs,rhs,abs_residual,rel_residual,digits,elapsed_ms,pass\n";
    for (const auto& r : reports) {
        std::string params;
        for (const auto& [k, v] : r.params) params += (params.empty() ? "" : " ") + k + "=" + v;
        out << to_string(r.identity_id) << ',' << csv_field(params) << ',' << complex_text(r.lhs, 0) << ','
            << complex_text(r.rhs, 0) << ',' << r.abs_residual.to_exact_string() << ','
            << r.rel_residual.to_exact_string() << ',' << r.digits << ',' << r.elapsed_ms << ','
            << (r.pass ? "true" : "false") << '\n';
    }
}

inline void write_report_text(std::ostream& out, const IdentityReport& r) {
    out << to_string(r.identity_id);
    for (const auto& [k, v] : r.params) out << ' ' << k << '=' << v;
    out << '\n';
    out << "  lhs          " << complex_text(r.lhs, r.digits) << '\n';
    out << "  rhs          " << complex_text(r.rhs, r.digits) << '\n';
    for (const auto& [k, v] : r.extras) out << "  " << k << std::string(k.size() < 12 ? 13 - k.size() : 1, ' ')
                                             << complex_text(v, r.digits) << '\n';
    out << "  rel_residual " << r.rel_residual.to_string(3) << "  terms";
    for (const auto& [k, v] : r.terms_used) out << ' ' << k << '=' << v;
    std::ostringstream ms;
    ms.precision(1);
    ms << std::fixed << r.elapsed_ms;
    out << "  " << ms.str() << " ms  " << (r.pass ? "PASS" : "FAIL") << '\n';
}

inline void write_reports(std::ostream& out, const std::vector<IdentityReport>& reports, OutputFormat format) {
    switch (format) {
        case OutputFormat::json: out << to_json(reports).dump(2) << '\n'; break;
        case OutputFormat::csv: write_reports_csv(out, reports); break;
        case OutputFormat::text:
            for (const auto& r : reports) write_report_text(out, r);
            break;
    }
}

}  // namespace charzeta::cli
