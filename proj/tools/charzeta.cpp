// charzeta: reproduce Table 1, verify identities, evaluate functions.
//
//   charzeta table1 [--format csv]
//   charzeta verify --id main --N 4 --h 7 --x 1.22 --chi "q=5;values=1,-1,-1,1" --digits 30
//   charzeta eval --fn dirichlet_l --s 0 --chi "q=1;values="
//   charzeta suite --jobs 4 --format text
//
// Exit status: 0 pass, 1 residual above tolerance, 2 bad parameters, 3 non-convergence.

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <map>

#include "charzeta/cli/run.hpp"

namespace {

using namespace charzeta;
using namespace charzeta::cli;

// Parameter flags shared by verify and eval, collected as raw text.
const char* const parameter_flags[] = {"N", "h", "x", "chi", "m", "alpha", "c0", "T", "s", "a", "n", "j", "nu", "y"};

struct Options {
    RunConfig cfg;
    std::string format = "json";
    std::map<std::string, std::string> raw;
};

void add_common(CLI::App* sub, Options& o) {
    sub->set_help_flag("--help", "Print this help message and exit");  // -h would shadow --h
    sub->add_option("--digits", o.cfg.digits, "Target significant digits (default from CHARZETA_DIGITS or 30)");
    sub->add_option("--format", o.format, "Output format")->check(CLI::IsMember({"json", "csv", "text"}));
    sub->add_option("-o,--output", o.cfg.output_path, "Write to this file instead of stdout");
    sub->add_option("--max-terms", o.cfg.max_terms, "Per-series term cap");
    sub->add_option("--extra-tail-digits", o.cfg.extra_tail_digits, "Tighten series tail targets by this many decades");
}

void add_parameters(CLI::App* sub, Options& o) {
    for (const char* name : parameter_flags) sub->add_option(std::string("--") + name, o.raw[name]);
}

int emit(const RunConfig& cfg, const std::function<void(std::ostream&)>& write) {
    if (cfg.output_path.empty()) {
        write(std::cout);
        return 0;
    }
    std::ofstream file(cfg.output_path);
    if (!file) {
        std::cerr << "charzeta: cannot open " << cfg.output_path << '\n';
        return exit_parameter;
    }
    write(file);
    return 0;
}

int run(Options& o, CLI::App& app) {
    RunConfig& cfg = o.cfg;
    cfg.format = parse_output_format(o.format);
    for (const char* name : parameter_flags)
        if (auto* opt = app.get_subcommands().front()->get_option_no_throw(std::string("--") + name);
            opt && opt->count() > 0)
            cfg.params.emplace_back(name, o.raw[name]);

    switch (cfg.command) {
        case Command::table1: {
            PrecisionContext ctx = make_context(cfg.digits);
            auto reports = run_table1(ctx, make_budget(cfg, ctx));
            if (int rc = emit(cfg, [&](std::ostream& out) {
                    if (cfg.format == OutputFormat::csv) write_table1_csv(out, reports);
                    else write_reports(out, reports, cfg.format);
                }))
                return rc;
            for (const auto& r : reports)
                if (!r.pass) return exit_residual_fail;
            return exit_pass;
        }
        case Command::verify: {
            IdentityReport r = run_verify(cfg);
            if (int rc = emit(cfg, [&](std::ostream& out) {
                    if (cfg.format == OutputFormat::json) out << to_json(r).dump(2) << '\n';
                    else write_reports(out, {r}, cfg.format);
                }))
                return rc;
            return r.pass ? exit_pass : exit_residual_fail;
        }
        case Command::eval: {
            EvalResult e = run_eval(cfg);
            return emit(cfg, [&](std::ostream& out) { write_eval(out, e, cfg.format); });
        }
        case Command::suite: {
            SuiteSummary s = run_suite(cfg);
            if (int rc = emit(cfg, [&](std::ostream& out) { write_suite(out, s, cfg.format); })) return rc;
            if (!s.errors.empty()) return exit_parameter;
            return s.all_passed() ? exit_pass : exit_residual_fail;
        }
    }
    return exit_parameter;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Character-twisted Lambert series: identity checks and special values"};
    app.require_subcommand(1);
    Options o;
    try {
        o.cfg.digits = default_digits();
    } catch (const Error& e) {
        std::cerr << "charzeta: " << e.what() << '\n';
        return exit_parameter;
    }

    auto* table1 = app.add_subcommand("table1", "Table 1 rows: 100-term and converged values");
    add_common(table1, o);
    table1->callback([&] { o.cfg.command = Command::table1; });

    auto* verify = app.add_subcommand("verify", "Check one identity at the given parameters");
    add_common(verify, o);
    add_parameters(verify, o);
    std::vector<std::string> ids;
    for (IdentityId id : all_identity_ids) ids.emplace_back(to_string(id));
    verify->add_option("--id", o.cfg.identity_id, "Identity to check")->required()->check(CLI::IsMember(ids));
    verify->callback([&] { o.cfg.command = Command::verify; });

    auto* eval = app.add_subcommand("eval", "Evaluate a single function");
    add_common(eval, o);
    add_parameters(eval, o);
    std::vector<std::string> fns(std::begin(eval_functions), std::end(eval_functions));
    eval->add_option("--fn", o.cfg.function, "Function")->required()->check(CLI::IsMember(fns));
    eval->callback([&] { o.cfg.command = Command::eval; });

    auto* suite = app.add_subcommand("suite", "Run every identity at fixed parameter sets");
    add_common(suite, o);
    suite->add_option("--jobs", o.cfg.jobs, "Checks run in parallel")->check(CLI::PositiveNumber);
    suite->callback([&] { o.cfg.command = Command::suite; });

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e);
        return rc == 0 ? 0 : exit_parameter;
    }

    try {
        return run(o, app);
    } catch (const Error& e) {
        std::cerr << "charzeta: " << e.what() << '\n';
        return exit_code(e.kind());
    }
}
