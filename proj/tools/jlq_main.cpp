#include <CLI11.hpp>

#include <cstdlib>
#include <iostream>
#include <string>

#include "jlq/runner.hpp"

int main(int argc, char** argv) {
    CLI::App app{"jlq: exact engine for the partition-indexed q-polynomial family J"};
    app.require_subcommand(1);

    jlq::ComputeConfig compute;
    auto* cmd_compute = app.add_subcommand("compute", "compute levels 1..N into a cache");
    cmd_compute->add_option("--max-n", compute.max_n, "highest weight to compute")
        ->required()
        ->check(CLI::PositiveNumber);
    cmd_compute->add_option("--cache", compute.cache_dir, "cache directory")
        ->envname("JLQ_CACHE_DIR")
        ->required();
    cmd_compute->add_option("--threads", compute.threads, "wavefront thread count");

    jlq::VerifyRunConfig verify;
    auto* cmd_verify = app.add_subcommand("verify", "run all checks over cached levels");
    cmd_verify->add_option("--max-n", verify.max_n, "highest weight to verify")
        ->required()
        ->check(CLI::PositiveNumber);
    cmd_verify->add_option("--cache", verify.cache_dir, "cache directory")
        ->envname("JLQ_CACHE_DIR")
        ->required();
    cmd_verify->add_option("--report", verify.report_path, "report output path")->required();
    cmd_verify->add_flag("--strict", verify.strict, "conjecture failures affect exit status");
    cmd_verify->add_option("--cross-route-max", verify.cross_route_max,
                           "cap for the two-route J_n^(r) equality (default 20)");
    cmd_verify->add_option("--family-max", verify.family_max,
                           "cap for J_n^(r)/identity/Bell family checks (default 25)");
    cmd_verify->add_option("--threads", verify.threads, "thread count for per-level checks");

    jlq::OracleConfig oracle;
    std::string oracle_kind;
    auto* cmd_oracle =
        app.add_subcommand("oracle", "compare an independent oracle with the engine");
    cmd_oracle->add_option("kind", oracle_kind, "trees | tutte | symfunc")
        ->required()
        ->check(CLI::IsMember({"trees", "tutte", "symfunc"}));
    cmd_oracle->add_option("--n", oracle.n, "weight parameter");
    cmd_oracle->add_option("--r", oracle.r, "length parameter (tutte)");
    cmd_oracle->add_option("--threads", oracle.threads, "range-splitting thread count");

    jlq::ShowConfig show;
    auto* cmd_show = app.add_subcommand("show", "print one cached polynomial and its checks");
    cmd_show->add_option("--partition", show.partition_text, "partition, e.g. 3,2,1")
        ->required();
    cmd_show->add_option("--cache", show.cache_dir, "cache directory")
        ->envname("JLQ_CACHE_DIR")
        ->required();

    jlq::ReportRenderConfig report;
    std::string report_input;
    auto* cmd_report = app.add_subcommand("report", "render a stored verification report");
    cmd_report->add_option("--format", report.format, "json | csv")
        ->required()
        ->check(CLI::IsMember({"json", "csv"}));
    cmd_report->add_option("--input", report_input,
                           "report file (default $JLQ_CACHE_DIR/report.json)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? jlq::kExitOk : jlq::kExitEnvironmentError;
    }

    if (cmd_compute->parsed()) return jlq::run_compute(compute, std::cout, std::cerr);
    if (cmd_verify->parsed()) return jlq::run_verify(verify, std::cout, std::cerr);
    if (cmd_oracle->parsed()) {
        if (oracle_kind == "trees") oracle.kind = jlq::OracleKind::Trees;
        else if (oracle_kind == "tutte") oracle.kind = jlq::OracleKind::Tutte;
        else oracle.kind = jlq::OracleKind::SymFunc;
        return jlq::run_oracle(oracle, std::cout, std::cerr);
    }
    if (cmd_show->parsed()) return jlq::run_show(show, std::cout, std::cerr);
    if (cmd_report->parsed()) {
        if (report_input.empty()) {
            if (const char* env = std::getenv("JLQ_CACHE_DIR"))
                report_input = std::string(env) + "/report.json";
            else {
                std::cerr << "report: --input required (or set JLQ_CACHE_DIR)\n";
                return jlq::kExitEnvironmentError;
            }
        }
        report.input = report_input;
        return jlq::run_report(report, std::cout, std::cerr);
    }
    return jlq::kExitEnvironmentError;
}
