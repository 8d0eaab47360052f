#ifndef JLQ_RUNNER_HPP
#define JLQ_RUNNER_HPP

#include <filesystem>
#include <iosfwd>
#include <string>

namespace jlq {

// Exit-code policy: CI can tell a defect from a mathematical finding.
enum ExitCode : int {
    kExitOk = 0,
    kExitTheoremFailure = 1,
    kExitConjectureFailure = 2,
    kExitEnvironmentError = 3,
};

struct ComputeConfig {
    unsigned max_n = 1;
    std::filesystem::path cache_dir;
    unsigned threads = 1;
};
int run_compute(const ComputeConfig& cfg, std::ostream& out, std::ostream& err);

struct VerifyRunConfig {
    unsigned max_n = 1;
    std::filesystem::path cache_dir;
    std::filesystem::path report_path;
    bool strict = false;
    unsigned cross_route_max = 20;
    unsigned family_max = 25;
    unsigned dominance_pair_max = 12;
    unsigned threads = 1;
};
int run_verify(const VerifyRunConfig& cfg, std::ostream& out, std::ostream& err);

enum class OracleKind { Trees, Tutte, SymFunc };

struct OracleConfig {
    OracleKind kind = OracleKind::Trees;
    unsigned n = 4;
    unsigned r = 1;
    unsigned threads = 1;
};
int run_oracle(const OracleConfig& cfg, std::ostream& out, std::ostream& err);

struct ShowConfig {
    std::string partition_text;
    std::filesystem::path cache_dir;
};
int run_show(const ShowConfig& cfg, std::ostream& out, std::ostream& err);

struct ReportRenderConfig {
    std::filesystem::path input;
    std::string format = "json";  // json | csv
};
int run_report(const ReportRenderConfig& cfg, std::ostream& out, std::ostream& err);

}  // namespace jlq

#endif
