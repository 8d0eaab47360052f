#include "jlq/report.hpp"

#include <ctime>
#include <sstream>

namespace jlq {

const char* check_kind_name(CheckKind k) {
    switch (k) {
        case CheckKind::Theorem: return "theorem";
        case CheckKind::Conjecture: return "conjecture";
        case CheckKind::Finding: return "finding";
    }
    return "unknown";
}

namespace {
std::string iso_timestamp() {
    const std::time_t now = std::time(nullptr);
    char buf[32];
    std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", std::gmtime(&now));
    return buf;
}
}  // namespace

nlohmann::json make_report(const nlohmann::json& config, const VerifyOutcome& outcome,
                           double wall_seconds) {
    nlohmann::json checks = nlohmann::json::array();
    for (const auto& rec : outcome.records) {
        checks.push_back({{"subject", rec.subject},
                          {"check", rec.check},
                          {"kind", check_kind_name(rec.kind)},
                          {"pass", rec.pass},
                          {"witness", rec.witness}});
    }
    nlohmann::json levels = nlohmann::json::array();
    for (const auto& lvl : outcome.levels)
        levels.push_back(
            {{"n", lvl.n}, {"records", lvl.records}, {"max_degree", lvl.max_degree}});

    const std::size_t failures =
        outcome.theorem_failures + outcome.conjecture_failures + outcome.finding_failures;
    return nlohmann::json{
        {"meta", {{"generated_at", iso_timestamp()}, {"wall_seconds", wall_seconds}}},
        {"config", config},
        {"levels", levels},
        {"checks", checks},
        {"summary",
         {{"polynomials_checked", outcome.polynomials_checked},
          {"check_records", outcome.records.size()},
          {"failures", failures},
          {"theorem_failures", outcome.theorem_failures},
          {"conjecture_failures", outcome.conjecture_failures},
          {"finding_failures", outcome.finding_failures},
          {"max_degree", outcome.max_degree}}},
    };
}

namespace {
std::string csv_escape(const std::string& field) {
    if (field.find_first_of(",\"\n") == std::string::npos) return field;
    std::string out = "\"";
    for (char c : field) {
        if (c == '"') out += '"';
        out += c;
    }
    out += '"';
    return out;
}
}  // namespace

std::string render_report_csv(const nlohmann::json& report) {
    std::ostringstream out;
    out << "subject,check,kind,pass,witness\n";
    for (const auto& rec : report.at("checks")) {
        out << csv_escape(rec.at("subject").get<std::string>()) << ','
            << csv_escape(rec.at("check").get<std::string>()) << ','
            << rec.at("kind").get<std::string>() << ','
            << (rec.at("pass").get<bool>() ? "pass" : "fail") << ','
            << csv_escape(rec.at("witness").get<std::string>()) << '\n';
    }
    return std::move(out).str();
}

void validate_report(const nlohmann::json& report) {
    std::size_t theorem = 0, conjecture = 0, finding = 0;
    for (const auto& rec : report.at("checks")) {
        if (rec.at("pass").get<bool>()) continue;
        const std::string kind = rec.at("kind").get<std::string>();
        if (kind == "theorem") ++theorem;
        else if (kind == "conjecture") ++conjecture;
        else ++finding;
    }
    const auto& summary = report.at("summary");
    if (summary.at("theorem_failures").get<std::size_t>() != theorem ||
        summary.at("conjecture_failures").get<std::size_t>() != conjecture ||
        summary.at("finding_failures").get<std::size_t>() != finding ||
        summary.at("check_records").get<std::size_t>() != report.at("checks").size() ||
        summary.at("failures").get<std::size_t>() != theorem + conjecture + finding)
        throw std::logic_error("report summary does not match detail records");
}

}  // namespace jlq
