#ifndef JLQ_REPORT_HPP
#define JLQ_REPORT_HPP

#include <string>

#include <json.hpp>

#include "jlq/verifier.hpp"

namespace jlq {

const char* check_kind_name(CheckKind k);

// The report document: "meta" holds timing only (the rest is deterministic
// for a given configuration), "config" echoes the run parameters, "checks"
// has one record per (subject, check), "summary" aggregates them.
nlohmann::json make_report(const nlohmann::json& config, const VerifyOutcome& outcome,
                           double wall_seconds);

// One CSV row per check record: subject,check,kind,pass,witness.
std::string render_report_csv(const nlohmann::json& report);

// Summary counts must equal the sums over detail records.
void validate_report(const nlohmann::json& report);

}  // namespace jlq

#endif
