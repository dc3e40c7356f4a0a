#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include <json.hpp>

#include "degbell/report.hpp"

namespace degbell::cli {

/// Exit status for a verification run that found failures.
inline constexpr int kExitFailed = 1;
/// Exit status for bad flags, malformed rationals, and other usage errors.
inline constexpr int kExitUsage = 2;

/// Runs one command. args excludes the program name. Tables and reports go
/// to out (or to --out), diagnostics to err.
/// Writes verification reports as JSON or CSV. Returns 0 when every report
/// passed and kExitFailed otherwise.
int emit_reports(const std::string& kind, nlohmann::ordered_json parameters,
                 const std::vector<VerificationReport>& reports, const std::string& format,
                 bool timing, std::ostream& os);

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace degbell::cli
