#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "bidik/registry/run.hpp"

namespace bidik::cli {

/// Exit statuses shared by every subcommand.
inline constexpr int kExitOk = 0;
inline constexpr int kExitValidation = 1;
inline constexpr int kExitIo = 2;

enum class OutputFormat { Table, Json, Csv };

/// Renders a run for the rank command. Table scores use 6 decimals; csv and
/// json carry full double precision. trace adds the crisp and normalized matrices.
std::string render_run(const registry::SelectionRun& run, OutputFormat format, bool trace);

/// Entry point behind the bidik executable. args excludes the program name.
///
///   rank --applicants <csv|-> --criteria <json> [--weights w1,..] [--top N]
///        [--year Y] [--format table|json|csv] [--trace]
///   validate --criteria <json>
///   serve [--port P] [--data-dir D] [--admin-user U] [--admin-password P] [--static-dir S]
int run_cli(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err);

}  // namespace bidik::cli
