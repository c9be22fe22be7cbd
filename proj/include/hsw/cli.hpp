#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "hsw/graded.hpp"
#include "hsw/report.hpp"

namespace hsw {

enum ExitStatus : int { exit_pass = 0, exit_fail = 1, exit_usage = 2 };

/// Runs one command (arguments without the program name). The report goes to `out`,
/// usage and parse errors to `err`.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

/// Same as run_cli but also hands back the report (empty on usage errors).
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err, Report& report);

/// "1|1" → space with one even and one odd basis vector. Throws Error on bad syntax.
GradedSpace parse_dims(const std::string& spec);

/// K3 audit: morphism and Hom-Jordan verdicts for both K3 twists at `c`, and the
/// Rota-Baxter verdict and ∘-table of the twisted K3 at (c, λ).
Report discrepancy_report(const Scalar& c, const Scalar& lambda);

} // namespace hsw
