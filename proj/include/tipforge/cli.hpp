#pragma once

#include <cstdlib>
#include <functional>
#include <iosfwd>
#include <string>
#include <vector>

#include "tolerances.hpp"

namespace tipforge {

struct TablesPayload;

/// Process exit codes of the command-line tool.
enum ExitCode : int {
    kExitOk = 0,
    kExitUsage = 1,
    kExitParse = 2,
    kExitNumeric = 3,
    kExitDomain = 4,
};

using EnvLookup = std::function<const char*(const char*)>;

/// Applies TIPFORGE_TOL_* environment overrides on top of `base`.
/// Throws std::invalid_argument for values that are not positive numbers.
Tolerances tolerances_from_env(const EnvLookup& env, Tolerances base = {});

/// Runs one CLI invocation. `args` excludes the program name. Reports go to
/// `out`; machine-readable error JSON goes to `err`.
int run_command(const std::vector<std::string>& args, std::ostream& out, std::ostream& err,
                const EnvLookup& env = [](const char* name) -> const char* { return std::getenv(name); });

/// Aligned-text rendering of both sensitivity tables.
std::string render_tables_text(const TablesPayload& tables);
/// `n,coefficient,tipping,total` rows, a-table then s-table, CRLF line endings.
std::string render_tables_csv(const TablesPayload& tables);

}  // namespace tipforge
