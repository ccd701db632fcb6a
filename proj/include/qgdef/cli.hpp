#ifndef QGDEF_CLI_HPP
#define QGDEF_CLI_HPP

#include <ostream>
#include <string>
#include <vector>

namespace qgdef {

/// Exit codes of the command-line surface.
enum ExitCode : int {
    kExitOk = 0,
    kExitDomainError = 1,
    kExitDisagreement = 2,
    kExitUsage = 64,
};

/**
 * Runs one CLI invocation. `args` excludes the program name. All output is
 * deterministic: identical inputs produce byte-identical reports, including
 * under parallel verification sweeps.
 */
int run_command(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

struct SweepOptions {
    long pmax = 8, qmax = 8, rmax = 8;
    int jobs = 1;
};

struct SweepResult {
    long cases = 0;
    long checks = 0;
    long disagreements = 0;
    bool known_typo_confirmed = false;
    std::vector<std::string> disagreement_table; // one machine-readable line per failed check
};

/// Oracle sweep over the cusp catalog: finite multiplicity-3 and -4 cusps up
/// to the bounds, the catalogued infinity degenerations, and the misprinted
/// gamma-system check (reported separately, never counted as disagreement).
SweepResult run_verification_sweep(const SweepOptions& options);

} // namespace qgdef

#endif
