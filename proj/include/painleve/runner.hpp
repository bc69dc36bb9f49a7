#ifndef PAINLEVE_RUNNER_HPP
#define PAINLEVE_RUNNER_HPP

#include "painleve/report.hpp"

namespace painleve {

// Executes the selected suites over the selected systems and collects one
// record per check. Deterministic: per-check rngs are derived from
// (config.seed, check id), so subsetting never changes another check's
// sample points.
VerificationReport run_suites(const SuiteConfig& config);

}  // namespace painleve

#endif
