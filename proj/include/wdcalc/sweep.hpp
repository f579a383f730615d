#pragma once

#include <cstdint>
#include <ostream>
#include <string>
#include <vector>

namespace wdcalc {

// One line of JSONL per (prime, check, item); a terminal summary line
// closes the report, so a truncated run is detectable. The seed fully
// determines every generated input; reruns are byte-identical.
struct SweepConfig {
    std::vector<int> primes;
    std::string group = "sp";        // corpus family for single-parameter checks
    int max_dim = 8;
    int count = 10;                   // items per (prime, check)
    std::uint64_t seed = 0;
    std::vector<std::string> checks;  // empty = every registered check
};

// Registered check names, in the order an empty config runs them.
const std::vector<std::string>& sweep_check_names();

// Runs the sweep, appending JSONL to `out`. Returns 0 when every line
// passed and 1 otherwise. Unknown check names are rejected up front.
int run_sweep(const SweepConfig& cfg, std::ostream& out);

}  // namespace wdcalc
