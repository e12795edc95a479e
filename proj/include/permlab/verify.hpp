#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace permlab::verify {

// Fixed execution order of `verify all`.
const std::vector<std::string>& suite_names();

bool known_suite(const std::string& name);

// Runs one suite (or "all") up to n_max, printing per-n pass/fail lines and a
// summary to `out`. Returns true iff every check passed. Throws
// std::invalid_argument for an unknown suite name.
bool run_suite(const std::string& name, int n_max, int jobs, std::ostream& out);

}  // namespace permlab::verify
