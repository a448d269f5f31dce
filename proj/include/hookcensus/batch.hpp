#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

namespace hookcensus {

// Runs f(0..count-1) across a small worker pool. Callers own determinism by
// indexing their results; scheduling order is unspecified.
void parallel_for_indexed(int count, const std::function<void(int)>& f);

struct CheckReport {
  int compared = 0;
  std::vector<std::string> mismatches;  // one line each, sorted by permutation

  bool pass() const { return mismatches.empty(); }
};

// Formula-versus-oracle sweeps over all of S_n. Suites: "fertility" (stack
// sorting preimage counts), "census" (tree counts for several families),
// "hooks" (enumerator versus exhaustive filtering), "all". Throws
// std::domain_error when n exceeds the oracle bound for the suite and
// std::invalid_argument for an unknown suite.
CheckReport run_check(int n, const std::string& suite);

// CSV of fertility over S_n in lexicographic order, header "perm,value".
// With a cache path, previously computed values are reused; a corrupt cache
// is rebuilt from scratch.
void write_fertility_table(int n, const std::string& csv_path,
                           const std::optional<std::string>& cache_path);

}  // namespace hookcensus
