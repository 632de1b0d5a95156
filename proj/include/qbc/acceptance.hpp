#pragma once

// Desk-scale verification suites shared by the acceptance test binary and the
// `acceptance` subcommand. Each suite is exact; a suite passes only when every
// check holds and the run finishes inside its time budget.

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

namespace qbc::acceptance {

inline constexpr std::uint64_t kDefaultRngSeed = 20240917;

struct Options {
  std::uint64_t rng_seed = kDefaultRngSeed;
  int threads = 0;  // 0: QBC_THREADS or hardware concurrency
};

struct SuiteResult {
  int number = 0;
  std::string id;
  std::string title;
  bool correct = false;
  bool within_budget = false;
  long long checks = 0;
  double seconds = 0.0;
  double budget_seconds = 0.0;
  std::string detail;       // first failure, empty on success
  std::string counterexample;  // machine-readable failure data when available

  bool pass() const { return correct && within_budget; }
};

struct SuiteInfo {
  int number;
  std::string id;
  std::string title;
  double budget_seconds;
};

const std::vector<SuiteInfo>& suites();

// Random mutation sequences of length <= max_len on random chain seeds of
// length <= 6 over A2/A3. Every new variable must be an exact quotient with
// coefficients in Z_{>=0}[t^{+-1/2}].
struct SweepReport {
  int trials = 0;
  long long mutations = 0;
  std::size_t max_terms = 0;
  std::vector<std::string> failures;         // human-readable
  std::vector<std::string> counterexamples;  // JSON objects
};
SweepReport positivity_sweep(int max_len, int trials, const Options& options);
SuiteResult run_suite(const std::string& id, const Options& options);

// Number of worker threads honoring QBC_THREADS.
int thread_count(int requested);
// Runs body(i) for i in [0, count) on up to `threads` workers.
void parallel_for(int count, int threads, const std::function<void(int)>& body);

}  // namespace qbc::acceptance
