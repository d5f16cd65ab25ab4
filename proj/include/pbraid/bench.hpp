#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "pbraid/word.hpp"

namespace pbraid {

// Product of c permutation braids, each drawn uniformly from S_n by a
// Fisher-Yates shuffle driven by mt19937_64(seed) with rejection sampling, so
// the words do not depend on the standard library's distributions.
ArtinWord random_braid(int n, int c, std::uint64_t seed);

struct BenchConfig {
  int n = 4;
  int k = 1;
  int c = 10;
  int samples = 100;
  std::uint64_t seed = 1;
  long time_budget_ms = 10'000;  // per instance
  long operation_budget = -1;    // per instance, negative for none
  long uss_element_cap = 200'000;
  // Drop wall-clock limits and timings so the output depends only on the config.
  bool deterministic = false;
  bool prereduce = true;
  // Once the baseline misses one instance of a sample, mark the rest missed too.
  bool abort_baseline_on_failure = true;
  std::vector<std::string> algorithms{"U-delta", "U-epsilon", "B", "C"};
};

enum class InstanceStatus { Ok, Timeout, Budget, Failed };
std::string to_string(InstanceStatus s);

struct BenchRecord {
  std::string algorithm;
  int n = 0;
  int k = 0;
  int c = 0;
  std::vector<InstanceStatus> statuses;
  double total_ms = 0;  // solver calls only

  int ok() const;
  int missed() const;  // timeout or budget
};

std::vector<BenchRecord> bench_run(const BenchConfig& cfg);

std::string bench_csv_header();
std::string bench_csv_row(const BenchRecord& r, bool with_timing);

}  // namespace pbraid
