#include "pbraid/bench.hpp"

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <limits>
#include <numeric>
#include <optional>
#include <random>
#include <stdexcept>

#include "pbraid/classical.hpp"
#include "pbraid/solver.hpp"
#include "pbraid/uss.hpp"

namespace pbraid {

namespace {

std::uint64_t uniform_below(std::mt19937_64& rng, std::uint64_t bound) {
  const std::uint64_t limit =
      std::numeric_limits<std::uint64_t>::max() - std::numeric_limits<std::uint64_t>::max() % bound;
  std::uint64_t r;
  do {
    r = rng();
  } while (r >= limit);
  return r % bound;
}

// One seed per sample index, spread by splitmix64 so neighbouring indices
// give unrelated streams.
std::uint64_t sample_seed(std::uint64_t seed, int i) {
  std::uint64_t z = seed + 0x9e3779b97f4a7c15ULL * static_cast<std::uint64_t>(i + 1);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

struct Instance {
  ArtinWord x;
  PeriodicClass target;
};

std::vector<Instance> make_samples(const BenchConfig& cfg, bool epsilon) {
  const PeriodicClass target =
      epsilon ? PeriodicClass::epsilon(cfg.k) : PeriodicClass::delta(cfg.k);
  const ArtinWord root = representative_word(cfg.n, target);
  std::vector<Instance> out;
  for (int i = 0; i < cfg.samples; ++i) {
    ArtinWord z = random_braid(cfg.n, cfg.c, sample_seed(cfg.seed, i));
    out.push_back({to_word(normal_form_artin(inverse(z) * root * z)), target});
  }
  return out;
}

Budget instance_budget(const BenchConfig& cfg) {
  Budget b = cfg.deterministic ? Budget{} : Budget::millis(cfg.time_budget_ms);
  b.max_operations = cfg.operation_budget;
  return b;
}

InstanceStatus run_one(const BenchConfig& cfg, bool baseline, const Instance& inst) {
  try {
    if (baseline) {
      UssOptions opt{cfg.uss_element_cap, instance_budget(cfg)};
      auto target = representative_word(cfg.n, inst.target);
      auto c = uss_conjugacy_search(inst.x, target, opt);
      if (!c) return InstanceStatus::Failed;
      ConjugacyCertificate cert{inst.target, target, *c, false, {}};
      return verify_certificate(inst.x, cert) ? InstanceStatus::Ok : InstanceStatus::Failed;
    }
    auto cert = solve(inst.x, inst.target, SolverOptions{cfg.prereduce, instance_budget(cfg)});
    return cert.verified && verify_certificate(inst.x, cert) ? InstanceStatus::Ok
                                                              : InstanceStatus::Failed;
  } catch (const BudgetExceeded& e) {
    return e.timed_out() ? InstanceStatus::Timeout : InstanceStatus::Budget;
  } catch (const std::domain_error&) {
    return InstanceStatus::Failed;
  }
}

}  // namespace

ArtinWord random_braid(int n, int c, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  ArtinWord w(n);
  std::vector<int> p(n);
  for (int j = 0; j < c; ++j) {
    std::iota(p.begin(), p.end(), 0);
    for (int i = n - 1; i > 0; --i) {
      std::swap(p[i], p[uniform_below(rng, static_cast<std::uint64_t>(i) + 1)]);
    }
    w.append(PermBraid(Permutation(p)).word());
  }
  return w;
}

std::string to_string(InstanceStatus s) {
  switch (s) {
    case InstanceStatus::Ok:
      return "ok";
    case InstanceStatus::Timeout:
      return "timeout";
    case InstanceStatus::Budget:
      return "budget";
    case InstanceStatus::Failed:
      return "failed";
  }
  return "?";
}

int BenchRecord::ok() const {
  return static_cast<int>(std::count(statuses.begin(), statuses.end(), InstanceStatus::Ok));
}

int BenchRecord::missed() const {
  return static_cast<int>(std::count_if(statuses.begin(), statuses.end(), [](InstanceStatus s) {
    return s == InstanceStatus::Timeout || s == InstanceStatus::Budget;
  }));
}

std::vector<BenchRecord> bench_run(const BenchConfig& cfg) {
  if (cfg.n < 3) throw std::invalid_argument("bench needs n >= 3");
  if (cfg.samples < 1) throw std::invalid_argument("bench needs at least one sample");
  const auto delta_samples = make_samples(cfg, false);
  const auto epsilon_samples = make_samples(cfg, true);
  std::vector<BenchRecord> out;
  for (const auto& algo : cfg.algorithms) {
    const bool baseline = algo == "U-delta" || algo == "U-epsilon";
    const bool epsilon = algo == "U-epsilon" || algo == "C";
    if (!baseline && algo != "B" && algo != "C") {
      throw std::invalid_argument("unknown algorithm " + algo);
    }
    BenchRecord rec{algo, cfg.n, cfg.k, cfg.c, {}, 0};
    std::optional<InstanceStatus> abandoned;
    for (const auto& inst : epsilon ? epsilon_samples : delta_samples) {
      if (abandoned) {
        rec.statuses.push_back(*abandoned);
        continue;
      }
      const auto t0 = std::chrono::steady_clock::now();
      InstanceStatus st = run_one(cfg, baseline, inst);
      rec.total_ms +=
          std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
      rec.statuses.push_back(st);
      if (baseline && cfg.abort_baseline_on_failure &&
          (st == InstanceStatus::Timeout || st == InstanceStatus::Budget)) {
        abandoned = st;
      }
    }
    out.push_back(std::move(rec));
  }
  return out;
}

std::string bench_csv_header() { return "algo,n,k,c,samples,ok,timeout,total_ms"; }

std::string bench_csv_row(const BenchRecord& r, bool with_timing) {
  std::string row = r.algorithm + ',' + std::to_string(r.n) + ',' + std::to_string(r.k) + ',' +
                    std::to_string(r.c) + ',' + std::to_string(r.statuses.size()) + ',' +
                    std::to_string(r.ok()) + ',' + std::to_string(r.missed()) + ',';
  if (with_timing) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.3f", r.total_ms);
    row += buf;
  } else {
    row += '-';
  }
  return row;
}

}  // namespace pbraid
