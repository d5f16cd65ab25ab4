// pbraid: conjugacy of periodic braids from the command line.

#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "pbraid/bench.hpp"
#include "pbraid/classical.hpp"
#include "pbraid/permutation.hpp"
#include "pbraid/solver.hpp"
#include "pbraid/uss.hpp"
#include "pbraid/uss_patterns.hpp"

using namespace pbraid;

namespace {

constexpr int kOk = 0;
constexpr int kFail = 1;
constexpr int kUsage = 2;
constexpr int kUnverified = 3;

struct Common {
  int n = 0;
  long budget_ms = -1;
  long budget_ops = -1;
  bool no_prereduce = false;

  SolverOptions options() const {
    SolverOptions opt{!no_prereduce, budget_ms >= 0 ? Budget::millis(budget_ms) : Budget{}};
    opt.budget.max_operations = budget_ops;
    return opt;
  }
};

void add_budget(CLI::App* cmd, Common& c) {
  cmd->add_option("--budget-ms", c.budget_ms, "wall-clock budget");
  cmd->add_option("--budget-ops", c.budget_ops, "cycling/decycling budget");
  cmd->add_flag("--no-prereduce", c.no_prereduce, "skip the minimal-length pre-reduction");
}

void print_certificate(const ConjugacyCertificate& cert, bool stats) {
  std::cout << to_string(cert.conjugator) << '\n';
  if (stats) {
    std::cerr << "length " << cert.conjugator.size() << ", prereduce ops "
              << cert.stats.prereduce_operations << ", summit ops " << cert.stats.summit_operations
              << ", band word " << cert.stats.band_word_length << " on "
              << cert.stats.band_points << " points\n";
  }
  std::cout << (cert.verified ? "VERIFIED" : "UNVERIFIED") << '\n';
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Conjugacy search for periodic braids"};
  app.set_config("--config", "", "key=value file; command line flags take precedence");
  app.require_subcommand(1);

  Common common;
  std::string word, word2, target, family;
  bool stats = false, list = false, closure = false, no_header = false;

  auto* cls = app.add_subcommand("classify", "periodic class of a braid");
  cls->add_option("--n", common.n, "strand count")->required()->check(CLI::Range(2, 1000));
  cls->add_option("--word,word", word, "Artin word, e.g. '1 -2 3'")->required();

  auto* sol = app.add_subcommand("solve", "conjugator to delta^k or epsilon^k");
  sol->add_option("--n", common.n, "strand count")->required()->check(CLI::Range(2, 1000));
  sol->add_option("--target", target, "delta^k or epsilon^k")->required();
  sol->add_option("--word,word", word, "Artin word")->required();
  sol->add_flag("--stats", stats, "print solver statistics to stderr");
  add_budget(sol, common);

  auto* con = app.add_subcommand("conjugate", "conjugator between two periodic braids");
  con->add_option("--n", common.n, "strand count")->required()->check(CLI::Range(2, 1000));
  con->add_option("wx", word, "first Artin word")->required();
  con->add_option("wy", word2, "second Artin word")->required();
  con->add_flag("--stats", stats, "print solver statistics to stderr");
  add_budget(con, common);

  auto* uss = app.add_subcommand("uss-count", "size of USS(delta) or USS(epsilon)");
  uss->add_option("n", common.n, "strand count")->required()->check(CLI::Range(3, 24));
  uss->add_option("family", family, "delta or epsilon")
      ->required()
      ->check(CLI::IsMember({"delta", "epsilon"}));
  uss->add_flag("--list", list, "print every member in one-line notation");
  uss->add_flag("--closure", closure, "compute by orbit closure instead of the patterns");

  BenchConfig bc;
  std::string algos = "U-delta,U-epsilon,B,C";
  auto* ben = app.add_subcommand("bench", "timing table on random conjugates, CSV on stdout");
  ben->add_option("--n", bc.n, "strand count")->check(CLI::Range(3, 1000));
  ben->add_option("--k", bc.k, "power of delta / epsilon");
  ben->add_option("--c", bc.c, "simple factors per random conjugator")->check(CLI::NonNegativeNumber);
  ben->add_option("--samples", bc.samples, "instances per algorithm")->check(CLI::PositiveNumber);
  ben->add_option("--seed", bc.seed, "random seed");
  ben->add_option("--time-budget-ms", bc.time_budget_ms, "per-instance wall-clock budget");
  ben->add_option("--op-budget", bc.operation_budget, "per-instance operation budget");
  ben->add_option("--uss-cap", bc.uss_element_cap, "ultra summit set element cap");
  ben->add_option("--algos", algos, "comma separated subset of U-delta,U-epsilon,B,C");
  ben->add_flag("--deterministic", bc.deterministic, "no wall clock: byte-identical output");
  ben->add_flag("--no-prereduce", common.no_prereduce, "skip the pre-reduction in B and C");
  ben->add_flag("--no-header", no_header, "omit the CSV header row");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kUsage;
  }

  try {
    if (*cls) {
      std::cout << to_string(classify(parse_artin_word(common.n, word))) << '\n';
      return kOk;
    }
    if (*sol) {
      ArtinWord x = parse_artin_word(common.n, word);
      PeriodicClass t = parse_periodic_class(target);
      std::optional<ConjugacyCertificate> cert;
      try {
        cert = solve(x, t, common.options());
      } catch (const std::domain_error&) {
        std::cout << "FAIL\n";
        return kFail;
      }
      print_certificate(*cert, stats);
      return cert->verified ? kOk : kUnverified;
    }
    if (*con) {
      auto cert = algorithm_d(parse_artin_word(common.n, word), parse_artin_word(common.n, word2),
                              common.options());
      if (!cert) {
        std::cout << "FAIL\n";
        return kFail;
      }
      print_certificate(*cert, stats);
      return cert->verified ? kOk : kUnverified;
    }
    if (*uss) {
      const Family fam = family == "delta" ? Family::Delta : Family::Epsilon;
      std::vector<PermBraid> members;
      if (closure) {
        auto root = fam == Family::Delta ? delta_word(common.n) : epsilon_word(common.n);
        for (const auto& nf : uss_artin(root)) {
          members.push_back(nf.factors.empty() ? PermBraid::delta(common.n) : nf.factors.front());
        }
      } else {
        members = enumerate_uss(common.n, fam);
      }
      std::cout << members.size() << '\n';
      if (list) {
        for (const auto& s : members) std::cout << to_string(s.permutation()) << '\n';
      }
      return kOk;
    }
    if (*ben) {
      bc.prereduce = !common.no_prereduce;
      bc.algorithms.clear();
      for (auto& a : CLI::detail::split(algos, ',')) bc.algorithms.push_back(CLI::detail::trim_copy(a));
      auto records = bench_run(bc);
      if (!no_header) std::cout << bench_csv_header() << '\n';
      bool all_verified = true;
      for (const auto& r : records) {
        std::cout << bench_csv_row(r, !bc.deterministic) << '\n';
        for (auto s : r.statuses) all_verified = all_verified && s != InstanceStatus::Failed;
      }
      return all_verified ? kOk : kUnverified;
    }
  } catch (const BudgetExceeded& e) {
    std::cerr << e.what() << '\n';
    return kFail;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsage;
  }
  return kUsage;
}
