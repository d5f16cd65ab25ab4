// Acceptance gate: one PASS/FAIL line per criterion, nonzero exit on any FAIL.

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <set>
#include <sstream>
#include <string>

#include "oracles.hpp"
#include "pbraid/band.hpp"
#include "pbraid/bench.hpp"
#include "pbraid/classical.hpp"
#include "pbraid/periodic.hpp"
#include "pbraid/solver.hpp"
#include "pbraid/typeb.hpp"
#include "pbraid/uss_patterns.hpp"

using namespace pbraid;

namespace {

// Pinned parameters.
constexpr int kSuiteSamples = 100;
constexpr int kSuiteC = 10;
constexpr int kSpotSamples = 20;
constexpr long kScalingBudgetMs = 2000;
constexpr int kScalingSamples = 100;

struct Outcome {
  bool pass = true;
  std::ostringstream note;

  void expect(bool ok, const std::string& what) {
    if (!ok && pass) note << "first failure: " << what << "; ";
    pass = pass && ok;
  }
};

std::vector<PermBraid> all_simple(int n) {
  std::vector<int> p(n);
  for (int i = 0; i < n; ++i) p[i] = i;
  std::vector<PermBraid> out;
  do {
    out.emplace_back(Permutation(p));
  } while (std::next_permutation(p.begin(), p.end()));
  return out;
}

bool is_full_twist_power(const NormalFormA& nf) { return nf.factors.empty() && nf.inf % 2 == 0; }

ArtinWord conjugated(const ArtinWord& x, const ArtinWord& z) { return inverse(z) * x * z; }

// 1. USS counts and the n! oracle.
void uss_counts(Outcome& o) {
  for (int n = 3; n <= 8; ++n) {
    const long d = enumerate_uss(n, Family::Delta).size();
    const long e = enumerate_uss(n, Family::Epsilon).size();
    o.expect(d == (1L << (n - 2)), "delta count at n=" + std::to_string(n));
    o.expect(e == (n - 2) * (1L << (n - 3)), "epsilon count at n=" + std::to_string(n));
  }
  for (int n = 3; n <= 7; ++n) {
    std::vector<PermBraid> dl, ep;
    for (const auto& s : all_simple(n)) {
      NormalFormA nf{n, 0, {s}};
      if (s.is_identity() || s.is_delta()) nf = normal_form_artin(s.word());
      const NormalFormA p = garside::power(nf, n - 1);
      if (is_full_twist_power(p) && p.inf == 2) ep.push_back(s);
      const NormalFormA q = garside::power(nf, n);
      if (is_full_twist_power(q) && q.inf == 2) dl.push_back(s);
    }
    std::sort(dl.begin(), dl.end());
    std::sort(ep.begin(), ep.end());
    o.expect(enumerate_uss(n, Family::Delta) == dl, "delta oracle at n=" + std::to_string(n));
    o.expect(enumerate_uss(n, Family::Epsilon) == ep, "epsilon oracle at n=" + std::to_string(n));
  }
  o.note << "n=3..8 counts, n=3..7 against all n! simple elements";
}

// 2. alpha and beta.
void conjugator_formulas(Outcome& o) {
  long members = 0;
  for (int n = 3; n <= 8; ++n) {
    const auto delta = normal_form_artin(delta_word(n));
    const auto eps = normal_form_artin(epsilon_word(n));
    for (const auto& s : enumerate_uss(n, Family::Delta)) {
      auto pat = uss_delta_member(s);
      o.expect(pat.has_value(), "delta pattern");
      if (!pat) continue;
      const auto a = conjugator_alpha(n, *pat);
      o.expect(normal_form_artin(conjugated(s.word(), a)) == delta, "alpha at n=" + std::to_string(n));
      ++members;
    }
    for (const auto& s : enumerate_uss(n, Family::Epsilon)) {
      auto pat = uss_epsilon_member(s);
      o.expect(pat.has_value(), "epsilon pattern");
      if (!pat) continue;
      const auto b = conjugator_beta(n, *pat);
      o.expect(normal_form_artin(conjugated(s.word(), b)) == eps, "beta at n=" + std::to_string(n));
      ++members;
    }
  }
  o.note << members << " members, n=3..8";
}

// 3 and 4 share the instances.
struct SuiteStats {
  long instances = 0;
  long verified = 0;
  long classified = 0;
};

void run_instance(Outcome& o3, Outcome& o4, SuiteStats& st, const ArtinWord& root, int n, int c,
                  std::uint64_t seed) {
  const ArtinWord zx = random_braid(n, c, seed);
  const ArtinWord zy = random_braid(n, c, seed ^ 0x5bd1e995ULL);
  const ArtinWord x = to_word(normal_form_artin(conjugated(root, zx)));
  const ArtinWord y = to_word(normal_form_artin(conjugated(root, zy)));
  ++st.instances;
  const std::string tag = "n=" + std::to_string(n) + " seed=" + std::to_string(seed);
  try {
    auto cert = algorithm_d(x, y);
    const bool ok = cert && cert->verified && verify_certificate(x, *cert);
    o3.expect(ok, "unverified " + tag);
    st.verified += ok;
  } catch (const std::exception& e) {
    o3.expect(false, std::string(e.what()) + " " + tag);
  }
  const PeriodicClass a = classify(x);
  const PeriodicClass b = classify_by_exponent_sum(x);
  o4.expect(a == b, "classify disagrees with exponent sum " + tag);
  st.classified += a == b;
}

void solver_suite(Outcome& o3, Outcome& o4) {
  SuiteStats st;
  std::uint64_t seed = 1;
  for (int n = 3; n <= 10; ++n) {
    for (int k = -6; k <= 12; ++k) {
      if (k == 0) continue;
      for (const auto& root : {power(delta_word(n), k), power(epsilon_word(n), k)}) {
        for (int i = 0; i < kSuiteSamples; ++i) run_instance(o3, o4, st, root, n, kSuiteC, seed++);
      }
    }
  }
  for (int n : {15, 20, 50}) {
    for (int k = 1; k <= 3; ++k) {
      for (const auto& root : {power(delta_word(n), k), power(epsilon_word(n), k)}) {
        for (int i = 0; i < kSpotSamples; ++i) run_instance(o3, o4, st, root, n, 10, seed++);
      }
    }
  }
  o3.note << st.verified << "/" << st.instances << " verified";
  o4.note << st.classified << "/" << st.instances << " periodic instances agree";
}

void classify_random(Outcome& o4) {
  std::mt19937_64 rng(600);
  const int n = 6;
  int periodic = 0;
  for (int i = 0; i < 100; ++i) {
    const ArtinWord w = oracle::random_word(rng, n, 30);
    const auto p = normal_form_artin(power(w, n - 1));
    const auto q = normal_form_artin(power(w, n));
    PeriodicClass expect = PeriodicClass::non_periodic();
    if (is_full_twist_power(p)) {
      expect = PeriodicClass::epsilon(p.inf / 2);
    } else if (is_full_twist_power(q)) {
      expect = PeriodicClass::delta(q.inf / 2);
    }
    periodic += expect.periodic();
    o4.expect(classify(w) == expect, "random word " + to_string(w));
  }
  o4.note << ", 100 random words at n=6 (" << periodic << " periodic)";
}

// 5. Bridge round trip.
void bridge_round_trip(Outcome& o) {
  std::mt19937_64 rng(500);
  long count = 0;
  for (int n = 4; n <= 7; ++n) {
    for (int i = 0; i < 200; ++i) {
      ArtinWord w = oracle::random_word(rng, n, 5 + i % 30);
      const int at = oracle::strand_images(w)[1] + 1;
      w = w * sigma_run(n, at, 2);
      const BandWord z = artin_to_sym(w);
      o.expect(z.size() <= 2 * w.size(), "length bound " + to_string(w));
      const ArtinWord back = sym_to_artin(decompose_polygonal(z));
      o.expect(normal_form_artin(back) == normal_form_artin(w), "round trip " + to_string(w));
      o.expect(oracle::same_braid(back, w), "round trip (free action) " + to_string(w));
      ++count;
    }
  }
  o.note << count << " elements of P_{n,2}, n=4..7";
}

// 6. Homomorphisms.
void homomorphisms(Outcome& o) {
  long relations = 0;
  for (int n = 3; n <= 6; ++n) {
    // Artin relations under the inverse of phi, checked in the band structure.
    for (int i = 1; i < n; ++i) {
      for (int j = i + 1; j < n; ++j) {
        ArtinWord lhs(n), rhs(n);
        if (j == i + 1) {
          lhs = ArtinWord(n, {i, j, i});
          rhs = ArtinWord(n, {j, i, j});
        } else {
          lhs = ArtinWord(n, {i, j});
          rhs = ArtinWord(n, {j, i});
        }
        o.expect(normal_form_band(phi_inverse(lhs)) == normal_form_band(phi_inverse(rhs)),
                 "Artin relation in band structure");
        ++relations;
      }
    }
    // Band relations under phi, checked by the free group action.
    for (int t = 2; t <= n; ++t) {
      for (int s = 1; s < t; ++s) {
        for (int r = 2; r <= n; ++r) {
          for (int q = 1; q < r; ++q) {
            if ((t - r) * (t - q) * (s - r) * (s - q) <= 0) continue;
            BandWord lhs(n, {{t, s, 1}, {r, q, 1}}), rhs(n, {{r, q, 1}, {t, s, 1}});
            o.expect(oracle::same_braid(phi(lhs), phi(rhs)), "band commutation");
            ++relations;
          }
        }
        for (int r = 1; r < s; ++r) {
          BandWord a(n, {{t, s, 1}, {s, r, 1}}), b(n, {{t, r, 1}, {t, s, 1}}),
              c(n, {{s, r, 1}, {t, r, 1}});
          o.expect(oracle::same_braid(phi(a), phi(b)) && oracle::same_braid(phi(b), phi(c)),
                   "band triangle relation");
          ++relations;
        }
      }
    }
    // Type B relations under rho and theta'.
    const int rk = n - 1;
    std::vector<std::pair<TypeBWord, TypeBWord>> rels;
    if (rk >= 2) rels.push_back({TypeBWord(rk, {1, 2, 1, 2}), TypeBWord(rk, {2, 1, 2, 1})});
    for (int i = 2; i < rk; ++i) {
      rels.push_back({TypeBWord(rk, {i, i + 1, i}), TypeBWord(rk, {i + 1, i, i + 1})});
    }
    for (int i = 1; i <= rk; ++i) {
      for (int j = i + 2; j <= rk; ++j) rels.push_back({TypeBWord(rk, {i, j}), TypeBWord(rk, {j, i})});
    }
    for (const auto& [lhs, rhs] : rels) {
      o.expect(oracle::same_braid(rho_apply(lhs), rho_apply(rhs)), "type B relation under rho");
      o.expect(oracle::same_braid(phi(theta_prime_apply(lhs)), phi(theta_prime_apply(rhs))),
               "type B relation under theta'");
      relations += 2;
    }
  }
  o.note << relations << " relation checks, n=3..6";
}

// 8. Invariants.
std::vector<int> descents(const std::vector<int>& img) {
  std::vector<int> out;
  for (std::size_t i = 0; i + 1 < img.size(); ++i) {
    if (img[i] > img[i + 1]) out.push_back(static_cast<int>(i));
  }
  return out;
}

bool classical_left_weighted(const NormalFormA& nf) {
  for (std::size_t i = 0; i + 1 < nf.factors.size(); ++i) {
    const auto a = oracle::strand_images(nf.factors[i].word());
    const auto b = oracle::strand_images(nf.factors[i + 1].word());
    std::vector<int> ainv(a.size());
    for (std::size_t j = 0; j < a.size(); ++j) ainv[a[j]] = static_cast<int>(j);
    const auto start = descents(b);
    const auto finish = descents(ainv);
    if (!std::includes(finish.begin(), finish.end(), start.begin(), start.end())) return false;
  }
  return true;
}

bool blocks_non_crossing(const std::vector<std::vector<int>>& blocks) {
  for (std::size_t i = 0; i < blocks.size(); ++i) {
    for (std::size_t j = 0; j < blocks.size(); ++j) {
      if (i == j) continue;
      for (int a1 : blocks[i]) {
        for (int a2 : blocks[i]) {
          for (int b1 : blocks[j]) {
            for (int b2 : blocks[j]) {
              if (a1 < b1 && b1 < a2 && a2 < b2) return false;
            }
          }
        }
      }
    }
  }
  return true;
}

std::vector<std::vector<std::vector<int>>> set_partitions(int m) {
  std::vector<std::vector<std::vector<int>>> out;
  std::vector<std::vector<int>> cur;
  std::function<void(int)> rec = [&](int v) {
    if (v > m) {
      out.push_back(cur);
      return;
    }
    for (std::size_t b = 0; b < cur.size(); ++b) {
      cur[b].push_back(v);
      rec(v + 1);
      cur[b].pop_back();
    }
    cur.push_back({v});
    rec(v + 1);
    cur.pop_back();
  };
  rec(1);
  return out;
}

// No band generator g with g a prefix of b and a g simple; prefixes and
// simplicity are decided on free group images of all simple elements.
bool band_left_weighted(const NormalFormB& nf, const std::set<oracle::FreeAction>& simple_images) {
  const int m = nf.strands;
  auto word = [m](const NonCrossingPartition& p) { return phi(to_band_word({FactorB{p, false}}, m)); };
  for (std::size_t i = 0; i + 1 < nf.factors.size(); ++i) {
    const ArtinWord a = word(nf.factors[i]);
    const ArtinWord b = word(nf.factors[i + 1]);
    for (int t = 2; t <= m; ++t) {
      for (int s = 1; s < t; ++s) {
        const ArtinWord g = phi(BandWord(m, {{t, s, 1}}));
        if (simple_images.count(oracle::act(inverse(g) * b)) &&
            simple_images.count(oracle::act(a * g))) {
          return false;
        }
      }
    }
  }
  return true;
}

void invariants(Outcome& o) {
  std::mt19937_64 rng(800);
  long forms = 0;
  for (int n = 3; n <= 9; ++n) {
    for (int i = 0; i < 60; ++i) {
      const auto nf = normal_form_artin(oracle::random_word(rng, n, 10 + i));
      o.expect(classical_left_weighted(nf), "classical left weighting");
      ++forms;
    }
  }
  for (int m = 3; m <= 6; ++m) {
    std::set<oracle::FreeAction> simple_images;
    for (const auto& blocks : set_partitions(m)) {
      if (!blocks_non_crossing(blocks)) continue;
      NonCrossingPartition p(m, blocks);
      simple_images.insert(oracle::act(phi(to_band_word({FactorB{p, false}}, m))));
    }
    for (int i = 0; i < 60; ++i) {
      BandWord w(m);
      std::uniform_int_distribution<int> pt(1, m);
      std::bernoulli_distribution sign(0.5);
      for (int l = 0; l < 8 + i % 12; ++l) {
        int t = pt(rng), s = pt(rng);
        while (s == t) s = pt(rng);
        w.push_back({std::max(t, s), std::min(t, s), sign(rng) ? 1 : -1});
      }
      const auto nf = normal_form_band(w);
      for (const auto& f : nf.factors) o.expect(blocks_non_crossing(f.blocks()), "non-crossing factor");
      o.expect(band_left_weighted(nf, simple_images), "band left weighting");
      ++forms;
    }
  }
  long periodic = 0;
  for (int n = 3; n <= 12; ++n) {
    for (int k = -6; k <= 12; ++k) {
      if (k == 0) continue;
      for (const auto& root : {power(delta_word(n), k), power(epsilon_word(n), k)}) {
        const ArtinWord z = random_braid(n, 3, static_cast<std::uint64_t>(n * 100 + k + 50));
        const ArtinWord x = free_reduce(conjugated(root, z));
        const ArtinWord nfw = to_word(normal_form_artin(x));
        o.expect(exponent_sum(x) == exponent_sum(root), "exponent sum invariance");
        o.expect(static_cast<int>(x.size()) >= n - 1 && static_cast<int>(nfw.size()) >= n - 1,
                 "length lower bound");
        ++periodic;
      }
    }
  }
  o.note << forms << " normal forms, " << periodic << " periodic words";
}

// 7. Scaling contrast.
void scaling(Outcome& o) {
  BenchConfig base;
  base.k = 1;
  base.c = 10;
  base.samples = kScalingSamples;
  base.time_budget_ms = kScalingBudgetMs;
  BenchConfig fast = base;
  fast.n = 50;
  fast.algorithms = {"B", "C"};
  for (const auto& r : bench_run(fast)) {
    o.expect(r.ok() == kScalingSamples, r.algorithm + " incomplete at n=50");
    o.note << r.algorithm << "@50 " << r.ok() << "/" << kScalingSamples << " ok; ";
  }
  BenchConfig slow = base;
  slow.n = 15;
  slow.algorithms = {"U-delta"};
  const auto u = bench_run(slow).front();
  o.expect(u.missed() > 0, "baseline finished within budget at n=15");
  o.note << "U-delta@15 " << u.ok() << "/" << kScalingSamples
         << " ok, rest abandoned after the first miss; budget " << kScalingBudgetMs
         << " ms per instance";
}

void report(int id, const std::string& name, const std::function<void(Outcome&)>& body, bool& all) {
  Outcome o;
  const auto t0 = std::chrono::steady_clock::now();
  try {
    body(o);
  } catch (const std::exception& e) {
    o.expect(false, std::string("exception: ") + e.what());
  }
  const double s = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  std::printf("criterion %d %s: %s (%s) [%.1fs]\n", id, name.c_str(), o.pass ? "PASS" : "FAIL",
              o.note.str().c_str(), s);
  std::fflush(stdout);
  all = all && o.pass;
}

}  // namespace

int main() {
  bool all = true;
  report(1, "uss-counts", uss_counts, all);
  report(2, "conjugator-formulas", conjugator_formulas, all);
  Outcome o3, o4;
  const auto t0 = std::chrono::steady_clock::now();
  try {
    solver_suite(o3, o4);
    classify_random(o4);
  } catch (const std::exception& e) {
    o3.expect(false, std::string("exception: ") + e.what());
  }
  const double s = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  std::printf("criterion 3 end-to-end-solver: %s (%s) [%.1fs]\n", o3.pass ? "PASS" : "FAIL",
              o3.note.str().c_str(), s);
  std::printf("criterion 4 classification: %s (%s)\n", o4.pass ? "PASS" : "FAIL",
              o4.note.str().c_str());
  all = all && o3.pass && o4.pass;
  report(5, "bridge-round-trip", bridge_round_trip, all);
  report(6, "homomorphisms", homomorphisms, all);
  report(7, "scaling-contrast", scaling, all);
  report(8, "invariants", invariants, all);
  return all ? 0 : 1;
}
