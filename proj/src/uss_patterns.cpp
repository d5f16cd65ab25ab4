#include "pbraid/uss_patterns.hpp"

#include <algorithm>
#include <stdexcept>

namespace pbraid {

namespace {

// Splits a cycle listed from puncture 1 into the increasing run up to the
// largest puncture and the decreasing run after it.  1-based values.
bool split_cycle(const std::vector<int>& cyc, int top, std::vector<int>& up,
                 std::vector<int>& down) {
  auto it = std::find(cyc.begin(), cyc.end(), top);
  if (cyc.empty() || cyc.front() != 1 || it == cyc.end()) return false;
  up.assign(cyc.begin() + 1, it);
  std::vector<int> tail(it + 1, cyc.end());
  if (!std::is_sorted(up.begin(), up.end())) return false;
  if (!std::is_sorted(tail.rbegin(), tail.rend())) return false;
  down.assign(tail.rbegin(), tail.rend());
  return true;
}

// The orbit of puncture 1 (1-based values, starting at 1).
std::vector<int> orbit_of_one(const PermBraid& s) {
  std::vector<int> cyc;
  int j = 0;
  do {
    cyc.push_back(j + 1);
    j = s.image(j);
  } while (j != 0);
  return cyc;
}

std::vector<int> cycle_images(int n, const std::vector<int>& up, const std::vector<int>& down) {
  std::vector<int> cyc{1};
  cyc.insert(cyc.end(), up.begin(), up.end());
  cyc.push_back(n);
  cyc.insert(cyc.end(), down.rbegin(), down.rend());
  std::vector<int> img(n);
  for (int i = 0; i < n; ++i) img[i] = i;
  for (std::size_t k = 0; k < cyc.size(); ++k) {
    img[cyc[k] - 1] = cyc[(k + 1) % cyc.size()] - 1;
  }
  return img;
}

}  // namespace

std::optional<DeltaPattern> uss_delta_member(const PermBraid& s) {
  const int n = s.strands();
  auto cyc = orbit_of_one(s);
  if (static_cast<int>(cyc.size()) != n) return std::nullopt;
  DeltaPattern p;
  if (!split_cycle(cyc, n, p.up, p.down)) return std::nullopt;
  return p;
}

std::optional<EpsilonPattern> uss_epsilon_member(const PermBraid& s) {
  const int n = s.strands();
  if (n < 3) return std::nullopt;
  auto fixed = s.permutation().fixed_points();
  if (fixed.size() != 1) return std::nullopt;
  EpsilonPattern p;
  p.fixed = fixed.front() + 1;
  if (p.fixed == 1 || p.fixed == n) return std::nullopt;
  auto cyc = orbit_of_one(s);
  if (static_cast<int>(cyc.size()) != n - 1) return std::nullopt;
  if (!split_cycle(cyc, n, p.up, p.down)) return std::nullopt;
  return p;
}

PermBraid pattern_braid(int strands, const DeltaPattern& p) {
  return PermBraid(Permutation(cycle_images(strands, p.up, p.down)));
}

PermBraid pattern_braid(int strands, const EpsilonPattern& p) {
  return PermBraid(Permutation(cycle_images(strands, p.up, p.down)));
}

ArtinWord conjugator_alpha(int strands, const DeltaPattern& p) {
  ArtinWord w(strands);
  for (int d : p.down) w.append(sigma_run(strands, d, 1));
  return w;
}

int pattern_b(const EpsilonPattern& p) {
  // b = a + t - max{i : d_i < a}
  const int t = static_cast<int>(p.down.size());
  int below = 0;
  for (int i = 0; i < t; ++i) {
    if (p.down[i] < p.fixed) below = i + 1;
  }
  return p.fixed + t - below;
}

ArtinWord conjugator_beta(int strands, const EpsilonPattern& p) {
  DeltaPattern d{p.up, p.down};
  ArtinWord w = conjugator_alpha(strands, d);
  w.append(sigma_run(strands, pattern_b(p), 2));
  return w;
}

std::vector<PermBraid> enumerate_uss(int strands, Family family) {
  const int n = strands;
  if (n < 2 || n > 24) throw std::invalid_argument("enumerate_uss supports 2 <= n <= 24");
  std::vector<PermBraid> out;
  auto emit = [&](const std::vector<int>& middle, int fixed) {
    const std::size_t m = middle.size();
    for (unsigned long mask = 0; mask < (1UL << m); ++mask) {
      std::vector<int> up, down;
      for (std::size_t b = 0; b < m; ++b) ((mask >> b) & 1UL ? up : down).push_back(middle[b]);
      if (family == Family::Delta) {
        out.push_back(pattern_braid(n, DeltaPattern{up, down}));
      } else {
        out.push_back(pattern_braid(n, EpsilonPattern{fixed, up, down}));
      }
    }
  };
  if (family == Family::Delta) {
    std::vector<int> middle;
    for (int v = 2; v < n; ++v) middle.push_back(v);
    emit(middle, 0);
  } else {
    for (int a = 2; a < n; ++a) {
      std::vector<int> middle;
      for (int v = 2; v < n; ++v) {
        if (v != a) middle.push_back(v);
      }
      emit(middle, a);
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

long uss_size_formula(int strands, Family family) {
  const int n = strands;
  if (family == Family::Delta) return 1L << (n - 2);
  if (n < 3) return 0;
  return static_cast<long>(n - 2) << (n - 3);
}

}  // namespace pbraid
