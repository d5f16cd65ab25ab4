#pragma once

#include <optional>
#include <vector>

#include "pbraid/classical.hpp"
#include "pbraid/word.hpp"

namespace pbraid {

enum class Family { Delta, Epsilon };

// Simple elements whose permutation is the cycle (1 u_1 .. u_r n d_t .. d_1)
// with u increasing and d_1 < .. < d_t.  Values are 1-based.
struct DeltaPattern {
  std::vector<int> up;
  std::vector<int> down;  // d_1 < .. < d_t
  friend bool operator==(const DeltaPattern&, const DeltaPattern&) = default;
};

// Same shape on the punctures other than the fixed one.
struct EpsilonPattern {
  int fixed = 0;
  std::vector<int> up;
  std::vector<int> down;
  friend bool operator==(const EpsilonPattern&, const EpsilonPattern&) = default;
};

std::optional<DeltaPattern> uss_delta_member(const PermBraid& s);
std::optional<EpsilonPattern> uss_epsilon_member(const PermBraid& s);

PermBraid pattern_braid(int strands, const DeltaPattern& p);
PermBraid pattern_braid(int strands, const EpsilonPattern& p);

// alpha^-1 s alpha = delta and beta^-1 s beta = epsilon.
ArtinWord conjugator_alpha(int strands, const DeltaPattern& p);
int pattern_b(const EpsilonPattern& p);
ArtinWord conjugator_beta(int strands, const EpsilonPattern& p);

std::vector<PermBraid> enumerate_uss(int strands, Family family);
long uss_size_formula(int strands, Family family);

}  // namespace pbraid
