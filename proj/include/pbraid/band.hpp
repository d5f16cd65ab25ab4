#pragma once

#include <compare>
#include <string>
#include <vector>

#include "pbraid/budget.hpp"
#include "pbraid/garside.hpp"
#include "pbraid/permutation.hpp"
#include "pbraid/word.hpp"

namespace pbraid {

// Simple element of the band structure.  A block {i_1<...<i_k} stands for the
// polygonal braid a_{i_k,i_{k-1}}...a_{i_2,i_1}; its permutation sends each
// vertex to the next larger one in the block and the largest back to the
// smallest.  Stored as that permutation, 0-based.
class NonCrossingPartition {
 public:
  NonCrossingPartition() = default;
  // Blocks are 1-based; singletons may be omitted.
  NonCrossingPartition(int points, const std::vector<std::vector<int>>& blocks);

  static NonCrossingPartition identity(int n);
  static NonCrossingPartition delta(int n);
  static long delta_length(int n) { return n - 1; }
  static NonCrossingPartition letter(int n, int t, int s);
  // Trusts that p is the permutation of a simple element.
  static NonCrossingPartition from_permutation(std::vector<int> next);

  int strands() const { return static_cast<int>(next_.size()); }
  int next(int i) const { return next_[i]; }
  const std::vector<int>& permutation() const { return next_; }

  // 1-based blocks of size >= 2, sorted by minimum.
  std::vector<std::vector<int>> blocks() const;
  // Label of each point's block (its minimum), 0-based.
  std::vector<int> block_labels() const;

  bool is_identity() const;
  bool is_delta() const;
  long length() const;  // number of band letters

  NonCrossingPartition tau(int k) const;  // delta^-k x delta^k: indices shift by +k
  NonCrossingPartition right_complement() const;

  BandWord word() const;

  friend bool make_left_weighted(NonCrossingPartition& a, NonCrossingPartition& b);
  friend bool operator==(const NonCrossingPartition&, const NonCrossingPartition&) = default;
  friend auto operator<=>(const NonCrossingPartition&, const NonCrossingPartition&) = default;

 private:
  std::vector<int> next_;
};

bool is_non_crossing(int points, const std::vector<std::vector<int>>& blocks);
NonCrossingPartition ncp_meet(const NonCrossingPartition& a, const NonCrossingPartition& b);
bool refines(const NonCrossingPartition& a, const NonCrossingPartition& b);  // a is a prefix of b
std::string to_string(const NonCrossingPartition& p);

using NormalFormB = NormalForm<NonCrossingPartition>;
using FactorB = Factor<NonCrossingPartition>;

NormalFormB normal_form_band(const BandWord& w);
BandWord to_word(const NormalFormB& nf);
BandWord to_band_word(const std::vector<FactorB>& conjugator, int strands);
std::string to_string(const NormalFormB& nf);

// Conjugation by delta.
BandWord tau_band(const BandWord& w);

struct ConjugationB {
  NormalFormB result;
  BandWord conjugator;
};

ConjugationB cycling_band(const NormalFormB& nf);
ConjugationB decycling_band(const NormalFormB& nf);

// a_{t,s} -> (sigma_{t-1}..sigma_{s+1}) sigma_s (sigma_{s+1}^-1..sigma_{t-1}^-1).
ArtinWord phi(const BandWord& w);
// sigma_i -> a_{i+1,i}.
BandWord phi_inverse(const ArtinWord& w);
inline ArtinWord phi_translate(const BandWord& w) { return phi(w); }
inline NonCrossingPartition band_delta(int m) { return NonCrossingPartition::delta(m); }

}  // namespace pbraid
