#pragma once

#include <compare>
#include <string>
#include <vector>

#include "pbraid/budget.hpp"
#include "pbraid/garside.hpp"
#include "pbraid/permutation.hpp"
#include "pbraid/word.hpp"

namespace pbraid {

// Positive braid in which any two strands cross at most once.  Strands i < j
// cross iff perm(i) > perm(j).
class PermBraid {
 public:
  PermBraid() = default;
  explicit PermBraid(const Permutation& p);

  static PermBraid identity(int n);
  static PermBraid delta(int n);
  static long delta_length(int n) { return static_cast<long>(n) * (n - 1) / 2; }
  static PermBraid atom(int n, int i);  // sigma_i, 1-based

  int strands() const { return static_cast<int>(fwd_.size()); }
  Permutation permutation() const { return Permutation(fwd_); }
  int image(int i) const { return fwd_[i]; }

  bool is_identity() const;
  bool is_delta() const;
  long length() const;  // number of crossings

  PermBraid tau(int k) const;
  PermBraid right_complement() const;

  // 0-based sigma_{i+1} tests.
  bool starts_with(int i) const { return fwd_[i] > fwd_[i + 1]; }
  bool ends_with(int i) const { return inv_[i] > inv_[i + 1]; }
  // this <- this * sigma_{i+1}; caller guarantees !ends_with(i).
  void append_atom(int i);
  // this <- sigma_{i+1} * this (!starts_with(i)) or sigma_{i+1}^-1 * this (starts_with(i)).
  void toggle_front_atom(int i);

  ArtinWord word() const;

  friend bool make_left_weighted(PermBraid& a, PermBraid& b);
  friend bool operator==(const PermBraid& a, const PermBraid& b) { return a.fwd_ == b.fwd_; }
  friend auto operator<=>(const PermBraid& a, const PermBraid& b) { return a.fwd_ <=> b.fwd_; }

 private:
  std::vector<int> fwd_;
  std::vector<int> inv_;
};

// Prefix order and lattice operations on permutation braids.
bool is_prefix(const PermBraid& a, const PermBraid& b);
PermBraid join(const PermBraid& a, const PermBraid& b);
PermBraid left_complement_of_join(const PermBraid& a, const PermBraid& b);  // a^-1 (a v b)
PermBraid product_if_simple(const PermBraid& a, const PermBraid& b);         // throws if not simple

using NormalFormA = NormalForm<PermBraid>;
using FactorA = Factor<PermBraid>;

inline PermBraid half_twist(int n) { return PermBraid::delta(n); }
inline PermBraid tau_artin(const PermBraid& x) { return x.tau(1); }

NormalFormA normal_form_artin(const ArtinWord& w);
ArtinWord to_word(const NormalFormA& nf);
ArtinWord to_word(const std::vector<FactorA>& conjugator, int strands);
std::string to_string(const NormalFormA& nf);

// Delta^-1 x Delta.
ArtinWord tau(const ArtinWord& w);

struct ConjugationA {
  NormalFormA result;
  ArtinWord conjugator;  // result = conjugator^-1 * input * conjugator
};

ConjugationA cycling(const NormalFormA& nf);
ConjugationA decycling(const NormalFormA& nf);
inline ConjugationA cycling_artin(const NormalFormA& nf) { return cycling(nf); }
inline ConjugationA decycling_artin(const NormalFormA& nf) { return decycling(nf); }
ConjugationA min_length_representative(const ArtinWord& w, const Budget& budget = {});

bool equivalent(const ArtinWord& a, const ArtinWord& b);

}  // namespace pbraid
