#pragma once

#include <string>
#include <string_view>

#include "pbraid/word.hpp"

namespace pbraid {

struct PeriodicClass {
  enum class Kind { NonPeriodic, DeltaPower, EpsilonPower };
  Kind kind = Kind::NonPeriodic;
  int k = 0;

  static PeriodicClass non_periodic() { return {Kind::NonPeriodic, 0}; }
  static PeriodicClass delta(int k) { return {Kind::DeltaPower, k}; }
  static PeriodicClass epsilon(int k) { return {Kind::EpsilonPower, k}; }
  bool periodic() const { return kind != Kind::NonPeriodic; }

  friend bool operator==(const PeriodicClass&, const PeriodicClass&) = default;
};

std::string to_string(const PeriodicClass& c);
// Accepts "delta^k", "epsilon^k" and "non-periodic".
PeriodicClass parse_periodic_class(std::string_view text);

// X periodic iff X^(n-1) or X^n is a power of the full twist squared.
PeriodicClass classify(const ArtinWord& w);
// Shortcut for inputs already known to be periodic.
PeriodicClass classify_by_exponent_sum(const ArtinWord& w);

// The one puncture fixed by the induced permutation, 1-based.
int fixed_puncture(const ArtinWord& w);

// delta^k or epsilon^k as a word in B_n.
ArtinWord representative_word(int strands, const PeriodicClass& c);

}  // namespace pbraid
