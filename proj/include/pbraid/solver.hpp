#pragma once

#include <optional>

#include "pbraid/budget.hpp"
#include "pbraid/periodic.hpp"
#include "pbraid/word.hpp"

namespace pbraid {

struct SolverOptions {
  // Replace the input by a minimal canonical length conjugate with the
  // central part removed before translating it.
  bool prereduce = true;
  Budget budget;
};

struct SolverStats {
  long prereduce_operations = 0;
  long summit_operations = 0;  // cyclings and decyclings in the band structure
  long band_word_length = 0;   // length of the word handed to the band structure
  int band_points = 0;
};

struct ConjugacyCertificate {
  PeriodicClass target;
  ArtinWord target_word;
  ArtinWord conjugator;  // conjugator^-1 * x * conjugator = target_word
  bool verified = false;
  SolverStats stats;
};

// x must be conjugate to delta^k; throws std::domain_error otherwise.
ConjugacyCertificate algorithm_b(const ArtinWord& x, int k, const SolverOptions& opt = {});
// x must be conjugate to epsilon^k; throws std::domain_error otherwise.
ConjugacyCertificate algorithm_c(const ArtinWord& x, int k, const SolverOptions& opt = {});
// Dispatches to B or C.
ConjugacyCertificate solve(const ArtinWord& x, const PeriodicClass& target,
                           const SolverOptions& opt = {});
// Conjugator from x to y when both are periodic and conjugate; nullopt otherwise.
std::optional<ConjugacyCertificate> algorithm_d(const ArtinWord& x, const ArtinWord& y,
                                                const SolverOptions& opt = {});

bool verify_certificate(const ArtinWord& x, const ConjugacyCertificate& cert);

}  // namespace pbraid
