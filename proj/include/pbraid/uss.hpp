#pragma once

#include <optional>
#include <vector>

#include "pbraid/budget.hpp"
#include "pbraid/classical.hpp"

namespace pbraid {

// Generic ultra summit set machinery in the classical structure, used as the
// exponential baseline.
struct UssOptions {
  long max_elements = 1'000'000;
  Budget budget;  // operations count conjugations computed
  // Conjugacy search normally closes the whole ultra summit set of x before
  // looking y up; this stops as soon as y's representative appears.
  bool stop_at_target = false;
};

// Smallest simple s with u <= s such that s^-1 x s stays in the super summit
// set of x (x must already be a super summit element).
PermBraid minimal_summit_conjugator(const NormalFormA& x, const PermBraid& u);

// For a super summit element: does iterated cycling come back to it?
bool in_uss(const NormalFormA& super_summit);

// Iterated cycling until a repeat; the repeated element is in the ultra summit set.
struct UssLanding {
  NormalFormA nf;
  std::vector<FactorA> conjugator;  // nf = conjugator^-1 * input * conjugator
};
UssLanding land_in_uss(const NormalFormA& super_summit);

// The whole ultra summit set of w, sorted.  Throws BudgetExceeded when the
// element cap or the budget runs out.
std::vector<NormalFormA> uss_artin(const ArtinWord& w, const UssOptions& opt = {});

// Conjugacy search through the ultra summit set of x.  Returns c with
// c^-1 x c = y, or nullopt if y is not conjugate to x.
std::optional<ArtinWord> uss_conjugacy_search(const ArtinWord& x, const ArtinWord& y,
                                              const UssOptions& opt = {});

}  // namespace pbraid
