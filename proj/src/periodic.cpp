#include "pbraid/periodic.hpp"

#include <charconv>
#include <stdexcept>

#include "pbraid/classical.hpp"

namespace pbraid {

std::string to_string(const PeriodicClass& c) {
  switch (c.kind) {
    case PeriodicClass::Kind::DeltaPower:
      return "delta^" + std::to_string(c.k);
    case PeriodicClass::Kind::EpsilonPower:
      return "epsilon^" + std::to_string(c.k);
    case PeriodicClass::Kind::NonPeriodic:
      break;
  }
  return "non-periodic";
}

PeriodicClass parse_periodic_class(std::string_view text) {
  if (text == "non-periodic") return PeriodicClass::non_periodic();
  auto caret = text.find('^');
  if (caret == std::string_view::npos) {
    throw std::invalid_argument("expected delta^k or epsilon^k, got '" + std::string(text) + "'");
  }
  auto name = text.substr(0, caret);
  auto digits = text.substr(caret + 1);
  int k = 0;
  auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), k);
  if (ec != std::errc{} || ptr != digits.data() + digits.size() || digits.empty()) {
    throw std::invalid_argument("bad exponent in '" + std::string(text) + "'");
  }
  if (name == "delta") return PeriodicClass::delta(k);
  if (name == "epsilon") return PeriodicClass::epsilon(k);
  throw std::invalid_argument("unknown family '" + std::string(name) + "'");
}

PeriodicClass classify(const ArtinWord& w) {
  const int n = w.strands();
  const long e = exponent_sum(w);
  if (e % n != 0 && e % (n - 1) != 0) return PeriodicClass::non_periodic();
  // Powers of a short conjugate are much cheaper than powers of w.
  NormalFormA x = garside::minimize_length(normal_form_artin(w)).nf;
  NormalFormA p = garside::power(x, n - 1);
  if (p.factors.empty() && p.inf % 2 == 0) return PeriodicClass::epsilon(p.inf / 2);
  p = garside::multiply(p, x);
  if (p.factors.empty() && p.inf % 2 == 0) return PeriodicClass::delta(p.inf / 2);
  return PeriodicClass::non_periodic();
}

PeriodicClass classify_by_exponent_sum(const ArtinWord& w) {
  const long n = w.strands();
  const long e = exponent_sum(w);
  if (e % n == 0) return PeriodicClass::epsilon(static_cast<int>(e / n));
  if (e % (n - 1) == 0) return PeriodicClass::delta(static_cast<int>(e / (n - 1)));
  throw std::domain_error("exponent sum " + std::to_string(e) +
                          " is not that of a periodic braid in B_" + std::to_string(n));
}

int fixed_puncture(const ArtinWord& w) {
  auto fixed = word_permutation(w).fixed_points();
  if (fixed.size() != 1) {
    throw std::domain_error("braid fixes " + std::to_string(fixed.size()) +
                            " punctures, expected exactly one");
  }
  return fixed.front() + 1;
}

ArtinWord representative_word(int strands, const PeriodicClass& c) {
  switch (c.kind) {
    case PeriodicClass::Kind::DeltaPower:
      return power(delta_word(strands), c.k);
    case PeriodicClass::Kind::EpsilonPower:
      return power(epsilon_word(strands), c.k);
    case PeriodicClass::Kind::NonPeriodic:
      break;
  }
  throw std::invalid_argument("no representative for a non-periodic class");
}

}  // namespace pbraid
