#include "pbraid/solver.hpp"

#include <stdexcept>

#include "pbraid/band.hpp"
#include "pbraid/classical.hpp"
#include "pbraid/typeb.hpp"

namespace pbraid {

namespace {

int floor_half(int v) { return v >= 0 ? v / 2 : -((1 - v) / 2); }

struct Prereduced {
  ArtinWord conjugator;
  ArtinWord word;     // conjugator^-1 x conjugator with Delta^(2 twists) removed
  int twists = 0;
  long operations = 0;
};

Prereduced prereduce(const ArtinWord& x, const SolverOptions& opt) {
  const int n = x.strands();
  if (!opt.prereduce) return {ArtinWord(n), x, 0, 0};
  auto red = garside::minimize_length(normal_form_artin(x), opt.budget);
  const int q = floor_half(red.nf.inf);
  NormalFormA rest = red.nf;
  rest.inf -= 2 * q;
  return {to_word(red.conjugator, n), to_word(rest), q, red.operations};
}

ConjugacyCertificate finish(const ArtinWord& x, PeriodicClass target, ArtinWord conjugator,
                            SolverStats stats) {
  ConjugacyCertificate cert{target, representative_word(x.strands(), target),
                            free_reduce(conjugator), false, stats};
  cert.verified = verify_certificate(x, cert);
  return cert;
}

}  // namespace

ConjugacyCertificate algorithm_b(const ArtinWord& x, int k, const SolverOptions& opt) {
  const int n = x.strands();
  SolverStats stats;
  Prereduced pre = prereduce(x, opt);
  stats.prereduce_operations = pre.operations;
  const int kk = k - pre.twists * n;
  BandWord y = phi_inverse(pre.word);
  stats.band_word_length = static_cast<long>(y.size());
  stats.band_points = n;
  auto red = garside::reach_power(normal_form_band(y), kk, opt.budget);
  stats.summit_operations = red.operations;
  ArtinWord c = pre.conjugator * phi(to_band_word(red.conjugator, n));
  return finish(x, PeriodicClass::delta(k), std::move(c), stats);
}

ConjugacyCertificate algorithm_c(const ArtinWord& x, int k, const SolverOptions& opt) {
  const int n = x.strands();
  SolverStats stats;
  if (k % (n - 1) == 0) return finish(x, PeriodicClass::epsilon(k), ArtinWord(n), stats);
  Prereduced pre = prereduce(x, opt);
  stats.prereduce_operations = pre.operations;
  const int kk = k - pre.twists * (n - 1);
  // move the fixed puncture to position 2, then work in P_{n,2}
  ArtinWord lift = sigma_run(n, fixed_puncture(pre.word), 2);
  ArtinWord y = inverse(lift) * pre.word * lift;
  BandWord z = artin_to_sym(y);
  stats.band_word_length = static_cast<long>(z.size());
  stats.band_points = 2 * n - 2;
  auto red = garside::reach_power(normal_form_band(z), kk, opt.budget);
  stats.summit_operations = red.operations;
  ArtinWord c = pre.conjugator * lift;
  for (const auto& f : red.conjugator) c.append(sym_simple_to_artin(f.simple, f.inverted));
  return finish(x, PeriodicClass::epsilon(k), std::move(c), stats);
}

ConjugacyCertificate solve(const ArtinWord& x, const PeriodicClass& target,
                           const SolverOptions& opt) {
  switch (target.kind) {
    case PeriodicClass::Kind::DeltaPower:
      return algorithm_b(x, target.k, opt);
    case PeriodicClass::Kind::EpsilonPower:
      return algorithm_c(x, target.k, opt);
    case PeriodicClass::Kind::NonPeriodic:
      break;
  }
  throw std::invalid_argument("target must be a power of delta or epsilon");
}

std::optional<ConjugacyCertificate> algorithm_d(const ArtinWord& x, const ArtinWord& y,
                                                const SolverOptions& opt) {
  if (x.strands() != y.strands()) throw std::invalid_argument("strand count mismatch");
  PeriodicClass cx = classify(x);
  if (!cx.periodic() || classify(y) != cx) return std::nullopt;
  ConjugacyCertificate a = solve(x, cx, opt);
  ConjugacyCertificate b = solve(y, cx, opt);
  ConjugacyCertificate cert{cx, y, free_reduce(a.conjugator * inverse(b.conjugator)), false,
                            a.stats};
  cert.verified = a.verified && b.verified && verify_certificate(x, cert);
  return cert;
}

bool verify_certificate(const ArtinWord& x, const ConjugacyCertificate& cert) {
  return normal_form_artin(inverse(cert.conjugator) * x * cert.conjugator) ==
         normal_form_artin(cert.target_word);
}

}  // namespace pbraid
