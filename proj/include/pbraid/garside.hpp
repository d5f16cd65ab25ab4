#pragma once

// Left normal forms, cycling and decycling over any Garside structure whose
// simple elements model GarsideSimple.  The classical (permutation braid) and
// band (non-crossing partition) structures both plug in here.

#include <concepts>
#include <optional>
#include <stdexcept>
#include <utility>
#include <vector>

#include "pbraid/budget.hpp"

namespace pbraid {

template <class S>
concept GarsideSimple = requires(const S& s, S& m, int k) {
  { S::identity(k) } -> std::same_as<S>;
  { S::delta(k) } -> std::same_as<S>;
  { S::delta_length(k) } -> std::convertible_to<long>;
  { s.strands() } -> std::convertible_to<int>;
  { s.is_identity() } -> std::same_as<bool>;
  { s.is_delta() } -> std::same_as<bool>;
  { s.tau(k) } -> std::same_as<S>;              // Delta^-k s Delta^k
  { s.right_complement() } -> std::same_as<S>;  // s^-1 Delta
  { make_left_weighted(m, m) } -> std::same_as<bool>;
};

// A simple element or the inverse of one.
template <class S>
struct Factor {
  S simple;
  bool inverted = false;
  friend bool operator==(const Factor&, const Factor&) = default;
};

// Delta^inf x_1 ... x_r with each (x_i, x_{i+1}) left-weighted and every x_i
// strictly between the identity and Delta.
template <class S>
struct NormalForm {
  int strands = 2;
  int inf = 0;
  std::vector<S> factors;

  int canonical_length() const { return static_cast<int>(factors.size()); }
  int sup() const { return inf + canonical_length(); }

  friend bool operator==(const NormalForm&, const NormalForm&) = default;
  friend auto operator<=>(const NormalForm&, const NormalForm&) = default;
};

namespace garside {

template <GarsideSimple S>
void apply_tau(std::vector<S>& factors, int k) {
  if (k == 0) return;
  for (auto& f : factors) f = f.tau(k);
}

template <GarsideSimple S>
void trim(NormalForm<S>& nf) {
  std::size_t lead = 0;
  while (lead < nf.factors.size() && nf.factors[lead].is_delta()) ++lead;
  if (lead > 0) {
    nf.inf += static_cast<int>(lead);
    nf.factors.erase(nf.factors.begin(), nf.factors.begin() + static_cast<long>(lead));
  }
  while (!nf.factors.empty() && nf.factors.back().is_identity()) nf.factors.pop_back();
}

// nf <- nf * s, one right-to-left sweep.
template <GarsideSimple S>
void append_simple(NormalForm<S>& nf, S s) {
  if (s.is_identity()) return;
  if (s.is_delta()) {
    ++nf.inf;
    apply_tau(nf.factors, 1);
    return;
  }
  nf.factors.push_back(std::move(s));
  for (auto j = static_cast<long>(nf.factors.size()) - 2; j >= 0; --j) {
    if (!make_left_weighted(nf.factors[j], nf.factors[j + 1])) break;
  }
  trim(nf);
}

// nf <- s * nf, one left-to-right sweep.
template <GarsideSimple S>
void prepend_simple(NormalForm<S>& nf, const S& s) {
  if (s.is_identity()) return;
  if (s.is_delta()) {
    ++nf.inf;
    return;
  }
  nf.factors.insert(nf.factors.begin(), s.tau(nf.inf));
  for (std::size_t j = 0; j + 1 < nf.factors.size(); ++j) {
    if (!make_left_weighted(nf.factors[j], nf.factors[j + 1])) break;
  }
  trim(nf);
}

// nf <- nf * s^-1 using s^-1 = (s^-1 Delta) Delta^-1.
template <GarsideSimple S>
void append_inverse(NormalForm<S>& nf, const S& s) {
  append_simple(nf, s.right_complement());
  --nf.inf;
  apply_tau(nf.factors, -1);
}

// nf <- s^-1 * nf using s^-1 = Delta^-1 tau^-1(s^-1 Delta).
template <GarsideSimple S>
void prepend_inverse(NormalForm<S>& nf, const S& s) {
  S moved = s.tau(nf.inf);  // s^-1 Delta^p = Delta^p tau^p(s)^-1
  S part = moved.right_complement().tau(-1);
  // Delta^p tau^p(s)^-1 X = Delta^(p-1) part X
  --nf.inf;
  if (part.is_identity()) return;
  nf.factors.insert(nf.factors.begin(), part);
  for (std::size_t j = 0; j + 1 < nf.factors.size(); ++j) {
    if (!make_left_weighted(nf.factors[j], nf.factors[j + 1])) break;
  }
  trim(nf);
}

template <GarsideSimple S>
void append(NormalForm<S>& nf, const Factor<S>& f) {
  if (f.inverted) {
    append_inverse(nf, f.simple);
  } else {
    append_simple(nf, f.simple);
  }
}

template <GarsideSimple S>
void prepend(NormalForm<S>& nf, const Factor<S>& f) {
  if (f.inverted) {
    prepend_inverse(nf, f.simple);
  } else {
    prepend_simple(nf, f.simple);
  }
}

template <GarsideSimple S>
NormalForm<S> identity_form(int strands) {
  return NormalForm<S>{strands, 0, {}};
}

template <GarsideSimple S>
NormalForm<S> delta_power(int strands, int p) {
  return NormalForm<S>{strands, p, {}};
}

// Normal form of Delta^delta_power * g_1 ... g_m.
template <GarsideSimple S>
NormalForm<S> normalize(int strands, int delta_power, const std::vector<Factor<S>>& seq) {
  // Push every Delta^-1 coming from an inverse factor to the far left.
  std::vector<S> positive;
  positive.reserve(seq.size());
  int pulled = 0;
  for (auto it = seq.rbegin(); it != seq.rend(); ++it) {
    if (it->inverted) {
      ++pulled;
      positive.push_back(it->simple.right_complement().tau(-pulled));
    } else {
      positive.push_back(it->simple.tau(-pulled));
    }
  }
  NormalForm<S> nf{strands, delta_power - pulled, {}};
  for (auto it = positive.rbegin(); it != positive.rend(); ++it) append_simple(nf, *it);
  return nf;
}

template <GarsideSimple S>
NormalForm<S> multiply(const NormalForm<S>& a, const NormalForm<S>& b) {
  NormalForm<S> r = a;
  r.inf += b.inf;
  apply_tau(r.factors, b.inf);
  for (const auto& y : b.factors) append_simple(r, y);
  return r;
}

template <GarsideSimple S>
NormalForm<S> inverse(const NormalForm<S>& a) {
  std::vector<Factor<S>> seq;
  for (auto it = a.factors.rbegin(); it != a.factors.rend(); ++it) {
    seq.push_back({it->tau(-a.inf), true});
  }
  return normalize(a.strands, -a.inf, seq);
}

template <GarsideSimple S>
NormalForm<S> power(const NormalForm<S>& a, int k) {
  NormalForm<S> base = k < 0 ? inverse(a) : a;
  NormalForm<S> r = identity_form<S>(a.strands);
  for (int i = 0; i < (k < 0 ? -k : k); ++i) r = multiply(r, base);
  return r;
}

// c^-1 nf c.
template <GarsideSimple S>
NormalForm<S> conjugate(NormalForm<S> nf, const Factor<S>& c) {
  append(nf, c);
  prepend(nf, Factor<S>{c.simple, !c.inverted});
  return nf;
}

template <GarsideSimple S>
NormalForm<S> conjugate(NormalForm<S> nf, const std::vector<Factor<S>>& cs) {
  for (const auto& c : cs) nf = conjugate(std::move(nf), c);
  return nf;
}

template <GarsideSimple S>
struct Step {
  NormalForm<S> result;
  std::optional<Factor<S>> conjugator;  // result = conjugator^-1 * input * conjugator
};

template <GarsideSimple S>
Step<S> cycle(const NormalForm<S>& nf) {
  if (nf.factors.empty()) return {nf, std::nullopt};
  S c = nf.factors.front().tau(-nf.inf);
  NormalForm<S> r{nf.strands, nf.inf, {nf.factors.begin() + 1, nf.factors.end()}};
  append_simple(r, c);
  return {std::move(r), Factor<S>{std::move(c), false}};
}

template <GarsideSimple S>
Step<S> decycle(const NormalForm<S>& nf) {
  if (nf.factors.empty()) return {nf, std::nullopt};
  const S& last = nf.factors.back();
  NormalForm<S> r{nf.strands, nf.inf, {nf.factors.begin(), nf.factors.end() - 1}};
  prepend_simple(r, last);
  return {std::move(r), Factor<S>{last, true}};
}

template <GarsideSimple S>
struct Reduction {
  NormalForm<S> nf;
  std::vector<Factor<S>> conjugator;  // nf = conjugator^-1 * input * conjugator
  long operations = 0;
};

namespace detail {

// Up to |Delta| cyclings (or decyclings) looking for progress.  On success the
// whole batch is committed; otherwise the reduction is left untouched.
template <GarsideSimple S, class Progress>
bool try_batch(Reduction<S>& red, bool use_cycling, Progress progress, const Budget& budget) {
  const long limit = S::delta_length(red.nf.strands);
  NormalForm<S> cur = red.nf;
  std::vector<Factor<S>> batch;
  for (long j = 0; j < limit; ++j) {
    Step<S> st = use_cycling ? cycle(cur) : decycle(cur);
    if (!st.conjugator) return false;
    cur = std::move(st.result);
    batch.push_back(std::move(*st.conjugator));
    ++red.operations;
    budget.check(red.operations, use_cycling ? "cycling" : "decycling");
    if (progress(cur)) {
      red.nf = std::move(cur);
      red.conjugator.insert(red.conjugator.end(), batch.begin(), batch.end());
      return true;
    }
  }
  return false;
}

}  // namespace detail

// Iterated cycling then decycling until inf and sup reach their summit values.
template <GarsideSimple S>
Reduction<S> minimize_length(NormalForm<S> nf, const Budget& budget = {}) {
  Reduction<S> red{std::move(nf), {}, 0};
  while (!red.nf.factors.empty()) {
    const int inf0 = red.nf.inf;
    auto up = [inf0](const NormalForm<S>& x) { return x.inf > inf0 || x.factors.empty(); };
    if (!detail::try_batch(red, true, up, budget)) break;
  }
  while (!red.nf.factors.empty()) {
    const int sup0 = red.nf.sup();
    auto down = [sup0](const NormalForm<S>& x) { return x.sup() < sup0; };
    if (!detail::try_batch(red, false, down, budget)) break;
  }
  return red;
}

// Cycling/decycling down to Delta^k when nf is known to be conjugate to it.
template <GarsideSimple S>
Reduction<S> reach_power(NormalForm<S> nf, int k, const Budget& budget = {}) {
  Reduction<S> red{std::move(nf), {}, 0};
  auto fail = [] { throw std::domain_error("element is not conjugate to the requested power"); };
  while (red.nf.inf < k && !red.nf.factors.empty()) {
    const int inf0 = red.nf.inf;
    auto up = [inf0](const NormalForm<S>& x) { return x.inf > inf0 || x.factors.empty(); };
    if (!detail::try_batch(red, true, up, budget)) fail();
  }
  while (red.nf.sup() > k && !red.nf.factors.empty()) {
    const int sup0 = red.nf.sup();
    auto down = [sup0](const NormalForm<S>& x) { return x.sup() < sup0; };
    if (!detail::try_batch(red, false, down, budget)) fail();
  }
  if (!red.nf.factors.empty() || red.nf.inf != k) fail();
  return red;
}

}  // namespace garside
}  // namespace pbraid
