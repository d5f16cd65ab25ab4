#include "pbraid/classical.hpp"

#include <numeric>
#include <stdexcept>
#include <utility>

namespace pbraid {

namespace {

PermBraid from_images(std::vector<int> fwd) { return PermBraid(Permutation(std::move(fwd))); }

}  // namespace

PermBraid::PermBraid(const Permutation& p) : fwd_(p.images()), inv_(p.inverse().images()) {}

PermBraid PermBraid::identity(int n) { return PermBraid(Permutation::identity(n)); }

PermBraid PermBraid::delta(int n) {
  std::vector<int> fwd(n);
  for (int i = 0; i < n; ++i) fwd[i] = n - 1 - i;
  return from_images(std::move(fwd));
}

PermBraid PermBraid::atom(int n, int i) {
  if (i < 1 || i >= n) throw std::invalid_argument("atom index out of range");
  PermBraid x = identity(n);
  x.append_atom(i - 1);
  return x;
}

bool PermBraid::is_identity() const {
  for (int i = 0; i < strands(); ++i) {
    if (fwd_[i] != i) return false;
  }
  return true;
}

bool PermBraid::is_delta() const {
  const int n = strands();
  for (int i = 0; i < n; ++i) {
    if (fwd_[i] != n - 1 - i) return false;
  }
  return true;
}

long PermBraid::length() const {
  long c = 0;
  for (int i = 0; i < strands(); ++i) {
    for (int j = i + 1; j < strands(); ++j) c += fwd_[i] > fwd_[j];
  }
  return c;
}

PermBraid PermBraid::tau(int k) const {
  if (k % 2 == 0) return *this;
  const int n = strands();
  std::vector<int> fwd(n);
  for (int i = 0; i < n; ++i) fwd[i] = n - 1 - fwd_[n - 1 - i];
  return from_images(std::move(fwd));
}

PermBraid PermBraid::right_complement() const {
  const int n = strands();
  std::vector<int> fwd(n);
  for (int i = 0; i < n; ++i) fwd[i] = n - 1 - inv_[i];
  return from_images(std::move(fwd));
}

void PermBraid::append_atom(int i) {
  std::swap(inv_[i], inv_[i + 1]);
  fwd_[inv_[i]] = i;
  fwd_[inv_[i + 1]] = i + 1;
}

void PermBraid::toggle_front_atom(int i) {
  std::swap(fwd_[i], fwd_[i + 1]);
  inv_[fwd_[i]] = i;
  inv_[fwd_[i + 1]] = i + 1;
}

ArtinWord PermBraid::word() const {
  PermBraid x = *this;
  ArtinWord w(strands());
  int i = 0;
  while (i + 1 < strands()) {
    if (x.starts_with(i)) {
      w.push_back(i + 1);
      x.toggle_front_atom(i);
      if (i > 0) --i;
    } else {
      ++i;
    }
  }
  return w;
}

// Moves atoms of b that a can absorb until every starting atom of b is
// already a finishing atom of a.
bool make_left_weighted(PermBraid& a, PermBraid& b) {
  const int n = a.strands();
  bool changed = false;
  std::vector<int> work;
  work.reserve(n);
  for (int i = n - 2; i >= 0; --i) work.push_back(i);
  while (!work.empty()) {
    int i = work.back();
    work.pop_back();
    if (b.starts_with(i) && !a.ends_with(i)) {
      a.append_atom(i);
      b.toggle_front_atom(i);
      changed = true;
      if (i + 1 < n - 1) work.push_back(i + 1);
      if (i > 0) work.push_back(i - 1);
      work.push_back(i);
    }
  }
  return changed;
}

bool is_prefix(const PermBraid& a, const PermBraid& b) {
  const int n = a.strands();
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      if (a.image(i) > a.image(j) && b.image(i) < b.image(j)) return false;
    }
  }
  return true;
}

PermBraid join(const PermBraid& a, const PermBraid& b) {
  const int n = a.strands();
  // crossed[i][j], i < j: strand j finishes left of strand i.
  std::vector<std::vector<char>> crossed(n, std::vector<char>(n, 0));
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      crossed[i][j] = a.image(i) > a.image(j) || b.image(i) > b.image(j);
    }
  }
  for (int i = n - 2; i >= 0; --i) {
    for (int j = i + 1; j < n; ++j) {
      if (!crossed[i][j]) continue;
      for (int k = j + 1; k < n; ++k) {
        if (crossed[j][k]) crossed[i][k] = 1;
      }
    }
  }
  std::vector<int> fwd(n, 0);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < i; ++j) fwd[i] += !crossed[j][i];
    for (int j = i + 1; j < n; ++j) fwd[i] += crossed[i][j];
  }
  return from_images(std::move(fwd));
}

PermBraid left_complement_of_join(const PermBraid& a, const PermBraid& b) {
  PermBraid j = join(a, b);
  const int n = a.strands();
  std::vector<int> ainv = a.permutation().inverse().images();
  std::vector<int> fwd(n);
  for (int i = 0; i < n; ++i) fwd[i] = j.image(ainv[i]);
  return from_images(std::move(fwd));
}

PermBraid product_if_simple(const PermBraid& a, const PermBraid& b) {
  PermBraid p(a.permutation().then(b.permutation()));
  if (p.length() != a.length() + b.length()) {
    throw std::domain_error("product of simple elements is not simple");
  }
  return p;
}

NormalFormA normal_form_artin(const ArtinWord& w) {
  const int n = w.strands();
  std::vector<FactorA> seq;
  PermBraid cur = PermBraid::identity(n);
  bool cur_inverted = false;
  bool open = false;
  for (int l : w.letters()) {
    const int i = (l > 0 ? l : -l) - 1;
    if (l > 0) {
      if (open && !cur_inverted && !cur.ends_with(i)) {
        cur.append_atom(i);
        continue;
      }
    } else if (open && cur_inverted && !cur.starts_with(i)) {
      cur.toggle_front_atom(i);
      continue;
    }
    if (open) seq.push_back({cur, cur_inverted});
    cur = PermBraid::identity(n);
    cur_inverted = l < 0;
    if (l > 0) {
      cur.append_atom(i);
    } else {
      cur.toggle_front_atom(i);
    }
    open = true;
  }
  if (open) seq.push_back({cur, cur_inverted});
  return garside::normalize(n, 0, seq);
}

ArtinWord to_word(const NormalFormA& nf) {
  ArtinWord w = power(half_twist_word(nf.strands), nf.inf);
  for (const auto& f : nf.factors) w.append(f.word());
  return w;
}

ArtinWord to_word(const std::vector<FactorA>& conjugator, int strands) {
  ArtinWord w(strands);
  for (const auto& f : conjugator) w.append(f.inverted ? inverse(f.simple.word()) : f.simple.word());
  return w;
}

std::string to_string(const NormalFormA& nf) {
  std::string out = "D^" + std::to_string(nf.inf) + " |";
  for (std::size_t i = 0; i < nf.factors.size(); ++i) {
    out += ' ' + to_string(nf.factors[i].permutation());
    if (i + 1 < nf.factors.size()) out += " |";
  }
  return out;
}

ArtinWord tau(const ArtinWord& w) {
  std::vector<int> out;
  out.reserve(w.size());
  for (int l : w.letters()) out.push_back(l > 0 ? w.strands() - l : -(w.strands() + l));
  return ArtinWord(w.strands(), std::move(out));
}

namespace {

ConjugationA from_step(garside::Step<PermBraid> st, int strands) {
  ArtinWord c(strands);
  if (st.conjugator) c = to_word({*st.conjugator}, strands);
  return {std::move(st.result), std::move(c)};
}

}  // namespace

ConjugationA cycling(const NormalFormA& nf) { return from_step(garside::cycle(nf), nf.strands); }

ConjugationA decycling(const NormalFormA& nf) {
  return from_step(garside::decycle(nf), nf.strands);
}

ConjugationA min_length_representative(const ArtinWord& w, const Budget& budget) {
  auto red = garside::minimize_length(normal_form_artin(w), budget);
  return {std::move(red.nf), to_word(red.conjugator, w.strands())};
}

bool equivalent(const ArtinWord& a, const ArtinWord& b) {
  return normal_form_artin(a) == normal_form_artin(b);
}

}  // namespace pbraid
