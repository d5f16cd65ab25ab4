#include "pbraid/band.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace pbraid {

namespace {

std::vector<int> inverse_of(const std::vector<int>& p) {
  std::vector<int> inv(p.size());
  for (std::size_t i = 0; i < p.size(); ++i) inv[p[i]] = static_cast<int>(i);
  return inv;
}

}  // namespace

bool is_non_crossing(int points, const std::vector<std::vector<int>>& blocks) {
  std::vector<int> owner(points + 1, -1);
  std::vector<int> first(blocks.size()), last(blocks.size());
  for (std::size_t b = 0; b < blocks.size(); ++b) {
    if (blocks[b].empty()) return false;
    first[b] = points + 1;
    last[b] = 0;
    for (int v : blocks[b]) {
      if (v < 1 || v > points || owner[v] != -1) return false;
      owner[v] = static_cast<int>(b);
      first[b] = std::min(first[b], v);
      last[b] = std::max(last[b], v);
    }
  }
  std::vector<int> open;
  for (int p = 1; p <= points; ++p) {
    const int b = owner[p];
    if (b < 0 || first[b] == last[b]) continue;
    if (p == first[b]) {
      open.push_back(b);
      continue;
    }
    if (open.empty() || open.back() != b) return false;
    if (p == last[b]) open.pop_back();
  }
  return true;
}

NonCrossingPartition::NonCrossingPartition(int points,
                                           const std::vector<std::vector<int>>& blocks) {
  if (points < 1) throw std::invalid_argument("partition needs at least one point");
  if (!is_non_crossing(points, blocks)) {
    throw std::invalid_argument("blocks do not form a non-crossing partition");
  }
  next_.resize(points);
  std::iota(next_.begin(), next_.end(), 0);
  for (auto block : blocks) {
    std::sort(block.begin(), block.end());
    for (std::size_t k = 0; k < block.size(); ++k) {
      next_[block[k] - 1] = block[(k + 1) % block.size()] - 1;
    }
  }
}

NonCrossingPartition NonCrossingPartition::identity(int n) {
  NonCrossingPartition p;
  p.next_.resize(n);
  std::iota(p.next_.begin(), p.next_.end(), 0);
  return p;
}

NonCrossingPartition NonCrossingPartition::delta(int n) {
  NonCrossingPartition p;
  p.next_.resize(n);
  for (int i = 0; i < n; ++i) p.next_[i] = (i + 1) % n;
  return p;
}

NonCrossingPartition NonCrossingPartition::letter(int n, int t, int s) {
  if (s < 1 || t <= s || t > n) throw std::invalid_argument("band letter out of range");
  NonCrossingPartition p = identity(n);
  p.next_[s - 1] = t - 1;
  p.next_[t - 1] = s - 1;
  return p;
}

NonCrossingPartition NonCrossingPartition::from_permutation(std::vector<int> next) {
  NonCrossingPartition p;
  p.next_ = std::move(next);
  return p;
}

std::vector<int> NonCrossingPartition::block_labels() const {
  const int n = strands();
  std::vector<int> label(n, -1);
  for (int i = 0; i < n; ++i) {
    if (label[i] != -1) continue;
    int j = i;
    do {
      label[j] = i;
      j = next_[j];
    } while (j != i);
  }
  return label;
}

std::vector<std::vector<int>> NonCrossingPartition::blocks() const {
  std::vector<std::vector<int>> out;
  std::vector<char> seen(next_.size(), 0);
  for (int i = 0; i < strands(); ++i) {
    if (seen[i] || next_[i] == i) continue;
    std::vector<int> block;
    int j = i;
    do {
      seen[j] = 1;
      block.push_back(j + 1);
      j = next_[j];
    } while (j != i);
    std::sort(block.begin(), block.end());
    out.push_back(std::move(block));
  }
  return out;
}

bool NonCrossingPartition::is_identity() const {
  for (int i = 0; i < strands(); ++i) {
    if (next_[i] != i) return false;
  }
  return true;
}

bool NonCrossingPartition::is_delta() const {
  const int n = strands();
  for (int i = 0; i < n; ++i) {
    if (next_[i] != (i + 1) % n) return false;
  }
  return true;
}

long NonCrossingPartition::length() const {
  long moved = 0, cycles = 0;
  std::vector<char> seen(next_.size(), 0);
  for (int i = 0; i < strands(); ++i) {
    if (seen[i]) continue;
    ++cycles;
    for (int j = i; !seen[j]; j = next_[j]) {
      seen[j] = 1;
      ++moved;
    }
  }
  return moved - cycles;
}

NonCrossingPartition NonCrossingPartition::tau(int k) const {
  const int n = strands();
  k %= n;
  if (k < 0) k += n;
  if (k == 0) return *this;
  NonCrossingPartition p;
  p.next_.resize(n);
  for (int i = 0; i < n; ++i) p.next_[(i + k) % n] = (next_[i] + k) % n;
  return p;
}

NonCrossingPartition NonCrossingPartition::right_complement() const {
  const int n = strands();
  NonCrossingPartition p;
  p.next_.resize(n);
  for (int i = 0; i < n; ++i) p.next_[next_[i]] = (i + 1) % n;
  return p;
}

BandWord NonCrossingPartition::word() const {
  BandWord w(std::max(strands(), 2));
  for (const auto& block : blocks()) {
    for (std::size_t k = block.size() - 1; k >= 1; --k) w.push_back({block[k], block[k - 1], 1});
  }
  return w;
}

NonCrossingPartition ncp_meet(const NonCrossingPartition& a, const NonCrossingPartition& b) {
  const int n = a.strands();
  if (b.strands() != n) throw std::invalid_argument("partition size mismatch");
  std::vector<int> lb = b.block_labels();
  std::vector<int> out(n);
  std::iota(out.begin(), out.end(), 0);
  std::vector<int> first(n, -1), last(n, -1);
  std::vector<char> done(n, 0);
  std::vector<int> touched;
  for (int i = 0; i < n; ++i) {
    if (done[i]) continue;
    // walk a's block of i in increasing order, splitting by b's blocks
    int j = i;
    do {
      done[j] = 1;
      const int l = lb[j];
      if (last[l] == -1) {
        first[l] = j;
        touched.push_back(l);
      } else {
        out[last[l]] = j;
      }
      last[l] = j;
      j = a.next(j);
    } while (j != i);
    for (int l : touched) {
      out[last[l]] = first[l];
      first[l] = last[l] = -1;
    }
    touched.clear();
  }
  return NonCrossingPartition::from_permutation(std::move(out));
}

bool refines(const NonCrossingPartition& a, const NonCrossingPartition& b) {
  std::vector<int> lb = b.block_labels();
  for (int i = 0; i < a.strands(); ++i) {
    if (lb[i] != lb[a.next(i)]) return false;
  }
  return true;
}

bool make_left_weighted(NonCrossingPartition& a, NonCrossingPartition& b) {
  NonCrossingPartition m = ncp_meet(a.right_complement(), b);
  if (m.is_identity()) return false;
  const int n = a.strands();
  std::vector<int> minv = inverse_of(m.next_);
  std::vector<int> na(n), nb(n);
  for (int i = 0; i < n; ++i) {
    na[i] = m.next_[a.next_[i]];
    nb[i] = b.next_[minv[i]];
  }
  a.next_ = std::move(na);
  b.next_ = std::move(nb);
  return true;
}

std::string to_string(const NonCrossingPartition& p) {
  std::string out;
  for (const auto& block : p.blocks()) {
    out += '{';
    for (std::size_t k = 0; k < block.size(); ++k) {
      if (k) out += ',';
      out += std::to_string(block[k]);
    }
    out += '}';
  }
  return out;
}

NormalFormB normal_form_band(const BandWord& w) {
  const int n = w.strands();
  std::vector<FactorB> seq;
  std::vector<int> cur(n);
  std::iota(cur.begin(), cur.end(), 0);
  bool cur_inverted = false;
  bool open = false;
  auto flush = [&] {
    if (open) seq.push_back({NonCrossingPartition::from_permutation(cur), cur_inverted});
    std::iota(cur.begin(), cur.end(), 0);
  };
  for (auto l : w.letters()) {
    const int s = l.s - 1, t = l.t - 1;
    auto as = [s, t](int i) { return i == s ? t : (i == t ? s : i); };
    if (l.sign > 0) {
      // cur * a stays simple iff s and t share a block of cur^-1 delta
      bool fits = false;
      if (open && !cur_inverted) {
        auto labels = NonCrossingPartition::from_permutation(cur).right_complement().block_labels();
        fits = labels[s] == labels[t];
      }
      if (!fits) {
        flush();
        open = true;
        cur_inverted = false;
      }
      for (int& v : cur) v = as(v);
    } else {
      // a * cur stays simple iff cur refines a^-1 delta
      bool fits = false;
      if (open && cur_inverted) {
        auto comp = NonCrossingPartition::letter(n, l.t, l.s).right_complement();
        fits = refines(NonCrossingPartition::from_permutation(cur), comp);
      }
      if (!fits) {
        flush();
        open = true;
        cur_inverted = true;
      }
      std::vector<int> nxt(n);
      for (int i = 0; i < n; ++i) nxt[i] = cur[as(i)];
      cur = std::move(nxt);
    }
  }
  flush();
  return garside::normalize(n, 0, seq);
}

BandWord to_word(const NormalFormB& nf) {
  BandWord d = band_delta_word(nf.strands);
  BandWord w(nf.strands);
  for (int i = 0; i < (nf.inf < 0 ? -nf.inf : nf.inf); ++i) w.append(nf.inf < 0 ? inverse(d) : d);
  for (const auto& f : nf.factors) w.append(f.word());
  return w;
}

BandWord to_band_word(const std::vector<FactorB>& conjugator, int strands) {
  BandWord w(strands);
  for (const auto& f : conjugator) w.append(f.inverted ? inverse(f.simple.word()) : f.simple.word());
  return w;
}

std::string to_string(const NormalFormB& nf) {
  std::string out = "d^" + std::to_string(nf.inf) + " |";
  for (std::size_t i = 0; i < nf.factors.size(); ++i) {
    out += ' ' + to_string(nf.factors[i]);
    if (i + 1 < nf.factors.size()) out += " |";
  }
  return out;
}

BandWord tau_band(const BandWord& w) {
  const int n = w.strands();
  BandWord out(n);
  for (auto l : w.letters()) {
    if (l.t == n) {
      out.push_back({l.s + 1, 1, l.sign});
    } else {
      out.push_back({l.t + 1, l.s + 1, l.sign});
    }
  }
  return out;
}

namespace {

ConjugationB from_step(garside::Step<NonCrossingPartition> st, int strands) {
  BandWord c(strands);
  if (st.conjugator) c = to_band_word({*st.conjugator}, strands);
  return {std::move(st.result), std::move(c)};
}

}  // namespace

ConjugationB cycling_band(const NormalFormB& nf) {
  return from_step(garside::cycle(nf), nf.strands);
}

ConjugationB decycling_band(const NormalFormB& nf) {
  return from_step(garside::decycle(nf), nf.strands);
}

ArtinWord phi(const BandWord& w) {
  ArtinWord out(w.strands());
  for (auto l : w.letters()) {
    for (int g = l.t - 1; g > l.s; --g) out.push_back(g);
    out.push_back(l.sign * l.s);
    for (int g = l.s + 1; g < l.t; ++g) out.push_back(-g);
  }
  return out;
}

BandWord phi_inverse(const ArtinWord& w) {
  BandWord out(w.strands());
  for (int l : w.letters()) {
    const int i = l > 0 ? l : -l;
    out.push_back({i + 1, i, l > 0 ? 1 : -1});
  }
  return out;
}

}  // namespace pbraid
