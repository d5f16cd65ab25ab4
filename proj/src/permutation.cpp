#include "pbraid/permutation.hpp"

#include <numeric>
#include <stdexcept>
#include <utility>

namespace pbraid {

Permutation::Permutation(std::vector<int> images) : images_(std::move(images)) {
  std::vector<char> seen(images_.size(), 0);
  for (int v : images_) {
    if (v < 0 || v >= size() || seen[v]) throw std::invalid_argument("not a permutation");
    seen[v] = 1;
  }
}

Permutation Permutation::identity(int n) {
  std::vector<int> im(n);
  std::iota(im.begin(), im.end(), 0);
  return Permutation(std::move(im));
}

Permutation Permutation::from_one_based(const std::vector<int>& images) {
  std::vector<int> im(images);
  for (int& v : im) --v;
  return Permutation(std::move(im));
}

Permutation Permutation::then(const Permutation& next) const {
  if (next.size() != size()) throw std::invalid_argument("permutation size mismatch");
  std::vector<int> im(images_.size());
  for (int i = 0; i < size(); ++i) im[i] = next.images_[images_[i]];
  return Permutation(std::move(im));
}

Permutation Permutation::inverse() const {
  std::vector<int> im(images_.size());
  for (int i = 0; i < size(); ++i) im[images_[i]] = i;
  return Permutation(std::move(im));
}

std::vector<int> Permutation::fixed_points() const {
  std::vector<int> out;
  for (int i = 0; i < size(); ++i) {
    if (images_[i] == i) out.push_back(i);
  }
  return out;
}

std::vector<std::vector<int>> Permutation::cycles() const {
  std::vector<std::vector<int>> out;
  std::vector<char> seen(images_.size(), 0);
  for (int i = 0; i < size(); ++i) {
    if (seen[i]) continue;
    std::vector<int> cyc;
    for (int j = i; !seen[j]; j = images_[j]) {
      seen[j] = 1;
      cyc.push_back(j);
    }
    out.push_back(std::move(cyc));
  }
  return out;
}

Permutation word_permutation(const ArtinWord& w) {
  std::vector<int> where(w.strands());  // where[p] = start index of strand now at p
  std::iota(where.begin(), where.end(), 0);
  for (int l : w.letters()) {
    int i = (l > 0 ? l : -l) - 1;
    std::swap(where[i], where[i + 1]);
  }
  std::vector<int> im(w.strands());
  for (int p = 0; p < w.strands(); ++p) im[where[p]] = p;
  return Permutation(std::move(im));
}

Permutation word_permutation(const BandWord& w) {
  std::vector<int> where(w.strands());
  std::iota(where.begin(), where.end(), 0);
  for (auto l : w.letters()) std::swap(where[l.t - 1], where[l.s - 1]);
  std::vector<int> im(w.strands());
  for (int p = 0; p < w.strands(); ++p) im[where[p]] = p;
  return Permutation(std::move(im));
}

std::string to_string(const Permutation& p) {
  std::string out;
  for (int i = 0; i < p.size(); ++i) {
    if (i) out += ' ';
    out += std::to_string(p(i) + 1);
  }
  return out;
}

std::string cycle_string(const Permutation& p) {
  std::string out;
  for (const auto& cyc : p.cycles()) {
    out += '(';
    for (std::size_t k = 0; k < cyc.size(); ++k) {
      if (k) out += ' ';
      out += std::to_string(cyc[k] + 1);
    }
    out += ')';
  }
  return out;
}

}  // namespace pbraid
