#pragma once

#include <string>
#include <vector>

#include "pbraid/word.hpp"

namespace pbraid {

// Permutation of {0..n-1}.  p(i) is where the puncture starting at i ends up.
// Products follow the right action used for braids: (a.then(b))(i) = b(a(i)).
class Permutation {
 public:
  Permutation() = default;
  explicit Permutation(std::vector<int> images);

  static Permutation identity(int n);
  static Permutation from_one_based(const std::vector<int>& images);

  int size() const { return static_cast<int>(images_.size()); }
  int operator()(int i) const { return images_[i]; }
  const std::vector<int>& images() const { return images_; }

  Permutation then(const Permutation& next) const;
  Permutation inverse() const;
  std::vector<int> fixed_points() const;
  // Cycles in 0-based form, each starting at its minimum, sorted by minimum.
  std::vector<std::vector<int>> cycles() const;

  friend bool operator==(const Permutation&, const Permutation&) = default;
  friend auto operator<=>(const Permutation&, const Permutation&) = default;

 private:
  std::vector<int> images_;
};

Permutation word_permutation(const ArtinWord& w);
Permutation word_permutation(const BandWord& w);

// One-line notation, 1-based: "2 1 3".
std::string to_string(const Permutation& p);
// Cycle notation, 1-based, fixed points included: "(1 2 4)(3)".
std::string cycle_string(const Permutation& p);

}  // namespace pbraid
