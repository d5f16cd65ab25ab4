#pragma once

#include <string>
#include <vector>

#include "pbraid/band.hpp"
#include "pbraid/word.hpp"

namespace pbraid {

// Word in the generators s_1..s_r of the Artin-Tits group of type B_r, where
// s_1 s_2 s_1 s_2 = s_2 s_1 s_2 s_1.  Letters are signed indices.
class TypeBWord {
 public:
  explicit TypeBWord(int rank, std::vector<int> letters = {});

  int rank() const { return rank_; }
  const std::vector<int>& letters() const { return letters_; }
  std::size_t size() const { return letters_.size(); }

 private:
  int rank_;
  std::vector<int> letters_;
};

// Into P_{n,2} inside B_n, n = rank + 1: s_1 -> sigma_1^2, s_2 -> sigma_1 sigma_2 sigma_1^-1,
// s_i -> sigma_i.
ArtinWord rho_apply(const TypeBWord& w);
// Into the symmetric braids on 2n-2 points: s_1 -> a_{n,1},
// s_i -> a_{i,i-1} a_{i+n-1,i+n-2}.
BandWord theta_prime_apply(const TypeBWord& w);

// Rewrites a braid fixing puncture 2 as the band word of its symmetric image
// on 2n-2 points.  Throws std::domain_error if puncture 2 moves.
BandWord artin_to_sym(const ArtinWord& x);

struct PolygonItem {
  enum class Kind { Symmetric, MirrorPair };
  Kind kind = Kind::Symmetric;
  std::vector<int> block;  // 1-based; for a mirror pair the half with the smaller minimum
  int offset = 0;          // mirror pairs: rotation bringing one half into 1..n-1
  int factor = 0;          // index of the normal form factor it came from
  friend bool operator==(const PolygonItem&, const PolygonItem&) = default;
};

struct PolygonalDecomposition {
  int strands = 2;  // n, so the symmetric braid lives on 2n-2 points
  int delta_power = 0;
  std::vector<PolygonItem> items;
};

bool is_symmetric(const NonCrossingPartition& p);
std::vector<PolygonItem> decompose_simple(const NonCrossingPartition& p, int factor = 0);
PolygonalDecomposition decompose_polygonal(const BandWord& z);
std::string to_string(const PolygonalDecomposition& d);

// Image of one polygonal item in P_{n,2}.
ArtinWord polygon_word(int strands, const PolygonItem& item);
ArtinWord sym_to_artin(const PolygonalDecomposition& d);
// Image of a symmetric simple element (or its inverse) in P_{n,2}.
ArtinWord sym_simple_to_artin(const NonCrossingPartition& p, bool inverted = false);

}  // namespace pbraid
