#pragma once

#include <compare>
#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

namespace pbraid {

// Word in the Artin generators sigma_1..sigma_{n-1}.  A letter is stored as a
// signed index: +i is sigma_i, -i is its inverse.
class ArtinWord {
 public:
  explicit ArtinWord(int strands, std::vector<int> letters = {});

  int strands() const { return strands_; }
  const std::vector<int>& letters() const { return letters_; }
  std::size_t size() const { return letters_.size(); }
  bool empty() const { return letters_.empty(); }

  void push_back(int letter);
  void append(const ArtinWord& other);

  friend bool operator==(const ArtinWord&, const ArtinWord&) = default;

 private:
  int strands_;
  std::vector<int> letters_;
};

ArtinWord operator*(const ArtinWord& a, const ArtinWord& b);
ArtinWord inverse(const ArtinWord& w);
ArtinWord power(const ArtinWord& w, int k);
ArtinWord free_reduce(const ArtinWord& w);
long exponent_sum(const ArtinWord& w);

ArtinWord parse_artin_word(int strands, std::string_view text);
inline ArtinWord parse_word(std::string_view text, int strands) {
  return parse_artin_word(strands, text);
}
inline ArtinWord invert_word(const ArtinWord& w) { return inverse(w); }
std::string to_string(const ArtinWord& w);

// sigma_{[i->j]}: sigma_i..sigma_{j-1} when i<j, sigma_{i-1}..sigma_j when i>j.
ArtinWord sigma_run(int strands, int i, int j);

// Canonical words for the Garside elements of B_n.
ArtinWord delta_word(int strands);    // sigma_{n-1}..sigma_1
ArtinWord epsilon_word(int strands);  // sigma_1 sigma_{n-1}..sigma_1
ArtinWord half_twist_word(int strands);

// Band generator a_{t,s} (t > s), or its inverse.
struct BandLetter {
  int t;
  int s;
  int sign = 1;
  friend auto operator<=>(const BandLetter&, const BandLetter&) = default;
};

class BandWord {
 public:
  explicit BandWord(int strands, std::vector<BandLetter> letters = {});

  int strands() const { return strands_; }
  const std::vector<BandLetter>& letters() const { return letters_; }
  std::size_t size() const { return letters_.size(); }
  bool empty() const { return letters_.empty(); }

  void push_back(BandLetter letter);
  void append(const BandWord& other);

  friend bool operator==(const BandWord&, const BandWord&) = default;

 private:
  int strands_;
  std::vector<BandLetter> letters_;
};

BandWord operator*(const BandWord& a, const BandWord& b);
BandWord inverse(const BandWord& w);
long exponent_sum(const BandWord& w);

BandWord parse_band_word(int strands, std::string_view text);
std::string to_string(const BandWord& w);

BandWord band_delta_word(int strands);  // a_{n,n-1}..a_{2,1}

}  // namespace pbraid
