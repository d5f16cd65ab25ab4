#include "pbraid/word.hpp"

#include <charconv>
#include <cstdlib>
#include <stdexcept>

namespace pbraid {

namespace {

void check_strands(int strands) {
  if (strands < 2) {
    throw std::invalid_argument("braid needs at least 2 strands, got " +
                                std::to_string(strands));
  }
}

std::vector<std::string_view> split_spaces(std::string_view text) {
  std::vector<std::string_view> tokens;
  std::size_t i = 0;
  while (i < text.size()) {
    while (i < text.size() && (text[i] == ' ' || text[i] == '\t')) ++i;
    std::size_t j = i;
    while (j < text.size() && text[j] != ' ' && text[j] != '\t') ++j;
    if (j > i) tokens.push_back(text.substr(i, j - i));
    i = j;
  }
  return tokens;
}

int parse_int(std::string_view token, std::string_view whole) {
  int value = 0;
  auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
  if (ec != std::errc{} || ptr != token.data() + token.size()) {
    throw std::invalid_argument("bad token '" + std::string(token) + "' in '" +
                                std::string(whole) + "'");
  }
  return value;
}

}  // namespace

ArtinWord::ArtinWord(int strands, std::vector<int> letters) : strands_(strands) {
  check_strands(strands);
  letters_.reserve(letters.size());
  for (int l : letters) push_back(l);
}

void ArtinWord::push_back(int letter) {
  if (letter == 0 || std::abs(letter) >= strands_) {
    throw std::invalid_argument("generator " + std::to_string(letter) +
                                " out of range for B_" + std::to_string(strands_));
  }
  letters_.push_back(letter);
}

void ArtinWord::append(const ArtinWord& other) {
  if (other.strands_ != strands_) throw std::invalid_argument("strand count mismatch");
  letters_.insert(letters_.end(), other.letters_.begin(), other.letters_.end());
}

ArtinWord operator*(const ArtinWord& a, const ArtinWord& b) {
  ArtinWord r = a;
  r.append(b);
  return r;
}

ArtinWord inverse(const ArtinWord& w) {
  std::vector<int> out(w.letters().rbegin(), w.letters().rend());
  for (int& l : out) l = -l;
  return ArtinWord(w.strands(), std::move(out));
}

ArtinWord power(const ArtinWord& w, int k) {
  ArtinWord base = k < 0 ? inverse(w) : w;
  ArtinWord r(w.strands());
  for (int i = 0; i < std::abs(k); ++i) r.append(base);
  return r;
}

ArtinWord free_reduce(const ArtinWord& w) {
  std::vector<int> out;
  out.reserve(w.size());
  for (int l : w.letters()) {
    if (!out.empty() && out.back() == -l) {
      out.pop_back();
    } else {
      out.push_back(l);
    }
  }
  return ArtinWord(w.strands(), std::move(out));
}

long exponent_sum(const ArtinWord& w) {
  long e = 0;
  for (int l : w.letters()) e += l > 0 ? 1 : -1;
  return e;
}

ArtinWord parse_artin_word(int strands, std::string_view text) {
  ArtinWord w(strands);
  for (auto token : split_spaces(text)) w.push_back(parse_int(token, text));
  return w;
}

std::string to_string(const ArtinWord& w) {
  std::string out;
  for (int l : w.letters()) {
    if (!out.empty()) out += ' ';
    out += std::to_string(l);
  }
  return out;
}

ArtinWord sigma_run(int strands, int i, int j) {
  if (i < 1 || j < 1 || i > strands || j > strands) {
    throw std::invalid_argument("sigma_run endpoints out of range");
  }
  ArtinWord w(strands);
  if (i < j) {
    for (int g = i; g < j; ++g) w.push_back(g);
  } else {
    for (int g = i - 1; g >= j; --g) w.push_back(g);
  }
  return w;
}

ArtinWord delta_word(int strands) { return sigma_run(strands, strands, 1); }

ArtinWord epsilon_word(int strands) {
  ArtinWord w(strands, {1});
  w.append(delta_word(strands));
  return w;
}

ArtinWord half_twist_word(int strands) {
  ArtinWord w(strands);
  for (int top = 2; top <= strands; ++top) w.append(sigma_run(strands, top, 1));
  return w;
}

BandWord::BandWord(int strands, std::vector<BandLetter> letters) : strands_(strands) {
  check_strands(strands);
  letters_.reserve(letters.size());
  for (auto l : letters) push_back(l);
}

void BandWord::push_back(BandLetter letter) {
  if (letter.s < 1 || letter.t <= letter.s || letter.t > strands_ ||
      (letter.sign != 1 && letter.sign != -1)) {
    throw std::invalid_argument("band generator a_{" + std::to_string(letter.t) + "," +
                                std::to_string(letter.s) + "} invalid for " +
                                std::to_string(strands_) + " strands");
  }
  letters_.push_back(letter);
}

void BandWord::append(const BandWord& other) {
  if (other.strands_ != strands_) throw std::invalid_argument("strand count mismatch");
  letters_.insert(letters_.end(), other.letters_.begin(), other.letters_.end());
}

BandWord operator*(const BandWord& a, const BandWord& b) {
  BandWord r = a;
  r.append(b);
  return r;
}

BandWord inverse(const BandWord& w) {
  std::vector<BandLetter> out(w.letters().rbegin(), w.letters().rend());
  for (auto& l : out) l.sign = -l.sign;
  return BandWord(w.strands(), std::move(out));
}

long exponent_sum(const BandWord& w) {
  long e = 0;
  for (auto l : w.letters()) e += l.sign;
  return e;
}

BandWord parse_band_word(int strands, std::string_view text) {
  BandWord w(strands);
  for (auto token : split_spaces(text)) {
    int sign = 1;
    std::string_view body = token;
    if (!body.empty() && body.front() == '-') {
      sign = -1;
      body.remove_prefix(1);
    }
    auto colon = body.find(':');
    if (colon == std::string_view::npos) {
      throw std::invalid_argument("band letter '" + std::string(token) + "' lacks ':'");
    }
    int t = parse_int(body.substr(0, colon), text);
    int s = parse_int(body.substr(colon + 1), text);
    w.push_back({t, s, sign});
  }
  return w;
}

std::string to_string(const BandWord& w) {
  std::string out;
  for (auto l : w.letters()) {
    if (!out.empty()) out += ' ';
    if (l.sign < 0) out += '-';
    out += std::to_string(l.t) + ":" + std::to_string(l.s);
  }
  return out;
}

BandWord band_delta_word(int strands) {
  BandWord w(strands);
  for (int t = strands; t >= 2; --t) w.push_back({t, t - 1, 1});
  return w;
}

}  // namespace pbraid
