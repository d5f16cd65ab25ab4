#include "doctest.h"
#include "oracles.hpp"
#include "pbraid/permutation.hpp"
#include "pbraid/word.hpp"

using namespace pbraid;

TEST_CASE("artin word text round trip") {
  auto w = parse_artin_word(4, "1 -2 1");
  CHECK(w.letters() == std::vector<int>{1, -2, 1});
  CHECK(to_string(w) == "1 -2 1");
  CHECK(to_string(parse_artin_word(4, "  3   -1 ")) == "3 -1");
  CHECK(to_string(ArtinWord(3)).empty());
  CHECK_THROWS_AS(parse_artin_word(3, "3"), std::invalid_argument);
  CHECK_THROWS_AS(parse_artin_word(3, "0"), std::invalid_argument);
  CHECK_THROWS_AS(parse_artin_word(3, "1x"), std::invalid_argument);
  CHECK_THROWS_AS(ArtinWord(1), std::invalid_argument);
}

TEST_CASE("band word text round trip") {
  auto w = parse_band_word(4, "3:1 -2:1");
  REQUIRE(w.size() == 2);
  CHECK(w.letters()[0] == BandLetter{3, 1, 1});
  CHECK(w.letters()[1] == BandLetter{2, 1, -1});
  CHECK(to_string(w) == "3:1 -2:1");
  CHECK_THROWS_AS(parse_band_word(4, "1:3"), std::invalid_argument);
  CHECK_THROWS_AS(parse_band_word(4, "5:1"), std::invalid_argument);
  CHECK_THROWS_AS(parse_band_word(4, "21"), std::invalid_argument);
}

TEST_CASE("word operations") {
  auto w = parse_artin_word(4, "1 -2 3");
  CHECK(to_string(inverse(w)) == "-3 2 -1");
  CHECK(to_string(power(w, -2)) == "-3 2 -1 -3 2 -1");
  CHECK(exponent_sum(w) == 1);
  CHECK(free_reduce(parse_artin_word(4, "1 2 -2 -1 3")).letters() == std::vector<int>{3});
  CHECK(to_string(sigma_run(5, 2, 4)) == "2 3");
  CHECK(to_string(sigma_run(5, 4, 1)) == "3 2 1");
  CHECK(sigma_run(5, 3, 3).empty());
  CHECK(to_string(delta_word(4)) == "3 2 1");
  CHECK(to_string(epsilon_word(4)) == "1 3 2 1");
  CHECK(to_string(half_twist_word(4)) == "1 2 1 3 2 1");
  CHECK(to_string(band_delta_word(4)) == "4:3 3:2 2:1");
}

TEST_CASE("permutations follow the right action") {
  CHECK(cycle_string(word_permutation(parse_artin_word(3, "1 2"))) == "(1 3 2)");
  for (int n = 2; n <= 7; ++n) {
    auto d = word_permutation(delta_word(n));
    auto e = word_permutation(epsilon_word(n));
    std::string cyc = "(1";
    for (int i = 2; i <= n; ++i) cyc += " " + std::to_string(i);
    CHECK(cycle_string(d) == cyc + ")");
    if (n >= 3) {
      std::string ecyc = "(1";
      for (int i = 3; i <= n; ++i) ecyc += " " + std::to_string(i);
      CHECK(cycle_string(e) == ecyc + ")(2)");
    }
  }
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 200; ++trial) {
    auto w = oracle::random_word(rng, 6, 20);
    CHECK(word_permutation(w).images() == oracle::strand_images(w));
  }
  CHECK(cycle_string(word_permutation(parse_band_word(4, "3:1"))) == "(1 3)(2)(4)");
}

TEST_CASE("free group oracle respects braid relations") {
  CHECK(oracle::same_braid(parse_artin_word(4, "1 2 1"), parse_artin_word(4, "2 1 2")));
  CHECK(oracle::same_braid(parse_artin_word(4, "1 3"), parse_artin_word(4, "3 1")));
  CHECK_FALSE(oracle::same_braid(parse_artin_word(4, "1 2"), parse_artin_word(4, "2 1")));
  CHECK(oracle::act(parse_artin_word(4, "2 -3 3 -2")).is_identity());
}

TEST_CASE("parse and invert under their operation names") {
  auto w = parse_word("1 -2 3", 4);
  CHECK(to_string(w) == "1 -2 3");
  CHECK(to_string(invert_word(w)) == "-3 2 -1");
  CHECK(free_reduce(w * invert_word(w)).size() == 0);
}
