#include <algorithm>
#include <numeric>

#include "doctest.h"
#include "pbraid/periodic.hpp"
#include "pbraid/uss_patterns.hpp"

using namespace pbraid;

namespace {

PermBraid from_cycles(int n, const std::vector<std::vector<int>>& cycles) {
  std::vector<int> img(n);
  std::iota(img.begin(), img.end(), 0);
  for (const auto& c : cycles) {
    for (std::size_t k = 0; k < c.size(); ++k) img[c[k] - 1] = c[(k + 1) % c.size()] - 1;
  }
  return PermBraid(Permutation(img));
}

// All simple s whose power s^m is the full twist squared and whose
// permutation has the cycle type of the family.
std::vector<PermBraid> brute_force_uss(int n, Family family) {
  const int m = family == Family::Delta ? n : n - 1;
  std::vector<PermBraid> out;
  std::vector<int> p(n);
  std::iota(p.begin(), p.end(), 0);
  do {
    PermBraid s{Permutation(p)};
    auto cycles = s.permutation().cycles();
    bool shape = family == Family::Delta
                     ? cycles.size() == 1
                     : (cycles.size() == 2 && std::min(cycles[0].size(), cycles[1].size()) == 1);
    if (!shape) continue;
    NormalFormA x{n, 0, {s}};
    if (garside::power(x, m) == NormalFormA{n, 2, {}}) out.push_back(s);
  } while (std::next_permutation(p.begin(), p.end()));
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

TEST_CASE("pattern recognition examples") {
  auto s = from_cycles(4, {{1, 2, 4, 3}});
  auto p = uss_delta_member(s);
  REQUIRE(p);
  CHECK(p->up == std::vector<int>{2});
  CHECK(p->down == std::vector<int>{3});
  CHECK(to_string(conjugator_alpha(4, *p)) == "2 1");

  auto q = uss_delta_member(from_cycles(5, {{1, 3, 5, 4, 2}}));
  REQUIRE(q);
  CHECK(q->down == std::vector<int>{2, 4});
  CHECK(to_string(conjugator_alpha(5, *q)) == "1 3 2 1");

  auto e = uss_epsilon_member(from_cycles(4, {{1, 2, 4}}));
  REQUIRE(e);
  CHECK(e->fixed == 3);
  CHECK(pattern_b(*e) == 3);
  CHECK(to_string(conjugator_beta(4, *e)) == "2");

  auto f = uss_epsilon_member(from_cycles(5, {{1, 4, 5, 3}}));
  REQUIRE(f);
  CHECK(f->fixed == 2);
  CHECK(f->down == std::vector<int>{3});
  CHECK(pattern_b(*f) == 3);
  CHECK(to_string(conjugator_beta(5, *f)) == "2 1 2");

  CHECK_FALSE(uss_delta_member(from_cycles(4, {{1, 3, 2, 4}})));
  CHECK_FALSE(uss_epsilon_member(from_cycles(4, {{2, 3, 4}})));
}

TEST_CASE("enumeration sizes") {
  CHECK(enumerate_uss(4, Family::Delta).size() == 4);
  CHECK(enumerate_uss(4, Family::Epsilon).size() == 4);
  CHECK(enumerate_uss(8, Family::Delta).size() == 64);
  CHECK(enumerate_uss(8, Family::Epsilon).size() == 192);
  CHECK(enumerate_uss(3, Family::Epsilon).size() == 1);
  for (int n = 3; n <= 10; ++n) {
    for (auto fam : {Family::Delta, Family::Epsilon}) {
      auto all = enumerate_uss(n, fam);
      CHECK(static_cast<long>(all.size()) == uss_size_formula(n, fam));
      CHECK(std::adjacent_find(all.begin(), all.end()) == all.end());
    }
  }
}

TEST_CASE("enumeration equals the brute force set") {
  for (int n = 3; n <= 6; ++n) {
    CHECK(enumerate_uss(n, Family::Delta) == brute_force_uss(n, Family::Delta));
    CHECK(enumerate_uss(n, Family::Epsilon) == brute_force_uss(n, Family::Epsilon));
  }
}

TEST_CASE("alpha and beta conjugate members to delta and epsilon") {
  for (int n = 3; n <= 7; ++n) {
    auto delta = normal_form_artin(delta_word(n));
    for (const auto& s : enumerate_uss(n, Family::Delta)) {
      auto p = uss_delta_member(s);
      REQUIRE(p);
      CHECK(pattern_braid(n, *p) == s);
      auto a = conjugator_alpha(n, *p);
      CHECK(normal_form_artin(inverse(a) * s.word() * a) == delta);
    }
    auto eps = normal_form_artin(epsilon_word(n));
    for (const auto& s : enumerate_uss(n, Family::Epsilon)) {
      auto p = uss_epsilon_member(s);
      REQUIRE(p);
      CHECK(pattern_braid(n, *p) == s);
      auto b = conjugator_beta(n, *p);
      CHECK(normal_form_artin(inverse(b) * s.word() * b) == eps);
    }
  }
}
