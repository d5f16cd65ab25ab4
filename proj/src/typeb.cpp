#include "pbraid/typeb.hpp"

#include <algorithm>
#include <cstdlib>
#include <stdexcept>

namespace pbraid {

TypeBWord::TypeBWord(int rank, std::vector<int> letters) : rank_(rank), letters_(std::move(letters)) {
  if (rank < 1) throw std::invalid_argument("type B rank must be positive");
  for (int l : letters_) {
    if (l == 0 || std::abs(l) > rank) {
      throw std::invalid_argument("type B generator " + std::to_string(l) + " out of range");
    }
  }
}

ArtinWord rho_apply(const TypeBWord& w) {
  const int n = w.rank() + 1;
  ArtinWord out(n);
  for (int l : w.letters()) {
    const int i = std::abs(l);
    const int sg = l > 0 ? 1 : -1;
    if (i == 1) {
      out.push_back(sg);
      out.push_back(sg);
    } else if (i == 2) {
      out.push_back(1);
      out.push_back(2 * sg);
      out.push_back(-1);
    } else {
      out.push_back(sg * i);
    }
  }
  return out;
}

BandWord theta_prime_apply(const TypeBWord& w) {
  const int n = w.rank() + 1;
  BandWord out(2 * n - 2);
  for (int l : w.letters()) {
    const int i = std::abs(l);
    const int sg = l > 0 ? 1 : -1;
    if (i == 1) {
      out.push_back({n, 1, sg});
    } else if (sg > 0) {
      out.push_back({i, i - 1, 1});
      out.push_back({i + n - 1, i + n - 2, 1});
    } else {
      out.push_back({i + n - 1, i + n - 2, -1});
      out.push_back({i, i - 1, -1});
    }
  }
  return out;
}

// Reidemeister-Schreier rewriting with coset representatives indexed by the
// current position k of the strand that starts at puncture 2.
BandWord artin_to_sym(const ArtinWord& x) {
  const int n = x.strands();
  BandWord out(2 * n - 2);
  int k = 2;
  for (int l : x.letters()) {
    const int mu = std::abs(l);
    if (l > 0) {
      if (mu < k - 1) {
        out.push_back({mu + 1, mu, 1});
        out.push_back({mu + n, mu + n - 1, 1});
      } else if (mu == k - 1) {
        --k;
      } else if (mu == k) {
        out.push_back({mu + n - 1, mu, 1});
        ++k;
      } else {
        out.push_back({mu, mu - 1, 1});
        out.push_back({mu + n - 1, mu + n - 2, 1});
      }
    } else {
      if (mu < k - 1) {
        out.push_back({mu + n, mu + n - 1, -1});
        out.push_back({mu + 1, mu, -1});
      } else if (mu == k - 1) {
        out.push_back({mu + n - 1, mu, -1});
        --k;
      } else if (mu == k) {
        ++k;
      } else {
        out.push_back({mu + n - 1, mu + n - 2, -1});
        out.push_back({mu, mu - 1, -1});
      }
    }
  }
  if (k != 2) throw std::domain_error("braid does not fix puncture 2");
  return out;
}

namespace {

int points_to_strands(int points) {
  if (points < 2 || points % 2 != 0) {
    throw std::invalid_argument("symmetric braids need an even number of points");
  }
  return points / 2 + 1;
}

std::vector<int> rotate(const std::vector<int>& block, int by, int points) {
  std::vector<int> out;
  for (int v : block) out.push_back(((v - 1 + by) % points + points) % points + 1);
  std::sort(out.begin(), out.end());
  return out;
}

bool inside_first_half(const std::vector<int>& block, int n) {
  return std::all_of(block.begin(), block.end(), [n](int v) { return v <= n - 1; });
}

// The half of a mirror pair that lands in 1..n-1 after rotating by the offset.
std::vector<int> landed_half(const PolygonItem& item, int n) {
  const int m = 2 * n - 2;
  auto a = rotate(item.block, item.offset, m);
  if (inside_first_half(a, n)) return a;
  auto b = rotate(item.block, item.offset + n - 1, m);
  if (inside_first_half(b, n)) return b;
  throw std::logic_error("mirror pair offset does not land in the first half");
}

// sigma_1 (prod sigma_i^-1, j_1 < i < j_d, i not in J) (sigma_{j_d}..sigma_{j_1+1})
ArtinWord half_polygon(int n, const std::vector<int>& j) {
  ArtinWord w(n, {1});
  for (int i = j.front() + 1; i < j.back(); ++i) {
    if (!std::binary_search(j.begin(), j.end(), i)) w.push_back(-i);
  }
  for (int i = j.back(); i > j.front(); --i) w.push_back(i);
  return w;
}

}  // namespace

bool is_symmetric(const NonCrossingPartition& p) {
  const int n = points_to_strands(p.strands());
  return p.tau(n - 1) == p;
}

std::vector<PolygonItem> decompose_simple(const NonCrossingPartition& p, int factor) {
  const int m = p.strands();
  const int n = points_to_strands(m);
  if (!is_symmetric(p)) throw std::domain_error("simple element is not symmetric");
  std::vector<PolygonItem> symmetric, pairs;
  for (const auto& block : p.blocks()) {
    auto mirror = rotate(block, n - 1, m);
    if (mirror == block) {
      symmetric.push_back({PolygonItem::Kind::Symmetric, block, 0, factor});
      continue;
    }
    if (mirror.front() < block.front()) continue;  // emitted with its partner
    PolygonItem item{PolygonItem::Kind::MirrorPair, block, -1, factor};
    for (int k = 0; k <= n - 2 && item.offset < 0; ++k) {
      if (inside_first_half(rotate(block, k, m), n) ||
          inside_first_half(rotate(mirror, k, m), n)) {
        item.offset = k;
      }
    }
    if (item.offset < 0) throw std::logic_error("mirror pair has no admissible rotation");
    pairs.push_back(std::move(item));
  }
  symmetric.insert(symmetric.end(), pairs.begin(), pairs.end());
  return symmetric;
}

PolygonalDecomposition decompose_polygonal(const BandWord& z) {
  const int n = points_to_strands(z.strands());
  NormalFormB nf = normal_form_band(z);
  PolygonalDecomposition d{n, nf.inf, {}};
  for (std::size_t f = 0; f < nf.factors.size(); ++f) {
    auto items = decompose_simple(nf.factors[f], static_cast<int>(f));
    d.items.insert(d.items.end(), items.begin(), items.end());
  }
  return d;
}

std::string to_string(const PolygonalDecomposition& d) {
  std::string out = "d^" + std::to_string(d.delta_power);
  for (const auto& item : d.items) {
    out += item.kind == PolygonItem::Kind::Symmetric ? " [S{" : " [M{";
    for (std::size_t k = 0; k < item.block.size(); ++k) {
      if (k) out += ',';
      out += std::to_string(item.block[k]);
    }
    out += '}';
    if (item.kind == PolygonItem::Kind::MirrorPair) out += "+off" + std::to_string(item.offset);
    out += ']';
  }
  return out;
}

ArtinWord polygon_word(int strands, const PolygonItem& item) {
  const int n = strands;
  if (item.kind == PolygonItem::Kind::Symmetric) {
    std::vector<int> j;
    for (int v : item.block) {
      if (v <= n - 1) j.push_back(v);
    }
    ArtinWord w = half_polygon(n, j);
    for (int i = j.front(); i >= 2; --i) w.push_back(i);
    w.push_back(1);
    w.push_back(1);
    for (int i = 2; i <= j.front(); ++i) w.push_back(-i);
    w.push_back(-1);
    return w;
  }
  ArtinWord e = power(epsilon_word(n), item.offset);
  ArtinWord w = e * half_polygon(n, landed_half(item, n));
  w.push_back(-1);
  return w * inverse(e);
}

namespace {

// Items of one simple factor commute; ordering them by offset lets the
// epsilon conjugations telescope under free reduction.
ArtinWord items_word(int n, std::vector<PolygonItem> items) {
  std::stable_sort(items.begin(), items.end(),
                   [](const PolygonItem& a, const PolygonItem& b) { return a.offset < b.offset; });
  ArtinWord w(n);
  for (const auto& item : items) w.append(polygon_word(n, item));
  return free_reduce(w);
}

}  // namespace

ArtinWord sym_to_artin(const PolygonalDecomposition& d) {
  const int n = d.strands;
  ArtinWord w = power(epsilon_word(n), d.delta_power);
  std::size_t i = 0;
  while (i < d.items.size()) {
    std::size_t j = i;
    while (j < d.items.size() && d.items[j].factor == d.items[i].factor) ++j;
    w.append(items_word(n, {d.items.begin() + static_cast<long>(i),
                            d.items.begin() + static_cast<long>(j)}));
    i = j;
  }
  return free_reduce(w);
}

ArtinWord sym_simple_to_artin(const NonCrossingPartition& p, bool inverted) {
  const int n = points_to_strands(p.strands());
  ArtinWord w = items_word(n, decompose_simple(p));
  return inverted ? inverse(w) : w;
}

}  // namespace pbraid
