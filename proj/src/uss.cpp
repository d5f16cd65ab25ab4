#include "pbraid/uss.hpp"

#include <deque>
#include <map>
#include <queue>
#include <set>

namespace pbraid {

namespace {

// (a_1 ... a_r s) \ t, folded one factor at a time.
PermBraid complement_after(const std::vector<PermBraid>& factors, const PermBraid& s,
                           PermBraid t) {
  for (const auto& f : factors) t = left_complement_of_join(f, t);
  return left_complement_of_join(s, t);
}

// Smallest simple s with u <= s and s^-1 x s in the ultra summit set, for x in
// it.  Candidates are popped shortest first; each is closed up to a super
// summit conjugator, so the first ultra summit conjugator popped is the
// minimal one.
template <class Tick>
PermBraid minimal_uss_conjugator(const NormalFormA& x, const PermBraid& u, Tick tick) {
  const int n = x.strands;
  using Entry = std::pair<long, PermBraid>;
  std::priority_queue<Entry, std::vector<Entry>, std::greater<>> open;
  std::set<PermBraid> seen;
  auto push = [&](const PermBraid& t) {
    PermBraid c = minimal_summit_conjugator(x, t);
    if (seen.insert(c).second) open.emplace(c.length(), c);
  };
  push(u);
  while (!open.empty()) {
    PermBraid s = open.top().second;
    open.pop();
    tick();
    if (in_uss(garside::conjugate(x, FactorA{s, false}))) return s;
    for (int i = 0; i + 1 < n; ++i) {
      if (s.ends_with(i)) continue;
      PermBraid t = s;
      t.append_atom(i);
      push(t);
    }
  }
  throw std::logic_error("no ultra summit conjugator found");
}

struct Node {
  NormalFormA nf;
  int parent = -1;
  std::vector<FactorA> from_parent;
};

class UssExplorer {
 public:
  UssExplorer(const UssOptions& opt) : opt_(opt) {}

  // Index of the ultra summit element reached from w, with the conjugator
  // that takes w there.
  std::pair<NormalFormA, std::vector<FactorA>> seed(const ArtinWord& w) {
    auto red = garside::minimize_length(normal_form_artin(w), opt_.budget);
    auto land = land_in_uss(red.nf);
    red.conjugator.insert(red.conjugator.end(), land.conjugator.begin(), land.conjugator.end());
    return {std::move(land.nf), std::move(red.conjugator)};
  }

  void start(NormalFormA nf) {
    index_.emplace(nf, 0);
    nodes_.push_back({std::move(nf), -1, {}});
    queue_.push_back(0);
  }

  // Expands one node; false once the set is exhausted.
  bool step() {
    if (queue_.empty()) return false;
    const int at = queue_.front();
    queue_.pop_front();
    const NormalFormA x = nodes_[at].nf;
    const int n = x.strands;
    for (int i = 1; i < n; ++i) {
      auto check = [this] { opt_.budget.check(++operations_, "ultra summit set"); };
      PermBraid s = minimal_uss_conjugator(x, PermBraid::atom(n, i), check);
      NormalFormA y = garside::conjugate(x, FactorA{s, false});
      if (index_.count(y)) continue;
      if (static_cast<long>(nodes_.size()) >= opt_.max_elements) {
        throw BudgetExceeded("ultra summit set: element cap exceeded");
      }
      index_.emplace(y, static_cast<int>(nodes_.size()));
      queue_.push_back(static_cast<int>(nodes_.size()));
      nodes_.push_back({std::move(y), at, {FactorA{s, false}}});
    }
    return true;
  }

  std::optional<int> find(const NormalFormA& nf) const {
    auto it = index_.find(nf);
    if (it == index_.end()) return std::nullopt;
    return it->second;
  }

  std::vector<FactorA> path_to(int node) const {
    std::vector<std::vector<FactorA>> pieces;
    for (int v = node; v > 0; v = nodes_[v].parent) pieces.push_back(nodes_[v].from_parent);
    std::vector<FactorA> out;
    for (auto it = pieces.rbegin(); it != pieces.rend(); ++it) {
      out.insert(out.end(), it->begin(), it->end());
    }
    return out;
  }

  std::vector<NormalFormA> elements() const {
    std::vector<NormalFormA> out;
    for (const auto& [nf, idx] : index_) out.push_back(nf);
    return out;
  }

 private:
  UssOptions opt_;
  std::vector<Node> nodes_;
  std::map<NormalFormA, int> index_;
  std::deque<int> queue_;
  long operations_ = 0;
};

}  // namespace

bool in_uss(const NormalFormA& super_summit) {
  std::set<NormalFormA> seen;
  NormalFormA cur = super_summit;
  while (seen.insert(cur).second) {
    cur = garside::cycle(cur).result;
    if (cur == super_summit) return true;
  }
  return false;
}

PermBraid minimal_summit_conjugator(const NormalFormA& x, const PermBraid& u) {
  const NormalFormA xi = garside::inverse(x);
  PermBraid s = u;
  for (bool changed = true; changed;) {
    changed = false;
    for (const NormalFormA* y : {&x, &xi}) {
      PermBraid r = complement_after(y->factors, s, s.tau(y->inf));
      if (!r.is_identity()) {
        s = product_if_simple(s, r);
        changed = true;
      }
    }
  }
  return s;
}

UssLanding land_in_uss(const NormalFormA& super_summit) {
  std::map<NormalFormA, std::size_t> seen;
  std::vector<FactorA> conj;
  NormalFormA cur = super_summit;
  while (true) {
    auto [it, fresh] = seen.emplace(cur, conj.size());
    if (!fresh) {
      conj.resize(it->second);
      return {std::move(cur), std::move(conj)};
    }
    auto st = garside::cycle(cur);
    if (!st.conjugator) return {std::move(cur), {}};
    cur = std::move(st.result);
    conj.push_back(std::move(*st.conjugator));
  }
}

std::vector<NormalFormA> uss_artin(const ArtinWord& w, const UssOptions& opt) {
  UssExplorer ex(opt);
  ex.start(ex.seed(w).first);
  while (ex.step()) {
  }
  return ex.elements();
}

std::optional<ArtinWord> uss_conjugacy_search(const ArtinWord& x, const ArtinWord& y,
                                              const UssOptions& opt) {
  if (x.strands() != y.strands()) throw std::invalid_argument("strand count mismatch");
  const int n = x.strands();
  UssExplorer ex(opt);
  auto [sx, cx] = ex.seed(x);
  auto [sy, cy] = ex.seed(y);
  if (sx.inf != sy.inf || sx.sup() != sy.sup()) return std::nullopt;
  ex.start(std::move(sx));
  std::optional<int> hit;
  while (!(opt.stop_at_target && (hit = ex.find(sy))) && ex.step()) {
  }
  hit = ex.find(sy);
  if (!hit) return std::nullopt;
  ArtinWord c = to_word(cx, n) * to_word(ex.path_to(*hit), n) * inverse(to_word(cy, n));
  return free_reduce(c);
}

}  // namespace pbraid
