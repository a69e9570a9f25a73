#include "autequiv/bilabelled.hpp"

#include <algorithm>
#include <numeric>

#include "autequiv/error.hpp"

namespace autequiv {

BLG::BLG(Graph underlying, std::vector<int> in, std::vector<int> out)
    : graph_(std::move(underlying)), in_(std::move(in)), out_(std::move(out)) {
  for (const auto* tuple : {&in_, &out_})
    for (int v : *tuple)
      if (v < 1 || v > graph_.order())
        throw DomainError("bilabelled graph: tuple entry " + std::to_string(v) +
                          " is not a vertex");
}

std::vector<bool> BLG::free_mask() const {
  std::vector<bool> free(static_cast<std::size_t>(vertex_count()), true);
  for (int v : in_) free[v - 1] = false;
  for (int v : out_) free[v - 1] = false;
  return free;
}

bool BLG::is_free(int v) const {
  return std::find(in_.begin(), in_.end(), v) == in_.end() &&
         std::find(out_.begin(), out_.end(), v) == out_.end();
}

BLG spider_blg(unsigned k, unsigned l) {
  return BLG(Graph::edgeless(1), std::vector<int>(k, 1), std::vector<int>(l, 1));
}

BLG swap_blg() { return BLG(Graph::edgeless(2), {2, 1}, {1, 2}); }

BLG adjacency_blg() { return BLG(Graph::complete(2), {1}, {2}); }

BLG empty_blg() { return BLG(Graph::edgeless(0), {}, {}); }

std::string CanonicalKey::hex() const {
  static constexpr char digits[] = "0123456789abcdef";
  std::string out;
  out.reserve(bytes_.size() * 2);
  for (unsigned char c : bytes_) {
    out.push_back(digits[c >> 4]);
    out.push_back(digits[c & 15]);
  }
  return out;
}

namespace {

constexpr std::size_t kLeafBudget = 1'000'000;

class Canonizer {
 public:
  Canonizer(const BLG& h) : h_(h), m_(h.vertex_count()), nbrs_(static_cast<std::size_t>(m_)) {
    for (const Edge& e : h.underlying().edges()) {
      nbrs_[e.u - 1].push_back(e.v - 1);
      nbrs_[e.v - 1].push_back(e.u - 1);
    }
  }

  std::string run() {
    std::vector<int> colour(static_cast<std::size_t>(m_), -1);
    int pinned = 0;
    for (const auto* tuple : {&h_.in(), &h_.out()})
      for (int v : *tuple)
        if (colour[v - 1] < 0) colour[v - 1] = pinned++;
    for (int v = 0; v < m_; ++v)
      if (colour[v] < 0) colour[v] = pinned + (h_.underlying().has_loop(v + 1) ? 1 : 0);
    refine(colour);
    search(colour);
    return best_;
  }

 private:
  // Equitable refinement; colours stay ranks so equal inputs give equal outputs.
  void refine(std::vector<int>& colour) const {
    normalize(colour);
    int cells = count_cells(colour);
    std::vector<std::pair<int, std::vector<int>>> sig(static_cast<std::size_t>(m_));
    while (true) {
      for (int v = 0; v < m_; ++v) {
        sig[v].first = colour[v];
        sig[v].second.clear();
        for (int w : nbrs_[v]) sig[v].second.push_back(colour[w]);
        std::sort(sig[v].second.begin(), sig[v].second.end());
      }
      auto order = sig;
      std::sort(order.begin(), order.end());
      order.erase(std::unique(order.begin(), order.end()), order.end());
      for (int v = 0; v < m_; ++v)
        colour[v] = static_cast<int>(std::lower_bound(order.begin(), order.end(), sig[v]) -
                                     order.begin());
      const int next = static_cast<int>(order.size());
      if (next == cells) return;
      cells = next;
    }
  }

  static void normalize(std::vector<int>& colour) {
    std::vector<int> values = colour;
    std::sort(values.begin(), values.end());
    values.erase(std::unique(values.begin(), values.end()), values.end());
    for (int& c : colour)
      c = static_cast<int>(std::lower_bound(values.begin(), values.end(), c) - values.begin());
  }

  static int count_cells(const std::vector<int>& colour) {
    std::vector<int> v = colour;
    std::sort(v.begin(), v.end());
    return static_cast<int>(std::unique(v.begin(), v.end()) - v.begin());
  }

  bool twins(int a, int b) const {
    const Graph& g = h_.underlying();
    if (g.has_loop(a + 1) != g.has_loop(b + 1)) return false;
    for (int w = 0; w < m_; ++w)
      if (w != a && w != b && g.adjacent(a + 1, w + 1) != g.adjacent(b + 1, w + 1)) return false;
    return true;
  }

  void search(const std::vector<int>& colour) {
    const int cells = count_cells(colour);
    if (cells == m_) {
      if (++leaves_ > kLeafBudget)
        throw PolicyError("canonical form: search tree exceeds the leaf budget");
      std::string enc = encode(colour);
      if (best_.empty() || enc < best_) best_ = std::move(enc);
      return;
    }
    // first non-singleton cell
    std::vector<int> size(static_cast<std::size_t>(cells), 0);
    for (int c : colour) ++size[c];
    int target = 0;
    while (size[target] == 1) ++target;
    std::vector<int> tried;
    for (int v = 0; v < m_; ++v) {
      if (colour[v] != target) continue;
      if (std::any_of(tried.begin(), tried.end(), [&](int u) { return twins(u, v); })) continue;
      tried.push_back(v);
      std::vector<int> next(colour);
      for (int& c : next) c *= 2;
      for (int w = 0; w < m_; ++w)
        if (colour[w] == target && w != v) next[w] += 1;
      refine(next);
      search(next);
    }
  }

  std::string encode(const std::vector<int>& label) const {
    const Graph& g = h_.underlying();
    std::vector<std::pair<int, int>> edges;
    for (const Edge& e : g.edges()) {
      const int a = label[e.u - 1];
      const int b = label[e.v - 1];
      edges.emplace_back(std::min(a, b), std::max(a, b));
    }
    std::sort(edges.begin(), edges.end());
    std::vector<int> loops;
    for (int v : g.loops()) loops.push_back(label[v - 1]);
    std::sort(loops.begin(), loops.end());

    std::string s;
    auto put = [&s](int x) { s.push_back(static_cast<char>(static_cast<unsigned char>(x))); };
    put(m_);
    put(static_cast<int>(edges.size()));
    for (auto [a, b] : edges) {
      put(a);
      put(b);
    }
    put(static_cast<int>(loops.size()));
    for (int v : loops) put(v);
    put(static_cast<int>(h_.k()));
    for (int v : h_.in()) put(label[v - 1]);
    put(static_cast<int>(h_.l()));
    for (int v : h_.out()) put(label[v - 1]);
    return s;
  }

  const BLG& h_;
  int m_;
  std::vector<std::vector<int>> nbrs_;
  std::string best_;
  std::size_t leaves_ = 0;
};

}  // namespace

CanonicalKey canonical_form(const BLG& h, int max_vertices) {
  if (h.vertex_count() > max_vertices)
    throw PolicyError("canonical form is limited to " + std::to_string(max_vertices) +
                      " vertices (diagram has " + std::to_string(h.vertex_count()) + ")");
  if (h.vertex_count() > 255 || h.underlying().edges().size() > 255 || h.k() > 255 ||
      h.l() > 255)
    throw PolicyError("canonical form: diagram too large to encode");
  return CanonicalKey(Canonizer(h).run());
}

BLG relabel(const BLG& h, const std::vector<int>& perm) {
  std::vector<int> in, out;
  for (int v : h.in()) in.push_back(perm.at(v - 1));
  for (int v : h.out()) out.push_back(perm.at(v - 1));
  return BLG(relabel(h.underlying(), perm), std::move(in), std::move(out));
}

namespace {

int find_root(std::vector<int>& parent, int x) {
  while (parent[x] != x) x = parent[x] = parent[parent[x]];
  return x;
}

}  // namespace

BLG compose(const BLG& h2, const BLG& h1) {
  if (h2.k() != h1.l())
    throw DomainError("compose: h2 has " + std::to_string(h2.k()) + " inputs but h1 has " +
                      std::to_string(h1.l()) + " outputs");
  const int m1 = h1.vertex_count();
  const int total = m1 + h2.vertex_count();
  std::vector<int> parent(static_cast<std::size_t>(total));
  std::iota(parent.begin(), parent.end(), 0);
  for (unsigned i = 0; i < h1.l(); ++i) {
    const int a = find_root(parent, h1.out()[i] - 1);
    const int b = find_root(parent, m1 + h2.in()[i] - 1);
    if (a != b) parent[std::max(a, b)] = std::min(a, b);
  }
  std::vector<int> id(static_cast<std::size_t>(total), 0);
  int next = 0;
  for (int v = 0; v < total; ++v)
    if (find_root(parent, v) == v) id[v] = ++next;
  auto map = [&](int v) { return id[find_root(parent, v)]; };

  std::vector<std::pair<int, int>> edges;
  std::vector<int> loops;
  auto add = [&](int a, int b) {
    if (a == b)
      loops.push_back(a);
    else
      edges.emplace_back(a, b);
  };
  for (const Edge& e : h1.underlying().edges()) add(map(e.u - 1), map(e.v - 1));
  for (int v : h1.underlying().loops()) loops.push_back(map(v - 1));
  for (const Edge& e : h2.underlying().edges()) add(map(m1 + e.u - 1), map(m1 + e.v - 1));
  for (int v : h2.underlying().loops()) loops.push_back(map(m1 + v - 1));

  std::vector<int> in, out;
  for (int v : h1.in()) in.push_back(map(v - 1));
  for (int v : h2.out()) out.push_back(map(m1 + v - 1));
  return BLG(Graph::make(next, edges, loops), std::move(in), std::move(out));
}

BLG tensor(const BLG& h1, const BLG& h2) {
  const int shift = h1.vertex_count();
  std::vector<std::pair<int, int>> edges;
  std::vector<int> loops = h1.underlying().loops();
  for (const Edge& e : h1.underlying().edges()) edges.emplace_back(e.u, e.v);
  for (const Edge& e : h2.underlying().edges()) edges.emplace_back(e.u + shift, e.v + shift);
  for (int v : h2.underlying().loops()) loops.push_back(v + shift);
  std::vector<int> in = h1.in(), out = h1.out();
  for (int v : h2.in()) in.push_back(v + shift);
  for (int v : h2.out()) out.push_back(v + shift);
  return BLG(Graph::make(shift + h2.vertex_count(), edges, loops), std::move(in),
             std::move(out));
}

BLG involution(const BLG& h) { return BLG(h.underlying(), h.out(), h.in()); }

PrunedBLG prune_free_components(const BLG& h) {
  const Graph& g = h.underlying();
  const int m = g.order();
  std::vector<int> parent(static_cast<std::size_t>(m));
  std::iota(parent.begin(), parent.end(), 0);
  for (const Edge& e : g.edges()) {
    const int a = find_root(parent, e.u - 1);
    const int b = find_root(parent, e.v - 1);
    if (a != b) parent[std::max(a, b)] = std::min(a, b);
  }
  std::vector<bool> anchored(static_cast<std::size_t>(m), false);
  const auto free = h.free_mask();
  for (int v = 0; v < m; ++v)
    if (!free[v]) anchored[find_root(parent, v)] = true;

  std::vector<int> kept_id(static_cast<std::size_t>(m), 0), removed_id(static_cast<std::size_t>(m), 0);
  int kept = 0, removed = 0;
  for (int v = 0; v < m; ++v) {
    if (anchored[find_root(parent, v)])
      kept_id[v] = ++kept;
    else
      removed_id[v] = ++removed;
  }
  std::vector<std::pair<int, int>> ke, re;
  std::vector<int> kl, rl;
  for (const Edge& e : g.edges()) {
    if (kept_id[e.u - 1])
      ke.emplace_back(kept_id[e.u - 1], kept_id[e.v - 1]);
    else
      re.emplace_back(removed_id[e.u - 1], removed_id[e.v - 1]);
  }
  for (int v : g.loops()) {
    if (kept_id[v - 1])
      kl.push_back(kept_id[v - 1]);
    else
      rl.push_back(removed_id[v - 1]);
  }
  std::vector<int> in, out;
  for (int v : h.in()) in.push_back(kept_id[v - 1]);
  for (int v : h.out()) out.push_back(kept_id[v - 1]);
  return {BLG(Graph::make(kept, ke, kl), std::move(in), std::move(out)),
          Graph::make(removed, re, rl)};
}

BLG frobenius_flatten(const BLG& h) {
  std::vector<int> in = h.out();
  in.insert(in.end(), h.in().begin(), h.in().end());
  return BLG(h.underlying(), std::move(in), {});
}

BLG frobenius_unflatten(const BLG& h, unsigned k, unsigned l) {
  if (h.l() != 0 || h.k() != k + l)
    throw DomainError("frobenius_unflatten: expected a (" + std::to_string(k + l) +
                      ",0) diagram, got (" + std::to_string(h.k()) + "," +
                      std::to_string(h.l()) + ")");
  std::vector<int> out(h.in().begin(), h.in().begin() + l);
  std::vector<int> in(h.in().begin() + l, h.in().end());
  return BLG(h.underlying(), std::move(in), std::move(out));
}

}  // namespace autequiv
