#include "autequiv/graph.hpp"

#include <algorithm>
#include <charconv>
#include <cstdint>
#include <functional>
#include <unordered_map>

#include "autequiv/error.hpp"

namespace autequiv {

Graph Graph::make(int n, const std::vector<std::pair<int, int>>& edges,
                  const std::vector<int>& loops) {
  if (n < 0) throw DomainError("graph: negative vertex count");
  auto check = [n](int v) {
    if (v < 1 || v > n)
      throw DomainError("graph: vertex " + std::to_string(v) + " outside [1," +
                        std::to_string(n) + "]");
  };
  Graph g;
  g.n_ = n;
  g.adj_.assign(static_cast<std::size_t>(n) * n, 0);
  for (auto [a, b] : edges) {
    check(a);
    check(b);
    if (a == b)
      throw DomainError("graph: pair {" + std::to_string(a) + "," + std::to_string(a) +
                        "} is a loop; list it under loops");
    g.edges_.push_back({std::min(a, b), std::max(a, b)});
  }
  for (int v : loops) {
    check(v);
    g.loops_.push_back(v);
  }
  std::sort(g.edges_.begin(), g.edges_.end());
  g.edges_.erase(std::unique(g.edges_.begin(), g.edges_.end()), g.edges_.end());
  std::sort(g.loops_.begin(), g.loops_.end());
  g.loops_.erase(std::unique(g.loops_.begin(), g.loops_.end()), g.loops_.end());
  for (const Edge& e : g.edges_) {
    g.adj_[(e.u - 1) * n + (e.v - 1)] = 1;
    g.adj_[(e.v - 1) * n + (e.u - 1)] = 1;
  }
  for (int v : g.loops_) g.adj_[(v - 1) * n + (v - 1)] = 1;
  return g;
}

Graph Graph::edgeless(int n) { return make(n, {}); }

Graph Graph::complete(int n) {
  std::vector<std::pair<int, int>> e;
  for (int i = 1; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j) e.emplace_back(i, j);
  return make(n, e);
}

Graph Graph::cycle(int n) {
  if (n < 3) throw DomainError("cycle graph needs at least 3 vertices");
  std::vector<std::pair<int, int>> e;
  for (int i = 1; i <= n; ++i) e.emplace_back(i, i % n + 1);
  return make(n, e);
}

bool Graph::adjacent(int i, int j) const {
  if (i < 1 || i > n_ || j < 1 || j > n_) throw DomainError("graph: vertex out of range");
  return adj_[(i - 1) * n_ + (j - 1)] != 0;
}

int Graph::degree(int i) const {
  int d = 0;
  for (int j = 1; j <= n_; ++j)
    if (j != i && adjacent(i, j)) ++d;
  return d;
}

Graph make_graph(int n, const std::vector<std::pair<int, int>>& edges,
                 const std::vector<int>& loops) {
  if (n < 1) throw DomainError("graph: vertex count must be positive");
  return Graph::make(n, edges, loops);
}

Graph complement(const Graph& g) {
  std::vector<std::pair<int, int>> e;
  for (int i = 1; i <= g.order(); ++i)
    for (int j = i + 1; j <= g.order(); ++j)
      if (!g.adjacent(i, j)) e.emplace_back(i, j);
  return Graph::make(g.order(), e, g.loops());
}

IntMatrix adjacency_matrix(const Graph& g) {
  const auto n = static_cast<std::size_t>(g.order());
  IntMatrix a(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      a(i, j) = g.adjacent(static_cast<int>(i) + 1, static_cast<int>(j) + 1) ? 1 : 0;
  return a;
}

int longest_trail(const Graph& g) {
  struct Link {
    int a, b;
  };
  std::vector<Link> links;
  for (const Edge& e : g.edges()) links.push_back({e.u - 1, e.v - 1});
  for (int v : g.loops()) links.push_back({v - 1, v - 1});
  if (links.empty()) return 0;
  if (links.size() > 62) throw PolicyError("longest_trail: more than 62 edges");

  std::vector<std::vector<int>> incident(static_cast<std::size_t>(g.order()));
  for (int i = 0; i < static_cast<int>(links.size()); ++i) {
    incident[links[i].a].push_back(i);
    if (links[i].b != links[i].a) incident[links[i].b].push_back(i);
  }

  // best extension from (vertex, used-edge set)
  std::vector<std::unordered_map<std::uint64_t, int>> memo(incident.size());
  const int full = static_cast<int>(links.size());
  std::function<int(int, std::uint64_t)> extend = [&](int v, std::uint64_t used) -> int {
    if (auto it = memo[v].find(used); it != memo[v].end()) return it->second;
    int best = 0;
    for (int e : incident[v]) {
      if (used & (std::uint64_t{1} << e)) continue;
      const int next = links[e].a == v ? links[e].b : links[e].a;
      best = std::max(best, 1 + extend(next, used | (std::uint64_t{1} << e)));
      if (best == full) break;
    }
    memo[v].emplace(used, best);
    return best;
  };
  int best = 0;
  for (int v = 0; v < g.order() && best < full; ++v) best = std::max(best, extend(v, 0));
  return best;
}

Graph relabel(const Graph& g, const std::vector<int>& perm) {
  if (static_cast<int>(perm.size()) != g.order()) throw DomainError("relabel: permutation size");
  std::vector<std::pair<int, int>> e;
  for (const Edge& x : g.edges()) e.emplace_back(perm[x.u - 1], perm[x.v - 1]);
  std::vector<int> loops;
  for (int v : g.loops()) loops.push_back(perm[v - 1]);
  return Graph::make(g.order(), e, loops);
}

namespace {

bool parse_suffix(const std::string& name, const std::string& prefix, int& n) {
  if (name.size() <= prefix.size() || name.compare(0, prefix.size(), prefix) != 0) return false;
  const char* first = name.data() + prefix.size();
  const char* last = name.data() + name.size();
  auto [ptr, ec] = std::from_chars(first, last, n);
  return ec == std::errc{} && ptr == last && n >= 1;
}

}  // namespace

Graph builtin_graph(const std::string& name) {
  if (name == "2K2_A") return Graph::make(4, {{1, 2}, {3, 4}});
  if (name == "2K2_B") return Graph::make(4, {{1, 3}, {2, 4}});
  if (name == "2K2_C") return Graph::make(4, {{1, 4}, {2, 3}});
  if (name == "C4_A") return complement(builtin_graph("2K2_A"));
  if (name == "C4_B") return complement(builtin_graph("2K2_B"));
  if (name == "C4_C") return complement(builtin_graph("2K2_C"));
  if (name == "S2_A") return Graph::make(3, {{1, 2}});
  if (name == "S2_B") return Graph::make(3, {{2, 3}});
  if (name == "S2_C") return Graph::make(3, {{1, 3}});
  if (name == "LOOP3") return Graph::make(3, {{1, 2}}, {3});
  int n = 0;
  if (parse_suffix(name, "Kbar", n)) return Graph::edgeless(n);
  if (parse_suffix(name, "K", n)) return Graph::complete(n);
  if (parse_suffix(name, "C", n)) return Graph::cycle(n);
  throw DomainError("unknown builtin graph '" + name + "'");
}

std::vector<std::string> builtin_graph_names() {
  return {"K<n>", "Kbar<n>", "C<n>", "2K2_A", "2K2_B", "2K2_C", "C4_A",
          "C4_B", "C4_C",    "S2_A", "S2_B",  "S2_C",  "LOOP3"};
}

}  // namespace autequiv
