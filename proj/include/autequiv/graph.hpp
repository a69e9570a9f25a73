#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "autequiv/int_matrix.hpp"

namespace autequiv {

/// Undirected edge {u, v} with 1 <= u < v.
struct Edge {
  int u = 0;
  int v = 0;
  friend auto operator<=>(const Edge&, const Edge&) = default;
};

/// Undirected graph on vertices 1..n with at most one loop per vertex.
/// Values are normalized on construction: edges sorted lexicographically
/// with u < v, loops sorted, duplicates removed.
class Graph {
 public:
  Graph() = default;

  /// Throws DomainError for negative n, out-of-range endpoints, or a pair {i, i}
  /// (loops go in `loops`). Duplicate edges and loops are dropped.
  static Graph make(int n, const std::vector<std::pair<int, int>>& edges,
                    const std::vector<int>& loops = {});

  static Graph edgeless(int n);
  static Graph complete(int n);
  static Graph cycle(int n);

  int order() const { return n_; }
  const std::vector<Edge>& edges() const { return edges_; }
  const std::vector<int>& loops() const { return loops_; }
  bool has_loops() const { return !loops_.empty(); }

  /// 1-based; adjacent(i, i) is true iff i carries a loop.
  bool adjacent(int i, int j) const;
  bool has_loop(int i) const { return adjacent(i, i); }
  int degree(int i) const;

  friend bool operator==(const Graph&, const Graph&) = default;

 private:
  int n_ = 0;
  std::vector<Edge> edges_;
  std::vector<int> loops_;
  std::vector<std::uint8_t> adj_;  // n*n, row-major, 0-based
};

Graph make_graph(int n, const std::vector<std::pair<int, int>>& edges,
                 const std::vector<int>& loops = {});

/// Distinct vertices adjacent iff they are not adjacent in g; loops kept.
Graph complement(const Graph& g);

/// Symmetric 0/1 matrix; the diagonal records loops.
IntMatrix adjacency_matrix(const Graph& g);

/// Maximum number of edges in a walk that never repeats an edge. A loop is
/// an edge that may be traversed once. Exhaustive search, so desk-scale only.
int longest_trail(const Graph& g);

/// Relabel vertices: vertex v of g becomes perm[v-1] (1-based images).
Graph relabel(const Graph& g, const std::vector<int>& perm);

/// Named instances: "K<n>", "Kbar<n>", "C<n>", "2K2_A|B|C", "C4_A|B|C",
/// "S2_A|B|C", "LOOP3". Throws DomainError for unknown names.
Graph builtin_graph(const std::string& name);
std::vector<std::string> builtin_graph_names();

}  // namespace autequiv
