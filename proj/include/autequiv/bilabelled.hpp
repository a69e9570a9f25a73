#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <vector>

#include "autequiv/graph.hpp"

namespace autequiv {

/// A (k,l)-bilabelled graph: an underlying graph plus an input tuple of
/// length k and an output tuple of length l over its vertices (1-based).
/// Tuples may repeat vertices; vertices in neither tuple are free.
class BLG {
 public:
  BLG() = default;
  /// Throws DomainError if a tuple entry is not a vertex of `underlying`.
  BLG(Graph underlying, std::vector<int> in, std::vector<int> out);

  const Graph& underlying() const { return graph_; }
  const std::vector<int>& in() const { return in_; }
  const std::vector<int>& out() const { return out_; }

  unsigned k() const { return static_cast<unsigned>(in_.size()); }
  unsigned l() const { return static_cast<unsigned>(out_.size()); }
  int vertex_count() const { return graph_.order(); }

  /// Membership flags, index v-1.
  std::vector<bool> free_mask() const;
  bool is_free(int v) const;

  friend bool operator==(const BLG&, const BLG&) = default;

 private:
  Graph graph_;
  std::vector<int> in_;
  std::vector<int> out_;
};

/// (K_1, (1,...,1), (1,...,1)) with k inputs and l outputs.
BLG spider_blg(unsigned k, unsigned l);
/// (K_bar_2, (2,1), (1,2)).
BLG swap_blg();
/// (K_2, (1), (2)).
BLG adjacency_blg();
/// The tensor unit: no vertices, empty tuples.
BLG empty_blg();

/// Byte encoding of the lexicographically least relabelling of a BLG.
/// Equal keys <=> isomorphic as bilabelled graphs.
class CanonicalKey {
 public:
  CanonicalKey() = default;
  explicit CanonicalKey(std::string bytes) : bytes_(std::move(bytes)) {}
  const std::string& bytes() const { return bytes_; }
  std::string hex() const;
  friend auto operator<=>(const CanonicalKey&, const CanonicalKey&) = default;

 private:
  std::string bytes_;
};

inline constexpr int kDefaultCanonicalBound = 64;

/// Tuple-pinned vertices are individualized by first occurrence; the free
/// vertices are ordered by colour refinement and an exhaustive
/// individualize-and-refine search whose least leaf encoding is the key.
/// Throws PolicyError when the underlying graph exceeds `max_vertices`
/// or the search tree exceeds its leaf budget.
CanonicalKey canonical_form(const BLG& h, int max_vertices = kDefaultCanonicalBound);

/// The BLG obtained by renumbering via `perm` (1-based images of 1..m).
BLG relabel(const BLG& h, const std::vector<int>& perm);

/// h2 o h1: identifies out(h1)[i] with in(h2)[i]; result is (k1, l2).
/// Edges whose endpoints merge become loops; parallel edges collapse.
/// Throws DomainError if h2.k() != h1.l().
BLG compose(const BLG& h2, const BLG& h1);

/// Disjoint union with h2's vertices shifted past h1's; tuples concatenated.
BLG tensor(const BLG& h1, const BLG& h2);

/// Swaps input and output tuples.
BLG involution(const BLG& h);

struct PrunedBLG {
  BLG pruned;
  Graph removed;  ///< disjoint union of the components with only free vertices
};

/// Splits off every connected component that contains no tuple vertex.
PrunedBLG prune_free_components(const BLG& h);

/// (k,l) -> (l+k, 0): new input tuple is out ++ in.
BLG frobenius_flatten(const BLG& h);

/// (q,0) -> (k,l) with k+l = q: outputs are the first l entries, inputs
/// the last k. Throws DomainError on arity mismatch.
BLG frobenius_unflatten(const BLG& h, unsigned k, unsigned l);

}  // namespace autequiv
