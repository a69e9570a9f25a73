#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <utility>
#include <vector>

#include "autequiv/bilabelled.hpp"
#include "autequiv/graph.hpp"
#include "autequiv/int_matrix.hpp"

namespace autequiv {

/// X_H^G: an n^l x n^k matrix of homomorphism counts. Row index of a
/// tuple (i_1..i_l) is sum (i_t - 1) n^(l-t); columns likewise.
struct HomMatrix {
  int n = 0;
  unsigned k = 0;
  unsigned l = 0;
  IntMatrix values;

  friend bool operator==(const HomMatrix&, const HomMatrix&) = default;
};

/// 128-bit counts for diagrams whose entries exceed the 64-bit range.
struct WideMatrix {
  std::size_t rows = 0;
  std::size_t cols = 0;
  std::vector<WideInt> data;  // row-major
};

/// Partial map V(h) -> V(g), 1-based on both sides.
using Pins = std::vector<std::pair<int, int>>;

/// Counts homomorphisms into a fixed target graph.
///
/// Free vertices of degree <= 2 are summed out first (a degree-2 vertex
/// becomes a matrix product on the edge joining its neighbours, a
/// degree-1 vertex folds into its neighbour's weight vector; a bare path
/// of length t reads A^t from a precomputed table). Whatever
/// remains is enumerated by backtracking, pinned vertices first, then
/// free vertices by descending degree, pruning on zero partial products.
/// Arithmetic is overflow-checked unless n^|V(h)| bounds every value.
class HomCounter {
 public:
  explicit HomCounter(const Graph& target);

  const Graph& target() const { return target_; }

  /// Number of homomorphisms h -> target extending `pins`. Conflicting pins
  /// give 0; an out-of-range pin is a DomainError.
  std::int64_t count(const Graph& h, const Pins& pins = {}) const;

  /// Counts indexed by assignments of `labelled` (distinct vertices of h):
  /// entry sum_t (x_t - 1) n^(c-1-t) for labelled[t] -> x_t.
  std::vector<std::int64_t> table(const Graph& h, std::span<const int> labelled) const;

  HomMatrix matrix(const BLG& h) const;
  /// Same entries in checked 128-bit arithmetic.
  WideMatrix matrix_wide(const BLG& h) const;

 private:
  Graph target_;
  int n_ = 0;
  std::vector<std::int64_t> loop_;      // n
  std::vector<std::int64_t> powers64_;  // A^1..A^max64_, n*n each
  std::vector<WideInt> powers128_;
  int max64_ = 0;
  int max128_ = 0;
};

std::int64_t hom_count(const Graph& h, const Graph& g, const Pins& pins = {});

HomMatrix hom_matrix(const BLG& h, const Graph& g);

/// Batch kernel: one matrix per diagram, computed in parallel (OpenMP).
std::vector<HomMatrix> hom_matrices(std::span<const BLG> diagrams, const Graph& g);

/// Spider map M^{k,l} on R^n: e_i^{(x)k} -> e_i^{(x)l}; M^{0,0} = (n).
HomMatrix spider(unsigned k, unsigned l, int n);

/// Swap map S on (R^n)^{(x)2}: e_i (x) e_j -> e_j (x) e_i.
HomMatrix swap_matrix(int n);

/// Reinterpret the flat entries of a matrix of type (k,l) as type (q,m),
/// q + m = k + l. This is the Frobenius reshaping under the index convention.
HomMatrix reshape(const HomMatrix& x, unsigned q, unsigned m);

}  // namespace autequiv
