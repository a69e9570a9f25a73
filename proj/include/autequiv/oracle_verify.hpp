#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "autequiv/bilabelled.hpp"
#include "autequiv/graph.hpp"
#include "autequiv/hom_matrix.hpp"
#include "autequiv/int_matrix.hpp"
#include "autequiv/perm_group.hpp"
#include "autequiv/spanning_set.hpp"

namespace autequiv {

/// Indicator matrices of the orbits of Aut(g) on [n]^l x [n]^k, in order of
/// each orbit's first (row-major) position.
struct OrbitBasis {
  std::vector<IntMatrix> matrices;
};

OrbitBasis orbit_basis(const Graph& g, unsigned k, unsigned l);
OrbitBasis orbit_basis(const GroupTable& gt, unsigned k, unsigned l);

/// Tests rho_l(sigma) X = X rho_k(sigma) over a generating set of the group
/// (or every element when `full_group` is set), via precomputed index maps.
class EquivarianceChecker {
 public:
  EquivarianceChecker(const GroupTable& gt, unsigned k, unsigned l, bool full_group = false);

  /// Throws DomainError if the shape is not n^l x n^k.
  bool operator()(const IntMatrix& x) const;
  /// Row-major flat entries of an n^l x n^k matrix.
  bool operator()(std::span<const WideInt> flat) const;

  std::size_t permutation_count() const { return row_maps_.size(); }

 private:
  template <typename T>
  bool invariant(std::span<const T> flat) const;

  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<std::vector<std::size_t>> row_maps_;
  std::vector<std::vector<std::size_t>> col_maps_;
};

bool check_equivariance(const HomMatrix& x, const Graph& g, bool full_group = false);
bool check_equivariance(const IntMatrix& x, const GroupTable& gt, unsigned k, unsigned l,
                        bool full_group = false);

struct SpanningReport {
  std::string case_name;
  std::size_t rank = 0;
  std::size_t dim = 0;
  bool spanning = false;
  std::size_t matrices_checked = 0;
  std::vector<std::size_t> equivariance_failures;  ///< item / stream positions
  std::vector<std::size_t> orbits_outside_span;    ///< orbit-basis indices
  std::vector<std::string> functor_failures;

  bool ok() const {
    return spanning && equivariance_failures.empty() && orbits_outside_span.empty() &&
           functor_failures.empty();
  }
};

/// rank = rank_exact(items), dim = orbit_count(Aut(g), k+l), and an exact
/// span-membership check for every orbit-basis matrix.
SpanningReport check_spanning(const SpanningSet& ss, bool full_group = false);

/// Same report computed over the generated diagram stream without
/// materializing it. Zero and duplicate matrices do not change the rank,
/// so the result matches check_spanning on the built set. Once the rank
/// reaches dim the remaining matrices only need the equivariance test,
/// since equivariant matrices cannot raise it further. Counts are taken
/// in checked 128-bit arithmetic, so diagrams whose entries pass 2^63
/// are still verified exactly.
SpanningReport check_spanning_stream(const Graph& g, unsigned k, unsigned l,
                                     bool full_group = false);

struct FunctorReport {
  bool composable = false;
  bool product = true;    ///< X(h2 o h1) = X(h2) X(h1), when composable
  bool kronecker = true;  ///< X(h1 (x) h2) = X(h1) (x) X(h2)
  bool transpose = true;  ///< X(h1*) = X(h1)^T and X(h2*) = X(h2)^T
  bool ok() const { return product && kronecker && transpose; }
};

/// All three functor identities for the pair. The product identity is
/// checked when h2.k() == h1.l() and skipped otherwise.
FunctorReport check_functor(const BLG& h1, const BLG& h2, const Graph& g);

/// hom_matrix(unflatten(flatten(h), q, m)) equals the reshaped hom_matrix(h).
/// Throws DomainError unless q + m = k + l.
bool check_frobenius_square(const BLG& h, const Graph& g, unsigned q, unsigned m);

}  // namespace autequiv
