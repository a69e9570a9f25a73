#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "autequiv/bilabelled.hpp"
#include "autequiv/diagram_gen.hpp"
#include "autequiv/graph.hpp"
#include "autequiv/hom_matrix.hpp"

namespace autequiv {

struct SpanningItem {
  CanonicalKey key;
  BLG diagram;
  Provenance provenance;
  HomMatrix matrix;
};

/// A generated diagram whose matrix duplicated an earlier item.
struct ShadowRecord {
  Provenance provenance;
  std::size_t shadowed_by = 0;  ///< index into SpanningSet::items
};

/// Deduplicated G-homomorphism matrices in generation order; no zero
/// matrix and no repeated matrix.
struct SpanningSet {
  Graph graph;
  unsigned k = 0;
  unsigned l = 0;
  std::vector<SpanningItem> items;
  std::vector<ShadowRecord> shadowed;
  std::size_t generated = 0;
  std::size_t zero_count = 0;

  std::vector<IntMatrix> matrices() const;
};

struct BuildOptions {
  /// Keep only a maximal linearly independent prefix-greedy subset.
  bool reduce_to_basis = false;
  /// Materialization guard; the streaming verifier has no such limit.
  std::size_t max_diagrams = 500'000;
};

/// Generate, compute matrices, drop zeros, keep the first of each distinct
/// matrix. Throws PolicyError if more than `max_diagrams` are generated.
SpanningSet build_spanning_set(const Graph& g, unsigned k, unsigned l,
                               const BuildOptions& options = {});

struct RealMatrix {
  std::size_t rows = 0;
  std::size_t cols = 0;
  std::vector<double> data;  // row-major
  double operator()(std::size_t r, std::size_t c) const { return data[r * cols + c]; }
};

/// sum_i weights[i] * items[i]. Throws DomainError on a length mismatch.
RealMatrix weight_matrix(const SpanningSet& ss, std::span<const double> weights);

struct FeatureSpec {
  int d_k = 1;
  int d_l = 1;
};

/// Kronecker product of x with the d_l x d_k matrix unit E_{ij} (1-based
/// i, j): rows are (I major, feature minor), columns likewise.
IntMatrix expand_features(const IntMatrix& x, const FeatureSpec& fs, int i, int j);

/// Every item expanded over every (i, j) in [d_l] x [d_k]; item-major order.
std::vector<IntMatrix> feature_spanning_set(const SpanningSet& ss, const FeatureSpec& fs);
std::vector<IntMatrix> feature_spanning_set(const Graph& g, unsigned k, unsigned l,
                                            const FeatureSpec& fs);

/// Spanning set with k = 0: columns c of length n^l with c = rho_l(sigma) c.
std::vector<IntMatrix> bias_spanning_set(const Graph& g, unsigned l);

}  // namespace autequiv
