#pragma once

#include <cstddef>
#include <functional>
#include <map>
#include <string>
#include <vector>

#include "autequiv/bilabelled.hpp"
#include "autequiv/graph.hpp"

namespace autequiv {

/// Inputs of the diagram procedure for a target graph.
struct GenConfig {
  unsigned q = 0;         ///< k + l
  int m = 0;              ///< longest trail of the target graph
  bool has_loops = false; ///< whether the target graph carries loops
};

GenConfig make_gen_config(const Graph& g, unsigned q);

/// Where a generated diagram came from.
///  step 1: `string` empty
///  step 2: `string` holds one path length per pair of seed vertices
///  step 3: `string` holds one pendant length per seed vertex
///  step 4: `internal` is the step-2 string, `string` the pendant lengths
///  step 5: `loops` is the 0/1 string over all vertices; `base_*` describe
///          the step 1-4 diagram the loops were attached to
struct Provenance {
  int step = 1;
  std::string seed;
  std::vector<int> string;
  std::vector<int> internal;
  std::vector<int> loops;
  int base_step = 0;
  std::vector<int> base_string;
  std::vector<int> base_internal;
};

struct GeneratedDiagram {
  BLG diagram;
  Provenance provenance;
};

/// Spreadsheet-style seed names: A_0, B_0, ..., Z_0, AA_0, ...
std::string seed_name(std::size_t index);

/// Set partitions of [q], blocks sorted by size descending (ties by least
/// element). Partitions ordered by block count, then lexicographically.
std::vector<std::vector<std::vector<int>>> set_partitions(unsigned q);

/// Step 1: one edgeless (q,0) diagram per set partition; block i is red vertex i.
std::vector<BLG> set_partition_diagrams(unsigned q);

/// Step 2: internal paths of length 0..2m between each pair of the seed's vertices.
std::vector<BLG> internal_edge_variants(const BLG& seed, int m);

/// Step 3: pendant paths of length 0..m hanging off each seed vertex.
std::vector<BLG> external_edge_variants(const BLG& seed, int m);

/// Step 4: pendant paths on the seed vertices of `internal` that have no
/// incident edge there. `origin` is the step-1 seed `internal` came from.
std::vector<BLG> mixed_variants(const BLG& internal, const BLG& origin, int m);

/// Step 5: every nonzero 0/1 string over all vertices of h, attaching loops.
std::vector<BLG> loop_variants(const BLG& h);

// String-level building blocks shared by the step functions and the stream.
BLG apply_internal_string(const BLG& seed, const std::vector<int>& lengths);
BLG apply_pendant_string(const BLG& h, int seed_vertices, const std::vector<int>& lengths);
BLG apply_loop_string(const BLG& h, const std::vector<int>& bits);

/// Seed vertices (1..c) of `h` with no incident edge.
std::vector<int> isolated_originals(const BLG& h, int seed_vertices);

using DiagramVisitor = std::function<void(const BLG&, const Provenance&)>;

/// Streams every (q,0) diagram in generation order without materializing
/// the list: step 1 for all seeds, then step 2, 3, 4, and step 5 last.
void for_each_flat_diagram(const GenConfig& cfg, const DiagramVisitor& visit);

/// Streams the diagrams unflattened to type (k,l).
void for_each_diagram(const Graph& g, unsigned k, unsigned l, const DiagramVisitor& visit);

/// Materialized form of for_each_diagram.
std::vector<GeneratedDiagram> generate_diagrams(const Graph& g, unsigned k, unsigned l);

/// Per-step and per-seed generation counts.
struct GenerationCounts {
  std::size_t total = 0;
  std::map<int, std::size_t> per_step;
  std::map<int, std::vector<std::size_t>> per_step_seed;  ///< indexed by seed index
};

GenerationCounts count_diagrams(const GenConfig& cfg);

}  // namespace autequiv
