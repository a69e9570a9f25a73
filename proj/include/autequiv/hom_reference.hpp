#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "autequiv/bilabelled.hpp"
#include "autequiv/hom_matrix.hpp"

/// Serial reference implementations kept for tests and benchmarks. They
/// enumerate every map V(h) -> V(g) and share no code with HomCounter.
namespace autequiv::reference {

std::int64_t hom_count_naive(const Graph& h, const Graph& g, const Pins& pins = {});

/// Entry (I,J) is the number of total maps phi with phi(out) = I, phi(in) = J.
HomMatrix hom_matrix_naive(const BLG& h, const Graph& g);

/// Serial batch counterpart of hom_matrices, using HomCounter per diagram.
std::vector<HomMatrix> hom_matrices_serial(std::span<const BLG> diagrams, const Graph& g);

}  // namespace autequiv::reference
