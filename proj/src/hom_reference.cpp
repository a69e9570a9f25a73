#include "autequiv/hom_reference.hpp"

#include <string>

#include "autequiv/error.hpp"

namespace autequiv::reference {

namespace {

bool is_hom(const Graph& h, const Graph& g, const std::vector<int>& phi) {
  for (const Edge& e : h.edges())
    if (!g.adjacent(phi[e.u - 1], phi[e.v - 1])) return false;
  for (int v : h.loops())
    if (!g.has_loop(phi[v - 1])) return false;
  return true;
}

// Visits every map [m] -> [n] as a 1-based image vector.
template <typename F>
void for_each_map(int m, int n, F&& f) {
  if (m > 0 && n == 0) return;
  std::vector<int> phi(static_cast<std::size_t>(m), 1);
  while (true) {
    f(phi);
    int i = m - 1;
    while (i >= 0 && phi[i] == n) phi[i--] = 1;
    if (i < 0) return;
    ++phi[i];
  }
}

}  // namespace

std::int64_t hom_count_naive(const Graph& h, const Graph& g, const Pins& pins) {
  for (auto [v, x] : pins)
    if (v < 1 || v > h.order() || x < 1 || x > g.order())
      throw DomainError("pin " + std::to_string(v) + "->" + std::to_string(x) + " out of range");
  std::int64_t count = 0;
  for_each_map(h.order(), g.order(), [&](const std::vector<int>& phi) {
    for (auto [v, x] : pins)
      if (phi[v - 1] != x) return;
    if (is_hom(h, g, phi)) ++count;
  });
  return count;
}

HomMatrix hom_matrix_naive(const BLG& h, const Graph& g) {
  const auto n = static_cast<std::size_t>(g.order());
  HomMatrix x{g.order(), h.k(), h.l(), IntMatrix(ipow(n, h.l()), ipow(n, h.k()))};
  for_each_map(h.vertex_count(), g.order(), [&](const std::vector<int>& phi) {
    if (!is_hom(h.underlying(), g, phi)) return;
    std::size_t row = 0, col = 0;
    for (int v : h.out()) row = row * n + static_cast<std::size_t>(phi[v - 1] - 1);
    for (int v : h.in()) col = col * n + static_cast<std::size_t>(phi[v - 1] - 1);
    ++x.values(row, col);
  });
  return x;
}

std::vector<HomMatrix> hom_matrices_serial(std::span<const BLG> diagrams, const Graph& g) {
  const HomCounter counter(g);
  std::vector<HomMatrix> out;
  out.reserve(diagrams.size());
  for (const BLG& h : diagrams) out.push_back(counter.matrix(h));
  return out;
}

}  // namespace autequiv::reference
