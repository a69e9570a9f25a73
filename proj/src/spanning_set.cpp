#include "autequiv/spanning_set.hpp"

#include <map>
#include <string>

#include "autequiv/error.hpp"
#include "autequiv/exact_rank.hpp"

namespace autequiv {

std::vector<IntMatrix> SpanningSet::matrices() const {
  std::vector<IntMatrix> out;
  out.reserve(items.size());
  for (const auto& item : items) out.push_back(item.matrix.values);
  return out;
}

namespace {

constexpr std::size_t kChunk = 4096;

}  // namespace

SpanningSet build_spanning_set(const Graph& g, unsigned k, unsigned l,
                               const BuildOptions& options) {
  SpanningSet ss;
  ss.graph = g;
  ss.k = k;
  ss.l = l;

  const auto cols = ipow(static_cast<std::size_t>(g.order()), k);
  const auto rows = ipow(static_cast<std::size_t>(g.order()), l);
  IncrementalRank basis(rows * cols);
  std::map<std::vector<std::int64_t>, std::size_t> seen;
  std::vector<BLG> chunk;
  std::vector<Provenance> chunk_prov;

  auto flush = [&] {
    const auto mats = hom_matrices(chunk, g);
    for (std::size_t i = 0; i < chunk.size(); ++i) {
      const auto flat = mats[i].values.flat();
      if (mats[i].values.is_zero()) {
        ++ss.zero_count;
        continue;
      }
      std::vector<std::int64_t> key(flat.begin(), flat.end());
      if (auto it = seen.find(key); it != seen.end()) {
        ss.shadowed.push_back({chunk_prov[i], it->second});
        continue;
      }
      if (options.reduce_to_basis && !basis.add(flat)) continue;
      seen.emplace(std::move(key), ss.items.size());
      ss.items.push_back({canonical_form(chunk[i]), chunk[i], chunk_prov[i], mats[i]});
    }
    chunk.clear();
    chunk_prov.clear();
  };

  for_each_diagram(g, k, l, [&](const BLG& h, const Provenance& p) {
    if (++ss.generated > options.max_diagrams)
      throw PolicyError("spanning set: more than " + std::to_string(options.max_diagrams) +
                        " diagrams generated; use the streaming verifier for this size");
    chunk.push_back(h);
    chunk_prov.push_back(p);
    if (chunk.size() == kChunk) flush();
  });
  flush();
  return ss;
}

RealMatrix weight_matrix(const SpanningSet& ss, std::span<const double> weights) {
  if (weights.size() != ss.items.size())
    throw DomainError("weight_matrix: " + std::to_string(weights.size()) + " weights for " +
                      std::to_string(ss.items.size()) + " items");
  const auto n = static_cast<std::size_t>(ss.graph.order());
  RealMatrix w{ipow(n, ss.l), ipow(n, ss.k), {}};
  w.data.assign(w.rows * w.cols, 0.0);
  for (std::size_t i = 0; i < weights.size(); ++i) {
    const auto flat = ss.items[i].matrix.values.flat();
    for (std::size_t e = 0; e < flat.size(); ++e)
      w.data[e] += weights[i] * static_cast<double>(flat[e]);
  }
  return w;
}

IntMatrix expand_features(const IntMatrix& x, const FeatureSpec& fs, int i, int j) {
  if (fs.d_k < 1 || fs.d_l < 1) throw DomainError("feature dimensions must be positive");
  if (i < 1 || i > fs.d_l || j < 1 || j > fs.d_k)
    throw DomainError("feature index out of range");
  const auto dl = static_cast<std::size_t>(fs.d_l);
  const auto dk = static_cast<std::size_t>(fs.d_k);
  IntMatrix out(x.rows() * dl, x.cols() * dk);
  for (std::size_t r = 0; r < x.rows(); ++r)
    for (std::size_t c = 0; c < x.cols(); ++c)
      out(r * dl + static_cast<std::size_t>(i - 1), c * dk + static_cast<std::size_t>(j - 1)) =
          x(r, c);
  return out;
}

std::vector<IntMatrix> feature_spanning_set(const SpanningSet& ss, const FeatureSpec& fs) {
  std::vector<IntMatrix> out;
  for (const auto& item : ss.items)
    for (int i = 1; i <= fs.d_l; ++i)
      for (int j = 1; j <= fs.d_k; ++j)
        out.push_back(expand_features(item.matrix.values, fs, i, j));
  return out;
}

std::vector<IntMatrix> feature_spanning_set(const Graph& g, unsigned k, unsigned l,
                                            const FeatureSpec& fs) {
  if (fs.d_k < 1 || fs.d_l < 1) throw DomainError("feature dimensions must be positive");
  return feature_spanning_set(build_spanning_set(g, k, l), fs);
}

std::vector<IntMatrix> bias_spanning_set(const Graph& g, unsigned l) {
  return build_spanning_set(g, 0, l).matrices();
}

}  // namespace autequiv
