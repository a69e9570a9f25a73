#include "autequiv/diagram_gen.hpp"

#include <algorithm>

#include "autequiv/error.hpp"

namespace autequiv {

GenConfig make_gen_config(const Graph& g, unsigned q) {
  return {q, longest_trail(g), g.has_loops()};
}

std::string seed_name(std::size_t index) {
  std::string letters;
  std::size_t x = index + 1;
  while (x > 0) {
    --x;
    letters.insert(letters.begin(), static_cast<char>('A' + x % 26));
    x /= 26;
  }
  return letters + "_0";
}

std::vector<std::vector<std::vector<int>>> set_partitions(unsigned q) {
  std::vector<std::vector<std::vector<int>>> out;
  if (q == 0) {
    out.emplace_back();
    return out;
  }
  // restricted growth strings
  std::vector<int> rgs(q, 0);
  while (true) {
    const int blocks = *std::max_element(rgs.begin(), rgs.end()) + 1;
    std::vector<std::vector<int>> p(static_cast<std::size_t>(blocks));
    for (unsigned i = 0; i < q; ++i) p[rgs[i]].push_back(static_cast<int>(i) + 1);
    std::stable_sort(p.begin(), p.end(),
                     [](const auto& a, const auto& b) { return a.size() > b.size(); });
    out.push_back(std::move(p));

    int i = static_cast<int>(q) - 1;
    for (; i > 0; --i) {
      const int prefix_max = *std::max_element(rgs.begin(), rgs.begin() + i);
      if (rgs[i] <= prefix_max) break;
    }
    if (i == 0) break;
    ++rgs[i];
    std::fill(rgs.begin() + i + 1, rgs.end(), 0);
  }
  std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
    if (a.size() != b.size()) return a.size() < b.size();
    return a < b;
  });
  return out;
}

std::vector<BLG> set_partition_diagrams(unsigned q) {
  std::vector<BLG> out;
  for (const auto& p : set_partitions(q)) {
    std::vector<int> in(q, 0);
    for (std::size_t b = 0; b < p.size(); ++b)
      for (int pos : p[b]) in[pos - 1] = static_cast<int>(b) + 1;
    out.emplace_back(Graph::edgeless(static_cast<int>(p.size())), std::move(in),
                     std::vector<int>{});
  }
  return out;
}

namespace {

// Calls f on every nonzero string of the given length over 0..max,
// last position fastest.
template <typename F>
void for_each_string(std::size_t length, int max, F&& f) {
  if (length == 0 || max <= 0) return;
  std::vector<int> s(length, 0);
  while (true) {
    std::size_t i = length;
    while (i > 0 && s[i - 1] == max) s[--i] = 0;
    if (i == 0) return;
    ++s[i - 1];
    f(s);
  }
}

struct Builder {
  int n;
  std::vector<std::pair<int, int>> edges;
  std::vector<int> loops;

  explicit Builder(const Graph& g) : n(g.order()), loops(g.loops()) {
    for (const Edge& e : g.edges()) edges.emplace_back(e.u, e.v);
  }

  // t edges from a to b through t-1 fresh vertices
  void path(int a, int b, int t) {
    int prev = a;
    for (int i = 1; i < t; ++i) {
      edges.emplace_back(prev, ++n);
      prev = n;
    }
    edges.emplace_back(prev, b);
  }

  // t edges hanging off a through t fresh vertices
  void pendant(int a, int t) {
    int prev = a;
    for (int i = 0; i < t; ++i) {
      edges.emplace_back(prev, ++n);
      prev = n;
    }
  }

  BLG finish(const BLG& like) const {
    return BLG(Graph::make(n, edges, loops), like.in(), like.out());
  }
};

}  // namespace

BLG apply_internal_string(const BLG& seed, const std::vector<int>& lengths) {
  const int c = seed.vertex_count();
  if (lengths.size() != static_cast<std::size_t>(c) * (c - 1) / 2)
    throw DomainError("internal string length does not match the seed's vertex pairs");
  Builder b(seed.underlying());
  std::size_t pos = 0;
  for (int i = 1; i <= c; ++i)
    for (int j = i + 1; j <= c; ++j, ++pos)
      if (lengths[pos] > 0) b.path(i, j, lengths[pos]);
  return b.finish(seed);
}

BLG apply_pendant_string(const BLG& h, int seed_vertices, const std::vector<int>& lengths) {
  if (lengths.size() != static_cast<std::size_t>(seed_vertices) ||
      seed_vertices > h.vertex_count())
    throw DomainError("pendant string length does not match the seed vertices");
  Builder b(h.underlying());
  for (int v = 1; v <= seed_vertices; ++v)
    if (lengths[v - 1] > 0) b.pendant(v, lengths[v - 1]);
  return b.finish(h);
}

BLG apply_loop_string(const BLG& h, const std::vector<int>& bits) {
  if (bits.size() != static_cast<std::size_t>(h.vertex_count()))
    throw DomainError("loop string length does not match the vertex count");
  Builder b(h.underlying());
  for (int v = 1; v <= h.vertex_count(); ++v)
    if (bits[v - 1]) b.loops.push_back(v);
  return b.finish(h);
}

std::vector<int> isolated_originals(const BLG& h, int seed_vertices) {
  std::vector<int> out;
  for (int v = 1; v <= seed_vertices; ++v)
    if (h.underlying().degree(v) == 0 && !h.underlying().has_loop(v)) out.push_back(v);
  return out;
}

std::vector<BLG> internal_edge_variants(const BLG& seed, int m) {
  std::vector<BLG> out;
  const int c = seed.vertex_count();
  for_each_string(static_cast<std::size_t>(c) * (c - 1) / 2, 2 * m,
                  [&](const std::vector<int>& s) { out.push_back(apply_internal_string(seed, s)); });
  return out;
}

std::vector<BLG> external_edge_variants(const BLG& seed, int m) {
  std::vector<BLG> out;
  const int c = seed.vertex_count();
  for_each_string(static_cast<std::size_t>(c), m, [&](const std::vector<int>& s) {
    out.push_back(apply_pendant_string(seed, c, s));
  });
  return out;
}

namespace {

template <typename F>
void for_each_mixed(const BLG& internal, int c, int m, F&& f) {
  const auto originals = isolated_originals(internal, c);
  for_each_string(originals.size(), m, [&](const std::vector<int>& s) {
    std::vector<int> lengths(static_cast<std::size_t>(c), 0);
    for (std::size_t i = 0; i < originals.size(); ++i) lengths[originals[i] - 1] = s[i];
    f(apply_pendant_string(internal, c, lengths), lengths);
  });
}

}  // namespace

std::vector<BLG> mixed_variants(const BLG& internal, const BLG& origin, int m) {
  std::vector<BLG> out;
  for_each_mixed(internal, origin.vertex_count(), m,
                 [&](BLG h, const std::vector<int>&) { out.push_back(std::move(h)); });
  return out;
}

std::vector<BLG> loop_variants(const BLG& h) {
  std::vector<BLG> out;
  for_each_string(static_cast<std::size_t>(h.vertex_count()), 1,
                  [&](const std::vector<int>& s) { out.push_back(apply_loop_string(h, s)); });
  return out;
}

namespace {

using SeededVisitor = std::function<void(const BLG&, const Provenance&, std::size_t)>;

// Steps 1-4 in generation order.
void for_each_base(const GenConfig& cfg, const SeededVisitor& visit) {
  const auto seeds = set_partition_diagrams(cfg.q);
  for (std::size_t i = 0; i < seeds.size(); ++i) {
    Provenance p;
    p.step = 1;
    p.seed = seed_name(i);
    visit(seeds[i], p, i);
  }
  if (cfg.m < 1) return;

  for (std::size_t i = 0; i < seeds.size(); ++i) {
    const int c = seeds[i].vertex_count();
    for_each_string(static_cast<std::size_t>(c) * (c - 1) / 2, 2 * cfg.m,
                    [&](const std::vector<int>& s) {
                      Provenance p;
                      p.step = 2;
                      p.seed = seed_name(i);
                      p.string = s;
                      visit(apply_internal_string(seeds[i], s), p, i);
                    });
  }
  for (std::size_t i = 0; i < seeds.size(); ++i) {
    const int c = seeds[i].vertex_count();
    for_each_string(static_cast<std::size_t>(c), cfg.m, [&](const std::vector<int>& s) {
      Provenance p;
      p.step = 3;
      p.seed = seed_name(i);
      p.string = s;
      visit(apply_pendant_string(seeds[i], c, s), p, i);
    });
  }
  for (std::size_t i = 0; i < seeds.size(); ++i) {
    const int c = seeds[i].vertex_count();
    for_each_string(static_cast<std::size_t>(c) * (c - 1) / 2, 2 * cfg.m,
                    [&](const std::vector<int>& s) {
                      const BLG internal = apply_internal_string(seeds[i], s);
                      for_each_mixed(internal, c, cfg.m,
                                     [&](const BLG& h, const std::vector<int>& lengths) {
                                       Provenance p;
                                       p.step = 4;
                                       p.seed = seed_name(i);
                                       p.internal = s;
                                       p.string = lengths;
                                       visit(h, p, i);
                                     });
                    });
  }
}

void for_each_flat_seeded(const GenConfig& cfg, const SeededVisitor& visit) {
  for_each_base(cfg, visit);
  if (!cfg.has_loops) return;
  for_each_base(cfg, [&](const BLG& base, const Provenance& bp, std::size_t seed) {
    for_each_string(static_cast<std::size_t>(base.vertex_count()), 1,
                    [&](const std::vector<int>& bits) {
                      Provenance p;
                      p.step = 5;
                      p.seed = bp.seed;
                      p.loops = bits;
                      p.base_step = bp.step;
                      p.base_string = bp.string;
                      p.base_internal = bp.internal;
                      visit(apply_loop_string(base, bits), p, seed);
                    });
  });
}

}  // namespace

void for_each_flat_diagram(const GenConfig& cfg, const DiagramVisitor& visit) {
  for_each_flat_seeded(cfg, [&](const BLG& h, const Provenance& p, std::size_t) { visit(h, p); });
}

void for_each_diagram(const Graph& g, unsigned k, unsigned l, const DiagramVisitor& visit) {
  for_each_flat_diagram(make_gen_config(g, k + l), [&](const BLG& h, const Provenance& p) {
    visit(frobenius_unflatten(h, k, l), p);
  });
}

std::vector<GeneratedDiagram> generate_diagrams(const Graph& g, unsigned k, unsigned l) {
  std::vector<GeneratedDiagram> out;
  for_each_diagram(g, k, l,
                   [&](const BLG& h, const Provenance& p) { out.push_back({h, p}); });
  return out;
}

GenerationCounts count_diagrams(const GenConfig& cfg) {
  GenerationCounts counts;
  const std::size_t seeds = set_partitions(cfg.q).size();
  for_each_flat_seeded(cfg, [&](const BLG&, const Provenance& p, std::size_t seed) {
    ++counts.total;
    ++counts.per_step[p.step];
    auto& row = counts.per_step_seed[p.step];
    if (row.empty()) row.assign(seeds, 0);
    ++row[seed];
  });
  return counts;
}

}  // namespace autequiv
