#include "autequiv/perm_group.hpp"

#include <algorithm>
#include <numeric>
#include <string>
#include <unordered_set>

#include "autequiv/error.hpp"

namespace autequiv {

Perm::Perm(std::vector<int> images) : images_(std::move(images)) {
  const int n = size();
  std::vector<bool> seen(static_cast<std::size_t>(n), false);
  for (int v : images_) {
    if (v < 1 || v > n || seen[v - 1]) throw DomainError("perm: images are not a bijection on [n]");
    seen[v - 1] = true;
  }
}

Perm Perm::identity(int n) {
  std::vector<int> im(static_cast<std::size_t>(n));
  std::iota(im.begin(), im.end(), 1);
  return Perm(std::move(im));
}

Perm Perm::from_cycles(int n, const std::vector<std::vector<int>>& cycles) {
  std::vector<int> im(static_cast<std::size_t>(n));
  std::iota(im.begin(), im.end(), 1);
  for (const auto& c : cycles)
    for (std::size_t i = 0; i < c.size(); ++i) {
      if (c[i] < 1 || c[i] > n) throw DomainError("perm: cycle entry out of range");
      im[c[i] - 1] = c[(i + 1) % c.size()];
    }
  return Perm(std::move(im));
}

bool Perm::is_identity() const {
  for (int i = 0; i < size(); ++i)
    if (images_[i] != i + 1) return false;
  return true;
}

Perm Perm::inverse() const {
  std::vector<int> inv(images_.size());
  for (int i = 0; i < size(); ++i) inv[images_[i] - 1] = i + 1;
  return Perm(std::move(inv));
}

Perm operator*(const Perm& a, const Perm& b) {
  if (a.size() != b.size()) throw DomainError("perm: composing permutations of different degree");
  std::vector<int> im(static_cast<std::size_t>(a.size()));
  for (int i = 1; i <= a.size(); ++i) im[i - 1] = a(b(i));
  return Perm(std::move(im));
}

bool GroupTable::contains(const Perm& p) const {
  return std::binary_search(elements.begin(), elements.end(), p);
}

namespace {

struct AutSearch {
  const Graph& g;
  int n;
  std::vector<int> degree;
  std::vector<int> image;
  std::vector<bool> used;
  std::vector<Perm> found;

  void place(int i) {
    if (i == n) {
      found.emplace_back(image);
      return;
    }
    for (int j = 1; j <= n; ++j)
      if (!used[j - 1] && fits(i + 1, j)) {
        image[i] = j;
        used[j - 1] = true;
        place(i + 1);
        used[j - 1] = false;
      }
  }

  // vertex v (1-based, vertices 1..v-1 already placed) may map to j
  bool fits(int v, int j) const {
    if (degree[v - 1] != degree[j - 1] || g.has_loop(v) != g.has_loop(j)) return false;
    for (int u = 1; u < v; ++u)
      if (g.adjacent(u, v) != g.adjacent(image[u - 1], j)) return false;
    return true;
  }
};

}  // namespace

GroupTable automorphism_group(const Graph& g, int max_vertices) {
  const int n = g.order();
  if (n > max_vertices)
    throw PolicyError("automorphism search is limited to " + std::to_string(max_vertices) +
                      " vertices (graph has " + std::to_string(n) + ")");
  GroupTable gt{n, {}};
  if (n == 0) {
    gt.elements.push_back(Perm{});
    return gt;
  }
  std::vector<int> degree(static_cast<std::size_t>(n));
  for (int v = 1; v <= n; ++v) degree[v - 1] = g.degree(v);

  std::vector<std::vector<Perm>> by_first(static_cast<std::size_t>(n));
#pragma omp parallel for schedule(dynamic)
  for (int first = 1; first <= n; ++first) {
    AutSearch s{g, n, degree, std::vector<int>(n, 0), std::vector<bool>(n, false), {}};
    if (!s.fits(1, first)) continue;
    s.image[0] = first;
    s.used[first - 1] = true;
    s.place(1);
    by_first[first - 1] = std::move(s.found);
  }
  for (auto& part : by_first)
    for (auto& p : part) gt.elements.push_back(std::move(p));
  // depth-first in increasing image order already yields lexicographic order
  return gt;
}

GroupTable automorphism_group_reference(const Graph& g) {
  const int n = g.order();
  const IntMatrix a = adjacency_matrix(g);
  GroupTable gt{n, {}};
  std::vector<int> im(static_cast<std::size_t>(n));
  std::iota(im.begin(), im.end(), 1);
  do {
    const Perm s(im);
    const IntMatrix p = tensor_rep(s, 1);
    if (p * a == a * p) gt.elements.push_back(s);
  } while (std::next_permutation(im.begin(), im.end()));
  return gt;
}

std::vector<std::size_t> tuple_index_perm(const Perm& sigma, unsigned k) {
  const auto n = static_cast<std::size_t>(sigma.size());
  const std::size_t total = ipow(n, k);
  std::vector<std::size_t> out(total);
  std::vector<std::size_t> digits(k, 0);
  for (std::size_t idx = 0; idx < total; ++idx) {
    std::size_t mapped = 0;
    for (unsigned t = 0; t < k; ++t)
      mapped = mapped * n + static_cast<std::size_t>(sigma(static_cast<int>(digits[t]) + 1) - 1);
    out[idx] = mapped;
    for (int t = static_cast<int>(k) - 1; t >= 0; --t) {
      if (++digits[t] < n) break;
      digits[t] = 0;
    }
  }
  return out;
}

IntMatrix tensor_rep(const Perm& sigma, unsigned k) {
  const auto map = tuple_index_perm(sigma, k);
  IntMatrix m(map.size(), map.size());
  for (std::size_t i = 0; i < map.size(); ++i) m(map[i], i) = 1;
  return m;
}

namespace {

struct UnionFind {
  std::vector<std::uint32_t> parent;
  explicit UnionFind(std::size_t n) : parent(n) { std::iota(parent.begin(), parent.end(), 0u); }
  std::uint32_t find(std::uint32_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }
  void unite(std::uint32_t a, std::uint32_t b) {
    a = find(a);
    b = find(b);
    if (a != b) parent[std::max(a, b)] = std::min(a, b);
  }
};

}  // namespace

__extension__ using u128 = unsigned __int128;

std::size_t burnside_count(const GroupTable& gt, unsigned p) {
  u128 sum = 0;
  for (const Perm& s : gt.elements) {
    u128 fixed = 1;
    std::size_t fp = 0;
    for (int i = 1; i <= s.size(); ++i)
      if (s(i) == i) ++fp;
    for (unsigned t = 0; t < p; ++t) {
      if (fp != 0 && fixed > static_cast<u128>(SIZE_MAX) * SIZE_MAX / fp)
        throw OverflowError("Burnside count exceeds 128 bits");
      fixed *= fp;
    }
    sum += fixed;
  }
  if (gt.elements.empty()) throw DomainError("orbit count of an empty group table");
  if (sum % gt.elements.size() != 0)
    throw std::logic_error("Burnside sum is not divisible by the group order");
  return static_cast<std::size_t>(sum / gt.elements.size());
}

std::vector<std::uint32_t> tuple_orbits(const GroupTable& gt, unsigned p, std::size_t max_tuples) {
  const std::size_t total = ipow(static_cast<std::size_t>(gt.n), p);
  if (total > max_tuples)
    throw PolicyError("orbit enumeration over " + std::to_string(total) + " tuples exceeds bound");
  UnionFind uf(total);
  for (const Perm& s : generating_set(gt)) {
    const auto map = tuple_index_perm(s, p);
    for (std::size_t i = 0; i < total; ++i)
      uf.unite(static_cast<std::uint32_t>(i), static_cast<std::uint32_t>(map[i]));
  }
  std::vector<std::uint32_t> id(total);
  std::vector<std::uint32_t> label(total, UINT32_MAX);
  std::uint32_t next = 0;
  for (std::size_t i = 0; i < total; ++i) {
    const auto root = uf.find(static_cast<std::uint32_t>(i));
    if (label[root] == UINT32_MAX) label[root] = next++;
    id[i] = label[root];
  }
  return id;
}

std::size_t orbit_count(const GroupTable& gt, unsigned p, std::size_t max_tuples) {
  const std::size_t burnside = burnside_count(gt, p);
  const auto ids = tuple_orbits(gt, p, max_tuples);
  const std::size_t enumerated =
      ids.empty() ? 0 : static_cast<std::size_t>(*std::max_element(ids.begin(), ids.end())) + 1;
  if (burnside != enumerated)
    throw std::logic_error("orbit count mismatch: Burnside " + std::to_string(burnside) +
                           " vs enumeration " + std::to_string(enumerated));
  return burnside;
}

namespace {

std::string encode(const Perm& p) {
  std::string s(p.images().size(), '\0');
  for (std::size_t i = 0; i < s.size(); ++i) s[i] = static_cast<char>(p.images()[i]);
  return s;
}

}  // namespace

std::vector<Perm> closure(int n, const std::vector<Perm>& gens) {
  std::vector<Perm> elems{Perm::identity(n)};
  std::unordered_set<std::string> seen{encode(elems.front())};
  for (std::size_t i = 0; i < elems.size(); ++i)
    for (const Perm& gen : gens) {
      Perm next = gen * elems[i];
      if (seen.insert(encode(next)).second) elems.push_back(std::move(next));
    }
  return elems;
}

std::vector<Perm> generating_set(const GroupTable& gt) {
  std::vector<Perm> gens;
  std::unordered_set<std::string> reached{encode(Perm::identity(gt.n))};
  for (const Perm& s : gt.elements) {
    if (reached.count(encode(s))) continue;
    gens.push_back(s);
    reached.clear();
    for (const Perm& e : closure(gt.n, gens)) reached.insert(encode(e));
    if (reached.size() == gt.order()) break;
  }
  return gens;
}

}  // namespace autequiv
