#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "autequiv/graph.hpp"
#include "autequiv/int_matrix.hpp"

namespace autequiv {

/// A permutation of [n], stored as 1-based images: images()[i-1] = sigma(i).
class Perm {
 public:
  Perm() = default;
  /// Throws DomainError unless `images` is a bijection on [n].
  explicit Perm(std::vector<int> images);

  static Perm identity(int n);
  /// Cycle notation helper, e.g. from_cycles(4, {{1,4,2,3}}).
  static Perm from_cycles(int n, const std::vector<std::vector<int>>& cycles);

  int size() const { return static_cast<int>(images_.size()); }
  int operator()(int i) const { return images_[i - 1]; }
  const std::vector<int>& images() const { return images_; }

  bool is_identity() const;
  Perm inverse() const;

  friend auto operator<=>(const Perm&, const Perm&) = default;

 private:
  std::vector<int> images_;
};

/// (a * b)(i) = a(b(i)).
Perm operator*(const Perm& a, const Perm& b);

/// The full automorphism group: identity first, then lexicographic by images.
struct GroupTable {
  int n = 0;
  std::vector<Perm> elements;

  std::size_t order() const { return elements.size(); }
  bool contains(const Perm& p) const;
};

inline constexpr int kDefaultAutomorphismBound = 10;

/// All permutations sigma with sigma A_G = A_G sigma. Backtracking search
/// pruned by degree, loop flags, and adjacency to already-placed vertices;
/// the first-image choices are searched in parallel.
/// Throws PolicyError when n exceeds `max_vertices`.
GroupTable automorphism_group(const Graph& g, int max_vertices = kDefaultAutomorphismBound);

/// Serial reference: filters all n! permutations by sigma A = A sigma.
GroupTable automorphism_group_reference(const Graph& g);

/// Index map of the tensor action: position of sigma(I) for each tuple
/// index I in [n]^k (first coordinate most significant).
std::vector<std::size_t> tuple_index_perm(const Perm& sigma, unsigned k);

/// rho_k(sigma): the n^k x n^k permutation matrix sending e_I to e_{sigma(I)}.
IntMatrix tensor_rep(const Perm& sigma, unsigned k);

/// Orbits of the coordinatewise action on [n]^p. Burnside's count and an
/// explicit union-find enumeration are both computed; a disagreement is a
/// std::logic_error. Throws PolicyError if n^p exceeds `max_tuples`.
std::size_t orbit_count(const GroupTable& gt, unsigned p, std::size_t max_tuples = 50'000'000);

/// Burnside's count alone (no enumeration), usable for large p.
std::size_t burnside_count(const GroupTable& gt, unsigned p);

/// Orbit id of every tuple of [n]^p; ids numbered by first appearance.
std::vector<std::uint32_t> tuple_orbits(const GroupTable& gt, unsigned p,
                                        std::size_t max_tuples = 50'000'000);

/// Greedy generating set: scan elements in table order, keep each one not
/// already in the closure of the kept ones.
std::vector<Perm> generating_set(const GroupTable& gt);

/// Closure of a set of permutations of [n] under composition.
std::vector<Perm> closure(int n, const std::vector<Perm>& gens);

}  // namespace autequiv
