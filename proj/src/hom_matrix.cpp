#include "autequiv/hom_matrix.hpp"

#include <algorithm>
#include <exception>
#include <limits>
#include <type_traits>
#include <string>

#include "autequiv/error.hpp"

namespace autequiv {

namespace {

// Checked arithmetic throws on overflow. The unchecked variants are only
// selected when n^|V(h)| fits the type: every intermediate value is a
// count of maps from a subset of V(h), so none can exceed that bound.
template <typename T, bool Checked>
struct Arith {
  using value_type = T;
  static T add(T a, T b) {
    if constexpr (Checked) {
      T r;
      if (__builtin_add_overflow(a, b, &r)) overflow();
      return r;
    } else {
      return a + b;
    }
  }
  static T mul(T a, T b) {
    if constexpr (Checked) {
      T r;
      if (__builtin_mul_overflow(a, b, &r)) overflow();
      return r;
    } else {
      return a * b;
    }
  }
  [[noreturn]] static void overflow() {
    throw OverflowError("homomorphism count exceeds " + std::to_string(8 * sizeof(T) - 1) +
                        " bits");
  }
};

template <typename T>
constexpr T max_value() {
  if constexpr (std::is_same_v<T, WideInt>) {
    __extension__ using U = unsigned __int128;
    return static_cast<T>(~U{0} >> 1);
  } else {
    return std::numeric_limits<T>::max();
  }
}

// Whether n^vertices <= limit.
template <typename T>
bool power_fits(int n, int vertices, T limit) {
  T p = 1;
  for (int i = 0; i < vertices; ++i) {
    if (n != 0 && p > limit / n) return false;
    p *= n;
  }
  return true;
}

// Adjacency powers A^1..A^max of the target, row-major n x n each.
template <typename T>
struct Powers {
  const T* data = nullptr;
  int max = 0;
  std::size_t nn = 0;
  const T* at(int t) const { return data + static_cast<std::size_t>(t - 1) * nn; }
};

// Weighted multigraph with vertex weights (length n) and edge weights
// (n x n, indexed [value at a][value at b]). Links that are plain walks
// of length t refer to the shared table A^t instead of owning weights.
template <typename A>
class Reducer {
 public:
  using T = typename A::value_type;

  struct Link {
    int a, b;
    bool alive;
    int power;       // > 0: weights are A^power
    std::size_t at;  // otherwise an offset into pool_
  };

  Reducer(const Graph& h, const std::vector<std::int64_t>& loop, Powers<T> powers, int n)
      : n_(n), nn_(static_cast<std::size_t>(n) * n), vertices_(h.order()), powers_(powers),
        unary_(static_cast<std::size_t>(h.order()) * n, 1),
        plain_(static_cast<std::size_t>(h.order()), true),
        incident_(static_cast<std::size_t>(h.order())), removed_(h.order(), false) {
    for (int v : h.loops()) {
      plain_[v - 1] = false;
      for (int x = 0; x < n_; ++x) unary_[(v - 1) * n_ + x] = static_cast<T>(loop[x]);
    }
    links_.reserve(h.edges().size() + static_cast<std::size_t>(vertices_));
    pool_.reserve((h.edges().size() + static_cast<std::size_t>(vertices_)) * nn_);
    for (const Edge& e : h.edges()) merge(e.u - 1, e.v - 1, 1, nullptr);
  }

  void restrict_to(int v, int value) {
    plain_[v] = false;
    for (int x = 0; x < n_; ++x)
      if (x != value) unary_[v * n_ + x] = 0;
  }

  // Sums out every unlabelled vertex of degree <= 2.
  void peel(const std::vector<bool>& labelled) {
    bool changed = true;
    std::vector<T> m(nn_);
    while (changed && scalar_ != 0) {
      changed = false;
      for (int v = 0; v < vertices_ && scalar_ != 0; ++v) {
        if (removed_[v] || labelled[v]) continue;
        int ids[2];
        const int degree = live(v, ids);
        if (degree > 2) continue;
        const T* u = &unary_[v * n_];
        if (degree == 0) {
          T s = 0;
          for (int x = 0; x < n_; ++x) s = A::add(s, u[x]);
          scalar_ = A::mul(scalar_, s);
        } else if (degree == 1) {
          Link& e = links_[ids[0]];
          const int w = other(e, v);
          for (int y = 0; y < n_; ++y) {
            T s = 0;
            for (int x = 0; x < n_; ++x)
              if (u[x] != 0) s = A::add(s, A::mul(u[x], weight(e, v, x, y)));
            unary_[w * n_ + y] = A::mul(unary_[w * n_ + y], s);
          }
          plain_[w] = false;
          e.alive = false;
        } else {
          const Link e1 = links_[ids[0]];
          const Link e2 = links_[ids[1]];
          links_[ids[0]].alive = false;
          links_[ids[1]].alive = false;
          const int a = other(e1, v);
          const int b = other(e2, v);
          if (plain_[v] && e1.power > 0 && e2.power > 0 && e1.power + e2.power <= powers_.max) {
            merge(a, b, e1.power + e2.power, nullptr);
          } else {
            std::fill(m.begin(), m.end(), T{0});
            for (int x = 0; x < n_; ++x) {
              if (u[x] == 0) continue;
              for (int y = 0; y < n_; ++y) {
                const T left = weight(e1, v, x, y);
                if (left == 0) continue;
                const T lx = A::mul(left, u[x]);
                for (int z = 0; z < n_; ++z) {
                  const T right = weight(e2, v, x, z);
                  if (right != 0) m[y * n_ + z] = A::add(m[y * n_ + z], A::mul(lx, right));
                }
              }
            }
            merge(a, b, 0, m.data());
          }
        }
        removed_[v] = true;
        changed = true;
      }
    }
  }

  int n() const { return n_; }
  int vertex_count() const { return vertices_; }
  T scalar() const { return scalar_; }
  bool removed(int v) const { return removed_[v]; }
  const T* unary(int v) const { return &unary_[v * n_]; }
  const std::vector<Link>& links() const { return links_; }
  const T* weights(const Link& e) const {
    return e.power > 0 ? powers_.at(e.power) : &pool_[e.at];
  }

  int degree(int v) const {
    int d = 0;
    for (int id : incident_[v])
      if (links_[id].alive) ++d;
    return d;
  }

 private:
  // Live degree, capped at 3; the first two link ids land in `ids`.
  int live(int v, int (&ids)[2]) const {
    int d = 0;
    for (int id : incident_[v]) {
      if (!links_[id].alive) continue;
      if (d == 2) return 3;
      ids[d++] = id;
    }
    return d;
  }

  static int other(const Link& e, int v) { return e.a == v ? e.b : e.a; }

  // weight with value x at v and y at the other endpoint
  T weight(const Link& e, int v, int x, int y) const {
    const T* w = weights(e);
    return e.a == v ? w[x * n_ + y] : w[y * n_ + x];
  }

  // Joins a-b with weights A^power, or with w (indexed [a][b]) when power
  // is 0. A parallel link absorbs the new weights entrywise.
  void merge(int a, int b, int power, const T* w) {
    const T* incoming = power > 0 ? powers_.at(power) : w;
    for (int id : incident_[a]) {
      Link& e = links_[id];
      if (!e.alive || other(e, a) != b) continue;
      if (e.power > 0) {
        const T* shared = powers_.at(e.power);
        e.at = pool_.size();
        e.power = 0;
        pool_.insert(pool_.end(), shared, shared + nn_);
      }
      for (int x = 0; x < n_; ++x)
        for (int y = 0; y < n_; ++y) {
          T& t = pool_[e.at + (e.a == a ? x * n_ + y : y * n_ + x)];
          t = A::mul(t, incoming[x * n_ + y]);
        }
      return;
    }
    std::size_t at = 0;
    if (power == 0) {
      at = pool_.size();
      pool_.insert(pool_.end(), w, w + nn_);
    }
    links_.push_back({a, b, true, power, at});
    incident_[a].push_back(static_cast<int>(links_.size()) - 1);
    incident_[b].push_back(static_cast<int>(links_.size()) - 1);
  }

  int n_;
  std::size_t nn_;
  int vertices_;
  Powers<T> powers_;
  T scalar_ = 1;
  std::vector<T> unary_;
  std::vector<bool> plain_;  // unary weight is all ones
  std::vector<std::vector<int>> incident_;
  std::vector<bool> removed_;
  std::vector<Link> links_;
  std::vector<T> pool_;
};

// Backtracking over the vertices the reducer could not eliminate.
template <typename A>
class Enumerator {
 public:
  using T = typename A::value_type;

  Enumerator(const Reducer<A>& r, std::span<const int> labelled) : r_(r), n_(r.n()) {
    std::vector<int> pos(static_cast<std::size_t>(r.vertex_count()), -1);
    for (int v : labelled) {
      pos[v] = static_cast<int>(order_.size());
      order_.push_back(v);
    }
    labelled_count_ = order_.size();
    std::vector<std::pair<int, int>> rest;
    for (int v = 0; v < r.vertex_count(); ++v)
      if (pos[v] < 0 && !r.removed(v)) rest.emplace_back(-r.degree(v), v);
    std::stable_sort(rest.begin(), rest.end());
    for (auto [d, v] : rest) {
      pos[v] = static_cast<int>(order_.size());
      order_.push_back(v);
    }
    back_.resize(order_.size());
    for (const auto& e : r.links()) {
      if (!e.alive) continue;
      const bool a_first = pos[e.a] < pos[e.b];
      const int later = a_first ? pos[e.b] : pos[e.a];
      const int earlier = a_first ? pos[e.a] : pos[e.b];
      back_[later].push_back({earlier, r.weights(e), !a_first});
    }
    value_.assign(order_.size(), 0);
  }

  std::vector<T> run() {
    std::size_t size = 1;
    for (std::size_t i = 0; i < labelled_count_; ++i) size *= static_cast<std::size_t>(n_);
    table_.assign(size, 0);
    if (r_.scalar() != 0) label(0, 0, r_.scalar());
    return std::move(table_);
  }

 private:
  struct Back {
    int earlier;
    const T* w;  // indexed [earlier][later] unless flipped
    bool flipped;
  };

  T factor(std::size_t p, int x) const {
    T f = r_.unary(order_[p])[x];
    for (const Back& b : back_[p]) {
      if (f == 0) return 0;
      const int y = value_[b.earlier];
      f = A::mul(f, b.flipped ? b.w[x * n_ + y] : b.w[y * n_ + x]);
    }
    return f;
  }

  void label(std::size_t p, std::size_t index, T acc) {
    if (p == labelled_count_) {
      table_[index] = A::mul(acc, free_sum(p));
      return;
    }
    for (int x = 0; x < n_; ++x) {
      value_[p] = x;
      const T f = factor(p, x);
      if (f != 0) label(p + 1, index * n_ + x, A::mul(acc, f));
    }
  }

  T free_sum(std::size_t p) {
    if (p == order_.size()) return 1;
    T total = 0;
    for (int x = 0; x < n_; ++x) {
      value_[p] = x;
      const T f = factor(p, x);
      if (f != 0) total = A::add(total, A::mul(f, free_sum(p + 1)));
    }
    return total;
  }

  const Reducer<A>& r_;
  int n_;
  std::vector<int> order_;
  std::size_t labelled_count_ = 0;
  std::vector<std::vector<Back>> back_;
  std::vector<int> value_;
  std::vector<T> table_;
};

// What the reducer needs from the target graph.
struct Tables {
  int n;
  const std::vector<std::int64_t>& loop;
  Powers<std::int64_t> p64;
  Powers<WideInt> p128;
  bool looped;

  template <typename T>
  Powers<T> powers() const {
    if constexpr (std::is_same_v<T, WideInt>)
      return p128;
    else
      return p64;
  }
};

template <typename A>
std::vector<typename A::value_type> run_table(const Graph& h, const std::vector<int>& zero_based,
                                              const std::vector<bool>& mask, const Tables& t) {
  Reducer<A> r(h, t.loop, t.powers<typename A::value_type>(), t.n);
  r.peel(mask);
  return Enumerator<A>(r, zero_based).run();
}

template <typename T>
std::vector<T> labelled_table(const Graph& h, std::span<const int> labelled, const Tables& t) {
  std::vector<bool> mask(static_cast<std::size_t>(h.order()), false);
  std::vector<int> zero_based;
  for (int v : labelled) {
    if (v < 1 || v > h.order() || mask[v - 1])
      throw DomainError("labelled vertices must be distinct vertices of h");
    mask[v - 1] = true;
    zero_based.push_back(v - 1);
  }
  if constexpr (!std::is_same_v<T, std::int64_t>) {
    if (power_fits<std::int64_t>(t.n, h.order(), max_value<std::int64_t>())) {
      const auto narrow = run_table<Arith<std::int64_t, false>>(h, zero_based, mask, t);
      return std::vector<T>(narrow.begin(), narrow.end());
    }
  }
  if (power_fits<T>(t.n, h.order(), max_value<T>()))
    return run_table<Arith<T, false>>(h, zero_based, mask, t);
  return run_table<Arith<T, true>>(h, zero_based, mask, t);
}

// Spreads the table over the flat n^(l+k) positions; out ++ in is the
// row-major position order.
template <typename T>
void fill_positions(const BLG& h, const Tables& tables, std::span<T> flat) {
  if (h.underlying().has_loops() && !tables.looped) {
    std::fill(flat.begin(), flat.end(), T{0});
    return;
  }
  std::vector<int> tuple = h.out();
  tuple.insert(tuple.end(), h.in().begin(), h.in().end());
  std::vector<int> labelled;
  std::vector<int> slot(static_cast<std::size_t>(h.vertex_count()), -1);
  for (int v : tuple)
    if (slot[v - 1] < 0) {
      slot[v - 1] = static_cast<int>(labelled.size());
      labelled.push_back(v);
    }
  const auto t = labelled_table<T>(h.underlying(), labelled, tables);

  const std::size_t c = labelled.size();
  if (c == tuple.size()) {
    std::copy(t.begin(), t.end(), flat.begin());
    return;
  }
  // Positions disagreeing on a repeated vertex stay zero; every table entry
  // lands on the position whose tuple entries carry its assignment.
  std::fill(flat.begin(), flat.end(), T{0});
  const auto nn = static_cast<std::size_t>(tables.n);
  std::vector<std::size_t> stride(c, 0);
  std::size_t place = 1;
  for (std::size_t p = tuple.size(); p-- > 0;) {
    stride[slot[tuple[p] - 1]] += place;
    place *= nn;
  }
  std::vector<std::size_t> digits(c, 0);
  std::size_t pos = 0;
  for (std::size_t ti = 0; ti < t.size(); ++ti) {
    flat[pos] = t[ti];
    for (std::size_t s = c; s-- > 0;) {
      if (++digits[s] < nn) {
        pos += stride[s];
        break;
      }
      pos -= stride[s] * (nn - 1);
      digits[s] = 0;
    }
  }
}

template <typename A>
std::int64_t pinned_count(const Graph& h, const Pins& pins, const Tables& t) {
  Reducer<A> r(h, t.loop, t.p64, t.n);
  for (auto [v, x] : pins) {
    if (v < 1 || v > h.order() || x < 1 || x > t.n)
      throw DomainError("pin " + std::to_string(v) + "->" + std::to_string(x) + " out of range");
    r.restrict_to(v - 1, x - 1);
  }
  r.peel(std::vector<bool>(static_cast<std::size_t>(h.order()), false));
  return Enumerator<A>(r, {}).run()[0];
}

// A^1, A^2, ... while the entries fit T, at most kMaxPower of them.
template <typename T>
int adjacency_powers(const Graph& g, std::vector<T>& out) {
  constexpr int kMaxPower = 64;
  const int n = g.order();
  const auto nn = static_cast<std::size_t>(n) * n;
  std::vector<T> a(nn);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) a[i * n + j] = g.adjacent(i + 1, j + 1) ? 1 : 0;
  out = a;
  int max = 1;
  try {
    while (max < kMaxPower) {
      std::vector<T> next(nn, 0);
      const T* prev = out.data() + (max - 1) * nn;
      for (int i = 0; i < n; ++i)
        for (int t = 0; t < n; ++t)
          if (a[i * n + t] != 0)
            for (int j = 0; j < n; ++j)
              next[i * n + j] = Arith<T, true>::add(next[i * n + j], prev[t * n + j]);
      out.insert(out.end(), next.begin(), next.end());
      ++max;
    }
  } catch (const OverflowError&) {
  }
  return max;
}

}  // namespace

HomCounter::HomCounter(const Graph& target)
    : target_(target), n_(target.order()), loop_(static_cast<std::size_t>(n_)) {
  for (int i = 0; i < n_; ++i) loop_[i] = target.has_loop(i + 1) ? 1 : 0;
  max64_ = adjacency_powers(target, powers64_);
  max128_ = adjacency_powers(target, powers128_);
}

#define AUTEQUIV_TABLES                                                               \
  Tables {                                                                            \
    n_, loop_, {powers64_.data(), max64_, static_cast<std::size_t>(n_) * n_},         \
        {powers128_.data(), max128_, static_cast<std::size_t>(n_) * n_},              \
        target_.has_loops()                                                           \
  }

std::int64_t HomCounter::count(const Graph& h, const Pins& pins) const {
  const Tables t = AUTEQUIV_TABLES;
  if (power_fits<std::int64_t>(n_, h.order(), max_value<std::int64_t>()))
    return pinned_count<Arith<std::int64_t, false>>(h, pins, t);
  return pinned_count<Arith<std::int64_t, true>>(h, pins, t);
}

std::vector<std::int64_t> HomCounter::table(const Graph& h, std::span<const int> labelled) const {
  return labelled_table<std::int64_t>(h, labelled, AUTEQUIV_TABLES);
}

HomMatrix HomCounter::matrix(const BLG& h) const {
  const auto n = static_cast<std::size_t>(n_);
  HomMatrix x{n_, h.k(), h.l(), IntMatrix(ipow(n, h.l()), ipow(n, h.k()))};
  fill_positions<std::int64_t>(h, AUTEQUIV_TABLES, x.values.flat());
  return x;
}

WideMatrix HomCounter::matrix_wide(const BLG& h) const {
  const auto n = static_cast<std::size_t>(n_);
  WideMatrix x{ipow(n, h.l()), ipow(n, h.k()), {}};
  x.data.resize(x.rows * x.cols);
  fill_positions<WideInt>(h, AUTEQUIV_TABLES, std::span<WideInt>(x.data));
  return x;
}

#undef AUTEQUIV_TABLES

std::int64_t hom_count(const Graph& h, const Graph& g, const Pins& pins) {
  return HomCounter(g).count(h, pins);
}

HomMatrix hom_matrix(const BLG& h, const Graph& g) { return HomCounter(g).matrix(h); }

std::vector<HomMatrix> hom_matrices(std::span<const BLG> diagrams, const Graph& g) {
  const HomCounter counter(g);
  std::vector<HomMatrix> out(diagrams.size());
  std::exception_ptr failure;
  const auto count = static_cast<std::ptrdiff_t>(diagrams.size());
#pragma omp parallel for schedule(dynamic, 16)
  for (std::ptrdiff_t i = 0; i < count; ++i) {
    try {
      out[i] = counter.matrix(diagrams[i]);
    } catch (...) {
#pragma omp critical
      if (!failure) failure = std::current_exception();
    }
  }
  if (failure) std::rethrow_exception(failure);
  return out;
}

HomMatrix spider(unsigned k, unsigned l, int n) {
  if (n < 0) throw DomainError("spider: negative dimension");
  const auto nn = static_cast<std::size_t>(n);
  HomMatrix x{n, k, l, IntMatrix(ipow(nn, l), ipow(nn, k))};
  if (k + l == 0) {
    x.values(0, 0) = n;
    return x;
  }
  for (std::size_t i = 0; i < nn; ++i) {
    std::size_t row = 0, col = 0;
    for (unsigned t = 0; t < l; ++t) row = row * nn + i;
    for (unsigned t = 0; t < k; ++t) col = col * nn + i;
    x.values(row, col) = 1;
  }
  return x;
}

HomMatrix swap_matrix(int n) {
  if (n < 0) throw DomainError("swap: negative dimension");
  const auto nn = static_cast<std::size_t>(n);
  HomMatrix x{n, 2, 2, IntMatrix(nn * nn, nn * nn)};
  for (std::size_t i = 0; i < nn; ++i)
    for (std::size_t j = 0; j < nn; ++j) x.values(j * nn + i, i * nn + j) = 1;
  return x;
}

HomMatrix reshape(const HomMatrix& x, unsigned q, unsigned m) {
  if (q + m != x.k + x.l)
    throw DomainError("reshape: (" + std::to_string(q) + "," + std::to_string(m) +
                      ") does not match arity " + std::to_string(x.k + x.l));
  const auto n = static_cast<std::size_t>(x.n);
  const auto flat = x.values.flat();
  return {x.n, q, m,
          IntMatrix(ipow(n, m), ipow(n, q), std::vector<std::int64_t>(flat.begin(), flat.end()))};
}

}  // namespace autequiv
