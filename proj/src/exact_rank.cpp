#include "autequiv/exact_rank.hpp"

#include <algorithm>

#include <gmpxx.h>

#include "autequiv/error.hpp"

namespace autequiv {

std::size_t rank_exact(std::span<const IntMatrix> mats) {
  if (mats.empty()) return 0;
  const std::size_t cols = mats.front().size();
  for (const IntMatrix& m : mats)
    if (m.rows() != mats.front().rows() || m.cols() != mats.front().cols())
      throw DomainError("rank_exact: matrices have different shapes");

  std::vector<std::vector<mpz_class>> a;
  a.reserve(mats.size());
  for (const IntMatrix& m : mats) {
    std::vector<mpz_class> row(cols);
    for (std::size_t c = 0; c < cols; ++c) row[c] = static_cast<long>(m.flat()[c]);
    a.push_back(std::move(row));
  }

  // Bareiss: after step r every entry below the pivot rows is an exact minor.
  const std::size_t rows = a.size();
  std::size_t rank = 0;
  mpz_class prev = 1;
  for (std::size_t col = 0; col < cols && rank < rows; ++col) {
    std::size_t pivot = rank;
    while (pivot < rows && a[pivot][col] == 0) ++pivot;
    if (pivot == rows) continue;
    std::swap(a[pivot], a[rank]);
    for (std::size_t r = rank + 1; r < rows; ++r) {
      for (std::size_t c = col + 1; c < cols; ++c) {
        a[r][c] = a[rank][col] * a[r][c] - a[r][col] * a[rank][c];
        mpz_divexact(a[r][c].get_mpz_t(), a[r][c].get_mpz_t(), prev.get_mpz_t());
      }
      a[r][col] = 0;
    }
    prev = a[rank][col];
    ++rank;
  }
  return rank;
}

struct IncrementalRank::Impl {
  std::size_t dimension;
  std::vector<std::vector<mpz_class>> rows;  // sorted by pivot
  std::vector<std::size_t> pivots;

  template <typename T>
  std::vector<mpz_class> load(std::span<const T> v) const {
    if (v.size() != dimension) throw DomainError("IncrementalRank: vector length mismatch");
    std::vector<mpz_class> x(dimension);
    for (std::size_t i = 0; i < dimension; ++i) x[i] = to_mpz(v[i]);
    return x;
  }

  static mpz_class to_mpz(std::int64_t v) { return static_cast<long>(v); }

  static mpz_class to_mpz(WideInt v) {
    const bool negative = v < 0;
    __extension__ using U = unsigned __int128;
    const U mag = negative ? U(0) - static_cast<U>(v) : static_cast<U>(v);
    mpz_class x = static_cast<unsigned long>(mag >> 64);
    x <<= 64;
    x += static_cast<unsigned long>(mag & ~std::uint64_t{0});
    return negative ? mpz_class(-x) : x;
  }

  template <typename T>
  bool add(std::span<const T> v) {
    auto x = load(v);
    const std::size_t lead = reduce(x);
    if (lead == dimension) return false;
    const auto at = std::lower_bound(pivots.begin(), pivots.end(), lead);
    const auto offset = at - pivots.begin();
    pivots.insert(at, lead);
    rows.insert(rows.begin() + offset, std::move(x));
    return true;
  }

  template <typename T>
  bool in_span(std::span<const T> v) const {
    auto x = load(v);
    return reduce(x) == dimension;
  }

  static void make_primitive(std::vector<mpz_class>& x) {
    mpz_class g = 0;
    for (const auto& e : x)
      if (e != 0) {
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), e.get_mpz_t());
        if (g == 1) return;
      }
    if (g > 1)
      for (auto& e : x) mpz_divexact(e.get_mpz_t(), e.get_mpz_t(), g.get_mpz_t());
  }

  // Eliminates every pivot column; returns the first nonzero column or dimension.
  std::size_t reduce(std::vector<mpz_class>& x) const {
    mpz_class a, b;
    for (std::size_t r = 0; r < rows.size(); ++r) {
      const std::size_t p = pivots[r];
      if (x[p] == 0) continue;
      a = rows[r][p];
      b = x[p];
      for (std::size_t c = 0; c < p; ++c)
        if (x[c] != 0) x[c] *= a;
      for (std::size_t c = p; c < dimension; ++c) x[c] = a * x[c] - b * rows[r][c];
      make_primitive(x);
    }
    for (std::size_t c = 0; c < dimension; ++c)
      if (x[c] != 0) return c;
    return dimension;
  }
};

IncrementalRank::IncrementalRank(std::size_t dimension) : impl_(std::make_unique<Impl>()) {
  impl_->dimension = dimension;
}
IncrementalRank::~IncrementalRank() = default;
IncrementalRank::IncrementalRank(IncrementalRank&&) noexcept = default;
IncrementalRank& IncrementalRank::operator=(IncrementalRank&&) noexcept = default;

std::size_t IncrementalRank::dimension() const { return impl_->dimension; }
std::size_t IncrementalRank::rank() const { return impl_->rows.size(); }

bool IncrementalRank::add(std::span<const std::int64_t> v) { return impl_->add(v); }
bool IncrementalRank::add(std::span<const WideInt> v) { return impl_->add(v); }

bool IncrementalRank::in_span(std::span<const std::int64_t> v) const { return impl_->in_span(v); }
bool IncrementalRank::in_span(std::span<const WideInt> v) const { return impl_->in_span(v); }

}  // namespace autequiv
