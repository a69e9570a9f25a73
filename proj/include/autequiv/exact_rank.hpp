#pragma once

#include <cstddef>
#include <cstdint>
#include <memory>
#include <span>
#include <vector>

#include "autequiv/int_matrix.hpp"

namespace autequiv {

/// Rank over Q of the matrices read as flattened row vectors, by
/// fraction-free (Bareiss) elimination on arbitrary-precision integers.
/// Throws DomainError if the shapes differ.
std::size_t rank_exact(std::span<const IntMatrix> mats);

/// Echelon basis over Q grown one integer vector at a time. Rows are kept
/// primitive (content divided out) to curb coefficient growth.
class IncrementalRank {
 public:
  explicit IncrementalRank(std::size_t dimension);
  ~IncrementalRank();
  IncrementalRank(IncrementalRank&&) noexcept;
  IncrementalRank& operator=(IncrementalRank&&) noexcept;

  std::size_t dimension() const;
  std::size_t rank() const;

  /// Adds v if it is outside the current span; returns whether it was.
  bool add(std::span<const std::int64_t> v);
  bool add(std::span<const WideInt> v);

  /// Exact membership test; does not modify the basis.
  bool in_span(std::span<const std::int64_t> v) const;
  bool in_span(std::span<const WideInt> v) const;

 private:
  struct Impl;
  std::unique_ptr<Impl> impl_;
};

}  // namespace autequiv
