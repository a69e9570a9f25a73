#include "autequiv/oracle_verify.hpp"

#include <algorithm>
#include <exception>

#include "autequiv/diagram_gen.hpp"
#include "autequiv/error.hpp"
#include "autequiv/exact_rank.hpp"

namespace autequiv {

OrbitBasis orbit_basis(const GroupTable& gt, unsigned k, unsigned l) {
  const auto n = static_cast<std::size_t>(gt.n);
  const std::size_t rows = ipow(n, l);
  const std::size_t cols = ipow(n, k);
  const auto ids = tuple_orbits(gt, k + l);
  OrbitBasis basis;
  for (std::size_t idx = 0; idx < ids.size(); ++idx) {
    if (ids[idx] == basis.matrices.size()) basis.matrices.emplace_back(rows, cols);
    basis.matrices[ids[idx]].flat()[idx] = 1;
  }
  return basis;
}

OrbitBasis orbit_basis(const Graph& g, unsigned k, unsigned l) {
  return orbit_basis(automorphism_group(g), k, l);
}

EquivarianceChecker::EquivarianceChecker(const GroupTable& gt, unsigned k, unsigned l,
                                         bool full_group)
    : rows_(ipow(static_cast<std::size_t>(gt.n), l)),
      cols_(ipow(static_cast<std::size_t>(gt.n), k)) {
  const std::vector<Perm> perms = full_group ? gt.elements : generating_set(gt);
  for (const Perm& s : perms) {
    if (s.is_identity()) continue;
    row_maps_.push_back(tuple_index_perm(s, l));
    col_maps_.push_back(tuple_index_perm(s, k));
  }
}

template <typename T>
bool EquivarianceChecker::invariant(std::span<const T> x) const {
  // rho_l(s) X rho_k(s)^-1 = X  <=>  X[s(I), s(J)] = X[I, J]
  for (std::size_t p = 0; p < row_maps_.size(); ++p) {
    const auto& rm = row_maps_[p];
    const auto& cm = col_maps_[p];
    for (std::size_t r = 0; r < rows_; ++r)
      for (std::size_t c = 0; c < cols_; ++c)
        if (x[rm[r] * cols_ + cm[c]] != x[r * cols_ + c]) return false;
  }
  return true;
}

bool EquivarianceChecker::operator()(const IntMatrix& x) const {
  if (x.rows() != rows_ || x.cols() != cols_)
    throw DomainError("equivariance check: matrix is " + std::to_string(x.rows()) + "x" +
                      std::to_string(x.cols()) + ", expected " + std::to_string(rows_) + "x" +
                      std::to_string(cols_));
  return invariant(x.flat());
}

bool EquivarianceChecker::operator()(std::span<const WideInt> flat) const {
  if (flat.size() != rows_ * cols_)
    throw DomainError("equivariance check: expected " + std::to_string(rows_ * cols_) +
                      " entries");
  return invariant(flat);
}

bool check_equivariance(const IntMatrix& x, const GroupTable& gt, unsigned k, unsigned l,
                        bool full_group) {
  return EquivarianceChecker(gt, k, l, full_group)(x);
}

bool check_equivariance(const HomMatrix& x, const Graph& g, bool full_group) {
  if (x.n != g.order()) throw DomainError("equivariance check: matrix and graph sizes differ");
  return check_equivariance(x.values, automorphism_group(g), x.k, x.l, full_group);
}

namespace {

void check_orbits(const GroupTable& gt, unsigned k, unsigned l, const IncrementalRank& span,
                  SpanningReport& report) {
  const auto basis = orbit_basis(gt, k, l);
  for (std::size_t i = 0; i < basis.matrices.size(); ++i)
    if (!span.in_span(basis.matrices[i].flat())) report.orbits_outside_span.push_back(i);
}

}  // namespace

SpanningReport check_spanning(const SpanningSet& ss, bool full_group) {
  const GroupTable gt = automorphism_group(ss.graph);
  const EquivarianceChecker equivariant(gt, ss.k, ss.l, full_group);
  SpanningReport report;
  report.dim = orbit_count(gt, ss.k + ss.l);
  const auto mats = ss.matrices();
  report.rank = rank_exact(mats);
  report.spanning = report.rank == report.dim;
  report.matrices_checked = mats.size();

  const auto n = static_cast<std::size_t>(ss.graph.order());
  IncrementalRank span(ipow(n, ss.k + ss.l));
  for (std::size_t i = 0; i < mats.size(); ++i) {
    if (!equivariant(mats[i])) report.equivariance_failures.push_back(i);
    span.add(mats[i].flat());
  }
  check_orbits(gt, ss.k, ss.l, span, report);
  return report;
}

SpanningReport check_spanning_stream(const Graph& g, unsigned k, unsigned l, bool full_group) {
  const GroupTable gt = automorphism_group(g);
  const EquivarianceChecker equivariant(gt, k, l, full_group);
  const HomCounter counter(g);
  SpanningReport report;
  report.dim = orbit_count(gt, k + l);
  IncrementalRank span(ipow(static_cast<std::size_t>(g.order()), k + l));

  constexpr std::size_t kChunk = 8192;
  std::vector<BLG> chunk;
  chunk.reserve(kChunk);
  std::vector<WideMatrix> mats(kChunk);
  std::vector<char> passed(kChunk);

  auto flush = [&] {
    std::exception_ptr failure;
    const auto count = static_cast<std::ptrdiff_t>(chunk.size());
#pragma omp parallel for schedule(dynamic, 64)
    for (std::ptrdiff_t i = 0; i < count; ++i) {
      try {
        mats[i] = counter.matrix_wide(chunk[i]);
        passed[i] = equivariant(std::span<const WideInt>(mats[i].data)) ? 1 : 0;
      } catch (...) {
#pragma omp critical
        if (!failure) failure = std::current_exception();
      }
    }
    if (failure) std::rethrow_exception(failure);
    for (std::size_t i = 0; i < chunk.size(); ++i) {
      if (!passed[i]) report.equivariance_failures.push_back(report.matrices_checked + i);
      // once the rank reaches dim only equivariant matrices remain to be seen
      if (span.rank() < report.dim || !passed[i])
        span.add(std::span<const WideInt>(mats[i].data));
    }
    report.matrices_checked += chunk.size();
    chunk.clear();
  };

  for_each_diagram(g, k, l, [&](const BLG& h, const Provenance&) {
    chunk.push_back(h);
    if (chunk.size() == kChunk) flush();
  });
  flush();
  report.rank = span.rank();
  report.spanning = report.rank == report.dim;
  check_orbits(gt, k, l, span, report);
  return report;
}

FunctorReport check_functor(const BLG& h1, const BLG& h2, const Graph& g) {
  const HomCounter counter(g);
  const IntMatrix x1 = counter.matrix(h1).values;
  const IntMatrix x2 = counter.matrix(h2).values;
  FunctorReport r;
  r.composable = h2.k() == h1.l();
  if (r.composable) r.product = counter.matrix(compose(h2, h1)).values == x2 * x1;
  r.kronecker = counter.matrix(tensor(h1, h2)).values == kronecker(x1, x2);
  r.transpose = counter.matrix(involution(h1)).values == x1.transpose() &&
                counter.matrix(involution(h2)).values == x2.transpose();
  return r;
}

bool check_frobenius_square(const BLG& h, const Graph& g, unsigned q, unsigned m) {
  if (q + m != h.k() + h.l())
    throw DomainError("frobenius square: (" + std::to_string(q) + "," + std::to_string(m) +
                      ") does not match the diagram's arity");
  const HomCounter counter(g);
  const HomMatrix moved = counter.matrix(frobenius_unflatten(frobenius_flatten(h), q, m));
  return moved == reshape(counter.matrix(h), q, m);
}

}  // namespace autequiv
