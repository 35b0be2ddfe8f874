#include "fsig/dense_rank.hpp"

#include <omp.h>

#include <utility>

namespace fsig {

namespace {

std::uint32_t inverse(std::uint32_t a, std::uint32_t p) {
  std::uint64_t result = 1, base = a, e = p - 2;
  while (e) {
    if (e & 1) result = result * base % p;
    base = base * base % p;
    e >>= 1;
  }
  return static_cast<std::uint32_t>(result);
}

// row_i -= factor * pivot_row, from column c on.
inline void axpy(std::uint32_t* target, const std::uint32_t* pivot, std::size_t c, std::size_t cols,
                 std::uint32_t factor, std::uint32_t p) {
  const std::uint64_t neg = p - factor;
  for (std::size_t k = c; k < cols; ++k)
    if (pivot[k]) target[k] = static_cast<std::uint32_t>((target[k] + neg * pivot[k]) % p);
}

template <bool Parallel>
std::size_t eliminate(DenseMatrix& m, std::uint32_t p, int threads) {
  std::size_t rank = 0;
  for (std::size_t c = 0; c < m.cols && rank < m.rows; ++c) {
    std::size_t piv = rank;
    while (piv < m.rows && m.row(piv)[c] == 0) ++piv;
    if (piv == m.rows) continue;
    if (piv != rank)
      for (std::size_t k = c; k < m.cols; ++k) std::swap(m.row(piv)[k], m.row(rank)[k]);
    std::uint32_t* prow = m.row(rank);
    std::uint64_t inv = inverse(prow[c], p);
    for (std::size_t k = c; k < m.cols; ++k) prow[k] = static_cast<std::uint32_t>(prow[k] * inv % p);
    const auto first = static_cast<std::ptrdiff_t>(rank + 1);
    const auto last = static_cast<std::ptrdiff_t>(m.rows);
    if constexpr (Parallel) {
#pragma omp parallel for schedule(static) num_threads(threads)
      for (std::ptrdiff_t i = first; i < last; ++i) {
        std::uint32_t* r = m.row(static_cast<std::size_t>(i));
        if (r[c]) axpy(r, prow, c, m.cols, r[c], p);
      }
    } else {
      for (std::ptrdiff_t i = first; i < last; ++i) {
        std::uint32_t* r = m.row(static_cast<std::size_t>(i));
        if (r[c]) axpy(r, prow, c, m.cols, r[c], p);
      }
    }
    ++rank;
  }
  return rank;
}

}  // namespace

std::size_t rank_mod_p_serial(DenseMatrix m, std::uint32_t p) { return eliminate<false>(m, p, 1); }

std::size_t rank_mod_p(DenseMatrix m, std::uint32_t p, int threads) {
  int n = threads > 0 ? threads : omp_get_max_threads();
  if (n <= 1 || m.rows < 64) return eliminate<false>(m, p, 1);
  return eliminate<true>(m, p, n);
}

bool in_row_space(const DenseMatrix& m, const std::vector<std::uint32_t>& v, std::uint32_t p) {
  std::size_t base = rank_mod_p_serial(m, p);
  DenseMatrix ext(m.rows + 1, m.cols);
  std::copy(m.data.begin(), m.data.end(), ext.data.begin());
  std::copy(v.begin(), v.end(), ext.row(m.rows));
  return rank_mod_p_serial(std::move(ext), p) == base;
}

}  // namespace fsig
