#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

namespace fsig {

// Row-major dense matrix over F_p.
struct DenseMatrix {
  std::size_t rows = 0;
  std::size_t cols = 0;
  std::vector<std::uint32_t> data;

  DenseMatrix() = default;
  DenseMatrix(std::size_t r, std::size_t c) : rows(r), cols(c), data(r * c, 0) {}
  std::uint32_t* row(std::size_t i) { return data.data() + i * cols; }
  const std::uint32_t* row(std::size_t i) const { return data.data() + i * cols; }
};

// Rank by Gaussian elimination; the matrix is consumed.
std::size_t rank_mod_p_serial(DenseMatrix m, std::uint32_t p);
// Same elimination with the row updates of each pivot step spread over
// OpenMP threads (`threads` <= 0 uses the OpenMP default).
std::size_t rank_mod_p(DenseMatrix m, std::uint32_t p, int threads = 0);

// Is `v` in the row space of `m`.
bool in_row_space(const DenseMatrix& m, const std::vector<std::uint32_t>& v, std::uint32_t p);

}  // namespace fsig
