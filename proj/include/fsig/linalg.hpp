#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "fsig/kernels.hpp"
#include "fsig/prime_field.hpp"

namespace fsig::linalg {

/// Sparse row over F_p: strictly increasing column indices, nonzero values.
struct SparseRow {
  std::vector<std::uint64_t> cols;
  std::vector<Coeff> vals;

  bool empty() const { return cols.empty(); }
};

/// Row-major dense matrix of reduced residues.
class DenseMatrix {
 public:
  DenseMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols, 0) {}

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  std::span<std::uint32_t> row(std::size_t i) { return {data_.data() + i * cols_, cols_}; }
  std::span<const std::uint32_t> row(std::size_t i) const { return {data_.data() + i * cols_, cols_}; }
  std::uint32_t& at(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  std::uint32_t at(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }
  void swap_rows(std::size_t a, std::size_t b);

 private:
  std::size_t rows_;
  std::size_t cols_;
  std::vector<std::uint32_t> data_;
};

enum class RankStrategy { automatic, sparse, dense };

/// Dense path is chosen automatically when rows * used columns stays below this.
inline constexpr std::size_t kDenseEntryLimit = std::size_t{1} << 22;

/// Row echelon rank of the matrix whose rows are given, over F_p.
std::size_t rank_mod_p(const std::vector<SparseRow>& rows, const PrimeField& field,
                       RankStrategy strategy = RankStrategy::automatic);

/// Sparse elimination: pivot rows kept sparse, each new row reduced by
/// merges against the pivot of its leading column.
std::size_t rank_sparse(const std::vector<SparseRow>& rows, const PrimeField& field);

/// Gaussian elimination in place; row operations go through `table`.
std::size_t rank_dense(DenseMatrix& m, const PrimeField& field, const kernels::KernelTable& table);

/// Packs rows into a dense matrix over the columns they actually use.
DenseMatrix densify(const std::vector<SparseRow>& rows);

}  // namespace fsig::linalg
