#include "fsig/linalg.hpp"

#include <algorithm>
#include <unordered_map>
#include <utility>

namespace fsig::linalg {

void DenseMatrix::swap_rows(std::size_t a, std::size_t b) {
  if (a == b) return;
  std::swap_ranges(data_.begin() + static_cast<std::ptrdiff_t>(a * cols_),
                   data_.begin() + static_cast<std::ptrdiff_t>((a + 1) * cols_),
                   data_.begin() + static_cast<std::ptrdiff_t>(b * cols_));
}

namespace {

// Column ids remapped to 0..k-1 in increasing order.
std::pair<std::vector<SparseRow>, std::size_t> compress(const std::vector<SparseRow>& rows) {
  std::vector<std::uint64_t> used;
  for (const auto& r : rows) used.insert(used.end(), r.cols.begin(), r.cols.end());
  std::sort(used.begin(), used.end());
  used.erase(std::unique(used.begin(), used.end()), used.end());
  std::unordered_map<std::uint64_t, std::uint64_t> index;
  index.reserve(used.size());
  for (std::size_t k = 0; k < used.size(); ++k) index.emplace(used[k], k);
  std::vector<SparseRow> out;
  out.reserve(rows.size());
  for (const auto& r : rows) {
    if (r.empty()) continue;
    SparseRow c;
    c.vals = r.vals;
    c.cols.reserve(r.cols.size());
    for (auto col : r.cols) c.cols.push_back(index.at(col));
    out.push_back(std::move(c));
  }
  return {std::move(out), used.size()};
}

// a - c * b, both sorted.
SparseRow sub_scaled(const SparseRow& a, const SparseRow& b, Coeff c, const PrimeField& field) {
  SparseRow out;
  out.cols.reserve(a.cols.size() + b.cols.size());
  out.vals.reserve(a.cols.size() + b.cols.size());
  std::size_t i = 0, j = 0;
  while (i < a.cols.size() || j < b.cols.size()) {
    if (j == b.cols.size() || (i < a.cols.size() && a.cols[i] < b.cols[j])) {
      out.cols.push_back(a.cols[i]);
      out.vals.push_back(a.vals[i]);
      ++i;
    } else if (i == a.cols.size() || b.cols[j] < a.cols[i]) {
      out.cols.push_back(b.cols[j]);
      out.vals.push_back(field.neg(field.mul(c, b.vals[j])));
      ++j;
    } else {
      const Coeff v = field.sub(a.vals[i], field.mul(c, b.vals[j]));
      if (v != 0) {
        out.cols.push_back(a.cols[i]);
        out.vals.push_back(v);
      }
      ++i;
      ++j;
    }
  }
  return out;
}

}  // namespace

DenseMatrix densify(const std::vector<SparseRow>& rows) {
  auto [compressed, ncols] = compress(rows);
  DenseMatrix m(compressed.size(), ncols);
  for (std::size_t i = 0; i < compressed.size(); ++i) {
    const auto& r = compressed[i];
    for (std::size_t k = 0; k < r.cols.size(); ++k) m.at(i, r.cols[k]) = r.vals[k];
  }
  return m;
}

std::size_t rank_sparse(const std::vector<SparseRow>& rows, const PrimeField& field) {
  auto [compressed, ncols] = compress(rows);
  std::vector<std::int64_t> pivot_of(ncols, -1);
  std::vector<SparseRow> pivots;
  for (auto& row : compressed) {
    SparseRow r = std::move(row);
    while (!r.empty()) {
      const auto lead = r.cols.front();
      const std::int64_t p = pivot_of[lead];
      if (p < 0) {
        const Coeff inv = field.inv(r.vals.front());
        for (auto& v : r.vals) v = field.mul(v, inv);
        pivot_of[lead] = static_cast<std::int64_t>(pivots.size());
        pivots.push_back(std::move(r));
        break;
      }
      r = sub_scaled(r, pivots[static_cast<std::size_t>(p)], r.vals.front(), field);
    }
  }
  return pivots.size();
}

std::size_t rank_dense(DenseMatrix& m, const PrimeField& field, const kernels::KernelTable& table) {
  const std::uint32_t p = field.characteristic();
  const kernels::KernelTable& k = p <= table.max_modulus ? table : kernels::table_for(kernels::Isa::scalar);
  std::size_t rank = 0;
  for (std::size_t c = 0; c < m.cols() && rank < m.rows(); ++c) {
    std::size_t piv = rank;
    while (piv < m.rows() && m.at(piv, c) == 0) ++piv;
    if (piv == m.rows()) continue;
    m.swap_rows(rank, piv);
    auto prow = m.row(rank).subspan(c);
    k.scale_mod(prow, field.inv(prow[0]), p);
    for (std::size_t i = rank + 1; i < m.rows(); ++i) {
      const std::uint32_t v = m.at(i, c);
      if (v == 0) continue;
      k.axpy_mod(m.row(i).subspan(c), prow, field.neg(v), p);
    }
    ++rank;
  }
  return rank;
}

std::size_t rank_mod_p(const std::vector<SparseRow>& rows, const PrimeField& field,
                       RankStrategy strategy) {
  if (strategy == RankStrategy::automatic) {
    std::size_t nonempty = 0;
    std::size_t max_col_guess = 0;
    std::vector<std::uint64_t> used;
    for (const auto& r : rows) {
      if (r.empty()) continue;
      ++nonempty;
      used.insert(used.end(), r.cols.begin(), r.cols.end());
    }
    std::sort(used.begin(), used.end());
    max_col_guess = static_cast<std::size_t>(std::unique(used.begin(), used.end()) - used.begin());
    strategy = nonempty * max_col_guess <= kDenseEntryLimit ? RankStrategy::dense : RankStrategy::sparse;
  }
  if (strategy == RankStrategy::sparse) return rank_sparse(rows, field);
  DenseMatrix m = densify(rows);
  return rank_dense(m, field, kernels::for_modulus(field.characteristic()));
}

}  // namespace fsig::linalg
