#include "mfcalc/sparse_matrix.hpp"

#include <limits>
#include <set>
#include <stdexcept>

#include "mfcalc/smith.hpp"

namespace mfcalc {

SparseIntMatrix::SparseIntMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), data_(rows) {}

std::size_t SparseIntMatrix::nonzeros() const {
  std::size_t n = 0;
  for (const auto& row : data_) n += row.size();
  return n;
}

void SparseIntMatrix::add(std::size_t r, std::size_t c, const Integer& value) {
  if (r >= rows_ || c >= cols_) throw std::out_of_range("sparse matrix index");
  if (value == 0) return;
  auto [it, inserted] = data_[r].try_emplace(c, value);
  if (!inserted) {
    it->second += value;
    if (it->second == 0) data_[r].erase(it);
  }
}

Integer SparseIntMatrix::at(std::size_t r, std::size_t c) const {
  auto it = data_.at(r).find(c);
  return it == data_[r].end() ? Integer(0) : it->second;
}

IntMatrix SparseIntMatrix::to_dense() const {
  IntMatrix m(rows_, cols_);
  for (std::size_t r = 0; r < rows_; ++r) {
    for (const auto& [c, v] : data_[r]) m(r, c) = v;
  }
  return m;
}

SparseIntMatrix operator*(const SparseIntMatrix& a, const SparseIntMatrix& b) {
  if (a.cols() != b.rows()) throw std::invalid_argument("matrix shape mismatch");
  SparseIntMatrix out(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (const auto& [k, v] : a.row_data()[i]) {
      for (const auto& [j, w] : b.row_data()[k]) out.add(i, j, v * w);
    }
  }
  return out;
}

std::vector<Integer> sparse_elementary_divisors(const SparseIntMatrix& a) {
  std::vector<SparseIntMatrix::Row> rows = a.row_data();
  std::vector<std::set<std::size_t>> cols(a.cols());
  for (std::size_t r = 0; r < rows.size(); ++r) {
    for (const auto& [c, v] : rows[r]) cols[c].insert(r);
  }

  std::vector<Integer> divisors;
  for (;;) {
    // Unit pivot with the smallest Markowitz cost.
    std::size_t best_row = 0;
    std::size_t best_col = 0;
    std::size_t best_cost = std::numeric_limits<std::size_t>::max();
    for (std::size_t c = 0; c < cols.size() && best_cost > 0; ++c) {
      if (cols[c].empty()) continue;
      for (std::size_t r : cols[c]) {
        const Integer& v = rows[r].at(c);
        if (v != 1 && v != -1) continue;
        std::size_t cost = (cols[c].size() - 1) * (rows[r].size() - 1);
        if (cost < best_cost) {
          best_cost = cost;
          best_row = r;
          best_col = c;
          if (cost == 0) break;
        }
      }
    }
    if (best_cost == std::numeric_limits<std::size_t>::max()) break;

    const SparseIntMatrix::Row pivot_row = rows[best_row];
    const Integer unit = pivot_row.at(best_col);
    const std::vector<std::size_t> targets(cols[best_col].begin(), cols[best_col].end());
    for (std::size_t r : targets) {
      if (r == best_row) continue;
      // row_r -= (a_rc / unit) * row_pivot; unit is its own inverse.
      const Integer factor = rows[r].at(best_col) * unit;
      for (const auto& [c, v] : pivot_row) {
        auto [it, inserted] = rows[r].try_emplace(c, 0);
        it->second -= factor * v;
        if (it->second == 0) {
          rows[r].erase(it);
          cols[c].erase(r);
        } else if (inserted) {
          cols[c].insert(r);
        }
      }
    }
    for (const auto& [c, v] : pivot_row) cols[c].erase(best_row);
    rows[best_row].clear();
    divisors.emplace_back(1);
  }

  // Whatever is left has no unit entries; finish densely.
  std::vector<std::size_t> live_rows;
  std::vector<std::size_t> live_cols;
  std::vector<std::size_t> col_slot(a.cols(), 0);
  for (std::size_t c = 0; c < cols.size(); ++c) {
    if (!cols[c].empty()) {
      col_slot[c] = live_cols.size();
      live_cols.push_back(c);
    }
  }
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (!rows[r].empty()) live_rows.push_back(r);
  }
  if (!live_rows.empty()) {
    IntMatrix rest(live_rows.size(), live_cols.size());
    for (std::size_t i = 0; i < live_rows.size(); ++i) {
      for (const auto& [c, v] : rows[live_rows[i]]) rest(i, col_slot[c]) = v;
    }
    for (auto& d : elementary_divisors(rest)) divisors.push_back(std::move(d));
  }
  return divisors;
}

}  // namespace mfcalc
