#pragma once

#include <cstddef>
#include <map>
#include <vector>

#include "mfcalc/int_matrix.hpp"
#include "mfcalc/integer.hpp"

namespace mfcalc {

/// Row-compressed sparse integer matrix, intended for boundary-style maps
/// whose entries are mostly 0 and +-1.
class SparseIntMatrix {
 public:
  using Row = std::map<std::size_t, Integer>;

  SparseIntMatrix() = default;
  SparseIntMatrix(std::size_t rows, std::size_t cols);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  std::size_t nonzeros() const;

  /// entry(r, c) += value; entries that cancel to zero are erased.
  void add(std::size_t r, std::size_t c, const Integer& value);
  Integer at(std::size_t r, std::size_t c) const;
  const std::vector<Row>& row_data() const { return data_; }

  IntMatrix to_dense() const;
  bool is_zero() const { return nonzeros() == 0; }

  friend SparseIntMatrix operator*(const SparseIntMatrix& a,
                                   const SparseIntMatrix& b);

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Row> data_;
};

/// Elementary divisors (1s included) of a sparse matrix. Unit pivots are
/// eliminated sparsely first; whatever remains is handed to the dense
/// Smith normal form.
std::vector<Integer> sparse_elementary_divisors(const SparseIntMatrix& a);

}  // namespace mfcalc
