#pragma once

#include <cstddef>
#include <string>
#include <vector>

namespace qbc {

// Dense row-major integer matrix. Indices are 0-based here; the algebraic
// modules translate from the 1-based index sets they expose.
class IntMatrix {
 public:
  IntMatrix() = default;
  IntMatrix(int rows, int cols, int fill = 0)
      : rows_(rows), cols_(cols), data_(static_cast<std::size_t>(rows) * cols, fill) {}

  static IntMatrix identity(int n);
  static IntMatrix from_rows(const std::vector<std::vector<int>>& rows);

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  bool square() const { return rows_ == cols_; }

  int& operator()(int i, int j) { return data_[static_cast<std::size_t>(i) * cols_ + j]; }
  int operator()(int i, int j) const { return data_[static_cast<std::size_t>(i) * cols_ + j]; }

  IntMatrix transpose() const;
  IntMatrix operator*(const IntMatrix& rhs) const;
  std::vector<int> apply(const std::vector<int>& v) const;

  bool is_skew_symmetric() const;
  bool is_symmetric() const;

  std::vector<std::vector<int>> to_rows() const;
  std::string to_string() const;

  bool operator==(const IntMatrix&) const = default;

 private:
  int rows_ = 0;
  int cols_ = 0;
  std::vector<int> data_;
};

// Relabels a square matrix: result(s, t) = m(perm[s], perm[t]).
IntMatrix permuted(const IntMatrix& m, const std::vector<int>& perm);

// The transposition of k and k + 1 on [0, n) as a permutation vector.
std::vector<int> adjacent_transposition(int n, int k);

}  // namespace qbc
