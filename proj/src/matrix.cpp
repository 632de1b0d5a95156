#include "qbc/matrix.hpp"

#include <numeric>
#include <sstream>

#include "qbc/error.hpp"

namespace qbc {

IntMatrix IntMatrix::identity(int n) {
  IntMatrix m(n, n);
  for (int i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

IntMatrix IntMatrix::from_rows(const std::vector<std::vector<int>>& rows) {
  const int r = static_cast<int>(rows.size());
  const int c = r == 0 ? 0 : static_cast<int>(rows.front().size());
  IntMatrix m(r, c);
  for (int i = 0; i < r; ++i) {
    if (static_cast<int>(rows[i].size()) != c) {
      fail(ErrorCode::kShapeMismatch, "ragged matrix rows");
    }
    for (int j = 0; j < c; ++j) m(i, j) = rows[i][j];
  }
  return m;
}

IntMatrix IntMatrix::transpose() const {
  IntMatrix t(cols_, rows_);
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
  return t;
}

IntMatrix IntMatrix::operator*(const IntMatrix& rhs) const {
  if (cols_ != rhs.rows_) fail(ErrorCode::kShapeMismatch, "matrix product shape mismatch");
  IntMatrix out(rows_, rhs.cols_);
  for (int i = 0; i < rows_; ++i)
    for (int k = 0; k < cols_; ++k) {
      const int a = (*this)(i, k);
      if (a == 0) continue;
      for (int j = 0; j < rhs.cols_; ++j) out(i, j) += a * rhs(k, j);
    }
  return out;
}

std::vector<int> IntMatrix::apply(const std::vector<int>& v) const {
  if (static_cast<int>(v.size()) != cols_) {
    fail(ErrorCode::kShapeMismatch, "matrix-vector shape mismatch");
  }
  std::vector<int> out(rows_, 0);
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j) out[i] += (*this)(i, j) * v[j];
  return out;
}

bool IntMatrix::is_skew_symmetric() const {
  if (!square()) return false;
  for (int i = 0; i < rows_; ++i)
    for (int j = i; j < cols_; ++j)
      if ((*this)(i, j) != -(*this)(j, i)) return false;
  return true;
}

bool IntMatrix::is_symmetric() const {
  if (!square()) return false;
  for (int i = 0; i < rows_; ++i)
    for (int j = i + 1; j < cols_; ++j)
      if ((*this)(i, j) != (*this)(j, i)) return false;
  return true;
}

std::vector<std::vector<int>> IntMatrix::to_rows() const {
  std::vector<std::vector<int>> out(rows_, std::vector<int>(cols_));
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j) out[i][j] = (*this)(i, j);
  return out;
}

std::string IntMatrix::to_string() const {
  std::ostringstream os;
  os << '[';
  for (int i = 0; i < rows_; ++i) {
    os << (i ? ",[" : "[");
    for (int j = 0; j < cols_; ++j) os << (j ? "," : "") << (*this)(i, j);
    os << ']';
  }
  os << ']';
  return os.str();
}

IntMatrix permuted(const IntMatrix& m, const std::vector<int>& perm) {
  if (!m.square() || static_cast<int>(perm.size()) != m.rows()) {
    fail(ErrorCode::kShapeMismatch, "permutation does not match matrix size");
  }
  IntMatrix out(m.rows(), m.cols());
  for (int s = 0; s < m.rows(); ++s)
    for (int t = 0; t < m.cols(); ++t) out(s, t) = m(perm[s], perm[t]);
  return out;
}

std::vector<int> adjacent_transposition(int n, int k) {
  std::vector<int> p(n);
  std::iota(p.begin(), p.end(), 0);
  if (k < 0 || k + 1 >= n) fail(ErrorCode::kIndexOutOfRange, "transposition index out of range");
  std::swap(p[k], p[k + 1]);
  return p;
}

std::string_view error_code_name(ErrorCode code) {
  switch (code) {
    case ErrorCode::kIndexOutOfRange: return "index_out_of_range";
    case ErrorCode::kDimensionMismatch: return "dimension_mismatch";
    case ErrorCode::kInvalidType: return "invalid_type";
    case ErrorCode::kPositionOutOfRange: return "position_out_of_range";
    case ErrorCode::kEqualLetters: return "equal_letters";
    case ErrorCode::kAdjacentLetters: return "adjacent_letters";
    case ErrorCode::kPatternMismatch: return "pattern_mismatch";
    case ErrorCode::kEmptyInterval: return "empty_interval";
    case ErrorCode::kNotIBox: return "not_ibox";
    case ErrorCode::kNotMovable: return "not_movable";
    case ErrorCode::kNotCommuting: return "not_commuting";
    case ErrorCode::kHypothesisViolated: return "hypothesis_violated";
    case ErrorCode::kRangeMismatch: return "range_mismatch";
    case ErrorCode::kFrozenIndex: return "frozen_index";
    case ErrorCode::kIncompatible: return "incompatible";
    case ErrorCode::kInexactDivision: return "inexact_division";
    case ErrorCode::kShapeMismatch: return "shape_mismatch";
    case ErrorCode::kDegenerateBox: return "degenerate_box";
    case ErrorCode::kNegativeExponent: return "negative_exponent";
    case ErrorCode::kChainConstruction: return "chain_construction";
    case ErrorCode::kOverflow: return "overflow";
  }
  return "unknown";
}

}  // namespace qbc
