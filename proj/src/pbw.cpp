#include "qbc/pbw.hpp"

#include <algorithm>
#include <set>

#include "qbc/error.hpp"

namespace qbc {

ExponentVector ExponentVector::from_dense(const std::vector<int>& values, int offset) {
  ExponentVector x;
  for (std::size_t i = 0; i < values.size(); ++i) x.set(offset + static_cast<int>(i), values[i]);
  return x;
}

int ExponentVector::get(int k) const {
  const auto it = entries_.find(k);
  return it == entries_.end() ? 0 : it->second;
}

void ExponentVector::set(int k, int value) {
  if (value < 0) fail(ErrorCode::kNegativeExponent, "negative exponent at " + std::to_string(k));
  if (value == 0) {
    entries_.erase(k);
  } else {
    entries_[k] = value;
  }
}

std::vector<int> ExponentVector::to_dense(int first, int last) const {
  for (const auto& [k, v] : entries_) {
    if (k < first || k > last) fail(ErrorCode::kPositionOutOfRange, "support outside the window");
  }
  std::vector<int> out;
  for (int k = first; k <= last; ++k) out.push_back(get(k));
  return out;
}

std::string BilexRelation::to_string() const {
  if (eq) return "eq";
  if (lt()) return "lt_both";
  if (lt_r) return "lt_r";
  if (lt_l) return "lt_l";
  return "none";
}

BilexRelation bilex_compare(const ExponentVector& x, const ExponentVector& y) {
  std::set<int> diffs;
  for (const auto& [k, v] : x.entries())
    if (y.get(k) != v) diffs.insert(k);
  for (const auto& [k, v] : y.entries())
    if (x.get(k) != v) diffs.insert(k);
  BilexRelation rel;
  if (diffs.empty()) {
    rel.eq = true;
    return rel;
  }
  const int left = *diffs.begin();
  const int right = *diffs.rbegin();
  rel.lt_r = x.get(left) < y.get(left);
  rel.lt_l = x.get(right) < y.get(right);
  return rel;
}

ExponentVector gamma_transform(const ColorSequence& seq, const ExponentVector& x, int k) {
  seq.check_position(k);
  seq.check_position(k + 1);
  const int d = seq.datum().distance(seq.color(k), seq.color(k + 1));
  if (d == 0) fail(ErrorCode::kEqualLetters, "commutation at " + std::to_string(k) + " on equal colors");
  if (d == 1) fail(ErrorCode::kAdjacentLetters, "commutation at " + std::to_string(k) + " on adjacent colors");
  return gamma_transform(x, k);
}

ExponentVector gamma_transform(const ExponentVector& x, int k) {
  ExponentVector out = x;
  out.set(k, x.get(k + 1));
  out.set(k + 1, x.get(k));
  return out;
}

ExponentVector beta_transform(const ColorSequence& seq, const ExponentVector& x, int k) {
  seq.check_position(k);
  seq.check_position(k + 2);
  if (seq.color(k) != seq.color(k + 2) || seq.datum().distance(seq.color(k), seq.color(k + 1)) != 1) {
    fail(ErrorCode::kPatternMismatch, "no braid pattern at " + std::to_string(k));
  }
  return beta_transform(x, k);
}

ExponentVector beta_transform(const ExponentVector& x, int k) {
  const int a0 = x.get(k);
  const int a1 = x.get(k + 1);
  const int a2 = x.get(k + 2);
  const int m = std::min(a0, a2);
  ExponentVector out = x;
  out.set(k, a1 + a2 - m);
  out.set(k + 1, m);
  out.set(k + 2, a1 + a0 - m);
  return out;
}

}  // namespace qbc
