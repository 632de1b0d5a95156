#pragma once

// PBW exponent vectors: the bi-lexicographic order and the transforms that
// accompany commutation and braid moves of the underlying sequence.

#include <map>
#include <string>
#include <vector>

#include "qbc/ibox.hpp"

namespace qbc {

// Nonnegative entries indexed by sequence positions; zeros are not stored.
class ExponentVector {
 public:
  ExponentVector() = default;
  static ExponentVector from_dense(const std::vector<int>& values, int offset = 1);

  int get(int k) const;
  void set(int k, int value);
  const std::map<int, int>& entries() const { return entries_; }
  std::vector<int> to_dense(int first, int last) const;
  bool operator==(const ExponentVector&) const = default;

 private:
  std::map<int, int> entries_;
};

struct BilexRelation {
  bool eq = false;
  bool lt_r = false;  // first difference from the left is smaller
  bool lt_l = false;  // first difference from the right is smaller
  bool lt() const { return lt_r && lt_l; }
  std::string to_string() const;
};

BilexRelation bilex_compare(const ExponentVector& x, const ExponentVector& y);

ExponentVector gamma_transform(const ColorSequence& seq, const ExponentVector& x, int k);
ExponentVector beta_transform(const ColorSequence& seq, const ExponentVector& x, int k);
// The same transforms on bare exponent data, when the caller vouches for the
// legality of the move.
ExponentVector gamma_transform(const ExponentVector& x, int k);
ExponentVector beta_transform(const ExponentVector& x, int k);

}  // namespace qbc
