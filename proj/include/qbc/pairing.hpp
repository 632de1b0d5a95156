#pragma once

// The anti-symmetric pairing lambda on sequence positions and the
// Lambda-values of commuting i-boxes built from it.

#include <vector>

#include "qbc/ibox.hpp"
#include "qbc/matrix.hpp"
#include "qbc/pbw.hpp"

namespace qbc {

// Roots beta_k = w_{<=k-1} alpha_{i_k}, prefix products w_{<=k} and the full
// lambda table, all computed at construction.
class LambdaTable {
 public:
  explicit LambdaTable(ColorSequence seq);

  const ColorSequence& seq() const { return seq_; }
  const Weight& beta(int k) const;
  // w_{<=k}; the identity for k below the first position.
  const WeylElement& prefix(int k) const;
  const WeylElement& prefix(const Position& p) const;
  int lambda(int a, int b) const;

 private:
  ColorSequence seq_;
  std::vector<Weight> beta_;
  std::vector<WeylElement> prefix_;  // prefix_[0] is the identity
  std::vector<int> lambda_;
};

int lambda(const LambdaTable& table, int a, int b);
// Sum of lambda(u, v) over the supports of two commuting i-boxes.
int lambda_box(const LambdaTable& table, const IBox& box1, const IBox& box2);
// Closed weight expression, valid when box1 nests inside box2 as
// a2^- < a1 <= b1 < b2^+.
int lambda_weight_form(const LambdaTable& table, const IBox& box1, const IBox& box2);
bool nesting_hypothesis(const ColorSequence& seq, const IBox& inner, const IBox& outer);

IntMatrix L_matrix(const LambdaTable& table, const AdmissibleChain& chain);
IntMatrix L_matrix(const AdmissibleChain& chain);
// Lambda of the chain (first, R...R) over the whole sequence.
IntMatrix lambda_sequence(const LambdaTable& table);

int L_pbw(const LambdaTable& table, const ExponentVector& x, const ExponentVector& y);

}  // namespace qbc
