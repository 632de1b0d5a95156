#pragma once

// Exchange matrices over J = [1, r] with an exchangeable/frozen split,
// compatible pairs and their mutations.

#include <string>
#include <vector>

#include "qbc/ibox.hpp"
#include "qbc/matrix.hpp"

namespace qbc {

// Entries b_{s,t} for s in J and t in J_ex. Stored as an r x r array whose
// frozen columns are identically zero, which keeps relabelling trivial.
class ExchangeMatrix {
 public:
  ExchangeMatrix() = default;
  ExchangeMatrix(IntMatrix full, std::vector<bool> frozen);

  int size() const { return full_.rows(); }
  bool exchangeable(int t) const;  // 1-based
  std::vector<int> exchangeable_indices() const;
  std::vector<int> frozen_indices() const;
  int entry(int s, int t) const;
  const IntMatrix& full() const { return full_; }
  const std::vector<bool>& frozen_mask() const { return frozen_; }
  // Rows over J, columns over J_ex in increasing order.
  IntMatrix rectangular() const;
  bool principal_part_skew() const;

  bool operator==(const ExchangeMatrix&) const = default;

 private:
  IntMatrix full_;
  std::vector<bool> frozen_;
};

ExchangeMatrix btilde_plus(const ColorSequence& seq);
// The full skew matrix of a chain seed indexed by chain positions.
IntMatrix skew_chain_matrix(const AdmissibleChain& chain);
ExchangeMatrix btilde_chain(const AdmissibleChain& chain);

struct CompatibilityReport {
  // Rows over J, columns over J_ex: sum_s L_{s,i} b_{s,j}.
  IntMatrix products;
  // (L B)_{ij} over the same index set; equals -products because L is skew.
  IntMatrix lb_products;
  bool compatible = false;
};
CompatibilityReport check_compatible(const IntMatrix& L, const ExchangeMatrix& B);

ExchangeMatrix mutate_B(const ExchangeMatrix& B, int k);
IntMatrix mutate_L(const IntMatrix& L, const ExchangeMatrix& B, int k);

// Relabels both the entries and the frozen split: result_{s,t} = B_{perm(s),perm(t)}.
ExchangeMatrix permuted(const ExchangeMatrix& B, const std::vector<int>& perm);

}  // namespace qbc
