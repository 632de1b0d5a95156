#pragma once

// Quantum and classical seeds, seed mutation, cluster monomials, T-system
// verification and positivity sweeps.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "qbc/exchange.hpp"
#include "qbc/ibox.hpp"
#include "qbc/laurent.hpp"
#include "qbc/qtorus.hpp"

namespace qbc {

// Cluster variables are held in the coordinates of the initial torus; the
// current L only fixes normalizations.
class QuantumSeed {
 public:
  QuantumSeed(const IntMatrix& L, const ExchangeMatrix& B);

  int size() const { return B_.size(); }
  const TorusElement::Matrix& initial_matrix() const { return L0_; }
  const std::vector<TorusElement>& variables() const { return vars_; }
  const TorusElement& variable(int j) const { return vars_.at(j - 1); }
  const IntMatrix& L() const { return L_; }
  const ExchangeMatrix& B() const { return B_; }
  const std::vector<int>& history() const { return history_; }

  bool same_cluster(const QuantumSeed& o) const { return vars_ == o.vars_ && L_ == o.L_ && B_ == o.B_; }

 private:
  friend QuantumSeed mutate(const QuantumSeed& seed, int k);
  TorusElement::Matrix L0_;
  std::vector<TorusElement> vars_;
  IntMatrix L_;
  ExchangeMatrix B_;
  std::vector<int> history_;
};

QuantumSeed initial_seed(const AdmissibleChain& chain);
QuantumSeed mutate(const QuantumSeed& seed, int k);
// t^{(1/2) sum_{i>j} a_i a_j L_ij} Z_1^{a_1} ... Z_n^{a_n} with the current L.
TorusElement cluster_monomial(const QuantumSeed& seed, const std::vector<int>& a);
// Z_i Z_j = t^{L_ij} Z_j Z_i for all pairs under the current L.
bool quasi_commuting(const QuantumSeed& seed);

struct ClassicalSeed {
  std::vector<Laurent> vars;
  ExchangeMatrix B;
};

ClassicalSeed classical_seed(const AdmissibleChain& chain);
ClassicalSeed classical_mutate(const ClassicalSeed& seed, int k);

bool laurent_positive(const TorusElement& x);

struct TSystemReport {
  TSystemReport(IBox b, AdmissibleChain c, const TorusElement::Matrix& L)
      : box(b), chain(std::move(c)), quantum_lhs(L), quantum_rhs(L) {}

  IBox box;
  AdmissibleChain chain;
  int k0 = 0;
  IBox mutated_box;  // [a^+, b]
  IBox partner_box;  // [a, b^-]
  // Chain indices of [a,b], [a^+,b^-] (0 when empty) and of the frozen
  // factors [a(j)^+, b(j)^-] for the neighbours j that occur in the range.
  int whole_index = 0;
  int inner_index = 0;
  std::vector<int> neighbour_colors;
  std::vector<int> neighbour_indices;
  std::vector<IBox> neighbour_boxes;

  Laurent classical_lhs;
  Laurent classical_rhs;
  TorusElement quantum_lhs;
  TorusElement quantum_rhs;
  bool classical_pass = false;
  bool quantum_pass = false;
  bool bar_invariant = false;
  bool specialization_pass = false;

  bool pass() const { return classical_pass && quantum_pass && bar_invariant && specialization_pass; }
};

// The chain used for the T-system at [a,b]: grown rightwards from a+1 to b,
// then one step left to reach [a,b], then out to the ends of the sequence.
AdmissibleChain tsystem_chain(const ColorSequence& seq, const IBox& box);
TSystemReport verify_tsystem(const ColorSequence& seq, const IBox& box);

}  // namespace qbc
