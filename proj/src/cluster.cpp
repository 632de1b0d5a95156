#include "qbc/cluster.hpp"

#include <algorithm>

#include "qbc/error.hpp"
#include "qbc/pairing.hpp"

namespace qbc {

QuantumSeed::QuantumSeed(const IntMatrix& L, const ExchangeMatrix& B)
    : L0_(TorusElement::make_matrix(L)), L_(L), B_(B) {
  if (!check_compatible(L, B).compatible) {
    fail(ErrorCode::kIncompatible, "initial pair (L, B) is not compatible");
  }
  for (int j = 0; j < B.size(); ++j) {
    Exponent e(B.size(), 0);
    e[j] = 1;
    vars_.push_back(TorusElement::monomial(L0_, e));
  }
}

QuantumSeed initial_seed(const AdmissibleChain& chain) {
  return QuantumSeed(L_matrix(chain), btilde_chain(chain));
}

namespace {

TorusElement power(const TorusElement& z, int e) {
  TorusElement r = TorusElement::unit(z.matrix());
  for (int i = 0; i < e; ++i) r = r * z;
  return r;
}

TorusElement ordered_monomial(const std::vector<TorusElement>& vars, const IntMatrix& L,
                              const std::vector<int>& a) {
  const int n = static_cast<int>(vars.size());
  if (static_cast<int>(a.size()) != n) fail(ErrorCode::kDimensionMismatch, "exponent length mismatch");
  int doubled = 0;
  for (int i = 0; i < n; ++i) {
    if (a[i] < 0) fail(ErrorCode::kNegativeExponent, "cluster monomials need nonnegative exponents");
    for (int j = 0; j < i; ++j) doubled += a[i] * a[j] * L(i, j);
  }
  TorusElement r = TorusElement::unit(vars.front().matrix());
  for (int i = 0; i < n; ++i)
    if (a[i]) r = r * power(vars[i], a[i]);
  return r.scaled(TCoeff::power(doubled));
}

}  // namespace

TorusElement cluster_monomial(const QuantumSeed& seed, const std::vector<int>& a) {
  return ordered_monomial(seed.variables(), seed.L(), a);
}

QuantumSeed mutate(const QuantumSeed& seed, int k) {
  const ExchangeMatrix& B = seed.B();
  if (!B.exchangeable(k)) fail(ErrorCode::kFrozenIndex, "cannot mutate at frozen index " + std::to_string(k));
  const int n = seed.size();
  std::vector<int> plus(n, 0), minus(n, 0);
  for (int i = 0; i < n; ++i) {
    if (i == k - 1) continue;
    const int b = B.full()(i, k - 1);
    plus[i] = std::max(b, 0);
    minus[i] = std::max(-b, 0);
  }
  // X^{-e_k + p} = t^{(1/2)(L p)_k} Z_k^{-1} Z^p in the current torus.
  auto lp = [&](const std::vector<int>& p) {
    int s = 0;
    for (int i = 0; i < n; ++i) s += seed.L()(k - 1, i) * p[i];
    return s;
  };
  const TorusElement sum = cluster_monomial(seed, plus).scaled(TCoeff::power(lp(plus))) +
                           cluster_monomial(seed, minus).scaled(TCoeff::power(lp(minus)));
  TorusElement fresh = exact_divide(sum, seed.variable(k));
  if (!fresh.is_bar_invariant()) {
    fail(ErrorCode::kIncompatible, "mutated variable at " + std::to_string(k) + " is not bar-invariant");
  }
  QuantumSeed out = seed;
  out.vars_[k - 1] = std::move(fresh);
  out.L_ = mutate_L(seed.L(), B, k);
  out.B_ = mutate_B(B, k);
  out.history_.push_back(k);
  return out;
}

bool quasi_commuting(const QuantumSeed& seed) {
  const int n = seed.size();
  for (int i = 1; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j) {
      const TorusElement lhs = seed.variable(i) * seed.variable(j);
      const TorusElement rhs = (seed.variable(j) * seed.variable(i)).scaled(TCoeff::power(2 * seed.L()(i - 1, j - 1)));
      if (!(lhs == rhs)) return false;
    }
  return true;
}

ClassicalSeed classical_seed(const AdmissibleChain& chain) {
  ClassicalSeed s;
  s.B = btilde_chain(chain);
  for (int j = 1; j <= s.B.size(); ++j) s.vars.push_back(Laurent::variable(s.B.size(), j));
  return s;
}

ClassicalSeed classical_mutate(const ClassicalSeed& seed, int k) {
  if (!seed.B.exchangeable(k)) fail(ErrorCode::kFrozenIndex, "cannot mutate at frozen index " + std::to_string(k));
  const int n = seed.B.size();
  Laurent up = Laurent::constant(n, 1);
  Laurent down = Laurent::constant(n, 1);
  for (int i = 0; i < n; ++i) {
    const int b = seed.B.full()(i, k - 1);
    for (int e = 0; e < std::abs(b); ++e) {
      if (b > 0) up = up * seed.vars[i];
      if (b < 0) down = down * seed.vars[i];
    }
  }
  ClassicalSeed out = seed;
  out.vars[k - 1] = exact_divide(up + down, seed.vars[k - 1]);
  out.B = mutate_B(seed.B, k);
  return out;
}

bool laurent_positive(const TorusElement& x) { return x.all_coefficients_nonnegative(); }

AdmissibleChain tsystem_chain(const ColorSequence& seq, const IBox& box) {
  if (!is_ibox(seq, box)) fail(ErrorCode::kNotIBox, box.to_string() + " is not an i-box");
  if (box.a == box.b) fail(ErrorCode::kDegenerateBox, "T-system needs a < b, got " + box.to_string());
  MoveWord h;
  const int c = box.a + 1;
  for (int k = c; k < box.b; ++k) h.push_back(Move::R);
  h.push_back(Move::L);
  for (int k = box.a; k > seq.first(); --k) h.push_back(Move::L);
  for (int k = box.b; k < seq.last(); ++k) h.push_back(Move::R);
  return chain_from(seq, c, h);
}

TSystemReport verify_tsystem(const ColorSequence& seq, const IBox& box) {
  const AdmissibleChain chain = tsystem_chain(seq, box);
  const int k0 = box.b - box.a;
  const int i = seq.color(box.a);
  const int a_plus = seq.next_same(box.a).value();
  const int b_minus = seq.prev_same(box.b).value();

  const QuantumSeed seed = initial_seed(chain);
  TSystemReport rep(box, chain, seed.initial_matrix());
  rep.k0 = k0;
  rep.mutated_box = IBox{a_plus, box.b};
  rep.partner_box = IBox{box.a, b_minus};
  if (chain.box(k0) != rep.mutated_box || !move_is_exchange(chain, k0)) {
    fail(ErrorCode::kChainConstruction, "T-system chain does not expose " + rep.mutated_box.to_string());
  }
  if (box_move(chain, k0).box(k0) != rep.partner_box) {
    fail(ErrorCode::kChainConstruction, "box move does not produce " + rep.partner_box.to_string());
  }

  auto member = [&](const IBox& bx) {
    const int idx = chain.find(bx);
    if (idx == 0) fail(ErrorCode::kChainConstruction, "participant " + bx.to_string() + " is not a chain member");
    return idx;
  };
  rep.whole_index = member(box);
  if (a_plus <= b_minus) rep.inner_index = member(IBox{a_plus, b_minus});
  const CartanDatum& datum = seq.datum();
  for (int j = 1; j <= datum.rank(); ++j) {
    if (datum.distance(i, j) != 1) continue;
    const Position lo = seq.next_color(box.a, j);
    const Position hi = seq.prev_color(box.b, j);
    if (!(lo.finite() && hi.finite() && lo <= hi)) continue;
    const IBox bx{lo.value(), hi.value()};
    rep.neighbour_colors.push_back(j);
    rep.neighbour_boxes.push_back(bx);
    rep.neighbour_indices.push_back(member(bx));
  }

  const int n = chain.length();
  Exponent first(n, 0), second(n, 0);
  first[rep.whole_index - 1] += 1;
  if (rep.inner_index) first[rep.inner_index - 1] += 1;
  for (int idx : rep.neighbour_indices) second[idx - 1] += 1;

  // Classical side, computed without the torus.
  const ClassicalSeed cs = classical_seed(chain);
  const ClassicalSeed cm = classical_mutate(cs, k0);
  rep.classical_lhs = cs.vars[k0 - 1] * cm.vars[k0 - 1];
  rep.classical_rhs = Laurent::monomial(first) + Laurent::monomial(second);
  rep.classical_pass = rep.classical_lhs == rep.classical_rhs;

  // Quantum side: Z_k Z'_k against bar-invariant monomials in the participants.
  const QuantumSeed qm = mutate(seed, k0);
  const TorusElement& fresh = qm.variable(k0);
  rep.quantum_lhs = seed.variable(k0) * fresh;
  Exponent ek(n, 0);
  ek[k0 - 1] = 1;
  auto lk = [&](const Exponent& p) { return twist(seed.L(), ek, p); };
  rep.quantum_rhs = TorusElement::monomial(seed.initial_matrix(), first, TCoeff::power(lk(first))) +
                    TorusElement::monomial(seed.initial_matrix(), second, TCoeff::power(lk(second)));
  rep.quantum_pass = rep.quantum_lhs == rep.quantum_rhs;
  rep.bar_invariant = fresh.is_bar_invariant();
  rep.specialization_pass = specialize_t1(fresh) == cm.vars[k0 - 1];
  return rep;
}

}  // namespace qbc
