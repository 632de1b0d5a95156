#include "qbc/pairing.hpp"

#include "qbc/error.hpp"

namespace qbc {

LambdaTable::LambdaTable(ColorSequence seq) : seq_(std::move(seq)) {
  const CartanDatum& datum = seq_.datum();
  const int n = seq_.size();
  prefix_.push_back(WeylElement::identity(datum));
  for (int k = seq_.first(); k <= seq_.last(); ++k) {
    const int i = seq_.color(k);
    beta_.push_back(prefix_.back().act(Weight::simple_root(datum, i)));
    prefix_.push_back(prefix_.back().right_mul(datum, i));
  }
  lambda_.assign(static_cast<std::size_t>(n) * n, 0);
  for (int a = 0; a < n; ++a)
    for (int b = a + 1; b < n; ++b) {
      const int v = form_int(datum, beta_[a], beta_[b]);
      lambda_[a * n + b] = v;
      lambda_[b * n + a] = -v;
    }
}

const Weight& LambdaTable::beta(int k) const {
  seq_.check_position(k);
  return beta_[k - seq_.first()];
}

const WeylElement& LambdaTable::prefix(int k) const {
  if (k < seq_.first()) return prefix_.front();
  seq_.check_position(k);
  return prefix_[k - seq_.first() + 1];
}

const WeylElement& LambdaTable::prefix(const Position& p) const {
  if (p.is_neg_inf()) return prefix_.front();
  if (p.is_pos_inf()) fail(ErrorCode::kPositionOutOfRange, "prefix product at +inf");
  return prefix(p.value());
}

int LambdaTable::lambda(int a, int b) const {
  seq_.check_position(a);
  seq_.check_position(b);
  return lambda_[(a - seq_.first()) * seq_.size() + (b - seq_.first())];
}

int lambda(const LambdaTable& table, int a, int b) { return table.lambda(a, b); }

int lambda_box(const LambdaTable& table, const IBox& box1, const IBox& box2) {
  const ColorSequence& seq = table.seq();
  if (!boxes_commute(seq, box1, box2)) {
    fail(ErrorCode::kNotCommuting, box1.to_string() + " and " + box2.to_string() + " do not commute");
  }
  int sum = 0;
  for (int u : box_support(seq, box1))
    for (int v : box_support(seq, box2)) sum += table.lambda(u, v);
  return sum;
}

bool nesting_hypothesis(const ColorSequence& seq, const IBox& inner, const IBox& outer) {
  return is_ibox(seq, inner) && is_ibox(seq, outer) && seq.prev_same(outer.a) < inner.a &&
         inner.a <= inner.b && seq.next_same(outer.b) > inner.b;
}

int lambda_weight_form(const LambdaTable& table, const IBox& box1, const IBox& box2) {
  const ColorSequence& seq = table.seq();
  if (!nesting_hypothesis(seq, box1, box2)) {
    fail(ErrorCode::kHypothesisViolated,
         box1.to_string() + " does not nest inside " + box2.to_string());
  }
  const CartanDatum& datum = seq.datum();
  const Weight p1 = Weight::fundamental(datum, seq.color(box1.a));
  const Weight p2 = Weight::fundamental(datum, seq.color(box2.a));
  const Weight left = table.prefix(seq.prev_same(box1.a)).act(p1) - table.prefix(box1.b).act(p1);
  const Weight right = table.prefix(seq.prev_same(box2.a)).act(p2) + table.prefix(box2.b).act(p2);
  return -form_int(datum, left, right);
}

IntMatrix L_matrix(const LambdaTable& table, const AdmissibleChain& chain) {
  if (!(table.seq() == chain.seq())) fail(ErrorCode::kRangeMismatch, "chain and table use different sequences");
  const int r = chain.length();
  IntMatrix L(r, r);
  for (int p = 1; p <= r; ++p)
    for (int q = p + 1; q <= r; ++q) {
      const int v = lambda_box(table, chain.box(p), chain.box(q));
      L(p - 1, q - 1) = v;
      L(q - 1, p - 1) = -v;
    }
  return L;
}

IntMatrix L_matrix(const AdmissibleChain& chain) { return L_matrix(LambdaTable(chain.seq()), chain); }

IntMatrix lambda_sequence(const LambdaTable& table) { return L_matrix(table, chain_plus(table.seq())); }

int L_pbw(const LambdaTable& table, const ExponentVector& x, const ExponentVector& y) {
  const ColorSequence& seq = table.seq();
  for (const auto* v : {&x, &y})
    for (const auto& [k, e] : v->entries())
      if (!seq.contains(k)) fail(ErrorCode::kPositionOutOfRange, "exponent support outside the sequence");
  int sum = 0;
  for (const auto& [a, xa] : x.entries())
    for (const auto& [b, yb] : y.entries()) sum += xa * yb * table.lambda(a, b);
  return sum;
}

}  // namespace qbc
