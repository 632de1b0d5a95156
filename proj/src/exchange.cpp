#include "qbc/exchange.hpp"

#include <algorithm>

#include "qbc/error.hpp"

namespace qbc {

ExchangeMatrix::ExchangeMatrix(IntMatrix full, std::vector<bool> frozen)
    : full_(std::move(full)), frozen_(std::move(frozen)) {
  if (!full_.square() || static_cast<int>(frozen_.size()) != full_.rows()) {
    fail(ErrorCode::kShapeMismatch, "exchange matrix and frozen mask disagree in size");
  }
  for (int t = 0; t < size(); ++t)
    if (frozen_[t])
      for (int s = 0; s < size(); ++s) full_(s, t) = 0;
}

bool ExchangeMatrix::exchangeable(int t) const {
  if (t < 1 || t > size()) fail(ErrorCode::kIndexOutOfRange, "index " + std::to_string(t) + " outside J");
  return !frozen_[t - 1];
}

std::vector<int> ExchangeMatrix::exchangeable_indices() const {
  std::vector<int> out;
  for (int t = 1; t <= size(); ++t)
    if (!frozen_[t - 1]) out.push_back(t);
  return out;
}

std::vector<int> ExchangeMatrix::frozen_indices() const {
  std::vector<int> out;
  for (int t = 1; t <= size(); ++t)
    if (frozen_[t - 1]) out.push_back(t);
  return out;
}

int ExchangeMatrix::entry(int s, int t) const {
  if (s < 1 || s > size()) fail(ErrorCode::kIndexOutOfRange, "row " + std::to_string(s) + " outside J");
  if (!exchangeable(t)) fail(ErrorCode::kFrozenIndex, "column " + std::to_string(t) + " is frozen");
  return full_(s - 1, t - 1);
}

IntMatrix ExchangeMatrix::rectangular() const {
  const std::vector<int> ex = exchangeable_indices();
  IntMatrix out(size(), static_cast<int>(ex.size()));
  for (int s = 0; s < size(); ++s)
    for (std::size_t c = 0; c < ex.size(); ++c) out(s, static_cast<int>(c)) = full_(s, ex[c] - 1);
  return out;
}

bool ExchangeMatrix::principal_part_skew() const {
  for (int s : exchangeable_indices())
    for (int t : exchangeable_indices())
      if (full_(s - 1, t - 1) != -full_(t - 1, s - 1)) return false;
  return true;
}

ExchangeMatrix btilde_plus(const ColorSequence& seq) {
  const int r = seq.size();
  const CartanDatum& datum = seq.datum();
  // Work in the relabelled index set [1, r].
  std::vector<Position> plus(r + 1, Position::pos_inf());
  for (int s = 1; s <= r; ++s) {
    const Position p = seq.next_same(seq.first() + s - 1);
    plus[s] = p.finite() ? Position::at(p.value() - seq.first() + 1) : p;
  }
  IntMatrix b(r, r);
  std::vector<bool> frozen(r);
  for (int t = 1; t <= r; ++t) {
    frozen[t - 1] = plus[t].is_pos_inf();
    if (frozen[t - 1]) continue;
    for (int s = 1; s <= r; ++s) {
      const bool adjacent = datum.distance(seq.color(seq.first() + s - 1), seq.color(seq.first() + t - 1)) == 1;
      const Position S = Position::at(s);
      const Position T = Position::at(t);
      if ((S < T && T < plus[s] && plus[s] < plus[t] && adjacent) || S == plus[t]) {
        b(s - 1, t - 1) = 1;
      } else if ((T < S && S < plus[t] && plus[t] < plus[s] && adjacent) || T == plus[s]) {
        b(s - 1, t - 1) = -1;
      }
    }
  }
  return ExchangeMatrix(std::move(b), std::move(frozen));
}

namespace {

// Whether b_{[x,y],[x',y']} = +1 for chain members p = [x,y], q = [x',y'].
bool positive_entry(const AdmissibleChain& chain, int p, int q) {
  const ColorSequence& seq = chain.seq();
  const int x = chain.box(p).a, y = chain.box(p).b;
  const int xp = chain.box(q).a, yp = chain.box(q).b;
  const Position x_minus = seq.prev_same(x), y_minus = seq.prev_same(y), y_plus = seq.next_same(y);
  const Position xp_minus = seq.prev_same(xp), yp_plus = seq.next_same(yp);

  if ((x == xp && y_minus == yp) || (y == yp && x_minus == xp)) return true;
  if (form_int(seq.datum(), Weight::simple_root(seq.datum(), seq.color(x)),
               Weight::simple_root(seq.datum(), seq.color(xp))) != -1) {
    return false;
  }
  const Position X = Position::at(x), Y = Position::at(y);
  const Position XP = Position::at(xp), YP = Position::at(yp);
  const bool right_grown = y_plus.finite() && chain.find(IBox{x, y_plus.value()}) != 0;
  const bool left_grown = xp_minus.finite() && chain.find(IBox{xp_minus.value(), yp}) != 0;
  const bool x_effective = chain.effective_end(p) == x;
  const bool yp_effective = chain.effective_end(q) == yp;

  if (right_grown && x_effective && xp_minus < X && X < XP && YP < y_plus && y_plus < yp_plus) return true;
  if (right_grown && yp_effective && xp_minus < X && Y < YP && YP < y_plus && y_plus < yp_plus) return true;
  if (left_grown && yp_effective && x_minus < xp_minus && xp_minus < X && Y < YP && YP < y_plus) return true;
  if (left_grown && x_effective && x_minus < xp_minus && xp_minus < X && X < XP && YP < y_plus) return true;
  return false;
}

}  // namespace

IntMatrix skew_chain_matrix(const AdmissibleChain& chain) {
  const int r = chain.length();
  IntMatrix b(r, r);
  for (int p = 1; p <= r; ++p)
    for (int q = 1; q <= r; ++q) {
      if (p == q || !positive_entry(chain, p, q)) continue;
      if (b(p - 1, q - 1) == -1) {
        fail(ErrorCode::kChainConstruction, "conflicting exchange entries between chain members " +
                                                std::to_string(q) + " and " + std::to_string(p));
      }
      b(p - 1, q - 1) = 1;
      b(q - 1, p - 1) = -1;
    }
  return b;
}

ExchangeMatrix btilde_chain(const AdmissibleChain& chain) {
  std::vector<bool> frozen(chain.length());
  for (int k = 1; k <= chain.length(); ++k) frozen[k - 1] = chain.is_frozen(k);
  return ExchangeMatrix(skew_chain_matrix(chain), std::move(frozen));
}

CompatibilityReport check_compatible(const IntMatrix& L, const ExchangeMatrix& B) {
  const int n = B.size();
  if (L.rows() != n || L.cols() != n) fail(ErrorCode::kShapeMismatch, "L and B have different index sets");
  const std::vector<int> ex = B.exchangeable_indices();
  const int m = static_cast<int>(ex.size());
  CompatibilityReport rep;
  rep.products = IntMatrix(n, m);
  rep.lb_products = IntMatrix(n, m);
  rep.compatible = true;
  for (int i = 0; i < n; ++i)
    for (int c = 0; c < m; ++c) {
      const int j = ex[c] - 1;
      int sum = 0;
      int lb = 0;
      for (int s = 0; s < n; ++s) {
        sum += L(s, i) * B.full()(s, j);
        lb += L(i, s) * B.full()(s, j);
      }
      rep.products(i, c) = sum;
      rep.lb_products(i, c) = lb;
      if (sum != (i == j ? 2 : 0)) rep.compatible = false;
    }
  return rep;
}

namespace {
void check_mutable(const ExchangeMatrix& B, int k) {
  if (!B.exchangeable(k)) fail(ErrorCode::kFrozenIndex, "cannot mutate at frozen index " + std::to_string(k));
}
int sign(int v) { return (v > 0) - (v < 0); }
}  // namespace

ExchangeMatrix mutate_B(const ExchangeMatrix& B, int k) {
  check_mutable(B, k);
  const int n = B.size();
  const IntMatrix& b = B.full();
  const int kk = k - 1;
  IntMatrix out(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      if (B.frozen_mask()[j]) continue;
      if (i == kk || j == kk) {
        out(i, j) = -b(i, j);
      } else {
        out(i, j) = b(i, j) + sign(b(i, kk)) * std::max(b(i, kk) * b(kk, j), 0);
      }
    }
  return ExchangeMatrix(std::move(out), B.frozen_mask());
}

IntMatrix mutate_L(const IntMatrix& L, const ExchangeMatrix& B, int k) {
  check_mutable(B, k);
  if (!check_compatible(L, B).compatible) {
    fail(ErrorCode::kIncompatible, "L and B are not a compatible pair");
  }
  const int n = B.size();
  const int kk = k - 1;
  // E is the identity except for column k: E_kk = -1, E_sk = max(0, -b_sk).
  IntMatrix E = IntMatrix::identity(n);
  for (int s = 0; s < n; ++s) E(s, kk) = s == kk ? -1 : std::max(0, -B.full()(s, kk));
  return E.transpose() * L * E;
}

ExchangeMatrix permuted(const ExchangeMatrix& B, const std::vector<int>& perm) {
  std::vector<bool> frozen(B.size());
  for (int s = 0; s < B.size(); ++s) frozen[s] = B.frozen_mask().at(perm[s]);
  return ExchangeMatrix(qbc::permuted(B.full(), perm), std::move(frozen));
}

}  // namespace qbc
