#include <cstdlib>

#include "qbc/exchange.hpp"
#include "qbc/pairing.hpp"
#include "test_util.hpp"

using namespace qbc;
using qbc::testing::all_words;
using qbc::testing::uniform;

namespace {

ColorSequence make_seq(const char* type, std::vector<int> colors) {
  return ColorSequence(CartanDatum::parse(type), std::move(colors));
}

// Second form of the mutation rule: b' = -b on row/column k, otherwise
// b + (|b_ik| b_kj + b_ik |b_kj|) / 2.
IntMatrix oracle_mutate(const IntMatrix& b, int k) {
  IntMatrix out = b;
  const int n = b.rows();
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      if (i == k || j == k) {
        out(i, j) = -b(i, j);
      } else {
        out(i, j) = b(i, j) + (std::abs(b(i, k)) * b(k, j) + b(i, k) * std::abs(b(k, j))) / 2;
      }
    }
  }
  return out;
}

AdmissibleChain random_chain(const char* type, int len) {
  const CartanDatum d = CartanDatum::parse(type);
  std::vector<int> c;
  for (int k = 0; k < len; ++k) c.push_back(uniform(1, d.rank()));
  const ColorSequence seq(d, c);
  const int a = uniform(1, len), b = uniform(a, len);
  const auto chains = chains_with_range(seq, a, b);
  return chains[uniform(0, static_cast<int>(chains.size()) - 1)];
}

}  // namespace

TEST(BtildePlus, Examples) {
  const ExchangeMatrix b = btilde_plus(make_seq("A2", {1, 2, 1, 2, 1}));
  EXPECT_EQ(b.exchangeable_indices(), (std::vector<int>{1, 2, 3}));
  EXPECT_EQ(b.frozen_indices(), (std::vector<int>{4, 5}));
  const std::vector<std::vector<int>> cols{{0, -1, 1, 0, 0}, {1, 0, -1, 1, 0}, {-1, 1, 0, -1, 1}};
  for (int t = 1; t <= 3; ++t)
    for (int s = 1; s <= 5; ++s) EXPECT_EQ(b.entry(s, t), cols[t - 1][s - 1]) << s << "," << t;

  const ExchangeMatrix c = btilde_plus(make_seq("A2", {1, 2, 1}));
  EXPECT_EQ(c.exchangeable_indices(), (std::vector<int>{1}));
  EXPECT_EQ(c.entry(2, 1), -1);
  EXPECT_EQ(c.entry(3, 1), 1);

  // Rank one: position 2 is the next occurrence of the color of 1.
  const ExchangeMatrix r = btilde_plus(make_seq("A1", {1, 1}));
  EXPECT_EQ(r.exchangeable_indices(), (std::vector<int>{1}));
  EXPECT_EQ(r.entry(2, 1), 1);
}

TEST(BtildeChain, Examples) {
  const ColorSequence s = make_seq("A2", {1, 2, 1});
  const AdmissibleChain ch = chain_from(s, 1, parse_moves("RR"));
  const ExchangeMatrix b = btilde_chain(ch);
  EXPECT_EQ(b.entry(3, 1), 1);
  EXPECT_EQ(b.entry(2, 1), -1);
  EXPECT_EQ(b.frozen_indices(), (std::vector<int>{2, 3}));
  EXPECT_EQ(b, btilde_plus(s));

  const ExchangeMatrix single = btilde_chain(chain_from(s, 2, {}));
  EXPECT_EQ(single.size(), 1);
  EXPECT_TRUE(single.exchangeable_indices().empty());
}

TEST(BtildeChain, PlusChainMatchesSequenceMatrix) {
  for (const char* type : {"A2", "A3"}) {
    const CartanDatum d = CartanDatum::parse(type);
    for (const auto& c : all_words(d.rank(), 6)) {
      const ColorSequence seq(d, c);
      ASSERT_EQ(btilde_chain(chain_plus(seq)), btilde_plus(seq));
    }
  }
}

TEST(BtildeChain, BoxMovesAreMutationsOrRelabellings) {
  const CartanDatum d = CartanDatum::parse("A2");
  int exchanges = 0;
  for (const auto& c : all_words(2, 6)) {
    const ColorSequence seq(d, c);
    for (const auto& ch : chains_with_range(seq, 1, 6)) {
      const ExchangeMatrix b = btilde_chain(ch);
      for (int m = 1; m <= ch.length(); ++m) {
        if (!ch.movable(m)) continue;
        const ExchangeMatrix moved = btilde_chain(box_move(ch, m));
        if (move_is_exchange(ch, m)) {
          ASSERT_EQ(moved, mutate_B(b, m));
          ++exchanges;
        } else {
          ASSERT_EQ(moved, permuted(b, adjacent_transposition(ch.length(), m - 1)));
        }
      }
    }
  }
  EXPECT_GT(exchanges, 100);
}

TEST(Compatibility, Examples) {
  const ColorSequence s = make_seq("A2", {1, 2, 1, 2, 1});
  const IntMatrix L = lambda_sequence(LambdaTable(s));
  const ExchangeMatrix B = btilde_plus(s);
  const CompatibilityReport rep = check_compatible(L, B);
  EXPECT_TRUE(rep.compatible);
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) EXPECT_EQ(rep.products(i, j), i == j ? 2 : 0);
  EXPECT_EQ(L(1, 0) * B.entry(2, 1) + L(2, 0) * B.entry(3, 1), 2);

  IntMatrix zero(5, 5);
  const ExchangeMatrix Z(zero, {false, false, false, true, true});
  EXPECT_FALSE(check_compatible(L, Z).compatible);
  EXPECT_ALGEBRA_ERROR(check_compatible(IntMatrix(4, 4), B), ErrorCode::kShapeMismatch);
}

TEST(Compatibility, AllChainSeeds) {
  for (const char* type : {"A2", "A3"}) {
    const CartanDatum d = CartanDatum::parse(type);
    for (const auto& c : all_words(d.rank(), 5)) {
      const ColorSequence seq(d, c);
      for (int a = 1; a <= 2; ++a) {
        for (const auto& ch : chains_with_range(seq, a, 5)) {
          ASSERT_TRUE(check_compatible(L_matrix(ch), btilde_chain(ch)).compatible);
        }
      }
    }
  }
}

TEST(MutateB, MatchesSecondFormulaAndIsInvolution) {
  for (int trial = 0; trial < 300; ++trial) {
    const int n = uniform(2, 6);
    IntMatrix m(n, n);
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j) m(i, j) = uniform(-3, 3), m(j, i) = -m(i, j);
    std::vector<bool> frozen(n, false);
    for (int i = 0; i < n; ++i) frozen[i] = uniform(0, 3) == 0;
    // Frozen columns carry no data.
    for (int j = 0; j < n; ++j)
      if (frozen[j])
        for (int i = 0; i < n; ++i) m(i, j) = 0;
    const ExchangeMatrix B(m, frozen);
    for (int k = 1; k <= n; ++k) {
      if (frozen[k - 1]) {
        EXPECT_ALGEBRA_ERROR(mutate_B(B, k), ErrorCode::kFrozenIndex);
        continue;
      }
      const ExchangeMatrix mu = mutate_B(B, k);
      EXPECT_EQ(mutate_B(mu, k), B);
      EXPECT_TRUE(mu.principal_part_skew());
      const IntMatrix expect = oracle_mutate(m, k - 1);
      for (int s = 1; s <= n; ++s) {
        EXPECT_EQ(mu.entry(s, k), -B.entry(s, k));
        for (int t : B.exchangeable_indices()) EXPECT_EQ(mu.entry(s, t), expect(s - 1, t - 1));
      }
    }
  }
}

TEST(MutateL, ExampleRowMatchesMutatedBox) {
  const ColorSequence s = make_seq("A2", {1, 2, 1});
  const AdmissibleChain ch = chain_from(s, 1, parse_moves("RR"));
  const IntMatrix L = L_matrix(ch);
  const IntMatrix Lp = mutate_L(L, btilde_chain(ch), 1);
  const LambdaTable t(s);
  EXPECT_EQ(Lp(0, 1), lambda_box(t, {3, 3}, {2, 2}));
  EXPECT_EQ(Lp(0, 2), lambda_box(t, {3, 3}, {1, 3}));
  EXPECT_EQ(Lp(1, 2), L(1, 2));
}

TEST(MutateL, PreservesCompatibilityAndIsInvolution) {
  for (int trial = 0; trial < 300; ++trial) {
    const AdmissibleChain ch = random_chain(trial % 2 ? "A3" : "D4", 7);
    IntMatrix L = L_matrix(ch);
    ExchangeMatrix B = btilde_chain(ch);
    for (int step = 0; step < 5; ++step) {
      const auto ex = B.exchangeable_indices();
      if (ex.empty()) break;
      const int k = ex[uniform(0, static_cast<int>(ex.size()) - 1)];
      const IntMatrix Lk = mutate_L(L, B, k);
      const ExchangeMatrix Bk = mutate_B(B, k);
      ASSERT_TRUE(Lk.is_skew_symmetric());
      ASSERT_TRUE(check_compatible(Lk, Bk).compatible);
      ASSERT_EQ(mutate_L(Lk, Bk, k), L);
      // Row formula: L'(j,k) = -L(j,k) + sum over b_ik > 0 of L(j,i) b_ik,
      // the same as the negative-entry version under compatibility.
      for (int j = 1; j <= L.rows(); ++j) {
        if (j == k) continue;
        int pos = -L(j - 1, k - 1), neg = -L(j - 1, k - 1);
        for (int i = 1; i <= L.rows(); ++i) {
          if (B.entry(i, k) > 0) pos += L(j - 1, i - 1) * B.entry(i, k);
          if (B.entry(i, k) < 0) neg -= L(j - 1, i - 1) * B.entry(i, k);
        }
        EXPECT_EQ(Lk(j - 1, k - 1), neg);
        EXPECT_EQ(pos, neg);
      }
      L = Lk;
      B = Bk;
    }
  }
}

TEST(MutateL, RejectsIncompatiblePair) {
  const ColorSequence s = make_seq("A2", {1, 2, 1});
  const ExchangeMatrix B = btilde_plus(s);
  EXPECT_ALGEBRA_ERROR(mutate_L(IntMatrix(3, 3), B, 1), ErrorCode::kIncompatible);
}
