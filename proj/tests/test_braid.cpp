#include <map>
#include <queue>
#include <set>

#include "qbc/braid.hpp"
#include "test_util.hpp"

using namespace qbc;
using qbc::testing::all_words;
using qbc::testing::uniform;

namespace {

CartanDatum A(int n) { return CartanDatum::make(Family::A, n); }

// Equivalence class of a word under the defining relations, found by BFS over
// single rewrites. Positive braid words are equal exactly when they lie in the
// same class.
std::set<BraidWord> move_class(const CartanDatum& d, const BraidWord& w) {
  std::set<BraidWord> seen{w};
  std::queue<BraidWord> q;
  q.push(w);
  while (!q.empty()) {
    const BraidWord u = q.front();
    q.pop();
    const int n = static_cast<int>(u.size());
    for (int k = 0; k + 1 < n; ++k) {
      const int i = u[k], j = u[k + 1];
      const int dist = d.distance(i, j);
      if (dist >= 2) {
        BraidWord v = u;
        std::swap(v[k], v[k + 1]);
        if (seen.insert(v).second) q.push(v);
      }
      if (dist == 1 && k + 2 < n && u[k + 2] == i) {
        BraidWord v = u;
        v[k] = j, v[k + 1] = i, v[k + 2] = j;
        if (seen.insert(v).second) q.push(v);
      }
    }
  }
  return seen;
}

BraidWord random_word(int rank, int max_len) {
  BraidWord w;
  for (int k = uniform(0, max_len); k > 0; --k) w.push_back(uniform(1, rank));
  return w;
}

}  // namespace

TEST(Moves, Examples) {
  EXPECT_EQ(gamma_move(A(3), {1, 3, 2}, 1), (BraidWord{3, 1, 2}));
  EXPECT_ALGEBRA_ERROR(gamma_move(A(2), {1, 2}, 1), ErrorCode::kAdjacentLetters);
  EXPECT_ALGEBRA_ERROR(gamma_move(A(3), {2, 2}, 1), ErrorCode::kEqualLetters);
  EXPECT_EQ(beta_move(A(2), {1, 2, 1}, 1), (BraidWord{2, 1, 2}));
  EXPECT_ALGEBRA_ERROR(beta_move(A(2), {1, 2, 2}, 1), ErrorCode::kPatternMismatch);
  EXPECT_ALGEBRA_ERROR(beta_move(A(3), {1, 3, 1}, 1), ErrorCode::kPatternMismatch);
  EXPECT_ALGEBRA_ERROR(gamma_move(A(3), {1, 3}, 2), ErrorCode::kPositionOutOfRange);
}

TEST(Moves, AreInvolutions) {
  const CartanDatum d = CartanDatum::parse("D4");
  for (int trial = 0; trial < 300; ++trial) {
    const BraidWord w = random_word(4, 8);
    for (int k = 1; k + 1 <= static_cast<int>(w.size()); ++k) {
      if (d.distance(w[k - 1], w[k]) >= 2) EXPECT_EQ(gamma_move(d, gamma_move(d, w, k), k), w);
      if (k + 2 <= static_cast<int>(w.size()) && w[k - 1] == w[k + 1] && d.distance(w[k - 1], w[k]) == 1) {
        EXPECT_EQ(beta_move(d, beta_move(d, w, k), k), w);
      }
    }
  }
}

TEST(GarsideNF, Examples) {
  const CartanDatum d = A(2);
  const GarsideNF a = garside_nf(d, {2, 1, 2, 2});
  EXPECT_EQ(a.r, 1);
  EXPECT_EQ(a.factor_words(d), (std::vector<WeylWord>{{2}}));
  const GarsideNF b = garside_nf(d, {});
  EXPECT_EQ(b.r, 0);
  EXPECT_TRUE(b.factors.empty());
  const GarsideNF c = garside_nf(d, {1, 2, 1});
  EXPECT_EQ(c.r, 1);
  EXPECT_TRUE(c.factors.empty());
}

TEST(GarsideNF, NormalFormShape) {
  for (const char* name : {"A3", "D4", "A4"}) {
    const CartanDatum d = CartanDatum::parse(name);
    for (int trial = 0; trial < 200; ++trial) {
      const BraidWord w = random_word(d.rank(), 12);
      const GarsideNF nf = garside_nf(d, w);
      for (std::size_t i = 0; i < nf.factors.size(); ++i) {
        EXPECT_FALSE(nf.factors[i].is_identity());
        EXPECT_FALSE(nf.factors[i] == WeylElement::longest(d));
        if (i + 1 < nf.factors.size()) EXPECT_TRUE(left_weighted(nf.factors[i], nf.factors[i + 1]));
      }
      const BraidWord back = nf.to_word(d);
      EXPECT_EQ(back.size(), w.size());
      EXPECT_EQ(garside_nf(d, back), nf);
    }
  }
}

TEST(BraidEqual, Examples) {
  EXPECT_TRUE(braid_equal(A(2), {1, 2, 1}, {2, 1, 2}));
  EXPECT_TRUE(braid_equal(A(3), {1, 3}, {3, 1}));
  EXPECT_FALSE(braid_equal(A(2), {1, 2}, {2, 1}));
}

TEST(BraidEqual, MatchesMoveClosure) {
  for (const auto& [name, max_len] : std::vector<std::pair<std::string, int>>{{"A2", 6}, {"A3", 5}}) {
    const CartanDatum d = CartanDatum::parse(name);
    for (int len = 0; len <= max_len; ++len) {
      const auto words = all_words(d.rank(), len);
      std::map<BraidWord, int> cls;
      int next = 0;
      for (const auto& w : words) {
        if (cls.count(w)) continue;
        for (const auto& v : move_class(d, w)) cls[v] = next;
        ++next;
      }
      for (std::size_t i = 0; i < words.size(); ++i) {
        for (std::size_t j = i; j < words.size(); ++j) {
          const bool expect = cls[words[i]] == cls[words[j]];
          ASSERT_EQ(braid_equal(d, words[i], words[j]), expect)
              << name << ::testing::PrintToString(words[i]) << ::testing::PrintToString(words[j]);
        }
      }
    }
  }
}

TEST(Meet, Examples) {
  const CartanDatum d = A(2);
  EXPECT_TRUE(braid_equal(d, meet(d, {1, 2}, {1, 1}), {1}));
  EXPECT_TRUE(meet(d, {1}, {2}).empty());
  const BraidWord u{1, 2, 2, 1, 2};
  EXPECT_TRUE(braid_equal(d, meet(d, u, u), u));
}

TEST(Meet, IsGreatestCommonPrefix) {
  const CartanDatum d = A(3);
  // Every prefix of a word of length <= 4 is a prefix of some word in its class.
  auto prefixes = [&](const BraidWord& w) {
    std::set<BraidWord> out;
    for (const auto& v : move_class(d, w))
      for (std::size_t k = 0; k <= v.size(); ++k) out.insert(BraidWord(v.begin(), v.begin() + k));
    return out;
  };
  for (int trial = 0; trial < 150; ++trial) {
    const BraidWord u = random_word(3, 4), v = random_word(3, 4);
    const BraidWord m = meet(d, u, v);
    EXPECT_TRUE(is_prefix(d, m, u));
    EXPECT_TRUE(is_prefix(d, m, v));
    const auto pu = prefixes(u), pv = prefixes(v);
    std::size_t longest = 0;
    for (const auto& p : pu)
      if (pv.count(p)) longest = std::max(longest, p.size());
    EXPECT_EQ(m.size(), longest);
    for (const auto& p : pu) EXPECT_TRUE(is_prefix(d, p, u));
  }
}

TEST(DeltaComplement, Examples) {
  const CartanDatum d = A(2);
  const DeltaComplement a = delta_complement(d, {1});
  EXPECT_EQ(a.m, 1);
  EXPECT_TRUE(braid_equal(d, a.y, {2, 1}));
  const DeltaComplement b = delta_complement(d, {1, 2, 1});
  EXPECT_EQ(b.m, 1);
  EXPECT_TRUE(b.y.empty());
  const DeltaComplement c = delta_complement(d, {});
  EXPECT_EQ(c.m, 0);
  EXPECT_TRUE(c.y.empty());
}

TEST(DeltaComplement, CompletesToDeltaPower) {
  for (const char* name : {"A2", "A3", "D4"}) {
    const CartanDatum d = CartanDatum::parse(name);
    for (int trial = 0; trial < 200; ++trial) {
      const BraidWord w = random_word(d.rank(), 10);
      const DeltaComplement dc = delta_complement(d, w);
      EXPECT_TRUE(braid_equal(d, concat(w, dc.y), delta_power(d, dc.m)));
      if (dc.m > 0) EXPECT_FALSE(is_prefix(d, delta_power(d, 1), dc.y));
    }
  }
}
