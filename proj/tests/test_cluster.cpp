#include "qbc/cluster.hpp"
#include "qbc/pairing.hpp"
#include "test_util.hpp"

using namespace qbc;
using qbc::testing::all_words;
using qbc::testing::uniform;

namespace {

ColorSequence make_seq(const char* type, std::vector<int> colors) {
  return ColorSequence(CartanDatum::parse(type), std::move(colors));
}

AdmissibleChain a2_chain() { return chain_from(make_seq("A2", {1, 2, 1}), 1, parse_moves("RR")); }

AdmissibleChain random_chain(const CartanDatum& d, int len) {
  std::vector<int> c;
  for (int k = 0; k < len; ++k) c.push_back(uniform(1, d.rank()));
  const ColorSequence seq(d, c);
  const auto chains = chains_with_range(seq, 1, len);
  return chains[uniform(0, static_cast<int>(chains.size()) - 1)];
}

}  // namespace

TEST(Seed, Examples) {
  const QuantumSeed s = initial_seed(a2_chain());
  EXPECT_EQ(s.size(), 3);
  EXPECT_EQ(s.B().exchangeable_indices(), (std::vector<int>{1}));
  EXPECT_EQ(s.L()(0, 1), 1);
  EXPECT_EQ(s.L()(0, 2), -1);
  EXPECT_EQ(s.variable(2), TorusElement::monomial(s.initial_matrix(), {0, 1, 0}));
  EXPECT_TRUE(quasi_commuting(s));

  const QuantumSeed single = initial_seed(chain_from(make_seq("A2", {1, 2, 1}), 2, {}));
  EXPECT_EQ(single.size(), 1);
  EXPECT_TRUE(single.B().exchangeable_indices().empty());
  EXPECT_ALGEBRA_ERROR(mutate(single, 1), ErrorCode::kFrozenIndex);

  const ColorSequence seq = make_seq("A2", {1, 2, 1});
  EXPECT_ALGEBRA_ERROR(QuantumSeed(IntMatrix(3, 3), btilde_plus(seq)), ErrorCode::kIncompatible);
}

TEST(Mutate, ExampleExchangeRelation) {
  const QuantumSeed s = initial_seed(a2_chain());
  const QuantumSeed m = mutate(s, 1);
  const TorusElement& z = m.variable(1);
  EXPECT_TRUE(z.is_bar_invariant());
  EXPECT_EQ(z.size(), 2u);
  EXPECT_EQ(specialize_t1(z), Laurent::monomial({-1, 0, 1}) + Laurent::monomial({-1, 1, 0}));
  EXPECT_TRUE(laurent_positive(z));
  EXPECT_TRUE(quasi_commuting(m));
  EXPECT_TRUE(mutate(m, 1).same_cluster(s));
  EXPECT_EQ(m.history(), (std::vector<int>{1}));

  const ClassicalSeed c = classical_mutate(classical_seed(a2_chain()), 1);
  EXPECT_EQ(c.vars[0], specialize_t1(z));
  const ClassicalSeed back = classical_mutate(c, 1);
  EXPECT_EQ(back.vars, classical_seed(a2_chain()).vars);
}

TEST(Mutate, QuasiCommutationFollowsMutatedL) {
  const CartanDatum d = CartanDatum::parse("A3");
  for (int trial = 0; trial < 40; ++trial) {
    QuantumSeed s = initial_seed(random_chain(d, 5));
    for (int step = 0; step < 4; ++step) {
      const auto ex = s.B().exchangeable_indices();
      if (ex.empty()) break;
      const int k = ex[uniform(0, static_cast<int>(ex.size()) - 1)];
      const QuantumSeed m = mutate(s, k);
      ASSERT_EQ(m.L(), mutate_L(s.L(), s.B(), k));
      ASSERT_EQ(m.B(), mutate_B(s.B(), k));
      for (int j = 1; j <= m.size(); ++j) {
        const TorusElement lhs = mul(m.variable(k), m.variable(j));
        const TorusElement rhs = mul(m.variable(j), m.variable(k)).scaled(TCoeff::power(2 * m.L()(k - 1, j - 1)));
        ASSERT_EQ(lhs, rhs) << "k=" << k << " j=" << j;
      }
      ASSERT_TRUE(mutate(m, k).same_cluster(s));
      s = m;
    }
  }
}

TEST(Mutate, SpecializationMatchesClassicalPipeline) {
  for (const char* type : {"A2", "A3", "D4"}) {
    const CartanDatum d = CartanDatum::parse(type);
    for (int trial = 0; trial < 30; ++trial) {
      const AdmissibleChain ch = random_chain(d, uniform(2, 6));
      QuantumSeed q = initial_seed(ch);
      ClassicalSeed c = classical_seed(ch);
      for (int step = 0; step < 8; ++step) {
        const auto ex = q.B().exchangeable_indices();
        if (ex.empty()) break;
        const int k = ex[uniform(0, static_cast<int>(ex.size()) - 1)];
        q = mutate(q, k);
        c = classical_mutate(c, k);
        ASSERT_EQ(c.B, q.B());
        for (int j = 1; j <= q.size(); ++j) ASSERT_EQ(specialize_t1(q.variable(j)), c.vars[j - 1]);
        ASSERT_TRUE(laurent_positive(q.variable(k)));
        ASSERT_TRUE(q.variable(k).is_bar_invariant());
      }
    }
  }
}

TEST(ClusterMonomial, Examples) {
  const QuantumSeed s = mutate(initial_seed(a2_chain()), 1);
  EXPECT_EQ(cluster_monomial(s, {0, 1, 0}), s.variable(2));
  EXPECT_EQ(cluster_monomial(s, {0, 0, 0}), TorusElement::unit(s.initial_matrix()));
  EXPECT_ALGEBRA_ERROR(cluster_monomial(s, {-1, 0, 0}), ErrorCode::kNegativeExponent);
  const TorusElement m = cluster_monomial(s, {2, 1, 1});
  EXPECT_TRUE(m.is_bar_invariant());
  EXPECT_EQ(specialize_t1(m), specialize_t1(s.variable(1)) * specialize_t1(s.variable(1)) *
                                  specialize_t1(s.variable(2)) * specialize_t1(s.variable(3)));
  // Commuting variables multiply plainly.
  const QuantumSeed i = initial_seed(a2_chain());
  for (int a = 1; a <= 3; ++a)
    for (int b = 1; b <= 3; ++b) {
      if (a == b || i.L()(a - 1, b - 1) != 0) continue;
      std::vector<int> e(3, 0);
      e[a - 1] = e[b - 1] = 1;
      EXPECT_EQ(cluster_monomial(i, e), mul(i.variable(a), i.variable(b)));
    }
}

TEST(LaurentPositive, Examples) {
  const QuantumSeed s = initial_seed(a2_chain());
  const auto& L = s.initial_matrix();
  EXPECT_TRUE(laurent_positive(TorusElement::monomial(L, {1, -2, 3})));
  EXPECT_FALSE(laurent_positive(TorusElement::monomial(L, {1, 0, 0}) - TorusElement::monomial(L, {0, 1, 0})));
}

TEST(TSystem, Examples) {
  const TSystemReport r = verify_tsystem(make_seq("A2", {1, 2, 1}), {1, 3});
  EXPECT_TRUE(r.pass());
  EXPECT_EQ(r.mutated_box, (IBox{3, 3}));
  EXPECT_EQ(r.partner_box, (IBox{1, 1}));
  EXPECT_EQ(r.inner_index, 0);
  EXPECT_EQ(r.neighbour_boxes, (std::vector<IBox>{{2, 2}}));
  EXPECT_EQ(r.classical_lhs, r.classical_rhs);

  const TSystemReport a3 = verify_tsystem(make_seq("A3", {2, 1, 3, 2, 1, 3, 2}), {1, 4});
  EXPECT_TRUE(a3.pass());
  EXPECT_EQ(a3.neighbour_colors, (std::vector<int>{1, 3}));

  EXPECT_ALGEBRA_ERROR(verify_tsystem(make_seq("A2", {1, 2, 1}), {1, 1}), ErrorCode::kDegenerateBox);
  EXPECT_ALGEBRA_ERROR(verify_tsystem(make_seq("A2", {1, 2, 1}), {1, 2}), ErrorCode::kNotIBox);
}

TEST(TSystem, EveryBoxOfSmallSequences) {
  for (const char* type : {"A2", "A3"}) {
    const CartanDatum d = CartanDatum::parse(type);
    for (const auto& c : all_words(d.rank(), 5)) {
      const ColorSequence seq(d, c);
      for (int a = 1; a <= 5; ++a)
        for (int b = a + 1; b <= 5; ++b) {
          if (c[a - 1] != c[b - 1]) continue;
          const TSystemReport r = verify_tsystem(seq, {a, b});
          ASSERT_TRUE(r.pass()) << type << ::testing::PrintToString(c) << " [" << a << "," << b << "]";
          EXPECT_EQ(r.chain.find(r.mutated_box), r.k0);
        }
    }
  }
}
