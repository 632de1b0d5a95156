#include "qbc/laurent.hpp"
#include "qbc/qtorus.hpp"
#include "test_util.hpp"

using namespace qbc;
using qbc::testing::uniform;

namespace {

TorusElement::Matrix matrix_of(std::vector<std::vector<int>> rows) {
  return TorusElement::make_matrix(IntMatrix::from_rows(rows));
}

TorusElement::Matrix random_skew(int n) {
  IntMatrix m(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) m(i, j) = uniform(-2, 2), m(j, i) = -m(i, j);
  return TorusElement::make_matrix(m);
}

TorusElement random_element(const TorusElement::Matrix& L, int terms, int lo, int hi) {
  TorusElement x(L);
  const int n = L->rows();
  for (int t = 0; t < terms; ++t) {
    Exponent a(n);
    for (auto& e : a) e = uniform(lo, hi);
    x.add_term(a, TCoeff::power(uniform(-3, 3), uniform(1, 3)));
  }
  return x;
}

// Doubled t-exponent of the ordered product X_1^{a_1} ... X_n^{a_n} relative to
// the normalized monomial: X^a = t^{s(a)/2} X_1^{a_1} ... X_n^{a_n}.
int ordering_shift(const IntMatrix& L, const Exponent& a) {
  int s = 0;
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < i; ++j) s += a[i] * a[j] * L(i, j);
  return s;
}

// Doubled exponent c with X^a X^b = t^{c/2} X^{a+b}, found by bubble-sorting the
// generator word with X_j X_i = t^{L_ji} X_i X_j for j > i. Nonnegative a, b.
int sorted_product_exponent(const IntMatrix& L, const Exponent& a, const Exponent& b) {
  std::vector<int> word;
  for (std::size_t i = 0; i < a.size(); ++i) word.insert(word.end(), a[i], static_cast<int>(i));
  for (std::size_t i = 0; i < b.size(); ++i) word.insert(word.end(), b[i], static_cast<int>(i));
  int doubled = ordering_shift(L, a) + ordering_shift(L, b);
  for (std::size_t pass = 0; pass < word.size(); ++pass) {
    for (std::size_t p = 0; p + 1 < word.size(); ++p) {
      if (word[p] > word[p + 1]) {
        doubled += 2 * L(word[p], word[p + 1]);
        std::swap(word[p], word[p + 1]);
      }
    }
  }
  Exponent c(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) c[i] = a[i] + b[i];
  return doubled - ordering_shift(L, c);
}

}  // namespace

TEST(TCoeff, Arithmetic) {
  const TCoeff a = TCoeff::power(1) + TCoeff::power(-1);
  EXPECT_EQ(a.at_one(), 2);
  EXPECT_EQ(a.bar(), a);
  EXPECT_EQ((a * a).terms().at(0), 2);
  EXPECT_EQ(exact_divide(a * TCoeff::power(3, 2), a), TCoeff::power(3, 2));
  EXPECT_ALGEBRA_ERROR(exact_divide(TCoeff::power(0) + TCoeff::power(4), a), ErrorCode::kInexactDivision);
  EXPECT_TRUE((TCoeff::power(2) - TCoeff::power(2)).is_zero());
}

TEST(Monomial, Examples) {
  const auto L = matrix_of({{0, 1}, {-1, 0}});
  const TorusElement x1 = TorusElement::monomial(L, {1, 0});
  const TorusElement x2 = TorusElement::monomial(L, {0, 1});
  EXPECT_EQ(TorusElement::monomial(L, {0, 0}), TorusElement::unit(L));
  // X^(1,1) = t^{-1/2} X_1 X_2.
  EXPECT_EQ(mul(x1, x2).scaled(TCoeff::power(-1)), TorusElement::monomial(L, {1, 1}));
  EXPECT_EQ(mul(x1, x2), TorusElement::monomial(L, {1, 1}, TCoeff::power(1)));
  EXPECT_EQ(mul(x2, x1), TorusElement::monomial(L, {1, 1}, TCoeff::power(-1)));
  EXPECT_EQ(mul(x1, x2), mul(x2, x1).scaled(TCoeff::power(2)));
  EXPECT_EQ(mul(x1, TorusElement::unit(L)), x1);
  EXPECT_EQ(twist(*L, {1, 0}, {0, 1}), 1);
}

TEST(Mul, MatchesWordSortingOracle) {
  for (int trial = 0; trial < 300; ++trial) {
    const int n = uniform(2, 5);
    const auto L = random_skew(n);
    Exponent a(n), b(n);
    for (auto& e : a) e = uniform(0, 2);
    for (auto& e : b) e = uniform(0, 2);
    const TorusElement p = mul(TorusElement::monomial(L, a), TorusElement::monomial(L, b));
    Exponent c(n);
    for (int i = 0; i < n; ++i) c[i] = a[i] + b[i];
    EXPECT_EQ(p, TorusElement::monomial(L, c, TCoeff::power(sorted_product_exponent(*L, a, b))));
  }
}

TEST(Mul, RingAxioms) {
  for (int trial = 0; trial < 100; ++trial) {
    const auto L = random_skew(3);
    const TorusElement x = random_element(L, 3, -2, 2), y = random_element(L, 3, -2, 2), z = random_element(L, 2, -2, 2);
    EXPECT_EQ(mul(mul(x, y), z), mul(x, mul(y, z)));
    EXPECT_EQ(mul(x, y + z), mul(x, y) + mul(x, z));
    EXPECT_EQ(mul(x + y, z), mul(x, z) + mul(y, z));
    EXPECT_EQ(bar(mul(x, y)), mul(bar(y), bar(x)));
    EXPECT_EQ(bar(bar(x)), x);
    EXPECT_EQ(specialize_t1(mul(x, y)), specialize_t1(x) * specialize_t1(y));
  }
  const auto L = random_skew(2);
  EXPECT_ANY_THROW(mul(TorusElement::unit(L), TorusElement::unit(random_skew(3))));
}

TEST(Bar, Examples) {
  const auto L = matrix_of({{0, 1}, {-1, 0}});
  const TorusElement m = TorusElement::monomial(L, {2, -1});
  EXPECT_EQ(bar(m), m);
  EXPECT_TRUE(m.is_bar_invariant());
  EXPECT_EQ(bar(TorusElement::unit(L).scaled(TCoeff::power(1))), TorusElement::unit(L).scaled(TCoeff::power(-1)));
}

TEST(ExactDivide, RoundTrip) {
  for (int trial = 0; trial < 200; ++trial) {
    const auto L = random_skew(3);
    const TorusElement d = random_element(L, uniform(1, 3), -2, 2);
    const TorusElement q = random_element(L, uniform(1, 4), -2, 2);
    if (d.is_zero() || q.is_zero()) continue;
    EXPECT_EQ(exact_divide(mul(d, q), d), q);
  }
  const auto L = matrix_of({{0, 1}, {-1, 0}});
  const TorusElement x = TorusElement::monomial(L, {1, 0}) + TorusElement::monomial(L, {0, 1});
  EXPECT_EQ(exact_divide(x, TorusElement::unit(L)), x);
}

TEST(ExactDivide, UnitsAndInexactQuotients) {
  const auto L = matrix_of({{0, 1}, {-1, 0}});
  const TorusElement x1 = TorusElement::monomial(L, {1, 0});
  const TorusElement x2 = TorusElement::monomial(L, {0, 1});
  // Monomials are units, so division by X^(1,1) always succeeds.
  const TorusElement q = exact_divide(x1 + x2, TorusElement::monomial(L, {1, 1}));
  EXPECT_EQ(mul(TorusElement::monomial(L, {1, 1}), q), x1 + x2);
  EXPECT_ALGEBRA_ERROR(exact_divide(x1 + x2, TorusElement::unit(L) + x1), ErrorCode::kInexactDivision);
  EXPECT_ANY_THROW(exact_divide(x1, TorusElement(L)));
}

TEST(Specialize, Examples) {
  const auto L = matrix_of({{0, 1}, {-1, 0}});
  EXPECT_EQ(specialize_t1(TorusElement::monomial(L, {1, 2}, TCoeff::power(1))), Laurent::monomial({1, 2}));
  EXPECT_EQ(specialize_t1(TorusElement::monomial(L, {1, 2}, TCoeff::power(2) + TCoeff::power(-2))),
            Laurent::monomial({1, 2}, 2));
}

TEST(Laurent, ExactDivideRoundTripAndErrors) {
  for (int trial = 0; trial < 200; ++trial) {
    Laurent d = Laurent::constant(3, 0), q = Laurent::constant(3, 0);
    for (int t = uniform(1, 3); t > 0; --t) d.add_term({uniform(-2, 2), uniform(-2, 2), uniform(-2, 2)}, uniform(1, 3));
    for (int t = uniform(1, 4); t > 0; --t) q.add_term({uniform(-2, 2), uniform(-2, 2), uniform(-2, 2)}, uniform(-3, 3));
    if (d.is_zero() || q.is_zero()) continue;
    EXPECT_EQ(exact_divide(d * q, d), q);
  }
  const Laurent x = Laurent::variable(2, 1), y = Laurent::variable(2, 2);
  EXPECT_ALGEBRA_ERROR(exact_divide(x + y, Laurent::constant(2, 1) + x), ErrorCode::kInexactDivision);
  EXPECT_ALGEBRA_ERROR(checked_mul(INT64_MAX, 2), ErrorCode::kOverflow);
  EXPECT_ALGEBRA_ERROR(checked_add(INT64_MAX, 1), ErrorCode::kOverflow);
}
