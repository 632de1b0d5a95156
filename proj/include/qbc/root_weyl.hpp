#pragma once

// Simply-laced Cartan data, weight-lattice arithmetic and Weyl group words.
//
// Conventions: the index set is [1, rank]; weights are integer vectors of
// coefficients in the fundamental-weight basis, so coords[i-1] = <h_i, lambda>
// and the simple root alpha_j has coordinates equal to column j of the Cartan
// matrix. Dynkin diagrams follow Bourbaki labelling.

#include <cstdint>
#include <memory>
#include <string>
#include <string_view>
#include <vector>

#include "qbc/matrix.hpp"

namespace qbc {

enum class Family { A, D, E };

// Exact rational with positive denominator in lowest terms.
struct Rational {
  std::int64_t num = 0;
  std::int64_t den = 1;

  Rational() = default;
  Rational(std::int64_t n, std::int64_t d = 1);

  bool is_integer() const { return den == 1; }
  std::string to_string() const;
  bool operator==(const Rational&) const = default;
};

// Immutable handle; copies share the underlying tables.
class CartanDatum {
 public:
  static CartanDatum make(Family family, int rank);
  // Parses names such as "A2", "D4", "E6".
  static CartanDatum parse(std::string_view name);

  Family family() const;
  int rank() const;
  std::string name() const;

  // 1-based accessors.
  int entry(int i, int j) const;
  const IntMatrix& cartan() const;
  // Graph distance in the Dynkin diagram; d(i, i) = 0.
  int distance(int i, int j) const;
  bool valid_index(int i) const { return i >= 1 && i <= rank(); }
  void check_index(int i) const;

  // det(C) * C^{-1}, used for the fundamental-weight pairing.
  const IntMatrix& adjugate() const;
  int determinant() const;

  bool operator==(const CartanDatum& other) const;

 private:
  struct Data;
  explicit CartanDatum(std::shared_ptr<const Data> d) : d_(std::move(d)) {}
  std::shared_ptr<const Data> d_;
};

struct Weight {
  std::vector<int> coords;

  static Weight zero(const CartanDatum& datum);
  static Weight fundamental(const CartanDatum& datum, int i);
  static Weight simple_root(const CartanDatum& datum, int i);

  Weight operator+(const Weight& o) const;
  Weight operator-(const Weight& o) const;
  Weight operator-() const;
  Weight operator*(int k) const;
  bool operator==(const Weight&) const = default;
  std::string to_string() const;
};

using WeylWord = std::vector<int>;

Weight reflect(const CartanDatum& datum, int i, const Weight& lambda);
Rational form(const CartanDatum& datum, const Weight& lambda, const Weight& mu);
// Integer-valued form; throws kDimensionMismatch if the value is fractional.
int form_int(const CartanDatum& datum, const Weight& lambda, const Weight& mu);
// s_{i_1} ... s_{i_m} lambda (rightmost letter acts first).
Weight apply_word(const CartanDatum& datum, const WeylWord& w, const Weight& lambda);

// Coordinates of a root-lattice element in the simple-root basis.
std::vector<int> root_coordinates(const CartanDatum& datum, const Weight& beta);
// +1 for a positive root, -1 for a negative root, 0 if neither sign pattern.
int root_sign(const CartanDatum& datum, const Weight& beta);

bool is_reduced(const CartanDatum& datum, const WeylWord& w);

struct LongestElement {
  WeylWord word;
  std::vector<int> star;  // star[i-1] = i*
};
LongestElement longest_and_star(const CartanDatum& datum);

// A Weyl group element, stored as the matrices of w and w^{-1} acting on the
// fundamental-weight basis. The action on (varpi_1, ..., varpi_rank) is
// faithful, so matrix equality is group equality.
class WeylElement {
 public:
  WeylElement() = default;
  static WeylElement identity(const CartanDatum& datum);
  static WeylElement generator(const CartanDatum& datum, int i);
  static WeylElement from_word(const CartanDatum& datum, const WeylWord& w);
  static WeylElement longest(const CartanDatum& datum);

  int rank() const { return matrix_.rows(); }
  const IntMatrix& matrix() const { return matrix_; }

  WeylElement left_mul(const CartanDatum& datum, int i) const;   // s_i w
  WeylElement right_mul(const CartanDatum& datum, int i) const;  // w s_i
  WeylElement inverse() const;
  WeylElement operator*(const WeylElement& rhs) const;

  // Bit i-1 set iff l(s_i w) < l(w) (resp. l(w s_i) < l(w)).
  std::uint32_t left_descents() const;
  std::uint32_t right_descents() const;
  bool is_identity() const;

  // Reduced word obtained by peeling the smallest left descent repeatedly.
  WeylWord reduced_word(const CartanDatum& datum) const;
  int length(const CartanDatum& datum) const;

  Weight act(const Weight& lambda) const;

  bool operator==(const WeylElement& o) const { return matrix_ == o.matrix_; }

 private:
  IntMatrix matrix_;
  IntMatrix inverse_;
};

}  // namespace qbc
