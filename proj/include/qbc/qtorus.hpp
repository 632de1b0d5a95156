#pragma once

// The based quantum torus T(L): Z[t^{1/2}, t^{-1/2}]-span of the
// bar-invariant monomials X^a, with X^a X^b = t^{(1/2) a^T L b} X^{a+b}.

#include <cstdint>
#include <map>
#include <memory>
#include <string>
#include <vector>

#include "qbc/laurent.hpp"
#include "qbc/matrix.hpp"

namespace qbc {

// Laurent polynomial in t^{1/2}; keys are doubled exponents of t.
class TCoeff {
 public:
  TCoeff() = default;
  static TCoeff constant(std::int64_t c) { return power(0, c); }
  static TCoeff power(int doubled_exponent, std::int64_t c = 1);

  const std::map<int, std::int64_t>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  bool all_nonnegative() const;
  std::int64_t at_one() const;

  void add_term(int doubled_exponent, std::int64_t c);
  TCoeff operator+(const TCoeff& o) const;
  TCoeff operator-(const TCoeff& o) const;
  TCoeff operator*(const TCoeff& o) const;
  TCoeff shifted(int doubled_exponent) const;
  TCoeff bar() const;
  bool operator==(const TCoeff&) const = default;

  std::string to_string() const;

 private:
  std::map<int, std::int64_t> terms_;
};

// Exact quotient in Z[t^{+-1/2}]; throws kInexactDivision.
TCoeff exact_divide(const TCoeff& num, const TCoeff& d);

class TorusElement {
 public:
  using Matrix = std::shared_ptr<const IntMatrix>;

  explicit TorusElement(Matrix L);
  static Matrix make_matrix(const IntMatrix& L);
  static TorusElement monomial(const Matrix& L, const Exponent& a, const TCoeff& c = TCoeff::constant(1));
  static TorusElement unit(const Matrix& L);

  const Matrix& matrix() const { return L_; }
  int rank() const { return L_->rows(); }
  const std::map<Exponent, TCoeff>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }

  void add_term(const Exponent& a, const TCoeff& c);
  TorusElement operator+(const TorusElement& o) const;
  TorusElement operator-(const TorusElement& o) const;
  TorusElement operator*(const TorusElement& o) const;
  TorusElement scaled(const TCoeff& c) const;
  TorusElement bar() const;
  bool is_bar_invariant() const { return bar() == *this; }
  bool all_coefficients_nonnegative() const;

  // Equal when the torus matrices agree and the coefficients match.
  bool operator==(const TorusElement& o) const;

  std::string to_string() const;

 private:
  Matrix L_;
  std::map<Exponent, TCoeff> terms_;
};

// a^T L b, the doubled t-exponent in X^a X^b = t^{D/2} X^{a+b}.
int twist(const IntMatrix& L, const Exponent& a, const Exponent& b);

TorusElement mul(const TorusElement& x, const TorusElement& y);
TorusElement bar(const TorusElement& x);
// The left quotient q with d q = num; throws kInexactDivision naming the
// remainder term that could not be cancelled.
TorusElement exact_divide(const TorusElement& num, const TorusElement& d);
Laurent specialize_t1(const TorusElement& x);

}  // namespace qbc
