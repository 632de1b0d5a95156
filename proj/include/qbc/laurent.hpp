#pragma once

// Commutative Laurent polynomials over the integers in finitely many
// variables. Used for t = 1 specializations and as an independent classical
// model of cluster mutation.

#include <cstdint>
#include <map>
#include <string>
#include <vector>

namespace qbc {

using Exponent = std::vector<int>;

// Checked 64-bit arithmetic; throws kOverflow.
std::int64_t checked_add(std::int64_t a, std::int64_t b);
std::int64_t checked_mul(std::int64_t a, std::int64_t b);

class Laurent {
 public:
  explicit Laurent(int nvars = 0) : n_(nvars) {}
  static Laurent constant(int nvars, std::int64_t c);
  static Laurent monomial(const Exponent& e, std::int64_t c = 1);
  static Laurent variable(int nvars, int j);  // 1-based

  int nvars() const { return n_; }
  const std::map<Exponent, std::int64_t>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  bool all_nonnegative() const;
  std::size_t size() const { return terms_.size(); }

  void add_term(const Exponent& e, std::int64_t c);
  Laurent operator+(const Laurent& o) const;
  Laurent operator-(const Laurent& o) const;
  Laurent operator*(const Laurent& o) const;
  bool operator==(const Laurent&) const = default;

  std::string to_string() const;

 private:
  int n_;
  std::map<Exponent, std::int64_t> terms_;
};

// Exact quotient num / d in the Laurent ring; throws kInexactDivision.
Laurent exact_divide(const Laurent& num, const Laurent& d);

}  // namespace qbc
