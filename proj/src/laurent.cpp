#include "qbc/laurent.hpp"

#include <algorithm>
#include <sstream>

#include "qbc/error.hpp"

namespace qbc {

std::int64_t checked_add(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_add_overflow(a, b, &r)) fail(ErrorCode::kOverflow, "coefficient overflow in addition");
  return r;
}

std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_mul_overflow(a, b, &r)) fail(ErrorCode::kOverflow, "coefficient overflow in multiplication");
  return r;
}

Laurent Laurent::constant(int nvars, std::int64_t c) {
  Laurent p(nvars);
  p.add_term(Exponent(nvars, 0), c);
  return p;
}

Laurent Laurent::monomial(const Exponent& e, std::int64_t c) {
  Laurent p(static_cast<int>(e.size()));
  p.add_term(e, c);
  return p;
}

Laurent Laurent::variable(int nvars, int j) {
  if (j < 1 || j > nvars) fail(ErrorCode::kIndexOutOfRange, "variable index out of range");
  Exponent e(nvars, 0);
  e[j - 1] = 1;
  return monomial(e);
}

bool Laurent::all_nonnegative() const {
  return std::all_of(terms_.begin(), terms_.end(), [](const auto& t) { return t.second > 0; });
}

void Laurent::add_term(const Exponent& e, std::int64_t c) {
  if (static_cast<int>(e.size()) != n_) fail(ErrorCode::kDimensionMismatch, "exponent length mismatch");
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(e, c);
  if (!inserted) {
    it->second = checked_add(it->second, c);
    if (it->second == 0) terms_.erase(it);
  }
}

Laurent Laurent::operator+(const Laurent& o) const {
  if (n_ != o.n_) fail(ErrorCode::kDimensionMismatch, "variable count mismatch");
  Laurent r = *this;
  for (const auto& [e, c] : o.terms_) r.add_term(e, c);
  return r;
}

Laurent Laurent::operator-(const Laurent& o) const {
  if (n_ != o.n_) fail(ErrorCode::kDimensionMismatch, "variable count mismatch");
  Laurent r = *this;
  for (const auto& [e, c] : o.terms_) r.add_term(e, checked_mul(c, -1));
  return r;
}

Laurent Laurent::operator*(const Laurent& o) const {
  if (n_ != o.n_) fail(ErrorCode::kDimensionMismatch, "variable count mismatch");
  Laurent r(n_);
  Exponent e(n_);
  for (const auto& [e1, c1] : terms_)
    for (const auto& [e2, c2] : o.terms_) {
      for (int i = 0; i < n_; ++i) e[i] = e1[i] + e2[i];
      r.add_term(e, checked_mul(c1, c2));
    }
  return r;
}

std::string Laurent::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const auto& [e, c] = *it;
    os << (first ? (c < 0 ? "-" : "") : (c < 0 ? " - " : " + "));
    first = false;
    const std::int64_t mag = c < 0 ? -c : c;
    bool unit = true;
    for (int x : e) unit = unit && x == 0;
    if (mag != 1 || unit) os << mag;
    bool need_sep = mag != 1;
    for (int i = 0; i < n_; ++i) {
      if (e[i] == 0) continue;
      if (need_sep) os << '*';
      os << 'X' << (i + 1);
      if (e[i] != 1) os << '^' << e[i];
      need_sep = true;
    }
  }
  return os.str();
}

Laurent exact_divide(const Laurent& num, const Laurent& d) {
  if (d.is_zero()) fail(ErrorCode::kInexactDivision, "division by zero");
  if (num.nvars() != d.nvars()) fail(ErrorCode::kDimensionMismatch, "variable count mismatch");
  const int n = num.nvars();
  Laurent q(n);
  if (num.is_zero()) return q;
  // Every quotient exponent lies in the coordinatewise box determined by the
  // extreme exponents of num and d.
  Exponent lo(n), hi(n);
  for (int i = 0; i < n; ++i) {
    int nmin = INT32_MAX, nmax = INT32_MIN, dmin = INT32_MAX, dmax = INT32_MIN;
    for (const auto& [e, c] : num.terms()) nmin = std::min(nmin, e[i]), nmax = std::max(nmax, e[i]);
    for (const auto& [e, c] : d.terms()) dmin = std::min(dmin, e[i]), dmax = std::max(dmax, e[i]);
    lo[i] = nmin - dmin;
    hi[i] = nmax - dmax;
  }
  const auto& [dlead, dcoef] = *d.terms().rbegin();
  Laurent rem = num;
  while (!rem.is_zero()) {
    const auto& [rlead, rcoef] = *rem.terms().rbegin();
    Exponent e(n);
    for (int i = 0; i < n; ++i) {
      e[i] = rlead[i] - dlead[i];
      if (e[i] < lo[i] || e[i] > hi[i]) {
        fail(ErrorCode::kInexactDivision, "inexact division: remainder term " + Laurent::monomial(rlead, rcoef).to_string());
      }
    }
    if (rcoef % dcoef != 0) {
      fail(ErrorCode::kInexactDivision, "inexact division: coefficient " + std::to_string(rcoef) + " by " + std::to_string(dcoef));
    }
    const Laurent step = Laurent::monomial(e, rcoef / dcoef);
    q = q + step;
    rem = rem - step * d;
  }
  return q;
}

}  // namespace qbc
