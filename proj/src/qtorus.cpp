#include "qbc/qtorus.hpp"

#include <algorithm>
#include <climits>
#include <sstream>

#include "qbc/error.hpp"

namespace qbc {

TCoeff TCoeff::power(int doubled_exponent, std::int64_t c) {
  TCoeff r;
  r.add_term(doubled_exponent, c);
  return r;
}

bool TCoeff::all_nonnegative() const {
  return std::all_of(terms_.begin(), terms_.end(), [](const auto& t) { return t.second > 0; });
}

std::int64_t TCoeff::at_one() const {
  std::int64_t s = 0;
  for (const auto& [e, c] : terms_) s = checked_add(s, c);
  return s;
}

void TCoeff::add_term(int doubled_exponent, std::int64_t c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(doubled_exponent, c);
  if (!inserted) {
    it->second = checked_add(it->second, c);
    if (it->second == 0) terms_.erase(it);
  }
}

TCoeff TCoeff::operator+(const TCoeff& o) const {
  TCoeff r = *this;
  for (const auto& [e, c] : o.terms_) r.add_term(e, c);
  return r;
}

TCoeff TCoeff::operator-(const TCoeff& o) const {
  TCoeff r = *this;
  for (const auto& [e, c] : o.terms_) r.add_term(e, checked_mul(c, -1));
  return r;
}

TCoeff TCoeff::operator*(const TCoeff& o) const {
  TCoeff r;
  for (const auto& [e1, c1] : terms_)
    for (const auto& [e2, c2] : o.terms_) r.add_term(e1 + e2, checked_mul(c1, c2));
  return r;
}

TCoeff TCoeff::shifted(int doubled_exponent) const {
  TCoeff r;
  for (const auto& [e, c] : terms_) r.terms_.emplace(e + doubled_exponent, c);
  return r;
}

TCoeff TCoeff::bar() const {
  TCoeff r;
  for (const auto& [e, c] : terms_) r.terms_.emplace(-e, c);
  return r;
}

std::string TCoeff::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const auto& [e, c] = *it;
    os << (first ? (c < 0 ? "-" : "") : (c < 0 ? " - " : " + "));
    first = false;
    const std::int64_t mag = c < 0 ? -c : c;
    if (e == 0) {
      os << mag;
      continue;
    }
    if (mag != 1) os << mag << '*';
    os << "t";
    if (e != 2) os << '^' << (e % 2 == 0 ? std::to_string(e / 2) : "(" + std::to_string(e) + "/2)");
  }
  return os.str();
}

TCoeff exact_divide(const TCoeff& num, const TCoeff& d) {
  if (d.is_zero()) fail(ErrorCode::kInexactDivision, "division by the zero coefficient");
  TCoeff q;
  if (num.is_zero()) return q;
  const int lo = num.terms().begin()->first - d.terms().begin()->first;
  const auto [dlead, dcoef] = *d.terms().rbegin();
  TCoeff rem = num;
  while (!rem.is_zero()) {
    const auto [rlead, rcoef] = *rem.terms().rbegin();
    const int e = rlead - dlead;
    if (e < lo || rcoef % dcoef != 0) {
      fail(ErrorCode::kInexactDivision, "coefficient " + num.to_string() + " not divisible by " + d.to_string());
    }
    const TCoeff step = TCoeff::power(e, rcoef / dcoef);
    q = q + step;
    rem = rem - step * d;
  }
  return q;
}

// ---------------------------------------------------------------------------

TorusElement::TorusElement(Matrix L) : L_(std::move(L)) {
  if (!L_ || !L_->is_skew_symmetric()) fail(ErrorCode::kShapeMismatch, "torus matrix must be skew-symmetric");
}

TorusElement::Matrix TorusElement::make_matrix(const IntMatrix& L) { return std::make_shared<const IntMatrix>(L); }

TorusElement TorusElement::monomial(const Matrix& L, const Exponent& a, const TCoeff& c) {
  TorusElement x(L);
  x.add_term(a, c);
  return x;
}

TorusElement TorusElement::unit(const Matrix& L) { return monomial(L, Exponent(L->rows(), 0)); }

void TorusElement::add_term(const Exponent& a, const TCoeff& c) {
  if (static_cast<int>(a.size()) != rank()) fail(ErrorCode::kDimensionMismatch, "exponent length mismatch");
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(a, c);
  if (!inserted) {
    it->second = it->second + c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

namespace {
void check_same(const TorusElement& x, const TorusElement& y) {
  if (x.matrix() != y.matrix() && !(*x.matrix() == *y.matrix())) {
    fail(ErrorCode::kShapeMismatch, "torus elements over different matrices");
  }
}
}  // namespace

TorusElement TorusElement::operator+(const TorusElement& o) const {
  check_same(*this, o);
  TorusElement r = *this;
  for (const auto& [a, c] : o.terms_) r.add_term(a, c);
  return r;
}

TorusElement TorusElement::operator-(const TorusElement& o) const {
  check_same(*this, o);
  TorusElement r = *this;
  for (const auto& [a, c] : o.terms_) r.add_term(a, TCoeff() - c);
  return r;
}

int twist(const IntMatrix& L, const Exponent& a, const Exponent& b) {
  std::int64_t s = 0;
  for (int i = 0; i < L.rows(); ++i) {
    if (a[i] == 0) continue;
    std::int64_t row = 0;
    for (int j = 0; j < L.cols(); ++j) row += static_cast<std::int64_t>(L(i, j)) * b[j];
    s += a[i] * row;
  }
  if (s > INT_MAX || s < INT_MIN) fail(ErrorCode::kOverflow, "t-exponent overflow");
  return static_cast<int>(s);
}

TorusElement TorusElement::operator*(const TorusElement& o) const {
  check_same(*this, o);
  TorusElement r(L_);
  const int n = rank();
  Exponent sum(n);
  for (const auto& [a, ca] : terms_)
    for (const auto& [b, cb] : o.terms_) {
      for (int i = 0; i < n; ++i) sum[i] = a[i] + b[i];
      r.add_term(sum, (ca * cb).shifted(twist(*L_, a, b)));
    }
  return r;
}

TorusElement TorusElement::scaled(const TCoeff& c) const {
  TorusElement r(L_);
  for (const auto& [a, ca] : terms_) r.add_term(a, ca * c);
  return r;
}

TorusElement TorusElement::bar() const {
  TorusElement r(L_);
  for (const auto& [a, c] : terms_) r.terms_.emplace(a, c.bar());
  return r;
}

bool TorusElement::all_coefficients_nonnegative() const {
  return std::all_of(terms_.begin(), terms_.end(), [](const auto& t) { return t.second.all_nonnegative(); });
}

bool TorusElement::operator==(const TorusElement& o) const {
  return (L_ == o.L_ || *L_ == *o.L_) && terms_ == o.terms_;
}

std::string TorusElement::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    if (!first) os << " + ";
    first = false;
    os << '(' << it->second.to_string() << ")X^[";
    for (std::size_t i = 0; i < it->first.size(); ++i) os << (i ? "," : "") << it->first[i];
    os << ']';
  }
  return os.str();
}

TorusElement mul(const TorusElement& x, const TorusElement& y) { return x * y; }
TorusElement bar(const TorusElement& x) { return x.bar(); }

TorusElement exact_divide(const TorusElement& num, const TorusElement& d) {
  check_same(num, d);
  if (d.is_zero()) fail(ErrorCode::kInexactDivision, "division by zero");
  const int n = num.rank();
  const IntMatrix& L = *num.matrix();
  TorusElement q(num.matrix());
  if (num.is_zero()) return q;
  // Newton polytopes add under multiplication, so quotient exponents are
  // confined to a coordinatewise box.
  Exponent lo(n), hi(n);
  for (int i = 0; i < n; ++i) {
    int nmin = INT_MAX, nmax = INT_MIN, dmin = INT_MAX, dmax = INT_MIN;
    for (const auto& [e, c] : num.terms()) nmin = std::min(nmin, e[i]), nmax = std::max(nmax, e[i]);
    for (const auto& [e, c] : d.terms()) dmin = std::min(dmin, e[i]), dmax = std::max(dmax, e[i]);
    lo[i] = nmin - dmin;
    hi[i] = nmax - dmax;
  }
  const Exponent dlead = d.terms().rbegin()->first;
  const TCoeff dcoef = d.terms().rbegin()->second;
  TorusElement rem = num;
  while (!rem.is_zero()) {
    const Exponent rlead = rem.terms().rbegin()->first;
    const TCoeff rcoef = rem.terms().rbegin()->second;
    Exponent e(n);
    bool inside = true;
    for (int i = 0; i < n; ++i) {
      e[i] = rlead[i] - dlead[i];
      inside = inside && e[i] >= lo[i] && e[i] <= hi[i];
    }
    auto offending = [&] {
      std::ostringstream os;
      os << "inexact division: remainder term (" << rcoef.to_string() << ")X^[";
      for (int i = 0; i < n; ++i) os << (i ? "," : "") << rlead[i];
      os << "] cannot be cancelled";
      return os.str();
    };
    if (!inside) fail(ErrorCode::kInexactDivision, offending());
    // d_lead * (c X^e) = dcoef c t^{twist/2} X^{rlead}
    TCoeff c;
    try {
      c = exact_divide(rcoef, dcoef).shifted(-twist(L, dlead, e));
    } catch (const AlgebraError&) {
      fail(ErrorCode::kInexactDivision, offending());
    }
    const TorusElement step = TorusElement::monomial(num.matrix(), e, c);
    q = q + step;
    rem = rem - d * step;
  }
  return q;
}

Laurent specialize_t1(const TorusElement& x) {
  Laurent r(x.rank());
  for (const auto& [a, c] : x.terms()) r.add_term(a, c.at_one());
  return r;
}

}  // namespace qbc
