#include "qbc/root_weyl.hpp"

#include <cstdlib>
#include <deque>
#include <numeric>
#include <sstream>

#include "qbc/error.hpp"

namespace qbc {

Rational::Rational(std::int64_t n, std::int64_t d) {
  if (d == 0) fail(ErrorCode::kDimensionMismatch, "zero denominator");
  if (d < 0) {
    n = -n;
    d = -d;
  }
  const std::int64_t g = std::gcd(n < 0 ? -n : n, d);
  num = g ? n / g : 0;
  den = g ? d / g : 1;
}

std::string Rational::to_string() const {
  return den == 1 ? std::to_string(num) : std::to_string(num) + "/" + std::to_string(den);
}

namespace {

std::int64_t bareiss_determinant(std::vector<std::vector<std::int64_t>> m) {
  const int n = static_cast<int>(m.size());
  if (n == 0) return 1;
  std::int64_t sign = 1;
  std::int64_t prev = 1;
  for (int k = 0; k < n - 1; ++k) {
    if (m[k][k] == 0) {
      int swap_row = -1;
      for (int r = k + 1; r < n; ++r)
        if (m[r][k] != 0) {
          swap_row = r;
          break;
        }
      if (swap_row < 0) return 0;
      std::swap(m[k], m[swap_row]);
      sign = -sign;
    }
    for (int i = k + 1; i < n; ++i)
      for (int j = k + 1; j < n; ++j) m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) / prev;
    prev = m[k][k];
  }
  return sign * m[n - 1][n - 1];
}

IntMatrix build_cartan(Family family, int rank) {
  IntMatrix c(rank, rank);
  for (int i = 0; i < rank; ++i) c(i, i) = 2;
  auto edge = [&](int i, int j) {  // 1-based
    c(i - 1, j - 1) = -1;
    c(j - 1, i - 1) = -1;
  };
  switch (family) {
    case Family::A:
      for (int i = 1; i < rank; ++i) edge(i, i + 1);
      break;
    case Family::D:
      for (int i = 1; i + 1 < rank - 1; ++i) edge(i, i + 1);
      edge(rank - 2, rank - 1);
      edge(rank - 2, rank);
      break;
    case Family::E:
      edge(1, 3);
      edge(3, 4);
      edge(4, 5);
      edge(2, 4);
      for (int i = 5; i < rank; ++i) edge(i, i + 1);
      break;
  }
  return c;
}

char family_letter(Family f) {
  switch (f) {
    case Family::A: return 'A';
    case Family::D: return 'D';
    case Family::E: return 'E';
  }
  return '?';
}

}  // namespace

struct CartanDatum::Data {
  Family family;
  int rank;
  IntMatrix cartan;
  IntMatrix adjugate;
  int det;
  IntMatrix distance;
};

CartanDatum CartanDatum::make(Family family, int rank) {
  const bool ok = (family == Family::A && rank >= 1 && rank <= 8) ||
                  (family == Family::D && rank >= 4 && rank <= 8) ||
                  (family == Family::E && rank >= 6 && rank <= 8);
  if (!ok) {
    fail(ErrorCode::kInvalidType,
         std::string("unsupported Cartan type ") + family_letter(family) + std::to_string(rank));
  }
  auto d = std::make_shared<Data>();
  d->family = family;
  d->rank = rank;
  d->cartan = build_cartan(family, rank);

  std::vector<std::vector<std::int64_t>> full(rank, std::vector<std::int64_t>(rank));
  for (int i = 0; i < rank; ++i)
    for (int j = 0; j < rank; ++j) full[i][j] = d->cartan(i, j);
  d->det = static_cast<int>(bareiss_determinant(full));

  // adj(C)_{ij} = (-1)^{i+j} det(minor_{ji}).
  d->adjugate = IntMatrix(rank, rank);
  for (int i = 0; i < rank; ++i)
    for (int j = 0; j < rank; ++j) {
      std::vector<std::vector<std::int64_t>> minor;
      for (int r = 0; r < rank; ++r) {
        if (r == j) continue;
        std::vector<std::int64_t> row;
        for (int s = 0; s < rank; ++s)
          if (s != i) row.push_back(d->cartan(r, s));
        minor.push_back(std::move(row));
      }
      const std::int64_t cof = bareiss_determinant(minor);
      d->adjugate(i, j) = static_cast<int>(((i + j) % 2 ? -cof : cof));
    }

  d->distance = IntMatrix(rank, rank, -1);
  for (int s = 0; s < rank; ++s) {
    std::deque<int> queue{s};
    d->distance(s, s) = 0;
    while (!queue.empty()) {
      const int u = queue.front();
      queue.pop_front();
      for (int v = 0; v < rank; ++v)
        if (d->cartan(u, v) == -1 && d->distance(s, v) < 0) {
          d->distance(s, v) = d->distance(s, u) + 1;
          queue.push_back(v);
        }
    }
  }
  return CartanDatum(std::move(d));
}

CartanDatum CartanDatum::parse(std::string_view name) {
  if (name.size() < 2) fail(ErrorCode::kInvalidType, "bad Cartan type '" + std::string(name) + "'");
  Family family;
  switch (name[0]) {
    case 'A': case 'a': family = Family::A; break;
    case 'D': case 'd': family = Family::D; break;
    case 'E': case 'e': family = Family::E; break;
    default: fail(ErrorCode::kInvalidType, "bad Cartan type '" + std::string(name) + "'");
  }
  int rank = 0;
  for (char ch : name.substr(1)) {
    if (ch < '0' || ch > '9') fail(ErrorCode::kInvalidType, "bad Cartan type '" + std::string(name) + "'");
    rank = rank * 10 + (ch - '0');
    if (rank > 100) fail(ErrorCode::kInvalidType, "bad Cartan type '" + std::string(name) + "'");
  }
  return make(family, rank);
}

Family CartanDatum::family() const { return d_->family; }
int CartanDatum::rank() const { return d_->rank; }
std::string CartanDatum::name() const { return family_letter(d_->family) + std::to_string(d_->rank); }
int CartanDatum::entry(int i, int j) const {
  check_index(i);
  check_index(j);
  return d_->cartan(i - 1, j - 1);
}
const IntMatrix& CartanDatum::cartan() const { return d_->cartan; }
int CartanDatum::distance(int i, int j) const {
  check_index(i);
  check_index(j);
  return d_->distance(i - 1, j - 1);
}
void CartanDatum::check_index(int i) const {
  if (!valid_index(i)) {
    fail(ErrorCode::kIndexOutOfRange,
         "index " + std::to_string(i) + " outside [1," + std::to_string(rank()) + "]");
  }
}
const IntMatrix& CartanDatum::adjugate() const { return d_->adjugate; }
int CartanDatum::determinant() const { return d_->det; }
bool CartanDatum::operator==(const CartanDatum& other) const {
  return d_ == other.d_ || (family() == other.family() && rank() == other.rank());
}

// ---------------------------------------------------------------------------

Weight Weight::zero(const CartanDatum& datum) { return Weight{std::vector<int>(datum.rank(), 0)}; }

Weight Weight::fundamental(const CartanDatum& datum, int i) {
  datum.check_index(i);
  Weight w = zero(datum);
  w.coords[i - 1] = 1;
  return w;
}

Weight Weight::simple_root(const CartanDatum& datum, int i) {
  datum.check_index(i);
  Weight w = zero(datum);
  for (int r = 0; r < datum.rank(); ++r) w.coords[r] = datum.cartan()(r, i - 1);
  return w;
}

Weight Weight::operator+(const Weight& o) const {
  if (coords.size() != o.coords.size()) fail(ErrorCode::kDimensionMismatch, "weight rank mismatch");
  Weight r = *this;
  for (std::size_t i = 0; i < coords.size(); ++i) r.coords[i] += o.coords[i];
  return r;
}
Weight Weight::operator-(const Weight& o) const { return *this + (-o); }
Weight Weight::operator-() const { return *this * -1; }
Weight Weight::operator*(int k) const {
  Weight r = *this;
  for (int& c : r.coords) c *= k;
  return r;
}
std::string Weight::to_string() const {
  std::ostringstream os;
  os << '[';
  for (std::size_t i = 0; i < coords.size(); ++i) os << (i ? "," : "") << coords[i];
  os << ']';
  return os.str();
}

namespace {
void check_dim(const CartanDatum& datum, const Weight& w) {
  if (static_cast<int>(w.coords.size()) != datum.rank()) {
    fail(ErrorCode::kDimensionMismatch, "weight of dimension " + std::to_string(w.coords.size()) +
                                            " over rank " + std::to_string(datum.rank()));
  }
}
}  // namespace

Weight reflect(const CartanDatum& datum, int i, const Weight& lambda) {
  datum.check_index(i);
  check_dim(datum, lambda);
  const int pairing = lambda.coords[i - 1];
  Weight r = lambda;
  if (pairing != 0)
    for (int row = 0; row < datum.rank(); ++row) r.coords[row] -= pairing * datum.cartan()(row, i - 1);
  return r;
}

Rational form(const CartanDatum& datum, const Weight& lambda, const Weight& mu) {
  check_dim(datum, lambda);
  check_dim(datum, mu);
  const IntMatrix& adj = datum.adjugate();
  std::int64_t acc = 0;
  for (int i = 0; i < datum.rank(); ++i) {
    if (lambda.coords[i] == 0) continue;
    std::int64_t row = 0;
    for (int j = 0; j < datum.rank(); ++j) row += static_cast<std::int64_t>(adj(i, j)) * mu.coords[j];
    acc += lambda.coords[i] * row;
  }
  return Rational(acc, datum.determinant());
}

int form_int(const CartanDatum& datum, const Weight& lambda, const Weight& mu) {
  const Rational r = form(datum, lambda, mu);
  if (!r.is_integer()) fail(ErrorCode::kDimensionMismatch, "form value " + r.to_string() + " is not integral");
  return static_cast<int>(r.num);
}

Weight apply_word(const CartanDatum& datum, const WeylWord& w, const Weight& lambda) {
  Weight r = lambda;
  for (auto it = w.rbegin(); it != w.rend(); ++it) r = reflect(datum, *it, r);
  return r;
}

std::vector<int> root_coordinates(const CartanDatum& datum, const Weight& beta) {
  check_dim(datum, beta);
  const IntMatrix& adj = datum.adjugate();
  const int det = datum.determinant();
  std::vector<int> c(datum.rank());
  for (int i = 0; i < datum.rank(); ++i) {
    std::int64_t acc = 0;
    for (int j = 0; j < datum.rank(); ++j) acc += static_cast<std::int64_t>(adj(i, j)) * beta.coords[j];
    if (acc % det != 0) fail(ErrorCode::kDimensionMismatch, "weight " + beta.to_string() + " is not in the root lattice");
    c[i] = static_cast<int>(acc / det);
  }
  return c;
}

int root_sign(const CartanDatum& datum, const Weight& beta) {
  const std::vector<int> c = root_coordinates(datum, beta);
  bool pos = false, neg = false;
  for (int x : c) {
    pos = pos || x > 0;
    neg = neg || x < 0;
  }
  if (pos && !neg) return 1;
  if (neg && !pos) return -1;
  return 0;
}

bool is_reduced(const CartanDatum& datum, const WeylWord& w) {
  for (int letter : w) datum.check_index(letter);
  // s_{i_1} ... s_{i_{k-1}} alpha_{i_k} must stay positive for every k.
  WeylElement prefix = WeylElement::identity(datum);
  for (int letter : w) {
    const Weight root = prefix.act(Weight::simple_root(datum, letter));
    if (root_sign(datum, root) <= 0) return false;
    prefix = prefix.right_mul(datum, letter);
  }
  return true;
}

LongestElement longest_and_star(const CartanDatum& datum) {
  LongestElement out;
  WeylElement w = WeylElement::identity(datum);
  for (;;) {
    const std::uint32_t desc = w.right_descents();
    int next = 0;
    for (int j = 1; j <= datum.rank(); ++j)
      if (!(desc & (1u << (j - 1)))) {
        next = j;
        break;
      }
    if (next == 0) break;
    w = w.right_mul(datum, next);
    out.word.push_back(next);
  }
  out.star.assign(datum.rank(), 0);
  for (int i = 1; i <= datum.rank(); ++i) {
    const Weight image = w.act(Weight::simple_root(datum, i));
    for (int j = 1; j <= datum.rank(); ++j)
      if (image == -Weight::simple_root(datum, j)) out.star[i - 1] = j;
  }
  return out;
}

// ---------------------------------------------------------------------------

WeylElement WeylElement::identity(const CartanDatum& datum) {
  WeylElement e;
  e.matrix_ = IntMatrix::identity(datum.rank());
  e.inverse_ = e.matrix_;
  return e;
}

WeylElement WeylElement::generator(const CartanDatum& datum, int i) {
  return identity(datum).left_mul(datum, i);
}

WeylElement WeylElement::from_word(const CartanDatum& datum, const WeylWord& w) {
  WeylElement e = identity(datum);
  for (int letter : w) e = e.right_mul(datum, letter);
  return e;
}

WeylElement WeylElement::longest(const CartanDatum& datum) {
  return from_word(datum, longest_and_star(datum).word);
}

namespace {
// Rows: S_i M = M - C[:, i] (row i of M).
void left_reflect(const CartanDatum& datum, IntMatrix& m, int i) {
  const int n = datum.rank();
  std::vector<int> row(n);
  for (int j = 0; j < n; ++j) row[j] = m(i - 1, j);
  for (int r = 0; r < n; ++r) {
    const int c = datum.cartan()(r, i - 1);
    if (c == 0) continue;
    for (int j = 0; j < n; ++j) m(r, j) -= c * row[j];
  }
}
// Columns: M S_i changes column i to col_i - M C[:, i].
void right_reflect(const CartanDatum& datum, IntMatrix& m, int i) {
  const int n = datum.rank();
  for (int r = 0; r < n; ++r) {
    int acc = 0;
    for (int k = 0; k < n; ++k) acc += m(r, k) * datum.cartan()(k, i - 1);
    m(r, i - 1) -= acc;
  }
}
std::uint32_t negative_row_sums(const IntMatrix& m) {
  std::uint32_t bits = 0;
  for (int i = 0; i < m.rows(); ++i) {
    int s = 0;
    for (int j = 0; j < m.cols(); ++j) s += m(i, j);
    if (s < 0) bits |= 1u << i;
  }
  return bits;
}
}  // namespace

WeylElement WeylElement::left_mul(const CartanDatum& datum, int i) const {
  datum.check_index(i);
  WeylElement r = *this;
  left_reflect(datum, r.matrix_, i);
  right_reflect(datum, r.inverse_, i);
  return r;
}

WeylElement WeylElement::right_mul(const CartanDatum& datum, int i) const {
  datum.check_index(i);
  WeylElement r = *this;
  right_reflect(datum, r.matrix_, i);
  left_reflect(datum, r.inverse_, i);
  return r;
}

WeylElement WeylElement::inverse() const {
  WeylElement r;
  r.matrix_ = inverse_;
  r.inverse_ = matrix_;
  return r;
}

WeylElement WeylElement::operator*(const WeylElement& rhs) const {
  WeylElement r;
  r.matrix_ = matrix_ * rhs.matrix_;
  r.inverse_ = rhs.inverse_ * inverse_;
  return r;
}

// s_i is a left descent iff <h_i, w rho> < 0, i.e. row i of M sums negative.
std::uint32_t WeylElement::left_descents() const { return negative_row_sums(matrix_); }
std::uint32_t WeylElement::right_descents() const { return negative_row_sums(inverse_); }

bool WeylElement::is_identity() const { return matrix_ == IntMatrix::identity(matrix_.rows()); }

WeylWord WeylElement::reduced_word(const CartanDatum& datum) const {
  WeylWord out;
  WeylElement w = *this;
  for (;;) {
    const std::uint32_t desc = w.left_descents();
    if (desc == 0) break;
    int i = 1;
    while (!(desc & (1u << (i - 1)))) ++i;
    out.push_back(i);
    w = w.left_mul(datum, i);
  }
  return out;
}

int WeylElement::length(const CartanDatum& datum) const {
  return static_cast<int>(reduced_word(datum).size());
}

Weight WeylElement::act(const Weight& lambda) const {
  if (static_cast<int>(lambda.coords.size()) != matrix_.cols()) {
    fail(ErrorCode::kDimensionMismatch, "weight rank mismatch");
  }
  return Weight{matrix_.apply(lambda.coords)};
}

}  // namespace qbc
