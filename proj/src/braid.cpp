#include "qbc/braid.hpp"

#include <sstream>

#include "qbc/error.hpp"

namespace qbc {

namespace {

void check_word(const CartanDatum& datum, const BraidWord& w) {
  for (int letter : w) datum.check_index(letter);
}

void check_position(const BraidWord& w, int k, int span) {
  if (k < 1 || k + span - 1 > static_cast<int>(w.size())) {
    fail(ErrorCode::kPositionOutOfRange,
         "move position " + std::to_string(k) + " outside word of length " + std::to_string(w.size()));
  }
}

int lowest_bit(std::uint32_t bits) {
  int i = 1;
  while (!(bits & 1u)) {
    bits >>= 1;
    ++i;
  }
  return i;
}

WeylElement relabel_star(const CartanDatum& datum, const WeylElement& x, const std::vector<int>& star) {
  WeylWord w = x.reduced_word(datum);
  for (int& letter : w) letter = star[letter - 1];
  return WeylElement::from_word(datum, w);
}

}  // namespace

BraidWord gamma_move(const CartanDatum& datum, const BraidWord& w, int k) {
  check_word(datum, w);
  check_position(w, k, 2);
  const int d = datum.distance(w[k - 1], w[k]);
  if (d == 0) fail(ErrorCode::kEqualLetters, "commutation move on equal letters at " + std::to_string(k));
  if (d == 1) fail(ErrorCode::kAdjacentLetters, "commutation move on adjacent letters at " + std::to_string(k));
  BraidWord out = w;
  std::swap(out[k - 1], out[k]);
  return out;
}

BraidWord beta_move(const CartanDatum& datum, const BraidWord& w, int k) {
  check_word(datum, w);
  check_position(w, k, 3);
  const int i = w[k - 1];
  const int j = w[k];
  if (w[k + 1] != i || datum.distance(i, j) != 1) {
    fail(ErrorCode::kPatternMismatch, "no braid pattern i,j,i with adjacent i,j at " + std::to_string(k));
  }
  BraidWord out = w;
  out[k - 1] = j;
  out[k] = i;
  out[k + 1] = j;
  return out;
}

std::vector<WeylWord> GarsideNF::factor_words(const CartanDatum& datum) const {
  std::vector<WeylWord> out;
  out.reserve(factors.size());
  for (const auto& x : factors) out.push_back(x.reduced_word(datum));
  return out;
}

BraidWord GarsideNF::to_word(const CartanDatum& datum) const {
  BraidWord out = delta_power(datum, r);
  for (const auto& x : factors) {
    const WeylWord w = x.reduced_word(datum);
    out.insert(out.end(), w.begin(), w.end());
  }
  return out;
}

bool left_weighted(const WeylElement& x, const WeylElement& y) {
  return (y.left_descents() & ~x.right_descents()) == 0;
}

GarsideNF garside_nf(const CartanDatum& datum, const BraidWord& w) {
  check_word(datum, w);
  const WeylElement w0 = WeylElement::longest(datum);
  std::vector<WeylElement> simples;
  for (int letter : w) {
    simples.push_back(WeylElement::generator(datum, letter));
    // Sweep adjacent pairs until all are left-weighted. Each transfer makes
    // an earlier factor strictly longer, so the loop terminates.
    bool changed = true;
    while (changed) {
      changed = false;
      for (std::size_t s = simples.size() - 1; s > 0; --s) {
        WeylElement& x = simples[s - 1];
        WeylElement& y = simples[s];
        for (;;) {
          const std::uint32_t movable = y.left_descents() & ~x.right_descents();
          if (!movable) break;
          const int j = lowest_bit(movable);
          x = x.right_mul(datum, j);
          y = y.left_mul(datum, j);
          changed = true;
        }
      }
    }
    while (!simples.empty() && simples.back().is_identity()) simples.pop_back();
  }
  GarsideNF nf;
  std::size_t s = 0;
  while (s < simples.size() && simples[s] == w0) ++s;
  nf.r = static_cast<int>(s);
  nf.factors.assign(simples.begin() + static_cast<std::ptrdiff_t>(s), simples.end());
  return nf;
}

bool braid_equal(const CartanDatum& datum, const BraidWord& u, const BraidWord& v) {
  if (u.size() != v.size()) return false;
  return garside_nf(datum, u) == garside_nf(datum, v);
}

WeylElement simple_meet(const CartanDatum& datum, const WeylElement& x, const WeylElement& y) {
  // z runs up the common lower set in weak order; rx = z^{-1} x, ry = z^{-1} y.
  WeylElement z = WeylElement::identity(datum);
  WeylElement rx = x;
  WeylElement ry = y;
  for (;;) {
    const std::uint32_t common = rx.left_descents() & ry.left_descents();
    if (!common) return z;
    const int i = lowest_bit(common);
    z = z.right_mul(datum, i);
    rx = rx.left_mul(datum, i);
    ry = ry.left_mul(datum, i);
  }
}

namespace {

WeylElement head(const CartanDatum& datum, const GarsideNF& nf) {
  if (nf.r > 0) return WeylElement::longest(datum);
  if (!nf.factors.empty()) return nf.factors.front();
  return WeylElement::identity(datum);
}

// s^{-1} u for a simple s dividing the head of u.
BraidWord strip_head(const CartanDatum& datum, const GarsideNF& nf, const WeylElement& s) {
  GarsideNF rest = nf;
  WeylElement h;
  if (rest.r > 0) {
    h = WeylElement::longest(datum);
    --rest.r;
  } else {
    h = rest.factors.front();
    rest.factors.erase(rest.factors.begin());
  }
  BraidWord out = (s.inverse() * h).reduced_word(datum);
  const BraidWord tail = rest.to_word(datum);
  out.insert(out.end(), tail.begin(), tail.end());
  return out;
}

}  // namespace

BraidWord meet(const CartanDatum& datum, const BraidWord& u, const BraidWord& v) {
  check_word(datum, u);
  check_word(datum, v);
  BraidWord result;
  BraidWord cu = u;
  BraidWord cv = v;
  for (;;) {
    const GarsideNF nu = garside_nf(datum, cu);
    const GarsideNF nv = garside_nf(datum, cv);
    const WeylElement s = simple_meet(datum, head(datum, nu), head(datum, nv));
    if (s.is_identity()) break;
    const WeylWord sw = s.reduced_word(datum);
    result.insert(result.end(), sw.begin(), sw.end());
    cu = strip_head(datum, nu, s);
    cv = strip_head(datum, nv, s);
  }
  return result;
}

bool is_prefix(const CartanDatum& datum, const BraidWord& u, const BraidWord& v) {
  return braid_equal(datum, meet(datum, u, v), u);
}

DeltaComplement delta_complement(const CartanDatum& datum, const BraidWord& w) {
  const GarsideNF nf = garside_nf(datum, w);
  const LongestElement longest = longest_and_star(datum);
  const WeylElement w0 = WeylElement::from_word(datum, longest.word);
  DeltaComplement out;
  out.m = nf.r + static_cast<int>(nf.factors.size());
  // x_1 ... x_k d(x_k) = x_1 ... x_{k-1} Delta = Delta phi(x_1) ... phi(x_{k-1}),
  // so the complement of the shorter, relabelled word follows d(x_k).
  std::vector<WeylElement> rest = nf.factors;
  while (!rest.empty()) {
    const WeylElement complement = rest.back().inverse() * w0;
    const WeylWord cw = complement.reduced_word(datum);
    out.y.insert(out.y.end(), cw.begin(), cw.end());
    rest.pop_back();
    for (auto& x : rest) x = relabel_star(datum, x, longest.star);
  }
  return out;
}

BraidWord delta_power(const CartanDatum& datum, int m) {
  const WeylWord w0 = longest_and_star(datum).word;
  BraidWord out;
  for (int i = 0; i < m; ++i) out.insert(out.end(), w0.begin(), w0.end());
  return out;
}

BraidWord concat(const BraidWord& u, const BraidWord& v) {
  BraidWord out = u;
  out.insert(out.end(), v.begin(), v.end());
  return out;
}

std::string word_to_string(const std::vector<int>& w) {
  std::ostringstream os;
  for (std::size_t i = 0; i < w.size(); ++i) os << (i ? "," : "") << w[i];
  return os.str();
}

}  // namespace qbc
