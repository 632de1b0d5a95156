#include "qbc/ibox.hpp"

#include <deque>
#include <map>

#include "qbc/error.hpp"

namespace qbc {

int Position::value() const {
  if (!finite()) fail(ErrorCode::kPositionOutOfRange, "infinite position has no value");
  return v_;
}

std::string Position::to_string() const {
  if (is_neg_inf()) return "-inf";
  if (is_pos_inf()) return "+inf";
  return std::to_string(v_);
}

ColorSequence::ColorSequence(CartanDatum datum, std::vector<int> colors, int offset)
    : datum_(std::move(datum)), colors_(std::move(colors)), offset_(offset) {
  if (colors_.empty()) fail(ErrorCode::kEmptyInterval, "empty color sequence");
  for (int c : colors_) datum_.check_index(c);
}

void ColorSequence::check_position(int k) const {
  if (!contains(k)) {
    fail(ErrorCode::kPositionOutOfRange, "position " + std::to_string(k) + " outside [" +
                                             std::to_string(first()) + "," + std::to_string(last()) + "]");
  }
}

int ColorSequence::color(int k) const {
  check_position(k);
  return colors_[k - offset_];
}

Position ColorSequence::next_same(int k) const {
  const int c = color(k);
  for (int s = k + 1; s <= last(); ++s)
    if (colors_[s - offset_] == c) return Position::at(s);
  return Position::pos_inf();
}

Position ColorSequence::prev_same(int k) const {
  const int c = color(k);
  for (int s = k - 1; s >= first(); --s)
    if (colors_[s - offset_] == c) return Position::at(s);
  return Position::neg_inf();
}

Position ColorSequence::next_color(int k, int j) const {
  check_position(k);
  datum_.check_index(j);
  for (int s = k; s <= last(); ++s)
    if (colors_[s - offset_] == j) return Position::at(s);
  return Position::pos_inf();
}

Position ColorSequence::prev_color(int k, int j) const {
  check_position(k);
  datum_.check_index(j);
  for (int s = k; s >= first(); --s)
    if (colors_[s - offset_] == j) return Position::at(s);
  return Position::neg_inf();
}

std::string IBox::to_string() const { return "[" + std::to_string(a) + "," + std::to_string(b) + "]"; }

bool is_ibox(const ColorSequence& seq, const IBox& box) {
  return seq.contains(box.a) && seq.contains(box.b) && box.a <= box.b && seq.color(box.a) == seq.color(box.b);
}

namespace {
void check_interval(const ColorSequence& seq, int a, int b) {
  seq.check_position(a);
  seq.check_position(b);
  if (a > b) fail(ErrorCode::kEmptyInterval, "empty interval [" + std::to_string(a) + "," + std::to_string(b) + "]");
}
void check_ibox(const ColorSequence& seq, const IBox& box) {
  if (!is_ibox(seq, box)) fail(ErrorCode::kNotIBox, box.to_string() + " is not an i-box");
}
}  // namespace

IBox clamp_right(const ColorSequence& seq, int a, int b) {
  check_interval(seq, a, b);
  return IBox{a, seq.prev_color(b, seq.color(a)).value()};
}

IBox clamp_left(const ColorSequence& seq, int a, int b) {
  check_interval(seq, a, b);
  return IBox{seq.next_color(a, seq.color(b)).value(), b};
}

std::vector<int> box_support(const ColorSequence& seq, const IBox& box) {
  check_ibox(seq, box);
  std::vector<int> out;
  const int c = seq.color(box.a);
  for (int s = box.a; s <= box.b; ++s)
    if (seq.color(s) == c) out.push_back(s);
  return out;
}

bool boxes_commute(const ColorSequence& seq, const IBox& box1, const IBox& box2) {
  check_ibox(seq, box1);
  check_ibox(seq, box2);
  auto nested = [&](const IBox& outer, const IBox& inner) {
    return seq.prev_same(outer.a) < inner.a && inner.a <= inner.b && seq.next_same(outer.b) > inner.b;
  };
  return nested(box1, box2) || nested(box2, box1);
}

MoveWord parse_moves(const std::string& s) {
  MoveWord out;
  for (char ch : s) {
    if (ch == 'L' || ch == 'l') {
      out.push_back(Move::L);
    } else if (ch == 'R' || ch == 'r') {
      out.push_back(Move::R);
    } else {
      fail(ErrorCode::kPatternMismatch, std::string("bad move letter '") + ch + "'");
    }
  }
  return out;
}

std::string moves_to_string(const MoveWord& h) {
  std::string s;
  for (Move m : h) s.push_back(static_cast<char>(m));
  return s;
}

int AdmissibleChain::find(const IBox& box) const {
  for (int k = 1; k <= length(); ++k)
    if (boxes_[k - 1] == box) return k;
  return 0;
}

int AdmissibleChain::effective_end(int k) const {
  if (k == 1) return c_;
  return moves_.at(k - 2) == Move::L ? envelope(k).a : envelope(k).b;
}

bool AdmissibleChain::is_frozen(int k) const {
  const IBox& bx = box(k);
  const IBox rg = range();
  const int i = seq_.color(bx.a);
  return seq_.next_color(rg.a, i) == bx.a && seq_.prev_color(rg.b, i) == bx.b;
}

bool AdmissibleChain::movable(int m) const {
  if (m < 1 || m >= length()) return false;
  return m == 1 || moves_[m - 2] != moves_[m - 1];
}

AdmissibleChain chain_from(const ColorSequence& seq, int c, const MoveWord& h) {
  seq.check_position(c);
  AdmissibleChain chain(seq, c, h);
  int lo = c;
  int hi = c;
  chain.boxes_.push_back(IBox{c, c});
  chain.envelopes_.push_back(IBox{c, c});
  for (std::size_t k = 0; k < h.size(); ++k) {
    if (h[k] == Move::L) {
      --lo;
    } else {
      ++hi;
    }
    if (!seq.contains(lo) || !seq.contains(hi)) {
      fail(ErrorCode::kPositionOutOfRange, "chain expansion step " + std::to_string(k + 1) + " leaves the sequence");
    }
    chain.envelopes_.push_back(IBox{lo, hi});
    chain.boxes_.push_back(h[k] == Move::L ? clamp_right(seq, lo, hi) : clamp_left(seq, lo, hi));
  }
  return chain;
}

AdmissibleChain box_move(const AdmissibleChain& chain, int m) {
  if (!chain.movable(m)) {
    fail(ErrorCode::kNotMovable, "box " + std::to_string(m) + " of a chain of length " +
                                     std::to_string(chain.length()) + " is not movable");
  }
  MoveWord h = chain.moves();
  int c = chain.start();
  if (m == 1) {
    c += h[0] == Move::R ? 1 : -1;
  } else {
    h[m - 2] = h[m - 2] == Move::L ? Move::R : Move::L;
  }
  h[m - 1] = h[m - 1] == Move::L ? Move::R : Move::L;
  return chain_from(chain.seq(), c, h);
}

bool move_is_exchange(const AdmissibleChain& chain, int m) {
  if (!chain.movable(m)) {
    fail(ErrorCode::kNotMovable, "box " + std::to_string(m) + " is not movable");
  }
  return is_ibox(chain.seq(), chain.envelope(m + 1));
}

std::vector<int> connect_chains(const AdmissibleChain& from, const AdmissibleChain& to) {
  if (!(from.seq() == to.seq()) || from.range() != to.range()) {
    fail(ErrorCode::kRangeMismatch, "chains over ranges " + from.range().to_string() + " and " +
                                        to.range().to_string() + " cannot be connected");
  }
  using State = std::pair<int, std::string>;
  auto key = [](const AdmissibleChain& ch) { return State{ch.start(), moves_to_string(ch.moves())}; };
  const State target = key(to);
  std::map<State, std::pair<State, int>> parent;
  std::deque<AdmissibleChain> queue{from};
  parent.emplace(key(from), std::pair{key(from), 0});
  while (!queue.empty()) {
    const AdmissibleChain cur = queue.front();
    queue.pop_front();
    const State ck = key(cur);
    if (ck == target) {
      std::vector<int> path;
      State s = ck;
      while (s != key(from)) {
        const auto& [prev, m] = parent.at(s);
        path.push_back(m);
        s = prev;
      }
      return {path.rbegin(), path.rend()};
    }
    for (int m = 1; m < cur.length(); ++m) {
      if (!cur.movable(m)) continue;
      AdmissibleChain next = box_move(cur, m);
      if (parent.emplace(key(next), std::pair{ck, m}).second) queue.push_back(std::move(next));
    }
  }
  fail(ErrorCode::kRangeMismatch, "no box-move path between the chains");
}

std::vector<AdmissibleChain> chains_with_range(const ColorSequence& seq, int a, int b) {
  seq.check_position(a);
  seq.check_position(b);
  if (a > b) fail(ErrorCode::kEmptyInterval, "empty chain range");
  const int n = b - a;
  std::vector<AdmissibleChain> out;
  for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
    MoveWord h(n);
    int lefts = 0;
    for (int k = 0; k < n; ++k) {
      h[k] = (mask >> (n - 1 - k)) & 1u ? Move::R : Move::L;
      if (h[k] == Move::L) ++lefts;
    }
    out.push_back(chain_from(seq, a + lefts, h));
  }
  return out;
}

AdmissibleChain chain_plus(const ColorSequence& seq) {
  return chain_from(seq, seq.first(), MoveWord(seq.size() - 1, Move::R));
}

}  // namespace qbc
