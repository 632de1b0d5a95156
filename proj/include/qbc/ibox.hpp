#pragma once

// Color sequences, i-boxes, admissible chains of i-boxes and box moves.

#include <compare>
#include <string>
#include <vector>

#include "qbc/root_weyl.hpp"

namespace qbc {

// A position on the integer line extended by -inf and +inf.
class Position {
 public:
  static Position neg_inf() { return Position(-1, 0); }
  static Position pos_inf() { return Position(1, 0); }
  static Position at(int k) { return Position(0, k); }

  bool finite() const { return kind_ == 0; }
  bool is_neg_inf() const { return kind_ < 0; }
  bool is_pos_inf() const { return kind_ > 0; }
  // Throws kPositionOutOfRange when infinite.
  int value() const;
  std::string to_string() const;

  auto operator<=>(const Position&) const = default;
  bool operator==(const Position&) const = default;
  friend auto operator<=>(const Position& p, int k) { return p <=> Position::at(k); }
  friend bool operator==(const Position& p, int k) { return p == Position::at(k); }

 private:
  Position(int kind, int v) : kind_(kind), v_(v) {}
  int kind_;
  int v_;
};

// Colors i_k for k in K = [offset, offset + size - 1].
class ColorSequence {
 public:
  ColorSequence(CartanDatum datum, std::vector<int> colors, int offset = 1);

  const CartanDatum& datum() const { return datum_; }
  const std::vector<int>& colors() const { return colors_; }
  int offset() const { return offset_; }
  int size() const { return static_cast<int>(colors_.size()); }
  int first() const { return offset_; }
  int last() const { return offset_ + size() - 1; }
  bool contains(int k) const { return k >= first() && k <= last(); }
  void check_position(int k) const;
  int color(int k) const;

  Position next_same(int k) const;           // k^+
  Position prev_same(int k) const;           // k^-
  Position next_color(int k, int j) const;   // k(j)^+ = min{s >= k : i_s = j}
  Position prev_color(int k, int j) const;   // k(j)^- = max{s <= k : i_s = j}

  bool operator==(const ColorSequence& o) const {
    return datum_ == o.datum_ && colors_ == o.colors_ && offset_ == o.offset_;
  }

 private:
  CartanDatum datum_;
  std::vector<int> colors_;
  int offset_;
};

struct IBox {
  int a = 0;
  int b = 0;

  std::string to_string() const;
  auto operator<=>(const IBox&) const = default;
};

bool is_ibox(const ColorSequence& seq, const IBox& box);
// [a,b} = [a, b(i_a)^-] and {a,b] = [a(i_b)^+, b].
IBox clamp_right(const ColorSequence& seq, int a, int b);
IBox clamp_left(const ColorSequence& seq, int a, int b);
// Positions s in the box with i_s = i_a.
std::vector<int> box_support(const ColorSequence& seq, const IBox& box);
bool boxes_commute(const ColorSequence& seq, const IBox& box1, const IBox& box2);

enum class Move : char { L = 'L', R = 'R' };
using MoveWord = std::vector<Move>;
MoveWord parse_moves(const std::string& s);
std::string moves_to_string(const MoveWord& h);

class AdmissibleChain {
 public:
  const ColorSequence& seq() const { return seq_; }
  int start() const { return c_; }
  const MoveWord& moves() const { return moves_; }
  int length() const { return static_cast<int>(boxes_.size()); }

  // 1-based accessors.
  const IBox& box(int k) const { return boxes_.at(k - 1); }
  const IBox& envelope(int k) const { return envelopes_.at(k - 1); }
  const std::vector<IBox>& boxes() const { return boxes_; }
  const std::vector<IBox>& envelopes() const { return envelopes_; }
  IBox range() const { return envelopes_.back(); }
  // Index of a box in the chain, or 0.
  int find(const IBox& box) const;
  // The position in envelope(k) \ envelope(k-1).
  int effective_end(int k) const;
  // Frozen members have the shape [a(i)^+, b(i)^-] for the range [a, b].
  bool is_frozen(int k) const;
  bool movable(int m) const;

  bool operator==(const AdmissibleChain& o) const {
    return seq_ == o.seq_ && c_ == o.c_ && moves_ == o.moves_;
  }

 private:
  friend AdmissibleChain chain_from(const ColorSequence&, int, const MoveWord&);
  AdmissibleChain(ColorSequence seq, int c, MoveWord moves)
      : seq_(std::move(seq)), c_(c), moves_(std::move(moves)) {}

  ColorSequence seq_;
  int c_;
  MoveWord moves_;
  std::vector<IBox> boxes_;
  std::vector<IBox> envelopes_;
};

AdmissibleChain chain_from(const ColorSequence& seq, int c, const MoveWord& h);
AdmissibleChain box_move(const AdmissibleChain& chain, int m);
// True when the envelope grown past index m is itself an i-box, in which
// case the box move at m exchanges c_m for its T-system partner.
bool move_is_exchange(const AdmissibleChain& chain, int m);
std::vector<int> connect_chains(const AdmissibleChain& from, const AdmissibleChain& to);
// Every admissible chain of the sequence with the given range.
std::vector<AdmissibleChain> chains_with_range(const ColorSequence& seq, int a, int b);
// The chain (a, R...R) whose k-th box is {a, a+k-1].
AdmissibleChain chain_plus(const ColorSequence& seq);

}  // namespace qbc
