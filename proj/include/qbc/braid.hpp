#pragma once

// Positive braid monoid on the Dynkin index set: word moves, Garside left
// normal forms, the prefix lattice, and completion to powers of Delta.

#include <string>
#include <vector>

#include "qbc/root_weyl.hpp"

namespace qbc {

using BraidWord = std::vector<int>;

// Commutation move at k (1-based): swaps letters k and k+1 when d > 1.
BraidWord gamma_move(const CartanDatum& datum, const BraidWord& w, int k);
// Braid move at k: (.., i, j, i, ..) -> (.., j, i, j, ..) when d(i, j) = 1.
BraidWord beta_move(const CartanDatum& datum, const BraidWord& w, int k);

// Delta^r x_1 ... x_k with every x_s a proper nontrivial permutation braid.
struct GarsideNF {
  int r = 0;
  std::vector<WeylElement> factors;

  std::vector<WeylWord> factor_words(const CartanDatum& datum) const;
  // Delta^r as r copies of the longest word, followed by the factor words.
  BraidWord to_word(const CartanDatum& datum) const;
  bool operator==(const GarsideNF&) const = default;
};

GarsideNF garside_nf(const CartanDatum& datum, const BraidWord& w);
bool braid_equal(const CartanDatum& datum, const BraidWord& u, const BraidWord& v);

// Left-weightedness of a pair of simple elements: Delta ^ (x y) = x.
bool left_weighted(const WeylElement& x, const WeylElement& y);

// Greatest common prefix of two permutation braids.
WeylElement simple_meet(const CartanDatum& datum, const WeylElement& x, const WeylElement& y);

// u ^ v in the prefix order, as a word.
BraidWord meet(const CartanDatum& datum, const BraidWord& u, const BraidWord& v);
// u is a left divisor of v.
bool is_prefix(const CartanDatum& datum, const BraidWord& u, const BraidWord& v);

struct DeltaComplement {
  BraidWord y;
  int m = 0;
};
// The shortest power Delta^m divisible on the left by w, with w y = Delta^m.
DeltaComplement delta_complement(const CartanDatum& datum, const BraidWord& w);

BraidWord delta_power(const CartanDatum& datum, int m);
BraidWord concat(const BraidWord& u, const BraidWord& v);

std::string word_to_string(const std::vector<int>& w);

}  // namespace qbc
