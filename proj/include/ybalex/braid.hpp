#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "ybalex/tensor.hpp"
#include "ybalex/ybop.hpp"

namespace ybalex {

/// A braid word: the strand count n >= 1 and a sequence of nonzero signed
/// letters, letter +i meaning the i-th elementary crossing and -i its
/// inverse, 1 <= i <= n-1. The empty sequence is the identity braid.
struct BraidWord {
  int strands = 1;
  std::vector<int> letters;

  friend bool operator==(const BraidWord&, const BraidWord&) = default;
};

/// Parses "<n>: l1 l2 ..." with whitespace-separated signed letters, e.g.
/// "2: 1 1 1". Throws SyntaxError for malformed text and BadGenerator when a
/// letter falls outside [1, n-1] (position = 0-based letter index).
BraidWord parse_braid(std::string_view text);

/// Letters rendered back to the "<n>: l1 l2 ..." form.
std::string to_string(const BraidWord& b);

/// Exponent sum of the word; the homomorphism sending every positive letter
/// to 1.
int writhe(const BraidWord& b);

/// The inverse word: reversed letters with flipped signs.
BraidWord inverse(const BraidWord& b);

/// The word g b g^-1 on the same strand count.
BraidWord conjugate(const BraidWord& b, const BraidWord& g);

/// The word on n+1 strands obtained by appending the (sign * n)-th letter.
BraidWord stabilize(const BraidWord& b, int sign);

/// Where each top endpoint lands at the bottom of the braid, 0-based.
std::vector<int> closure_permutation(const BraidWord& b);

/// Number of components of the closed-up link: cycles of the permutation.
int component_count(const BraidWord& b);

/// The braid-group representation on V^(tensor n): each letter becomes the
/// operator R (or its inverse) on its two adjacent tensor slots, and the
/// word maps to the composition with the leftmost letter applied last as an
/// operator. The identity braid maps to the identity. Requires a unit-case
/// operator (the scalar family is refused).
TensorOp represent(const BraidWord& b, const YbOperator& r);

/// Fixture braids shipped with the engine; every expected invariant value is
/// produced by the oracles, never entered by hand.
struct FixtureBraid {
  const char* name;
  const char* word;
};
const std::vector<FixtureBraid>& fixture_braids();

}  // namespace ybalex
