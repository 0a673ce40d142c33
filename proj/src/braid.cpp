#include "ybalex/braid.hpp"

#include <cctype>
#include <charconv>
#include <numeric>
#include <optional>

namespace ybalex {

BraidWord parse_braid(std::string_view text) {
  std::size_t pos = 0;
  auto skip_ws = [&] {
    while (pos < text.size() &&
           std::isspace(static_cast<unsigned char>(text[pos])))
      ++pos;
  };
  auto parse_int = [&](const char* what) {
    skip_ws();
    const std::size_t start = pos;
    if (pos < text.size() && (text[pos] == '-' || text[pos] == '+')) ++pos;
    while (pos < text.size() &&
           std::isdigit(static_cast<unsigned char>(text[pos])))
      ++pos;
    long value = 0;
    const auto result =
        std::from_chars(text.data() + start, text.data() + pos, value);
    if (result.ec != std::errc{} || result.ptr != text.data() + pos ||
        pos == start)
      throw SyntaxError(std::string("expected ") + what, start);
    return value;
  };

  BraidWord word;
  const long strands = parse_int("a strand count");
  if (strands < 1) throw SyntaxError("strand count must be >= 1", 0);
  if (strands > 64) throw SyntaxError("strand count too large", 0);
  word.strands = static_cast<int>(strands);
  skip_ws();
  if (pos >= text.size() || text[pos] != ':')
    throw SyntaxError("expected ':' after the strand count", pos);
  ++pos;

  std::size_t letter_index = 0;
  while (true) {
    skip_ws();
    if (pos >= text.size()) break;
    const long letter = parse_int("a letter");
    if (letter == 0)
      throw BadGenerator("letter 0 is not a generator", letter_index);
    const long abs = letter < 0 ? -letter : letter;
    if (abs > word.strands - 1)
      throw BadGenerator("generator " + std::to_string(abs) +
                             " does not exist on " +
                             std::to_string(word.strands) + " strands",
                         letter_index);
    word.letters.push_back(static_cast<int>(letter));
    ++letter_index;
  }
  return word;
}

std::string to_string(const BraidWord& b) {
  std::string out = std::to_string(b.strands) + ":";
  for (int letter : b.letters) out += " " + std::to_string(letter);
  return out;
}

int writhe(const BraidWord& b) {
  int w = 0;
  for (int letter : b.letters) w += letter > 0 ? 1 : -1;
  return w;
}

BraidWord inverse(const BraidWord& b) {
  BraidWord inv{b.strands, {}};
  inv.letters.reserve(b.letters.size());
  for (auto it = b.letters.rbegin(); it != b.letters.rend(); ++it)
    inv.letters.push_back(-*it);
  return inv;
}

BraidWord conjugate(const BraidWord& b, const BraidWord& g) {
  if (b.strands != g.strands)
    throw StrandMismatch("conjugation needs a conjugator on the same strands");
  BraidWord out{b.strands, g.letters};
  out.letters.insert(out.letters.end(), b.letters.begin(), b.letters.end());
  const BraidWord ginv = inverse(g);
  out.letters.insert(out.letters.end(), ginv.letters.begin(),
                     ginv.letters.end());
  return out;
}

BraidWord stabilize(const BraidWord& b, int sign) {
  BraidWord out{b.strands + 1, b.letters};
  out.letters.push_back(sign >= 0 ? b.strands : -b.strands);
  return out;
}

std::vector<int> closure_permutation(const BraidWord& b) {
  std::vector<int> slots(b.strands);
  std::iota(slots.begin(), slots.end(), 0);
  for (int letter : b.letters) {
    const int i = (letter < 0 ? -letter : letter) - 1;
    std::swap(slots[i], slots[i + 1]);
  }
  // slots[p] = strand that ends at bottom position p; invert to map
  // top position -> bottom position.
  std::vector<int> perm(b.strands);
  for (int p = 0; p < b.strands; ++p) perm[slots[p]] = p;
  return perm;
}

int component_count(const BraidWord& b) {
  const std::vector<int> perm = closure_permutation(b);
  std::vector<bool> seen(perm.size(), false);
  int cycles = 0;
  for (std::size_t s = 0; s < perm.size(); ++s) {
    if (seen[s]) continue;
    ++cycles;
    int cur = static_cast<int>(s);
    while (!seen[cur]) {
      seen[cur] = true;
      cur = perm[cur];
    }
  }
  return cycles;
}

TensorOp represent(const BraidWord& b, const YbOperator& r) {
  if (r.case_tag == YbCase::scalar)
    throw WrongCase("the scalar operator family carries no braid information");
  const int d = r.dim();
  const int n = b.strands;
  for (std::size_t k = 0; k < b.letters.size(); ++k) {
    const int abs = b.letters[k] < 0 ? -b.letters[k] : b.letters[k];
    if (abs < 1 || abs > n - 1)
      throw BadGenerator("letter outside the strand range", k);
  }
  std::optional<TensorOp> gen_pos, gen_neg;
  TensorOp acc = TensorOp::identity(d, n);
  for (int letter : b.letters) {
    const int i = letter < 0 ? -letter : letter;
    const TensorOp* gen;
    if (letter > 0) {
      if (!gen_pos) gen_pos = TensorOp::from_matrix(r.matrix, d, 2);
      gen = &*gen_pos;
    } else {
      if (!gen_neg) gen_neg = TensorOp::from_matrix(invert(r).matrix, d, 2);
      gen = &*gen_neg;
    }
    acc = compose(acc, embed(*gen, i - 1, n - i - 1));
  }
  return acc;
}

const std::vector<FixtureBraid>& fixture_braids() {
  static const std::vector<FixtureBraid> fixtures = {
      {"unknot", "1:"},
      {"unknot-stabilized", "2: 1"},
      {"hopf-link", "2: 1 1"},
      {"trefoil", "2: 1 1 1"},
      {"figure-eight", "3: 1 -2 1 -2"},
  };
  return fixtures;
}

}  // namespace ybalex
