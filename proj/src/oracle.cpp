#include "ybalex/oracle.hpp"

#include <algorithm>
#include <map>
#include <utility>
#include <vector>

namespace ybalex {

namespace {

std::vector<int> free_reduce(const std::vector<int>& letters) {
  std::vector<int> out;
  out.reserve(letters.size());
  for (int l : letters) {
    if (!out.empty() && out.back() == -l)
      out.pop_back();
    else
      out.push_back(l);
  }
  return out;
}

/// A generator index used exactly once joins two otherwise disjoint strand
/// blocks by a single crossing. Such a crossing is nugatory: untwisting it
/// fuses strands i and i+1 without changing the closure, leaving a word on
/// one strand less with higher indices shifted down.
std::optional<BraidWord> merge_single_occurrence(const BraidWord& w) {
  std::vector<int> count(w.strands, 0);
  for (int l : w.letters) ++count[(l < 0 ? -l : l) - 1];
  for (int i = 1; i <= w.strands - 1; ++i) {
    if (count[i - 1] != 1) continue;
    BraidWord out{w.strands - 1, {}};
    out.letters.reserve(w.letters.size() - 1);
    for (int l : w.letters) {
      const int abs = l < 0 ? -l : l;
      if (abs == i) continue;
      if (abs > i)
        out.letters.push_back(l > 0 ? l - 1 : l + 1);
      else
        out.letters.push_back(l);
    }
    return out;
  }
  return std::nullopt;
}

/// True when some generator never occurs, so the closure splits into distant
/// pieces on both sides of that strand gap. Split links have vanishing
/// Alexander polynomial: a crossing change between distant components is an
/// isotopy, so the skein relation forces 0 on the smoothing that joins them.
bool splits(const BraidWord& w) {
  if (w.strands < 2) return false;
  std::vector<bool> used(w.strands, false);
  for (int l : w.letters) used[(l < 0 ? -l : l) - 1] = true;
  for (int i = 1; i <= w.strands - 1; ++i)
    if (!used[i - 1]) return true;
  return false;
}

struct SkeinContext {
  std::size_t budget;
  std::size_t nodes = 0;
  std::map<std::pair<int, std::vector<int>>, Scalar> memo;
};

Scalar skein_value(BraidWord w, SkeinContext& ctx);

Scalar skein_recurse(const BraidWord& w, std::size_t bad, SkeinContext& ctx) {
  const Scalar factor = Scalar::variable(Var::sqrt_t, 1) -
                        Scalar::variable(Var::sqrt_t, -1);
  BraidWord switched = w;
  switched.letters[bad] = -switched.letters[bad];
  BraidWord smoothed = w;
  smoothed.letters.erase(smoothed.letters.begin() +
                         static_cast<std::ptrdiff_t>(bad));
  // D(+) - D(-) = (t^1/2 - t^-1/2) D(0), resolved for whichever side the
  // word currently is.
  if (w.letters[bad] > 0)
    return skein_value(std::move(switched), ctx) +
           factor * skein_value(std::move(smoothed), ctx);
  return skein_value(std::move(switched), ctx) -
         factor * skein_value(std::move(smoothed), ctx);
}

Scalar skein_value(BraidWord w, SkeinContext& ctx) {
  if (++ctx.nodes > ctx.budget) throw RecursionBudgetExceeded(ctx.budget);
  w.letters = free_reduce(w.letters);
  while (auto merged = merge_single_occurrence(w)) {
    w = std::move(*merged);
    w.letters = free_reduce(w.letters);
  }
  if (w.strands == 1) return Scalar(1);
  if (splits(w)) return Scalar(0);

  const auto key = std::make_pair(w.strands, w.letters);
  if (auto it = ctx.memo.find(key); it != ctx.memo.end()) return it->second;

  Scalar value;
  const auto bad = first_bad_crossing(w);
  if (!bad) {
    // Descending closed diagrams are split unlinks; one unknotted component
    // gives 1, more give 0. (After the merge loop this means >= 2 here,
    // but keep the general rule.)
    value = Scalar(component_count(w) == 1 ? 1 : 0);
  } else {
    value = skein_recurse(w, *bad, ctx);
  }
  ctx.memo.emplace(key, value);
  return value;
}

}  // namespace

std::optional<std::size_t> first_bad_crossing(const BraidWord& b) {
  const int n = b.strands;
  const std::size_t len = b.letters.size();

  // Pass each strand down through the word once, recording for every
  // crossing which strand is on top. A positive letter puts the strand
  // entering on the left on top, a negative one the strand on the right.
  struct Event {
    std::size_t position;
    bool over;
  };
  std::vector<std::vector<Event>> events(n);
  std::vector<int> occupant(n);
  for (int s = 0; s < n; ++s) occupant[s] = s;
  for (std::size_t p = 0; p < len; ++p) {
    const int letter = b.letters[p];
    const int i = (letter < 0 ? -letter : letter) - 1;
    const int left = occupant[i];
    const int right = occupant[i + 1];
    events[left].push_back({p, letter > 0});
    events[right].push_back({p, letter < 0});
    std::swap(occupant[i], occupant[i + 1]);
  }

  // Walk the closure: components in order of their smallest top slot, each
  // strand traversed top to bottom, the closure arc leading to the strand
  // whose top slot is this strand's bottom slot. The first crossing reached
  // on its under strand before its over strand breaks descending order.
  const std::vector<int> perm = closure_permutation(b);
  std::vector<bool> strand_done(n, false);
  std::vector<bool> crossing_seen(len, false);
  for (int start = 0; start < n; ++start) {
    if (strand_done[start]) continue;
    int s = start;
    do {
      strand_done[s] = true;
      for (const Event& e : events[s]) {
        if (crossing_seen[e.position]) continue;
        crossing_seen[e.position] = true;
        if (!e.over) return e.position;
      }
      s = perm[s];
    } while (s != start);
  }
  return std::nullopt;
}

Scalar alexander_skein(const BraidWord& b, std::size_t node_budget) {
  SkeinContext ctx{node_budget};
  return skein_value(b, ctx);
}

ScalarMatrix reduced_burau(const BraidWord& b) {
  const int m = b.strands - 1;
  const Scalar t = Scalar::variable(Var::sqrt_t, 2);
  auto generator = [&](int letter) {
    ScalarMatrix g = ScalarMatrix::Identity(m, m);
    const int r = (letter < 0 ? -letter : letter) - 1;
    if (letter > 0) {
      if (r >= 1) g(r, r - 1) = t;
      g(r, r) = -t;
      if (r + 1 < m) g(r, r + 1) = Scalar(1);
    } else {
      if (r >= 1) g(r, r - 1) = Scalar(1);
      g(r, r) = -invert(t);
      if (r + 1 < m) g(r, r + 1) = invert(t);
    }
    return g;
  };
  ScalarMatrix out = ScalarMatrix::Identity(m, m);
  for (int letter : b.letters) out = out * generator(letter);
  return out;
}

Scalar alexander_burau(const BraidWord& b) {
  const int n = b.strands;
  const ScalarMatrix burau = reduced_burau(b);
  const ScalarMatrix id = ScalarMatrix::Identity(n - 1, n - 1);
  const Scalar det = determinant(burau - id);
  if (det.is_zero()) return Scalar(0);
  // Divide by 1 + t + ... + t^(n-1) = (1 - t^n)/(1 - t).
  Scalar divisor;
  for (int k = 0; k < n; ++k)
    divisor += Scalar::variable(Var::sqrt_t, 2 * k);
  return divide_exact(det, divisor, Var::sqrt_t);
}

bool units_equal(const Scalar& p, const Scalar& q) {
  if (p.is_zero() || q.is_zero()) return p.is_zero() && q.is_zero();
  if (p.term_count() != q.term_count()) return false;
  const int shift = p.terms().begin()->first.exponent(Var::sqrt_t) -
                    q.terms().begin()->first.exponent(Var::sqrt_t);
  const Scalar shifted = Scalar::variable(Var::sqrt_t, shift) * q;
  return p == shifted || p == -shifted;
}

}  // namespace ybalex
