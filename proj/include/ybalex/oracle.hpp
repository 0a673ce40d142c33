#pragma once

#include <cstddef>
#include <optional>

#include "ybalex/braid.hpp"
#include "ybalex/matrix.hpp"

namespace ybalex {

/// Conway-normalized Alexander polynomial of the braid closure, computed by
/// recursive crossing switches and smoothings driven by a descending-diagram
/// walk; entirely independent of the Markov-trace pipeline. The node budget
/// guards against implementation errors: the descent strategy terminates, so
/// exhausting it throws RecursionBudgetExceeded.
Scalar alexander_skein(const BraidWord& b,
                       std::size_t node_budget = std::size_t(1) << 22);

/// The reduced Burau matrix of the word, (n-1) x (n-1) over the Laurent ring
/// in t (even powers of t^(1/2)); letters multiply left to right.
ScalarMatrix reduced_burau(const BraidWord& b);

/// A representative of the Alexander polynomial up to +-t^(k/2), via the
/// reduced-Burau determinant formula det(rho(b) - I) (1-t)/(1-t^n), with the
/// quotient computed by exact division. Split closures give exact 0.
Scalar alexander_burau(const BraidWord& b);

/// True iff p = +- t^(k/2) q for some integer k; the equivalence under which
/// the Burau route determines the Alexander polynomial.
bool units_equal(const Scalar& p, const Scalar& q);

/// Position of the first crossing the closure walk reaches on its under
/// strand before having seen its over strand, or empty when the diagram is
/// descending (and the closure is therefore a split unlink). Exposed for
/// tests of the recursion's pivot choice.
std::optional<std::size_t> first_bad_crossing(const BraidWord& b);

}  // namespace ybalex
