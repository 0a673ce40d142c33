#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace ybalex {

/// Base class for every error thrown by the engine.
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Inversion of a scalar that is not a unit of the Laurent ring.
/// Units are exactly the nonzero single-term scalars.
struct NotAUnit : Error {
  using Error::Error;
};

/// Operand dimensions do not match.
struct DimMismatch : Error {
  using Error::Error;
};

/// Algebra dimension below the minimum the R-operator construction needs.
struct DimTooSmall : Error {
  using Error::Error;
};

/// Structure constants violate unitality; (i, j, k) is the first bad triple
/// (1-based basis indices).
struct NotUnital : Error {
  NotUnital(int i, int j, int k)
      : Error("algebra is not unital at c[" + std::to_string(i) + "][" +
              std::to_string(j) + "][" + std::to_string(k) + "]"),
        i(i), j(j), k(k) {}
  int i, j, k;
};

/// Structure constants violate associativity; (i, j, k, l) is the first bad
/// quadruple (1-based basis indices).
struct NotAssociative : Error {
  NotAssociative(int i, int j, int k, int l)
      : Error("algebra is not associative at (e_" + std::to_string(i) + " e_" +
              std::to_string(j) + ") e_" + std::to_string(k) +
              " vs e_i (e_j e_k), l=" + std::to_string(l)),
        i(i), j(j), k(k), l(l) {}
  int i, j, k, l;
};

/// The requested (x, y, z) parameters admit no Yang-Baxter operator.
struct NotYangBaxter : Error {
  using Error::Error;
};

/// The constructed operator fails the braid equation; the message carries a
/// witness matrix position.
struct BraidEquationFails : Error {
  using Error::Error;
};

/// The quadratic relation for the operator fails; message carries a witness.
struct QuadraticFails : Error {
  using Error::Error;
};

/// Enhancement condition E1 (intertwining with mu x mu) fails.
struct E1Fails : Error {
  using Error::Error;
};

/// Enhancement condition E2+ fails.
struct E2PlusFails : Error {
  using Error::Error;
};

/// Enhancement condition E2- fails.
struct E2MinusFails : Error {
  using Error::Error;
};

/// Operator case not accepted by the requested operation (the scalar family
/// x = y = 0 carries no link information).
struct WrongCase : Error {
  using Error::Error;
};

/// A required square root has no monomial representative in the ring.
struct SqrtUnavailable : Error {
  using Error::Error;
};

/// No enhancement exists for the requested operator and twist map; the
/// message names the violated condition.
struct NoEnhancement : Error {
  using Error::Error;
};

/// An iterated trace chain produced an operator that is not a scalar multiple
/// of the identity. This signals an engine bug, not a user error.
struct NotScalarMultiple : Error {
  using Error::Error;
};

/// A recovered invariant contains a monomial outside the subring generated by
/// the substitution target. Signals an engine bug in symbolic mode.
struct NotInImage : Error {
  using Error::Error;
};

/// Text input failed to parse; `position` is the byte offset of the offending
/// token.
struct SyntaxError : Error {
  SyntaxError(const std::string& what, std::size_t position)
      : Error(what + " (at position " + std::to_string(position) + ")"),
        position(position) {}
  std::size_t position;
};

/// A braid letter references a generator outside the strand range.
struct BadGenerator : Error {
  BadGenerator(const std::string& what, std::size_t position)
      : Error(what + " (letter " + std::to_string(position) + ")"),
        position(position) {}
  std::size_t position;
};

/// Braid operands live on different strand counts.
struct StrandMismatch : Error {
  using Error::Error;
};

/// Partial trace requested on an operator of tensor rank below 2.
struct RankTooSmall : Error {
  using Error::Error;
};

/// The skein recursion exceeded its node budget. The descent strategy
/// terminates, so this signals an implementation error.
struct RecursionBudgetExceeded : Error {
  explicit RecursionBudgetExceeded(std::size_t limit)
      : Error("skein recursion exceeded its node budget of " +
              std::to_string(limit)),
        limit(limit) {}
  std::size_t limit;
};

/// An exact polynomial division left a remainder.
struct DivisionNotExact : Error {
  using Error::Error;
};

/// A skein identity failed; the message carries the three scalars involved.
struct SkeinFails : Error {
  using Error::Error;
};

}  // namespace ybalex
