#pragma once

#include <string>
#include <vector>

#include "ybalex/algebra.hpp"

namespace ybalex {

/// A built-in algebra bundled with the linear map used to enhance its
/// R-operator.
struct NamedAlgebra {
  std::string name;
  Algebra algebra;
  LinMap mu;
};

/// Dual numbers k[t]/(t^2) with the sign involution t -> -t.
NamedAlgebra dual_numbers();

/// The split algebra k x k in the basis (1, e) with e^2 = e, carrying the
/// factor-swap automorphism e -> 1 - e.
NamedAlgebra split_pair();

/// The group algebra k[Z/2] = k[t]/(t^2 - 1) with the sign involution.
NamedAlgebra z2_group_algebra();

/// All built-in algebras, dual numbers first.
std::vector<NamedAlgebra> builtin_algebras();

/// Looks a built-in algebra up by name ("dual-numbers", "split-pair",
/// "z2-group"); empty result when unknown.
const NamedAlgebra* find_builtin(const std::string& name);

}  // namespace ybalex
