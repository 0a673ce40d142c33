#include "ybalex/catalog.hpp"

namespace ybalex {

namespace {

Algebra two_dimensional(const Scalar& t_squared_1, const Scalar& t_squared_t) {
  Algebra alg(2);
  alg.c(0, 0, 0) = Scalar(1);
  alg.c(0, 1, 1) = Scalar(1);
  alg.c(1, 0, 1) = Scalar(1);
  alg.c(1, 1, 0) = t_squared_1;
  alg.c(1, 1, 1) = t_squared_t;
  return alg;
}

}  // namespace

NamedAlgebra dual_numbers() {
  Algebra alg = two_dimensional(Scalar(0), Scalar(0));
  LinMap mu = LinMap::Zero(2, 2);
  mu(0, 0) = Scalar(1);
  mu(1, 1) = Scalar(-1);
  return {"dual-numbers", alg, mu};
}

NamedAlgebra split_pair() {
  Algebra alg = two_dimensional(Scalar(0), Scalar(1));
  // Swapping the two idempotent factors sends e to 1 - e.
  LinMap mu = LinMap::Zero(2, 2);
  mu(0, 0) = Scalar(1);
  mu(0, 1) = Scalar(1);
  mu(1, 1) = Scalar(-1);
  return {"split-pair", alg, mu};
}

NamedAlgebra z2_group_algebra() {
  Algebra alg = two_dimensional(Scalar(1), Scalar(0));
  LinMap mu = LinMap::Zero(2, 2);
  mu(0, 0) = Scalar(1);
  mu(1, 1) = Scalar(-1);
  return {"z2-group", alg, mu};
}

std::vector<NamedAlgebra> builtin_algebras() {
  return {dual_numbers(), split_pair(), z2_group_algebra()};
}

const NamedAlgebra* find_builtin(const std::string& name) {
  static const std::vector<NamedAlgebra> all = builtin_algebras();
  for (const auto& entry : all)
    if (entry.name == name) return &entry;
  return nullptr;
}

}  // namespace ybalex
