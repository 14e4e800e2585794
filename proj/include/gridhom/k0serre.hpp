#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "gridhom/lattice.hpp"
#include "gridhom/matrix.hpp"

namespace gridhom {

// K-theory shadow of the Serre functor in the simple-classes basis:
// M = Z^T Z^{-1} for the zeta matrix Z, i.e. the matrix sending the class
// column of every projective P_x to the class column of the injective I_x.
struct SerreK0Matrix {
  ZMat M;
};

// Computes M and asserts the defining column property [P_x] -> [I_x]
// (throws std::logic_error on a convention mismatch).
SerreK0Matrix serre_k0_matrix(const GridLattice& L);

// Exact check that M^{m+n+1} == (-1)^{mn} Id on K_0.
struct CoxeterOrderReport {
  int m = 0, n = 0;
  int exponent = 0;  // m + n + 1
  int sign = 0;      // (-1)^{mn}
  bool holds = false;
  // first entry where the power deviates, when it does
  std::optional<std::pair<std::size_t, std::size_t>> first_failure;
};

CoxeterOrderReport coxeter_order_check(int m, int n);

// Characteristic polynomial of the Coxeter transformation -M, ascending
// exact integer coefficients (index i holds the coefficient of t^i).
std::vector<Int> coxeter_polynomial(const GridLattice& L);

}  // namespace gridhom
