#pragma once

#include <cstddef>
#include <vector>

namespace antwalk {

/// Square system A x = b with A stored row-major.
struct DenseSystem {
  std::size_t size = 0;
  std::vector<double> matrix;
  std::vector<double> rhs;

  explicit DenseSystem(std::size_t n) : size(n), matrix(n * n, 0.0), rhs(n, 0.0) {}
  double& at(std::size_t row, std::size_t col) { return matrix[row * size + col]; }
};

struct DenseSolution {
  std::vector<double> x;
  double residual = 0.0;  // max-norm of A x - b
};

/// Full-pivoting LU. Throws SolveError when A is numerically singular.
DenseSolution solve_dense(const DenseSystem& system);

}  // namespace antwalk
