#include "antwalk/linear_solve.hpp"

#include <Eigen/Dense>

#include "antwalk/errors.hpp"

namespace antwalk {

DenseSolution solve_dense(const DenseSystem& system) {
  const auto n = static_cast<Eigen::Index>(system.size);
  DenseSolution out;
  if (n == 0) return out;
  using RowMatrix = Eigen::Matrix<double, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>;
  const Eigen::Map<const RowMatrix> a(system.matrix.data(), n, n);
  const Eigen::Map<const Eigen::VectorXd> b(system.rhs.data(), n);
  const Eigen::FullPivLU<RowMatrix> lu(a);
  if (!lu.isInvertible()) throw SolveError("singular linear system");
  const Eigen::VectorXd x = lu.solve(b);
  out.residual = (a * x - b).lpNorm<Eigen::Infinity>();
  out.x.assign(x.data(), x.data() + n);
  return out;
}

}  // namespace antwalk
