// Copyright 2026 The clusterq Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "clusterq/random.hpp"

#include <cmath>

#include "clusterq/error.hpp"

namespace clusterq {

ComplexMatrix random_ginibre(std::size_t rows, std::size_t cols, Rng& rng) {
  std::normal_distribution<double> normal(0.0, 1.0);
  ComplexMatrix g(rows, cols);
  for (Eigen::Index i = 0; i < g.rows(); ++i) {
    for (Eigen::Index j = 0; j < g.cols(); ++j) {
      const double re = normal(rng);
      const double im = normal(rng);
      g(i, j) = cplx(re, im);
    }
  }
  return g;
}

ComplexMatrix random_unitary(std::size_t dim, Rng& rng) {
  const Eigen::MatrixXcd g = random_ginibre(dim, dim, rng);
  Eigen::HouseholderQR<Eigen::MatrixXcd> qr(g);
  Eigen::MatrixXcd q = qr.householderQ();
  const Eigen::MatrixXcd r = qr.matrixQR().triangularView<Eigen::Upper>();
  for (Eigen::Index j = 0; j < q.cols(); ++j) {
    const cplx d = r(j, j);
    const double a = std::abs(d);
    if (a > 0.0) q.col(j) *= d / a;
  }
  return q;
}

ComplexVector random_unit_vector(std::size_t dim, Rng& rng) {
  const ComplexMatrix g = random_ginibre(dim, 1, rng);
  return g.col(0) / g.norm();
}

StateVector random_pure_state(const Dims& dims, Rng& rng) {
  return StateVector(dims, random_unit_vector(total_dim(dims), rng));
}

DensityOperator random_density(const Dims& dims, std::size_t rank, Rng& rng) {
  const std::size_t d = total_dim(dims);
  if (rank == 0 || rank > d) rank = d;
  const ComplexMatrix g = random_ginibre(d, rank, rng);
  ComplexMatrix rho = g * g.adjoint();
  rho /= rho.trace();
  rho = (rho + rho.adjoint().eval()) / 2.0;
  return DensityOperator(dims, std::move(rho));
}

ComplexMatrix random_hermitian(std::size_t dim, Rng& rng) {
  const ComplexMatrix g = random_ginibre(dim, dim, rng);
  return (g + g.adjoint()) / 2.0;
}

ComplexMatrix random_projector(std::size_t dim, std::size_t rank, Rng& rng) {
  if (rank > dim) throw ValidationError("random_projector: rank exceeds dimension");
  const ComplexMatrix u = random_unitary(dim, rng);
  const auto r = static_cast<Eigen::Index>(rank);
  const ComplexMatrix cols = u.leftCols(r);
  return cols * cols.adjoint();
}

ComplexMatrix random_ray_projector(std::size_t dim, Rng& rng) {
  return ray_projector(random_unit_vector(dim, rng));
}

}  // namespace clusterq
