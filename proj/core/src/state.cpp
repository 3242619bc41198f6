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

#include "clusterq/state.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <string>

#include "clusterq/error.hpp"

namespace clusterq {

namespace {

std::string magnitude(double x) {
  std::ostringstream os;
  os.precision(3);
  os << std::scientific << x;
  return os.str();
}

void check_dims(const Dims& dims, std::size_t size, const char* what) {
  if (dims.empty()) {
    throw ValidationError(std::string(what) + ": at least one subsystem required");
  }
  for (std::size_t d : dims) {
    if (d == 0) {
      throw ValidationError(std::string(what) + ": subsystem dimension must be >= 1");
    }
  }
  if (total_dim(dims) != size) {
    throw ValidationError(std::string(what) + ": product of dims (" +
                          std::to_string(total_dim(dims)) +
                          ") does not match size " + std::to_string(size));
  }
}

}  // namespace

DensityOperator::DensityOperator(Dims dims, ComplexMatrix matrix)
    : dims_(std::move(dims)), matrix_(std::move(matrix)) {
  if (matrix_.rows() != matrix_.cols()) {
    throw ValidationError("density operator: matrix must be square");
  }
  check_dims(dims_, static_cast<std::size_t>(matrix_.rows()), "density operator");
  if (!matrix_.allFinite()) {
    throw ValidationError("density operator: entries must be finite");
  }
  const double herr = hermiticity_error(matrix_);
  if (herr > kHermitianTol) {
    throw ValidationError("density operator: not Hermitian (max |rho - rho^+| = " +
                          magnitude(herr) + ")");
  }
  const double terr = std::abs(matrix_.trace() - cplx{1.0, 0.0});
  if (terr > kHermitianTol) {
    throw ValidationError("density operator: trace != 1 (deviation " +
                          magnitude(terr) + ")");
  }
  const double lowest = hermitian_eig(matrix_).eigenvalues.minCoeff();
  if (lowest < -kHermitianTol) {
    throw ValidationError("density operator: not positive (smallest eigenvalue " +
                          magnitude(lowest) + ")");
  }
}

RealVector DensityOperator::spectrum() const {
  RealVector ev = hermitian_eig(matrix_).eigenvalues;
  for (auto& x : ev) {
    if (x < 0.0 && x >= -kHermitianTol) x = 0.0;
  }
  return ev;
}

StateVector::StateVector(Dims dims, ComplexVector amplitudes)
    : dims_(std::move(dims)), amplitudes_(std::move(amplitudes)) {
  check_dims(dims_, static_cast<std::size_t>(amplitudes_.size()), "state vector");
  if (!amplitudes_.allFinite()) {
    throw ValidationError("state vector: amplitudes must be finite");
  }
  const double nerr = std::abs(amplitudes_.norm() - 1.0);
  if (nerr > kHermitianTol) {
    throw ValidationError("state vector: norm != 1 (deviation " +
                          magnitude(nerr) + ")");
  }
}

StateVector StateVector::normalized(Dims dims, const ComplexVector& amplitudes) {
  const double n = amplitudes.norm();
  if (!(n > 0.0)) throw ValidationError("state vector: zero vector");
  return StateVector(std::move(dims), amplitudes / n);
}

DensityOperator StateVector::density() const {
  return DensityOperator(dims_, amplitudes_ * amplitudes_.adjoint());
}

StateVector tensor_product(const StateVector& a, const StateVector& b) {
  Dims dims = a.dims();
  dims.insert(dims.end(), b.dims().begin(), b.dims().end());
  return StateVector(std::move(dims), kron(a.amplitudes(), b.amplitudes()));
}

DensityOperator tensor_product(const DensityOperator& a,
                               const DensityOperator& b) {
  Dims dims = a.dims();
  dims.insert(dims.end(), b.dims().begin(), b.dims().end());
  return DensityOperator(std::move(dims), kron(a.matrix(), b.matrix()));
}

DensityOperator reduced_state(const DensityOperator& rho,
                              const IndexSet& cluster) {
  if (cluster.empty()) {
    throw ValidationError("reduced_state: cluster must be nonempty");
  }
  IndexSet sorted = cluster;
  std::sort(sorted.begin(), sorted.end());
  ComplexMatrix m = partial_trace(rho.matrix(), rho.dims(), sorted);
  // Re-symmetrize rounding noise so the result validates.
  m = (m + m.adjoint().eval()) / 2.0;
  return DensityOperator(select_dims(rho.dims(), sorted), std::move(m));
}

DensityOperator permute_subsystems(const DensityOperator& rho,
                                   const std::vector<std::size_t>& perm) {
  ComplexMatrix m = permute_subsystems(rho.matrix(), rho.dims(), perm);
  return DensityOperator(select_dims(rho.dims(), perm), std::move(m));
}

StateVector permute_subsystems(const StateVector& psi,
                               const std::vector<std::size_t>& perm) {
  ComplexVector v = permute_subsystems(psi.amplitudes(), psi.dims(), perm);
  return StateVector(select_dims(psi.dims(), perm), std::move(v));
}

}  // namespace clusterq
