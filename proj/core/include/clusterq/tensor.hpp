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

#pragma once

#include <complex>
#include <cstddef>
#include <span>
#include <vector>

#include <Eigen/Dense>

namespace clusterq {

using cplx = std::complex<double>;

/// Dense complex matrix, row-major. Every operator in the library
/// (density operators, projectors, unitaries) is stored this way.
using ComplexMatrix =
    Eigen::Matrix<cplx, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>;
using ComplexVector = Eigen::VectorXcd;
using RealVector = Eigen::VectorXd;

/// Per-subsystem dimensions. Subsystem 0 is the leftmost (slowest-varying)
/// tensor factor.
using Dims = std::vector<std::size_t>;

/// A set of 0-based subsystem indices.
using IndexSet = std::vector<std::size_t>;

/// Entrywise tolerance for Hermiticity and for clamping tiny negative
/// eigenvalues of PSD operators.
inline constexpr double kHermitianTol = 1e-10;

struct HermitianEigenSystem {
  RealVector eigenvalues;      // ascending
  ComplexMatrix eigenvectors;  // orthonormal columns
};

std::size_t total_dim(const Dims& dims);

/// Sub-list of `dims` picked out by `subset`, in the order given.
Dims select_dims(const Dims& dims, const IndexSet& subset);

ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b);
ComplexMatrix kron_all(std::span<const ComplexMatrix> factors);
ComplexVector kron(const ComplexVector& a, const ComplexVector& b);

/// Traces out every subsystem not in `keep`. Kept subsystems appear in
/// ascending index order regardless of the order of `keep`.
ComplexMatrix partial_trace(const ComplexMatrix& m, const Dims& dims,
                            const IndexSet& keep);

/// Reorders tensor factors: position i of the result holds subsystem
/// perm[i] of the input.
ComplexMatrix permute_subsystems(const ComplexMatrix& m, const Dims& dims,
                                 const std::vector<std::size_t>& perm);
ComplexVector permute_subsystems(const ComplexVector& v, const Dims& dims,
                                 const std::vector<std::size_t>& perm);

/// Lifts an operator acting on `cluster` (factors in ascending index order)
/// to the full space, with identity on every other subsystem.
ComplexMatrix embed(const ComplexMatrix& op, const Dims& dims,
                    const IndexSet& cluster);

/// Assembles kron(factors[0], factors[1], ...) where factors[k] acts on
/// clusters[k], then reorders the result into global subsystem order.
/// The clusters must partition all subsystems.
ComplexMatrix kron_clusters(std::span<const ComplexMatrix> factors,
                            const std::vector<IndexSet>& clusters,
                            const Dims& dims);

HermitianEigenSystem hermitian_eig(const ComplexMatrix& m);

/// Principal square root of a positive semidefinite matrix.
ComplexMatrix matrix_sqrt_psd(const ComplexMatrix& m);

double frobenius_distance(const ComplexMatrix& a, const ComplexMatrix& b);
cplx trace_of(const ComplexMatrix& m);
ComplexMatrix adjoint(const ComplexMatrix& m);

/// tr(a * b) without forming the product.
cplx trace_of_product(const ComplexMatrix& a, const ComplexMatrix& b);

/// Largest |m - m^dagger| entry.
double hermiticity_error(const ComplexMatrix& m);

ComplexMatrix identity(std::size_t dim);
ComplexMatrix dyad(const ComplexVector& ket, const ComplexVector& bra);
ComplexMatrix ray_projector(const ComplexVector& v);

}  // namespace clusterq
