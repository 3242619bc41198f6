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

#include "clusterq/tensor.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>

#include "clusterq/error.hpp"

namespace clusterq {

namespace {

std::vector<std::size_t> strides_of(const Dims& dims) {
  std::vector<std::size_t> strides(dims.size(), 1);
  for (std::size_t k = dims.size(); k-- > 1;) {
    strides[k - 1] = strides[k] * dims[k];
  }
  return strides;
}

// Global index offsets for every multi-index over `subset`, enumerated with
// subset[0] slowest. Subsystems outside the subset contribute digit 0.
std::vector<std::size_t> offsets_of(const Dims& dims,
                                    const std::vector<std::size_t>& subset) {
  const auto strides = strides_of(dims);
  std::vector<std::size_t> out{0};
  for (std::size_t s : subset) {
    std::vector<std::size_t> next;
    next.reserve(out.size() * dims[s]);
    for (std::size_t base : out) {
      for (std::size_t d = 0; d < dims[s]; ++d) {
        next.push_back(base + d * strides[s]);
      }
    }
    out = std::move(next);
  }
  return out;
}

void check_square(const ComplexMatrix& m, const char* what) {
  if (m.rows() != m.cols()) {
    throw ValidationError(std::string(what) + ": matrix must be square, got " +
                          std::to_string(m.rows()) + "x" +
                          std::to_string(m.cols()));
  }
}

void check_dims_match(const ComplexMatrix& m, const Dims& dims,
                      const char* what) {
  check_square(m, what);
  const std::size_t d = total_dim(dims);
  if (static_cast<std::size_t>(m.rows()) != d) {
    throw ValidationError(std::string(what) +
                          ": product of subsystem dimensions (" +
                          std::to_string(d) + ") does not match matrix size " +
                          std::to_string(m.rows()));
  }
}

void check_index_set(const IndexSet& set, std::size_t n, const char* what) {
  std::vector<bool> seen(n, false);
  for (std::size_t i : set) {
    if (i >= n) {
      throw ValidationError(std::string(what) + ": subsystem index " +
                            std::to_string(i + 1) + " out of range 1.." +
                            std::to_string(n));
    }
    if (seen[i]) {
      throw ValidationError(std::string(what) + ": duplicate subsystem index " +
                            std::to_string(i + 1));
    }
    seen[i] = true;
  }
}

IndexSet complement(const IndexSet& set, std::size_t n) {
  std::vector<bool> in(n, false);
  for (std::size_t i : set) in[i] = true;
  IndexSet out;
  for (std::size_t i = 0; i < n; ++i) {
    if (!in[i]) out.push_back(i);
  }
  return out;
}

void check_permutation(const std::vector<std::size_t>& perm, std::size_t n) {
  if (perm.size() != n) {
    throw ValidationError("permutation: expected " + std::to_string(n) +
                          " entries, got " + std::to_string(perm.size()));
  }
  check_index_set(perm, n, "permutation");
}

}  // namespace

std::size_t total_dim(const Dims& dims) {
  return std::accumulate(dims.begin(), dims.end(), std::size_t{1},
                         std::multiplies<>());
}

Dims select_dims(const Dims& dims, const IndexSet& subset) {
  Dims out;
  out.reserve(subset.size());
  for (std::size_t i : subset) out.push_back(dims.at(i));
  return out;
}

ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b) {
  ComplexMatrix out(a.rows() * b.rows(), a.cols() * b.cols());
  for (Eigen::Index i = 0; i < a.rows(); ++i) {
    for (Eigen::Index j = 0; j < a.cols(); ++j) {
      out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
    }
  }
  return out;
}

ComplexVector kron(const ComplexVector& a, const ComplexVector& b) {
  ComplexVector out(a.size() * b.size());
  for (Eigen::Index i = 0; i < a.size(); ++i) {
    out.segment(i * b.size(), b.size()) = a(i) * b;
  }
  return out;
}

ComplexMatrix kron_all(std::span<const ComplexMatrix> factors) {
  ComplexMatrix out = ComplexMatrix::Ones(1, 1);
  for (const auto& f : factors) out = kron(out, f);
  return out;
}

ComplexMatrix partial_trace(const ComplexMatrix& m, const Dims& dims,
                            const IndexSet& keep) {
  check_dims_match(m, dims, "partial_trace");
  check_index_set(keep, dims.size(), "partial_trace");
  IndexSet kept = keep;
  std::sort(kept.begin(), kept.end());
  const auto traced = complement(kept, dims.size());
  const auto keep_off = offsets_of(dims, kept);
  const auto trace_off = offsets_of(dims, traced);

  const auto dk = static_cast<Eigen::Index>(keep_off.size());
  ComplexMatrix out = ComplexMatrix::Zero(dk, dk);
  for (Eigen::Index a = 0; a < dk; ++a) {
    for (Eigen::Index b = 0; b < dk; ++b) {
      cplx sum = 0.0;
      for (std::size_t r : trace_off) {
        sum += m(keep_off[a] + r, keep_off[b] + r);
      }
      out(a, b) = sum;
    }
  }
  return out;
}

ComplexMatrix permute_subsystems(const ComplexMatrix& m, const Dims& dims,
                                 const std::vector<std::size_t>& perm) {
  check_dims_match(m, dims, "permute_subsystems");
  check_permutation(perm, dims.size());
  const auto map = offsets_of(dims, perm);
  const auto d = static_cast<Eigen::Index>(map.size());
  ComplexMatrix out(d, d);
  for (Eigen::Index i = 0; i < d; ++i) {
    for (Eigen::Index j = 0; j < d; ++j) out(i, j) = m(map[i], map[j]);
  }
  return out;
}

ComplexVector permute_subsystems(const ComplexVector& v, const Dims& dims,
                                 const std::vector<std::size_t>& perm) {
  if (static_cast<std::size_t>(v.size()) != total_dim(dims)) {
    throw ValidationError("permute_subsystems: vector length " +
                          std::to_string(v.size()) +
                          " does not match product of dimensions");
  }
  check_permutation(perm, dims.size());
  const auto map = offsets_of(dims, perm);
  ComplexVector out(v.size());
  for (Eigen::Index i = 0; i < v.size(); ++i) out(i) = v(map[i]);
  return out;
}

ComplexMatrix embed(const ComplexMatrix& op, const Dims& dims,
                    const IndexSet& cluster) {
  check_index_set(cluster, dims.size(), "embed");
  IndexSet sorted = cluster;
  std::sort(sorted.begin(), sorted.end());
  const auto inner = offsets_of(dims, sorted);
  if (op.rows() != op.cols() ||
      static_cast<std::size_t>(op.rows()) != inner.size()) {
    throw ValidationError("embed: operator size " + std::to_string(op.rows()) +
                          " does not match cluster dimension " +
                          std::to_string(inner.size()));
  }
  const auto outer = offsets_of(dims, complement(sorted, dims.size()));
  const auto d = static_cast<Eigen::Index>(total_dim(dims));
  ComplexMatrix out = ComplexMatrix::Zero(d, d);
  for (std::size_t r : outer) {
    for (std::size_t a = 0; a < inner.size(); ++a) {
      for (std::size_t b = 0; b < inner.size(); ++b) {
        out(inner[a] + r, inner[b] + r) = op(a, b);
      }
    }
  }
  return out;
}

ComplexMatrix kron_clusters(std::span<const ComplexMatrix> factors,
                            const std::vector<IndexSet>& clusters,
                            const Dims& dims) {
  if (factors.size() != clusters.size()) {
    throw ValidationError("kron_clusters: one factor per cluster required");
  }
  IndexSet order;
  for (const auto& c : clusters) order.insert(order.end(), c.begin(), c.end());
  check_permutation(order, dims.size());
  for (std::size_t k = 0; k < clusters.size(); ++k) {
    const auto dk = total_dim(select_dims(dims, clusters[k]));
    if (static_cast<std::size_t>(factors[k].rows()) != dk) {
      throw ValidationError("kron_clusters: factor " + std::to_string(k) +
                            " has size " + std::to_string(factors[k].rows()) +
                            ", cluster dimension is " + std::to_string(dk));
    }
  }
  std::vector<std::size_t> perm(order.size());
  for (std::size_t pos = 0; pos < order.size(); ++pos) perm[order[pos]] = pos;
  return permute_subsystems(kron_all(factors), select_dims(dims, order), perm);
}

HermitianEigenSystem hermitian_eig(const ComplexMatrix& m) {
  check_square(m, "hermitian_eig");
  const double herr = hermiticity_error(m);
  if (herr > kHermitianTol) {
    throw ValidationError("hermitian_eig: matrix is not Hermitian (max |A - A^+| = " +
                          std::to_string(herr) + ")");
  }
  const Eigen::MatrixXcd sym = (m + m.adjoint()) / 2.0;
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(sym);
  if (solver.info() != Eigen::Success) {
    throw NumericalError("hermitian_eig: eigensolver did not converge");
  }
  return {solver.eigenvalues(), solver.eigenvectors()};
}

ComplexMatrix matrix_sqrt_psd(const ComplexMatrix& m) {
  auto eig = hermitian_eig(m);
  const double lowest = eig.eigenvalues.size() ? eig.eigenvalues.minCoeff() : 0.0;
  if (lowest < -kHermitianTol) {
    throw NumericalError("matrix_sqrt_psd: matrix is not positive semidefinite "
                         "(smallest eigenvalue " + std::to_string(lowest) + ")");
  }
  const RealVector roots = eig.eigenvalues.cwiseMax(0.0).cwiseSqrt();
  return eig.eigenvectors * roots.cast<cplx>().asDiagonal() *
         eig.eigenvectors.adjoint();
}

double frobenius_distance(const ComplexMatrix& a, const ComplexMatrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) {
    throw ValidationError("frobenius_distance: shape mismatch");
  }
  return (a - b).norm();
}

cplx trace_of(const ComplexMatrix& m) {
  check_square(m, "trace_of");
  return m.trace();
}

ComplexMatrix adjoint(const ComplexMatrix& m) { return m.adjoint(); }

cplx trace_of_product(const ComplexMatrix& a, const ComplexMatrix& b) {
  if (a.cols() != b.rows() || a.rows() != b.cols()) {
    throw ValidationError("trace_of_product: shape mismatch");
  }
  return (a.array() * b.transpose().array()).sum();
}

double hermiticity_error(const ComplexMatrix& m) {
  if (m.rows() != m.cols()) return INFINITY;
  if (m.size() == 0) return 0.0;
  return (m - m.adjoint()).cwiseAbs().maxCoeff();
}

ComplexMatrix identity(std::size_t dim) {
  return ComplexMatrix::Identity(static_cast<Eigen::Index>(dim),
                                 static_cast<Eigen::Index>(dim));
}

ComplexMatrix dyad(const ComplexVector& ket, const ComplexVector& bra) {
  return ket * bra.adjoint();
}

ComplexMatrix ray_projector(const ComplexVector& v) {
  const double n = v.norm();
  if (n == 0.0) throw ValidationError("ray_projector: zero vector");
  const ComplexVector u = v / n;
  return u * u.adjoint();
}

}  // namespace clusterq
