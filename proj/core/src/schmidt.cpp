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

#include "clusterq/schmidt.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "clusterq/error.hpp"
#include "clusterq/partition.hpp"

namespace clusterq {

namespace {

constexpr double kCoefficientCutoff = 1e-12;

std::vector<std::size_t> concat(const IndexSet& a, const IndexSet& b) {
  std::vector<std::size_t> out = a;
  out.insert(out.end(), b.begin(), b.end());
  return out;
}

// rho_left = M M^+ for the coefficient matrix M.
ComplexMatrix left_reduced(const ComplexMatrix& m) { return m * m.adjoint(); }
ComplexMatrix right_reduced(const ComplexMatrix& m) {
  return m.transpose() * m.conjugate();
}

}  // namespace

Bipartition Bipartition::parse(std::string_view text, std::size_t num_subsystems) {
  const auto bar = text.find('|');
  if (bar == std::string_view::npos || text.find('|', bar + 1) != std::string_view::npos) {
    throw ValidationError("bipartition: expected exactly two groups separated by '|'");
  }
  Bipartition b{parse_index_list(text.substr(0, bar)),
                parse_index_list(text.substr(bar + 1))};
  b.validate(num_subsystems);
  return b;
}

void Bipartition::validate(std::size_t num_subsystems) const {
  if (left.empty() || right.empty()) {
    throw ValidationError("bipartition: both groups must be nonempty");
  }
  // ClusterDecomposition enforces disjointness and coverage.
  ClusterDecomposition(num_subsystems, {left, right});
}

ComplexVector SchmidtForm::reconstruct() const {
  const auto dl = total_dim(left_dims);
  const auto dr = total_dim(right_dims);
  ComplexVector out = ComplexVector::Zero(static_cast<Eigen::Index>(dl * dr));
  for (Eigen::Index i = 0; i < coefficients.size(); ++i) {
    out += coefficients(i) * kron(left[i], right[i]);
  }
  return out;
}

ComplexVector CorrelationOperator::apply(const ComplexVector& v) const {
  return matrix * v.conjugate();
}

ComplexMatrix coefficient_matrix(const StateVector& psi, const Bipartition& bip) {
  bip.validate(psi.num_subsystems());
  const ComplexVector v =
      permute_subsystems(psi.amplitudes(), psi.dims(), concat(bip.left, bip.right));
  const auto dl = static_cast<Eigen::Index>(total_dim(select_dims(psi.dims(), bip.left)));
  const auto dr = static_cast<Eigen::Index>(total_dim(select_dims(psi.dims(), bip.right)));
  return Eigen::Map<const ComplexMatrix>(v.data(), dl, dr);
}

SchmidtForm schmidt_decompose(const StateVector& psi, const Bipartition& bip) {
  const ComplexMatrix m = coefficient_matrix(psi, bip);
  if (m.norm() == 0.0) throw ValidationError("schmidt_decompose: zero vector");
  Eigen::JacobiSVD<Eigen::MatrixXcd> svd(m, Eigen::ComputeThinU | Eigen::ComputeThinV);

  SchmidtForm form;
  form.left_dims = select_dims(psi.dims(), bip.left);
  form.right_dims = select_dims(psi.dims(), bip.right);
  const auto& sv = svd.singularValues();
  std::vector<double> coeffs;
  for (Eigen::Index i = 0; i < sv.size(); ++i) {
    if (sv(i) <= kCoefficientCutoff) break;
    ComplexVector l = svd.matrixU().col(i);
    ComplexVector r = svd.matrixV().col(i).conjugate();
    for (Eigen::Index k = 0; k < l.size(); ++k) {
      if (std::abs(l(k)) > kCoefficientCutoff) {
        const cplx phase = l(k) / std::abs(l(k));
        l /= phase;
        r *= phase;
        break;
      }
    }
    coeffs.push_back(sv(i));
    form.left.push_back(std::move(l));
    form.right.push_back(std::move(r));
  }
  form.coefficients = Eigen::Map<RealVector>(coeffs.data(),
                                             static_cast<Eigen::Index>(coeffs.size()));
  return form;
}

CorrelationOperator correlation_operator(const StateVector& psi,
                                         const Bipartition& bip) {
  const SchmidtForm form = schmidt_decompose(psi, bip);
  const auto dl = static_cast<Eigen::Index>(total_dim(form.left_dims));
  const auto dr = static_cast<Eigen::Index>(total_dim(form.right_dims));
  CorrelationOperator op{ComplexMatrix::Zero(dr, dl), ComplexMatrix::Zero(dl, dl)};
  // U conj(l_i) must give r_i, so U = sum_i r_i l_i^T.
  for (std::size_t i = 0; i < form.left.size(); ++i) {
    op.matrix += form.right[i] * form.left[i].transpose();
    op.left_support += form.left[i] * form.left[i].adjoint();
  }
  return op;
}

std::vector<Partner> partners_in_basis(const StateVector& psi,
                                       const Bipartition& bip,
                                       const std::vector<ComplexVector>& basis) {
  const ComplexMatrix m = coefficient_matrix(psi, bip);
  const auto dl = m.rows();
  if (basis.empty()) throw ValidationError("partners_in_basis: empty basis");
  for (std::size_t i = 0; i < basis.size(); ++i) {
    if (basis[i].size() != dl) {
      throw ValidationError("partners_in_basis: basis vector " + std::to_string(i + 1) +
                            " has length " + std::to_string(basis[i].size()) +
                            ", left dimension is " + std::to_string(dl));
    }
    for (std::size_t j = 0; j <= i; ++j) {
      const double expected = i == j ? 1.0 : 0.0;
      const double err = std::abs(basis[j].dot(basis[i]) - expected);
      if (err > kHermitianTol) {
        throw ValidationError("partners_in_basis: basis is not orthonormal (deviation " +
                              std::to_string(err) + ")");
      }
    }
  }

  const ComplexMatrix rho_left = left_reduced(m);
  double captured = 0.0;
  for (std::size_t i = 0; i < basis.size(); ++i) {
    captured += basis[i].dot(rho_left * basis[i]).real();
    for (std::size_t j = 0; j < i; ++j) {
      const double off = std::abs(basis[j].dot(rho_left * basis[i]));
      if (off > kHermitianTol) {
        throw ValidationError(
            "partners_in_basis: basis does not diagonalize the left reduced state "
            "(off-diagonal " + std::to_string(off) + ")");
      }
    }
  }
  if (std::abs(captured - 1.0) > kHermitianTol) {
    throw ValidationError("partners_in_basis: basis does not span the left support "
                          "(captured weight " + std::to_string(captured) + ")");
  }

  std::vector<Partner> out;
  out.reserve(basis.size());
  for (const auto& b : basis) {
    // (<b| (x) I) psi
    ComplexVector p = m.transpose() * b.conjugate();
    const double c = p.norm();
    Partner partner;
    partner.coefficient = c;
    partner.vector = c > kCoefficientCutoff ? ComplexVector(p / c)
                                            : ComplexVector::Zero(p.size());
    out.push_back(std::move(partner));
  }
  return out;
}

double seen_correlation_via_operator(const StateVector& psi, const Bipartition& bip,
                               const Projector& left_event,
                               const Projector& right_event) {
  const ComplexMatrix m = coefficient_matrix(psi, bip);
  if (left_event.dim() != static_cast<std::size_t>(m.rows()) ||
      right_event.dim() != static_cast<std::size_t>(m.cols())) {
    throw ValidationError("seen_correlation_via_operator: event dimensions do not match bipartition");
  }
  const ComplexMatrix rho_left = left_reduced(m);
  const ComplexMatrix rho_right = right_reduced(m);
  const ComplexMatrix root = matrix_sqrt_psd(rho_left);
  const CorrelationOperator ua = correlation_operator(psi, bip);

  // Orthonormal basis whose eigenvalue-one members span the left event's
  // range; the rest of the basis is whatever the eigensolver returns.
  const auto eig = hermitian_eig(left_event.matrix());
  double joint = 0.0;
  for (Eigen::Index q = 0; q < eig.eigenvalues.size(); ++q) {
    if (eig.eigenvalues(q) < 0.5) continue;
    const ComplexVector w = ua.apply(root * eig.eigenvectors.col(q));
    joint += w.dot(right_event.matrix() * w).real();
  }
  const double marginal = trace_of_product(rho_left, left_event.matrix()).real() *
                          trace_of_product(rho_right, right_event.matrix()).real();
  return std::abs(joint - marginal);
}

}  // namespace clusterq
