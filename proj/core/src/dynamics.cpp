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

#include "clusterq/dynamics.hpp"

#include <algorithm>
#include <string>

#include "clusterq/error.hpp"
#include "clusterq/partition.hpp"

namespace clusterq {

namespace {

constexpr double kZeroProbability = 1e-12;
constexpr double kUnitaryTol = 1e-9;

IndexSet sorted_copy(IndexSet s) {
  std::sort(s.begin(), s.end());
  return s;
}

IndexSet complement_of(const IndexSet& set, std::size_t n) {
  IndexSet out;
  for (std::size_t i = 0; i < n; ++i) {
    if (std::find(set.begin(), set.end(), i) == set.end()) out.push_back(i);
  }
  return out;
}

void check_cluster_dim(const DensityOperator& rho, const IndexSet& cluster,
                       std::size_t op_dim, const char* what) {
  if (cluster.empty()) throw ValidationError(std::string(what) + ": empty cluster");
  for (std::size_t i : cluster) {
    if (i >= rho.num_subsystems()) {
      throw ValidationError(std::string(what) + ": subsystem " + std::to_string(i + 1) +
                            " out of range");
    }
  }
  const auto d = total_dim(select_dims(rho.dims(), cluster));
  if (d != op_dim) {
    throw ValidationError(std::string(what) + ": operator dimension " +
                          std::to_string(op_dim) + " does not match cluster dimension " +
                          std::to_string(d));
  }
}

DensityOperator as_state(const Dims& dims, const ComplexMatrix& m) {
  return DensityOperator(dims, (m + m.adjoint()) / 2.0);
}

}  // namespace

ProjectiveDecomposition::ProjectiveDecomposition(std::vector<Projector> projectors)
    : projectors_(std::move(projectors)) {
  if (projectors_.empty()) throw ValidationError("projective decomposition: empty");
  const auto d = static_cast<Eigen::Index>(projectors_.front().dim());
  ComplexMatrix sum = ComplexMatrix::Zero(d, d);
  for (std::size_t q = 0; q < projectors_.size(); ++q) {
    const auto& p = projectors_[q].matrix();
    if (p.rows() != d) {
      throw ValidationError("projective decomposition: projectors of different sizes");
    }
    sum += p;
    for (std::size_t r = 0; r < q; ++r) {
      const double overlap = (p * projectors_[r].matrix()).cwiseAbs().maxCoeff();
      if (overlap > kHermitianTol) {
        throw ValidationError("projective decomposition: projectors " + std::to_string(r + 1) +
                              " and " + std::to_string(q + 1) +
                              " are not orthogonal (max |P P'| = " + std::to_string(overlap) +
                              ")");
      }
    }
  }
  const double err = (sum - ComplexMatrix::Identity(d, d)).cwiseAbs().maxCoeff();
  if (err > kHermitianTol) {
    throw ValidationError("projective decomposition: projectors do not sum to identity "
                          "(deviation " + std::to_string(err) + ")");
  }
}

ComplexMatrix DistantDecomposition::mixture() const {
  if (outcomes.empty()) return {};
  const auto d = outcomes.front().state.matrix().rows();
  ComplexMatrix m = ComplexMatrix::Zero(d, d);
  for (const auto& o : outcomes) m += o.weight * o.state.matrix();
  return m;
}

DensityOperator luders_nonselective(const DensityOperator& rho,
                                    const IndexSet& measured,
                                    const ProjectiveDecomposition& pd) {
  check_cluster_dim(rho, measured, pd.dim(), "luders_nonselective");
  const auto d = static_cast<Eigen::Index>(rho.dim());
  ComplexMatrix out = ComplexMatrix::Zero(d, d);
  for (const auto& p : pd.projectors()) {
    const ComplexMatrix pe = embed(p.matrix(), rho.dims(), measured);
    out += pe * rho.matrix() * pe;
  }
  return as_state(rho.dims(), out);
}

DistantDecomposition distant_decomposition(const DensityOperator& rho,
                                           const IndexSet& measured,
                                           const ProjectiveDecomposition& pd) {
  check_cluster_dim(rho, measured, pd.dim(), "distant_decomposition");
  DistantDecomposition dd;
  dd.distant = complement_of(measured, rho.num_subsystems());
  if (dd.distant.empty()) {
    throw ValidationError("distant_decomposition: measured cluster covers every subsystem");
  }
  const Dims distant_dims = select_dims(rho.dims(), dd.distant);
  for (std::size_t q = 0; q < pd.size(); ++q) {
    const ComplexMatrix pe = embed(pd.projectors()[q].matrix(), rho.dims(), measured);
    const ComplexMatrix projected = pe * rho.matrix() * pe;
    const double w = projected.trace().real();
    if (w <= kZeroProbability) continue;
    const ComplexMatrix local = partial_trace(projected, rho.dims(), dd.distant) / w;
    dd.outcomes.push_back({q, w, as_state(distant_dims, local)});
  }
  return dd;
}

DensityOperator luders_selective(const DensityOperator& rho,
                                 const IndexSet& measured, const Projector& event) {
  check_cluster_dim(rho, measured, event.dim(), "luders_selective");
  const ComplexMatrix pe = embed(event.matrix(), rho.dims(), measured);
  const ComplexMatrix projected = pe * rho.matrix() * pe;
  const double w = projected.trace().real();
  if (w <= kZeroProbability) {
    throw ValidationError("luders_selective: event has zero probability (" +
                          std::to_string(w) + ")");
  }
  return as_state(rho.dims(), projected / w);
}

ConditionalIdentity conditional_probability_identity(const DensityOperator& rho,
                                                     const IndexSet& measured,
                                                     const Projector& measured_event,
                                                     const IndexSet& distant,
                                                     const Projector& distant_event) {
  check_cluster_dim(rho, measured, measured_event.dim(), "conditional_probability_identity");
  check_cluster_dim(rho, distant, distant_event.dim(), "conditional_probability_identity");
  for (std::size_t i : distant) {
    if (std::find(measured.begin(), measured.end(), i) != measured.end()) {
      throw ValidationError("conditional_probability_identity: clusters overlap");
    }
  }
  const ComplexMatrix p1 = embed(measured_event.matrix(), rho.dims(), measured);
  const ComplexMatrix p2 = embed(distant_event.matrix(), rho.dims(), distant);
  ConditionalIdentity c;
  c.lhs = trace_of_product(rho.matrix(), p1 * p2).real();
  const double w = trace_of_product(rho.matrix(), p1).real();
  if (w <= kZeroProbability) {
    throw ValidationError("conditional_probability_identity: conditioning event has zero probability");
  }
  const auto conditioned = reduced_state(luders_selective(rho, measured, measured_event), distant);
  c.rhs = w * trace_of_product(conditioned.matrix(), distant_event.matrix()).real();
  c.gap = std::abs(c.lhs - c.rhs);
  return c;
}

double local_unitary_no_signaling(const DensityOperator& rho,
                                  const IndexSet& interacting,
                                  const IndexSet& distant,
                                  const ComplexMatrix& u_interacting,
                                  const ComplexMatrix& u_distant,
                                  std::size_t steps) {
  const IndexSet a = sorted_copy(interacting);
  const IndexSet b = sorted_copy(distant);
  // Disjointness and coverage.
  ClusterDecomposition(rho.num_subsystems(), {a, b});
  check_cluster_dim(rho, a, static_cast<std::size_t>(u_interacting.rows()),
                    "local_unitary_no_signaling");
  check_cluster_dim(rho, b, static_cast<std::size_t>(u_distant.rows()),
                    "local_unitary_no_signaling");
  for (const ComplexMatrix* u : {&u_interacting, &u_distant}) {
    const double err = (u->adjoint() * *u - identity(static_cast<std::size_t>(u->rows()))).norm();
    if (u->rows() != u->cols() || err > kUnitaryTol) {
      throw ValidationError("local_unitary_no_signaling: operator is not unitary "
                            "(||U^+U - I|| = " + std::to_string(err) + ")");
    }
  }

  const std::vector<ComplexMatrix> factors{u_interacting, u_distant};
  const ComplexMatrix u = kron_clusters(factors, {a, b}, rho.dims());
  ComplexMatrix state = rho.matrix();
  ComplexMatrix expected = partial_trace(state, rho.dims(), b);
  double worst = 0.0;
  for (std::size_t t = 0; t < steps; ++t) {
    state = u * state * u.adjoint();
    expected = u_distant * expected * u_distant.adjoint();
    const ComplexMatrix actual = partial_trace(state, rho.dims(), b);
    worst = std::max(worst, frobenius_distance(actual, expected));
  }
  return worst;
}

}  // namespace clusterq
