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

#include "clusterq/correlations.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "clusterq/error.hpp"

namespace clusterq {

namespace {

constexpr double kZeroProbability = 1e-12;
constexpr double kEntropyCutoff = 1e-12;
// Information values are nonnegative by subadditivity; anything above this
// magnitude below zero is a genuine error and is left visible.
constexpr double kRoundingFloor = 1e-9;

double clamp_information(double x) {
  return x < 0.0 && x > -kRoundingFloor ? 0.0 : x;
}

void check_aligned(const DensityOperator& rho, const ClusterDecomposition& cd,
                   const EventString& s) {
  if (cd.num_subsystems() != rho.num_subsystems()) {
    throw ValidationError("event string: decomposition covers " +
                          std::to_string(cd.num_subsystems()) +
                          " subsystems, state has " +
                          std::to_string(rho.num_subsystems()));
  }
  if (s.events.size() != cd.size()) {
    throw ValidationError("event string: " + std::to_string(s.events.size()) +
                          " events for " + std::to_string(cd.size()) + " clusters");
  }
  for (std::size_t k = 0; k < cd.size(); ++k) {
    if (!s.events[k]) continue;
    const auto dk = total_dim(select_dims(rho.dims(), cd[k]));
    if (s.events[k]->dim() != dk) {
      throw ValidationError("event string: event " + std::to_string(k + 1) +
                            " has dimension " + std::to_string(s.events[k]->dim()) +
                            ", cluster dimension is " + std::to_string(dk));
    }
  }
}

double clamp_probability(double p) { return std::clamp(p, 0.0, 1.0); }

}  // namespace

Projector::Projector(ComplexMatrix matrix) : matrix_(std::move(matrix)) {
  if (matrix_.rows() != matrix_.cols() || matrix_.rows() == 0) {
    throw ValidationError("projector: matrix must be square and nonempty");
  }
  const double herr = hermiticity_error(matrix_);
  if (herr > kHermitianTol) {
    throw ValidationError("projector: not Hermitian (max |P - P^+| = " +
                          std::to_string(herr) + ")");
  }
  const double ierr = (matrix_ * matrix_ - matrix_).cwiseAbs().maxCoeff();
  if (ierr > kHermitianTol) {
    throw ValidationError("projector: not idempotent (max |P^2 - P| = " +
                          std::to_string(ierr) + ")");
  }
  rank_ = static_cast<std::size_t>(std::lround(matrix_.trace().real()));
}

Projector Projector::onto(const ComplexVector& v) {
  return Projector(ray_projector(v));
}

EventString EventString::certain(std::size_t clusters) {
  return EventString{std::vector<std::optional<Projector>>(clusters)};
}

ComplexMatrix event_operator(const Dims& dims, const ClusterDecomposition& cd,
                             const EventString& s) {
  std::vector<ComplexMatrix> factors;
  factors.reserve(cd.size());
  for (std::size_t k = 0; k < cd.size(); ++k) {
    if (s.events.at(k)) {
      factors.push_back(s.events[k]->matrix());
    } else {
      factors.push_back(identity(total_dim(select_dims(dims, cd[k]))));
    }
  }
  return kron_clusters(factors, cd.clusters(), dims);
}

double coincidence_probability(const DensityOperator& rho,
                               const ClusterDecomposition& cd,
                               const EventString& s) {
  check_aligned(rho, cd, s);
  const ComplexMatrix q = event_operator(rho.dims(), cd, s);
  return clamp_probability(trace_of_product(rho.matrix(), q).real());
}

CorrelationReport seen_correlation(const DensityOperator& rho,
                                   const ClusterDecomposition& cd,
                                   const EventString& s) {
  CorrelationReport r;
  r.coincidence = coincidence_probability(rho, cd, s);
  r.marginal_product = 1.0;
  for (std::size_t k = 0; k < cd.size(); ++k) {
    if (!s.events[k]) continue;
    const auto rk = reduced_state(rho, cd[k]);
    r.marginal_product *=
        clamp_probability(trace_of_product(rk.matrix(), s.events[k]->matrix()).real());
  }
  r.signed_difference = r.coincidence - r.marginal_product;
  r.seen = std::abs(r.signed_difference);
  return r;
}

bool check_zero_probability_blindness(const DensityOperator& rho,
                                      const ClusterDecomposition& cd,
                                      const EventString& s) {
  check_aligned(rho, cd, s);
  bool has_null_event = false;
  for (std::size_t k = 0; k < cd.size() && !has_null_event; ++k) {
    if (!s.events[k]) continue;
    const auto rk = reduced_state(rho, cd[k]);
    const double p = trace_of_product(rk.matrix(), s.events[k]->matrix()).real();
    has_null_event = p <= kZeroProbability;
  }
  if (!has_null_event) return false;
  const double seen = seen_correlation(rho, cd, s).seen;
  if (seen > kHermitianTol) {
    throw NumericalError("zero-probability event string sees correlation " +
                         std::to_string(seen));
  }
  return true;
}

double von_neumann_entropy(const DensityOperator& rho) {
  double s = 0.0;
  for (double lambda : rho.spectrum()) {
    if (lambda > kEntropyCutoff) s -= lambda * std::log2(lambda);
  }
  return std::max(s, 0.0);
}

CorrelationInformation correlation_information(const DensityOperator& rho,
                                               const ClusterDecomposition& cd) {
  if (cd.num_subsystems() != rho.num_subsystems()) {
    throw ValidationError("correlation_information: decomposition does not match state");
  }
  std::vector<double> single(rho.num_subsystems());
  for (std::size_t i = 0; i < single.size(); ++i) {
    single[i] = von_neumann_entropy(reduced_state(rho, {i}));
  }
  const double whole = von_neumann_entropy(rho);

  CorrelationInformation info;
  double cluster_sum = 0.0;
  for (const auto& c : cd.clusters()) {
    const double sc = c.size() == rho.num_subsystems()
                          ? whole
                          : von_neumann_entropy(reduced_state(rho, c));
    double parts = 0.0;
    for (std::size_t i : c) parts += single[i];
    info.within.push_back(clamp_information(parts - sc));
    cluster_sum += sc;
  }
  info.among = clamp_information(cluster_sum - whole);
  double all_parts = 0.0;
  for (double si : single) all_parts += si;
  info.total = clamp_information(all_parts - whole);
  return info;
}

}  // namespace clusterq
