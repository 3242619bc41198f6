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

#include "clusterq/fixtures.hpp"

#include <cmath>

#include "clusterq/error.hpp"

namespace clusterq {

namespace {

const double kHalfRoot = std::sqrt(0.5);

StateVector two_qubit(double a00, double a01, double a10, double a11) {
  ComplexVector v(4);
  v << a00, a01, a10, a11;
  return StateVector({2, 2}, v);
}

StateVector seevinck4() {
  ComplexVector v = ComplexVector::Zero(16);
  v(0b0101) = kHalfRoot;
  v(0b1010) = -kHalfRoot;
  return StateVector({2, 2, 2, 2}, v);
}

ProjectiveDecomposition product_measurement(const Dims& cluster_dims,
                                            const std::vector<std::vector<ComplexVector>>& local) {
  std::vector<ComplexVector> kets{ComplexVector::Ones(1)};
  for (std::size_t k = 0; k < cluster_dims.size(); ++k) {
    std::vector<ComplexVector> next;
    for (const auto& prefix : kets) {
      for (const auto& v : local[k]) next.push_back(kron(prefix, v));
    }
    kets = std::move(next);
  }
  std::vector<Projector> ps;
  for (const auto& v : kets) ps.push_back(Projector::onto(v));
  return ProjectiveDecomposition(std::move(ps));
}

}  // namespace

StateVector singlet() { return two_qubit(0.0, kHalfRoot, -kHalfRoot, 0.0); }

std::vector<ComplexVector> bell_basis() {
  return {two_qubit(0.0, kHalfRoot, kHalfRoot, 0.0).amplitudes(),
          two_qubit(0.0, kHalfRoot, -kHalfRoot, 0.0).amplitudes(),
          two_qubit(kHalfRoot, 0.0, 0.0, kHalfRoot).amplitudes(),
          two_qubit(kHalfRoot, 0.0, 0.0, -kHalfRoot).amplitudes()};
}

const std::vector<std::string>& fixture_names() {
  static const std::vector<std::string> names{
      "singlet",      "psi_plus",          "psi_minus",        "phi_plus",
      "phi_minus",    "singlet_pair",      "singlet_pair_2314", "seevinck4",
      "maximally_mixed_2", "maximally_mixed_4"};
  return names;
}

Fixture fixture(std::string_view name) {
  if (name == "singlet") return singlet();
  if (name == "psi_plus") return StateVector({2, 2}, bell_basis()[0]);
  if (name == "psi_minus") return StateVector({2, 2}, bell_basis()[1]);
  if (name == "phi_plus") return StateVector({2, 2}, bell_basis()[2]);
  if (name == "phi_minus") return StateVector({2, 2}, bell_basis()[3]);
  if (name == "singlet_pair") return tensor_product(singlet(), singlet());
  if (name == "singlet_pair_2314") {
    return permute_subsystems(tensor_product(singlet(), singlet()), {1, 2, 0, 3});
  }
  if (name == "seevinck4") return seevinck4();
  if (name == "maximally_mixed_2") return DensityOperator({2}, identity(2) / 2.0);
  if (name == "maximally_mixed_4") return DensityOperator({2, 2}, identity(4) / 4.0);

  std::string known;
  for (const auto& n : fixture_names()) known += (known.empty() ? "" : ", ") + n;
  throw ValidationError("unknown fixture '" + std::string(name) + "'; available: " + known);
}

DensityOperator as_density(const Fixture& f) {
  if (const auto* psi = std::get_if<StateVector>(&f)) return psi->density();
  return std::get<DensityOperator>(f);
}

ComplexVector basis_ket(std::size_t dim, std::size_t k) {
  ComplexVector v = ComplexVector::Zero(static_cast<Eigen::Index>(dim));
  v(static_cast<Eigen::Index>(k)) = 1.0;
  return v;
}

ComplexVector x_ket(bool plus) {
  ComplexVector v(2);
  v << kHalfRoot, plus ? kHalfRoot : -kHalfRoot;
  return v;
}

ProjectiveDecomposition z_measurement(const Dims& cluster_dims) {
  std::vector<std::vector<ComplexVector>> local;
  for (std::size_t d : cluster_dims) {
    std::vector<ComplexVector> kets;
    for (std::size_t k = 0; k < d; ++k) kets.push_back(basis_ket(d, k));
    local.push_back(std::move(kets));
  }
  return product_measurement(cluster_dims, local);
}

ProjectiveDecomposition x_measurement(const Dims& cluster_dims) {
  std::vector<std::vector<ComplexVector>> local;
  for (std::size_t d : cluster_dims) {
    if (d != 2) throw ValidationError("x_measurement: qubit subsystems only");
    local.push_back({x_ket(true), x_ket(false)});
  }
  return product_measurement(cluster_dims, local);
}

ProjectiveDecomposition bell_measurement() {
  std::vector<Projector> ps;
  for (const auto& v : bell_basis()) ps.push_back(Projector::onto(v));
  return ProjectiveDecomposition(std::move(ps));
}

}  // namespace clusterq
