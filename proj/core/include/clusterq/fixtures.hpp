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

#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "clusterq/correlations.hpp"
#include "clusterq/dynamics.hpp"
#include "clusterq/state.hpp"

namespace clusterq {

// Spin convention used throughout: |+> = |up> = index 0, |-> = |down> = index 1.

using Fixture = std::variant<StateVector, DensityOperator>;

/// Named states:
///   singlet                 (|+-> - |-+>)/sqrt2
///   psi_plus, psi_minus     (|+-> +- |-+>)/sqrt2
///   phi_plus, phi_minus     (|++> +- |-->)/sqrt2
///   singlet_pair            singlet (x) singlet on subsystems 1,2 | 3,4
///   singlet_pair_2314       the same state with factors reordered 2,3,1,4
///   seevinck4               (|+-+-> - |-+-+>)/sqrt2
///   maximally_mixed_2       I/2
///   maximally_mixed_4       I/4 on two qubits
/// Unknown names raise ValidationError listing the catalog.
Fixture fixture(std::string_view name);

const std::vector<std::string>& fixture_names();

DensityOperator as_density(const Fixture& f);

StateVector singlet();

/// Bell basis on two qubits in the order psi+, psi-, phi+, phi-.
std::vector<ComplexVector> bell_basis();

/// Computational basis ket |k> in C^dim.
ComplexVector basis_ket(std::size_t dim, std::size_t k);

/// |+x>, |-x> = (|0> +- |1>)/sqrt2.
ComplexVector x_ket(bool plus);

/// Projective decompositions on a cluster of the given dimensions:
/// computational product basis, x-basis product basis, and the Bell basis
/// (two qubits only).
ProjectiveDecomposition z_measurement(const Dims& cluster_dims);
ProjectiveDecomposition x_measurement(const Dims& cluster_dims);
ProjectiveDecomposition bell_measurement();

}  // namespace clusterq
