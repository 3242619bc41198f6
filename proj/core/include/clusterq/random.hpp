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

#include <cstdint>
#include <random>

#include "clusterq/state.hpp"
#include "clusterq/tensor.hpp"

namespace clusterq {

using Rng = std::mt19937_64;

inline constexpr std::uint64_t kDefaultSeed = 20070913;

/// Entries i.i.d. standard complex Gaussian.
ComplexMatrix random_ginibre(std::size_t rows, std::size_t cols, Rng& rng);

/// Haar-distributed unitary (QR of a Ginibre matrix with phase fix).
ComplexMatrix random_unitary(std::size_t dim, Rng& rng);

/// Haar-random unit vector.
ComplexVector random_unit_vector(std::size_t dim, Rng& rng);

StateVector random_pure_state(const Dims& dims, Rng& rng);

/// rho = G G^+ / tr(G G^+) with G of shape dim x rank. rank 0 means full.
DensityOperator random_density(const Dims& dims, std::size_t rank, Rng& rng);

/// Random Hermitian matrix with Gaussian entries.
ComplexMatrix random_hermitian(std::size_t dim, Rng& rng);

/// Orthogonal projector onto a Haar-random subspace of the given rank.
ComplexMatrix random_projector(std::size_t dim, std::size_t rank, Rng& rng);

ComplexMatrix random_ray_projector(std::size_t dim, Rng& rng);

}  // namespace clusterq
