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

#include "clusterq/correlations.hpp"
#include "clusterq/dynamics.hpp"
#include "clusterq/error.hpp"
#include "clusterq/factorization.hpp"
#include "clusterq/fixtures.hpp"
#include "clusterq/partition.hpp"
#include "clusterq/random.hpp"
#include "clusterq/schmidt.hpp"
#include "clusterq/state.hpp"
#include "clusterq/tensor.hpp"
#include "clusterq/tomography.hpp"
