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

#include <filesystem>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "clusterq/correlations.hpp"
#include "clusterq/fixtures.hpp"

namespace clusterq::cli {

// State files are JSON objects:
//   {"dims": [2, 2], "vector": [[re, im], ...]}
//   {"dims": [2, 2], "matrix": [[[re, im], ...], ...]}   (row-major)
// Exactly one of "vector" / "matrix" must be present.

nlohmann::json vector_to_json(const ComplexVector& v);
nlohmann::json matrix_to_json(const ComplexMatrix& m);
ComplexVector vector_from_json(const nlohmann::json& j);
ComplexMatrix matrix_from_json(const nlohmann::json& j);

nlohmann::json state_to_json(const Fixture& state);
Fixture state_from_json(const nlohmann::json& j);

Fixture read_state_file(const std::filesystem::path& path);
void write_state_file(const std::filesystem::path& path, const Fixture& state);

/// Reads `text` as inline JSON if it starts with '[' or '{', otherwise as
/// the path of a JSON file.
nlohmann::json json_argument(const std::string& text);

/// Event strings: a list with one entry per cluster, each either the
/// literal "I" or a matrix (bare 2-D array or {"matrix": ...}).
EventString event_string_from_json(const nlohmann::json& j);

/// A list of matrices (or {"projectors": [...]}) forming a projective
/// decomposition.
std::vector<Projector> projectors_from_json(const nlohmann::json& j);

}  // namespace clusterq::cli
