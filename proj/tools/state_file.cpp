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

#include "state_file.hpp"

#include <fstream>
#include <sstream>

#include "clusterq/error.hpp"

namespace clusterq::cli {

using nlohmann::json;

namespace {

cplx complex_from_json(const json& j) {
  if (j.is_number()) return {j.get<double>(), 0.0};
  if (!j.is_array() || j.size() != 2 || !j[0].is_number() || !j[1].is_number()) {
    throw ValidationError("state file: complex entries must be [re, im] pairs, got " + j.dump());
  }
  return {j[0].get<double>(), j[1].get<double>()};
}

json complex_to_json(cplx z) { return json::array({z.real(), z.imag()}); }

json parse_json(std::istream& in, const std::string& origin) {
  try {
    return json::parse(in);
  } catch (const json::parse_error& e) {
    throw ValidationError(origin + ": invalid JSON (" + e.what() + ")");
  }
}

}  // namespace

json vector_to_json(const ComplexVector& v) {
  json out = json::array();
  for (Eigen::Index i = 0; i < v.size(); ++i) out.push_back(complex_to_json(v(i)));
  return out;
}

json matrix_to_json(const ComplexMatrix& m) {
  json out = json::array();
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    json row = json::array();
    for (Eigen::Index j = 0; j < m.cols(); ++j) row.push_back(complex_to_json(m(i, j)));
    out.push_back(std::move(row));
  }
  return out;
}

ComplexVector vector_from_json(const json& j) {
  if (!j.is_array()) throw ValidationError("state file: \"vector\" must be an array");
  ComplexVector v(static_cast<Eigen::Index>(j.size()));
  for (std::size_t i = 0; i < j.size(); ++i) v(static_cast<Eigen::Index>(i)) = complex_from_json(j[i]);
  return v;
}

ComplexMatrix matrix_from_json(const json& j) {
  const json& rows = j.is_object() && j.contains("matrix") ? j["matrix"] : j;
  if (!rows.is_array() || rows.empty()) {
    throw ValidationError("matrix must be a nonempty 2-D array of [re, im] pairs");
  }
  const std::size_t n = rows.size();
  const std::size_t m = rows[0].is_array() ? rows[0].size() : 0;
  ComplexMatrix out(static_cast<Eigen::Index>(n), static_cast<Eigen::Index>(m));
  for (std::size_t r = 0; r < n; ++r) {
    if (!rows[r].is_array() || rows[r].size() != m) {
      throw ValidationError("matrix rows must all have length " + std::to_string(m));
    }
    for (std::size_t c = 0; c < m; ++c) {
      out(static_cast<Eigen::Index>(r), static_cast<Eigen::Index>(c)) = complex_from_json(rows[r][c]);
    }
  }
  return out;
}

json state_to_json(const Fixture& state) {
  json out;
  if (const auto* psi = std::get_if<StateVector>(&state)) {
    out["dims"] = psi->dims();
    out["vector"] = vector_to_json(psi->amplitudes());
  } else {
    const auto& rho = std::get<DensityOperator>(state);
    out["dims"] = rho.dims();
    out["matrix"] = matrix_to_json(rho.matrix());
  }
  return out;
}

Fixture state_from_json(const json& j) {
  if (!j.is_object() || !j.contains("dims")) {
    throw ValidationError("state file: object with \"dims\" required");
  }
  Dims dims;
  for (const auto& d : j["dims"]) {
    if (!d.is_number_integer() || d.get<long long>() < 1) {
      throw ValidationError("state file: \"dims\" entries must be positive integers");
    }
    dims.push_back(d.get<std::size_t>());
  }
  const bool has_vector = j.contains("vector");
  const bool has_matrix = j.contains("matrix");
  if (has_vector == has_matrix) {
    throw ValidationError("state file: exactly one of \"vector\" or \"matrix\" required");
  }
  if (has_vector) return StateVector(std::move(dims), vector_from_json(j["vector"]));
  return DensityOperator(std::move(dims), matrix_from_json(j["matrix"]));
}

Fixture read_state_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ValidationError("cannot open state file " + path.string());
  return state_from_json(parse_json(in, path.string()));
}

void write_state_file(const std::filesystem::path& path, const Fixture& state) {
  std::ofstream out(path);
  if (!out) throw ValidationError("cannot write state file " + path.string());
  out << state_to_json(state).dump(2) << '\n';
}

json json_argument(const std::string& text) {
  const auto first = text.find_first_not_of(" \t\n");
  if (first != std::string::npos && (text[first] == '[' || text[first] == '{')) {
    std::istringstream in(text);
    return parse_json(in, "inline JSON");
  }
  std::ifstream in(text);
  if (!in) throw ValidationError("cannot open JSON file " + text);
  return parse_json(in, text);
}

EventString event_string_from_json(const json& j) {
  if (!j.is_array()) throw ValidationError("event string: expected a list of events");
  EventString s;
  for (const auto& e : j) {
    if (e.is_string()) {
      if (e.get<std::string>() != "I") {
        throw ValidationError("event string: the only string entry allowed is \"I\"");
      }
      s.events.emplace_back(std::nullopt);
    } else {
      s.events.emplace_back(Projector(matrix_from_json(e)));
    }
  }
  return s;
}

std::vector<Projector> projectors_from_json(const json& j) {
  const json& list = j.is_object() && j.contains("projectors") ? j["projectors"] : j;
  if (!list.is_array()) throw ValidationError("projectors: expected a list of matrices");
  std::vector<Projector> out;
  for (const auto& m : list) out.emplace_back(matrix_from_json(m));
  return out;
}

}  // namespace clusterq::cli
