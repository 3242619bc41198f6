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
#include <optional>
#include <string>

#include <nlohmann/json.hpp>

#include "clusterq/random.hpp"

namespace clusterq::cli {

/// Exit status contract of the command-line tool.
enum ExitCode : int {
  kOk = 0,
  kValidationFailure = 1,
  kAmbiguous = 2,
};

struct Report {
  nlohmann::json body;
  int exit_code = kOk;
};

struct FucdOptions {
  std::string input;
  std::optional<double> tol;
  bool strict = false;
};
Report run_fucd(const FucdOptions& opt);

struct SeenOptions {
  std::string input;
  std::string partition;
  std::string events;  // inline JSON or path
};
Report run_seen(const SeenOptions& opt);

struct InfoOptions {
  std::string input;
  std::string partition;
};
Report run_info(const InfoOptions& opt);

struct SchmidtOptions {
  std::string input;
  std::string bipartition;
  std::string basis;  // "", "bell" or "product"
};
Report run_schmidt(const SchmidtOptions& opt);

struct TomoOptions {
  std::string input;
  std::string dims;  // e.g. "2,2,3"
  std::uint64_t seed = kDefaultSeed;
};
Report run_tomo(const TomoOptions& opt);

struct MeasureOptions {
  std::string input;
  std::string subsystem;   // measured cluster, e.g. "2,3"
  std::string projectors;  // z | x | bell | path to JSON
};
Report run_measure(const MeasureOptions& opt);

struct FixtureOptions {
  std::string name;
  std::string out;
};
Report run_fixture(const FixtureOptions& opt);

struct SeevinckOptions {
  std::string input;
  std::string groups;
  std::size_t search = 1000;
  std::uint64_t seed = kDefaultSeed;
};
Report run_seevinck(const SeevinckOptions& opt);

}  // namespace clusterq::cli
