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

#include <iostream>

#include <CLI11.hpp>

#include "clusterq/error.hpp"
#include "commands.hpp"

int main(int argc, char** argv) {
  using namespace clusterq::cli;

  CLI::App app{"clusterq: correlation and factorization analysis of multipartite quantum states"};
  app.require_subcommand(1);
  bool strict = false;
  app.add_flag("--strict", strict, "Exit with status 2 when a numerically ambiguous call is flagged");

  Report report;
  auto run = [&report](auto&& fn, const auto& opt) { report = fn(opt); };

  FucdOptions fucd;
  auto* c_fucd = app.add_subcommand("fucd", "Finest uncorrelated cluster decomposition");
  c_fucd->add_option("--input", fucd.input, "State file")->required();
  c_fucd->add_option("--tol", fucd.tol, "Factorization tolerance (default 1e-9 * dim)");
  c_fucd->add_flag("--strict", fucd.strict, "Exit with status 2 on near-threshold splits");

  SeenOptions seen;
  auto* c_seen = app.add_subcommand("seen", "Correlation seen by an event string");
  c_seen->add_option("--input", seen.input, "State file")->required();
  c_seen->add_option("--partition", seen.partition, "Cluster decomposition, e.g. 1,2|3")->required();
  c_seen->add_option("--events", seen.events, "Event string as inline JSON or a JSON file")->required();

  InfoOptions info;
  auto* c_info = app.add_subcommand("info", "Correlation information in bits");
  c_info->add_option("--input", info.input, "State file")->required();
  c_info->add_option("--partition", info.partition, "Cluster decomposition")->required();

  SchmidtOptions schmidt;
  auto* c_schmidt = app.add_subcommand("schmidt", "Schmidt form and partners of a pure state");
  c_schmidt->add_option("--input", schmidt.input, "State file holding a vector")->required();
  c_schmidt->add_option("--bipartition", schmidt.bipartition, "Ordered bipartition, e.g. 2,3|1,4")
      ->required();
  c_schmidt->add_option("--basis", schmidt.basis, "Expand in a left basis: bell or product")
      ->check(CLI::IsMember({"bell", "product"}));

  TomoOptions tomo;
  bool roundtrip = false;
  auto* c_tomo = app.add_subcommand("tomo", "Tomographic round trip through product probes");
  c_tomo->add_flag("--roundtrip", roundtrip, "Reconstruct from exact probe probabilities")->required();
  auto* tomo_input = c_tomo->add_option("--input", tomo.input, "State file");
  auto* tomo_dims = c_tomo->add_option("--dims", tomo.dims, "Random state dimensions, e.g. 2,2,3");
  tomo_input->excludes(tomo_dims);
  c_tomo->add_option("--seed", tomo.seed, "Seed for the random state");

  MeasureOptions measure;
  auto* c_measure = app.add_subcommand("measure", "Lueders measurement and distant decomposition");
  c_measure->add_option("--input", measure.input, "State file")->required();
  c_measure->add_option("--subsystem", measure.subsystem, "Measured cluster, e.g. 2,3")->required();
  c_measure->add_option("--projectors", measure.projectors, "z, x, bell, or a JSON file")->required();

  FixtureOptions fix;
  auto* c_fixture = app.add_subcommand("fixture", "Write a named state to a state file");
  c_fixture->add_option("--name", fix.name, "Fixture name")->required();
  c_fixture->add_option("--out", fix.out, "Output path")->required();

  SeevinckOptions seev;
  auto* c_seevinck = app.add_subcommand("seevinck", "Search for violations of group factorization of averages");
  c_seevinck->add_option("--input", seev.input, "State file")->required();
  c_seevinck->add_option("--groups", seev.groups, "Two groups, e.g. 1,2|3,4")->required();
  c_seevinck->add_option("--search", seev.search, "Number of random projector samples");
  c_seevinck->add_option("--seed", seev.seed, "Search seed");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? kOk : kValidationFailure;
  }

  try {
    if (*c_fucd) {
      fucd.strict = fucd.strict || strict;
      run(run_fucd, fucd);
    } else if (*c_seen) {
      run(run_seen, seen);
    } else if (*c_info) {
      run(run_info, info);
    } else if (*c_schmidt) {
      run(run_schmidt, schmidt);
    } else if (*c_tomo) {
      run(run_tomo, tomo);
    } else if (*c_measure) {
      run(run_measure, measure);
    } else if (*c_fixture) {
      run(run_fixture, fix);
    } else if (*c_seevinck) {
      run(run_seevinck, seev);
    }
  } catch (const clusterq::ValidationError& e) {
    std::cerr << "validation error: " << e.what() << '\n';
    return kValidationFailure;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kValidationFailure;
  }

  std::cout << report.body.dump(2) << '\n';
  return report.exit_code;
}
