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

#include "commands.hpp"

#include <algorithm>
#include <cmath>

#include "clusterq/clusterq.hpp"
#include "state_file.hpp"

namespace clusterq::cli {

using nlohmann::json;

namespace {

DensityOperator load_density(const std::string& path) {
  return as_density(read_state_file(path));
}

StateVector load_pure(const std::string& path) {
  auto state = read_state_file(path);
  if (auto* psi = std::get_if<StateVector>(&state)) return *psi;
  throw ValidationError("state file " + path + ": a state vector is required here");
}

json split_to_json(const SplitRecord& s) {
  return {{"cluster", format_index_list(s.cluster)},
          {"part", format_index_list(s.part)},
          {"residual", s.residual}};
}

// Short name for vectors that match a Bell state or a computational ket up
// to a phase of +-1 or +-i; empty otherwise.
std::string describe(const ComplexVector& v, const Dims& dims) {
  constexpr double tol = 1e-9;
  const std::pair<cplx, const char*> phases[] = {
      {1.0, ""}, {-1.0, "-"}, {cplx(0, 1), "i*"}, {cplx(0, -1), "-i*"}};
  auto matches = [&](const ComplexVector& ref) -> std::string {
    for (const auto& [phase, prefix] : phases) {
      if ((v - phase * ref).norm() < tol) return prefix;
    }
    return "?";
  };
  if (dims == Dims{2, 2}) {
    const char* names[] = {"psi+", "psi-", "phi+", "phi-"};
    const auto bell = bell_basis();
    for (std::size_t k = 0; k < 4; ++k) {
      const auto p = matches(bell[k]);
      if (p != "?") return p + names[k];
    }
  }
  for (Eigen::Index k = 0; k < v.size(); ++k) {
    const auto p = matches(basis_ket(static_cast<std::size_t>(v.size()), static_cast<std::size_t>(k)));
    if (p == "?") continue;
    std::string label = "|";
    std::size_t rem = static_cast<std::size_t>(k);
    std::string digits(dims.size(), '0');
    for (std::size_t s = dims.size(); s-- > 0;) {
      digits[s] = static_cast<char>('0' + rem % dims[s]);
      rem /= dims[s];
    }
    return p + label + digits + ">";
  }
  return "";
}

Dims parse_dims(const std::string& text) {
  Dims dims;
  for (std::size_t i : parse_index_list(text)) dims.push_back(i + 1);
  return dims;
}

}  // namespace

Report run_fucd(const FucdOptions& opt) {
  const auto rho = load_density(opt.input);
  const double tol = opt.tol.value_or(default_tolerance(rho));
  const auto result = finest_ucd(rho, tol);
  json splits = json::array(), near = json::array();
  for (const auto& s : result.splits) splits.push_back(split_to_json(s));
  for (const auto& s : result.near_threshold) near.push_back(split_to_json(s));
  Report r;
  r.body = {{"decomposition", result.decomposition.to_string()},
            {"tolerance", result.tolerance},
            {"splits", splits},
            {"near_threshold", near},
            {"ambiguous", result.ambiguous()},
            {"reassembly_residual", result.reassembly_residual}};
  if (opt.strict && result.ambiguous()) r.exit_code = kAmbiguous;
  return r;
}

Report run_seen(const SeenOptions& opt) {
  const auto rho = load_density(opt.input);
  const auto cd = ClusterDecomposition::parse(opt.partition, rho.num_subsystems());
  const auto events = event_string_from_json(json_argument(opt.events));
  const auto report = seen_correlation(rho, cd, events);
  Report r;
  r.body = {{"partition", cd.to_string()},
            {"coincidence", report.coincidence},
            {"marginal_product", report.marginal_product},
            {"seen", report.seen},
            {"signed_difference", report.signed_difference},
            {"zero_probability_blind", check_zero_probability_blindness(rho, cd, events)}};
  return r;
}

Report run_info(const InfoOptions& opt) {
  const auto rho = load_density(opt.input);
  const auto cd = ClusterDecomposition::parse(opt.partition, rho.num_subsystems());
  const auto info = correlation_information(rho, cd);
  Report r;
  r.body = {{"partition", cd.to_string()},
            {"units", "bits"},
            {"within", info.within},
            {"among", info.among},
            {"total", info.total}};
  return r;
}

Report run_schmidt(const SchmidtOptions& opt) {
  const auto psi = load_pure(opt.input);
  const auto bip = Bipartition::parse(opt.bipartition, psi.num_subsystems());
  const auto form = schmidt_decompose(psi, bip);

  json terms = json::array();
  for (Eigen::Index i = 0; i < form.coefficients.size(); ++i) {
    terms.push_back({{"coefficient", form.coefficients(i)},
                     {"left", vector_to_json(form.left[i])},
                     {"left_label", describe(form.left[i], form.left_dims)},
                     {"right", vector_to_json(form.right[i])},
                     {"right_label", describe(form.right[i], form.right_dims)}});
  }
  Report r;
  r.body = {{"bipartition", format_index_list(bip.left) + "|" + format_index_list(bip.right)},
            {"coefficients", std::vector<double>(form.coefficients.begin(), form.coefficients.end())},
            {"schmidt_terms", terms}};

  if (!opt.basis.empty()) {
    std::vector<ComplexVector> basis;
    if (opt.basis == "bell") {
      if (form.left_dims != Dims{2, 2}) {
        throw ValidationError("schmidt --basis bell: left group must be two qubits");
      }
      basis = bell_basis();
    } else if (opt.basis == "product") {
      const auto d = total_dim(form.left_dims);
      for (std::size_t k = 0; k < d; ++k) basis.push_back(basis_ket(d, k));
    } else {
      throw ValidationError("schmidt --basis must be 'bell' or 'product'");
    }
    const auto partners = partners_in_basis(psi, bip, basis);
    json out = json::array();
    for (std::size_t k = 0; k < basis.size(); ++k) {
      out.push_back({{"basis_vector", vector_to_json(basis[k])},
                     {"basis_label", describe(basis[k], form.left_dims)},
                     {"coefficient", partners[k].coefficient},
                     {"partner", vector_to_json(partners[k].vector)},
                     {"partner_label", describe(partners[k].vector, form.right_dims)}});
    }
    r.body["basis"] = opt.basis;
    r.body["partners"] = out;
  }
  return r;
}

Report run_tomo(const TomoOptions& opt) {
  std::optional<DensityOperator> source;
  if (!opt.input.empty()) {
    source = load_density(opt.input);
  } else if (!opt.dims.empty()) {
    Rng rng(opt.seed);
    source = random_density(parse_dims(opt.dims), 0, rng);
  } else {
    throw ValidationError("tomo: either --input or --dims is required");
  }
  const auto& rho = *source;
  const auto count = required_probe_count(rho.dims());
  const auto probes = product_probe_set(rho.dims());
  const auto result = reconstruct(probe_probabilities(rho, probes), probes, rho.dims());
  Report r;
  r.body = {{"dims", rho.dims()},
            {"required_probe_count", count.required},
            {"product_probes", probes.size()},
            {"reconstruction_error", frobenius_distance(result.estimate, rho.matrix())},
            {"gram_rcond", result.gram_rcond},
            {"hermiticity_error", result.hermiticity_error},
            {"trace_error", result.trace_error},
            {"min_eigenvalue", result.min_eigenvalue},
            {"valid", result.valid}};
  if (!result.valid) r.exit_code = kValidationFailure;
  return r;
}

Report run_measure(const MeasureOptions& opt) {
  const auto rho = load_density(opt.input);
  IndexSet measured = parse_index_list(opt.subsystem);
  std::sort(measured.begin(), measured.end());
  for (std::size_t i : measured) {
    if (i >= rho.num_subsystems()) throw ValidationError("measure: subsystem out of range");
  }
  const Dims cluster_dims = select_dims(rho.dims(), measured);

  std::optional<ProjectiveDecomposition> pd;
  if (opt.projectors == "z") {
    pd = z_measurement(cluster_dims);
  } else if (opt.projectors == "x") {
    pd = x_measurement(cluster_dims);
  } else if (opt.projectors == "bell") {
    if (cluster_dims != Dims{2, 2}) throw ValidationError("measure: Bell basis needs two qubits");
    pd = bell_measurement();
  } else {
    pd = ProjectiveDecomposition(projectors_from_json(json_argument(opt.projectors)));
  }

  const auto after = luders_nonselective(rho, measured, *pd);
  const auto dd = distant_decomposition(rho, measured, *pd);
  json outcomes = json::array();
  for (const auto& o : dd.outcomes) {
    outcomes.push_back({{"index", o.index + 1},
                        {"weight", o.weight},
                        {"state", state_to_json(o.state)}});
  }
  Report r;
  r.body = {{"measured", format_index_list(measured)},
            {"distant", format_index_list(dd.distant)},
            {"post_measurement_state", state_to_json(after)},
            {"distant_decomposition", outcomes}};
  return r;
}

Report run_fixture(const FixtureOptions& opt) {
  const auto state = fixture(opt.name);
  write_state_file(opt.out, state);
  Report r;
  r.body = {{"fixture", opt.name}, {"out", opt.out}};
  return r;
}

Report run_seevinck(const SeevinckOptions& opt) {
  const auto rho = load_density(opt.input);
  const auto groups = ClusterDecomposition::parse(opt.groups, rho.num_subsystems());
  const auto search = seevinck_search(rho, groups, opt.search, opt.seed);
  Report r;
  r.body = {{"groups", groups.to_string()},
            {"samples", search.samples},
            {"seed", opt.seed},
            {"lhs", search.best.lhs},
            {"rhs", search.best.rhs},
            {"gap", search.best.gap()},
            {"holds", search.best.holds}};
  if (search.violated()) {
    json witness = json::array();
    for (const auto& p : search.witness) witness.push_back(matrix_to_json(p.matrix()));
    r.body["witness"] = witness;
  }
  return r;
}

}  // namespace clusterq::cli
