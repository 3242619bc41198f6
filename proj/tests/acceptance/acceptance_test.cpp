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

// Acceptance gate: runs every release criterion at its stated tolerance and
// prints one PASS/FAIL line per criterion. Exit status is nonzero if any
// criterion fails.

#include <chrono>
#include <cstdio>
#include <functional>
#include <sstream>
#include <string>
#include <vector>

#include "clusterq/clusterq.hpp"
#include "test_util.hpp"

namespace clusterq {
namespace {

struct Outcome {
  bool pass = true;
  std::ostringstream detail;
  void require(bool ok, const std::string& what) {
    if (!ok && pass) detail << "first failure: " << what << "; ";
    pass = pass && ok;
  }
};

// Eq. (4) computed from scratch: tr(rho P1 (x) P2) - tr(rho_1 P1) tr(rho_2 P2).
double direct_seen(const ComplexMatrix& rho, const Dims& dims, const ComplexMatrix& p1,
                   const ComplexMatrix& p2) {
  const double joint = (rho * testing::naive_kron(p1, p2)).trace().real();
  const double a = (testing::naive_partial_trace(rho, dims, {0}) * p1).trace().real();
  const double b = (testing::naive_partial_trace(rho, dims, {1}) * p2).trace().real();
  return std::abs(joint - a * b);
}

Projector random_event(std::size_t dim, Rng& rng) {
  std::uniform_int_distribution<std::size_t> rank(0, dim);
  const std::size_t r = rank(rng);
  if (r == 0 || r == dim) return Projector(identity(dim));
  return Projector(random_projector(dim, r, rng));
}

void tomographic_completeness(Outcome& out) {
  Rng rng(101);
  double worst = 0.0;
  for (const auto& [dims, count] : std::vector<std::pair<Dims, int>>{{{2, 2}, 50}, {{2, 2, 3}, 20}}) {
    const auto probes = product_probe_set(dims);
    for (int t = 0; t < count; ++t) {
      const auto rho = random_density(dims, 1 + static_cast<std::size_t>(t) % total_dim(dims), rng);
      const auto r = reconstruct(probe_probabilities(rho, probes), probes, dims);
      worst = std::max(worst, frobenius_distance(r.estimate, rho.matrix()));
    }
  }
  out.require(worst <= 1e-8, "reconstruction error");
  out.detail << "70 states, max Frobenius error " << worst;
}

void probe_counting(Outcome& out) {
  out.require(required_probe_count({2, 2}).required == 15, "required_probe_count([2,2]) == 15");
  for (const Dims& dims : std::vector<Dims>{{2}, {2, 2}, {2, 3}, {2, 2, 2}}) {
    const auto n = product_probe_set(dims).size();
    out.require(n - 1 == required_probe_count(dims).required, "product set size");
    out.detail << n - 1 << " ";
  }
  out.detail << "(|product set| - 1 for [2],[2,2],[2,3],[2,2,2])";
}

void dyad_exactness(Outcome& out) {
  double worst = 0.0;
  for (std::size_t dim = 2; dim <= 5; ++dim) {
    for (std::size_t m = 0; m < dim; ++m) {
      for (std::size_t mp = 0; mp < dim; ++mp) {
        if (m == mp) continue;
        const auto d = dyad_as_projectors(m, mp, dim);
        ComplexMatrix expected = ComplexMatrix::Zero(dim, dim);
        expected(m, mp) = 1.0;
        worst = std::max(worst, (d.reconstruct() - expected).cwiseAbs().maxCoeff());
      }
    }
  }
  ComplexMatrix hand(2, 2);
  hand << 0, 1, 0, 0;
  const double two = (dyad_as_projectors(0, 1, 2).reconstruct() - hand).cwiseAbs().maxCoeff();
  out.require(worst <= 1e-12, "entrywise error");
  out.require(two <= 1e-12, "dim-2 hand expansion");
  out.detail << "max entrywise error " << worst << " over all pairs, dims 2..5";
}

void fucd_correctness(Outcome& out) {
  Rng rng(104);
  int agree = 0;
  for (int t = 0; t < 100; ++t) {
    const std::size_t n = 2 + static_cast<std::size_t>(t) % 5;
    const auto s = testing::random_composite(n, rng);
    const double tol = 1e-9 * static_cast<double>(s.rho.dim());
    const bool ok = finest_ucd(s.rho, tol).decomposition == fucd_oracle(s.rho, tol);
    agree += ok;
    out.require(ok, "random state " + std::to_string(t));
  }
  const auto pair = as_density(fixture("singlet_pair"));
  const auto four = as_density(fixture("seevinck4"));
  const auto a = finest_ucd(pair, 1e-9 * 16).decomposition;
  const auto b = finest_ucd(four, 1e-9 * 16).decomposition;
  out.require(a.to_string() == "1,2|3,4", "singlet pair");
  out.require(b.is_trivial(), "four-qubit entangled state");
  out.detail << agree << "/100 random states agree with oracle; singlet pair -> " << a.to_string()
             << "; four-qubit state -> " << b.to_string();
}

void ucd_iff_uncorrelated(Outcome& out) {
  Rng rng(105);
  double worst_ucd = 0.0;
  double weakest_witness = 1.0;
  std::size_t ucds = 0, non_ucds = 0;
  for (int t = 0; t < 60; ++t) {
    const std::size_t n = 2 + static_cast<std::size_t>(t) % 4;
    const auto s = testing::random_composite(n, rng);
    for (const auto& p : enumerate_partitions(n)) {
      if (is_ucd(s.rho, p).is_ucd) {
        ++ucds;
        for (int k = 0; k < 500; ++k) {
          EventString e;
          for (const auto& c : p.clusters()) {
            e.events.emplace_back(random_event(total_dim(select_dims(s.rho.dims(), c)), rng));
          }
          worst_ucd = std::max(worst_ucd, seen_correlation(s.rho, p, e).seen);
        }
      } else {
        ++non_ucds;
        const auto w = search_correlation_witness(s.rho, p, 10000, kDefaultSeed + t, 1e-4);
        weakest_witness = std::min(weakest_witness, w.report.seen);
        out.require(w.report.seen > 1e-4, "witness for " + p.to_string());
      }
    }
  }
  out.require(worst_ucd <= 1e-8, "UCD seen correlation");
  out.detail << ucds << " UCDs max seen " << worst_ucd << "; " << non_ucds
             << " non-UCDs weakest witness " << weakest_witness;
}

void entropy_additivity(Outcome& out) {
  Rng rng(106);
  double worst = 0.0;
  for (int t = 0; t < 50; ++t) {
    const auto rho = random_density({2, 2, 2}, 1 + static_cast<std::size_t>(t) % 8, rng);
    for (const auto& p : enumerate_partitions(3)) {
      const auto info = correlation_information(rho, p);
      double within = 0.0;
      for (double w : info.within) within += w;
      worst = std::max(worst, std::abs(info.total - within - info.among));
    }
  }
  out.require(worst <= 1e-9, "additivity");
  const auto pair = as_density(fixture("singlet_pair"));
  const auto a = correlation_information(pair, ClusterDecomposition::parse("1,2|3,4"));
  const auto b = correlation_information(pair, ClusterDecomposition::parse("2,3|1,4"));
  auto near = [](double x, double y) { return std::abs(x - y) <= 1e-9; };
  out.require(near(a.within[0], 2) && near(a.within[1], 2) && near(a.among, 0) && near(a.total, 4),
              "1,2|3,4 values");
  out.require(near(b.within[0], 0) && near(b.within[1], 0) && near(b.among, 4) && near(b.total, 4),
              "2,3|1,4 values");
  out.detail << "max additivity gap " << worst << "; 1,2|3,4 -> (" << a.within[0] << ","
             << a.within[1] << "," << a.among << " | " << a.total << "); 2,3|1,4 -> ("
             << b.within[0] << "," << b.within[1] << "," << b.among << " | " << b.total << ")";
}

void operator_route_equivalence(Outcome& out) {
  Rng rng(107);
  std::uniform_int_distribution<std::size_t> dim(2, 4);
  double worst = 0.0;
  for (int t = 0; t < 200; ++t) {
    const Dims dims{dim(rng), dim(rng)};
    const auto psi = random_pure_state(dims, rng);
    const auto p1 = random_event(dims[0], rng);
    const auto p2 = random_event(dims[1], rng);
    const double via_operator = seen_correlation_via_operator(psi, Bipartition{{0}, {1}}, p1, p2);
    const double direct = direct_seen(psi.density().matrix(), dims, p1.matrix(), p2.matrix());
    worst = std::max(worst, std::abs(via_operator - direct));
  }
  out.require(worst <= 1e-10, "operator route vs direct");
  out.detail << "200 states, max |operator route - direct| " << worst;
}

void steering_reproduction(Outcome& out) {
  const auto rho = as_density(fixture("singlet_pair"));
  const auto dd = distant_decomposition(rho, {1, 2}, bell_measurement());
  out.require(dd.outcomes.size() == 4, "four outcomes");
  const auto bell = bell_basis();
  double weight_err = 0.0, worst_fid = 1.0;
  for (std::size_t q = 0; q < dd.outcomes.size(); ++q) {
    weight_err = std::max(weight_err, std::abs(dd.outcomes[q].weight - 0.25));
    const auto& target = bell[dd.outcomes[q].index];
    worst_fid = std::min(worst_fid, target.dot(dd.outcomes[q].state.matrix() * target).real());
  }
  out.require(weight_err <= 1e-12, "weights");
  out.require(worst_fid >= 1 - 1e-10, "fidelities");
  out.detail << "max |w - 1/4| " << weight_err << ", min fidelity to psi+,psi-,phi+,phi- on (1,4) "
             << worst_fid;
}

ProjectiveDecomposition random_measurement(std::size_t dim, Rng& rng) {
  const ComplexMatrix u = random_unitary(dim, rng);
  std::vector<Projector> ps;
  std::size_t k = 0;
  std::uniform_int_distribution<std::size_t> width(1, dim);
  while (k < dim) {
    const std::size_t r = std::min(width(rng), dim - k);
    ComplexMatrix p = ComplexMatrix::Zero(dim, dim);
    for (std::size_t j = k; j < k + r; ++j) p += ray_projector(u.col(j));
    ps.emplace_back(p);
    k += r;
  }
  return ProjectiveDecomposition(std::move(ps));
}

void measurement_invariants(Outcome& out) {
  Rng rng(109);
  double reduced = 0.0, mixture = 0.0, conditional = 0.0;
  const Dims dims{2, 2, 3};
  const IndexSet measured{0, 1};
  const IndexSet distant{2};
  for (int t = 0; t < 500; ++t) {
    const auto rho = random_density(dims, 1 + static_cast<std::size_t>(t) % 12, rng);
    const auto pd = random_measurement(4, rng);
    const auto before = reduced_state(rho, distant).matrix();
    const auto after = reduced_state(luders_nonselective(rho, measured, pd), distant).matrix();
    reduced = std::max(reduced, (after - before).cwiseAbs().maxCoeff());
    mixture = std::max(mixture,
                       frobenius_distance(distant_decomposition(rho, measured, pd).mixture(), before));
    const Projector p1(random_projector(4, 1 + static_cast<std::size_t>(t) % 3, rng));
    const Projector p2(random_projector(3, 1 + static_cast<std::size_t>(t) % 2, rng));
    conditional = std::max(conditional,
                           conditional_probability_identity(rho, measured, p1, distant, p2).gap);
  }
  out.require(reduced <= 1e-12, "distant state unchanged");
  out.require(mixture <= 1e-10, "mixture identity");
  out.require(conditional <= 1e-10, "conditional identity");
  out.detail << "500 triples: distant change " << reduced << ", mixture " << mixture
             << ", conditional " << conditional;
}

void no_signaling(Outcome& out) {
  Rng rng(110);
  double worst = 0.0;
  for (int t = 0; t < 50; ++t) {
    const auto rho = random_density({2, 2, 2}, 0, rng);
    worst = std::max(worst, local_unitary_no_signaling(rho, {0, 1}, {2}, random_unitary(4, rng),
                                                       random_unitary(2, rng), 4));
  }
  out.require(worst <= 1e-10, "deviation");
  out.detail << "50 instances, max deviation " << worst;
}

void seevinck(Outcome& out) {
  Rng rng(111);
  const auto groups = ClusterDecomposition::parse("1,2|3,4");
  const auto pair = as_density(fixture("singlet_pair"));
  double worst = 0.0;
  for (int t = 0; t < 1000; ++t) {
    std::vector<Projector> events;
    for (int i = 0; i < 4; ++i) events.emplace_back(random_event(2, rng));
    const auto c = seevinck_condition(pair, groups, events);
    worst = std::max(worst, c.gap());
    out.require(c.holds, "singlet pair quadruple");
  }
  const auto search = seevinck_search(as_density(fixture("seevinck4")), groups);
  out.require(search.violated() && search.best.gap() > 1e-3, "violation found");
  out.detail << "singlet pair max gap " << worst << " over 1000; four-qubit state gap "
             << search.best.gap() << " after " << search.samples << " samples";
}

std::vector<ComplexMatrix> random_family(std::size_t dim, std::size_t q, Rng& rng) {
  std::vector<ComplexMatrix> ops;
  std::uniform_int_distribution<std::size_t> rank(1, dim - 1);
  for (std::size_t k = 0; k < q; ++k) ops.push_back(random_projector(dim, rank(rng), rng));
  return ops;
}

void independence_criteria(Outcome& out) {
  Rng rng(112);
  std::uniform_int_distribution<std::size_t> dim_pick(2, 4);
  int independent = 0, singular = 0;
  for (int t = 0; t < 100; ++t) {
    const std::size_t dim = dim_pick(rng);
    std::uniform_int_distribution<std::size_t> size_pick(2, dim * dim);
    const std::size_t q = size_pick(rng);
    auto ops = random_family(dim, q, rng);
    const int kind = t % 4;
    if (kind == 1) {
      ops.back() = ops.front();
    } else if (kind == 2) {
      // A real combination of the others.
      std::normal_distribution<double> g;
      ComplexMatrix c = ComplexMatrix::Zero(dim, dim);
      for (std::size_t k = 0; k + 1 < q; ++k) c += g(rng) * ops[k];
      ops.back() = c;
    } else if (kind == 3 && dim * dim >= 3) {
      // Complementary projectors with the identity.
      const ComplexMatrix p = random_projector(dim, 1, rng);
      ops.resize(std::max<std::size_t>(q, 3));
      ops[0] = p;
      ops[1] = identity(dim) - p;
      ops[2] = identity(dim);
    }
    const auto li = linear_independence_criteria(ops);
    const bool agree = li.null_combination_only == li.expansion_nonsingular &&
                       li.null_combination_only == li.gram_nonsingular;
    const bool expected = kind == 0;
    out.require(agree, "family " + std::to_string(t) + " criteria disagree");
    out.require(li.null_combination_only == expected,
                "family " + std::to_string(t) + " classified wrongly");
    (li.null_combination_only ? independent : singular)++;
  }
  out.detail << "100 families agree: " << independent << " independent, " << singular
             << " singular";
}

}  // namespace
}  // namespace clusterq

int main() {
  using namespace clusterq;
  const std::vector<std::pair<const char*, std::function<void(Outcome&)>>> criteria{
      {"tomographic completeness", tomographic_completeness},
      {"probe counting", probe_counting},
      {"dyad expansion exactness", dyad_exactness},
      {"finest uncorrelated decomposition", fucd_correctness},
      {"UCD iff no seen correlation", ucd_iff_uncorrelated},
      {"correlation information additivity", entropy_additivity},
      {"correlation operator formula", operator_route_equivalence},
      {"Bell-measurement steering", steering_reproduction},
      {"measurement invariants", measurement_invariants},
      {"no-signaling", no_signaling},
      {"Seevinck condition", seevinck},
      {"linear independence criteria", independence_criteria},
  };
  int failures = 0;
  int index = 1;
  for (const auto& [name, run] : criteria) {
    Outcome out;
    const auto start = std::chrono::steady_clock::now();
    try {
      run(out);
    } catch (const std::exception& e) {
      out.pass = false;
      out.detail << "exception: " << e.what();
    }
    const double secs =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    std::printf("[%s] %2d %s: %s (%.2fs)\n", out.pass ? "PASS" : "FAIL", index++, name,
                out.detail.str().c_str(), secs);
    failures += !out.pass;
  }
  std::printf("%d/%zu criteria passed\n", static_cast<int>(criteria.size()) - failures,
              criteria.size());
  return failures == 0 ? 0 : 1;
}
