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

#include "clusterq/tomography.hpp"

#include <cmath>
#include <string>

#include "clusterq/error.hpp"

namespace clusterq {

namespace {

constexpr double kSingularRcond = 1e-12;
constexpr double kNullSingularValue = 1e-10;

ComplexVector basis_vector(std::size_t dim, std::size_t k) {
  ComplexVector v = ComplexVector::Zero(static_cast<Eigen::Index>(dim));
  v(static_cast<Eigen::Index>(k)) = 1.0;
  return v;
}

ComplexMatrix gram_of(const std::vector<ComplexMatrix>& ops) {
  const auto q = static_cast<Eigen::Index>(ops.size());
  ComplexMatrix g(q, q);
  for (Eigen::Index a = 0; a < q; ++a) {
    for (Eigen::Index b = 0; b < q; ++b) g(a, b) = trace_of_product(ops[a], ops[b]);
  }
  return g;
}

void check_family(const std::vector<ComplexMatrix>& ops) {
  if (ops.empty()) throw ValidationError("operator family: empty");
  const auto d = ops.front().rows();
  for (const auto& op : ops) {
    if (op.rows() != d || op.cols() != d) {
      throw ValidationError("operator family: all operators must be square of equal size");
    }
  }
  if (ops.size() > static_cast<std::size_t>(d * d)) {
    throw ValidationError("operator family: more than dim^2 operators cannot be independent");
  }
}

}  // namespace

ProbeCount required_probe_count(const Dims& dims) {
  if (dims.empty()) throw ValidationError("required_probe_count: no subsystems");
  ProbeCount c;
  std::size_t d = 1, strings = 1;
  for (std::size_t m : dims) {
    if (m < 2) throw ValidationError("required_probe_count: subsystem dimensions must be >= 2");
    d *= m;
    strings *= m * m;
  }
  c.required = d * d - 1;
  c.product_strings_minus_one = strings - 1;
  return c;
}

ComplexMatrix DyadDecomposition::reconstruct() const {
  ComplexMatrix out = ComplexMatrix::Zero(terms[0].projector.rows(), terms[0].projector.cols());
  for (const auto& t : terms) out += t.coefficient * t.projector;
  return out;
}

DyadDecomposition dyad_as_projectors(std::size_t m, std::size_t mp, std::size_t dim) {
  if (m >= dim || mp >= dim) {
    throw ValidationError("dyad_as_projectors: index out of range for dimension " +
                          std::to_string(dim));
  }
  if (m == mp) {
    throw ValidationError("dyad_as_projectors: diagonal dyad is already a projector");
  }
  if (m > mp) {
    DyadDecomposition d = dyad_as_projectors(mp, m, dim);
    for (auto& t : d.terms) t.coefficient = std::conj(t.coefficient);
    return d;
  }
  const cplx i{0.0, 1.0};
  const double s = std::sqrt(0.5);
  const ComplexVector em = basis_vector(dim, m);
  const ComplexVector emp = basis_vector(dim, mp);
  const ComplexVector plus = s * (em + emp);
  const ComplexVector twisted = s * (em - i * emp);
  const cplx diag = (i - 1.0) / 2.0;
  return DyadDecomposition{{{
      {1.0, ray_projector(plus)},
      {-i, ray_projector(twisted)},
      {diag, ray_projector(em)},
      {diag, ray_projector(emp)},
  }}};
}

ProbeBasis build_probe_basis(std::size_t dim) {
  if (dim < 2) throw ValidationError("build_probe_basis: dimension must be >= 2");
  ProbeBasis b;
  for (std::size_t m = 0; m < dim; ++m) b.projectors.push_back(ray_projector(basis_vector(dim, m)));
  for (std::size_t m = 0; m < dim; ++m) {
    for (std::size_t mp = m + 1; mp < dim; ++mp) {
      const auto d = dyad_as_projectors(m, mp, dim);
      b.projectors.push_back(d.terms[0].projector);
      b.projectors.push_back(d.terms[1].projector);
    }
  }
  b.gram = gram_of(b.projectors);
  b.gram_determinant = Eigen::MatrixXcd(b.gram).determinant();
  if (std::abs(b.gram_determinant) <= kGramDeterminantTol) {
    throw NumericalError("build_probe_basis: Gram determinant " +
                         std::to_string(std::abs(b.gram_determinant)) +
                         " indicates a dependent family");
  }
  return b;
}

std::vector<EventString> product_probe_set(const Dims& dims) {
  if (dims.empty()) throw ValidationError("product_probe_set: no subsystems");
  std::vector<std::vector<Projector>> local;
  for (std::size_t m : dims) {
    std::vector<Projector> ps;
    for (auto& p : build_probe_basis(m).projectors) ps.emplace_back(std::move(p));
    local.push_back(std::move(ps));
  }
  std::vector<EventString> out{EventString{}};
  for (const auto& ps : local) {
    std::vector<EventString> next;
    next.reserve(out.size() * ps.size());
    for (const auto& prefix : out) {
      for (const auto& p : ps) {
        EventString s = prefix;
        s.events.emplace_back(p);
        next.push_back(std::move(s));
      }
    }
    out = std::move(next);
  }
  return out;
}

std::vector<double> probe_probabilities(const DensityOperator& rho,
                                        const std::vector<EventString>& probes) {
  const auto cd = ClusterDecomposition::maximal(rho.num_subsystems());
  std::vector<double> out;
  out.reserve(probes.size());
  for (const auto& s : probes) out.push_back(coincidence_probability(rho, cd, s));
  return out;
}

DensityOperator ReconstructionResult::state() const {
  if (!valid) {
    throw ValidationError("reconstruction is not a valid density operator "
                          "(hermiticity " + std::to_string(hermiticity_error) +
                          ", trace " + std::to_string(trace_error) +
                          ", min eigenvalue " + std::to_string(min_eigenvalue) + ")");
  }
  ComplexMatrix m = (estimate + estimate.adjoint()) / 2.0;
  m /= m.trace();
  return DensityOperator(dims, std::move(m));
}

ReconstructionResult reconstruct(const std::vector<double>& probabilities,
                                 const std::vector<EventString>& probes,
                                 const Dims& dims, double noise_bound) {
  if (probabilities.size() != probes.size()) {
    throw ValidationError("reconstruct: " + std::to_string(probabilities.size()) +
                          " probabilities for " + std::to_string(probes.size()) + " probes");
  }
  const auto cd = ClusterDecomposition::maximal(dims.size());
  std::vector<ComplexMatrix> ops;
  ops.reserve(probes.size());
  for (const auto& s : probes) ops.push_back(event_operator(dims, cd, s));
  const auto d = static_cast<Eigen::Index>(total_dim(dims));
  if (static_cast<Eigen::Index>(ops.size()) != d * d) {
    throw ValidationError("reconstruct: need exactly dim^2 = " + std::to_string(d * d) +
                          " probes, got " + std::to_string(ops.size()));
  }

  const Eigen::MatrixXcd gram = gram_of(ops);
  ReconstructionResult r;
  r.dims = dims;
  // The Gram matrix of Hermitian operators is positive semidefinite, so its
  // eigenvalues give the exact 2-norm condition number.
  const Eigen::VectorXd spectrum =
      Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd>(gram, Eigen::EigenvaluesOnly).eigenvalues();
  r.gram_rcond = spectrum.maxCoeff() > 0.0 ? spectrum.minCoeff() / spectrum.maxCoeff() : 0.0;
  if (!(r.gram_rcond > kSingularRcond)) {
    throw NumericalError("reconstruct: probe Gram matrix is singular (rcond " +
                         std::to_string(r.gram_rcond) + ")");
  }
  Eigen::VectorXcd p(static_cast<Eigen::Index>(probabilities.size()));
  for (std::size_t q = 0; q < probabilities.size(); ++q) {
    p(static_cast<Eigen::Index>(q)) = probabilities[q];
  }
  const Eigen::VectorXcd chi = Eigen::PartialPivLU<Eigen::MatrixXcd>(gram).solve(p);

  r.estimate = ComplexMatrix::Zero(d, d);
  for (std::size_t q = 0; q < ops.size(); ++q) {
    r.estimate += chi(static_cast<Eigen::Index>(q)) * ops[q];
  }
  r.hermiticity_error = hermiticity_error(r.estimate);
  r.trace_error = std::abs(r.estimate.trace() - cplx{1.0, 0.0});
  const ComplexMatrix herm = (r.estimate + r.estimate.adjoint()) / 2.0;
  r.min_eigenvalue = hermitian_eig(herm).eigenvalues.minCoeff();
  r.valid = r.hermiticity_error <= noise_bound && r.trace_error <= noise_bound &&
            r.min_eigenvalue >= -noise_bound;
  return r;
}

ReconstructionResult reconstruct(const std::vector<double>& probabilities,
                                 const ProbeBasis& basis, double noise_bound) {
  std::vector<EventString> probes;
  for (const auto& p : basis.projectors) probes.push_back(EventString{{Projector(p)}});
  const Dims dims{static_cast<std::size_t>(basis.projectors.front().rows())};
  return reconstruct(probabilities, probes, dims, noise_bound);
}

std::vector<ComplexMatrix> hermitian_operator_basis(std::size_t dim) {
  const auto d = static_cast<Eigen::Index>(dim);
  const double s = std::sqrt(0.5);
  const cplx i{0.0, 1.0};
  std::vector<ComplexMatrix> out;
  for (Eigen::Index a = 0; a < d; ++a) {
    ComplexMatrix e = ComplexMatrix::Zero(d, d);
    e(a, a) = 1.0;
    out.push_back(std::move(e));
  }
  for (Eigen::Index a = 0; a < d; ++a) {
    for (Eigen::Index b = a + 1; b < d; ++b) {
      ComplexMatrix sym = ComplexMatrix::Zero(d, d);
      sym(a, b) = s;
      sym(b, a) = s;
      ComplexMatrix anti = ComplexMatrix::Zero(d, d);
      anti(a, b) = i * s;
      anti(b, a) = -i * s;
      out.push_back(std::move(sym));
      out.push_back(std::move(anti));
    }
  }
  return out;
}

LinearIndependence linear_independence_criteria(const std::vector<ComplexMatrix>& ops) {
  check_family(ops);
  const auto d = ops.front().rows();
  const auto q = static_cast<Eigen::Index>(ops.size());
  LinearIndependence li;

  // Null combinations: columns are the vectorized operators.
  Eigen::MatrixXcd vec(d * d, q);
  for (Eigen::Index k = 0; k < q; ++k) {
    vec.col(k) = Eigen::Map<const Eigen::VectorXcd>(ops[k].data(), d * d);
  }
  Eigen::JacobiSVD<Eigen::MatrixXcd> svd(vec);
  li.smallest_singular_value = svd.singularValues()(q - 1);
  li.null_combination_only = li.smallest_singular_value > kNullSingularValue;

  // Expansion in a trace-orthonormal Hermitian basis:
  // P_q = sum_r alpha_qr A_r with alpha_qr = tr(A_r P_q).
  const auto basis = hermitian_operator_basis(static_cast<std::size_t>(d));
  Eigen::MatrixXcd alpha(q, d * d);
  for (Eigen::Index k = 0; k < q; ++k) {
    for (Eigen::Index r = 0; r < d * d; ++r) alpha(k, r) = trace_of_product(basis[r], ops[k]);
  }
  // det(Gram) = det(alpha)^2, so the matching threshold on |det alpha| is
  // the square root of the Gram threshold.
  li.expansion_determinant = q == d * d ? alpha.determinant()
                                        : (alpha * alpha.transpose()).determinant();
  const double alpha_tol = q == d * d ? std::sqrt(kGramDeterminantTol) : kGramDeterminantTol;
  li.expansion_nonsingular = std::abs(li.expansion_determinant) > alpha_tol;

  const auto [ok, det] = gram_linear_independence_check(ops);
  li.gram_nonsingular = ok;
  li.gram_determinant = det;
  return li;
}

std::pair<bool, cplx> gram_linear_independence_check(const std::vector<ComplexMatrix>& ops) {
  check_family(ops);
  const cplx det = Eigen::MatrixXcd(gram_of(ops)).determinant();
  return {std::abs(det) > kGramDeterminantTol, det};
}

}  // namespace clusterq
