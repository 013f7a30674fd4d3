#include "hftlab/friedrichs.hpp"

#include <cmath>
#include <numbers>
#include <random>

#include <Eigen/Eigenvalues>

#include "hftlab/errors.hpp"
#include "hftlab/profiles.hpp"

namespace hftlab {

Eigen::VectorXd TridiagonalOperator::nodes() const {
  Eigen::VectorXd s(size());
  for (Eigen::Index j = 0; j < size(); ++j) s(j) = mesh * static_cast<double>(j + 1);
  return s;
}

Eigen::VectorXd TridiagonalOperator::apply(const Eigen::VectorXd& v) const {
  const Eigen::Index n = size();
  Eigen::VectorXd out = diagonal.cwiseProduct(v);
  for (Eigen::Index j = 0; j + 1 < n; ++j) {
    out(j) += off_diagonal(j) * v(j + 1);
    out(j + 1) += off_diagonal(j) * v(j);
  }
  return out;
}

Eigen::MatrixXd TridiagonalOperator::dense() const {
  const Eigen::Index n = size();
  Eigen::MatrixXd A = Eigen::MatrixXd::Zero(n, n);
  A.diagonal() = diagonal;
  for (Eigen::Index j = 0; j + 1 < n; ++j) A(j, j + 1) = A(j + 1, j) = off_diagonal(j);
  return A;
}

double TridiagonalOperator::rayleigh_quotient(const Eigen::VectorXd& v) const {
  return v.dot(apply(v)) / v.squaredNorm();
}

TridiagonalOperator build_friedrichs_Zsq(double length, int nodes, double hbar) {
  if (nodes < 3) throw InputError("build_friedrichs_Zsq: need at least 3 interior nodes");
  if (!(length > 0.0) || !std::isfinite(length)) throw InputError("build_friedrichs_Zsq: L must be positive");
  if (!(hbar > 0.0)) throw InputError("build_friedrichs_Zsq: hbar must be positive");
  TridiagonalOperator op;
  op.length = length;
  op.hbar = hbar;
  op.mesh = length / (nodes + 1.0);
  const double k = hbar * hbar / (op.mesh * op.mesh);
  op.diagonal = Eigen::VectorXd::Constant(nodes, 2.0 * k);
  op.off_diagonal = Eigen::VectorXd::Constant(nodes - 1, -k);
  return op;
}

double min_rayleigh_quotient(const TridiagonalOperator& op, int samples, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> normal;
  double best = std::numeric_limits<double>::infinity();
  Eigen::VectorXd v(op.size());
  for (int k = 0; k < samples; ++k) {
    for (Eigen::Index j = 0; j < v.size(); ++j) v(j) = normal(rng);
    best = std::min(best, op.rayleigh_quotient(v));
  }
  return best;
}

namespace {

SpectralDecomposition finish(const Eigen::MatrixXd& A, const Eigen::VectorXd& values,
                             const Eigen::MatrixXd& vectors) {
  SpectralDecomposition d;
  d.eigenvalues = values;
  d.eigenvectors = vectors;
  const double scale = std::max(A.norm(), std::numeric_limits<double>::min());
  d.residual = (A * vectors - vectors * values.asDiagonal()).norm() / scale;
  const auto n = vectors.cols();
  d.orthonormality_defect =
      (vectors.transpose() * vectors - Eigen::MatrixXd::Identity(n, n)).cwiseAbs().maxCoeff();
  return d;
}

}  // namespace

SpectralDecomposition decompose(const TridiagonalOperator& op) {
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> eig;
  eig.computeFromTridiagonal(op.diagonal, op.off_diagonal, Eigen::ComputeEigenvectors);
  if (eig.info() != Eigen::Success) throw Error("decompose: tridiagonal eigensolver did not converge");
  return finish(op.dense(), eig.eigenvalues(), eig.eigenvectors());
}

SpectralDecomposition decompose(const Eigen::MatrixXd& symmetric) {
  if (symmetric.rows() != symmetric.cols()) throw InputError("decompose: matrix must be square");
  if (!symmetric.isApprox(symmetric.transpose(), 1e-12))
    throw InputError("decompose: matrix must be symmetric");
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> eig(symmetric);
  if (eig.info() != Eigen::Success) throw Error("decompose: eigensolver did not converge");
  return finish(symmetric, eig.eigenvalues(), eig.eigenvectors());
}

namespace {

SquareRootOperator root_from(SpectralDecomposition spec, double tolerance) {
  const double norm2 = spec.eigenvalues.cwiseAbs().maxCoeff();
  SquareRootOperator r;
  r.root_eigenvalues.resize(spec.eigenvalues.size());
  for (Eigen::Index k = 0; k < spec.eigenvalues.size(); ++k) {
    const double lam = spec.eigenvalues(k);
    if (lam < -tolerance * norm2)
      throw PositivityError("square root: negative eigenvalue " + std::to_string(lam), lam);
    r.root_eigenvalues(k) = std::sqrt(std::max(lam, 0.0));
  }
  const auto& V = spec.eigenvectors;
  r.matrix = V * r.root_eigenvalues.asDiagonal() * V.transpose();
  r.matrix = 0.5 * (r.matrix + r.matrix.transpose()).eval();
  r.spectrum = std::move(spec);
  return r;
}

}  // namespace

SquareRootOperator positive_square_root(const Eigen::MatrixXd& symmetric, double tolerance) {
  return root_from(decompose(symmetric), tolerance);
}

SquareRootOperator sqrt_friedrichs(const TridiagonalOperator& op, double tolerance) {
  return root_from(decompose(op), tolerance);
}

double root_consistency(const SquareRootOperator& root, const Eigen::MatrixXd& original) {
  return (root.matrix * root.matrix - original).norm() / original.norm();
}

double noncommutation_value(const SquareRootOperator& root, const TridiagonalOperator& op,
                            const Eigen::VectorXcd& f) {
  const double fn = f.norm();
  if (fn == 0.0) return 0.0;
  const Eigen::Index n = op.size();
  const std::complex<double> ih(0.0, op.hbar);
  // Z f = i hbar f' with central differences and the Dirichlet zeros as ghosts.
  Eigen::VectorXcd zf(n);
  for (Eigen::Index j = 0; j < n; ++j) {
    const auto left = j > 0 ? f(j - 1) : std::complex<double>{};
    const auto right = j + 1 < n ? f(j + 1) : std::complex<double>{};
    zf(j) = ih * (right - left) / (2.0 * op.mesh);
  }
  const Eigen::VectorXcd rf = root.apply(f);
  return std::min((rf - zf).norm(), (rf + zf).norm()) / fn;
}

NoncommutationWitness noncommutation_witness(double length, int nodes, double hbar) {
  const auto op = build_friedrichs_Zsq(length, nodes, hbar);
  const auto root = sqrt_friedrichs(op);
  const Eigen::VectorXd s = op.nodes();

  NoncommutationWitness w;
  for (const char* name : {"sexp", "s2exp"}) {
    const auto& p = profile_by_name(name);
    Eigen::VectorXcd f(op.size());
    for (Eigen::Index j = 0; j < f.size(); ++j) f(j) = p.f(s(j));
    const double value = noncommutation_value(root, op, f);
    w.entries.push_back({p.name, value});
    w.value = std::max(w.value, value);
  }

  const Eigen::VectorXcd v = root.spectrum.eigenvectors.col(0).cast<std::complex<double>>();
  const double mu = root.root_eigenvalues(0);
  w.first_root_eigenvalue = mu;
  w.root_eigen_residual = (root.apply(v) - mu * v).norm() / v.norm();
  Eigen::VectorXcd zv(op.size());
  const std::complex<double> ih(0.0, hbar);
  for (Eigen::Index j = 0; j < zv.size(); ++j) {
    const auto left = j > 0 ? v(j - 1) : std::complex<double>{};
    const auto right = j + 1 < zv.size() ? v(j + 1) : std::complex<double>{};
    zv(j) = ih * (right - left) / (2.0 * op.mesh);
  }
  w.z_eigen_residual = (zv - (hbar * std::numbers::pi / length) * v).norm() / v.norm();
  return w;
}

}  // namespace hftlab
