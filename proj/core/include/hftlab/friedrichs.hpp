#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include <Eigen/Dense>

namespace hftlab {

/// Symmetric tridiagonal matrix of -hbar^2 d^2/ds^2 on (0, L) with Dirichlet
/// conditions at both ends, interior nodes s_j = j h, h = L / (N + 1).
///
/// The wall at s = 0 is the boundary condition inherited from D(Z); the wall at
/// s = L is an artifact of truncating the half line.
struct TridiagonalOperator {
  Eigen::VectorXd diagonal;
  Eigen::VectorXd off_diagonal;
  double mesh = 0.0;
  double length = 0.0;
  double hbar = 1.0;

  Eigen::Index size() const { return diagonal.size(); }
  Eigen::VectorXd nodes() const;
  Eigen::VectorXd apply(const Eigen::VectorXd& v) const;
  Eigen::MatrixXd dense() const;
  double rayleigh_quotient(const Eigen::VectorXd& v) const;
};

/// Requires N >= 3 and L > 0.
TridiagonalOperator build_friedrichs_Zsq(double length, int nodes, double hbar = 1.0);

/// Smallest Rayleigh quotient over `samples` random vectors (normal entries).
double min_rayleigh_quotient(const TridiagonalOperator& op, int samples, std::uint64_t seed);

struct SpectralDecomposition {
  Eigen::VectorXd eigenvalues;   // ascending
  Eigen::MatrixXd eigenvectors;  // orthonormal columns
  /// ||A V - V Lambda||_F / ||A||_F
  double residual = 0.0;
  /// ||V^T V - I||_max
  double orthonormality_defect = 0.0;
};

SpectralDecomposition decompose(const TridiagonalOperator& op);
SpectralDecomposition decompose(const Eigen::MatrixXd& symmetric);

/// Positive square root V sqrt(Lambda) V^T of a positive semidefinite operator.
struct SquareRootOperator {
  SpectralDecomposition spectrum;  // of the operator being rooted
  Eigen::VectorXd root_eigenvalues;
  Eigen::MatrixXd matrix;

  Eigen::VectorXd apply(const Eigen::VectorXd& v) const { return matrix * v; }
  Eigen::VectorXcd apply(const Eigen::VectorXcd& v) const { return matrix.cast<std::complex<double>>() * v; }
};

/// Eigenvalues below -tolerance * ||A||_2 raise PositivityError; smaller negative
/// values are rounding noise and are clamped to zero.
SquareRootOperator positive_square_root(const Eigen::MatrixXd& symmetric, double tolerance = 1e-10);
SquareRootOperator sqrt_friedrichs(const TridiagonalOperator& op, double tolerance = 1e-10);

/// ||R^2 - A||_F / ||A||_F
double root_consistency(const SquareRootOperator& root, const Eigen::MatrixXd& original);

struct WitnessEntry {
  std::string function;
  double value = 0.0;  // min over sign of ||Z_sqrt f -/+ Z f|| / ||f||
};

struct NoncommutationWitness {
  double value = 0.0;  // max over entries
  std::vector<WitnessEntry> entries;
  /// First Dirichlet eigenvector v: ||Z_sqrt v - sqrt(lambda_1) v|| and
  /// ||Z v - (hbar pi / L) v|| (both relative).
  double root_eigen_residual = 0.0;
  double z_eigen_residual = 0.0;
  double first_root_eigenvalue = 0.0;
};

/// Compares the square root of the Friedrichs extension with Z = i hbar d/ds on
/// the suite members that lie in D(Z) (s e^-s and s^2 e^-s/2).
NoncommutationWitness noncommutation_witness(double length, int nodes, double hbar = 1.0);

/// Same comparison for a single function sampled on the interior mesh.
double noncommutation_value(const SquareRootOperator& root, const TridiagonalOperator& op,
                            const Eigen::VectorXcd& f);

}  // namespace hftlab
