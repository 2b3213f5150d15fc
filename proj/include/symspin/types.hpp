#pragma once

#include <complex>
#include <stdexcept>
#include <string>

#include <Eigen/Dense>

namespace symspin {

using cplx = std::complex<double>;
using CMatrix = Eigen::MatrixXcd;
using CVector = Eigen::VectorXcd;
using RMatrix = Eigen::MatrixXd;
using RVector = Eigen::VectorXd;

// Precondition violated: bad particle count, split size, excitation index...
class DomainError : public std::domain_error {
 public:
  explicit DomainError(const std::string& what) : std::domain_error(what) {}
};

// Input data does not satisfy a state invariant (Hermiticity, trace, PSD,
// probability vector).
class DataError : public std::runtime_error {
 public:
  explicit DataError(const std::string& what) : std::runtime_error(what) {}
};

// A numerical procedure could not deliver a result (no bracketed minimum,
// vanishing mean spin, ...).
class NumericalError : public std::runtime_error {
 public:
  explicit NumericalError(const std::string& what) : std::runtime_error(what) {}
};

namespace tol {
// Hermiticity / trace / normalization checks on stored states.
inline constexpr double kState = 1e-10;
// Eigenvalues with |lambda| < kEigenZero * dim count as zero.
inline constexpr double kEigenZero = 1e-10;
}  // namespace tol

}  // namespace symspin
