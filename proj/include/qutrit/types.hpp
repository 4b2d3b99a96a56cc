#ifndef QUTRIT_TYPES_HPP
#define QUTRIT_TYPES_HPP

#include <complex>
#include <stdexcept>
#include <string>

#include <Eigen/Dense>

namespace qutrit {

template <typename Scalar>
using Complex = std::complex<Scalar>;

/// Dense 3x3 complex matrix: operators, density matrices, Hamiltonians.
template <typename Scalar>
using Matrix3c = Eigen::Matrix<std::complex<Scalar>, 3, 3>;

/// Amplitude triple (c1, c2, c3).
template <typename Scalar>
using Vector3c = Eigen::Matrix<std::complex<Scalar>, 3, 1>;

/// SU(3) Bloch coordinates n1..n8, stored 0-based.
template <typename Scalar>
using BlochVector8 = Eigen::Matrix<Scalar, 8, 1>;

template <typename Scalar>
using Matrix8 = Eigen::Matrix<Scalar, 8, 8>;

using Matrix3cd = Matrix3c<double>;
using Vector3cd = Vector3c<double>;
using BlochVector8d = BlochVector8<double>;
using Matrix8d = Matrix8<double>;

namespace tol {
/// Exact algebraic identities.
inline constexpr double exact = 1e-14;
/// Compounded arithmetic.
inline constexpr double compound = 1e-12;
/// Positivity of reconstructed density matrices.
inline constexpr double positivity = 1e-10;
/// Trajectory-level normalization.
inline constexpr double trajectory = 1e-9;
}  // namespace tol

/// Imaginary residue of a trace (or similar) exceeded tolerance.
class ConsistencyError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Bloch vector lies outside the physical region.
class InvalidBlochVector : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

class NumericError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class UnsupportedConfiguration : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Step size incompatible with the requested output grid.
class GridError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Entrywise comparison with an absolute tolerance.
template <typename Derived, typename OtherDerived>
bool approx_equal(const Eigen::MatrixBase<Derived>& a, const Eigen::MatrixBase<OtherDerived>& b,
                  double tolerance = tol::compound) {
  return (a - b).cwiseAbs().maxCoeff() <= tolerance;
}

template <typename Derived>
bool is_hermitian(const Eigen::MatrixBase<Derived>& a, double tolerance = tol::exact) {
  return (a - a.adjoint()).cwiseAbs().maxCoeff() <= tolerance;
}

}  // namespace qutrit

#endif  // QUTRIT_TYPES_HPP
