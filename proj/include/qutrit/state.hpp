#ifndef QUTRIT_STATE_HPP
#define QUTRIT_STATE_HPP

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>
#include <string_view>

#include "qutrit/su3.hpp"
#include "qutrit/types.hpp"

namespace qutrit {

/// Geometric parametrization (theta1, theta2, phi1, phi2) of a pure qutrit.
template <typename Scalar = double>
class AngleParams {
 public:
  AngleParams(Scalar theta1, Scalar theta2, Scalar phi1, Scalar phi2)
      : theta1_(theta1), theta2_(theta2), phi1_(phi1), phi2_(phi2) {
    const Scalar pi = std::numbers::pi_v<Scalar>;
    auto polar_ok = [pi](Scalar t) { return t >= 0 && t <= pi; };
    auto azimuth_ok = [pi](Scalar p) { return p >= 0 && p < 2 * pi; };
    if (!polar_ok(theta1) || !polar_ok(theta2))
      throw std::domain_error("AngleParams: theta must lie in [0, pi]");
    if (!azimuth_ok(phi1) || !azimuth_ok(phi2))
      throw std::domain_error("AngleParams: phi must lie in [0, 2pi)");
  }

  Scalar theta1() const { return theta1_; }
  Scalar theta2() const { return theta2_; }
  Scalar phi1() const { return phi1_; }
  Scalar phi2() const { return phi2_; }

 private:
  Scalar theta1_;
  Scalar theta2_;
  Scalar phi1_;
  Scalar phi2_;
};

/// Normalized amplitudes c1|1> + c2|2> + c3|3>.
template <typename Scalar = double>
class PureState {
 public:
  explicit PureState(const Vector3c<Scalar>& c, double tolerance = tol::compound) : c_(c) {
    const Scalar defect = std::abs(c.squaredNorm() - Scalar(1));
    if (!(defect <= tolerance))
      throw std::invalid_argument("PureState: amplitudes not normalized (|sum|c|^2 - 1| = " +
                                  std::to_string(defect) + ")");
  }

  static PureState normalized(const Vector3c<Scalar>& c) {
    const Scalar nrm = c.norm();
    if (!(nrm > 0)) throw std::invalid_argument("PureState: zero vector cannot be normalized");
    return PureState(c / nrm);
  }

  const Vector3c<Scalar>& amplitudes() const { return c_; }
  Complex<Scalar> operator[](int i) const { return c_(i); }

 private:
  Vector3c<Scalar> c_;
};

/// Validated density matrix: Hermitian, unit trace, positive semidefinite.
template <typename Scalar = double>
class DensityMatrix {
 public:
  explicit DensityMatrix(const Matrix3c<Scalar>& rho) : rho_(rho) {
    if (!is_hermitian(rho, tol::exact)) throw std::invalid_argument("DensityMatrix: not Hermitian");
    if (std::abs(rho.trace() - Complex<Scalar>(1)) > tol::compound)
      throw std::invalid_argument("DensityMatrix: trace differs from 1");
    if (min_eigenvalue() < -tol::positivity)
      throw std::invalid_argument("DensityMatrix: negative eigenvalue");
  }

  const Matrix3c<Scalar>& matrix() const { return rho_; }

  Scalar min_eigenvalue() const {
    Eigen::SelfAdjointEigenSolver<Matrix3c<Scalar>> es(rho_, Eigen::EigenvaluesOnly);
    return es.eigenvalues().minCoeff();
  }

 private:
  Matrix3c<Scalar> rho_;
};

/// c1 = cos(t1/2), c2 = e^{i p1} sin(t1/2) sin(t2/2), c3 = e^{i p2} sin(t1/2) cos(t2/2).
template <typename Scalar>
PureState<Scalar> state_from_angles(const AngleParams<Scalar>& a) {
  const Scalar s1 = std::sin(a.theta1() / 2);
  Vector3c<Scalar> c;
  c(0) = std::cos(a.theta1() / 2);
  c(1) = std::polar(s1 * std::sin(a.theta2() / 2), a.phi1());
  c(2) = std::polar(s1 * std::cos(a.theta2() / 2), a.phi2());
  return PureState<Scalar>(c);
}

enum class CardinalLabel { one, two, three, superpose12, superpose23, superpose13, superposeAll };

inline std::string_view to_string(CardinalLabel label) {
  switch (label) {
    case CardinalLabel::one: return "one";
    case CardinalLabel::two: return "two";
    case CardinalLabel::three: return "three";
    case CardinalLabel::superpose12: return "superpose12";
    case CardinalLabel::superpose23: return "superpose23";
    case CardinalLabel::superpose13: return "superpose13";
    case CardinalLabel::superposeAll: return "superposeAll";
  }
  return "?";
}

inline CardinalLabel parse_cardinal_label(std::string_view text) {
  for (auto l : {CardinalLabel::one, CardinalLabel::two, CardinalLabel::three, CardinalLabel::superpose12,
                 CardinalLabel::superpose23, CardinalLabel::superpose13, CardinalLabel::superposeAll})
    if (to_string(l) == text) return l;
  throw std::invalid_argument("unknown cardinal label '" + std::string(text) + "'");
}

template <typename Scalar = double>
struct CardinalState {
  AngleParams<Scalar> angles;
  PureState<Scalar> state;
};

/// Basis states and their equal-weight superpositions at the special angle tuples.
///
/// States are always evaluated from the angles through state_from_angles, so
/// the phases that appear are e^{i phi1} on |2> and e^{i phi2} on |3>.
/// superpose13 uses (pi/2, 0), the tuple that actually superposes |1> and |3>.
template <typename Scalar = double>
CardinalState<Scalar> cardinal_state(CardinalLabel label, Scalar phi1 = 0, Scalar phi2 = 0) {
  const Scalar pi = std::numbers::pi_v<Scalar>;
  Scalar t1 = 0;
  Scalar t2 = 0;
  switch (label) {
    case CardinalLabel::one: t1 = 0; t2 = 0; break;
    case CardinalLabel::two: t1 = pi; t2 = pi; break;
    case CardinalLabel::three: t1 = pi; t2 = 0; break;
    case CardinalLabel::superpose12: t1 = pi / 2; t2 = pi; break;
    case CardinalLabel::superpose23: t1 = pi; t2 = pi / 2; break;
    case CardinalLabel::superpose13: t1 = pi / 2; t2 = 0; break;
    case CardinalLabel::superposeAll: t1 = pi / 2; t2 = pi / 3; break;
  }
  AngleParams<Scalar> a(t1, t2, phi1, phi2);
  return {a, state_from_angles(a)};
}

/// rho = |psi><psi|, i.e. rho_ij = c_i conj(c_j).
template <typename Scalar>
DensityMatrix<Scalar> density_from_state(const PureState<Scalar>& s) {
  const Vector3c<Scalar>& c = s.amplitudes();
  return DensityMatrix<Scalar>(c * c.adjoint());
}

/// n_k = Tr[lambda_k rho], k = 1..8.
template <typename Scalar>
BlochVector8<Scalar> bloch_from_density(const DensityMatrix<Scalar>& rho, double tolerance = tol::compound) {
  const auto& basis = gellmann_basis<Scalar>();
  BlochVector8<Scalar> n;
  for (int k = 1; k <= 8; ++k) {
    const Complex<Scalar> tr = (basis[k] * rho.matrix()).trace();
    if (std::abs(tr.imag()) > tolerance)
      throw ConsistencyError("bloch_from_density: Tr[lambda_" + std::to_string(k) +
                             " rho] has imaginary residue " + std::to_string(tr.imag()));
    n(k - 1) = tr.real();
  }
  return n;
}

/// Same trace map written out on amplitudes: n_k = <c|lambda_k|c>.
template <typename Derived>
BlochVector8<typename Derived::Scalar::value_type> bloch_from_amplitudes(const Eigen::MatrixBase<Derived>& c) {
  using Scalar = typename Derived::Scalar::value_type;
  const Complex<Scalar> z12 = std::conj(c(0)) * c(1);
  const Complex<Scalar> z13 = std::conj(c(0)) * c(2);
  const Complex<Scalar> z23 = std::conj(c(1)) * c(2);
  const Scalar p1 = std::norm(c(0));
  const Scalar p2 = std::norm(c(1));
  const Scalar p3 = std::norm(c(2));
  BlochVector8<Scalar> n;
  n << 2 * z12.real(), 2 * z12.imag(), p1 - p2, 2 * z13.real(), 2 * z13.imag(), 2 * z23.real(),
      2 * z23.imag(), (p1 + p2 - 2 * p3) / std::sqrt(Scalar(3));
  return n;
}

/// Closed-form Bloch vector of the angle-parametrized state.
template <typename Scalar>
BlochVector8<Scalar> bloch_geometric(const AngleParams<Scalar>& a) {
  const Scalar st1 = std::sin(a.theta1());
  const Scalar ct1 = std::cos(a.theta1());
  const Scalar ct2 = std::cos(a.theta2());
  const Scalar st2 = std::sin(a.theta2());
  const Scalar sh1 = std::sin(a.theta1() / 2);
  const Scalar ch1 = std::cos(a.theta1() / 2);
  const Scalar sh2 = std::sin(a.theta2() / 2);
  const Scalar ch2 = std::cos(a.theta2() / 2);
  const Scalar dphi = a.phi1() - a.phi2();
  BlochVector8<Scalar> n;
  n(0) = st1 * sh2 * std::cos(a.phi1());
  n(1) = st1 * sh2 * std::sin(a.phi1());
  n(2) = ch1 * ch1 - sh1 * sh1 * sh2 * sh2;
  n(3) = st1 * ch2 * std::cos(a.phi2());
  n(4) = st1 * ch2 * std::sin(a.phi2());
  n(5) = sh1 * sh1 * st2 * std::cos(dphi);
  n(6) = -sh1 * sh1 * st2 * std::sin(dphi);
  n(7) = ((1 - 3 * ct2) + 3 * ct1 * (1 + ct2)) / (4 * std::sqrt(Scalar(3)));
  return n;
}

/// rho = (1/3)[lambda_0 + (3/2) n.lambda]; rejects vectors outside the physical region.
template <typename Scalar>
DensityMatrix<Scalar> density_from_bloch(const BlochVector8<Scalar>& n) {
  const auto& basis = gellmann_basis<Scalar>();
  Matrix3c<Scalar> rho = basis[0];
  for (int k = 1; k <= 8; ++k) rho += (Scalar(1.5) * n(k - 1)) * basis[k];
  rho /= Scalar(3);
  Eigen::SelfAdjointEigenSolver<Matrix3c<Scalar>> es(rho, Eigen::EigenvaluesOnly);
  const Scalar lowest = es.eigenvalues().minCoeff();
  if (lowest < -tol::positivity)
    throw InvalidBlochVector("density_from_bloch: reconstructed matrix has eigenvalue " +
                             std::to_string(lowest));
  return DensityMatrix<Scalar>(rho);
}

/// Tr[rho^2].
template <typename Scalar>
Scalar purity(const DensityMatrix<Scalar>& rho) {
  return rho.matrix().cwiseAbs2().sum();
}

/// (1/3)(1 + (3/2)|n|^2).
template <typename Scalar>
Scalar purity_from_bloch(const BlochVector8<Scalar>& n) {
  return (1 + Scalar(1.5) * n.squaredNorm()) / 3;
}

}  // namespace qutrit

#endif  // QUTRIT_STATE_HPP
