#ifndef QUTRIT_SU3_HPP
#define QUTRIT_SU3_HPP

// Gell-Mann basis of su(3), the T/V/U shift operators and the f/d structure
// constants. Everything is built from explicit matrix entries; the constant
// tables are derived from the matrices by trace formulas, never tabulated.

#include <algorithm>
#include <array>
#include <cmath>
#include <stdexcept>
#include <string>

#include "qutrit/types.hpp"

namespace qutrit {

/// k-th Gell-Mann matrix, k = 0..8 with lambda_0 the identity.
template <typename Scalar = double>
Matrix3c<Scalar> gellmann_matrix(int k) {
  using C = Complex<Scalar>;
  const C one(1, 0);
  const C i(0, 1);
  Matrix3c<Scalar> m = Matrix3c<Scalar>::Zero();
  switch (k) {
    case 0:
      m.setIdentity();
      break;
    case 1:
      m(0, 1) = one;
      m(1, 0) = one;
      break;
    case 2:
      m(0, 1) = -i;
      m(1, 0) = i;
      break;
    case 3:
      m(0, 0) = one;
      m(1, 1) = -one;
      break;
    case 4:
      m(0, 2) = one;
      m(2, 0) = one;
      break;
    case 5:
      m(0, 2) = -i;
      m(2, 0) = i;
      break;
    case 6:
      m(1, 2) = one;
      m(2, 1) = one;
      break;
    case 7:
      m(1, 2) = -i;
      m(2, 1) = i;
      break;
    case 8: {
      const Scalar s = Scalar(1) / std::sqrt(Scalar(3));
      m(0, 0) = C(s, 0);
      m(1, 1) = C(s, 0);
      m(2, 2) = C(-2 * s, 0);
      break;
    }
    default:
      throw std::domain_error("gellmann_matrix: index " + std::to_string(k) + " outside 0..8");
  }
  return m;
}

/// The nine matrices lambda_0..lambda_8.
template <typename Scalar = double>
struct GellMannBasis {
  std::array<Matrix3c<Scalar>, 9> lambda;

  static GellMannBasis build() {
    GellMannBasis b;
    for (int k = 0; k < 9; ++k) b.lambda[k] = gellmann_matrix<Scalar>(k);
    return b;
  }

  const Matrix3c<Scalar>& operator[](int k) const { return lambda.at(static_cast<std::size_t>(k)); }
};

/// Shared read-only standard basis.
template <typename Scalar = double>
const GellMannBasis<Scalar>& gellmann_basis() {
  static const GellMannBasis<Scalar> basis = GellMannBasis<Scalar>::build();
  return basis;
}

enum class ShiftFamily { T, V, U };
enum class ShiftKind { plus, minus, three };

/// SU(3) ladder operators. T couples |1>,|2>; V couples |1>,|3>; U couples |2>,|3>.
template <typename Scalar = double>
Matrix3c<Scalar> shift_operator(ShiftFamily family, ShiftKind kind) {
  // (upper, lower) level pair of each family, 0-based
  int hi = 0;
  int lo = 0;
  switch (family) {
    case ShiftFamily::T: hi = 0; lo = 1; break;
    case ShiftFamily::V: hi = 0; lo = 2; break;
    case ShiftFamily::U: hi = 1; lo = 2; break;
    default: throw std::invalid_argument("shift_operator: unknown family");
  }
  Matrix3c<Scalar> m = Matrix3c<Scalar>::Zero();
  switch (kind) {
    case ShiftKind::plus:
      m(hi, lo) = 1;
      break;
    case ShiftKind::minus:
      m(lo, hi) = 1;
      break;
    case ShiftKind::three:
      m(hi, hi) = 1;
      m(lo, lo) = -1;
      break;
    default:
      throw std::invalid_argument("shift_operator: unknown kind");
  }
  return m;
}

template <typename DerivedA, typename DerivedB>
auto commutator(const Eigen::MatrixBase<DerivedA>& a, const Eigen::MatrixBase<DerivedB>& b) {
  using Plain = typename DerivedA::PlainObject;
  Plain r = a * b - b * a;
  return r;
}

template <typename DerivedA, typename DerivedB>
auto anticommutator(const Eigen::MatrixBase<DerivedA>& a, const Eigen::MatrixBase<DerivedB>& b) {
  using Plain = typename DerivedA::PlainObject;
  Plain r = a * b + b * a;
  return r;
}

/// f_lmn and d_lmn over l,m,n in 1..8.
template <typename Scalar = double>
class StructureConstants {
 public:
  using Table = std::array<Scalar, 512>;

  StructureConstants() = default;
  StructureConstants(const Table& f, const Table& d, Scalar residue) : f_(f), d_(d), residue_(residue) {}

  Scalar f(int l, int m, int n) const { return f_[index(l, m, n)]; }
  Scalar d(int l, int m, int n) const { return d_[index(l, m, n)]; }

  /// Largest imaginary residue seen while taking the traces.
  Scalar residue() const { return residue_; }

  static std::size_t index(int l, int m, int n) {
    if (l < 1 || l > 8 || m < 1 || m > 8 || n < 1 || n > 8)
      throw std::domain_error("structure constant index outside 1..8");
    return static_cast<std::size_t>(((l - 1) * 8 + (m - 1)) * 8 + (n - 1));
  }

 private:
  Table f_{};
  Table d_{};
  Scalar residue_ = 0;
};

/// f_lmn = Tr([l,m] n) / 4i and d_lmn = Tr({l,m} n) / 4.
template <typename Scalar>
StructureConstants<Scalar> derive_structure_constants(const GellMannBasis<Scalar>& basis,
                                                      double tolerance = tol::exact) {
  using C = Complex<Scalar>;
  using SC = StructureConstants<Scalar>;
  typename SC::Table f{};
  typename SC::Table d{};
  Scalar residue = 0;
  const C four_i(0, 4);
  for (int l = 1; l <= 8; ++l) {
    for (int m = 1; m <= 8; ++m) {
      const Matrix3c<Scalar> comm = commutator(basis[l], basis[m]);
      const Matrix3c<Scalar> anti = anticommutator(basis[l], basis[m]);
      for (int n = 1; n <= 8; ++n) {
        const C fz = (comm * basis[n]).trace() / four_i;
        const C dz = (anti * basis[n]).trace() / Scalar(4);
        const Scalar res = std::max(std::abs(fz.imag()), std::abs(dz.imag()));
        if (res > tolerance)
          throw ConsistencyError("structure constant trace has imaginary residue " +
                                 std::to_string(res));
        residue = std::max(residue, res);
        const std::size_t idx = SC::index(l, m, n);
        f[idx] = fz.real();
        d[idx] = dz.real();
      }
    }
  }
  return SC(f, d, residue);
}

/// Tables for the standard basis, derived once on first use.
template <typename Scalar = double>
const StructureConstants<Scalar>& structure_constants() {
  static const StructureConstants<Scalar> table = derive_structure_constants(gellmann_basis<Scalar>());
  return table;
}

/// Coefficients (h0, h1..h8) of H = h0 lambda_0 + sum_j hj lambda_j for Hermitian H.
template <typename Scalar>
Eigen::Matrix<Scalar, 9, 1> gellmann_expansion(const Matrix3c<Scalar>& h) {
  const auto& basis = gellmann_basis<Scalar>();
  Eigen::Matrix<Scalar, 9, 1> coeff;
  coeff(0) = h.trace().real() / Scalar(3);
  for (int j = 1; j <= 8; ++j) coeff(j) = (basis[j] * h).trace().real() / Scalar(2);
  return coeff;
}

}  // namespace qutrit

#endif  // QUTRIT_SU3_HPP
