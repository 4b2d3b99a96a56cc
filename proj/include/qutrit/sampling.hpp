#ifndef QUTRIT_SAMPLING_HPP
#define QUTRIT_SAMPLING_HPP

#include <cstdint>
#include <numbers>
#include <random>
#include <vector>

#include "qutrit/state.hpp"

namespace qutrit {

/// Uniform angles: theta in [0, pi], phi in [0, 2pi).
inline std::vector<AngleParams<double>> sample_angles(std::size_t count, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> polar(0.0, std::numbers::pi);
  std::uniform_real_distribution<double> azimuth(0.0, 2 * std::numbers::pi);
  std::vector<AngleParams<double>> out;
  out.reserve(count);
  for (std::size_t i = 0; i < count; ++i) {
    const double t1 = polar(rng);
    const double t2 = polar(rng);
    const double p1 = azimuth(rng);
    const double p2 = azimuth(rng);
    out.emplace_back(t1, t2, p1, p2);
  }
  return out;
}

/// Haar-random pure state from normalized complex Gaussians.
inline PureState<double> sample_pure_state(std::mt19937_64& rng) {
  std::normal_distribution<double> gauss;
  Vector3cd c;
  for (int i = 0; i < 3; ++i) c(i) = {gauss(rng), gauss(rng)};
  return PureState<double>::normalized(c);
}

/// Convex mixture of 1..4 random pure states with flat Dirichlet weights.
inline DensityMatrix<double> sample_mixture(std::mt19937_64& rng) {
  std::uniform_int_distribution<int> terms(1, 4);
  std::exponential_distribution<double> weight;
  const int k = terms(rng);
  std::vector<double> w(static_cast<std::size_t>(k));
  double total = 0;
  for (auto& x : w) total += (x = weight(rng));
  Matrix3cd rho = Matrix3cd::Zero();
  for (double x : w) rho += (x / total) * density_from_state(sample_pure_state(rng)).matrix();
  rho = (rho + rho.adjoint()).eval() / 2.0;
  return DensityMatrix<double>(rho);
}

inline std::vector<DensityMatrix<double>> sample_mixtures(std::size_t count, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::vector<DensityMatrix<double>> out;
  out.reserve(count);
  for (std::size_t i = 0; i < count; ++i) out.push_back(sample_mixture(rng));
  return out;
}

}  // namespace qutrit

#endif  // QUTRIT_SAMPLING_HPP
