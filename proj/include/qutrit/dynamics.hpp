#ifndef QUTRIT_DYNAMICS_HPP
#define QUTRIT_DYNAMICS_HPP

// Rotating-frame dynamics of driven three-level systems (Lambda, V, Xi) under
// the equal-detuning condition, and the SU(3) Bloch trajectories they induce.
//
// Conventions:
//   * hbar = 1, H in angular-frequency units.
//   * Amplitudes evolve as c(t) = exp(-iHt) c(0), rho = |psi><psi| obeys
//     drho/dt = -i[H, rho], so the Bloch vector obeys dn/dt = M n with
//     M_kl = 2 sum_j h_j f_{jlk} and H = h_0 lambda_0 + sum_j h_j lambda_j.
//   * Off-diagonal couplings carry a factor g: 1/2 (half, the default) or 1.

#include <array>
#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "qutrit/state.hpp"
#include "qutrit/su3.hpp"
#include "qutrit/types.hpp"

namespace qutrit {

enum class Configuration { Lambda, Vee, Xi };
enum class CouplingConvention { half, full };

inline std::string_view to_string(Configuration c) {
  switch (c) {
    case Configuration::Lambda: return "lambda";
    case Configuration::Vee: return "vee";
    case Configuration::Xi: return "xi";
  }
  return "?";
}

inline std::string_view to_string(CouplingConvention c) {
  return c == CouplingConvention::half ? "half" : "full";
}

template <typename Scalar = double>
PureState<Scalar> equal_population_state() {
  const Scalar a = Scalar(1) / std::sqrt(Scalar(3));
  return PureState<Scalar>(Vector3c<Scalar>(a, a, a));
}

/// Model inputs. kappa_a is k13 for Lambda and V, k12 for Xi; kappa_b is k23
/// for Lambda, k12 for V, k23 for Xi. delta is the common detuning.
template <typename Scalar = double>
struct SimParams {
  Configuration config = Configuration::Lambda;
  Scalar kappa_a = 0;
  Scalar kappa_b = 0;
  Scalar delta = 0;
  PureState<Scalar> c0 = equal_population_state<Scalar>();
  CouplingConvention convention = CouplingConvention::half;

  void validate() const {
    if (!std::isfinite(kappa_a) || !std::isfinite(kappa_b) || kappa_a < 0 || kappa_b < 0)
      throw std::invalid_argument("SimParams: couplings must be finite and non-negative");
    if (!std::isfinite(delta)) throw std::invalid_argument("SimParams: detuning must be finite");
  }

  Scalar coupling_factor() const { return convention == CouplingConvention::half ? Scalar(0.5) : Scalar(1); }
};

/// Real-symmetric rotating-frame Hamiltonian at equal detuning.
template <typename Scalar>
Matrix3c<Scalar> rotating_hamiltonian(const SimParams<Scalar>& p) {
  p.validate();
  const Scalar g = p.coupling_factor();
  const Scalar d = p.delta;
  Eigen::Matrix<Scalar, 3, 3> h = Eigen::Matrix<Scalar, 3, 3>::Zero();
  switch (p.config) {
    case Configuration::Lambda:
      h.diagonal() << 2 * d / 3, -d / 3, -d / 3;
      h(0, 1) = h(1, 0) = g * p.kappa_b;  // k23
      h(0, 2) = h(2, 0) = g * p.kappa_a;  // k13
      break;
    case Configuration::Vee:
      h.diagonal() << d / 3, d / 3, -2 * d / 3;
      h(0, 2) = h(2, 0) = g * p.kappa_a;  // k13
      h(1, 2) = h(2, 1) = g * p.kappa_b;  // k12
      break;
    case Configuration::Xi:
      h.diagonal() << d, 0, -d;
      h(0, 1) = h(1, 0) = g * p.kappa_b;  // k23
      h(1, 2) = h(2, 1) = g * p.kappa_a;  // k12
      break;
  }
  return h.template cast<Complex<Scalar>>();
}

/// c(t) = exp(-iHt) c0 through the eigendecomposition of the real-symmetric H.
template <typename Scalar>
std::vector<Vector3c<Scalar>> propagate_exact(const SimParams<Scalar>& p, const std::vector<Scalar>& times) {
  using Real3 = Eigen::Matrix<Scalar, 3, 3>;
  const Real3 h = rotating_hamiltonian(p).real();
  Eigen::SelfAdjointEigenSolver<Real3> es(h);
  if (es.info() != Eigen::Success) throw NumericError("propagate_exact: eigendecomposition failed");
  const Matrix3c<Scalar> u = es.eigenvectors().template cast<Complex<Scalar>>();
  const Vector3c<Scalar> coeff = u.adjoint() * p.c0.amplitudes();
  const auto& w = es.eigenvalues();

  std::vector<Vector3c<Scalar>> out;
  out.reserve(times.size());
  Scalar previous = -std::numeric_limits<Scalar>::infinity();
  for (Scalar t : times) {
    if (!(t >= previous)) throw GridError("propagate_exact: time grid must be ascending");
    previous = t;
    Vector3c<Scalar> phased;
    for (int j = 0; j < 3; ++j) phased(j) = std::polar(Scalar(1), -w(j) * t) * coeff(j);
    out.push_back(u * phased);
  }
  return out;
}

/// Closed-form Lambda amplitudes at equal detuning (half convention only).
///
/// Obtained from the bright/dark decomposition: the dark combination
/// k13 c2 - k23 c3 only picks up the phase e^{i delta t/3}, the bright pair
/// performs a detuned Rabi oscillation at Omega = sqrt(delta^2 + k13^2 + k23^2).
template <typename Scalar>
Vector3c<Scalar> lambda_closed_form(const SimParams<Scalar>& p, Scalar t) {
  using C = Complex<Scalar>;
  if (p.config != Configuration::Lambda)
    throw UnsupportedConfiguration("lambda_closed_form: only the Lambda configuration has a closed form");
  if (p.convention != CouplingConvention::half)
    throw UnsupportedConfiguration("lambda_closed_form: closed form assumes the half coupling convention");
  p.validate();

  const C i(0, 1);
  const Scalar d = p.delta;
  const Scalar k13 = p.kappa_a;
  const Scalar k23 = p.kappa_b;
  const C c10 = p.c0[0];
  const C c20 = p.c0[1];
  const C c30 = p.c0[2];
  const Scalar k2 = k13 * k13 + k23 * k23;

  Vector3c<Scalar> c;
  if (k2 == 0) {
    c << std::polar(Scalar(1), -2 * d * t / 3) * c10, std::polar(Scalar(1), d * t / 3) * c20,
        std::polar(Scalar(1), d * t / 3) * c30;
    return c;
  }

  const Scalar omega = std::sqrt(d * d + k2);
  const Scalar cs = std::cos(omega * t / 2);
  const Scalar sn = std::sin(omega * t / 2);
  const C global = std::polar(Scalar(1), -d * t / 6);
  const C half_phase = std::polar(Scalar(1), d * t / 2);
  const C bright = c30 * k13 + c20 * k23;  // sqrt(k2) times the bright amplitude
  const C drive = bright * d - c10 * k2;

  c(0) = global * (c10 * cs - (i / omega) * (c10 * d + bright) * sn);
  c(1) = global / (k2 * omega) *
         (half_phase * k13 * (c20 * k13 - c30 * k23) * omega + k23 * bright * omega * cs + i * k23 * drive * sn);
  c(2) = global / (k2 * omega) *
         (half_phase * k23 * (-c20 * k13 + c30 * k23) * omega + k13 * bright * omega * cs + i * k13 * drive * sn);
  return c;
}

/// Linear Bloch-equation generator, dn/dt = m n.
template <typename Scalar = double>
struct AdjointGenerator {
  Matrix8<Scalar> m;

  BlochVector8<Scalar> apply(const BlochVector8<Scalar>& n) const { return m * n; }
};

template <typename Scalar>
AdjointGenerator<Scalar> adjoint_generator(const SimParams<Scalar>& p) {
  const auto h = gellmann_expansion<Scalar>(rotating_hamiltonian(p));
  const auto& sc = structure_constants<Scalar>();
  AdjointGenerator<Scalar> gen{Matrix8<Scalar>::Zero()};
  for (int k = 1; k <= 8; ++k)
    for (int l = 1; l <= 8; ++l) {
      Scalar acc = 0;
      for (int j = 1; j <= 8; ++j) acc += h(j) * sc.f(j, l, k);
      gen.m(k - 1, l - 1) = 2 * acc;
    }
  return gen;
}

/// 1-based Bloch indices of the four-sphere and two-sphere sectors.
struct SectorSets {
  std::array<int, 5> four;
  std::array<int, 3> two;
};

inline SectorSets sector_index_sets(Configuration c) {
  switch (c) {
    case Configuration::Lambda: return {{2, 3, 5, 6, 8}, {1, 4, 7}};
    case Configuration::Vee: return {{1, 3, 5, 7, 8}, {2, 4, 6}};
    case Configuration::Xi: return {{2, 3, 4, 7, 8}, {1, 5, 6}};
  }
  throw std::invalid_argument("sector_index_sets: unknown configuration");
}

/// (S4, S2) squared norms of a Bloch vector.
template <typename Scalar>
std::pair<Scalar, Scalar> sector_norms(const BlochVector8<Scalar>& n, Configuration c) {
  const SectorSets sets = sector_index_sets(c);
  Scalar s4 = 0;
  Scalar s2 = 0;
  for (int k : sets.four) s4 += n(k - 1) * n(k - 1);
  for (int k : sets.two) s2 += n(k - 1) * n(k - 1);
  return {s4, s2};
}

/// Resonant sector norms from the initial amplitudes, as closed polynomials in c0 and conj(c0).
template <typename Scalar>
std::pair<Scalar, Scalar> sector_initial_norms(const SimParams<Scalar>& p, double tolerance = 1e-10) {
  using C = Complex<Scalar>;
  const C c1 = p.c0[0];
  const C c2 = p.c0[1];
  const C c3 = p.c0[2];
  const C a = std::conj(c1);
  const C b = std::conj(c2);
  const C e = std::conj(c3);
  const C pop = Scalar(2) * c1 * a * (c2 * b + c3 * e);
  C s4;
  C s2;
  switch (p.config) {
    case Configuration::Lambda:
      s4 = (Scalar(-3) * a * a * (c2 * c2 + c3 * c3) + b * b * (Scalar(4) * c2 * c2 + Scalar(3) * c3 * c3) +
            Scalar(2) * c2 * b * c3 * e + (Scalar(3) * c2 * c2 + Scalar(4) * c3 * c3) * e * e + pop +
            c1 * c1 * (Scalar(4) * a * a - Scalar(3) * (b * b + e * e))) /
           Scalar(3);
      s2 = a * a * (c2 * c2 + c3 * c3) - (b * c3 - c2 * e) * (b * c3 - c2 * e) + pop + c1 * c1 * (b * b + e * e);
      break;
    case Configuration::Vee:
      s4 = (Scalar(4) * c2 * c2 * b * b - Scalar(3) * b * b * c3 * c3 + Scalar(3) * a * a * (c2 * c2 - c3 * c3) +
            Scalar(2) * c2 * b * c3 * e - Scalar(3) * c2 * c2 * e * e + Scalar(4) * c3 * c3 * e * e + pop +
            c1 * c1 * (Scalar(4) * a * a + Scalar(3) * b * b - Scalar(3) * e * e)) /
           Scalar(3);
      s2 = a * a * (-c2 * c2 + c3 * c3) + (b * c3 + c2 * e) * (b * c3 + c2 * e) + pop + c1 * c1 * (-b * b + e * e);
      break;
    case Configuration::Xi:
      s4 = (Scalar(4) * c2 * c2 * b * b - Scalar(3) * b * b * c3 * c3 - Scalar(3) * a * a * (c2 * c2 - c3 * c3) +
            Scalar(2) * c2 * b * c3 * e - Scalar(3) * c2 * c2 * e * e + Scalar(4) * c3 * c3 * e * e + pop +
            c1 * c1 * (Scalar(4) * a * a - Scalar(3) * b * b + Scalar(3) * e * e)) /
           Scalar(3);
      s2 = a * a * (c2 * c2 - c3 * c3) + (b * c3 + c2 * e) * (b * c3 + c2 * e) + pop + c1 * c1 * (b * b - e * e);
      break;
  }
  const Scalar residue = std::max(std::abs(s4.imag()), std::abs(s2.imag()));
  if (residue > tolerance)
    throw ConsistencyError("sector_initial_norms: imaginary residue " + std::to_string(residue));
  return {s4.real(), s2.real()};
}

/// Time series of one run. amplitudes is empty for trajectories integrated
/// directly in Bloch space.
template <typename Scalar = double>
struct Trajectory {
  std::vector<Scalar> times;
  std::vector<Vector3c<Scalar>> amplitudes;
  std::vector<BlochVector8<Scalar>> bloch;
  std::vector<BlochVector8<Scalar>> bloch_dot;
  std::vector<Scalar> sector4_norm;
  std::vector<Scalar> sector2_norm;

  std::size_t size() const { return times.size(); }

  /// max_t | |n(t)|^2 - 4/3 |
  Scalar max_norm_defect() const {
    Scalar worst = 0;
    for (const auto& n : bloch) worst = std::max(worst, std::abs(n.squaredNorm() - Scalar(4) / 3));
    return worst;
  }
};

namespace detail {
template <typename Scalar>
void fill_derived_columns(Trajectory<Scalar>& tr, const AdjointGenerator<Scalar>& gen, Configuration c) {
  tr.bloch_dot.clear();
  tr.sector4_norm.clear();
  tr.sector2_norm.clear();
  for (const auto& n : tr.bloch) {
    tr.bloch_dot.push_back(gen.apply(n));
    const auto [s4, s2] = sector_norms(n, c);
    tr.sector4_norm.push_back(s4);
    tr.sector2_norm.push_back(s2);
  }
}
}  // namespace detail

/// Exact Bloch trajectory: exact amplitudes mapped through n_k = <c|lambda_k|c>.
template <typename Scalar>
Trajectory<Scalar> bloch_trajectory(const SimParams<Scalar>& p, const std::vector<Scalar>& times) {
  Trajectory<Scalar> tr;
  tr.times = times;
  tr.amplitudes = propagate_exact(p, times);
  tr.bloch.reserve(times.size());
  for (const auto& c : tr.amplitudes) tr.bloch.push_back(bloch_from_amplitudes(c));
  detail::fill_derived_columns(tr, adjoint_generator(p), p.config);
  return tr;
}

/// Classical fixed-step RK4 on dn/dt = M n starting from n(0) at t = 0.
/// Each grid interval must be an integer number of steps of size dt.
template <typename Scalar>
Trajectory<Scalar> integrate_bloch_ode(const SimParams<Scalar>& p, const std::vector<Scalar>& times, Scalar dt) {
  if (!(dt > 0)) throw GridError("integrate_bloch_ode: step must be positive");
  const AdjointGenerator<Scalar> gen = adjoint_generator(p);
  const Matrix8<Scalar>& m = gen.m;

  Trajectory<Scalar> tr;
  tr.times = times;
  tr.bloch.reserve(times.size());
  BlochVector8<Scalar> n = bloch_from_amplitudes(p.c0.amplitudes());
  Scalar t = 0;
  for (Scalar target : times) {
    const Scalar span = target - t;
    if (span < 0) throw GridError("integrate_bloch_ode: time grid must be ascending from t = 0");
    const long steps = std::lround(span / dt);
    if (std::abs(static_cast<Scalar>(steps) * dt - span) > Scalar(1e-9) * std::max(Scalar(1), span) ||
        (span > 0 && steps == 0))
      throw GridError("integrate_bloch_ode: step " + std::to_string(dt) +
                      " does not divide grid interval " + std::to_string(span));
    if (steps > 0) {
      const Scalar h = span / static_cast<Scalar>(steps);
      for (long s = 0; s < steps; ++s) {
        const BlochVector8<Scalar> k1 = m * n;
        const BlochVector8<Scalar> k2 = m * (n + (h / 2) * k1);
        const BlochVector8<Scalar> k3 = m * (n + (h / 2) * k2);
        const BlochVector8<Scalar> k4 = m * (n + h * k3);
        n += (h / 6) * (k1 + 2 * k2 + 2 * k3 + k4);
      }
    }
    t = target;
    tr.bloch.push_back(n);
  }
  detail::fill_derived_columns(tr, gen, p.config);
  return tr;
}

/// Uniform grid 0, dt, 2dt, ..., up to t_max (inclusive within rounding).
template <typename Scalar>
std::vector<Scalar> uniform_grid(Scalar t_max, Scalar dt) {
  if (!(dt > 0) || !(t_max >= 0)) throw GridError("uniform_grid: need dt > 0 and t_max >= 0");
  const auto intervals = static_cast<std::size_t>(std::floor(t_max / dt + Scalar(1e-9)));
  std::vector<Scalar> grid(intervals + 1);
  for (std::size_t i = 0; i <= intervals; ++i) grid[i] = static_cast<Scalar>(i) * dt;
  return grid;
}

template <typename Scalar = double>
struct SplitReport {
  Scalar max_dev4 = 0;
  Scalar max_dev2 = 0;
  bool split = false;
};

/// Drift of each sector norm from its initial value along the exact trajectory.
template <typename Scalar>
SplitReport<Scalar> resonance_split_check(const SimParams<Scalar>& p, const std::vector<Scalar>& times,
                                          Scalar threshold = Scalar(1e-6)) {
  const auto [s4_0, s2_0] = sector_initial_norms(p);
  const Trajectory<Scalar> tr = bloch_trajectory(p, times);
  SplitReport<Scalar> rep;
  for (std::size_t i = 0; i < tr.size(); ++i) {
    rep.max_dev4 = std::max(rep.max_dev4, std::abs(tr.sector4_norm[i] - s4_0));
    rep.max_dev2 = std::max(rep.max_dev2, std::abs(tr.sector2_norm[i] - s2_0));
  }
  rep.split = rep.max_dev4 <= threshold && rep.max_dev2 <= threshold;
  return rep;
}

}  // namespace qutrit

#endif  // QUTRIT_DYNAMICS_HPP
