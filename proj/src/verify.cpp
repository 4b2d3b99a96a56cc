#include "qutrit/verify.hpp"

#include <algorithm>
#include <cmath>
#include <future>
#include <numbers>
#include <sstream>
#include <stdexcept>

#include "qutrit/figures.hpp"
#include "qutrit/format.hpp"
#include "qutrit/sampling.hpp"
#include "qutrit/su3.hpp"

namespace qutrit {

bool SuiteReport::passed() const {
  return std::all_of(checks.begin(), checks.end(), [](const CheckResult& c) { return c.passed; });
}

VerifyScope parse_verify_scope(const std::string& text) {
  if (text == "algebra") return VerifyScope::algebra;
  if (text == "state") return VerifyScope::state;
  if (text == "dynamics") return VerifyScope::dynamics;
  if (text == "all") return VerifyScope::all;
  throw std::invalid_argument("unknown verify scope '" + text + "' (expected algebra, state, dynamics, all)");
}

namespace {

constexpr double sqrt3 = std::numbers::sqrt3;

CheckResult at_most(std::string name, double residual, double tolerance, std::string detail = {}) {
  return {std::move(name), residual <= tolerance, residual, tolerance, std::move(detail)};
}

double max_abs(const Matrix3cd& m) { return m.cwiseAbs().maxCoeff(); }

// ---- algebra ---------------------------------------------------------------

CheckResult check_traces() {
  const auto& b = gellmann_basis<double>();
  double r = std::abs(b[0].trace() - 3.0);
  for (int k = 1; k <= 8; ++k) {
    r = std::max(r, std::abs(b[k].trace()));
    r = std::max(r, max_abs(b[k] - b[k].adjoint()));
  }
  return at_most("gell-mann traceless hermitian", r, tol::exact);
}

CheckResult check_orthogonality() {
  const auto& b = gellmann_basis<double>();
  double r = 0;
  for (int k = 1; k <= 8; ++k)
    for (int l = 1; l <= 8; ++l) r = std::max(r, std::abs((b[k] * b[l]).trace() - (k == l ? 2.0 : 0.0)));
  return at_most("gell-mann orthogonality Tr[lk ll] = 2 delta", r, tol::exact);
}

CheckResult check_symmetry() {
  const auto& sc = structure_constants<double>();
  double r = 0;
  for (int l = 1; l <= 8; ++l)
    for (int m = 1; m <= 8; ++m)
      for (int n = 1; n <= 8; ++n) {
        const double f = sc.f(l, m, n);
        const double d = sc.d(l, m, n);
        r = std::max({r, std::abs(f + sc.f(m, l, n)), std::abs(f + sc.f(l, n, m)), std::abs(f + sc.f(n, m, l)),
                      std::abs(d - sc.d(m, l, n)), std::abs(d - sc.d(l, n, m)), std::abs(d - sc.d(n, m, l))});
      }
  return at_most("f antisymmetric, d symmetric", r, tol::exact);
}

struct Entry3 {
  int l, m, n;
  double value;
};

// Independent entries of the standard tables; every other entry follows by (anti)symmetry or vanishes.
const std::vector<Entry3>& f_reference() {
  static const std::vector<Entry3> t = {{1, 2, 3, 1.0},  {1, 4, 7, 0.5},        {1, 5, 6, -0.5},
                                        {2, 4, 6, 0.5},  {2, 5, 7, 0.5},        {3, 4, 5, 0.5},
                                        {3, 6, 7, -0.5}, {4, 5, 8, sqrt3 / 2}, {6, 7, 8, sqrt3 / 2}};
  return t;
}

const std::vector<Entry3>& d_reference() {
  static const std::vector<Entry3> t = {
      {1, 1, 8, 1 / sqrt3},         {2, 2, 8, 1 / sqrt3},         {3, 3, 8, 1 / sqrt3},         {8, 8, 8, -1 / sqrt3},
      {1, 4, 6, 0.5},               {1, 5, 7, 0.5},               {2, 4, 7, -0.5},              {2, 5, 6, 0.5},
      {3, 4, 4, 0.5},               {3, 5, 5, 0.5},               {3, 6, 6, -0.5},              {3, 7, 7, -0.5},
      {4, 4, 8, -0.5 / sqrt3},      {5, 5, 8, -0.5 / sqrt3},      {6, 6, 8, -0.5 / sqrt3},      {7, 7, 8, -0.5 / sqrt3}};
  return t;
}

template <bool Antisymmetric>
double table_residual(const std::vector<Entry3>& ref, double (*get)(int, int, int)) {
  std::array<double, 512> expected{};
  auto put = [&](int l, int m, int n, double v) { expected[StructureConstants<double>::index(l, m, n)] = v; };
  for (const auto& e : ref) {
    const int p[3] = {e.l, e.m, e.n};
    // all six permutations with their parities
    const int perm[6][3] = {{0, 1, 2}, {1, 2, 0}, {2, 0, 1}, {1, 0, 2}, {0, 2, 1}, {2, 1, 0}};
    for (int s = 0; s < 6; ++s) {
      const double sign = (Antisymmetric && s >= 3) ? -1.0 : 1.0;
      put(p[perm[s][0]], p[perm[s][1]], p[perm[s][2]], sign * e.value);
    }
  }
  double r = 0;
  for (int l = 1; l <= 8; ++l)
    for (int m = 1; m <= 8; ++m)
      for (int n = 1; n <= 8; ++n)
        r = std::max(r, std::abs(get(l, m, n) - expected[StructureConstants<double>::index(l, m, n)]));
  return r;
}

CheckResult check_f_table() {
  const double r = table_residual<true>(f_reference(), [](int l, int m, int n) {
    return structure_constants<double>().f(l, m, n);
  });
  return at_most("f table (f123 = 1, f458 = f678 = sqrt3/2, ...)", r, tol::exact);
}

CheckResult check_d_table() {
  const double r = table_residual<false>(d_reference(), [](int l, int m, int n) {
    return structure_constants<double>().d(l, m, n);
  });
  return at_most("d table (d118 = 1/sqrt3, d888 = -1/sqrt3, ...)", r, tol::exact);
}

CheckResult check_reconstruction() {
  const auto& b = gellmann_basis<double>();
  const auto& sc = structure_constants<double>();
  const Complex<double> two_i(0, 2);
  double r = 0;
  for (int l = 1; l <= 8; ++l)
    for (int m = 1; m <= 8; ++m) {
      Matrix3cd comm = Matrix3cd::Zero();
      Matrix3cd anti = (l == m ? 4.0 / 3.0 : 0.0) * b[0];
      for (int n = 1; n <= 8; ++n) {
        comm += two_i * sc.f(l, m, n) * b[n];
        anti += 2.0 * sc.d(l, m, n) * b[n];
      }
      r = std::max({r, max_abs(commutator(b[l], b[m]) - comm), max_abs(anticommutator(b[l], b[m]) - anti)});
    }
  return at_most("commutator/anticommutator reconstruction", r, tol::compound);
}

CheckResult check_shift_algebra() {
  double r = 0;
  for (auto fam : {ShiftFamily::T, ShiftFamily::V, ShiftFamily::U}) {
    const Matrix3cd p = shift_operator<double>(fam, ShiftKind::plus);
    const Matrix3cd m = shift_operator<double>(fam, ShiftKind::minus);
    const Matrix3cd t = shift_operator<double>(fam, ShiftKind::three);
    r = std::max({r, max_abs(commutator(p, m) - t), max_abs(commutator(p, t) + 2.0 * p),
                  max_abs(commutator(m, t) - 2.0 * m), max_abs(p.adjoint() - m)});
  }
  return at_most("shift-operator commutators [X+,X-] = X3, [X+,X3] = -2X+, [X-,X3] = 2X-", r, 0.0);
}

CheckResult check_shift_actions() {
  // action[family][kind][basis index] = image basis index (-1: zero); `three` gives a signed image.
  struct Action {
    ShiftFamily family;
    ShiftKind kind;
    int in;
    int out;
    double factor;
  };
  using F = ShiftFamily;
  using K = ShiftKind;
  static const Action table[27] = {
      {F::T, K::plus, 0, -1, 0},  {F::T, K::minus, 0, 1, 1},  {F::T, K::three, 0, 0, 1},
      {F::T, K::plus, 1, 0, 1},   {F::T, K::minus, 1, -1, 0}, {F::T, K::three, 1, 1, -1},
      {F::T, K::plus, 2, -1, 0},  {F::T, K::minus, 2, -1, 0}, {F::T, K::three, 2, -1, 0},
      {F::V, K::plus, 0, -1, 0},  {F::V, K::minus, 0, 2, 1},  {F::V, K::three, 0, 0, 1},
      {F::V, K::plus, 1, -1, 0},  {F::V, K::minus, 1, -1, 0}, {F::V, K::three, 1, -1, 0},
      {F::V, K::plus, 2, 0, 1},   {F::V, K::minus, 2, -1, 0}, {F::V, K::three, 2, 2, -1},
      {F::U, K::plus, 0, -1, 0},  {F::U, K::minus, 0, -1, 0}, {F::U, K::three, 0, -1, 0},
      {F::U, K::plus, 1, -1, 0},  {F::U, K::minus, 1, 2, 1},  {F::U, K::three, 1, 1, 1},
      {F::U, K::plus, 2, 1, 1},   {F::U, K::minus, 2, -1, 0}, {F::U, K::three, 2, 2, -1},
  };
  double r = 0;
  int failures = 0;
  for (const auto& a : table) {
    Vector3cd expected = Vector3cd::Zero();
    if (a.out >= 0) expected(a.out) = a.factor;
    const Vector3cd got = shift_operator<double>(a.family, a.kind) * Vector3cd::Unit(a.in);
    const double dev = (got - expected).cwiseAbs().maxCoeff();
    r = std::max(r, dev);
    failures += dev != 0;
  }
  return at_most("27 shift-operator actions on basis states", r, 0.0,
                 std::to_string(27 - failures) + "/27 exact");
}

// ---- state -----------------------------------------------------------------

std::string where_sample(std::size_t worst) { return "worst sample #" + std::to_string(worst); }

}  // namespace

SuiteReport run_algebra_suite() {
  SuiteReport rep{"algebra", {}};
  rep.checks.push_back(check_traces());
  rep.checks.push_back(check_orthogonality());
  rep.checks.push_back(check_symmetry());
  rep.checks.push_back(check_f_table());
  rep.checks.push_back(check_d_table());
  rep.checks.push_back(check_reconstruction());
  rep.checks.push_back(check_shift_algebra());
  rep.checks.push_back(check_shift_actions());
  return rep;
}

SuiteReport run_state_suite(const VerifyHooks& hooks) {
  SuiteReport rep{"state", {}};
  const auto angles = sample_angles(angle_samples, angle_seed);

  double norm_r = 0;
  double map_r = 0;
  double round_r = 0;
  double pure_r = 0;
  std::size_t norm_worst = 0;
  std::size_t map_worst = 0;
  for (std::size_t i = 0; i < angles.size(); ++i) {
    const BlochVector8d g = hooks.geometric(angles[i]);
    const auto rho = density_from_state(state_from_angles(angles[i]));
    const BlochVector8d t = bloch_from_density(rho);
    const double nd = std::abs(g.squaredNorm() - 4.0 / 3.0);
    if (nd > norm_r) norm_r = nd, norm_worst = i;
    const double md = (g - t).cwiseAbs().maxCoeff();
    if (md > map_r) map_r = md, map_worst = i;
    round_r = std::max(round_r, max_abs(density_from_bloch(t).matrix() - rho.matrix()));
    pure_r = std::max(pure_r, std::abs(purity(rho) - 1.0));
  }
  rep.checks.push_back(at_most("seven-sphere norm 4/3", norm_r, tol::compound,
                               std::to_string(angle_samples) + " samples, " + where_sample(norm_worst)));
  rep.checks.push_back(at_most("geometric map = trace map", map_r, tol::compound,
                               std::to_string(angle_samples) + " samples, " + where_sample(map_worst)));
  rep.checks.push_back(at_most("density <-> bloch round trip", round_r, tol::compound));
  rep.checks.push_back(at_most("pure-state purity 1", pure_r, tol::compound));

  double bound_r = 0;
  double ident_r = 0;
  for (const auto& rho : sample_mixtures(mixture_samples, mixture_seed)) {
    const double p = purity(rho);
    bound_r = std::max({bound_r, 1.0 / 3.0 - p, p - 1.0});
    ident_r = std::max(ident_r, std::abs(p - purity_from_bloch(bloch_from_density(rho))));
  }
  rep.checks.push_back(at_most("purity bounds 1/3 <= Tr[rho^2] <= 1", std::max(bound_r, 0.0), tol::compound,
                               std::to_string(mixture_samples) + " mixtures"));
  rep.checks.push_back(at_most("purity identity (1 + 1.5|n|^2)/3", ident_r, tol::compound));

  // Cardinal states at phi1 = phi2 = 0 against their literal amplitudes.
  const double h = 1 / std::numbers::sqrt2;
  const std::pair<CardinalLabel, Vector3cd> cardinals[] = {
      {CardinalLabel::one, Vector3cd(1, 0, 0)},
      {CardinalLabel::two, Vector3cd(0, 1, 0)},
      {CardinalLabel::three, Vector3cd(0, 0, 1)},
      {CardinalLabel::superpose12, Vector3cd(h, h, 0)},
      {CardinalLabel::superpose23, Vector3cd(0, h, h)},
      {CardinalLabel::superpose13, Vector3cd(h, 0, h)},
      {CardinalLabel::superposeAll, Vector3cd(h, h / 2, h * sqrt3 / 2)},
  };
  double card_r = 0;
  for (const auto& [label, c] : cardinals)
    card_r = std::max(card_r, (cardinal_state<double>(label).state.amplitudes() - c).cwiseAbs().maxCoeff());
  rep.checks.push_back(at_most("cardinal state amplitudes", card_r, tol::exact));
  return rep;
}

namespace {

// ---- dynamics --------------------------------------------------------------

constexpr double t_end = 100.0;
constexpr double grid_dt = 0.01;

/// n-dot from the Liouville equation, independent of the structure constants.
BlochVector8d liouville_bloch_rate(const Matrix3cd& h, const Vector3cd& c) {
  const Matrix3cd rho = c * c.adjoint();
  const Matrix3cd rate = Complex<double>(0, -1) * commutator(h, rho);
  const auto& b = gellmann_basis<double>();
  BlochVector8d out;
  for (int k = 1; k <= 8; ++k) out(k - 1) = (b[k] * rate).trace().real();
  return out;
}

double max_componentwise(const std::vector<BlochVector8d>& a, const std::vector<BlochVector8d>& b) {
  double r = 0;
  for (std::size_t i = 0; i < a.size(); ++i) r = std::max(r, (a[i] - b[i]).cwiseAbs().maxCoeff());
  return r;
}

}  // namespace

SuiteReport run_dynamics_suite() {
  SuiteReport rep{"dynamics", {}};
  const std::vector<double> grid = uniform_grid(t_end, grid_dt);

  for (const auto& p : distinct_figure_params()) {
    const std::string tag = " [" + describe(p) + "]";
    const Trajectory<double> exact = bloch_trajectory(p, grid);
    rep.checks.push_back(at_most("dynamical norm 4/3" + tag, exact.max_norm_defect(), tol::trajectory));

    const Matrix8d& m = adjoint_generator(p).m;
    rep.checks.push_back(at_most("generator antisymmetric" + tag, (m + m.transpose()).cwiseAbs().maxCoeff(),
                                 tol::exact));

    const Matrix3cd h = rotating_hamiltonian(p);
    double rate_r = 0;
    for (std::size_t i = 0; i < exact.size(); i += 97)
      rate_r = std::max(rate_r,
                        (exact.bloch_dot[i] - liouville_bloch_rate(h, exact.amplitudes[i])).cwiseAbs().maxCoeff());
    rep.checks.push_back(at_most("generator = Liouville rate" + tag, rate_r, tol::compound));

    // Step resolves the fastest Bloch frequency: h * |M|_2 <= 0.01.
    const double spectral = m.jacobiSvd().singularValues()(0);
    const double substeps = std::max(1.0, std::ceil(spectral));
    const Trajectory<double> rk = integrate_bloch_ode(p, grid, grid_dt / substeps);
    rep.checks.push_back(at_most("exact propagator = RK4" + tag, max_componentwise(exact.bloch, rk.bloch), 1e-6,
                                 "step " + format_double(grid_dt / substeps)));
  }

  for (double delta : {0.0, 0.2}) {
    SimParams<double> p;
    p.config = Configuration::Lambda;
    p.kappa_a = 0.3;
    p.kappa_b = 0.2;
    p.delta = delta;
    const auto exact = propagate_exact(p, grid);
    double r = 0;
    for (std::size_t i = 0; i < grid.size(); ++i)
      r = std::max(r, (lambda_closed_form(p, grid[i]) - exact[i]).cwiseAbs().maxCoeff());
    rep.checks.push_back(at_most("closed form = exact propagator [" + describe(p) + "]", r, tol::trajectory));
  }

  for (const auto& p : distinct_figure_params()) {
    if (p.delta != 0) continue;
    const auto split = resonance_split_check(p, grid, tol::trajectory);
    const auto [s4, s2] = sector_initial_norms(p);
    rep.checks.push_back(at_most("resonance sector split [" + describe(p) + "]",
                                 std::max(split.max_dev4, split.max_dev2), tol::trajectory,
                                 "S4 = " + format_double(s4) + ", S2 = " + format_double(s2)));
    if (p.config == Configuration::Lambda)
      rep.checks.push_back(at_most("equal-population Lambda sectors 4/9, 8/9",
                                   std::max(std::abs(s4 - 4.0 / 9.0), std::abs(s2 - 8.0 / 9.0)), tol::exact));
  }

  {
    SimParams<double> p;
    p.config = Configuration::Lambda;
    p.kappa_a = 0.3;
    p.kappa_b = 0.2;
    p.delta = 1.2;
    const auto split = resonance_split_check(p, grid, tol::trajectory);
    const double dev = std::max(split.max_dev4, split.max_dev2);
    rep.checks.push_back({"off-resonance sector drift > 1e-3 [" + describe(p) + "]", dev > 1e-3, dev, 1e-3,
                          "residual is the drift; passes when it exceeds the threshold"});
  }

  {
    SimParams<double> p;
    p.config = Configuration::Lambda;
    p.kappa_a = 0.3;
    p.kappa_b = 0.2;
    const double period = 4 * std::numbers::pi / std::hypot(p.kappa_a, p.kappa_b);
    std::vector<double> ts;
    for (int i = 0; i <= 200; ++i) ts.push_back(0.5 * i);
    std::vector<double> shifted;
    for (double t : ts) shifted.push_back(t + period);
    const auto a = bloch_trajectory(p, ts);
    const auto b = bloch_trajectory(p, shifted);
    double r = 0;
    for (std::size_t i = 0; i < ts.size(); ++i) r = std::max(r, (a.bloch[i] - b.bloch[i]).norm());
    rep.checks.push_back(at_most("Lambda resonance period 4pi/Omega", r, 1e-8));
  }

  const TableComparison cmp = compare_reference_lambda(false);
  rep.checks.push_back(at_most("reference Lambda Bloch equations (pattern and magnitudes)", cmp.mismatches, 0,
                               std::to_string(cmp.entries - cmp.mismatches) + "/" + std::to_string(cmp.entries) +
                                   " entries match"));
  return rep;
}

std::vector<SuiteReport> run_verify(VerifyScope scope, const VerifyHooks& hooks) {
  switch (scope) {
    case VerifyScope::algebra: return {run_algebra_suite()};
    case VerifyScope::state: return {run_state_suite(hooks)};
    case VerifyScope::dynamics: return {run_dynamics_suite()};
    case VerifyScope::all: break;
  }
  // Suites share only immutable tables, so they run concurrently.
  auto state = std::async(std::launch::async, [&hooks] { return run_state_suite(hooks); });
  auto dynamics = std::async(std::launch::async, [] { return run_dynamics_suite(); });
  std::vector<SuiteReport> out;
  out.push_back(run_algebra_suite());
  out.push_back(state.get());
  out.push_back(dynamics.get());
  return out;
}

namespace {
std::string short_number(double x) {
  std::ostringstream os;
  os << x;
  return os.str();
}
}  // namespace

void print_reports(std::ostream& os, const std::vector<SuiteReport>& reports) {
  for (const auto& rep : reports) {
    int passed = 0;
    for (const auto& c : rep.checks) {
      passed += c.passed;
      os << (c.passed ? "PASS " : "FAIL ") << rep.scope << ": " << c.name << "  residual=" << format_double(c.residual)
         << " tol=" << short_number(c.tolerance);
      if (!c.detail.empty()) os << "  (" << c.detail << ")";
      os << '\n';
    }
    os << rep.scope << ": " << passed << "/" << rep.checks.size() << " checks passed\n";
  }
}

int verify_exit_code(const std::vector<SuiteReport>& reports) {
  for (const auto& r : reports)
    if (!r.passed()) return 1;
  return 0;
}

const std::vector<GeneratorTerm>& reference_lambda_generator() {
  // (row, col, delta, kappa13, kappa23)
  static const std::vector<GeneratorTerm> t = {
      {1, 2, -1, 0, 0},   {1, 7, 0, -0.5, 0},         {2, 1, 1, 0, 0},    {2, 3, 0, 0, 1},
      {2, 6, 0, -0.5, 0}, {3, 2, 0, 0, -1},           {3, 5, 0, -0.5, 0}, {4, 5, -1, 0, 0},
      {4, 7, 0, 0, 0.5},  {5, 3, 0, 0.5, 0},          {5, 4, 1, 0, 0},    {5, 6, 0, 0, -0.5},
      {5, 8, 0, sqrt3 / 2, 0}, {6, 2, 0, 0.5, 0},     {6, 5, 0, 0, 0.5},  {7, 1, 0, 0.5, 0},
      {7, 4, 0, 0, -0.5}, {8, 5, 0, sqrt3 / 2, 0},
  };
  return t;
}

std::array<Matrix8d, 3> generator_coefficients(Configuration config, CouplingConvention convention) {
  // The generator is linear in (delta, kappa_a, kappa_b); unit inputs isolate each coefficient matrix.
  std::array<Matrix8d, 3> out;
  for (int j = 0; j < 3; ++j) {
    SimParams<double> p;
    p.config = config;
    p.convention = convention;
    p.delta = j == 0 ? 1 : 0;
    p.kappa_a = j == 1 ? 1 : 0;
    p.kappa_b = j == 2 ? 1 : 0;
    out[static_cast<std::size_t>(j)] = adjoint_generator(p).m;
  }
  return out;
}

TableComparison compare_reference_lambda(bool signed_match, double tolerance) {
  const auto gen = generator_coefficients(Configuration::Lambda, CouplingConvention::half);
  std::array<Matrix8d, 3> ref;
  for (auto& r : ref) r.setZero();
  for (const auto& t : reference_lambda_generator()) {
    ref[0](t.row - 1, t.col - 1) = t.delta;
    ref[1](t.row - 1, t.col - 1) = t.kappa_a;
    ref[2](t.row - 1, t.col - 1) = t.kappa_b;
  }
  static const char* names[3] = {"delta", "kappa13", "kappa23"};
  TableComparison cmp;
  for (int r = 0; r < 8; ++r)
    for (int c = 0; c < 8; ++c) {
      bool nonzero = false;
      bool same = true;
      std::ostringstream line;
      for (std::size_t j = 0; j < 3; ++j) {
        const double g = gen[j](r, c);
        const double e = ref[j](r, c);
        nonzero = nonzero || std::abs(g) > tolerance || std::abs(e) > tolerance;
        const double diff = signed_match ? std::abs(g - e) : std::abs(std::abs(g) - std::abs(e));
        if (diff > tolerance) {
          same = false;
          line << ' ' << names[j] << ": generated " << format_double(g) << ", reference " << format_double(e);
        }
      }
      if (!nonzero) continue;
      ++cmp.entries;
      if (!same) {
        ++cmp.mismatches;
        cmp.mismatch_list.push_back("dn" + std::to_string(r + 1) + "/dt <- n" + std::to_string(c + 1) + ":" +
                                    line.str());
      }
    }
  return cmp;
}

}  // namespace qutrit
