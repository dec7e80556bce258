#include <doctest.h>

#include <cmath>
#include <random>

#include "../support/oracles.hpp"
#include "nhcd/adiabatic.hpp"
#include "nhcd/dynamics.hpp"
#include "nhcd/models.hpp"

using namespace nhcd;
using oracle::C;

namespace {

bool throws_code(ErrorCode code, auto&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code() == code;
  }
  return false;
}

Vector basis(int n, int k) {
  Vector v = Vector::Zero(n);
  v[k] = 1.0;
  return v;
}

Matrix sigma_x() {
  Matrix m = Matrix::Zero(2, 2);
  m(0, 1) = m(1, 0) = 1.0;
  return m;
}

Matrix loss(double kappa, int n = 2) { return Matrix(-kI * kappa * Matrix::Identity(n, n)); }

}  // namespace

TEST_CASE("integrate: zero Hamiltonian") {
  const Vector psi = (Vector(3) << 0.3, C(0, 0.4), -0.5).finished();
  const auto tr = integrate([](double) { return Matrix(Matrix::Zero(3, 3)); }, psi, uniform_grid(0, 1, 10));
  for (const auto& s : tr.states) CHECK((s - psi).norm() == 0.0);
}

TEST_CASE("integrate: sigma_x rotation") {
  const auto grid = uniform_grid(0.0, M_PI / 2.0, 1000);
  for (Method m : {Method::Rk4Fixed, Method::Rk4Adaptive}) {
    IntegrateOptions o;
    o.method = m;
    const auto tr = integrate([](double) { return sigma_x(); }, basis(2, 0), grid, o);
    CHECK(std::abs(tr.states.back()[0]) < 1e-10);
    CHECK(std::abs(tr.states.back()[1] - C(0, -1)) < 1e-10);
    CHECK(tr.populations.back()[0] == doctest::Approx(0.0).epsilon(1e-10));
    CHECK(tr.populations.back()[1] == doctest::Approx(1.0).epsilon(1e-10));
    for (std::size_t k = 0; k < grid.size(); ++k) {
      const Vector exact = (Vector(2) << std::cos(grid[k]), C(0, -std::sin(grid[k]))).finished();
      CHECK((tr.states[k] - exact).norm() < 1e-10);
    }
  }
}

TEST_CASE("integrate: pure loss") {
  const auto tr = integrate([](double) { return loss(1.0); }, basis(2, 1), uniform_grid(0.0, 1.0, 100));
  CHECK(std::abs(tr.states.back()[1] - std::exp(-1.0)) < 1e-10);
  CHECK(tr.norms.back() == doctest::Approx(std::exp(-2.0)).epsilon(1e-10));
}

TEST_CASE("integrate: errors and overflow") {
  CHECK(throws_code(ErrorCode::StepTooLarge,
                    [] { integrate([](double) { return sigma_x(); }, basis(2, 0), uniform_grid(0, 1, 10)); }));
  CHECK(throws_code(ErrorCode::DimensionMismatch,
                    [] { integrate([](double) { return sigma_x(); }, basis(3, 0), uniform_grid(0, 1, 100)); }));
  CHECK(throws_code(ErrorCode::GridMismatch,
                    [] { integrate([](double) { return sigma_x(); }, basis(2, 0), {0.0, 0.1, 0.05}); }));
  CHECK(throws_code(ErrorCode::NonFinite, [] {
    integrate([](double t) { return Matrix(sigma_x() * (t > 0.5 ? NAN : 1.0)); }, basis(2, 0),
              uniform_grid(0, 1, 100));
  }));
  // gain: norm e^{2t} passes 1e12 near t = 13.8
  const auto tr = integrate([](double) { return loss(-1.0); }, basis(2, 0), uniform_grid(0.0, 20.0, 2000));
  CHECK(tr.truncated);
  CHECK(tr.size() < 2001);
  CHECK(tr.times.back() == doctest::Approx(0.5 * std::log(1e12)).epsilon(1e-3));
  CHECK(tr.norms.back() <= 1e12);
  CHECK(parse_method("rk4-adaptive") == Method::Rk4Adaptive);
  CHECK(throws_code(ErrorCode::ConfigError, [] { parse_method("euler"); }));
}

TEST_CASE("observables: fidelities") {
  const auto grid = uniform_grid(0.0, 1.0, 100);
  const auto hf = [](double) { return sigma_x(); };
  auto tr = integrate(hf, basis(2, 0), grid);
  const auto ref = integrate(hf, basis(2, 0), grid);
  observables(tr, MatrixFn([](double) { return Matrix(Matrix::Identity(2, 2)); }), &ref);
  for (std::size_t k = 0; k < tr.size(); ++k) {
    CHECK(tr.fidelity_u[k] == doctest::Approx(1.0).epsilon(1e-10));
    CHECK(tr.fidelity_plain[k] == doctest::Approx(1.0).epsilon(1e-14));
  }
  // without U only the plain fidelity is filled; scaling does not change it
  Trajectory scaled = ref;
  for (auto& s : scaled.states) s *= C(0.0, 3.0);
  observables(scaled, std::nullopt, &ref);
  CHECK(scaled.fidelity_u.empty());
  CHECK(scaled.fidelity_plain.back() == doctest::Approx(1.0).epsilon(1e-14));

  const auto shorter = integrate(hf, basis(2, 0), uniform_grid(0.0, 0.5, 50));
  CHECK(throws_code(ErrorCode::GridMismatch, [&] { observables(tr, std::nullopt, &shorter); }));
  const auto other = integrate(hf, basis(2, 0), uniform_grid(0.0, 1.01, 100));
  CHECK(throws_code(ErrorCode::GridMismatch, [&] { observables(tr, std::nullopt, &other); }));
}

TEST_CASE("observables: populations of closed-form states") {
  for (double theta : {0.2, 0.9, 1.4}) {
    Trajectory t;
    t.times = {0.0};
    t.states = {closed_form::antipseudo_states(theta, 0.3)[0]};
    observables(t);
    CHECK(t.populations[0][0] == doctest::Approx(std::pow(std::cos(theta), 2)));
    CHECK(t.populations[0][1] == 0.0);
    CHECK(t.populations[0][2] == doctest::Approx(std::pow(std::sin(theta), 2)));
    CHECK(t.populations[0].sum() == doctest::Approx(1.0).epsilon(1e-14));
  }
  Trajectory p;
  p.times = {0.0};
  p.states = {closed_form::pseudo_states(M_PI / 3.0, 0.0)[0]};
  observables(p);
  CHECK(std::abs(p.populations[0].sum() - 2.0) < 1e-12);
  CHECK(std::abs(p.populations_renorm[0].sum() - 1.0) < 1e-14);
}

TEST_CASE("phase decomposition: pure loss") {
  auto tr = integrate([](double) { return loss(1.0); }, basis(2, 0), uniform_grid(0.0, 2.0, 400));
  project_phase_decomposition(tr, [](double) { return loss(1.0); });
  for (std::size_t k = 0; k < tr.size(); ++k) {
    CHECK(std::abs(tr.alpha[k] + tr.times[k]) < 1e-10);
    CHECK(std::abs(tr.beta[k]) < 1e-12);
    CHECK((tr.normalized[k] - basis(2, 0)).norm() < 1e-10);
  }
  CHECK(tr.alpha_rate_mismatch < 1e-6);
}

TEST_CASE("phase decomposition: Hermitian evolution") {
  std::mt19937_64 rng(31);
  const Matrix a = oracle::random_hermitian(rng, 3), b = oracle::random_hermitian(rng, 3);
  const HamiltonianFn h = [&](double t) { return Matrix(a + std::cos(t) * b); };
  auto tr = integrate(h, basis(3, 1), uniform_grid(0.0, 3.0, 600));
  project_phase_decomposition(tr, h);
  for (std::size_t k = 0; k < tr.size(); ++k) {
    CHECK(std::abs(tr.alpha[k]) < 1e-9);
    CHECK(std::abs(tr.populations[k].sum() - 1.0) < 1e-9);
    CHECK(std::abs(tr.normalized[k].norm() - 1.0) < 1e-10);
  }
}

TEST_CASE("phase decomposition: antipseudo drive keeps alpha at zero") {
  auto model = make_case_model(ModelCase::Antipseudo);
  const Window w = model->window();
  const HamiltonianFn h = [&](double t) { return model->analytic_cd(t).HcdOnly; };
  auto tr = integrate(h, model->analytic_rights(w.t0).col(0), grid_with_step(w.t0, w.t1, 5e-3));
  project_phase_decomposition(tr, h);
  double worst = 0.0;
  for (double a : tr.alpha) worst = std::max(worst, std::abs(a));
  CHECK(worst < 1e-6);
}

TEST_CASE("phase decomposition: zero norm is refused") {
  Trajectory t;
  t.times = {0.0, 1.0};
  t.states = {basis(2, 0), Vector::Zero(2)};
  CHECK(throws_code(ErrorCode::ZeroNorm, [&] { project_phase_decomposition(t, [](double) { return sigma_x(); }); }));
}

TEST_CASE("property: fourth-order convergence on the pseudo-real schedule") {
  auto model = make_case_model(ModelCase::PseudoReal);
  const HamiltonianFn h = [&](double t) { return model->hamiltonian(t); };
  const Vector psi0 = model->analytic_rights(-6.0).col(0);
  auto end = [&](double step) { return integrate(h, psi0, grid_with_step(-6.0, 6.0, step)).states.back(); };
  const double step = 0.02;
  const Vector ref = end(step / 4.0);
  const double e1 = (end(step) - ref).norm(), e2 = (end(step / 2.0) - ref).norm();
  CAPTURE(e1);
  CAPTURE(e2);
  CHECK(e1 / e2 >= 14.0);
}

TEST_CASE("property: e^{2 alpha} = norm and alpha rate") {
  for (auto c : {ModelCase::PseudoReal, ModelCase::PseudoComplex, ModelCase::Antipseudo}) {
    auto model = make_case_model(c);
    const Window w = model->window();
    const HamiltonianFn h = [&](double t) { return model->hamiltonian(t); };
    double last = 0.0;
    for (double step : {4e-3 * w.length() / 12.0, 2e-3 * w.length() / 12.0}) {
      auto tr = integrate(h, basis(3, 0), grid_with_step(w.t0, w.t1, step));
      project_phase_decomposition(tr, h);
      for (std::size_t k = 0; k < tr.size(); ++k)
        CHECK(std::abs(std::exp(2 * tr.alpha[k]) - tr.norms[k]) <= 1e-8 * tr.norms[k]);
      if (last > 0) CHECK(last / tr.alpha_rate_mismatch > 3.5);  // O(h^2)
      last = tr.alpha_rate_mismatch;
    }
  }
}

TEST_CASE("property: linearity") {
  std::mt19937_64 rng(32);
  for (auto c : {ModelCase::PseudoReal, ModelCase::PseudoComplex, ModelCase::Antipseudo}) {
    auto model = make_case_model(c);
    const Window w = model->window();
    const HamiltonianFn h = [&](double t) { return model->hamiltonian(t); };
    const auto grid = grid_with_step(w.t0, w.t1, 1e-3 * w.length() / 12.0);
    const Vector p1 = oracle::random_matrix(rng, 3).col(0), p2 = oracle::random_matrix(rng, 3).col(1);
    const C a(0.7, -0.2), b(-0.3, 1.1);
    const auto t1 = integrate(h, p1, grid), t2 = integrate(h, p2, grid), t12 = integrate(h, a * p1 + b * p2, grid);
    double worst = 0.0;
    for (std::size_t k = 0; k < grid.size(); ++k)
      worst = std::max(worst, (t12.states[k] - a * t1.states[k] - b * t2.states[k]).norm() /
                                  std::max(1.0, t12.states[k].norm()));
    CHECK(worst < 1e-8);
  }
}
