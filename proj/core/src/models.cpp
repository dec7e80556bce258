// Copyright 2026 The nhcd Authors.
// SPDX-License-Identifier: Apache-2.0

#include "nhcd/models.hpp"

#include <algorithm>
#include <cmath>

#include <fmt/format.h>

namespace nhcd {

namespace {

constexpr double kSqrt2 = 1.4142135623730951;
// Fraction |cos 2 angle| below which the model is treated as sitting on an EP.
constexpr double kEpFraction = 1e-6;
constexpr int kEpScanPoints = 4001;

Complex csqrt(double x) { return std::sqrt(Complex(x, 0.0)); }
double sech(double x) { return 1.0 / std::cosh(x); }

Matrix from_columns(const std::array<Vector, 3>& cols) {
  Matrix m(3, 3);
  for (int k = 0; k < 3; ++k) m.col(k) = cols[k];
  return m;
}

}  // namespace

Matrix stirap_hamiltonian(const StirapParams& p) {
  Matrix h = Matrix::Zero(3, 3);
  h(0, 0) = Complex(0.0, p.gamma1);
  h(1, 1) = Complex(0.0, p.gamma2);
  h(2, 2) = Complex(0.0, p.gamma3);
  h(0, 1) = p.omega_p;
  h(1, 0) = std::conj(p.omega_p);
  h(1, 2) = p.omega_s;
  h(2, 1) = std::conj(p.omega_s);
  h *= 0.5;
  if (!all_finite(h)) fail(ErrorCode::NonFinite, "stirap_hamiltonian: non-finite parameter");
  return h;
}

StirapParams pseudo_pattern(double omega, double gamma, double phi) {
  const Complex w = omega / kSqrt2 * std::exp(kI * phi);
  return {w, w, gamma, 0.0, -gamma};
}

StirapParams antipseudo_pattern(double omega1, double omega2, double gamma) {
  return {Complex(omega1, 0.0), Complex(omega2, 0.0), 0.0, 2.0 * gamma, 0.0};
}

Matrix pseudo_symmetry_matrix(double phi) {
  Matrix u = Matrix::Zero(3, 3);
  u(0, 2) = std::exp(2.0 * kI * phi);
  u(1, 1) = 1.0;
  u(2, 0) = std::exp(-2.0 * kI * phi);
  return u;
}

Matrix antipseudo_symmetry_matrix() {
  Matrix u = Matrix::Identity(3, 3);
  u(1, 1) = -1.0;
  return u;
}

namespace closed_form {

std::array<Vector, 3> pseudo_states(double theta, double phi) {
  const Complex c = csqrt(-std::cos(2.0 * theta));
  const double s = std::sin(theta), co = std::cos(theta);
  const Complex e1 = std::exp(-kI * phi), e2 = std::exp(-2.0 * kI * phi);
  Vector p0(3);
  p0 << -kSqrt2 * s / (2.0 * c), kI * co * e1 / c, kSqrt2 * s * e2 / (2.0 * c);
  auto pm = [&](double sign) {
    const Complex a = sign * c - kI * co;
    Vector v(3);
    v << s / (2.0 * c), kSqrt2 * a * e1 / (2.0 * c), a * a * e2 / (2.0 * s * c);
    return v;
  };
  return {p0, pm(1.0), pm(-1.0)};
}

Vector pseudo_energies(double omega, double gamma) {
  const Complex e = 0.5 * csqrt(omega * omega - gamma * gamma);
  Vector v(3);
  v << 0.0, e, -e;
  return v;
}

std::array<std::pair<Complex, Complex>, 3> pseudo_connections(double theta) {
  const Complex c = csqrt(-std::cos(2.0 * theta));
  const double s = std::sin(theta), co = std::cos(theta);
  const Complex at = 1.0 / (s * c);
  const Complex ap = kI * co / c;
  return {{{0.0, 1.0}, {-at, 1.0 - ap}, {at, 1.0 + ap}}};
}

Matrix pseudo_h1(double theta, double phi, double theta_dot, double phi_dot) {
  const double c2 = std::cos(2.0 * theta), s = std::sin(theta);
  const double d = s * s / c2 * phi_dot;
  const Complex up = -std::exp(kI * phi) * (2.0 * theta_dot + kI * phi_dot * std::sin(2.0 * theta)) /
                     (2.0 * kSqrt2 * c2);
  const Complex lo = std::exp(-kI * phi) * (2.0 * theta_dot - kI * phi_dot * std::sin(2.0 * theta)) /
                     (2.0 * kSqrt2 * c2);
  Matrix m(3, 3);
  m << d, up, 0.0, lo, 0.0, up, 0.0, lo, -d;
  return m;
}

namespace {

Matrix pseudo_cd_only_with(double theta, double phi, double theta_dot, double phi_dot,
                           double first_rate) {
  const double c2 = std::cos(2.0 * theta);
  const Complex k = kI * std::cos(theta) / (std::sin(theta) * c2);
  const Complex lo = kSqrt2 * std::exp(-kI * phi) * theta_dot / c2;
  Matrix m = Matrix::Zero(3, 3);
  m(0, 0) = k * first_rate;
  m(1, 0) = lo;
  m(1, 1) = phi_dot;
  m(2, 1) = lo;
  m(2, 2) = 2.0 * phi_dot - k * theta_dot;
  return m;
}

}  // namespace

Matrix pseudo_cd_only(double theta, double phi, double theta_dot, double phi_dot) {
  return pseudo_cd_only_with(theta, phi, theta_dot, phi_dot, theta_dot);
}

Matrix pseudo_cd_only_phi_variant(double theta, double phi, double theta_dot, double phi_dot) {
  return pseudo_cd_only_with(theta, phi, theta_dot, phi_dot, phi_dot);
}

std::array<Vector, 3> antipseudo_states(double theta, double phi) {
  const double s = std::sin(theta), co = std::cos(theta), cp = std::cos(phi);
  const double c2 = std::cos(2.0 * phi);
  const Complex r = csqrt(c2);
  const Complex q = std::sqrt(csqrt(4.0 * c2));
  Vector p0(3);
  p0 << co, 0.0, -s;
  auto pm = [&](double sign) {
    const Complex a = std::sqrt(cp - sign * r), b = std::sqrt(cp + sign * r);
    Vector v(3);
    v << s * a / q, kI * b / q, co * a / q;
    return v;
  };
  return {p0, pm(1.0), pm(-1.0)};
}

Vector antipseudo_energies(double omega, double gamma) {
  const Complex root = csqrt(gamma * gamma - omega * omega);
  Vector v(3);
  v << 0.0, 0.5 * kI * (gamma + root), 0.5 * kI * (gamma - root);
  return v;
}

Matrix antipseudo_h1(double theta, double phi, double theta_dot, double phi_dot) {
  const double c2 = 2.0 * std::cos(2.0 * phi);
  const double a = std::sin(theta) * phi_dot / c2, b = std::cos(theta) * phi_dot / c2;
  Matrix m(3, 3);
  m << 0.0, a, kI * theta_dot, -a, 0.0, -b, -kI * theta_dot, b, 0.0;
  return m;
}

}  // namespace closed_form

Pulse constant_pulse(double v) {
  return {[v](double) { return v; }, [](double) { return 0.0; }};
}

Pulse sech_pulse(double amp, double T, double shift) {
  return {[=](double t) { return amp * sech(t / T - shift); },
          [=](double t) { return -amp * sech(t / T - shift) * std::tanh(t / T - shift) / T; }};
}

Pulse tanh_window_pulse(double T) {
  return {[=](double t) { return (std::tanh(t / T + 1.5) - std::tanh(t / T - 1.5)) / T; },
          [=](double t) {
            const double a = sech(t / T + 1.5), b = sech(t / T - 1.5);
            return (a * a - b * b) / (T * T);
          }};
}

Pulse linear_pulse(double a, double b) {
  return {[=](double t) { return a + b * t; }, [=](double) { return b; }};
}

EigenSystem ModelBundle::eigensystem(double t) const {
  EigenSystem es;
  es.eigenvalues = analytic_eigenvalues(t);
  es.rights = analytic_rights(t);
  const auto sym = symmetry(t);
  double scale = 1.0;
  for (int k = 0; k < 3; ++k) scale = std::max(scale, std::abs(es.eigenvalues[k]));
  es.pairing = pair_spectrum(es.eigenvalues, sym->kind, 1e-8 * scale);
  es.lefts = left_from_right(es.rights, es.pairing, sym->U).lefts;
  return es;
}

Vector ModelBundle::analytic_berry(double t) const {
  const auto conn = analytic_connections(t);
  const auto a = angles(t);
  Vector out(3);
  for (int k = 0; k < 3; ++k)
    out[k] = conn[k].first * a.at("theta_dot") + conn[k].second * a.at("phi_dot");
  return out;
}

// ---- pseudo ----

PseudoModel::PseudoModel(Pulse omega, Pulse gamma, Pulse phi, Window w)
    : ModelBundle(w), omega_(std::move(omega)), gamma_(std::move(gamma)), phi_(std::move(phi)) {
  int sign = 0;
  for (int k = 0; k < kEpScanPoints; ++k) {
    const double t = w.t0 + w.length() * k / (kEpScanPoints - 1);
    const double om = omega_.value(t), ga = gamma_.value(t);
    const double c2 = (ga * ga - om * om) / (om * om + ga * ga);
    if (!(std::abs(c2) > kEpFraction))
      fail(ErrorCode::EPCrossing, fmt::format("pseudo model: omega = gamma near t = {}", t));
    const int s = c2 < 0 ? -1 : 1;
    if (sign != 0 && s != sign)
      fail(ErrorCode::EPCrossing, fmt::format("pseudo model: spectrum changes regime near t = {}", t));
    sign = s;
  }
  real_spectrum_ = sign < 0;
}

void PseudoModel::check_ep(double t) const {
  const double om = omega_.value(t), ga = gamma_.value(t);
  if (!(std::abs(ga * ga - om * om) > 1e-12 * (om * om + ga * ga)))
    fail(ErrorCode::EPCrossing, fmt::format("pseudo model at EP, t = {}", t));
}

Matrix PseudoModel::hamiltonian(double t) const {
  return stirap_hamiltonian(pseudo_pattern(omega_.value(t), gamma_.value(t), phi_.value(t)));
}

ParameterMap PseudoModel::parameters(double t) const {
  const double om = omega_.value(t), ga = gamma_.value(t);
  return {{"omega", om}, {"gamma", ga}, {"phi", phi_.value(t)}, {"theta", std::atan2(om, ga)}};
}

ParameterMap PseudoModel::parameter_rates(double t) const {
  const double om = omega_.value(t), ga = gamma_.value(t);
  const double omd = omega_.rate(t), gad = gamma_.rate(t);
  return {{"omega", omd},
          {"gamma", gad},
          {"phi", phi_.rate(t)},
          {"theta", (omd * ga - om * gad) / (om * om + ga * ga)}};
}

ParameterMap PseudoModel::angles(double t) const {
  const auto p = parameters(t), r = parameter_rates(t);
  return {{"theta", p.at("theta")}, {"phi", p.at("phi")}, {"theta_dot", r.at("theta")}, {"phi_dot", r.at("phi")}};
}

std::optional<SymmetrySpec> PseudoModel::symmetry(double t) const {
  return SymmetrySpec{pseudo_symmetry_matrix(phi_.value(t)), SymmetryKind::Pseudo, {}};
}

Vector PseudoModel::analytic_eigenvalues(double t) const {
  check_ep(t);
  return closed_form::pseudo_energies(omega_.value(t), gamma_.value(t));
}

Matrix PseudoModel::analytic_rights(double t) const {
  check_ep(t);
  const double om = omega_.value(t), ga = gamma_.value(t);
  return from_columns(closed_form::pseudo_states(std::atan2(om, ga), phi_.value(t)));
}

std::array<std::pair<Complex, Complex>, 3> PseudoModel::analytic_connections(double t) const {
  check_ep(t);
  return closed_form::pseudo_connections(std::atan2(omega_.value(t), gamma_.value(t)));
}

CDBundle PseudoModel::analytic_cd(double t) const {
  check_ep(t);
  const auto a = angles(t);
  CDBundle b;
  b.H0 = hamiltonian(t);
  b.H1 = closed_form::pseudo_h1(a.at("theta"), a.at("phi"), a.at("theta_dot"), a.at("phi_dot"));
  b.Htotal = b.H0 + b.H1;
  b.HcdOnly = closed_form::pseudo_cd_only(a.at("theta"), a.at("phi"), a.at("theta_dot"), a.at("phi_dot"));
  return b;
}

// ---- antipseudo ----

AntipseudoModel::AntipseudoModel(Pulse omega1, Pulse omega2, Pulse gamma, Window w)
    : ModelBundle(w), omega1_(std::move(omega1)), omega2_(std::move(omega2)), gamma_(std::move(gamma)) {
  int sign = 0;
  for (int k = 0; k < kEpScanPoints; ++k) {
    const double t = w.t0 + w.length() * k / (kEpScanPoints - 1);
    const double o1 = omega1_.value(t), o2 = omega2_.value(t), ga = gamma_.value(t);
    const double om2 = o1 * o1 + o2 * o2;
    const double c2 = (ga * ga - om2) / (om2 + ga * ga);
    if (!(std::abs(c2) > kEpFraction))
      fail(ErrorCode::EPCrossing, fmt::format("antipseudo model: Omega = gamma near t = {}", t));
    const int s = c2 < 0 ? -1 : 1;
    if (sign != 0 && s != sign)
      fail(ErrorCode::EPCrossing, fmt::format("antipseudo model: spectrum changes regime near t = {}", t));
    sign = s;
  }
  imaginary_spectrum_ = sign > 0;
}

void AntipseudoModel::check_ep(double t) const {
  const double o1 = omega1_.value(t), o2 = omega2_.value(t), ga = gamma_.value(t);
  const double om2 = o1 * o1 + o2 * o2;
  if (!(std::abs(ga * ga - om2) > 1e-12 * (om2 + ga * ga)))
    fail(ErrorCode::EPCrossing, fmt::format("antipseudo model at EP, t = {}", t));
}

Matrix AntipseudoModel::hamiltonian(double t) const {
  return stirap_hamiltonian(antipseudo_pattern(omega1_.value(t), omega2_.value(t), gamma_.value(t)));
}

ParameterMap AntipseudoModel::parameters(double t) const {
  const double o1 = omega1_.value(t), o2 = omega2_.value(t), ga = gamma_.value(t);
  const double om = std::hypot(o1, o2);
  return {{"omega1", o1}, {"omega2", o2}, {"gamma", ga}, {"Omega", om},
          {"theta", std::atan2(o1, o2)}, {"phi", std::atan2(om, ga)}};
}

ParameterMap AntipseudoModel::parameter_rates(double t) const {
  const double o1 = omega1_.value(t), o2 = omega2_.value(t), ga = gamma_.value(t);
  const double d1 = omega1_.rate(t), d2 = omega2_.rate(t), dg = gamma_.rate(t);
  const double om = std::hypot(o1, o2);
  const double dom = (o1 * d1 + o2 * d2) / om;
  return {{"omega1", d1},
          {"omega2", d2},
          {"gamma", dg},
          {"Omega", dom},
          {"theta", (d1 * o2 - o1 * d2) / (om * om)},
          {"phi", (dom * ga - om * dg) / (om * om + ga * ga)}};
}

ParameterMap AntipseudoModel::angles(double t) const {
  const auto p = parameters(t), r = parameter_rates(t);
  return {{"theta", p.at("theta")}, {"phi", p.at("phi")}, {"theta_dot", r.at("theta")}, {"phi_dot", r.at("phi")}};
}

std::optional<SymmetrySpec> AntipseudoModel::symmetry(double) const {
  return SymmetrySpec{antipseudo_symmetry_matrix(), SymmetryKind::Antipseudo, {}};
}

Vector AntipseudoModel::analytic_eigenvalues(double t) const {
  check_ep(t);
  return closed_form::antipseudo_energies(std::hypot(omega1_.value(t), omega2_.value(t)), gamma_.value(t));
}

Matrix AntipseudoModel::analytic_rights(double t) const {
  check_ep(t);
  const auto p = parameters(t);
  return from_columns(closed_form::antipseudo_states(p.at("theta"), p.at("phi")));
}

std::array<std::pair<Complex, Complex>, 3> AntipseudoModel::analytic_connections(double t) const {
  check_ep(t);
  return {{{0.0, 0.0}, {0.0, 0.0}, {0.0, 0.0}}};
}

CDBundle AntipseudoModel::analytic_cd(double t) const {
  check_ep(t);
  const auto a = angles(t);
  CDBundle b;
  b.H0 = hamiltonian(t);
  b.H1 = closed_form::antipseudo_h1(a.at("theta"), a.at("phi"), a.at("theta_dot"), a.at("phi_dot"));
  b.Htotal = b.H0 + b.H1;
  b.HcdOnly = b.H1;  // A_n = 0 here, so the two coincide
  return b;
}

// ---- schedules used for the figure runs ----

ModelCase parse_model_case(std::string_view name) {
  if (name == "pseudo-real") return ModelCase::PseudoReal;
  if (name == "pseudo-complex") return ModelCase::PseudoComplex;
  if (name == "antipseudo") return ModelCase::Antipseudo;
  fail(ErrorCode::ConfigError, fmt::format("unknown model '{}'", name));
}

std::string_view to_string(ModelCase c) {
  switch (c) {
    case ModelCase::PseudoReal: return "pseudo-real";
    case ModelCase::PseudoComplex: return "pseudo-complex";
    case ModelCase::Antipseudo: return "antipseudo";
  }
  return "?";
}

CaseSchedule case_schedule(ModelCase which) {
  CaseSchedule ps;
  ps.which = which;
  switch (which) {
    case ModelCase::PseudoReal:
      ps.T = 1.0;
      ps.pulses = {{"omega", sech_pulse(3.0, ps.T, 0.0)},
                   {"gamma", tanh_window_pulse(ps.T)},
                   {"phi", constant_pulse(0.0)}};
      break;
    case ModelCase::PseudoComplex:
      ps.T = 2.0;
      ps.pulses = {{"omega", tanh_window_pulse(ps.T)},
                   {"gamma", sech_pulse(3.0, ps.T, 0.0)},
                   {"phi", constant_pulse(0.0)}};
      break;
    case ModelCase::Antipseudo:
      ps.T = 5.0;
      ps.pulses = {{"omega1", sech_pulse(5.0, ps.T, 1.5)},
                   {"omega2", sech_pulse(5.0, ps.T, -1.5)},
                   {"gamma", tanh_window_pulse(ps.T)}};
      break;
  }
  ps.window = {-6.0 * ps.T, 6.0 * ps.T};
  return ps;
}

std::shared_ptr<ModelBundle> make_model(const CaseSchedule& ps) {
  if (ps.which == ModelCase::Antipseudo)
    return std::make_shared<AntipseudoModel>(ps.pulses.at("omega1"), ps.pulses.at("omega2"),
                                             ps.pulses.at("gamma"), ps.window);
  return std::make_shared<PseudoModel>(ps.pulses.at("omega"), ps.pulses.at("gamma"), ps.pulses.at("phi"),
                                       ps.window);
}

std::shared_ptr<ModelBundle> make_case_model(ModelCase which) { return make_model(case_schedule(which)); }

}  // namespace nhcd
