// Copyright 2026 The nhcd Authors.
// SPDX-License-Identifier: Apache-2.0

#ifndef NHCD_MODELS_HPP
#define NHCD_MODELS_HPP

#include <array>
#include <functional>
#include <memory>
#include <string>
#include <string_view>
#include <utility>

#include "nhcd/cd.hpp"
#include "nhcd/schedule.hpp"

namespace nhcd {

// Three-level Lambda system with gain/loss on each level.
struct StirapParams {
  Complex omega_p;
  Complex omega_s;
  double gamma1 = 0.0;
  double gamma2 = 0.0;
  double gamma3 = 0.0;
};

/// 0.5 * [[i g1, Wp, 0], [conj Wp, i g2, Ws], [0, conj Ws, i g3]]
Matrix stirap_hamiltonian(const StirapParams& p);

/// g1 = -g3 = gamma, g2 = 0, Wp = Ws = omega e^{i phi}/sqrt 2
StirapParams pseudo_pattern(double omega, double gamma, double phi);
/// g2 = 2 gamma, Wp = omega1, Ws = omega2 (real)
StirapParams antipseudo_pattern(double omega1, double omega2, double gamma);

/// Anti-diagonal (e^{2i phi}, 1, e^{-2i phi}).
Matrix pseudo_symmetry_matrix(double phi);
/// diag(1, -1, 1)
Matrix antipseudo_symmetry_matrix();

/// Closed forms in the model angles. State labels are (0, +, -).
namespace closed_form {

std::array<Vector, 3> pseudo_states(double theta, double phi);
/// (0, +1/2 sqrt(w^2 - g^2), -1/2 sqrt(w^2 - g^2)), principal branch.
Vector pseudo_energies(double omega, double gamma);
/// Per state (A_theta, A_phi); A_n = A_theta theta' + A_phi phi'.
std::array<std::pair<Complex, Complex>, 3> pseudo_connections(double theta);
Matrix pseudo_h1(double theta, double phi, double theta_dot, double phi_dot);
/// The |dE><E*|U_n| sum alone. Its (1,1) entry carries theta'.
Matrix pseudo_cd_only(double theta, double phi, double theta_dot, double phi_dot);
/// Same matrix with phi' in the (1,1) entry. Wrong; kept
/// only so tests can show it disagrees with the assembled sum.
Matrix pseudo_cd_only_phi_variant(double theta, double phi, double theta_dot, double phi_dot);

std::array<Vector, 3> antipseudo_states(double theta, double phi);
/// (0, i/2 (g + sqrt(g^2 - W^2)), i/2 (g - sqrt(g^2 - W^2)))
Vector antipseudo_energies(double omega, double gamma);
Matrix antipseudo_h1(double theta, double phi, double theta_dot, double phi_dot);

}  // namespace closed_form

/// A real function of time with its derivative.
struct Pulse {
  std::function<double(double)> value;
  std::function<double(double)> rate;
};

Pulse constant_pulse(double v);
/// amp * sech(t/T - shift)
Pulse sech_pulse(double amp, double T, double shift);
/// [tanh(t/T + 3/2) - tanh(t/T - 3/2)] / T
Pulse tanh_window_pulse(double T);
/// value(t) = a + b t
Pulse linear_pulse(double a, double b);

/// Analytic three-level model: a Schedule with closed-form eigensystem,
/// connections and CD matrices.
class ModelBundle : public Schedule {
 public:
  explicit ModelBundle(Window w) : window_(w) {}
  Window window() const override { return window_; }
  bool analytic_gauge() const override { return true; }
  EigenSystem eigensystem(double t) const override;

  virtual Vector analytic_eigenvalues(double t) const = 0;
  virtual Matrix analytic_rights(double t) const = 0;
  virtual std::array<std::pair<Complex, Complex>, 3> analytic_connections(double t) const = 0;
  /// A_n from the closed-form connections and the angle rates.
  Vector analytic_berry(double t) const;
  /// H0 = hamiltonian(t), H1 and HcdOnly from the closed forms.
  virtual CDBundle analytic_cd(double t) const = 0;
  /// theta, phi, theta_dot, phi_dot
  virtual ParameterMap angles(double t) const = 0;
  /// Is the spectrum real (pseudo) / purely imaginary (antipseudo)?
  virtual bool symmetric_spectrum() const = 0;

 private:
  Window window_;
};

class PseudoModel : public ModelBundle {
 public:
  /// EPCrossing if omega = gamma anywhere in the window or the regime flips.
  PseudoModel(Pulse omega, Pulse gamma, Pulse phi, Window w);

  Matrix hamiltonian(double t) const override;
  ParameterMap parameters(double t) const override;
  ParameterMap parameter_rates(double t) const override;
  std::optional<SymmetrySpec> symmetry(double t) const override;
  Vector analytic_eigenvalues(double t) const override;
  Matrix analytic_rights(double t) const override;
  std::array<std::pair<Complex, Complex>, 3> analytic_connections(double t) const override;
  CDBundle analytic_cd(double t) const override;
  ParameterMap angles(double t) const override;
  bool symmetric_spectrum() const override { return real_spectrum_; }

 private:
  void check_ep(double t) const;
  Pulse omega_, gamma_, phi_;
  bool real_spectrum_ = true;
};

class AntipseudoModel : public ModelBundle {
 public:
  AntipseudoModel(Pulse omega1, Pulse omega2, Pulse gamma, Window w);

  Matrix hamiltonian(double t) const override;
  ParameterMap parameters(double t) const override;
  ParameterMap parameter_rates(double t) const override;
  std::optional<SymmetrySpec> symmetry(double t) const override;
  Vector analytic_eigenvalues(double t) const override;
  Matrix analytic_rights(double t) const override;
  std::array<std::pair<Complex, Complex>, 3> analytic_connections(double t) const override;
  CDBundle analytic_cd(double t) const override;
  ParameterMap angles(double t) const override;
  bool symmetric_spectrum() const override { return imaginary_spectrum_; }

 private:
  void check_ep(double t) const;
  Pulse omega1_, omega2_, gamma_;
  bool imaginary_spectrum_ = true;
};

enum class ModelCase { PseudoReal, PseudoComplex, Antipseudo };

ModelCase parse_model_case(std::string_view name);
std::string_view to_string(ModelCase c);

struct CaseSchedule {
  ModelCase which = ModelCase::PseudoReal;
  double T = 1.0;
  Window window;  // [-6T, 6T]
  // pseudo: omega, gamma, phi; antipseudo: omega1, omega2, gamma
  std::map<std::string, Pulse> pulses;
};

CaseSchedule case_schedule(ModelCase which);
std::shared_ptr<ModelBundle> make_model(const CaseSchedule& ps);
std::shared_ptr<ModelBundle> make_case_model(ModelCase which);

}  // namespace nhcd

#endif  // NHCD_MODELS_HPP
