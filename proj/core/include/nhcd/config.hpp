// Copyright 2026 The nhcd Authors.
// SPDX-License-Identifier: Apache-2.0

#ifndef NHCD_CONFIG_HPP
#define NHCD_CONFIG_HPP

#include <map>
#include <optional>
#include <string>
#include <string_view>

#include "nhcd/dynamics.hpp"
#include "nhcd/schedule.hpp"

namespace nhcd {

enum class Drive { Bare, FullCd, CdOnly };
enum class InitialKind { Eigenstate, BareState, Explicit };
enum class CdSource { Analytic, Numeric };

Drive parse_drive(std::string_view s);
std::string_view to_string(Drive d);

/// INI experiment description. Key reference:
///
/// [experiment]
///   name           output file stem                       (default "run")
///   model          pseudo-real | pseudo-complex | antipseudo | custom-matrix
///   drive          bare | full-cd | cd-only
///   initial_state  eigenstate-N | bare-K | explicit       (N from 0, K from 1)
///   amplitudes     comma list of complex numbers          (explicit only)
///   reference      eigenstate-N, fidelity target for bare-K/explicit starts
///   cd_source      analytic | numeric                     (default analytic)
///   metric         true | false, compute max eta          (default true)
/// [grid]
///   window         "t0, t1"                               (default model window)
///   step           positive, default 1e-3 T
///   method         rk4-fixed | rk4-adaptive
/// [output]
///   dir            output directory                       (default "out")
/// [thresholds]     any of: min_fidelity_u, min_fidelity_plain, min_final_p1..3,
///                  max_norm_deviation, max_eta
/// [custom]         H(t) = matrix + t * matrix_rate
///   matrix         rows split by ';', entries by ','  e.g. "1, 0.5i; -0.5i, -1"
///   matrix_rate    same shape (default zero)
///   symmetry       none | pseudo | antipseudo
///   u              symmetry matrix, same syntax
///
/// Unknown sections or keys are a ConfigError.
struct ExperimentConfig {
  std::string name = "run";
  std::string model;
  Drive drive = Drive::Bare;
  InitialKind initial = InitialKind::Eigenstate;
  int initial_index = 0;
  Vector amplitudes;
  std::optional<int> reference_index;
  CdSource cd_source = CdSource::Analytic;
  bool compute_metric = true;

  std::optional<Window> window;
  std::optional<double> step;
  Method method = Method::Rk4Fixed;

  std::string out_dir = "out";
  std::map<std::string, double> thresholds;

  Matrix custom_matrix;
  Matrix custom_rate;
  std::optional<SymmetrySpec> custom_symmetry;
};

ExperimentConfig parse_config(const std::string& text);
ExperimentConfig load_config(const std::string& path);

/// "1", "-2.5i", "3-4i", "i", "1e-3+2e-2i"
Complex parse_complex(std::string_view token);
Matrix parse_matrix(std::string_view text);
Window parse_window(std::string_view text);

}  // namespace nhcd

#endif  // NHCD_CONFIG_HPP
