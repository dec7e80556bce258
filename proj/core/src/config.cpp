// Copyright 2026 The nhcd Authors.
// SPDX-License-Identifier: Apache-2.0

#include "nhcd/config.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <set>
#include <sstream>
#include <vector>

#include <boost/algorithm/string.hpp>
#include <boost/property_tree/ini_parser.hpp>
#include <boost/property_tree/ptree.hpp>
#include <fmt/format.h>

namespace nhcd {

namespace pt = boost::property_tree;

Drive parse_drive(std::string_view s) {
  if (s == "bare") return Drive::Bare;
  if (s == "full-cd") return Drive::FullCd;
  if (s == "cd-only") return Drive::CdOnly;
  fail(ErrorCode::ConfigError, fmt::format("unknown drive '{}'", s));
}

std::string_view to_string(Drive d) {
  switch (d) {
    case Drive::Bare: return "bare";
    case Drive::FullCd: return "full-cd";
    case Drive::CdOnly: return "cd-only";
  }
  return "?";
}

namespace {

double parse_real(std::string_view s) {
  std::string t(s);
  boost::trim(t);
  if (!t.empty() && t.front() == '+') t.erase(0, 1);
  double v = 0.0;
  const auto* end = t.data() + t.size();
  const auto [ptr, ec] = std::from_chars(t.data(), end, v);
  if (t.empty() || ec != std::errc() || ptr != end)
    fail(ErrorCode::ConfigError, fmt::format("not a number: '{}'", s));
  return v;
}

int parse_int(std::string_view s) {
  const double v = parse_real(s);
  if (v != static_cast<int>(v)) fail(ErrorCode::ConfigError, fmt::format("not an integer: '{}'", s));
  return static_cast<int>(v);
}

bool parse_bool(std::string_view s) {
  if (s == "true" || s == "1" || s == "yes") return true;
  if (s == "false" || s == "0" || s == "no") return false;
  fail(ErrorCode::ConfigError, fmt::format("not a boolean: '{}'", s));
}

std::vector<std::string> split(std::string_view text, const char* sep) {
  std::vector<std::string> parts;
  std::string s(text);
  boost::split(parts, s, boost::is_any_of(sep));
  for (auto& p : parts) boost::trim(p);
  return parts;
}

// Suffix after a fixed prefix parsed as an integer, e.g. "eigenstate-2".
std::optional<int> suffix_index(const std::string& value, const std::string& prefix) {
  if (!boost::starts_with(value, prefix)) return std::nullopt;
  return parse_int(value.substr(prefix.size()));
}

const std::map<std::string, std::set<std::string>>& schema() {
  static const std::map<std::string, std::set<std::string>> s = {
      {"experiment", {"name", "model", "drive", "initial_state", "amplitudes", "reference", "cd_source", "metric"}},
      {"grid", {"window", "step", "method"}},
      {"output", {"dir"}},
      {"thresholds",
       {"min_fidelity_u", "min_fidelity_plain", "min_final_p1", "min_final_p2", "min_final_p3",
        "max_norm_deviation", "max_eta"}},
      {"custom", {"matrix", "matrix_rate", "symmetry", "u"}},
  };
  return s;
}

}  // namespace

Complex parse_complex(std::string_view token) {
  std::string s(token);
  boost::trim(s);
  s.erase(std::remove(s.begin(), s.end(), ' '), s.end());
  if (s.empty()) fail(ErrorCode::ConfigError, "empty complex literal");
  if (s.back() != 'i') return {parse_real(s), 0.0};
  const std::string body = s.substr(0, s.size() - 1);
  // the split is the last sign that is not an exponent sign
  std::size_t pos = std::string::npos;
  for (std::size_t k = body.size(); k-- > 1;)
    if ((body[k] == '+' || body[k] == '-') && body[k - 1] != 'e' && body[k - 1] != 'E') {
      pos = k;
      break;
    }
  auto imag_part = [](const std::string& t) {
    if (t.empty() || t == "+") return 1.0;
    if (t == "-") return -1.0;
    return parse_real(t);
  };
  if (pos == std::string::npos) return {0.0, imag_part(body)};
  return {parse_real(body.substr(0, pos)), imag_part(body.substr(pos))};
}

Matrix parse_matrix(std::string_view text) {
  const auto rows = split(text, ";");
  const auto n = static_cast<Eigen::Index>(rows.size());
  Matrix m(n, n);
  for (Eigen::Index i = 0; i < n; ++i) {
    const auto cols = split(rows[i], ",");
    if (static_cast<Eigen::Index>(cols.size()) != n)
      fail(ErrorCode::ConfigError, fmt::format("matrix row {} has {} entries, expected {}", i, cols.size(), n));
    for (Eigen::Index j = 0; j < n; ++j) m(i, j) = parse_complex(cols[j]);
  }
  return m;
}

Window parse_window(std::string_view text) {
  const auto parts = split(text, ",");
  if (parts.size() != 2) fail(ErrorCode::ConfigError, fmt::format("window needs 't0, t1': '{}'", text));
  Window w{parse_real(parts[0]), parse_real(parts[1])};
  if (!(w.t1 > w.t0)) fail(ErrorCode::ConfigError, "window end must exceed start");
  return w;
}

ExperimentConfig parse_config(const std::string& text) {
  pt::ptree tree;
  try {
    std::istringstream in(text);
    pt::read_ini(in, tree);
  } catch (const pt::ini_parser_error& e) {
    fail(ErrorCode::ConfigError, e.what());
  }

  for (const auto& [section, body] : tree) {
    const auto it = schema().find(section);
    if (it == schema().end()) {
      if (!body.data().empty())
        fail(ErrorCode::ConfigError, fmt::format("key '{}' outside any section", section));
      fail(ErrorCode::ConfigError, fmt::format("unknown section [{}]", section));
    }
    for (const auto& kv : body)
      if (!it->second.count(kv.first))
        fail(ErrorCode::ConfigError, fmt::format("unknown key '{}' in [{}]", kv.first, section));
  }

  auto get = [&](const std::string& path) -> std::optional<std::string> {
    if (auto v = tree.get_optional<std::string>(pt::ptree::path_type(path, '/'))) {
      std::string s = *v;
      boost::trim(s);
      return s;
    }
    return std::nullopt;
  };

  ExperimentConfig cfg;
  if (auto v = get("experiment/name")) {
    if (v->empty() || v->find_first_of("/\\") != std::string::npos)
      fail(ErrorCode::ConfigError, "name must be a plain file stem");
    cfg.name = *v;
  }
  const auto model = get("experiment/model");
  if (!model) fail(ErrorCode::ConfigError, "[experiment] model is required");
  static const std::set<std::string> models = {"pseudo-real", "pseudo-complex", "antipseudo", "custom-matrix"};
  if (!models.count(*model)) fail(ErrorCode::ConfigError, fmt::format("unknown model '{}'", *model));
  cfg.model = *model;

  if (auto v = get("experiment/drive")) cfg.drive = parse_drive(*v);

  const std::string init = get("experiment/initial_state").value_or("eigenstate-0");
  if (auto k = suffix_index(init, "eigenstate-")) {
    cfg.initial = InitialKind::Eigenstate;
    cfg.initial_index = *k;
  } else if (auto b = suffix_index(init, "bare-")) {
    cfg.initial = InitialKind::BareState;
    cfg.initial_index = *b - 1;
  } else if (init == "explicit") {
    cfg.initial = InitialKind::Explicit;
  } else {
    fail(ErrorCode::ConfigError, fmt::format("unknown initial_state '{}'", init));
  }
  if (cfg.initial_index < 0) fail(ErrorCode::ConfigError, "initial_state index out of range");

  if (auto v = get("experiment/amplitudes")) {
    if (cfg.initial != InitialKind::Explicit)
      fail(ErrorCode::ConfigError, "amplitudes given but initial_state is not 'explicit'");
    const auto parts = split(*v, ",");
    cfg.amplitudes.resize(static_cast<Eigen::Index>(parts.size()));
    for (std::size_t k = 0; k < parts.size(); ++k) cfg.amplitudes[static_cast<Eigen::Index>(k)] = parse_complex(parts[k]);
  } else if (cfg.initial == InitialKind::Explicit) {
    fail(ErrorCode::ConfigError, "initial_state = explicit needs amplitudes");
  }

  if (auto v = get("experiment/reference")) {
    auto k = suffix_index(*v, "eigenstate-");
    if (!k || *k < 0) fail(ErrorCode::ConfigError, fmt::format("reference must be eigenstate-N, got '{}'", *v));
    cfg.reference_index = *k;
  }
  if (auto v = get("experiment/cd_source")) {
    if (*v == "analytic") cfg.cd_source = CdSource::Analytic;
    else if (*v == "numeric") cfg.cd_source = CdSource::Numeric;
    else fail(ErrorCode::ConfigError, fmt::format("unknown cd_source '{}'", *v));
  }
  if (auto v = get("experiment/metric")) cfg.compute_metric = parse_bool(*v);

  if (auto v = get("grid/window")) cfg.window = parse_window(*v);
  if (auto v = get("grid/step")) {
    cfg.step = parse_real(*v);
    if (!(*cfg.step > 0)) fail(ErrorCode::ConfigError, "step must be positive");
  }
  if (auto v = get("grid/method")) cfg.method = parse_method(*v);
  if (auto v = get("output/dir")) cfg.out_dir = *v;

  if (auto th = tree.get_child_optional("thresholds"))
    for (const auto& kv : *th) {
      const double x = parse_real(kv.second.data());
      if (!(x >= 0)) fail(ErrorCode::ConfigError, fmt::format("threshold {} must be >= 0", kv.first));
      cfg.thresholds[kv.first] = x;
    }

  const bool custom = cfg.model == "custom-matrix";
  if (tree.get_child_optional("custom") && !custom)
    fail(ErrorCode::ConfigError, "[custom] section only applies to model = custom-matrix");
  if (custom) {
    const auto m = get("custom/matrix");
    if (!m) fail(ErrorCode::ConfigError, "custom-matrix needs [custom] matrix");
    cfg.custom_matrix = parse_matrix(*m);
    const auto n = cfg.custom_matrix.rows();
    cfg.custom_rate = Matrix::Zero(n, n);
    if (auto r = get("custom/matrix_rate")) {
      cfg.custom_rate = parse_matrix(*r);
      if (cfg.custom_rate.rows() != n) fail(ErrorCode::ConfigError, "matrix_rate shape differs from matrix");
    }
    const std::string sym = get("custom/symmetry").value_or("none");
    if (sym != "none") {
      SymmetrySpec spec;
      if (sym == "pseudo") spec.kind = SymmetryKind::Pseudo;
      else if (sym == "antipseudo") spec.kind = SymmetryKind::Antipseudo;
      else fail(ErrorCode::ConfigError, fmt::format("unknown symmetry '{}'", sym));
      const auto u = get("custom/u");
      if (!u) fail(ErrorCode::ConfigError, "symmetry needs [custom] u");
      spec.U = parse_matrix(*u);
      if (spec.U.rows() != n) fail(ErrorCode::ConfigError, "u shape differs from matrix");
      cfg.custom_symmetry = spec;
    } else if (get("custom/u")) {
      fail(ErrorCode::ConfigError, "u given without symmetry");
    }
    if (!cfg.window) fail(ErrorCode::ConfigError, "custom-matrix needs [grid] window");
    if (cfg.drive != Drive::Bare && cfg.cd_source == CdSource::Analytic) cfg.cd_source = CdSource::Numeric;
    if (cfg.initial == InitialKind::Explicit && cfg.amplitudes.size() != n)
      fail(ErrorCode::ConfigError, "amplitudes length differs from matrix dimension");
  } else if (cfg.initial == InitialKind::Explicit && cfg.amplitudes.size() != 3) {
    fail(ErrorCode::ConfigError, "model runs need 3 amplitudes");
  }
  return cfg;
}

ExperimentConfig load_config(const std::string& path) {
  std::ifstream in(path);
  if (!in) fail(ErrorCode::ConfigError, fmt::format("cannot read config '{}'", path));
  std::stringstream ss;
  ss << in.rdbuf();
  return parse_config(ss.str());
}

}  // namespace nhcd
