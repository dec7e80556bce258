// Copyright 2026 The nhcd Authors.
// SPDX-License-Identifier: Apache-2.0

#include "nhcd/plot.hpp"

#include <fstream>

#include <boost/algorithm/string/predicate.hpp>
#include <fmt/format.h>

#include "nhcd/error.hpp"

namespace nhcd {

namespace fs = std::filesystem;

CsvKind classify_csv(const fs::path& path) {
  std::ifstream in(path);
  std::string header;
  if (!in || !std::getline(in, header))
    fail(ErrorCode::SchemaError, fmt::format("cannot read CSV header of '{}'", path.string()));
  using boost::algorithm::ends_with;
  using boost::algorithm::starts_with;
  if (starts_with(header, "t,re_c1,im_c1") && ends_with(header, ",norm,fidelity_u,fidelity_plain,alpha,beta"))
    return CsvKind::Trajectory;
  if (starts_with(header, "t,") && ends_with(header, ",h_norm")) return CsvKind::Schedule;
  if (starts_with(header, "ratio,re_e1,im_e1") && ends_with(header, ",flag")) return CsvKind::Sweep;
  fail(ErrorCode::SchemaError, fmt::format("'{}' does not match any known column schema", path.string()));
}

PlotStyle parse_plot_style(std::string_view s) {
  if (s == "grid") return PlotStyle::Grid;
  if (s == "stacked") return PlotStyle::Stacked;
  fail(ErrorCode::ConfigError, fmt::format("unknown plot style '{}'", s));
}

namespace {

std::string py_quote(const std::string& raw) {
  std::string q = "'";
  for (char c : raw) {
    if (c == '\\' || c == '\'') q += '\\';
    q += c;
  }
  return q + "'";
}

std::string py_list(const std::vector<fs::path>& paths) {
  std::string s = "[";
  for (const auto& p : paths) s += py_quote(p.string()) + ", ";
  return s + "]";
}

}  // namespace

std::vector<PlotPanel> plot_layout(const std::vector<fs::path>& csvs, PlotStyle style) {
  if (csvs.empty()) fail(ErrorCode::SchemaError, "no CSV files given");
  std::vector<fs::path> traj, sched, sweep;
  for (const auto& p : csvs) {
    switch (classify_csv(p)) {
      case CsvKind::Trajectory: {
        traj.push_back(p);
        const fs::path sibling = p.parent_path() / (p.stem().string() + "_schedule.csv");
        if (sched.empty() && fs::exists(sibling) && classify_csv(sibling) == CsvKind::Schedule)
          sched.push_back(sibling);
        break;
      }
      case CsvKind::Schedule: sched.insert(sched.begin(), p); break;
      case CsvKind::Sweep: sweep.push_back(p); break;
    }
  }

  std::vector<PlotPanel> panels;
  for (const auto& p : traj) panels.push_back({"populations", {p}});
  if (!sweep.empty()) {
    panels.push_back({"sweep-re", sweep});
    panels.push_back({"sweep-im", sweep});
  }
  const int used = static_cast<int>(panels.size()) + (sched.empty() ? 0 : 1);
  if (!traj.empty() && (style == PlotStyle::Stacked || used < 4)) panels.push_back({"fidelity", traj});
  if (!sched.empty()) panels.push_back({"schedule", {sched.front()}});
  return panels;
}

std::string plot_script(const std::vector<fs::path>& csvs, PlotStyle style, const fs::path& image) {
  const auto panels = plot_layout(csvs, style);
  std::string panel_text = "[\n";
  for (const auto& p : panels) panel_text += fmt::format("    ({}, {}),\n", py_quote(p.kind), py_list(p.csvs));
  panel_text += "]";

  std::string s;
  s += "#!/usr/bin/env python3\n";
  s += "# Generated by nhcd plot. Time axis in units of 1/Omega_0; schedule panels show the\n";
  s += "# pulse functions in units of Omega_0 (their natural scale, no rescaling).\n";
  s += "import csv\nimport math\nimport matplotlib\nmatplotlib.use('Agg')\nimport matplotlib.pyplot as plt\n\n";
  s += "def load(path):\n    with open(path) as f:\n        rows = list(csv.DictReader(f))\n";
  s += "    return {k: [r[k] if k == 'flag' else float(r[k]) for r in rows] for k in rows[0]}\n\n";
  s += fmt::format("PANELS = {}\nIMAGE = {}\nSTYLE = {}\n\n", panel_text, py_quote(image.string()),
                   py_quote(style == PlotStyle::Grid ? "grid" : "stacked"));
  s += R"PY(panels = PANELS
if STYLE == 'grid' and len(panels) <= 4:
    fig, axes = plt.subplots(2, 2, figsize=(10, 8))
    axes = list(axes.flat)
else:
    fig, axes = plt.subplots(len(panels), 1, figsize=(7, 3 * len(panels)))
    axes = list(axes) if len(panels) > 1 else [axes]

styles = [('-', 'tab:red'), ('--', 'tab:blue'), (':', 'black')]
for ax, label in zip(axes, 'abcdefghijklmnop'):
    ax.set_title('(%s)' % label, loc='left')

for ax, (kind, paths) in zip(axes, panels):
    if kind == 'populations':
        path = paths[0]
        d = load(path)
        k = 1
        while 'p%d' % k in d:
            ls, c = styles[(k - 1) % 3]
            ax.plot(d['t'], d['p%d' % k], ls, color=c, label='P%d' % k)
            k += 1
        ax.set_xlabel('t')
        ax.set_ylabel('population')
        ax.legend(title=path.split('/')[-1])
    elif kind == 'fidelity':
        for p in paths:
            d = load(p)
            name = p.split('/')[-1]
            if not all(math.isnan(x) for x in d['fidelity_u']):
                ax.plot(d['t'], d['fidelity_u'], label=name + ' |<psi|U|psi0>|')
            ax.plot(d['t'], d['fidelity_plain'], '--', label=name + ' overlap')
        ax.set_xlabel('t')
        ax.set_ylabel('fidelity')
        ax.legend(fontsize='small')
    elif kind == 'schedule':
        d = load(paths[0])
        for key in d:
            if key in ('t', 'h_norm') or key.startswith('d_') or key in ('theta', 'phi', 'Omega'):
                continue
            ax.plot(d['t'], d[key], label=key)
        ax.set_xlabel('t')
        ax.legend()
    elif kind in ('sweep-re', 'sweep-im'):
        part = 're' if kind == 'sweep-re' else 'im'
        for p in paths:
            d = load(p)
            k = 1
            while '%s_e%d' % (part, k) in d:
                ax.plot(d['ratio'], d['%s_e%d' % (part, k)], '.', markersize=2, label='E%d' % k)
                k += 1
        ax.set_xlabel('ratio')
        ax.set_ylabel('Re E' if part == 're' else 'Im E')
        ax.legend()

for ax in axes[len(panels):]:
    ax.axis('off')
fig.tight_layout()
fig.savefig(IMAGE, dpi=150)
)PY";
  return s;
}

void emit_plots(const std::vector<fs::path>& csvs, PlotStyle style, const fs::path& script, const fs::path& image) {
  const std::string text = plot_script(csvs, style, image);
  if (script.has_parent_path()) fs::create_directories(script.parent_path());
  std::ofstream out(script);
  if (!out) fail(ErrorCode::SchemaError, fmt::format("cannot write '{}'", script.string()));
  out << text;
}

}  // namespace nhcd
