// SPDX-License-Identifier: Apache-2.0
//
// bellsim: command-line front end for the Bell-experiment simulation library.
// Every subcommand is deterministic: fixed flags and seed give byte-identical
// output regardless of the internal worker count. Numbers are printed with 12
// significant digits, CSV with a header row and LF line endings, JSON as one
// top-level {command, params, results} object.

#include <CLI11.hpp>

#include <cstdio>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "bell/angle.hpp"
#include "bell/chsh.hpp"
#include "bell/distribution.hpp"
#include "bell/experiment.hpp"
#include "bell/toymodels.hpp"
#include "bell/transform.hpp"
#include "bell/trianglegame.hpp"

namespace {

using bell::Angle;

std::string fmt(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.12g", v);
  return buf;
}

std::string fmt(std::uint64_t v) { return std::to_string(v); }
std::string fmt(int v) { return std::to_string(v); }

// Tiny JSON emitter with insertion-ordered keys; all numbers go through the
// same 12-significant-digit formatting as the CSV output.
class JsonObject {
 public:
  JsonObject& number(const std::string& key, double v) { return raw(key, fmt(v)); }
  JsonObject& number(const std::string& key, std::uint64_t v) { return raw(key, fmt(v)); }
  JsonObject& number(const std::string& key, int v) { return raw(key, fmt(v)); }
  JsonObject& boolean(const std::string& key, bool v) { return raw(key, v ? "true" : "false"); }
  JsonObject& null(const std::string& key) { return raw(key, "null"); }
  JsonObject& text(const std::string& key, const std::string& v) {
    return raw(key, "\"" + v + "\"");
  }
  JsonObject& object(const std::string& key, const JsonObject& v) { return raw(key, v.str()); }
  JsonObject& raw(const std::string& key, const std::string& v) {
    if (!body_.empty()) body_ += ",";
    body_ += "\"" + key + "\":" + v;
    return *this;
  }
  std::string str() const { return "{" + body_ + "}"; }

 private:
  std::string body_;
};

template <class T>
std::string json_array(const std::vector<T>& values) {
  std::string out = "[";
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (i) out += ",";
    out += fmt(values[i]);
  }
  return out + "]";
}

struct CommonOpts {
  std::string format = "csv";
  std::uint64_t seed = 0;
  unsigned threads = 1;
  bool degrees = false;

  Angle angle(double value) const {
    return bell::wrap_angle(degrees ? value * bell::kPi / 180.0 : value);
  }
};

void add_common(CLI::App* cmd, CommonOpts& opts, const std::string& default_format) {
  opts.format = default_format;
  cmd->add_option("--format", opts.format, "Output format")
      ->check(CLI::IsMember({"csv", "json"}));
  cmd->add_option("--seed", opts.seed, "Random seed (default 0)");
  cmd->add_option("--threads", opts.threads, "Worker threads; does not affect output")
      ->check(CLI::Range(1u, 256u));
  cmd->add_flag("--degrees", opts.degrees, "Interpret angle arguments as degrees");
}

void check_probability(double p, const std::string& name) {
  if (!(p >= 0.0 && p <= 1.0)) {
    throw std::invalid_argument(name + " must lie in [0, 1]");
  }
}

JsonObject estimate_json(const bell::CorrelationEstimate& e) {
  JsonObject o;
  o.number("mean", e.mean).number("stderr", e.std_error).number("n", e.n);
  return o;
}

// Jobs launched from one seed are spaced 2^32 stream indices apart so that
// their per-chunk substreams can never collide.
constexpr std::uint64_t kJobStride = std::uint64_t{1} << 32;

int run_transform(const CommonOpts& opts, double deltabar_in, std::uint64_t points,
                  const std::string& law_name) {
  const Angle deltabar = opts.angle(deltabar_in);
  const bell::CircleLaw law =
      law_name == "linear" ? bell::linear_transform : bell::frame_transform;
  std::vector<double> lambdas, values;
  lambdas.reserve(points);
  values.reserve(points);
  for (std::uint64_t i = 0; i < points; ++i) {
    const Angle lambda(-bell::kPi +
                       bell::kTwoPi * static_cast<double>(i) / static_cast<double>(points));
    lambdas.push_back(lambda.radians());
    values.push_back(law(lambda, deltabar).radians());
  }
  if (opts.format == "csv") {
    std::string out = "lambda,l_value\n";
    for (std::size_t i = 0; i < lambdas.size(); ++i) {
      out += fmt(lambdas[i]) + "," + fmt(values[i]) + "\n";
    }
    std::fputs(out.c_str(), stdout);
  } else {
    JsonObject params, results, root;
    params.number("deltabar", deltabar.radians()).number("points", points).text("law", law_name);
    results.raw("lambda", json_array(lambdas)).raw("l_value", json_array(values));
    root.text("command", "transform").object("params", params).object("results", results);
    std::puts(root.str().c_str());
  }
  return 0;
}

int run_sample(const CommonOpts& opts, std::uint64_t samples, std::uint64_t stream_index) {
  const auto draws = bell::sample_pointer({opts.seed, stream_index}, samples);
  if (opts.format == "csv") {
    std::string out = "lambda\n";
    for (const auto& d : draws) out += fmt(d.lambda.radians()) + "\n";
    std::fputs(out.c_str(), stdout);
  } else {
    std::vector<double> values;
    values.reserve(draws.size());
    for (const auto& d : draws) values.push_back(d.lambda.radians());
    JsonObject params, results, root;
    params.number("samples", samples).number("seed", opts.seed).number("stream", stream_index);
    results.raw("lambda", json_array(values));
    root.text("command", "sample").object("params", params).object("results", results);
    std::puts(root.str().c_str());
  }
  return 0;
}

std::string correlate_row(const bell::ExperimentSetting& setting,
                          const bell::CorrelationEstimate& mc) {
  return fmt(setting.deltabar().radians()) + "," + fmt(bell::exact_correlation(setting)) + "," +
         fmt(mc.mean) + "," + fmt(mc.std_error) + "," + fmt(mc.n) + "\n";
}

int run_correlate(const CommonOpts& opts, double delta_in, double phi_in, std::uint64_t samples) {
  const bell::ExperimentSetting setting{opts.angle(delta_in), opts.angle(phi_in)};
  const auto mc = bell::mc_correlation(setting, samples, {opts.seed, 0}, opts.threads);
  if (opts.format == "csv") {
    std::fputs(("deltabar,e_exact,e_mc,stderr,n\n" + correlate_row(setting, mc)).c_str(), stdout);
  } else {
    JsonObject params, results, root;
    params.number("delta", setting.delta.radians())
        .number("phi", setting.phi.radians())
        .number("samples", samples)
        .number("seed", opts.seed);
    results.number("deltabar", setting.deltabar().radians())
        .number("e_exact", bell::exact_correlation(setting))
        .number("e_mc", mc.mean)
        .number("stderr", mc.std_error)
        .number("n", mc.n);
    root.text("command", "correlate").object("params", params).object("results", results);
    std::puts(root.str().c_str());
  }
  return 0;
}

int run_scan(const CommonOpts& opts, std::uint64_t points, double phi_in, std::uint64_t samples) {
  const Angle phi = opts.angle(phi_in);
  std::string csv = "deltabar,e_exact,e_mc,stderr,n\n";
  std::string json_rows;
  for (std::uint64_t i = 0; i < points; ++i) {
    const Angle deltabar(-bell::kPi +
                         bell::kTwoPi * static_cast<double>(i) / static_cast<double>(points));
    const bell::ExperimentSetting setting{Angle(deltabar.radians() + phi.radians()), phi};
    const auto mc =
        bell::mc_correlation(setting, samples, {opts.seed, i * kJobStride}, opts.threads);
    if (opts.format == "csv") {
      csv += correlate_row(setting, mc);
    } else {
      JsonObject row;
      row.number("deltabar", setting.deltabar().radians())
          .number("e_exact", bell::exact_correlation(setting))
          .number("e_mc", mc.mean)
          .number("stderr", mc.std_error)
          .number("n", mc.n);
      if (!json_rows.empty()) json_rows += ",";
      json_rows += row.str();
    }
  }
  if (opts.format == "csv") {
    std::fputs(csv.c_str(), stdout);
  } else {
    JsonObject params, root;
    params.number("points", points)
        .number("phi", phi.radians())
        .number("samples", samples)
        .number("seed", opts.seed);
    root.text("command", "scan").object("params", params).raw("results", "[" + json_rows + "]");
    std::puts(root.str().c_str());
  }
  return 0;
}

int run_chsh(const CommonOpts& opts, double d1, double d2, double delta, double phi) {
  const bell::ChshSettings settings{opts.angle(d1), opts.angle(d2), opts.angle(delta),
                                    opts.angle(phi)};
  const double statistic = bell::model_chsh(settings);
  if (opts.format == "csv") {
    std::string out = "d1,d2,delta,phi,statistic\n";
    out += fmt(settings.delta1.radians()) + "," + fmt(settings.delta2.radians()) + "," +
           fmt(settings.delta.radians()) + "," + fmt(settings.phi.radians()) + "," +
           fmt(statistic) + "\n";
    std::fputs(out.c_str(), stdout);
  } else {
    const double p = settings.phi.radians();
    const std::vector<double> correlations = {
        bell::exact_correlation({Angle(settings.delta1.radians() - p), Angle(0.0)}),
        bell::exact_correlation({Angle(settings.delta2.radians() - p), Angle(0.0)}),
        bell::exact_correlation(
            {Angle(settings.delta1.radians() - settings.delta.radians() - p), Angle(0.0)}),
        bell::exact_correlation(
            {Angle(settings.delta2.radians() - settings.delta.radians() - p), Angle(0.0)})};
    JsonObject params, results, root;
    params.number("d1", settings.delta1.radians())
        .number("d2", settings.delta2.radians())
        .number("delta", settings.delta.radians())
        .number("phi", settings.phi.radians());
    results.number("statistic", statistic).raw("correlations", json_array(correlations));
    root.text("command", "chsh").object("params", params).object("results", results);
    std::puts(root.str().c_str());
  }
  return 0;
}

int run_holonomy(const CommonOpts& opts, double d1, double d2, double dd, std::uint64_t grid,
                 const std::string& law_name) {
  const bell::CycleParams params{opts.angle(d1), opts.angle(d2), opts.angle(dd)};
  const bell::CircleLaw law =
      law_name == "linear" ? bell::linear_transform : bell::frame_transform;
  const auto profile = bell::geometric_phase_profile(params, grid, law);
  if (opts.format == "csv") {
    std::string out = "lambda,defect\n";
    for (const auto& [lambda, defect] : profile.points) {
      out += fmt(lambda) + "," + fmt(defect) + "\n";
    }
    std::fputs(out.c_str(), stdout);
  } else {
    std::vector<double> lambdas, defects;
    for (const auto& [lambda, defect] : profile.points) {
      lambdas.push_back(lambda);
      defects.push_back(defect);
    }
    JsonObject jparams, results, root;
    jparams.number("d1", params.d1.radians())
        .number("d2", params.d2.radians())
        .number("dd", params.dd.radians())
        .number("grid", grid)
        .text("law", law_name);
    results.number("max_defect", profile.max_defect)
        .raw("lambda", json_array(lambdas))
        .raw("defect", json_array(defects));
    root.text("command", "holonomy").object("params", jparams).object("results", results);
    std::puts(root.str().c_str());
  }
  return 0;
}

int run_perconfig(const CommonOpts& opts, double d1, double d2, double delta, double phi) {
  const bell::ChshSettings settings{opts.angle(d1), opts.angle(d2), opts.angle(delta),
                                    opts.angle(phi)};
  const auto weights = bell::per_config_histogram(settings);
  const double mean = bell::per_config_mean(settings);
  if (opts.format == "csv") {
    std::string out = "value,weight\n";
    for (int i = 0; i < 5; ++i) {
      out += fmt(2 * i - 4) + "," + fmt(weights[static_cast<std::size_t>(i)]) + "\n";
    }
    std::fputs(out.c_str(), stdout);
  } else {
    JsonObject params, results, root;
    params.number("d1", settings.delta1.radians())
        .number("d2", settings.delta2.radians())
        .number("delta", settings.delta.radians())
        .number("phi", settings.phi.radians());
    results.raw("values", "[-4,-2,0,2,4]")
        .raw("weights", json_array(std::vector<double>(weights.begin(), weights.end())))
        .number("mean", mean);
    root.text("command", "perconfig").object("params", params).object("results", results);
    std::puts(root.str().c_str());
  }
  return 0;
}

int run_toy(const CommonOpts& opts, int table, const std::vector<double>& p,
            std::string interpretation) {
  if (p.size() != 4) {
    throw std::invalid_argument("--p expects four comma-separated probabilities");
  }
  for (double v : p) check_probability(v, "--p");
  if (interpretation.empty()) {
    interpretation = table == 1 ? "two-input" : "single-input";
  }
  const bell::CondProbTable t =
      table == 1 ? bell::table1(p[0], p[1], p[2], p[3]) : bell::table2(p[0], p[1], p[2], p[3]);
  const auto reading = interpretation == "two-input" ? bell::TableInterpretation::kTwoInput
                                                     : bell::TableInterpretation::kSingleInput;
  const auto verdict = bell::local_feasibility(t, reading);
  const Eigen::Vector4d e = bell::row_correlations(t);

  if (opts.format == "csv") {
    std::string out = "key,value\n";
    out += "feasible," + std::string(verdict.feasible ? "1" : "0") + "\n";
    out += "no_signaling," + std::string(verdict.no_signaling ? "1" : "0") + "\n";
    if (verdict.certificate) {
      out += "certificate_value," + fmt(verdict.certificate->value) + "\n";
    }
    std::fputs(out.c_str(), stdout);
  } else {
    JsonObject params, results, root;
    params.number("table", table).raw("p", json_array(p)).text("interpretation", interpretation);
    results.boolean("feasible", verdict.feasible)
        .boolean("no_signaling", verdict.no_signaling)
        .raw("row_correlations", json_array(std::vector<double>{e(0), e(1), e(2), e(3)}));
    if (verdict.certificate) {
      JsonObject cert;
      cert.raw("signs", json_array(std::vector<int>(verdict.certificate->signs.begin(),
                                                    verdict.certificate->signs.end())))
          .number("value", verdict.certificate->value);
      results.object("certificate", cert);
    } else {
      results.null("certificate");
    }
    if (verdict.strategy_weights) {
      results.raw("strategy_weights",
                  json_array(std::vector<double>(verdict.strategy_weights->begin(),
                                                 verdict.strategy_weights->end())));
    }
    if (verdict.model) {
      JsonObject model;
      model.raw("weights", json_array(verdict.model->weights));
      std::string cells = "[";
      for (std::size_t k = 0; k < verdict.model->outcome_cells.size(); ++k) {
        if (k) cells += ",";
        cells += json_array(std::vector<int>(verdict.model->outcome_cells[k].begin(),
                                             verdict.model->outcome_cells[k].end()));
      }
      model.raw("outcome_cells", cells + "]");
      results.object("model", model);
    }
    root.text("command", "toy").object("params", params).object("results", results);
    std::puts(root.str().c_str());
  }
  return 0;
}

Eigen::Vector3d parse_vec3(const std::vector<double>& v, const std::string& name) {
  if (v.size() != 3) {
    throw std::invalid_argument(name + " expects three comma-separated components");
  }
  return {v[0], v[1], v[2]};
}

int run_triangle(const CommonOpts& opts, const std::string& mode, std::uint64_t samples,
                 double angle_ab, double angle_ac, const std::vector<double>& va,
                 const std::vector<double>& vb, const std::vector<double>& vc,
                 const std::vector<double>& ref_angles) {
  bell::CorrelationEstimate e_ab, e_ac, e_bc;
  double slack = 0.0, holonomy = 0.0;
  JsonObject params;
  params.text("mode", mode).number("samples", samples).number("seed", opts.seed);

  if (mode == "flat") {
    const auto result = bell::flat_game(opts.angle(angle_ab), opts.angle(angle_ac), samples,
                                        {opts.seed, 0}, opts.threads);
    e_ab = result.e_ab;
    e_ac = result.e_ac;
    e_bc = result.e_bc;
    slack = result.slack;
    params.number("angle_ab", opts.angle(angle_ab).radians())
        .number("angle_ac", opts.angle(angle_ac).radians());
  } else {
    if (ref_angles.size() != 3) {
      throw std::invalid_argument("--ref-angles expects three comma-separated angles");
    }
    const bell::SphericalTriangle tri(parse_vec3(va, "--va"), parse_vec3(vb, "--vb"),
                                      parse_vec3(vc, "--vc"));
    const std::array<Angle, 3> refs = {opts.angle(ref_angles[0]), opts.angle(ref_angles[1]),
                                       opts.angle(ref_angles[2])};
    const auto result = bell::spherical_game(tri, refs, samples, {opts.seed, 0}, opts.threads);
    e_ab = result.e_ab;
    e_ac = result.e_ac;
    e_bc = result.e_bc;
    slack = result.slack;
    holonomy = result.holonomy;
    params.raw("va", json_array(va)).raw("vb", json_array(vb)).raw("vc", json_array(vc));
    params.raw("ref_angles", json_array(std::vector<double>{refs[0].radians(), refs[1].radians(),
                                                            refs[2].radians()}));
  }

  if (opts.format == "csv") {
    std::string out = "e_ab,stderr_ab,e_ac,stderr_ac,e_bc,stderr_bc,slack,holonomy,n\n";
    out += fmt(e_ab.mean) + "," + fmt(e_ab.std_error) + "," + fmt(e_ac.mean) + "," +
           fmt(e_ac.std_error) + "," + fmt(e_bc.mean) + "," + fmt(e_bc.std_error) + "," +
           fmt(slack) + "," + fmt(holonomy) + "," + fmt(samples) + "\n";
    std::fputs(out.c_str(), stdout);
  } else {
    JsonObject results, root;
    results.object("e_ab", estimate_json(e_ab))
        .object("e_ac", estimate_json(e_ac))
        .object("e_bc", estimate_json(e_bc))
        .number("slack", slack)
        .number("holonomy", holonomy);
    root.text("command", "triangle").object("params", params).object("results", results);
    std::puts(root.str().c_str());
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Local hidden-variable simulation of the Bell polarization experiment"};
  app.require_subcommand(1);

  // transform
  CommonOpts transform_opts;
  double transform_deltabar = 0.0;
  std::uint64_t transform_points = 512;
  std::string transform_law = "model";
  auto* cmd_transform =
      app.add_subcommand("transform", "Emit the frame-transformation curve lambda -> L(lambda)");
  cmd_transform->add_option("--deltabar", transform_deltabar, "Effective relative orientation")
      ->required();
  cmd_transform->add_option("--points", transform_points, "Grid size")
      ->check(CLI::Range(1, 1 << 24));
  cmd_transform->add_option("--law", transform_law, "Transformation law")
      ->check(CLI::IsMember({"model", "linear"}));
  add_common(cmd_transform, transform_opts, "csv");

  // sample
  CommonOpts sample_opts;
  std::uint64_t sample_n = 1;
  std::uint64_t sample_stream = 0;
  auto* cmd_sample = app.add_subcommand("sample", "Draw hidden-pointer coordinates");
  cmd_sample->add_option("--samples", sample_n, "Number of draws")->check(CLI::Range(1, 1 << 26));
  cmd_sample->add_option("--stream", sample_stream, "Stream index");
  add_common(cmd_sample, sample_opts, "csv");

  // correlate
  CommonOpts correlate_opts;
  double correlate_delta = 0.0, correlate_phi = 0.0;
  std::uint64_t correlate_n = 100000;
  auto* cmd_correlate =
      app.add_subcommand("correlate", "Exact and Monte Carlo correlation at one setting");
  cmd_correlate->add_option("--delta", correlate_delta, "Relative detector orientation")
      ->required();
  cmd_correlate->add_option("--phi", correlate_phi, "Source phase");
  cmd_correlate->add_option("--samples", correlate_n, "Monte Carlo draws")
      ->check(CLI::PositiveNumber);
  add_common(cmd_correlate, correlate_opts, "csv");

  // scan
  CommonOpts scan_opts;
  std::uint64_t scan_points = 64, scan_n = 100000;
  double scan_phi = 0.0;
  auto* cmd_scan = app.add_subcommand("scan", "Correlation sweep over deltabar");
  cmd_scan->add_option("--points", scan_points, "Grid size")->check(CLI::Range(1, 1 << 20));
  cmd_scan->add_option("--phi", scan_phi, "Source phase");
  cmd_scan->add_option("--samples", scan_n, "Monte Carlo draws per point")
      ->check(CLI::PositiveNumber);
  add_common(cmd_scan, scan_opts, "csv");

  // chsh
  CommonOpts chsh_opts;
  double chsh_d1 = 0.0, chsh_d2 = 0.0, chsh_delta = 0.0, chsh_phi = 0.0;
  auto* cmd_chsh = app.add_subcommand("chsh", "CHSH statistic of the model");
  cmd_chsh->add_option("--d1", chsh_d1, "First relative orientation")->required();
  cmd_chsh->add_option("--d2", chsh_d2, "Second relative orientation")->required();
  cmd_chsh->add_option("--delta", chsh_delta, "Orientation shift of detector A")->required();
  cmd_chsh->add_option("--phi", chsh_phi, "Source phase");
  add_common(cmd_chsh, chsh_opts, "json");

  // holonomy
  CommonOpts holonomy_opts;
  double hol_d1 = 0.0, hol_d2 = 0.0, hol_dd = 0.0;
  std::uint64_t hol_grid = 4096;
  std::string hol_law = "model";
  auto* cmd_holonomy =
      app.add_subcommand("holonomy", "Defect of the cyclic frame-transformation sequence");
  cmd_holonomy->add_option("--d1", hol_d1, "First cycle parameter")->required();
  cmd_holonomy->add_option("--d2", hol_d2, "Second cycle parameter")->required();
  cmd_holonomy->add_option("--dd", hol_dd, "Shift parameter")->required();
  cmd_holonomy->add_option("--grid", hol_grid, "Grid size")->check(CLI::Range(2, 1 << 24));
  cmd_holonomy->add_option("--law", hol_law, "Transformation law")
      ->check(CLI::IsMember({"model", "linear"}));
  add_common(cmd_holonomy, holonomy_opts, "csv");

  // perconfig
  CommonOpts perconfig_opts;
  double pc_d1 = 0.0, pc_d2 = 0.0, pc_delta = 0.0, pc_phi = 0.0;
  auto* cmd_perconfig = app.add_subcommand(
      "perconfig", "Density-weighted histogram of the per-configuration CHSH combination");
  cmd_perconfig->add_option("--d1", pc_d1, "First relative orientation")->required();
  cmd_perconfig->add_option("--d2", pc_d2, "Second relative orientation")->required();
  cmd_perconfig->add_option("--delta", pc_delta, "Orientation shift of detector A")->required();
  cmd_perconfig->add_option("--phi", pc_phi, "Source phase");
  add_common(cmd_perconfig, perconfig_opts, "csv");

  // toy
  CommonOpts toy_opts;
  int toy_table = 1;
  std::vector<double> toy_p;
  std::string toy_interpretation;
  auto* cmd_toy = app.add_subcommand("toy", "Local-feasibility verdict for the toy tables");
  cmd_toy->add_option("--table", toy_table, "Table number")->check(CLI::IsMember({1, 2}));
  cmd_toy->add_option("--p", toy_p, "Row probabilities p1,p2,p3,p4")->required()->delimiter(',');
  cmd_toy->add_option("--interpretation", toy_interpretation, "Row reading")
      ->check(CLI::IsMember({"two-input", "single-input"}));
  add_common(cmd_toy, toy_opts, "json");

  // triangle
  CommonOpts triangle_opts;
  std::string tri_mode = "flat";
  std::uint64_t tri_n = 100000;
  double tri_ab = 0.0, tri_ac = 0.0;
  std::vector<double> tri_va = {1.0, 0.0, 0.0}, tri_vb = {0.0, 1.0, 0.0}, tri_vc = {0.0, 0.0, 1.0};
  std::vector<double> tri_refs = {0.0, 0.0, 0.0};
  auto* cmd_triangle = app.add_subcommand("triangle", "Random triangle games");
  cmd_triangle->add_option("--mode", tri_mode, "Game variant")
      ->check(CLI::IsMember({"flat", "sphere"}));
  cmd_triangle->add_option("--n,--samples", tri_n, "Monte Carlo draws")
      ->check(CLI::PositiveNumber);
  cmd_triangle->add_option("--angle-ab", tri_ab, "Reference angle of b (flat mode)");
  cmd_triangle->add_option("--angle-ac", tri_ac, "Reference angle of c (flat mode)");
  cmd_triangle->add_option("--va", tri_va, "Vertex A x,y,z (sphere mode)")->delimiter(',');
  cmd_triangle->add_option("--vb", tri_vb, "Vertex B x,y,z (sphere mode)")->delimiter(',');
  cmd_triangle->add_option("--vc", tri_vc, "Vertex C x,y,z (sphere mode)")->delimiter(',');
  cmd_triangle->add_option("--ref-angles", tri_refs, "Reference angles r1,r2,r3 (sphere mode)")
      ->delimiter(',');
  add_common(cmd_triangle, triangle_opts, "json");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << e.what() << "\n";
    return 2;
  }

  try {
    if (*cmd_transform) {
      return run_transform(transform_opts, transform_deltabar, transform_points, transform_law);
    }
    if (*cmd_sample) return run_sample(sample_opts, sample_n, sample_stream);
    if (*cmd_correlate) {
      return run_correlate(correlate_opts, correlate_delta, correlate_phi, correlate_n);
    }
    if (*cmd_scan) return run_scan(scan_opts, scan_points, scan_phi, scan_n);
    if (*cmd_chsh) return run_chsh(chsh_opts, chsh_d1, chsh_d2, chsh_delta, chsh_phi);
    if (*cmd_holonomy) {
      return run_holonomy(holonomy_opts, hol_d1, hol_d2, hol_dd, hol_grid, hol_law);
    }
    if (*cmd_perconfig) return run_perconfig(perconfig_opts, pc_d1, pc_d2, pc_delta, pc_phi);
    if (*cmd_toy) return run_toy(toy_opts, toy_table, toy_p, toy_interpretation);
    if (*cmd_triangle) {
      return run_triangle(triangle_opts, tri_mode, tri_n, tri_ab, tri_ac, tri_va, tri_vb, tri_vc,
                          tri_refs);
    }
    std::cerr << "no subcommand selected\n";
    return 2;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::domain_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 1;
  }
}
