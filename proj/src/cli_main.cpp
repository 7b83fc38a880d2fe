#include "seeley/cli.hpp"

#include <chrono>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <memory>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "seeley/coefficients.hpp"
#include "seeley/geometry.hpp"
#include "seeley/jets.hpp"
#include "seeley/quadrant.hpp"
#include "seeley/smoothstep.hpp"
#include "seeley/testfunctions.hpp"
#include "seeley/verify.hpp"

namespace seeley {

namespace {

std::string format17(double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

nlohmann::json json_number(double v) {
  if (std::isfinite(v)) return v;
  return v < 0.0 ? "-inf" : "inf";
}

nlohmann::json frame_json(const OperatorConfig& frame) {
  nlohmann::json j;
  j["a"] = json_number(frame.a);
  j["tau"] = frame.tau;
  j["b"] = frame.b;
  j["upsilon"] = frame.upsilon;
  if (frame.finite_a()) {
    j["kappa"] = frame.kappa;
    j["kappa_prime"] = frame.kappa_prime;
  }
  j["k"] = frame.k;
  j["order_cap"] = frame.order_cap;
  return j;
}

nlohmann::json grid_json(const GridSpec& grid) {
  nlohmann::json arr = nlohmann::json::array();
  for (const auto& ax : grid.axes) {
    arr.push_back({{"lo", ax.lo}, {"hi", ax.hi}, {"count", ax.count}});
  }
  return arr;
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream file(path, std::ios::binary);
  if (!file) {
    throw std::runtime_error("cannot open output file '" + path + "'");
  }
  file << text;
  file.flush();
  if (!file) {
    throw std::runtime_error("failed while writing '" + path + "'");
  }
}

std::vector<std::string> value_columns(int value_dim, int jets) {
  std::vector<std::string> cols;
  for (int ell = 0; ell <= jets; ++ell) {
    const std::string base = ell == 0 ? "value" : "d" + std::to_string(ell);
    if (value_dim == 1) {
      cols.push_back(base);
    } else {
      for (int c = 0; c < value_dim; ++c) {
        cols.push_back(base + "_" + std::to_string(c));
      }
    }
  }
  return cols;
}

std::string render_csv(const std::vector<std::string>& header,
                       const Eigen::MatrixXd& coords,
                       const Eigen::MatrixXd& values) {
  std::ostringstream text;
  for (std::size_t i = 0; i < header.size(); ++i) {
    if (i) text << ',';
    text << header[i];
  }
  text << '\n';
  for (Eigen::Index r = 0; r < coords.rows(); ++r) {
    for (Eigen::Index c = 0; c < coords.cols(); ++c) {
      if (c) text << ',';
      text << format17(coords(r, c));
    }
    for (Eigen::Index c = 0; c < values.cols(); ++c) {
      text << ',' << format17(values(r, c));
    }
    text << '\n';
  }
  return text.str();
}

// Builds the requested extension and a row evaluator over the grid
// coordinates. The shared_ptr keeps the extension alive inside the lambda.
struct Evaluator {
  PointFunction fun;
  int value_dim = 1;
  std::vector<std::string> coord_names;
  std::vector<std::string> value_names;
  double vanish_from = 0.0;
};

Evaluator make_evaluator(const RunConfig& cfg, const SmoothND& f) {
  Evaluator ev;
  if (cfg.domain == "halfline") {
    auto F = std::make_shared<const ExtendedFunction>(
        extend(halfline_source(f, cfg.frame.a, cfg.frame.b, cfg.frame.k),
               cfg.frame));
    Vec x(cfg.dim - 1);
    for (int i = 0; i + 1 < cfg.dim; ++i) x[i] = cfg.at[i];
    const int vd = F->value_dim();
    const int jets = cfg.jets;
    ev.fun = [F, x, vd, jets](const Vec& t) {
      Vec row(static_cast<Eigen::Index>(vd) * (jets + 1));
      const Point at{t[0], x};
      TangentTuple w;
      row.segment(0, vd) = F->jet(0, at, w);
      for (int ell = 1; ell <= jets; ++ell) {
        w.push_back(time_unit(static_cast<int>(x.size())));
        row.segment(static_cast<Eigen::Index>(ell) * vd, vd) = F->jet(ell, at, w);
      }
      return row;
    };
    ev.value_dim = vd * (jets + 1);
    ev.coord_names = {"t"};
    ev.value_names = value_columns(vd, jets);
    ev.vanish_from = F->vanish_from();
  } else if (cfg.domain == "quadrant") {
    QuadrantConfig qc;
    AxisConfig ax;
    ax.a = cfg.frame.a;
    ax.tau = cfg.frame.tau;
    ax.b = cfg.frame.b;
    ax.upsilon = cfg.frame.upsilon;
    ax.kappa = cfg.frame.kappa;
    ax.kappa_prime = cfg.frame.kappa_prime;
    qc.axes.assign(static_cast<std::size_t>(cfg.dim), ax);
    qc.k = cfg.frame.k;
    qc.order_cap = cfg.frame.order_cap;
    auto F = std::make_shared<const QuadrantExtension>(
        extend_quadrant(corner_source(f, cfg.dim, cfg.frame.k), qc));
    ev.fun = [F](const Vec& y) { return F->value(y); };
    ev.value_dim = F->value_dim();
    for (int i = 0; i < cfg.dim; ++i) ev.coord_names.push_back("y" + std::to_string(i));
    ev.value_names = value_columns(F->value_dim(), 0);
    ev.vanish_from = F->vanish_from(0);
  } else if (cfg.domain == "ball") {
    RadialDomain domain = euclidean_ball(cfg.dim);
    domain.radial = cfg.frame;
    auto F = std::make_shared<const BallExtension>(
        extend_ball(ball_source(f, cfg.frame.k), domain));
    ev.fun = [F](const Vec& w) { return F->value(w); };
    ev.value_dim = F->value_dim();
    for (int i = 0; i < cfg.dim; ++i) ev.coord_names.push_back("x" + std::to_string(i));
    ev.value_names = value_columns(F->value_dim(), 0);
    ev.vanish_from = F->vanish_radius();
  } else {
    auto F = std::make_shared<const DiskExtension>(
        extend_disk_polar(ball_source(f, cfg.frame.k), cfg.frame));
    ev.fun = [F](const Vec& z) { return F->value(z); };
    ev.value_dim = F->value_dim();
    ev.coord_names = {"x0", "x1"};
    ev.value_names = value_columns(F->value_dim(), 0);
    ev.vanish_from = F->vanish_radius();
  }
  return ev;
}

int run_extend(const std::string& command, const RunConfig& cfg,
               std::ostream& out) {
  cfg.validate();
  const SmoothND f = make_test_function(cfg.function, cfg.dim);
  const Evaluator ev = make_evaluator(cfg, f);

  const auto start = std::chrono::steady_clock::now();
  const Eigen::MatrixXd values = eval_grid(ev.fun, cfg.grid, ev.value_dim);
  const std::chrono::duration<double> elapsed =
      std::chrono::steady_clock::now() - start;
  const Eigen::MatrixXd coords = grid_points(cfg.grid);

  std::vector<std::string> header = ev.coord_names;
  header.insert(header.end(), ev.value_names.begin(), ev.value_names.end());
  const std::string csv = render_csv(header, coords, values);

  const int effective = effective_order(cfg.frame.k, cfg.frame.order_cap);
  const SeeleyCoefficients coeffs = compute_coefficients(effective);
  const SmoothStep step =
      make_step(cfg.frame.tau - cfg.frame.b, cfg.frame.upsilon - cfg.frame.b);

  nlohmann::json meta;
  meta["command"] = command;
  meta["domain"] = cfg.domain;
  meta["function"] = cfg.function;
  meta["dim"] = cfg.dim;
  meta["k"] = cfg.frame.k;
  meta["frame"] = frame_json(cfg.frame);
  meta["cutoff"] = {{"lo", step.lo}, {"hi", step.hi}};
  meta["coefficients"] = nlohmann::json::parse(coefficients_json(coeffs));
  meta["grid"] = grid_json(cfg.grid);
  if (cfg.domain == "halfline") {
    meta["at"] = cfg.at;
    meta["jets"] = cfg.jets;
  }
  meta["vanish_from"] = ev.vanish_from;
  meta["rows"] = coords.rows();
  meta["seed"] = cfg.seed;
  meta["elapsed_seconds"] = elapsed.count();

  if (cfg.out == "-") {
    out << csv;
    if (!cfg.meta.empty()) write_file(cfg.meta, meta.dump(2) + "\n");
    return 0;
  }
  write_file(cfg.out, csv);
  const std::string meta_path =
      cfg.meta.empty() ? cfg.out + ".meta.json" : cfg.meta;
  write_file(meta_path, meta.dump(2) + "\n");
  return 0;
}

int run_coeffs(int k, std::ostream& out) {
  if (k < 0) {
    throw std::invalid_argument("coeffs: k must be nonnegative");
  }
  const SeeleyCoefficients c = compute_coefficients(k);
  out << "k = " << k << ", reflection nodes -2^j, j = 0.." << c.count_N - 1
      << "\n";
  for (std::size_t j = 0; j < c.weights.size(); ++j) {
    out << "c_" << j << " = " << rational_string(c.weights[j]) << " ("
        << format17(c.shadow[j]) << ")\n";
  }
  bool exact = true;
  for (int q = 0; q <= k; ++q) {
    exact = exact && verify_moments(c, q) == 0;
  }
  if (!exact) {
    out << "moment conditions: FAILED\n";
    return 1;
  }
  out << "moment conditions 0.." << k << ": exact\n";
  return 0;
}

int run_cutoff(double lo, double hi, int order, double at, std::ostream& out) {
  if (order < 0) {
    throw std::invalid_argument("cutoff: order must be nonnegative");
  }
  const SmoothStep step = make_step(lo, hi);
  const std::vector<double> jets = eval_jet(step, at, order);
  out << "step on [" << format17(lo) << ", " << format17(hi) << "] at t = "
      << format17(at) << "\n";
  for (int ell = 0; ell <= order; ++ell) {
    out << "d" << ell << " = " << format17(jets[static_cast<std::size_t>(ell)])
        << "\n";
  }
  return 0;
}

int run_verify(const std::string& suite, std::uint64_t seed,
               const std::string& out_path, bool list, std::ostream& out) {
  if (list) {
    for (const auto& name : suite_names()) out << name << "\n";
    return 0;
  }
  const std::vector<PropertyReport> reports = run_suite(suite, seed);
  const std::string dump = report_json(reports).dump(2) + "\n";
  if (out_path.empty() || out_path == "-") {
    out << dump;
  } else {
    write_file(out_path, dump);
  }
  return all_pass(reports) ? 0 : 1;
}

void add_frame_options(CLI::App* cmd, RunConfig* cfg) {
  cmd->add_option("--k", cfg->frame.k,
                  "jet order the extension certifies, -1 for unbounded");
  cmd->add_option("--a", cfg->frame.a,
                  "left end of the source interval, -inf for the full ray");
  cmd->add_option("--tau", cfg->frame.tau,
                  "frame parameter tau: every cutoff vanishes left of it");
  cmd->add_option("--b", cfg->frame.b, "boundary the source stops at");
  cmd->add_option("--upsilon", cfg->frame.upsilon,
                  "frame parameter upsilon: every cutoff is 1 right of it");
  cmd->add_option("--kappa", cfg->frame.kappa,
                  "blend interval start, consulted when a is finite");
  cmd->add_option("--kappa-prime", cfg->frame.kappa_prime,
                  "blend interval end, consulted when a is finite");
  cmd->add_option("--order-cap", cfg->frame.order_cap,
                  "order used when k is unbounded");
}

void add_extend_options(CLI::App* cmd, RunConfig* cfg,
                        std::vector<std::string>* grid_texts, bool halfline) {
  cmd->add_option("--f", cfg->function, "stock function name");
  cmd->add_option("--dim", cfg->dim, "number of coordinates of the function");
  add_frame_options(cmd, cfg);
  cmd->add_option("--grid", *grid_texts,
                  "axis as lo:hi:count, repeated per coordinate or given once "
                  "for all");
  cmd->add_option("--out", cfg->out, "CSV path, - for stdout");
  cmd->add_option("--meta", cfg->meta,
                  "metadata JSON path, default <out>.meta.json");
  cmd->add_option("--seed", cfg->seed, "recorded in the metadata");
  if (halfline) {
    cmd->add_option("--x", cfg->at, "fixed space coordinates")->delimiter(',');
    cmd->add_option("--jets", cfg->jets,
                    "time derivatives written next to the value");
  }
}

void finish_grid(RunConfig* cfg, const std::vector<std::string>& texts) {
  cfg->grid.axes.clear();
  for (const auto& t : texts) cfg->grid.axes.push_back(parse_grid_axis(t));
  if (cfg->dim >= 1) {
    const std::size_t arity =
        cfg->domain == "halfline" ? 1 : static_cast<std::size_t>(cfg->dim);
    if (cfg->grid.axes.size() == 1 && arity > 1) {
      cfg->grid.axes.assign(arity, cfg->grid.axes[0]);
    }
  }
}

}  // namespace

void RunConfig::validate() const {
  auto fail = [](const std::string& msg) {
    throw std::invalid_argument("config: " + msg);
  };
  if (domain != "halfline" && domain != "quadrant" && domain != "ball" &&
      domain != "disk-polar") {
    fail("unknown domain '" + domain + "'");
  }
  if (dim < 1) fail("dim must be positive");
  if (frame.k < 0 && frame.k != kOrderInfinity) {
    fail("k must be nonnegative, or -1 for unbounded");
  }
  frame.validate();
  const int effective = effective_order(frame.k, frame.order_cap);
  if (jets < 0 || jets > effective) {
    fail("jets must lie between 0 and the certified order");
  }
  if (domain == "halfline") {
    if (static_cast<int>(at.size()) != dim - 1) {
      fail("fixed space point needs dim - 1 coordinates");
    }
  } else {
    if (!at.empty()) fail("a fixed space point only applies to the halfline");
    if (jets != 0) fail("jet columns only apply to the halfline");
  }
  const std::size_t arity =
      domain == "halfline" ? 1 : static_cast<std::size_t>(dim);
  if (grid.axes.size() != arity) {
    fail("grid needs one axis per sampled coordinate");
  }
  (void)grid.total();
  if ((domain == "halfline" || domain == "quadrant") && frame.finite_a()) {
    for (const auto& ax : grid.axes) {
      if (!(ax.lo > frame.a)) fail("grid must stay strictly above a");
    }
  }
  if (domain == "ball" && (frame.a != -1.0 || frame.b != 0.0)) {
    fail("ball frame must use a = -1 and b = 0");
  }
  if (domain == "disk-polar") {
    if (dim != 2) fail("disk-polar needs dim = 2");
    if (frame.b != 1.0) fail("disk frame must end at the unit circle");
    if (!(frame.a > 0.0 && frame.a < 1.0)) {
      fail("disk annulus start must sit in (0, 1)");
    }
  }
}

GridAxis parse_grid_axis(const std::string& text) {
  auto fail = [&text]() {
    throw std::invalid_argument("grid: expected lo:hi:count, got '" + text +
                                "'");
  };
  const std::size_t first = text.find(':');
  const std::size_t second =
      first == std::string::npos ? std::string::npos : text.find(':', first + 1);
  if (first == std::string::npos || second == std::string::npos ||
      text.find(':', second + 1) != std::string::npos) {
    fail();
  }
  GridAxis ax;
  try {
    std::size_t used = 0;
    const std::string lo = text.substr(0, first);
    const std::string hi = text.substr(first + 1, second - first - 1);
    const std::string count = text.substr(second + 1);
    ax.lo = std::stod(lo, &used);
    if (used != lo.size()) fail();
    ax.hi = std::stod(hi, &used);
    if (used != hi.size()) fail();
    ax.count = std::stoi(count, &used);
    if (used != count.size()) fail();
  } catch (const std::invalid_argument&) {
    fail();
  } catch (const std::out_of_range&) {
    fail();
  }
  return ax;
}

int cli_main(int argc, const char* const* argv, std::ostream& out,
             std::ostream& err) {
  CLI::App app{
      "Smooth extension operators past a boundary: half-line, corner, ball "
      "and disk samplers"};
  app.require_subcommand(1);
  app.set_config("--config", "",
                 "read options from an INI or TOML file; command line flags "
                 "win");

  CLI::App* coeffs_cmd = app.add_subcommand(
      "coeffs", "print the reflection weights as exact rationals");
  int coeffs_k = 3;
  coeffs_cmd->add_option("--k", coeffs_k, "jet order");

  CLI::App* cutoff_cmd = app.add_subcommand(
      "cutoff", "evaluate the smooth step and its derivatives");
  double cut_lo = -1.0;
  double cut_hi = -0.5;
  double cut_at = 0.0;
  int cut_order = 0;
  cutoff_cmd->add_option("--lo", cut_lo, "where the step leaves 0");
  cutoff_cmd->add_option("--hi", cut_hi, "where the step reaches 1");
  cutoff_cmd->add_option("--order", cut_order, "highest derivative to print");
  cutoff_cmd->add_option("--at", cut_at, "evaluation point");

  CLI::App* e1_cmd = app.add_subcommand(
      "extend1d",
      "extend a half-line source across t = b and sample it on a t-grid");
  RunConfig e1;
  e1.domain = "halfline";
  e1.function = "exp";
  e1.dim = 1;
  std::vector<std::string> e1_grid = {"0.05:1.5:30"};
  add_extend_options(e1_cmd, &e1, &e1_grid, true);

  CLI::App* eq_cmd = app.add_subcommand(
      "extend-quadrant",
      "fold the half-line extension over several corner coordinates");
  RunConfig eq;
  eq.domain = "quadrant";
  eq.function = "sin_sum";
  eq.dim = 2;
  std::vector<std::string> eq_grid = {"-1:1.2:12"};
  add_extend_options(eq_cmd, &eq, &eq_grid, false);

  CLI::App* eb_cmd = app.add_subcommand(
      "extend-ball", "extend past the unit sphere along rays");
  RunConfig eb;
  eb.domain = "ball";
  eb.function = "x2+y";
  eb.dim = 2;
  eb.frame = euclidean_ball(2).radial;
  std::vector<std::string> eb_grid = {"-1.5:1.5:21"};
  add_extend_options(eb_cmd, &eb, &eb_grid, false);

  CLI::App* ed_cmd = app.add_subcommand(
      "extend-disk",
      "extend a plane function past the unit circle via polar coordinates");
  RunConfig ed;
  ed.domain = "disk-polar";
  ed.function = "x2+y";
  ed.dim = 2;
  ed.frame = polar_disk_frame();
  std::vector<std::string> ed_grid = {"-1.5:1.5:21"};
  add_extend_options(ed_cmd, &ed, &ed_grid, false);

  CLI::App* vf_cmd = app.add_subcommand(
      "verify", "run a property suite and print a JSON report");
  std::string vf_suite = "smoke";
  std::uint64_t vf_seed = 0;
  std::string vf_out = "-";
  bool vf_list = false;
  vf_cmd->add_option("--suite", vf_suite, "suite name, see --list");
  vf_cmd->add_option("--seed", vf_seed, "random seed for the sampled checks");
  vf_cmd->add_option("--out", vf_out, "report path, - for stdout");
  vf_cmd->add_flag("--list", vf_list, "print the suite names and exit");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e, out, err);
  }

  try {
    if (coeffs_cmd->parsed()) return run_coeffs(coeffs_k, out);
    if (cutoff_cmd->parsed()) {
      return run_cutoff(cut_lo, cut_hi, cut_order, cut_at, out);
    }
    if (e1_cmd->parsed()) {
      finish_grid(&e1, e1_grid);
      return run_extend("extend1d", e1, out);
    }
    if (eq_cmd->parsed()) {
      finish_grid(&eq, eq_grid);
      return run_extend("extend-quadrant", eq, out);
    }
    if (eb_cmd->parsed()) {
      finish_grid(&eb, eb_grid);
      return run_extend("extend-ball", eb, out);
    }
    if (ed_cmd->parsed()) {
      finish_grid(&ed, ed_grid);
      return run_extend("extend-disk", ed, out);
    }
    if (vf_cmd->parsed()) {
      return run_verify(vf_suite, vf_seed, vf_out, vf_list, out);
    }
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }
  return 0;
}

int cli_main(int argc, const char* const* argv) {
  return cli_main(argc, argv, std::cout, std::cerr);
}

}  // namespace seeley
