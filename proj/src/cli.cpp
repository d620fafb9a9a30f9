#include "sio/cli.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <functional>
#include <map>

#include <CLI11.hpp>

namespace sio {

namespace {

std::string fmt_full(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

std::string fmt_g15(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.15g", v);
  return buf;
}

std::string fmt_g6(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.6g", v);
  return buf;
}

std::string fmt_sci3(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.2e", v);
  return buf;
}

int write_to(const std::string& path, std::ostream& out, std::ostream& err,
             const std::function<void(std::ostream&)>& writer) {
  if (path.empty()) {
    writer(out);
    return kExitOk;
  }
  std::ofstream file(path, std::ios::binary);
  if (!file) {
    err << "cannot open output file: " << path << "\n";
    return kExitUsage;
  }
  writer(file);
  return kExitOk;
}

std::string path_with_tag(const std::string& path, const std::string& tag) {
  const auto dot = path.find_last_of('.');
  const auto slash = path.find_last_of('/');
  if (dot == std::string::npos || (slash != std::string::npos && dot < slash)) {
    return path + "_" + tag;
  }
  return path.substr(0, dot) + "_" + tag + path.substr(dot);
}

struct SolveOpts {
  std::string problem;
  int m = 3;
  double h = 0.1;
  int steps = 5;
  double fp_tol = 1e-14;
  int max_fp_iters = 50;
  int quad_nodes = 3;
  IntegralRoute route = IntegralRoute::kAuto;
  bool continue_on_stall = false;
  std::string out_path;
};

struct TableOpts {
  std::string problem;
  int m = 3;
  double h = 0.1;
  int steps = 5;
  int quad_nodes = 3;
  IntegralRoute route = IntegralRoute::kAuto;
  std::string out_path;
};

struct OrderOpts {
  std::string problem;
  int m = 3;
  double h = 0.1;
  int steps = 5;
  int levels = 3;
  int quad_nodes = 3;
  IntegralRoute route = IntegralRoute::kAuto;
  std::string out_path;
};

struct StabilityOpts {
  std::vector<int> ms;
  std::vector<int> taylor_ps;
  std::string window_spec = "-8,4,-6,6";
  int res = 600;
  std::string format = "csv";
  std::string out_path;
};

bool check_common(int m, double h, int steps, int quad_nodes, std::ostream& err) {
  if (m < 1) {
    err << "--m must be >= 1\n";
    return false;
  }
  if (h == 0.0) {
    err << "--h must be nonzero\n";
    return false;
  }
  if (steps < 1) {
    err << "--steps must be >= 1\n";
    return false;
  }
  if (quad_nodes < 1 || quad_nodes > 8) {
    err << "--quad-nodes must be in 1..8\n";
    return false;
  }
  return true;
}

const RegistryEntry* lookup(const std::string& name, std::ostream& err) {
  try {
    return &find_problem(name);
  } catch (const UnknownProblem& e) {
    err << e.what() << "\n";
    return nullptr;
  }
}

int cmd_solve(const SolveOpts& o, std::ostream& out, std::ostream& err) {
  if (!check_common(o.m, o.h, o.steps, o.quad_nodes, err)) {
    return kExitUsage;
  }
  if (!(o.fp_tol > 0.0) || o.max_fp_iters < 1) {
    err << "--fp-tol must be positive and --max-fp-iters >= 1\n";
    return kExitUsage;
  }
  const RegistryEntry* entry = lookup(o.problem, err);
  if (entry == nullptr) {
    return kExitUsage;
  }

  SioConfig config;
  config.degree = o.m;
  config.step = o.h;
  config.fp_tol = o.fp_tol;
  config.max_fp_iters = o.max_fp_iters;
  config.quad_nodes = o.quad_nodes;
  config.continue_on_stall = o.continue_on_stall;
  try {
    config.closed_form_integral = resolve_integral(*entry, o.route);
  } catch (const Error& e) {
    err << e.what() << "\n";
    return kExitUsage;
  }

  Trajectory traj;
  int code = kExitOk;
  try {
    traj = solve(entry->problem, config, o.steps);
  } catch (const SolveAborted& e) {
    err << e.what() << "\n";
    traj = e.partial();
    code = kExitNumerical;
  } catch (const Error& e) {
    err << e.what() << "\n";
    return kExitNumerical;
  }

  const int write_code = write_to(o.out_path, out, err, [&](std::ostream& os) {
    write_solve_csv(os, traj, entry->problem);
  });
  return write_code == kExitOk ? code : write_code;
}

int cmd_table(const TableOpts& o, std::ostream& out, std::ostream& err) {
  if (!check_common(o.m, o.h, o.steps, o.quad_nodes, err)) {
    return kExitUsage;
  }
  const RegistryEntry* entry = lookup(o.problem, err);
  if (entry == nullptr) {
    return kExitUsage;
  }
  if (!entry->problem.analytic_solution) {
    err << "table requires a problem with an analytic solution\n";
    return kExitUsage;
  }
  ErrorTable table;
  try {
    table = build_error_table(*entry, o.m, o.h, o.steps, o.route, o.quad_nodes);
  } catch (const Error& e) {
    err << e.what() << "\n";
    return kExitNumerical;
  }
  return write_to(o.out_path, out, err,
                  [&](std::ostream& os) { write_table_csv(os, table); });
}

int cmd_order(const OrderOpts& o, std::ostream& out, std::ostream& err) {
  if (!check_common(o.m, o.h, o.steps, o.quad_nodes, err)) {
    return kExitUsage;
  }
  if (o.levels < 2) {
    err << "--levels must be >= 2\n";
    return kExitUsage;
  }
  const RegistryEntry* entry = lookup(o.problem, err);
  if (entry == nullptr) {
    return kExitUsage;
  }
  OrderStudy study;
  StepIntegral closed_form;
  try {
    closed_form = resolve_integral(*entry, o.route);
  } catch (const Error& e) {
    err << e.what() << "\n";
    return kExitUsage;
  }
  try {
    study = run_order_study(entry->problem, closed_form, o.m, o.h, o.steps, o.levels,
                            o.quad_nodes);
  } catch (const Error& e) {
    err << e.what() << "\n";
    return kExitNumerical;
  }
  const int code = write_to(o.out_path, out, err,
                            [&](std::ostream& os) { write_order_csv(os, study); });
  if (code != kExitOk) {
    return code;
  }
  auto label = [&](const std::vector<double>& errs) {
    const auto slope = fitted_slope(study.h_values, errs);
    return slope ? fmt_g6(*slope) : std::string("exact");
  };
  err << "fitted slopes: sio=" << label(study.err_sio) << " t2=" << label(study.err_t2)
      << " t4=" << label(study.err_t4) << "\n";
  return kExitOk;
}

bool parse_window(const std::string& spec, StabilityWindow* window) {
  double v[4];
  int consumed = 0;
  const int got = std::sscanf(spec.c_str(), "%lf,%lf,%lf,%lf%n", &v[0], &v[1], &v[2], &v[3],
                              &consumed);
  if (got != 4 || consumed != static_cast<int>(spec.size())) {
    return false;
  }
  window->re_min = v[0];
  window->re_max = v[1];
  window->im_min = v[2];
  window->im_max = v[3];
  return true;
}

int cmd_stability(const StabilityOpts& o, std::ostream& out, std::ostream& err) {
  StabilityWindow window;
  if (!parse_window(o.window_spec, &window)) {
    err << "--window expects re_min,re_max,im_min,im_max\n";
    return kExitUsage;
  }
  if (!(window.re_min < window.re_max) || !(window.im_min < window.im_max)) {
    err << "--window must have min < max on both axes\n";
    return kExitUsage;
  }
  if (o.res < 2) {
    err << "--res must be >= 2\n";
    return kExitUsage;
  }
  for (int m : o.ms) {
    if (m < 1) {
      err << "--m values must be >= 1\n";
      return kExitUsage;
    }
  }
  for (int p : o.taylor_ps) {
    if (p < 1) {
      err << "--taylor-p values must be >= 1\n";
      return kExitUsage;
    }
  }

  std::vector<int> ms = o.ms;
  if (ms.empty() && o.taylor_ps.empty()) {
    ms.push_back(3);
  }
  std::vector<StabilityGrid> grids;
  for (int m : ms) {
    grids.push_back(scan_sio_grid(m, window, o.res, o.res));
  }
  for (int p : o.taylor_ps) {
    grids.push_back(scan_taylor_grid(p, window, o.res, o.res));
  }
  if (grids.size() > 1 && o.out_path.empty()) {
    err << "multiple grids require --out\n";
    return kExitUsage;
  }

  const bool svg = o.format == "svg";
  for (const auto& grid : grids) {
    const std::string path =
        grids.size() == 1 ? o.out_path : path_with_tag(o.out_path, grid.method_tag);
    const int code = write_to(path, out, err, [&](std::ostream& os) {
      svg ? write_grid_svg(os, grid) : write_grid_csv(os, grid);
    });
    if (code != kExitOk) {
      return code;
    }
  }

  // Pairwise coverage against the first grid, both directions.
  for (std::size_t j = 1; j < grids.size(); ++j) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.4f", containment_fraction(grids[0], grids[j]));
    out << "containment " << grids[0].method_tag << " within " << grids[j].method_tag << ": "
        << buf << "\n";
    std::snprintf(buf, sizeof buf, "%.4f", containment_fraction(grids[j], grids[0]));
    out << "containment " << grids[j].method_tag << " within " << grids[0].method_tag << ": "
        << buf << "\n";
  }
  return kExitOk;
}

}  // namespace

StepIntegral resolve_integral(const RegistryEntry& entry, IntegralRoute route) {
  switch (route) {
    case IntegralRoute::kAuto:
      return entry.closed_form_integral;
    case IntegralRoute::kClosedForm:
      if (!entry.closed_form_integral) {
        throw Error("problem '" + entry.problem.name + "' has no closed-form step integral");
      }
      return entry.closed_form_integral;
    case IntegralRoute::kQuadrature:
      return {};
  }
  return {};
}

ErrorTable build_error_table(const RegistryEntry& entry, int degree, double h, int n_steps,
                             IntegralRoute route, int quad_nodes) {
  const IvpProblem& problem = entry.problem;
  if (!problem.analytic_solution) {
    throw Error("error table requires an analytic solution");
  }
  SioConfig config;
  config.degree = degree;
  config.step = h;
  config.quad_nodes = quad_nodes;
  config.closed_form_integral = resolve_integral(entry, route);

  const Trajectory sio = solve(problem, config, n_steps);
  const Trajectory t2 = taylor_solve(problem, h, 2, n_steps);
  const Trajectory t4 = taylor_solve(problem, h, 4, n_steps);

  ErrorTable table;
  for (int i = 1; i <= n_steps; ++i) {
    const double t = sio.times[i];
    const double y = problem.analytic_solution(t);
    table.times.push_back(t);
    table.analytic.push_back(y);
    table.err_t2.push_back(std::abs(t2.values[i] - y));
    table.err_t4.push_back(std::abs(t4.values[i] - y));
    table.err_sio.push_back(std::abs(sio.values[i] - y));
  }
  return table;
}

OrderStudy run_order_study(const IvpProblem& problem, const StepIntegral& closed_form, int degree,
                           double h0, int base_steps, int levels, int quad_nodes) {
  if (!problem.analytic_solution) {
    throw Error("order study requires an analytic solution");
  }
  const double t_end = problem.t0 + base_steps * h0;
  const double y_end = problem.analytic_solution(t_end);

  OrderStudy study;
  for (int level = 0; level < levels; ++level) {
    const double h = h0 / static_cast<double>(1 << level);
    const int steps = base_steps * (1 << level);
    SioConfig config;
    config.degree = degree;
    config.step = h;
    config.quad_nodes = quad_nodes;
    config.closed_form_integral = closed_form;
    const Trajectory sio = solve(problem, config, steps);
    const Trajectory t2 = taylor_solve(problem, h, 2, steps);
    const Trajectory t4 = taylor_solve(problem, h, 4, steps);
    study.h_values.push_back(h);
    study.err_sio.push_back(std::abs(sio.values[steps] - y_end));
    study.err_t2.push_back(std::abs(t2.values[steps] - y_end));
    study.err_t4.push_back(std::abs(t4.values[steps] - y_end));
  }
  return study;
}

std::optional<double> pairwise_slope(double e_coarse, double e_fine) {
  if (e_coarse == 0.0 || e_fine == 0.0) {
    return std::nullopt;
  }
  return std::log2(e_coarse / e_fine);
}

std::optional<double> fitted_slope(const std::vector<double>& h_values,
                                   const std::vector<double>& errors) {
  const std::size_t n = h_values.size();
  if (n < 2 || errors.size() != n) {
    return std::nullopt;
  }
  double mean_x = 0.0;
  double mean_y = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    if (errors[i] == 0.0) {
      return std::nullopt;
    }
    mean_x += std::log2(h_values[i]);
    mean_y += std::log2(errors[i]);
  }
  mean_x /= static_cast<double>(n);
  mean_y /= static_cast<double>(n);
  double cov = 0.0;
  double var = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    const double dx = std::log2(h_values[i]) - mean_x;
    cov += dx * (std::log2(errors[i]) - mean_y);
    var += dx * dx;
  }
  return cov / var;
}

void write_solve_csv(std::ostream& out, const Trajectory& traj, const IvpProblem& problem) {
  out << "t,w,error,fp_iters,residual\n";
  for (Eigen::Index i = 0; i < traj.times.size(); ++i) {
    out << fmt_full(traj.times[i]) << ',' << fmt_full(traj.values[i]) << ',';
    if (problem.analytic_solution) {
      out << fmt_full(std::abs(traj.values[i] - problem.analytic_solution(traj.times[i])));
    }
    if (i == 0) {
      out << ",0,0\n";
    } else {
      const StepResult& step = traj.steps[i - 1];
      out << ',' << step.fp_iterations << ',' << fmt_full(step.residual) << '\n';
    }
  }
}

void write_table_csv(std::ostream& out, const ErrorTable& table) {
  out << "t,y,err_t2,err_t4,err_sio\n";
  for (std::size_t i = 0; i < table.times.size(); ++i) {
    out << fmt_g6(table.times[i]) << ',' << fmt_g15(table.analytic[i]) << ','
        << fmt_sci3(table.err_t2[i]) << ',' << fmt_sci3(table.err_t4[i]) << ','
        << fmt_sci3(table.err_sio[i]) << '\n';
  }
}

void write_order_csv(std::ostream& out, const OrderStudy& study) {
  out << "h,error_sio,error_t2,error_t4,slope_sio\n";
  for (std::size_t i = 0; i < study.h_values.size(); ++i) {
    out << fmt_full(study.h_values[i]) << ',' << fmt_full(study.err_sio[i]) << ','
        << fmt_full(study.err_t2[i]) << ',' << fmt_full(study.err_t4[i]) << ',';
    if (i == 0) {
      out << '\n';
      continue;
    }
    const auto slope = pairwise_slope(study.err_sio[i - 1], study.err_sio[i]);
    out << (slope ? fmt_g6(*slope) : std::string("exact")) << '\n';
  }
}

void write_grid_csv(std::ostream& out, const StabilityGrid& grid) {
  out << "re,im,amplification,stable01\n";
  for (int i = 0; i < grid.nx; ++i) {
    for (int j = 0; j < grid.ny; ++j) {
      out << fmt_full(grid.re_at(i)) << ',' << fmt_full(grid.im_at(j)) << ','
          << fmt_full(grid.values(i, j)) << ',' << (grid.stable_at(i, j) ? '1' : '0') << '\n';
    }
  }
}

void write_grid_svg(std::ostream& out, const StabilityGrid& grid) {
  const int nx = grid.nx;
  const int ny = grid.ny;
  out << "<svg xmlns=\"http://www.w3.org/2000/svg\" viewBox=\"0 0 " << nx << ' ' << ny
      << "\">\n";
  out << "  <title>" << grid.method_tag << "</title>\n";
  out << "  <rect x=\"0\" y=\"0\" width=\"" << nx << "\" height=\"" << ny
      << "\" fill=\"#ffffff\" stroke=\"#000000\" stroke-width=\"0.5\"/>\n";
  // One rect per horizontal run of stable cells; the top row is im_max.
  for (int j = ny - 1; j >= 0; --j) {
    const int row_y = ny - 1 - j;
    int i = 0;
    while (i < nx) {
      if (!grid.stable_at(i, j)) {
        ++i;
        continue;
      }
      int run = 1;
      while (i + run < nx && grid.stable_at(i + run, j)) {
        ++run;
      }
      out << "  <rect x=\"" << i << "\" y=\"" << row_y << "\" width=\"" << run
          << "\" height=\"1\" fill=\"#31688e\"/>\n";
      i += run;
    }
  }
  const StabilityWindow& w = grid.window;
  char buf[32];
  if (w.re_min < 0.0 && w.re_max > 0.0) {
    std::snprintf(buf, sizeof buf, "%.4f", -w.re_min / (w.re_max - w.re_min) * nx);
    out << "  <line x1=\"" << buf << "\" y1=\"0\" x2=\"" << buf << "\" y2=\"" << ny
        << "\" stroke=\"#888888\" stroke-width=\"0.5\"/>\n";
  }
  if (w.im_min < 0.0 && w.im_max > 0.0) {
    std::snprintf(buf, sizeof buf, "%.4f", w.im_max / (w.im_max - w.im_min) * ny);
    out << "  <line x1=\"0\" y1=\"" << buf << "\" x2=\"" << nx << "\" y2=\"" << buf
        << "\" stroke=\"#888888\" stroke-width=\"0.5\"/>\n";
  }
  out << "</svg>\n";
}

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"SIO(m+1): one-step implicit ODE solver built on a spline-integral operator"};
  app.name("sio");
  app.require_subcommand(1);
  app.set_config("--config", "", "Read option defaults from a TOML file (flags win)");

  const std::map<std::string, IntegralRoute> route_map{
      {"auto", IntegralRoute::kAuto},
      {"closed", IntegralRoute::kClosedForm},
      {"quadrature", IntegralRoute::kQuadrature}};

  SolveOpts so;
  CLI::App* solve_cmd =
      app.add_subcommand("solve", "Integrate a registry problem; CSV: t,w,error,fp_iters,residual");
  solve_cmd->add_option("--problem", so.problem, "Registry problem name")->required();
  solve_cmd->add_option("--m", so.m, "Spline degree m (method order m+1)")->capture_default_str();
  solve_cmd->add_option("--h", so.h, "Step size, nonzero")->capture_default_str();
  solve_cmd->add_option("--steps", so.steps, "Number of steps")->capture_default_str();
  solve_cmd->add_option("--fp-tol", so.fp_tol, "Fixed-point residual tolerance")
      ->capture_default_str();
  solve_cmd->add_option("--max-fp-iters", so.max_fp_iters, "Fixed-point iteration cap")
      ->capture_default_str();
  solve_cmd->add_option("--quad-nodes", so.quad_nodes, "Gauss-Legendre nodes (1..8)")
      ->capture_default_str();
  solve_cmd->add_option("--integral", so.route, "Step-integral route")
      ->transform(CLI::CheckedTransformer(route_map, CLI::ignore_case))
      ->default_str("auto");
  solve_cmd->add_flag("--continue-on-stall", so.continue_on_stall,
                      "Keep the last iterate when a step does not converge");
  solve_cmd->add_option("--out", so.out_path, "Output CSV path (stdout when omitted)");

  TableOpts to;
  CLI::App* table_cmd = app.add_subcommand(
      "table", "Three-method error comparison; CSV: t,y,err_t2,err_t4,err_sio");
  table_cmd->add_option("--problem", to.problem, "Registry problem name")->required();
  table_cmd->add_option("--m", to.m, "Spline degree of the SIO column")->capture_default_str();
  table_cmd->add_option("--h", to.h, "Step size, nonzero")->capture_default_str();
  table_cmd->add_option("--steps", to.steps, "Number of rows")->capture_default_str();
  table_cmd->add_option("--quad-nodes", to.quad_nodes, "Gauss-Legendre nodes (1..8)")
      ->capture_default_str();
  table_cmd->add_option("--integral", to.route, "Step-integral route")
      ->transform(CLI::CheckedTransformer(route_map, CLI::ignore_case))
      ->default_str("auto");
  table_cmd->add_option("--out", to.out_path, "Output CSV path (stdout when omitted)");

  OrderOpts oo;
  CLI::App* order_cmd = app.add_subcommand(
      "order", "h-halving study; CSV: h,error_sio,error_t2,error_t4,slope_sio");
  order_cmd->add_option("--problem", oo.problem, "Registry problem name")->required();
  order_cmd->add_option("--m", oo.m, "Spline degree m")->capture_default_str();
  order_cmd->add_option("--h", oo.h, "Coarsest step size")->capture_default_str();
  order_cmd->add_option("--steps", oo.steps, "Steps at the coarsest level")
      ->capture_default_str();
  order_cmd->add_option("--levels", oo.levels, "Number of halvings (>= 2)")
      ->capture_default_str();
  order_cmd->add_option("--quad-nodes", oo.quad_nodes, "Gauss-Legendre nodes (1..8)")
      ->capture_default_str();
  order_cmd->add_option("--integral", oo.route, "Step-integral route")
      ->transform(CLI::CheckedTransformer(route_map, CLI::ignore_case))
      ->default_str("auto");
  order_cmd->add_option("--out", oo.out_path, "Output CSV path (stdout when omitted)");

  StabilityOpts sto;
  CLI::App* stability_cmd = app.add_subcommand(
      "stability", "Amplification grids; CSV: re,im,amplification,stable01");
  stability_cmd->add_option("--m", sto.ms, "Spline degree (repeatable)");
  stability_cmd->add_option("--taylor-p", sto.taylor_ps, "Taylor method order (repeatable)");
  stability_cmd->add_option("--window", sto.window_spec,
                            "re_min,re_max,im_min,im_max (use --window=...)")
      ->capture_default_str();
  stability_cmd->add_option("--res", sto.res, "Cells per axis (>= 2)")->capture_default_str();
  stability_cmd->add_option("--format", sto.format, "Output format")
      ->check(CLI::IsMember({"csv", "svg"}))
      ->capture_default_str();
  stability_cmd->add_option("--out", sto.out_path,
                            "Output path; tagged per grid when several are requested");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) {
      out << app.help();
      return kExitOk;
    }
    err << e.what() << "\n";
    return kExitUsage;
  }

  if (solve_cmd->parsed()) {
    return cmd_solve(so, out, err);
  }
  if (table_cmd->parsed()) {
    return cmd_table(to, out, err);
  }
  if (order_cmd->parsed()) {
    return cmd_order(oo, out, err);
  }
  if (stability_cmd->parsed()) {
    return cmd_stability(sto, out, err);
  }
  err << "no command given\n";
  return kExitUsage;
}

}  // namespace sio
