#include <cstdint>
#include <fstream>
#include <iostream>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "tpl/ensemble.hpp"
#include "tpl/io.hpp"
#include "tpl/laws.hpp"
#include "tpl/mvtpl.hpp"
#include "tpl/paths.hpp"
#include "tpl/quadrature.hpp"
#include "tpl/rng.hpp"
#include "tpl/samplers.hpp"
#include "tpl/specfun.hpp"
#include "tpl/verify.hpp"

namespace {

constexpr std::uint64_t default_seed = 20260822;

// Output sink: a named file, or stdout when the path is empty.
struct sink {
  std::ofstream file;
  std::ostream* os = &std::cout;
  explicit sink(const std::string& path) {
    if (!path.empty()) {
      file.open(path);
      if (!file) throw std::runtime_error("cannot open output file: " + path);
      os = &file;
    }
  }
};

void warn_degraded(tpl::series_status st, const std::string& what) {
  if (st != tpl::series_status::ok)
    std::cerr << "warning: series accuracy degraded for " << what << '\n';
}

// ---------------------------------------------------------------- eval ----

struct eval_opts {
  std::string function, out;
  double gamma = 0.5, lambda = 1, delta = 1, theta = 1, t = 1;
  double a = 0.7, b = 1, c = 1, q = 1, alpha = 1;
  double pi = 0.5, kappa = 1, mu = 0;
  int order = 1;
  std::vector<double> s{1.0}, x{1.0}, z{1.0};
};

void print_table(std::ostream& os, const std::vector<double>& args,
                 const std::vector<double>& vals) {
  if (vals.size() == 1) {
    os << tpl::format_double(vals[0]) << '\n';
    return;
  }
  for (std::size_t i = 0; i < vals.size(); ++i)
    os << tpl::format_double(args[i]) << '\t' << tpl::format_double(vals[i])
       << '\n';
}

void run_eval(const eval_opts& o) {
  sink out(o.out);
  const std::string& f = o.function;
  std::vector<double> vals;

  if (f == "mittag-leffler") {
    for (double z : o.z) {
      const tpl::ml_result r = tpl::mittag_leffler(o.a, o.b, o.c, z);
      warn_degraded(r.status, "mittag-leffler at z=" + std::to_string(z));
      vals.push_back(r.value);
    }
    print_table(*out.os, o.z, vals);
    return;
  }

  const auto over_s = [&](auto&& fn) {
    for (double s : o.s) vals.push_back(fn(s));
    print_table(*out.os, o.s, vals);
  };
  const auto over_x = [&](auto&& fn) {
    for (double x : o.x) vals.push_back(fn(x));
    print_table(*out.os, o.x, vals);
  };
  const auto single = [&](double v) {
    vals.push_back(v);
    print_table(*out.os, {0.0}, vals);
  };

  if (f == "tpl-laplace") {
    const tpl::tpl_params p(o.gamma, o.lambda, o.delta, o.theta);
    over_s([&](double s) { return tpl::tpl_laplace(p, s, o.t); });
  } else if (f == "tpl-log-laplace") {
    const tpl::tpl_params p(o.gamma, o.lambda, o.delta, o.theta);
    over_s([&](double s) { return tpl::tpl_log_laplace(p, s, o.t); });
  } else if (f == "tpl-pdf") {
    const tpl::tpl_params p(o.gamma, o.lambda, o.delta, o.theta);
    over_x([&](double x) {
      tpl::series_status st = tpl::series_status::ok;
      const double v = tpl::tpl_pdf(p, x, o.t, &st);
      warn_degraded(st, "tpl-pdf at x=" + std::to_string(x));
      return v;
    });
  } else if (f == "tpl-levy-density") {
    const tpl::tpl_params p(o.gamma, o.lambda, o.delta, o.theta);
    over_x([&](double x) {
      tpl::series_status st = tpl::series_status::ok;
      const double v = tpl::tpl_levy_density(p, x, &st);
      warn_degraded(st, "tpl-levy-density at x=" + std::to_string(x));
      return v;
    });
  } else if (f == "tpl-point-mass") {
    const tpl::tpl_params p(o.gamma, o.lambda, o.delta, o.theta);
    single(tpl::tpl_point_mass(p, o.t));
  } else if (f == "tpl-levy-mass") {
    const tpl::tpl_params p(o.gamma, o.lambda, o.delta, o.theta);
    single(tpl::tpl_levy_mass(p));
  } else if (f == "tpl-cumulant") {
    const tpl::tpl_params p(o.gamma, o.lambda, o.delta, o.theta);
    single(tpl::tpl_cumulant(p, o.order, o.t));
  } else if (f == "tpl-mean") {
    const tpl::tpl_params p(o.gamma, o.lambda, o.delta, o.theta);
    single(tpl::tpl_mean(p, o.t));
  } else if (f == "tpl-variance") {
    const tpl::tpl_params p(o.gamma, o.lambda, o.delta, o.theta);
    single(tpl::tpl_variance(p, o.t));
  } else if (f == "tps-laplace") {
    const tpl::tps_params p(o.gamma, o.theta);
    over_s([&](double s) { return tpl::tps_laplace(p, s, o.t); });
  } else if (f == "tps-potential-density") {
    const tpl::tps_params p(o.gamma, o.theta);
    over_x([&](double x) {
      tpl::series_status st = tpl::series_status::ok;
      const double v = tpl::tps_potential_density(p, o.q, x, &st);
      warn_degraded(st, "tps-potential-density at x=" + std::to_string(x));
      return v;
    });
  } else if (f == "tml-laplace") {
    const tpl::tml_params p(o.a, o.c, o.theta);
    over_s([&](double s) { return tpl::tml_laplace(p, s); });
  } else if (f == "tml-pdf") {
    const tpl::tml_params p(o.a, o.c, o.theta);
    over_x([&](double x) { return tpl::tml_pdf(p, x); });
  } else if (f == "tml-cdf") {
    const tpl::tml_params p(o.a, o.c, o.theta);
    over_x([&](double x) { return tpl::tml_cdf(p, x); });
  } else if (f == "lml-laplace") {
    const tpl::lml_params p(o.a, o.c, o.theta);
    over_s([&](double s) { return tpl::lml_laplace(p, s); });
  } else if (f == "lml-pdf") {
    const tpl::lml_params p(o.a, o.c, o.theta);
    over_x([&](double x) { return tpl::lml_pdf(p, x); });
  } else if (f == "nb-laplace") {
    const tpl::nb_params p(o.pi, o.kappa, o.alpha, o.mu);
    over_s([&](double s) { return tpl::nb_laplace(p, s, o.t); });
  } else if (f == "ou-driver-exponent") {
    const tpl::tpl_params p(o.gamma, o.lambda, o.delta, o.theta);
    over_s([&](double s) { return tpl::ou_driver_exponent(p, o.alpha, s); });
  } else {
    throw std::invalid_argument("eval: unknown function '" + f + "'");
  }
}

// -------------------------------------------------------------- sample ----

struct sample_opts {
  std::string law, out;
  std::uint64_t n = 1000, seed = default_seed;
  double t = 1;
  double gamma = 0.5, lambda = 1, delta = 1, theta = 1;
  double a = 0.7, c = 1;
  double pi = 0.5, kappa = 1, alpha = 1, mu = 0;
  double shape = 1, scale = 1;
};

void run_sample(const sample_opts& o) {
  const std::size_t n = static_cast<std::size_t>(o.n);
  const std::uint64_t stream0 = tpl::check_stream("sample:" + o.law);
  std::vector<double> xs;

  if (o.law == "tpl") {
    const tpl::tpl_params p(o.gamma, o.lambda, o.delta, o.theta);
    xs = tpl::ensemble_run(n, o.seed, stream0,
                           [&](tpl::rng& g) { return sample_tpl(g, p, o.t); });
  } else if (o.law == "tps") {
    const tpl::tps_params p(o.gamma, o.theta);
    xs = tpl::ensemble_run(n, o.seed, stream0,
                           [&](tpl::rng& g) { return sample_tps(g, p, o.t); });
  } else if (o.law == "tml") {
    const tpl::tml_params p(o.a, o.c, o.theta);
    xs = tpl::ensemble_run(n, o.seed, stream0,
                           [&](tpl::rng& g) { return sample_tml(g, p); });
  } else if (o.law == "lml") {
    const tpl::lml_params p(o.a, o.c, o.theta);
    xs = tpl::ensemble_run(n, o.seed, stream0,
                           [&](tpl::rng& g) { return sample_lml(g, p); });
  } else if (o.law == "nb") {
    const tpl::nb_params p(o.pi, o.kappa, o.alpha, o.mu);
    xs = tpl::ensemble_run(n, o.seed, stream0,
                           [&](tpl::rng& g) { return sample_nb(g, p, o.t); });
  } else if (o.law == "gamma") {
    xs = tpl::ensemble_run(n, o.seed, stream0, [&](tpl::rng& g) {
      return sample_gamma(g, o.shape, o.scale);
    });
  } else if (o.law == "stable") {
    xs = tpl::ensemble_run(n, o.seed, stream0,
                           [&](tpl::rng& g) { return sample_stable(g, o.a); });
  } else {
    throw std::invalid_argument("sample: unknown law '" + o.law + "'");
  }

  sink out(o.out);
  tpl::write_csv(*out.os, {"value"}, {xs});
}

// ------------------------------------------------------------ simulate ----

struct simulate_opts {
  std::string process, out, svg, preset;
  std::string method = "subordinator", start = "stationary";
  std::uint64_t seed = default_seed, n = 1000;
  double t_max = 1;
  std::size_t steps = 500;
  double gamma = 0.5, lambda = 1, delta = 1, theta = 1;
  double ladder_pi = 0.5, alpha = 1, x0 = 0, h = 0.5, eps = 1e-4;
  double pi = 0.5, kappa = 1, lattice = 1, mu = 0;
  std::vector<double> gammas, lambdas, thetas;
};

void emit_path_csv(const simulate_opts& o, const tpl::path& p,
                   const std::string& label) {
  sink out(o.out);
  tpl::write_csv(*out.os, {"t", "value"}, {p.t, p.x});
  if (!o.svg.empty()) {
    sink s(o.svg);
    tpl::write_svg_lines(*s.os, {{label, p.t, p.x}});
  }
}

void run_preset_fig1(const simulate_opts& o) {
  // Coupled pair of stationary mean-reverting paths driven with common
  // random numbers: the same stream drives a gamma = 0.7 process and its
  // gamma = 1 (gamma-marginal) counterpart.
  const tpl::tpl_params frac(0.7, 0.5, 20, 0.5);
  const tpl::tpl_params expo(1.0, 0.5, 20, 0.5);
  const tpl::time_grid grid(o.t_max, o.steps);
  const tpl::ou_options opt{25.0, false, true, 0.0};

  tpl::rng g1(o.seed, 0);
  const tpl::path a = tpl::ou_path(g1, frac, grid, opt);
  tpl::rng g2(o.seed, 0);
  const tpl::path b = tpl::ou_path(g2, expo, grid, opt);

  sink out(o.out);
  tpl::write_csv(*out.os, {"t", "x_gamma07", "x_gamma1"}, {a.t, a.x, b.x});
  if (!o.svg.empty()) {
    sink s(o.svg);
    tpl::write_svg_lines(
        *s.os, {{"gamma = 0.7", a.t, a.x}, {"gamma = 1", b.t, b.x}});
  }
}

void run_preset_fig2(const simulate_opts& o) {
  tpl::rng g(o.seed, 0);
  const tpl::mv_scenario sc = tpl::fig2_scenario(g);

  sink out(o.out);
  tpl::write_csv(*out.os, {"x1", "x2"}, {sc.x1, sc.x2});
  if (!o.svg.empty()) {
    sink s(o.svg);
    tpl::write_svg_scatter(*s.os, {{"", sc.x1, sc.x2}});
  }
  std::cerr << "zero frequency: x1 " << tpl::format_double(sc.zero_freq1)
            << " x2 " << tpl::format_double(sc.zero_freq2) << '\n'
            << "correlation: " << tpl::format_double(sc.correlation) << '\n';
}

void run_simulate(const simulate_opts& o) {
  if (!o.preset.empty()) {
    if (o.preset == "fig1")
      run_preset_fig1(o);
    else if (o.preset == "fig2")
      run_preset_fig2(o);
    else
      throw std::invalid_argument("simulate: unknown preset '" + o.preset +
                                  "'");
    return;
  }

  const tpl::time_grid grid(o.t_max, o.steps);
  tpl::rng g(o.seed, 0);

  if (o.process == "tpl-levy") {
    const tpl::tpl_params p(o.gamma, o.lambda, o.delta, o.theta);
    tpl::tpl_path_method m;
    if (o.method == "subordinator")
      m = tpl::tpl_path_method::subordinator;
    else if (o.method == "compound-poisson")
      m = tpl::tpl_path_method::compound_poisson;
    else if (o.method == "nb-gamma")
      m = tpl::tpl_path_method::nb_gamma;
    else
      throw std::invalid_argument("simulate: unknown method '" + o.method +
                                  "'");
    emit_path_csv(o, tpl::tpl_levy_path(g, p, grid, m, o.ladder_pi), "");
  } else if (o.process == "nb") {
    const tpl::nb_params p(o.pi, o.kappa, o.lattice, o.mu);
    emit_path_csv(o, tpl::nb_path(g, p, grid), "");
  } else if (o.process == "ou") {
    const tpl::tpl_params p(o.gamma, o.lambda, o.delta, o.theta);
    if (o.start != "stationary" && o.start != "fixed")
      throw std::invalid_argument("simulate: --start must be stationary or fixed");
    const tpl::ou_options opt{o.alpha, false, o.start == "stationary", o.x0};
    emit_path_csv(o, tpl::ou_path(g, p, grid, opt), "");
  } else if (o.process == "sato") {
    const tpl::tpl_params p(o.gamma, o.lambda, o.delta, o.theta);
    const tpl::sato_options opt{o.h, o.eps};
    const tpl::sato_path_result r = tpl::sato_path(g, p, grid, opt);
    std::cerr << "truncation bias bound: "
              << tpl::format_double(r.truncation_bias) << '\n';
    emit_path_csv(o, r.p, "");
  } else if (o.process == "mv") {
    if (o.gammas.empty())
      throw std::invalid_argument(
          "simulate mv: --gammas, --lambdas, --thetas are required");
    const tpl::mv_params p(o.gammas, o.lambdas, o.thetas, o.delta, o.pi);
    const std::size_t rows = static_cast<std::size_t>(o.n);
    std::vector<std::vector<double>> cols(p.dim(),
                                          std::vector<double>(rows));
    for (std::size_t i = 0; i < rows; ++i) {
      const std::vector<double> x = tpl::mv_sample(g, p, o.t_max);
      for (std::size_t j = 0; j < p.dim(); ++j) cols[j][i] = x[j];
    }
    std::vector<std::string> header(p.dim());
    for (std::size_t j = 0; j < p.dim(); ++j)
      header[j] = "x" + std::to_string(j + 1);
    sink out(o.out);
    tpl::write_csv(*out.os, header, cols);
    if (!o.svg.empty() && p.dim() >= 2) {
      sink s(o.svg);
      tpl::write_svg_scatter(*s.os, {{"", cols[0], cols[1]}});
    }
  } else if (o.process.empty()) {
    throw std::invalid_argument("simulate: a process or --preset is required");
  } else {
    throw std::invalid_argument("simulate: unknown process '" + o.process +
                                "'");
  }
}

// -------------------------------------------------------------- verify ----

struct verify_opts {
  std::string out;
  std::uint64_t seed = default_seed;
  double scale = 1.0;
  bool quick = false;
};

int run_verify(const verify_opts& o) {
  tpl::suite_config cfg;
  cfg.seed = o.seed;
  cfg.scale = o.scale;
  const std::vector<tpl::mc_report> reports = tpl::run_suite(cfg);

  sink out(o.out);
  tpl::write_reports(*out.os, reports);

  std::size_t checks = 0, failed = 0, controls = 0, controls_passed = 0;
  for (const tpl::mc_report& r : reports) {
    if (tpl::is_control(r)) {
      ++controls;
      if (r.pass) ++controls_passed;
    } else {
      ++checks;
      if (!r.pass) ++failed;
    }
  }
  std::cerr << checks << " checks (" << failed << " failed), " << controls
            << " planted controls (" << controls_passed
            << " unexpectedly passed)\n";
  return tpl::suite_ok(reports) ? 0 : 3;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "tempered positive Linnik laws: evaluation, sampling, process "
      "simulation, verification"};
  app.require_subcommand(1);
  app.set_config("--config", "",
                 "flat key=value configuration file (dotted keys address "
                 "subcommand options, e.g. simulate.alpha=25)");

  eval_opts eo;
  CLI::App* eval = app.add_subcommand("eval", "evaluate a registered function");
  eval->add_option("function", eo.function, "function name")->required();
  eval->add_option("--gamma", eo.gamma, "stability index");
  eval->add_option("--lambda", eo.lambda, "scale parameter");
  eval->add_option("--delta", eo.delta, "shape parameter");
  eval->add_option("--theta", eo.theta, "tempering rate");
  eval->add_option("--t", eo.t, "time argument");
  eval->add_option("--a", eo.a, "first series index");
  eval->add_option("--b", eo.b, "second series index");
  eval->add_option("--c", eo.c, "series weight / tempering coefficient");
  eval->add_option("--q", eo.q, "resolvent argument");
  eval->add_option("--alpha", eo.alpha,
                   "mean-reversion rate / increment lattice");
  eval->add_option("--pi", eo.pi, "success probability");
  eval->add_option("--kappa", eo.kappa, "count shape parameter");
  eval->add_option("--mu", eo.mu, "drift parameter");
  eval->add_option("--n", eo.order, "cumulant order");
  eval->add_option("--s", eo.s, "transform arguments")->delimiter(',');
  eval->add_option("--x", eo.x, "evaluation points")->delimiter(',');
  eval->add_option("--z", eo.z, "series arguments")->delimiter(',');
  eval->add_option("--out", eo.out, "output file (default stdout)");

  sample_opts so;
  CLI::App* sample = app.add_subcommand("sample", "draw i.i.d. variates");
  sample->add_option("law", so.law,
                     "law: tpl, tps, tml, lml, nb, gamma, stable")
      ->required();
  sample->add_option("--n", so.n, "number of variates");
  sample->add_option("--seed", so.seed, "rng seed")->envname("TPL_SEED");
  sample->add_option("--t", so.t, "time argument");
  sample->add_option("--gamma", so.gamma, "stability index");
  sample->add_option("--lambda", so.lambda, "scale parameter");
  sample->add_option("--delta", so.delta, "shape parameter");
  sample->add_option("--theta", so.theta, "tempering rate");
  sample->add_option("--a", so.a, "stability / series index");
  sample->add_option("--c", so.c, "tempering coefficient");
  sample->add_option("--pi", so.pi, "success probability");
  sample->add_option("--kappa", so.kappa, "count shape parameter");
  sample->add_option("--alpha", so.alpha, "increment lattice");
  sample->add_option("--mu", so.mu, "drift parameter");
  sample->add_option("--shape", so.shape, "gamma shape");
  sample->add_option("--scale", so.scale, "gamma scale");
  sample->add_option("--out", so.out, "output CSV file (default stdout)");

  simulate_opts mo;
  CLI::App* simulate =
      app.add_subcommand("simulate", "simulate a process trajectory");
  simulate->add_option("process", mo.process,
                       "process: tpl-levy, nb, ou, sato, mv");
  simulate->add_option("--preset", mo.preset,
                       "named scenario: fig1 (coupled mean-reverting pair) "
                       "or fig2 (bivariate scatter)");
  simulate->add_option("--seed", mo.seed, "rng seed")->envname("TPL_SEED");
  simulate->add_option("--t-max", mo.t_max, "time horizon");
  simulate->add_option("--steps", mo.steps, "grid steps");
  simulate->add_option("--n", mo.n, "sample rows (mv)");
  simulate->add_option("--gamma", mo.gamma, "stability index");
  simulate->add_option("--lambda", mo.lambda, "scale parameter");
  simulate->add_option("--delta", mo.delta, "shape parameter");
  simulate->add_option("--theta", mo.theta, "tempering rate");
  simulate->add_option("--method", mo.method,
                       "path construction: subordinator, compound-poisson, "
                       "nb-gamma");
  simulate->add_option("--ladder-pi", mo.ladder_pi,
                       "ladder thinning parameter for nb-gamma paths");
  simulate->add_option("--alpha", mo.alpha, "mean-reversion rate");
  simulate->add_option("--start", mo.start,
                       "initial condition: stationary or fixed");
  simulate->add_option("--x0", mo.x0, "initial value for --start fixed");
  simulate->add_option("--hurst", mo.h, "self-similarity exponent");
  simulate->add_option("--eps", mo.eps, "small-jump truncation level");
  simulate->add_option("--pi", mo.pi,
                       "success probability (nb) / dependence (mv)");
  simulate->add_option("--kappa", mo.kappa, "count shape parameter");
  simulate->add_option("--lattice", mo.lattice, "nb increment lattice");
  simulate->add_option("--mu", mo.mu, "nb drift parameter");
  simulate->add_option("--gammas", mo.gammas, "mv stability indices")
      ->delimiter(',');
  simulate->add_option("--lambdas", mo.lambdas, "mv scale parameters")
      ->delimiter(',');
  simulate->add_option("--thetas", mo.thetas, "mv tempering rates")
      ->delimiter(',');
  simulate->add_option("--out", mo.out, "output CSV file (default stdout)");
  simulate->add_option("--svg", mo.svg, "optional SVG rendering file");

  verify_opts vo;
  CLI::App* verify =
      app.add_subcommand("verify", "run the Monte Carlo verification suite");
  CLI::Option* scale_opt =
      verify->add_option("--scale", vo.scale, "sample-size multiplier");
  verify->add_flag("--quick", vo.quick,
                   "reduced sample sizes (scale 0.1) for a fast pass");
  verify->add_option("--seed", vo.seed, "rng seed")->envname("TPL_SEED");
  verify->add_option("--out", vo.out, "report file (default stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 1;
  }

  if (vo.quick && scale_opt->count() == 0) vo.scale = 0.1;

  try {
    if (eval->parsed())
      run_eval(eo);
    else if (sample->parsed())
      run_sample(so);
    else if (simulate->parsed())
      run_simulate(mo);
    else if (verify->parsed())
      return run_verify(vo);
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  } catch (const std::domain_error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  }
  return 0;
}
