// Command-line front end for the Farey staircase library: exact evaluation,
// step-function export, Farey enumeration, convergence experiments,
// verification suites, and plot-data generation.
//
// Exit codes: 0 success, 1 usage error, 2 verification violation, 3 I/O failure.

#include <CLI11.hpp>

#include <cstdio>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "farey/convergence.hpp"
#include "farey/dilation.hpp"
#include "farey/farey_sequence.hpp"
#include "farey/limit_functions.hpp"
#include "farey/report_io.hpp"
#include "farey/staircase.hpp"
#include "farey/step_function.hpp"
#include "farey/verification.hpp"

namespace {

using namespace farey;

std::string fstr(double v) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

void emit(const std::string& out_path, const std::string& contents) {
  if (out_path.empty()) {
    std::cout << contents;
  } else {
    write_file_atomic(out_path, contents);
  }
}

Fn parse_fn(const std::string& name) {
  if (name == "A") return Fn::A;
  if (name == "B") return Fn::B;
  if (name == "D") return Fn::D;
  if (name == "f") return Fn::F;
  throw std::invalid_argument("unknown function: " + name);
}

DilationScheme parse_scheme(const std::string& name) {
  if (name == "one_sided") return DilationScheme::OneSided;
  if (name == "central") return DilationScheme::Central;
  if (name == "richardson") return DilationScheme::Richardson;
  throw std::invalid_argument("unknown scheme: " + name);
}

struct Options {
  std::string precision = "double";
  int jobs = 1;

  long n = 0;
  long n_max = 100;
  std::string x_text;
  std::string fn_name;
  std::string grid_text;
  std::string orders_text = "100,1000,10000";
  std::string suite = "all";
  std::string experiment;
  std::string check;
  std::string scheme_name;
  std::string samples_text;
  std::string out_path;
  long p = 1, q = 1;
  double h = 0.0;
  bool normalize = false;

  Precision precision_enum() const {
    return precision == "extended" ? Precision::Extended : Precision::Double;
  }
};

std::vector<long> parse_orders(const std::string& text) {
  std::vector<long> orders;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (item.empty()) continue;
    orders.push_back(std::stol(item));
  }
  if (orders.empty()) throw std::invalid_argument("no orders given");
  return orders;
}

std::vector<double> parse_samples(const std::string& text) {
  std::vector<double> xs;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (item.empty()) continue;
    xs.push_back(Rational::parse(item).to_double());
  }
  if (xs.empty()) throw std::invalid_argument("no samples given");
  return xs;
}

int run_eval(const Options& opt) {
  Rational x = Rational::parse(opt.x_text);
  if (!opt.fn_name.empty()) {
    Rational value;
    switch (parse_fn(opt.fn_name)) {
      case Fn::A: value = eval_A(opt.n, x); break;
      case Fn::B: value = eval_B(opt.n, x); break;
      case Fn::D: value = eval_D(opt.n, x); break;
      case Fn::F: value = eval_f(opt.n, x); break;
    }
    std::cout << value.str() << " " << fstr(value.to_double()) << "\n";
    return 0;
  }
  StaircaseSample s = sample_staircase(opt.n, x);
  std::cout << "n = " << s.order << ", x = " << s.point.str() << "\n";
  std::cout << "A = " << s.A.str() << " (" << fstr(s.A.to_double()) << ")\n";
  if (s.D) {
    std::cout << "D = " << s.D->str() << " (" << fstr(s.D->to_double()) << ")\n";
  }
  std::cout << "f = " << s.f.str() << " (" << fstr(s.f.to_double()) << ")\n";
  return 0;
}

int run_steps(const Options& opt) {
  StepFunction step = build_step(opt.n, parse_fn(opt.fn_name));
  if (opt.normalize) step = step.normalized_by_max();
  std::ostringstream csv;
  write_step_csv(csv, step);
  emit(opt.out_path, csv.str());
  return 0;
}

int run_farey(const Options& opt) {
  std::ostringstream csv;
  csv << "num,den\n";
  for_each_farey(opt.n, [&](std::int64_t p, std::int64_t q) {
    csv << p << ',' << q << '\n';
  });
  emit(opt.out_path, csv.str());
  return 0;
}

int run_converge(const Options& opt) {
  GridSpec grid = GridSpec::parse(opt.grid_text);
  std::vector<long> orders = parse_orders(opt.orders_text);
  ConvergenceReport report;
  if (opt.experiment == "B") {
    report = converge_B(grid, orders, opt.precision_enum(), opt.jobs);
  } else if (opt.experiment == "ext") {
    report = converge_extension(opt.p, opt.q, grid, orders, opt.precision_enum(),
                                opt.jobs);
  } else if (opt.experiment == "D") {
    report = converge_D(grid, orders, opt.precision_enum(), opt.jobs);
  } else {
    throw std::invalid_argument("unknown experiment: " + opt.experiment);
  }
  emit(opt.out_path, to_json(report).dump(2) + "\n");
  return 0;
}

int run_verify(const Options& opt) {
  std::vector<VerificationResult> results;
  if (opt.suite == "olympiad" || opt.suite == "all") {
    results.push_back(verify_olympiad(opt.n_max));
  }
  if (opt.suite == "monotone" || opt.suite == "all") {
    results.push_back(verify_monotone(opt.n_max));
  }
  if (opt.suite == "sandwich" || opt.suite == "all") {
    results.push_back(verify_sandwich(opt.n_max));
  }
  if (results.empty()) throw std::invalid_argument("unknown suite: " + opt.suite);

  nlohmann::json doc = nlohmann::json::array();
  bool ok = true;
  for (const auto& r : results) {
    doc.push_back(to_json(r));
    ok = ok && r.passed();
    std::cerr << "suite=" << r.suite << " n_max=" << r.n_max
              << " breakpoints=" << r.breakpoint_count
              << " violations=" << r.violations.size();
    if (r.witness) {
      std::cerr << " witness: n=" << r.witness->order
                << " x=" << r.witness->point.str()
                << " margin=" << r.witness->margin.str() << " ("
                << fstr(r.witness->margin_float) << ")";
    }
    std::cerr << "\n";
  }
  emit(opt.out_path, doc.dump(2) + "\n");
  return ok ? 0 : 2;
}

int run_minf(const Options& opt) {
  MinFReport report = min_f(opt.n);
  std::cout << "order = " << report.order << "\n";
  std::cout << "min = " << report.value.str() << " ("
            << fstr(report.value_float) << ")\n";
  std::cout << "argmin = " << report.argmin.str() << "\n";
  std::cout << "gap_to_one_minus_log2 = " << fstr(report.gap) << "\n";
  if (!opt.out_path.empty()) {
    write_file_atomic(opt.out_path, to_json(report).dump(2) + "\n");
  }
  return 0;
}

int run_limits(const Options& opt) {
  bool extended = opt.precision_enum() == Precision::Extended;
  auto eval_b = [extended](double v) {
    return extended ? static_cast<double>(limit_B_ext(v)) : limit_B(v);
  };
  if (!opt.x_text.empty()) {
    double v = Rational::parse(opt.x_text).to_double();
    double b = eval_b(v);
    std::cout << "B(" << opt.x_text << ") = " << fstr(b) << "\n";
    std::cout << "D(" << opt.x_text << ") = " << fstr(std::floor(v) - b) << "\n";
    if (v >= 1.0) {
      std::cout << "stirling_gap(" << opt.x_text << ") = " << fstr(stirling_gap(v))
                << "\n";
    }
    return 0;
  }
  GridSpec grid = GridSpec::parse(opt.grid_text);
  std::ostringstream csv;
  csv << "x_num,x_den,x_float,B,D\n";
  for (const Rational& x : grid.points()) {
    double v = x.to_double();
    double b = eval_b(v);
    csv << x.num().get_str() << ',' << x.den().get_str() << ',' << fstr(v) << ','
        << fstr(b) << ',' << fstr(std::floor(v) - b) << '\n';
  }
  emit(opt.out_path, csv.str());
  return 0;
}

int run_dilation(const Options& opt) {
  DilationReport report;
  double threshold;
  bool relative;
  if (opt.check == "identities") {
    DilationParams params = default_params(DilationScheme::OneSided);
    if (!opt.scheme_name.empty()) params = default_params(parse_scheme(opt.scheme_name));
    if (opt.h > 0.0) params.h = opt.h;
    std::vector<double> xs =
        opt.samples_text.empty() ? std::vector<double>{0.5, 1.0, 3.0}
                                 : parse_samples(opt.samples_text);
    report = verify_delta_identities(xs, params);
    threshold = 1e-4;
    relative = true;
  } else if (opt.check == "heuristic") {
    DilationParams params = default_params(DilationScheme::Richardson);
    if (!opt.scheme_name.empty()) params = default_params(parse_scheme(opt.scheme_name));
    if (opt.h > 0.0) params.h = opt.h;
    std::vector<double> xs =
        opt.samples_text.empty() ? std::vector<double>{1.25, 2.5, 3.75, 4.5}
                                 : parse_samples(opt.samples_text);
    report = check_heuristic(xs, params);
    threshold = 1e-6;
    relative = false;
  } else if (opt.check == "ode") {
    std::vector<double> xs =
        opt.samples_text.empty() ? std::vector<double>{1.25, 2.5, 3.75, 4.5}
                                 : parse_samples(opt.samples_text);
    report = check_ode(xs);
    threshold = 1e-6;
    relative = false;
  } else {
    throw std::invalid_argument("unknown check: " + opt.check);
  }
  double measured = relative ? report.max_rel_error : report.max_abs_error;
  std::cout << "check = " << report.check << "\n";
  std::cout << (relative ? "max_rel_error = " : "max_abs_error = ")
            << fstr(measured) << " (threshold " << fstr(threshold) << ")\n";
  if (!opt.out_path.empty()) {
    write_file_atomic(opt.out_path, to_json(report).dump(2) + "\n");
  }
  return measured <= threshold ? 0 : 2;
}

}  // namespace

int main(int argc, char** argv) {
  Options opt;
  CLI::App app{"Exact Farey staircase computations and limit experiments"};
  app.require_subcommand(1);
  app.add_option("--precision", opt.precision, "double or extended")
      ->check(CLI::IsMember({"double", "extended"}))
      ->envname("FAREY_PRECISION");
  app.add_option("--jobs", opt.jobs, "worker threads for grid experiments");

  CLI::App* eval = app.add_subcommand("eval", "evaluate A_n, B_n, D_n or f_n exactly");
  eval->add_option("--n", opt.n, "order")->required();
  eval->add_option("--x", opt.x_text, "evaluation point (rational)")->required();
  eval->add_option("--fn", opt.fn_name, "A, B, D or f (default: all)");

  CLI::App* steps = app.add_subcommand("steps", "step function of A_n, D_n or f_n on [0,1) as CSV");
  steps->add_option("--n", opt.n, "order")->required();
  steps->add_option("--fn", opt.fn_name, "A, D or f")->required();
  steps->add_flag("--normalize", opt.normalize, "divide values by the exact maximum");
  steps->add_option("--out", opt.out_path, "output file (default stdout)");

  CLI::App* fy = app.add_subcommand("farey", "Farey sequence of order n as CSV");
  fy->add_option("--n", opt.n, "order")->required();
  fy->add_option("--out", opt.out_path, "output file (default stdout)");

  CLI::App* converge = app.add_subcommand("converge", "limit-theorem convergence experiment");
  converge->add_option("--experiment", opt.experiment, "B, ext or D")->required();
  converge->add_option("--grid", opt.grid_text, "start:stop:count")->required();
  converge->add_option("--orders", opt.orders_text, "comma-separated orders");
  converge->add_option("--p", opt.p, "numerator for ext");
  converge->add_option("--q", opt.q, "denominator for ext");
  converge->add_option("--out", opt.out_path, "output file (default stdout)");

  CLI::App* verify = app.add_subcommand("verify", "exact inequality verification suites");
  verify->add_option("--suite", opt.suite, "olympiad, monotone, sandwich or all");
  verify->add_option("--n-max", opt.n_max, "maximal order (default 100)");
  verify->add_option("--out", opt.out_path, "output file (default stdout)");

  CLI::App* minf = app.add_subcommand("minf", "exact minimum of f_n over its breakpoints in (0,1)");
  minf->add_option("--n", opt.n, "order")->required();
  minf->add_option("--out", opt.out_path, "JSON output file");

  CLI::App* limits = app.add_subcommand("limits", "limit functions B and floor(x) - B");
  auto* xopt = limits->add_option("--x", opt.x_text, "single point");
  auto* gopt = limits->add_option("--grid", opt.grid_text, "start:stop:count");
  xopt->excludes(gopt);
  limits->add_option("--out", opt.out_path, "output file (default stdout)");

  CLI::App* dilation = app.add_subcommand("dilation", "dilation-derivative checks");
  dilation->add_option("--check", opt.check, "identities, heuristic or ode")->required();
  dilation->add_option("--scheme", opt.scheme_name, "one_sided, central or richardson");
  dilation->add_option("--step", opt.h, "dilation step h");
  dilation->add_option("--samples", opt.samples_text, "comma-separated sample points");
  dilation->add_option("--out", opt.out_path, "JSON output file");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 1;
  }

  try {
    if (eval->parsed()) return run_eval(opt);
    if (steps->parsed()) return run_steps(opt);
    if (fy->parsed()) return run_farey(opt);
    if (converge->parsed()) return run_converge(opt);
    if (verify->parsed()) return run_verify(opt);
    if (minf->parsed()) return run_minf(opt);
    if (limits->parsed()) {
      if (opt.x_text.empty() && opt.grid_text.empty()) {
        throw std::invalid_argument("limits: need --x or --grid");
      }
      return run_limits(opt);
    }
    if (dilation->parsed()) return run_dilation(opt);
  } catch (const IoError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 1;
}
