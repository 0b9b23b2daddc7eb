#include <CLI11.hpp>

#include <algorithm>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <memory>
#include <sstream>
#include <string>
#include <vector>

#include "expquad/expquad.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitNumerical = 2;
constexpr int kExitVerification = 3;

struct StudyOptions {
  std::string problem;
  std::string space;
  std::string rule;
  std::string approach = "classical";
  int p = 0;  // 0 picks the rule's default depth
  double t0 = 0.0;
  double T = 1.0;
  std::string ks;
  std::string out;
};

expquad::SpaceDiscretization parse_space(const std::string& arg) {
  const auto colon = arg.find(':');
  if (colon == std::string::npos)
    throw std::invalid_argument("--space expects fd:<M> or lgl:<J>");
  const std::string kind = arg.substr(0, colon);
  const int n = std::stoi(arg.substr(colon + 1));
  if (kind == "fd") return expquad::finite_difference(n);
  if (kind == "lgl") return expquad::lgl_collocation(n);
  throw std::invalid_argument("--space expects fd:<M> or lgl:<J>");
}

expquad::QuadratureRule parse_rule(const std::string& arg) {
  using expquad::RuleKind;
  if (arg == "trapezoidal") return expquad::make_rule(RuleKind::trapezoidal, 2);
  if (arg == "simpson") return expquad::make_rule(RuleKind::simpson, 3);
  if (arg == "midpoint") return expquad::make_rule(RuleKind::gauss, 1);
  const auto colon = arg.find(':');
  if (colon != std::string::npos) {
    const std::string kind = arg.substr(0, colon);
    const int s = std::stoi(arg.substr(colon + 1));
    if (kind == "gauss") return expquad::make_rule(RuleKind::gauss, s);
    if (kind == "lobatto") return expquad::make_rule(RuleKind::lobatto, s);
  }
  throw std::invalid_argument(
      "--rule expects gauss:<s>, lobatto:<s>, trapezoidal, simpson or midpoint");
}

std::vector<expquad::Rational> parse_k_list(const std::string& arg) {
  std::vector<expquad::Rational> ks;
  std::stringstream ss(arg);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (!item.empty()) ks.push_back(expquad::parse_rational(item));
  }
  if (ks.empty()) throw std::invalid_argument("--k expects a comma-separated list");
  std::sort(ks.begin(), ks.end(),
            [](const auto& a, const auto& b) { return a.value() > b.value(); });
  return ks;
}

expquad::IntegratorConfig make_config(const StudyOptions& opt,
                                      const expquad::QuadratureRule& rule) {
  expquad::IntegratorConfig cfg;
  cfg.rule = rule;
  if (opt.approach == "classical") {
    cfg.approach = expquad::Approach::classical;
  } else if (opt.approach == "corrected") {
    cfg.approach = expquad::Approach::corrected;
  } else {
    throw std::invalid_argument("--approach expects classical or corrected");
  }
  cfg.p = opt.p > 0 ? opt.p : expquad::default_p(rule);
  cfg.t0 = opt.t0;
  cfg.T = opt.T;
  return cfg;
}

std::vector<expquad::ConvergenceRecord> run_study(const StudyOptions& opt) {
  const auto disc = parse_space(opt.space);
  const expquad::PhiEvaluator ev(disc);
  const auto prob = expquad::make_problem(opt.problem);
  const auto rule = parse_rule(opt.rule);
  const auto cfg = make_config(opt, rule);
  return expquad::run_convergence(disc, ev, *prob, cfg, parse_k_list(opt.ks));
}

int cmd_run(const StudyOptions& opt) {
  const auto records = run_study(opt);
  if (opt.out.empty()) {
    expquad::emit_csv(records, std::cout);
  } else {
    expquad::emit_csv(records, std::filesystem::path(opt.out));
  }
  return kExitOk;
}

int cmd_plot(const StudyOptions& opt) {
  const auto records = run_study(opt);
  std::ostringstream os;
  os << "# columns: k local_err global_err wall_time_s\n"
     << "# gnuplot: set logscale xy; plot 'data' u 1:3 w lp t 'global', "
        "'' u 1:2 w lp t 'local'\n";
  for (const auto& r : records) {
    char line[128];
    std::snprintf(line, sizeof line, "%.10g %.4e %.4e %.4e\n", r.k.value(),
                  r.local_err, r.global_err, r.wall_time_s);
    os << line;
  }
  if (opt.out.empty()) {
    std::cout << os.str();
  } else {
    std::ofstream f(opt.out);
    if (!f) throw expquad::IoError("cannot write '" + opt.out + "'");
    f << os.str();
  }
  return kExitOk;
}

int cmd_verify() {
  const auto report = expquad::run_verification();
  expquad::print_report(report, std::cout);
  return report.all_passed() ? kExitOk : kExitVerification;
}

// Canned study configurations; each id runs both approaches.
StudyOptions table_options(int id) {
  StudyOptions opt;
  opt.t0 = 0.0;
  opt.T = 1.0;
  switch (id) {
    case 1:
      opt = {"poly", "fd:999", "trapezoidal", "", 2, 0.0, 1.0,
             "1/10,1/20,1/40,1/80,1/160,1/320", ""};
      break;
    case 2:
      opt = {"exp", "fd:999", "trapezoidal", "", 2, 0.0, 1.0,
             "1/10,1/20,1/40,1/80,1/160,1/320", ""};
      break;
    case 3:
      opt = {"exp", "lgl:39", "simpson", "", 4, 0.0, 1.0,
             "1/2,1/4,1/8,1/16,1/32,1/64", ""};
      break;
    case 4:
      opt = {"poly", "lgl:39", "midpoint", "", 2, 0.0, 1.0,
             "1/4,1/8,1/16,1/32,1/64,1/128", ""};
      break;
    case 5:
      opt = {"poly", "lgl:39", "gauss:2", "", 4, 0.0, 1.0,
             "1/2,1/4,1/8,1/16,1/32,1/64", ""};
      break;
    case 6:
      opt = {"exp", "lgl:39", "midpoint", "", 2, 0.0, 1.0,
             "1/8,1/16,1/32,1/64,1/128,1/256", ""};
      break;
    case 7:
      opt = {"exp", "lgl:39", "gauss:2", "", 4, 0.0, 1.0,
             "1/2,1/4,1/8,1/16,1/32,1/64", ""};
      break;
    case 8:
      opt = {"exp", "lgl:39", "gauss:3", "", 6, 0.0, 1.0,
             "1/2,1/4,1/8,1/16,1/32,1/64", ""};
      break;
    case 9:
      opt = {"exp", "lgl:39", "gauss:4", "", 8, 0.0, 1.0,
             "1/2,1/4,1/8,1/16,1/32", ""};
      break;
    default:
      throw std::invalid_argument("--id expects 1..9");
  }
  return opt;
}

int cmd_tables(int id, const std::string& out_dir) {
  namespace fs = std::filesystem;
  StudyOptions opt = table_options(id);

  std::error_code ec;
  fs::create_directories(out_dir, ec);
  if (ec)
    throw expquad::IoError("tables: cannot create '" + out_dir + "': " +
                           ec.message());

  const auto disc = parse_space(opt.space);
  const expquad::PhiEvaluator ev(disc);
  const auto prob = expquad::make_problem(opt.problem);
  const auto rule = parse_rule(opt.rule);
  const auto ks = parse_k_list(opt.ks);

  for (const char* approach : {"classical", "corrected"}) {
    opt.approach = approach;
    const auto cfg = make_config(opt, rule);
    const auto records = expquad::run_convergence(disc, ev, *prob, cfg, ks);
    const fs::path path = fs::path(out_dir) /
                          ("table" + std::to_string(id) + "_" + approach + ".csv");
    expquad::emit_csv(records, path);
    std::cout << path.string() << "\n";
  }
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exponential quadrature rules for 1-D parabolic problems "
               "with time-dependent Dirichlet data"};
  app.require_subcommand(1);

  StudyOptions opt;
  const auto add_study_options = [&](CLI::App* cmd) {
    cmd->add_option("--problem", opt.problem, "poly|exp|sine")->required();
    cmd->add_option("--space", opt.space, "fd:<M> or lgl:<J>")->required();
    cmd->add_option("--rule", opt.rule,
                    "gauss:<s>|lobatto:<s>|trapezoidal|simpson|midpoint")
        ->required();
    cmd->add_option("--approach", opt.approach, "classical|corrected")->required();
    cmd->add_option("--p", opt.p, "trace depth (default: rule-dependent)");
    cmd->add_option("--t0", opt.t0, "start time")->capture_default_str();
    cmd->add_option("--T", opt.T, "end time")->capture_default_str();
    cmd->add_option("--k", opt.ks, "stepsizes, e.g. 1/10,1/20,1/40")->required();
    cmd->add_option("--out", opt.out, "output path (default: stdout)");
  };

  auto* run = app.add_subcommand("run", "Convergence study for one configuration");
  add_study_options(run);

  auto* verify = app.add_subcommand("verify", "Run the invariant self-checks");

  auto* tables =
      app.add_subcommand("tables", "Canned convergence studies (ids 1..9)");
  int table_id = 0;
  std::string table_out = ".";
  tables->add_option("--id", table_id, "study id, 1..9")->required();
  tables->add_option("--out", table_out, "output directory")->capture_default_str();

  auto* plot = app.add_subcommand("plot", "Emit gnuplot-ready error/timing data");
  add_study_options(plot);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (run->parsed()) return cmd_run(opt);
    if (verify->parsed()) return cmd_verify();
    if (tables->parsed()) return cmd_tables(table_id, table_out);
    if (plot->parsed()) return cmd_plot(opt);
  } catch (const expquad::NumericalError& e) {
    std::cerr << "numerical failure: " << e.what() << "\n";
    return kExitNumerical;
  } catch (const expquad::IoError& e) {
    std::cerr << "io error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::invalid_argument& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::out_of_range& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitNumerical;
  }
  return kExitUsage;
}
