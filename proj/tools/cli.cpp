#include "cli.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <iomanip>
#include <map>
#include <optional>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "acceptance.hpp"
#include "phasest/energy.hpp"
#include "phasest/finite_opt.hpp"
#include "phasest/mathieu.hpp"
#include "phasest/prolate.hpp"
#include "phasest/serialize.hpp"
#include "phasest/simulate.hpp"
#include "phasest/uncertainty.hpp"

namespace phasest::cli {
namespace {

using Json = nlohmann::ordered_json;

std::string fmt12(double x) {
  if (std::isnan(x)) return "nan";
  if (std::isinf(x)) return x > 0 ? "inf" : "-inf";
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.12g", x);
  return buf;
}

Json num(double x) {
  if (!std::isfinite(x)) return nullptr;
  return std::stod(fmt12(x));
}

struct Emission {
  std::string command;
  Json config = Json::object();
  Json result = Json::object();
  std::vector<std::string> columns;
  std::vector<std::vector<double>> rows;
};

std::string scalar_text(const Json& v) {
  if (v.is_string()) return v.get<std::string>();
  if (v.is_number_float()) return fmt12(v.get<double>());
  if (v.is_null()) return "nan";
  return v.dump();
}

void emit(const Emission& e, const std::string& format, std::ostream& os) {
  if (format == "json") {
    Json j;
    j["command"] = e.command;
    j["config"] = e.config;
    j["result"] = e.result;
    if (!e.columns.empty()) {
      Json rows = Json::array();
      for (const auto& r : e.rows) {
        Json row;
        for (std::size_t c = 0; c < e.columns.size(); ++c) row[e.columns[c]] = num(r[c]);
        rows.push_back(std::move(row));
      }
      j["rows"] = std::move(rows);
    }
    os << j.dump(2) << '\n';
    return;
  }

  os << "# command=" << e.command << '\n';
  for (const auto& [k, v] : e.config.items()) os << "# " << k << '=' << scalar_text(v) << '\n';

  if (format == "csv") {
    if (e.columns.empty()) {
      std::string sep;
      for (const auto& [k, v] : e.result.items()) {
        os << sep << k;
        sep = ",";
      }
      os << '\n';
      sep.clear();
      for (const auto& [k, v] : e.result.items()) {
        os << sep << scalar_text(v);
        sep = ",";
      }
      os << '\n';
    } else {
      for (const auto& [k, v] : e.result.items()) os << "# " << k << '=' << scalar_text(v) << '\n';
      for (std::size_t c = 0; c < e.columns.size(); ++c) os << (c ? "," : "") << e.columns[c];
      os << '\n';
      for (const auto& r : e.rows) {
        for (std::size_t c = 0; c < r.size(); ++c) os << (c ? "," : "") << fmt12(r[c]);
        os << '\n';
      }
    }
    return;
  }

  // table
  for (const auto& [k, v] : e.result.items()) os << std::left << std::setw(24) << k << scalar_text(v) << '\n';
  if (!e.columns.empty()) {
    if (!e.result.empty()) os << '\n';
    for (const auto& c : e.columns) os << std::left << std::setw(22) << c;
    os << '\n';
    for (const auto& r : e.rows) {
      for (double x : r) os << std::left << std::setw(22) << fmt12(x);
      os << '\n';
    }
  }
}

std::vector<double> log_grid(double lo, double hi, int points) {
  if (!(lo > 0.0) || !(hi >= lo) || points < 1) throw std::invalid_argument("grid: need 0 < min <= max, points >= 1");
  std::vector<double> g;
  if (points == 1) return {lo};
  for (int i = 0; i < points; ++i) g.push_back(lo * std::pow(hi / lo, static_cast<double>(i) / (points - 1)));
  return g;
}

std::vector<double> lin_grid(double lo, double hi, int points) {
  if (!(hi >= lo) || points < 1) throw std::invalid_argument("grid: need min <= max, points >= 1");
  if (points == 1) return {lo};
  std::vector<double> g;
  for (int i = 0; i < points; ++i) g.push_back(lo + (hi - lo) * i / (points - 1));
  return g;
}

ErrorFunction make_loss(const std::string& loss, double T, int N, const std::vector<double>& coeffs) {
  if (loss == "sin") return ErrorFunction::sin_loss();
  if (loss == "interval") return ErrorFunction::interval(T, N);
  if (loss == "custom") return ErrorFunction::custom(coeffs);
  throw std::invalid_argument("unknown loss '" + loss + "'");
}

void state_rows(Emission& e, const PhaseState& st) {
  e.columns = {"n", "re", "im"};
  for (std::size_t j = 0; j < st.size(); ++j) {
    const auto& c = st.coeffs()[static_cast<Eigen::Index>(j)];
    e.rows.push_back({static_cast<double>(st.index_set().lo() + static_cast<int>(j)), c.real(), c.imag()});
  }
}

// Reads key=value lines; '#' starts a comment.
std::vector<std::pair<std::string, std::string>> read_config(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot read config file '" + path + "'");
  std::vector<std::pair<std::string, std::string>> kv;
  std::string line;
  while (std::getline(in, line)) {
    if (auto h = line.find('#'); h != std::string::npos) line.erase(h);
    auto trim = [](std::string s) {
      const auto b = s.find_first_not_of(" \t\r");
      const auto e = s.find_last_not_of(" \t\r");
      return b == std::string::npos ? std::string{} : s.substr(b, e - b + 1);
    };
    line = trim(line);
    if (line.empty()) continue;
    const auto eq = line.find('=');
    if (eq == std::string::npos) throw std::invalid_argument("config line without '=': " + line);
    kv.emplace_back(trim(line.substr(0, eq)), trim(line.substr(eq + 1)));
  }
  return kv;
}

// Splices config-file entries in after the subcommand unless the same flag
// is already on the command line.
std::vector<std::string> apply_config(std::vector<std::string> args, std::string& config_path) {
  for (std::size_t i = 0; i < args.size(); ++i) {
    if (args[i] == "--config" && i + 1 < args.size()) {
      config_path = args[i + 1];
      args.erase(args.begin() + static_cast<std::ptrdiff_t>(i), args.begin() + static_cast<std::ptrdiff_t>(i) + 2);
      break;
    }
    if (args[i].rfind("--config=", 0) == 0) {
      config_path = args[i].substr(9);
      args.erase(args.begin() + static_cast<std::ptrdiff_t>(i));
      break;
    }
  }
  if (config_path.empty()) return args;
  const auto kv = read_config(config_path);
  auto sub = std::find_if(args.begin(), args.end(), [](const std::string& a) { return !a.empty() && a[0] != '-'; });
  std::size_t pos = sub == args.end() ? args.size() : static_cast<std::size_t>(sub - args.begin()) + 1;
  std::vector<std::string> extra;
  for (const auto& [k, v] : kv) {
    const std::string flag = "--" + k;
    const bool given = std::any_of(args.begin(), args.end(), [&](const std::string& a) {
      return a == flag || a.rfind(flag + "=", 0) == 0;
    });
    if (given) continue;
    extra.push_back(flag);
    extra.push_back(v);
  }
  args.insert(args.begin() + static_cast<std::ptrdiff_t>(pos), extra.begin(), extra.end());
  return args;
}

Json resolved_config(const CLI::App* sub) {
  Json cfg = Json::object();
  for (const CLI::Option* opt : sub->get_options()) {
    const std::string name = opt->get_name(false, true);
    if (name.empty() || name == "--help" || name == "-h,--help") continue;
    std::string key = opt->get_single_name();
    if (key.empty() || key == "help") continue;
    std::string value;
    if (opt->count() > 0) {
      const auto& res = opt->results();
      for (std::size_t i = 0; i < res.size(); ++i) value += (i ? "," : "") + res[i];
    } else {
      value = opt->get_default_str();
      if (value.size() >= 2 && (value.front() == '[' || value.front() == '{')) value = value.substr(1, value.size() - 2);
    }
    cfg[key] = value;
  }
  return cfg;
}

}  // namespace

int run(const std::vector<std::string>& raw_args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Optimal states and error trade-offs for U(1) phase estimation", "phasest-cli"};
  app.require_subcommand(1);
  app.option_defaults()->always_capture_default();

  std::string format = "table";
  std::string output;
  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--format", format, "Output format")->check(CLI::IsMember({"table", "json", "csv"}));
    sub->add_option("--output", output, "Write results to this file instead of stdout");
  };

  // finite-opt
  int fo_n = 9;
  std::optional<int> fo_lo, fo_hi;
  std::string fo_loss = "sin";
  double fo_T = 1.0;
  int fo_N = 1;
  std::vector<double> fo_coeffs;
  auto* finite = app.add_subcommand("finite-opt", "Minimum-risk state on a finite index set");
  finite->add_option("--n", fo_n, "Index set {0..n}")->check(CLI::NonNegativeNumber);
  finite->add_option("--lo", fo_lo, "Lower index (overrides --n)");
  finite->add_option("--hi", fo_hi, "Upper index (overrides --n)");
  finite->add_option("--loss", fo_loss, "sin | interval | custom")->check(CLI::IsMember({"sin", "interval", "custom"}));
  finite->add_option("--T", fo_T, "Interval loss bandwidth");
  finite->add_option("--N", fo_N, "Interval loss scale (window T/N)");
  finite->add_option("--coeffs", fo_coeffs, "Custom loss cosine coefficients r_0,r_1,...")->delimiter(',');
  add_common(finite);

  // heisenberg
  std::vector<int> he_n = {1, 2, 4, 8, 16, 32, 64, 128, 200};
  auto* heis = app.add_subcommand("heisenberg", "n^2-scaled minimum sin^2 risk on {0..n}");
  heis->add_option("--n", he_n, "Comma-separated n values")->delimiter(',');
  add_common(heis);

  // prolate
  std::optional<double> pr_T;
  double pr_tmin = 1.0, pr_tmax = 6.0;
  int pr_points = 11, pr_order = 80;
  auto* prol = app.add_subcommand("prolate", "Top eigenvalue of the sinc-kernel operator vs its asymptote");
  prol->add_option("--T", pr_T, "Single bandwidth (overrides the sweep)");
  prol->add_option("--tmin", pr_tmin, "Sweep start");
  prol->add_option("--tmax", pr_tmax, "Sweep end");
  prol->add_option("--points", pr_points, "Sweep points (linear)");
  prol->add_option("--order", pr_order, "Gauss-Legendre order");
  add_common(prol);

  // dpss
  int dp_N = 50;
  double dp_T = 4.0;
  int dp_order = 120;
  auto* dpss = app.add_subcommand("dpss", "Discrete prolate state maximizing the window probability");
  dpss->add_option("--N", dp_N, "Index set {-N..N}");
  dpss->add_option("--T", dp_T, "Window half-width T/N");
  dpss->add_option("--order", dp_order, "Gauss-Legendre order for the continuum reference");
  add_common(dpss);

  // mathieu-a0
  std::optional<double> ma_q;
  double ma_qmin = 0.0, ma_qmax = 10.0;
  int ma_points = 11;
  auto* math = app.add_subcommand("mathieu-a0", "Ground Mathieu characteristic value a0(q)");
  math->add_option("--q", ma_q, "Single q (overrides the sweep)");
  math->add_option("--qmin", ma_qmin, "Sweep start");
  math->add_option("--qmax", ma_qmax, "Sweep end");
  math->add_option("--points", ma_points, "Sweep points (linear)");
  add_common(math);

  // gamma
  std::optional<double> ga_s;
  double ga_smin = 1e-4, ga_smax = 10.0;
  int ga_points = 11;
  auto* gam = app.add_subcommand("gamma", "Ground energy gamma(s) of I - cos Q + s P^2");
  gam->add_option("--s", ga_s, "Single s (overrides the sweep)");
  gam->add_option("--smin", ga_smin, "Sweep start");
  gam->add_option("--smax", ga_smax, "Sweep end");
  gam->add_option("--points", ga_points, "Sweep points (logarithmic)");
  add_common(gam);

  // kappa
  std::optional<double> ka_E;
  double ka_emin = 0.1, ka_emax = 100.0;
  int ka_points = 13;
  auto* kap = app.add_subcommand("kappa", "Minimum sin^2 risk under the energy bound E");
  kap->add_option("--E", ka_E, "Single E (overrides the sweep)");
  kap->add_option("--emin", ka_emin, "Sweep start");
  kap->add_option("--emax", ka_emax, "Sweep end");
  kap->add_option("--points", ka_points, "Sweep points (logarithmic)");
  add_common(kap);

  // tradeoff
  double tr_emin = 1.0, tr_emax = 100.0;
  int tr_points = 50;
  auto* trade = app.add_subcommand("tradeoff", "Position/momentum uncertainty trade-off curve");
  trade->add_option("--emin", tr_emin, "Sweep start");
  trade->add_option("--emax", tr_emax, "Sweep end");
  trade->add_option("--points", tr_points, "Sweep points (logarithmic)");
  add_common(trade);

  // simulate
  std::string si_state = "sine";
  int si_n = 9;
  int si_N = 4;
  double si_T = 1.0;
  double si_E = 1.0;
  std::string si_state_file;
  double si_theta = 0.0;
  std::size_t si_samples = 10000;
  std::uint64_t si_seed = 1;
  std::string si_loss = "sin";
  std::string si_out;
  std::string si_sformat = "bin";
  auto* sim = app.add_subcommand("simulate", "Monte Carlo outcomes of the covariant measurement");
  sim->add_option("--state", si_state, "sine | dpss | energy | file")
      ->check(CLI::IsMember({"sine", "dpss", "energy", "file"}));
  sim->add_option("--n", si_n, "Sine window on {0..n}");
  sim->add_option("--N", si_N, "DPSS / interval loss scale");
  sim->add_option("--T", si_T, "DPSS / interval loss bandwidth");
  sim->add_option("--E", si_E, "Energy bound for the energy-optimal state");
  sim->add_option("--state-file", si_state_file, "PhaseState JSON (with --state file)");
  sim->add_option("--theta", si_theta, "True phase");
  sim->add_option("--samples", si_samples, "Number of samples")->check(CLI::PositiveNumber);
  sim->add_option("--seed", si_seed, "Generator seed (mt19937_64)");
  sim->add_option("--loss", si_loss, "sin | interval")->check(CLI::IsMember({"sin", "interval"}));
  sim->add_option("--samples-out", si_out, "Write samples to this path");
  sim->add_option("--samples-format", si_sformat, "bin (little-endian float64) | csv")
      ->check(CLI::IsMember({"bin", "csv"}));
  add_common(sim);

  // verify
  std::string ve_level = "fast";
  std::vector<std::string> ve_tol;
  std::vector<std::string> ve_only;
  auto* ver = app.add_subcommand("verify", "Run the acceptance criteria");
  ver->add_option("--level", ve_level, "fast | full")->check(CLI::IsMember({"fast", "full"}));
  ver->add_option("--tol", ve_tol, "Override a tolerance: ID=VALUE (repeatable)");
  ver->add_option("--only", ve_only, "Run only these criteria (ids or names)")->delimiter(',');
  ver->add_option("--format", format, "Output format")->check(CLI::IsMember({"table", "json"}));
  ver->add_option("--output", output, "Write the report to this file");

  std::string config_path;
  try {
    auto args = apply_config(raw_args, config_path);
    std::reverse(args.begin(), args.end());
    app.parse(args);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kOk;
  } catch (const CLI::ParseError& e) {
    std::string what = e.what();
    std::replace(what.begin(), what.end(), '\n', ' ');
    err << "error: invalid_argument: " << what << '\n';
    return kInvalidArguments;
  } catch (const std::invalid_argument& e) {
    err << "error: invalid_argument: " << e.what() << '\n';
    return kInvalidArguments;
  }

  CLI::App* chosen = app.get_subcommands().front();
  Emission e;
  e.command = chosen->get_name();
  e.config = resolved_config(chosen);
  if (!config_path.empty()) e.config["config"] = config_path;

  std::ofstream file;
  auto sink = [&]() -> std::ostream& {
    if (output.empty()) return out;
    file.open(output);
    if (!file) throw std::invalid_argument("cannot open output file '" + output + "'");
    return file;
  };

  try {
    if (chosen == finite) {
      const IndexSet S = (fo_lo || fo_hi) ? IndexSet(fo_lo.value_or(0), fo_hi.value_or(fo_n)) : IndexSet::zero_to(fo_n);
      const auto loss = make_loss(fo_loss, fo_T, fo_N, fo_coeffs);
      const auto opt = min_risk_state(S, loss);
      e.result["lo"] = S.lo();
      e.result["hi"] = S.hi();
      e.result["loss"] = loss.name();
      e.result["risk"] = num(opt.risk);
      e.result["eigen_residual"] = num(opt.eigen_residual);
      e.result["eigen_gap"] = num(opt.eigen_gap);
      if (fo_loss == "sin") {
        const int n = static_cast<int>(S.size()) - 1;
        e.result["closed_form"] = num(sin_loss_optimum_closed_form(n));
        e.result["shifted_closed_form"] = num(sin_loss_optimum_shifted_form(n));
      }
      state_rows(e, opt.state);
    } else if (chosen == heis) {
      e.result["limit"] = num(kPi * kPi / 2.0);
      e.columns = {"n", "risk", "n2_risk"};
      for (const auto& r : heisenberg_table(he_n)) e.rows.push_back({static_cast<double>(r.n), r.risk, r.scaled});
    } else if (chosen == prol) {
      const auto grid = pr_T ? std::vector<double>{*pr_T} : lin_grid(pr_tmin, pr_tmax, pr_points);
      e.columns = {"T", "lambda_nystrom", "lambda_asymptotic", "gap", "refinement_error"};
      for (double T : grid) {
        const auto sp = prolate_spectrum(T, pr_order, 1);
        const double asym = T > 3.0 / 32.0 ? lambda_asymptotic(T) : std::nan("");
        e.rows.push_back({T, sp.lambda(), asym, sp.lambda() - asym, sp.refinement_error});
      }
    } else if (chosen == dpss) {
      const auto st = dpss_state(dp_N, dp_T);
      e.result["N"] = dp_N;
      e.result["T"] = num(dp_T);
      e.result["success_probability"] = num(interval_success_prob(st, dp_T, dp_N));
      e.result["lambda_continuum"] = num(prolate_spectrum(dp_T, dp_order, 1).lambda());
      state_rows(e, st);
    } else if (chosen == math) {
      const auto grid = ma_q ? std::vector<double>{*ma_q} : lin_grid(ma_qmin, ma_qmax, ma_points);
      if (ma_q) e.result["a0"] = num(mathieu_a0(*ma_q));
      e.columns = {"q", "a0"};
      for (double q : grid) e.rows.push_back({q, mathieu_a0(q)});
    } else if (chosen == gam) {
      const auto grid = ga_s ? std::vector<double>{*ga_s} : log_grid(ga_smin, ga_smax, ga_points);
      e.columns = {"s", "gamma", "gamma_variational", "asymptote"};
      for (double s : grid) {
        const int M = 64 + static_cast<int>(std::ceil(12.0 / std::pow(2.0 * s, 0.25)));
        e.rows.push_back({s, gamma(s), gamma_variational(s, M), gamma_asymptote(s)});
      }
    } else if (chosen == kap) {
      const auto grid = ka_E ? std::vector<double>{*ka_E} : log_grid(ka_emin, ka_emax, ka_points);
      e.columns = {"E", "s_star", "kappa", "asymptote"};
      for (double E : grid) {
        const auto tp = kappa(E);
        e.rows.push_back({E, tp.s_star, tp.kappa, kappa_asymptote(E)});
      }
      if (ka_E) {
        e.result["kappa"] = num(e.rows[0][2]);
        e.result["s_star"] = num(e.rows[0][1]);
      }
    } else if (chosen == trade) {
      e.columns = {"E", "bound", "asymptote", "s_star"};
      for (const auto& r : tradeoff_curve(log_grid(tr_emin, tr_emax, tr_points))) {
        e.rows.push_back({r.E, r.bound, r.asymptote, r.s_star});
      }
    } else if (chosen == sim) {
      PhaseState st = [&]() -> PhaseState {
        if (si_state == "sine") return sine_window_state(IndexSet::zero_to(si_n));
        if (si_state == "dpss") return dpss_state(si_N, si_T);
        if (si_state == "energy") return optimal_energy_state(si_E);
        if (si_state_file.empty()) throw std::invalid_argument("--state file requires --state-file");
        std::ifstream in(si_state_file);
        if (!in) throw std::invalid_argument("cannot read state file '" + si_state_file + "'");
        return state_from_json(nlohmann::json::parse(in));
      }();
      const auto loss = si_loss == "sin" ? ErrorFunction::sin_loss() : ErrorFunction::interval(si_T, si_N);
      const auto runres = sample_estimates(st, si_theta, si_samples, si_seed);
      if (!si_out.empty()) {
        write_samples(si_out, runres.samples, si_sformat == "csv" ? SampleFormat::Csv : SampleFormat::Binary);
      }
      const auto emp = empirical_risk(runres, loss);
      const double exact = risk_toeplitz(st, loss);
      e.result["run"] = run_to_json(runres, si_out);
      e.result["loss"] = loss.name();
      e.result["empirical_mean"] = num(emp.mean);
      e.result["std_error"] = num(emp.std_error);
      e.result["analytic_risk"] = num(exact);
      e.result["z_score"] = num(emp.std_error > 0.0 ? (emp.mean - exact) / emp.std_error : 0.0);
      if (format == "csv" || format == "table") {
        // flatten the run record for the line-oriented formats
        Json flat = Json::object();
        for (const auto& [k, v] : e.result["run"].items()) flat[k] = v;
        e.result.erase("run");
        for (const auto& [k, v] : e.result.items()) flat[k] = v;
        e.result = std::move(flat);
      }
    } else if (chosen == ver) {
      acceptance::Options opts;
      opts.level = ve_level == "full" ? acceptance::Level::Full : acceptance::Level::Fast;
      opts.only = ve_only;
      for (const auto& t : ve_tol) {
        const auto eq = t.find('=');
        if (eq == std::string::npos) throw std::invalid_argument("--tol expects ID=VALUE, got '" + t + "'");
        opts.tolerance_overrides[t.substr(0, eq)] = std::stod(t.substr(eq + 1));
      }
      const auto results = acceptance::run(opts);
      std::ostream& os = sink();
      bool all = true;
      for (const auto& r : results) all = all && r.passed;
      if (format == "json") {
        Json j;
        j["command"] = "verify";
        j["config"] = e.config;
        Json arr = Json::array();
        for (const auto& r : results) {
          Json row;
          row["id"] = r.criterion.id;
          row["name"] = r.criterion.name;
          row["passed"] = r.passed;
          row["tolerance"] = num(r.criterion.tolerance);
          row["seconds"] = num(r.seconds);
          row["detail"] = r.detail;
          arr.push_back(std::move(row));
        }
        j["criteria"] = std::move(arr);
        j["all_passed"] = all;
        os << j.dump(2) << '\n';
      } else {
        os << "# command=verify\n";
        for (const auto& [k, v] : e.config.items()) os << "# " << k << '=' << scalar_text(v) << '\n';
        acceptance::print(os, results, opts.level);
        os << (all ? "all criteria passed" : "some criteria FAILED") << '\n';
      }
      if (!all) {
        for (const auto& r : results) {
          if (!r.passed) err << "error: criterion_failed: " << r.criterion.id << ' ' << r.criterion.name << '\n';
        }
        return kNumericalFailure;
      }
      return kOk;
    }
    emit(e, format, sink());
  } catch (const NumericalError& ex) {
    err << "error: numerical_failure: " << ex.what() << '\n';
    return kNumericalFailure;
  } catch (const std::invalid_argument& ex) {
    err << "error: invalid_argument: " << ex.what() << '\n';
    return kInvalidArguments;
  } catch (const nlohmann::json::exception& ex) {
    err << "error: invalid_argument: " << ex.what() << '\n';
    return kInvalidArguments;
  } catch (const std::exception& ex) {
    err << "error: failure: " << ex.what() << '\n';
    return kNumericalFailure;
  }
  return kOk;
}

}  // namespace phasest::cli
