#include "kronwalk/cli.hpp"

#include <fmt/format.h>

#include <atomic>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <map>
#include <memory>
#include <ostream>
#include <sstream>
#include <thread>

#include "CLI11.hpp"
#include "kronwalk/analysis.hpp"
#include "kronwalk/graph_algorithms.hpp"
#include "kronwalk/report_io.hpp"

namespace kronwalk::cli {

namespace {

std::ofstream open_output(const std::string& path) {
  std::ofstream f(path, std::ios::binary);
  if (!f) throw std::runtime_error("cannot open " + path + " for writing");
  return f;
}

std::shared_ptr<const Graph> kronecker_graph(std::uint32_t m, std::uint32_t order) {
  return std::make_shared<const Graph>(kron_power(complete_graph(m), order));
}

ReducedHamiltonian reduced_for(std::uint32_t m, std::uint32_t order, Vertex marked, double gamma) {
  if (order <= 3) return closed_form_quotient(m, order, gamma);
  // No closed form past the third power: refine numerically.
  const auto g = kronecker_graph(m, order);
  const auto p = equitable_partition(*g, marked);
  return reduce_hamiltonian(*g, p, gamma, marked);
}

std::string status_word(bool ok) { return ok ? "PASS" : "FAIL"; }

// --- verification suites ---------------------------------------------------

void verify_srg(std::vector<VerifyCheck>& out) {
  for (std::uint32_t m = 3; m <= 8; ++m) {
    const auto check = srg_params(kron_power(complete_graph(m), 2));
    const auto expected = srg_closed_form(m);
    const bool ok = check.status == SrgStatus::strongly_regular && check.params == expected &&
                    check.params->feasible();
    std::string got = check.params ? fmt::format("({},{},{},{})", check.params->n, check.params->k,
                                                 check.params->lambda, check.params->mu)
                                   : check.reason;
    out.push_back({"srg", fmt::format("K_{0} x K_{0}", m),
                   fmt::format("brute force {} vs closed form ({},{},{},{})", got, expected.n,
                               expected.k, expected.lambda, expected.mu),
                   ok});
  }
}

std::string census_class(const VertexCode& v, const VertexCode& w) {
  static const char* level[] = {"set", "subset", "position"};
  std::string s;
  for (int i = 0; i < 3; ++i) {
    if (i) s += ", ";
    s += (v.positions[i] == w.positions[i] ? "same " : "different ");
    s += level[i];
  }
  return s;
}

void verify_census(std::vector<VerifyCheck>& out) {
  for (std::uint32_t m = 3; m <= 5; ++m) {
    const Graph g = kron_power(complete_graph(m), 3);
    const Vertex w = 0;
    const auto wc = decode(w, m, 3);
    struct Tally {
      std::uint64_t count = 0;
      std::uint64_t mutual = 0;
      bool uniform = true;
    };
    std::map<std::string, Tally> tallies;
    for (Vertex v = 1; v < g.num_vertices(); ++v) {
      const auto name = g.adjacent(v, w) ? std::string("adjacent") : census_class(decode(v, m, 3), wc);
      const auto c = common_neighbor_count(g, v, w);
      auto& t = tallies[name];
      if (t.count > 0 && t.mutual != c) t.uniform = false;
      t.mutual = c;
      ++t.count;
    }
    const auto census = third_order_census(m);
    for (const auto& row : census.rows) {
      const auto it = tallies.find(row.description);
      const bool ok = it != tallies.end() && it->second.uniform && it->second.count == row.count &&
                      it->second.mutual == row.mutual_neighbors;
      out.push_back({"census", fmt::format("M={} {}", m, row.description),
                     it == tallies.end()
                         ? std::string("class not found")
                         : fmt::format("count {} / {}, mutual {} / {}", it->second.count, row.count,
                                       it->second.mutual, row.mutual_neighbors),
                     ok});
    }
    const std::uint64_t a = m - 1;
    const std::uint64_t identity = 1 + a * a * a + 3 * a + 3 * a * a;
    const std::uint64_t cube = std::uint64_t{m} * m * m;
    out.push_back({"census", fmt::format("M={} total", m),
                   fmt::format("census {} , 1+(M-1)^3+3(M-1)+3(M-1)^2 = {}, M^3 = {}",
                               census.total(), identity, cube),
                   census.total() == cube && identity == cube && tallies.size() == census.rows.size()});
  }
}

void verify_quotient(std::vector<VerifyCheck>& out) {
  const std::pair<std::uint32_t, std::uint32_t> cases[] = {{4, 2}, {4, 3}, {5, 3}};
  for (const auto& [m, j] : cases) {
    const auto g = kronecker_graph(m, j);
    const double gamma = default_gamma(m, j).first;
    const auto p = equitable_partition(*g, 0);
    const auto reduced = reduce_hamiltonian(*g, p, gamma, 0);
    const double horizon = 2.0 * std::numbers::pi * std::sqrt(static_cast<double>(g->num_vertices()));
    const auto full = probability_series(make_search_problem(g, 0, gamma), horizon, 200);
    const auto red = probability_series(reduced, horizon, 200);
    double worst = 0.0;
    for (std::size_t i = 0; i < full.probabilities.size(); ++i) {
      worst = std::max(worst, std::abs(full.probabilities[i] - red.probabilities[i]));
    }
    out.push_back({"quotient", fmt::format("K_{}^{} reduced vs full", m, j),
                   fmt::format("max |dp| = {:.3e} over 200 points (<= 1e-8), {} cells", worst,
                               p.num_cells()),
                   worst <= 1e-8 && p.num_cells() == j + 1});

    const auto closed = closed_form_quotient(m, j, gamma);
    const auto ordered = permute(reduced, kronecker_class_order(p, m, j, 0));
    const double diff = (closed.matrix - ordered.matrix).cwiseAbs().maxCoeff();
    out.push_back({"quotient", fmt::format("K_{}^{} closed form", m, j),
                   fmt::format("max entry difference {:.3e}", diff),
                   diff <= 1e-12 && closed.cell_sizes == ordered.cell_sizes});
  }
}

void verify_diameter(std::vector<VerifyCheck>& out) {
  for (std::uint32_t m = 3; m <= 6; ++m) {
    for (std::uint32_t j = 2; j <= 4; ++j) {
      if (checked_power(m, j) > 4096) continue;
      const auto d = diameter(kron_power(complete_graph(m), j));
      out.push_back({"diameter", fmt::format("K_{}^{}", m, j),
                     d ? fmt::format("diameter {}", *d) : std::string("disconnected"),
                     d && *d == 2});
    }
  }
}

// --- subcommands -----------------------------------------------------------

Mode parse_mode(const std::string& s) {
  if (s == "full") return Mode::full;
  if (s == "reduced") return Mode::reduced;
  return Mode::automatic;
}

void print_outcome(std::ostream& out, const RunConfig& c, const RunOutcome& r) {
  out << fmt::format(
      "M={} j={} N={} mode={} gamma={:.12g} ({})\n"
      "peak_time={:.12g} peak_probability={:.12g} predicted_time={:.12g}{}\n",
      c.m, c.order, r.result.num_vertices, r.mode, r.result.gamma, r.gamma_formula,
      r.result.peak_time, r.result.peak_probability, predicted_runtime(r.result.num_vertices),
      r.result.peak_interior ? "" : " (no interior peak; boundary reported)");
}

int cmd_analyze(std::uint32_t m, std::uint32_t j, const std::string& json_path, std::ostream& out) {
  nlohmann::json report;
  report["M"] = m;
  report["j"] = j;
  const std::uint64_t n = checked_power(m, j);
  report["N"] = n;
  report["predicted_time"] = predicted_runtime(n);
  try {
    const auto g = critical_gamma(m, j);
    report["critical_gamma"] = {{"value", g.value}, {"formula", to_string(g.formula)}};
  } catch (const SingularFormula& e) {
    report["critical_gamma"] = {{"error", e.what()}, {"fallback", e.fallback()}};
  }
  const auto practical = practical_gamma(m, j);
  report["practical_gamma"] = {{"value", practical.value},
                               {"formula", to_string(practical.formula)}};
  if (m >= 3) {
    const auto srg = srg_closed_form(m);
    const auto cond = srg_search_conditions(m);
    report["srg_second_order"] = {{"N", srg.n}, {"k", srg.k}, {"lambda", srg.lambda}, {"mu", srg.mu}};
    report["srg_search_conditions"] = {{"k_over_N", cond.k_over_n},
                                       {"k_over_muN23", cond.k_over_mu_n_23},
                                       {"k_over_sqrtN", cond.k_over_sqrt_n},
                                       {"k_o_N", cond.k_little_o_n},
                                       {"k_o_muN23", cond.k_little_o_mu_n_23},
                                       {"satisfied", cond.satisfied}};
  }
  if (m >= 4) {
    report["perturbation"] = perturbation_json(perturbation_report(m));
    const auto tg = gamma_taylor_gap(m);
    report["gamma_taylor_gap"] = {{"difference", tg.difference}, {"scaled", tg.scaled}};
  }
  const std::string text = report.dump(2);
  out << text << '\n';
  if (!json_path.empty()) open_output(json_path) << text << '\n';
  return kSuccess;
}

int cmd_reduce(std::uint32_t m, std::uint32_t j, std::optional<Vertex> marked,
               std::optional<double> gamma_opt, const std::string& json_path,
               const std::string& census_path, std::ostream& out) {
  const Vertex w = marked.value_or(0);
  const double gamma = gamma_opt ? *gamma_opt : default_gamma(m, j).first;
  const std::uint64_t n = checked_power(m, j);
  if (w >= n) throw InvalidArgument("marked vertex outside the graph");

  nlohmann::json doc;
  ReducedHamiltonian reduced;
  if (n <= kAutoReducedAbove) {
    const auto g = kronecker_graph(m, j);
    const auto p = equitable_partition(*g, w);
    reduced = reduce_hamiltonian(*g, p, gamma, w);
    doc["partition"] = partition_json(p);
    doc["class_order"] = kronecker_class_order(p, m, j, w);
  } else {
    reduced = reduced_for(m, j, w, gamma);
  }
  doc["reduced"] = reduced_json(reduced);

  out << fmt::format("M={} j={} N={} cells={} gamma={:.12g}\n", m, j, n, reduced.dimension(), gamma);
  out << "sizes:";
  for (auto s : reduced.cell_sizes) out << ' ' << s;
  out << "\nreduced adjacency:\n";
  for (Eigen::Index r = 0; r < reduced.adjacency.rows(); ++r) {
    for (Eigen::Index c = 0; c < reduced.adjacency.cols(); ++c) {
      out << fmt::format("{:>16.10g}", reduced.adjacency(r, c));
    }
    out << '\n';
  }
  if (!json_path.empty()) open_output(json_path) << doc.dump(2) << '\n';
  if (!census_path.empty()) {
    auto f = open_output(census_path);
    write_census_csv(f, third_order_census(m));
  }
  return kSuccess;
}

int cmd_verify(const std::string& suite, std::ostream& out) {
  const auto checks = run_verification(suite);
  bool ok = true;
  out << fmt::format("{:<10} {:<58} {:<6} {}\n", "suite", "check", "status", "detail");
  for (const auto& c : checks) {
    out << fmt::format("{:<10} {:<58} {:<6} {}\n", c.suite, c.name, status_word(c.passed), c.detail);
    ok = ok && c.passed;
  }
  out << fmt::format("{} of {} checks passed\n",
                     std::count_if(checks.begin(), checks.end(), [](const auto& c) { return c.passed; }),
                     checks.size());
  return ok ? kSuccess : kVerificationFailure;
}

int cmd_sweep(const std::vector<std::uint32_t>& ms, const std::vector<std::uint32_t>& js,
              const RunConfig& base, const std::string& out_dir, unsigned workers,
              std::ostream& out) {
  std::filesystem::create_directories(out_dir);
  std::vector<RunConfig> configs;
  for (auto m : ms) {
    for (auto j : js) {
      RunConfig c = base;
      c.m = m;
      c.order = j;
      const auto stem = (std::filesystem::path(out_dir) / fmt::format("M{}_j{}", m, j)).string();
      c.csv_path = stem + ".csv";
      c.json_path = stem + ".json";
      configs.push_back(std::move(c));
    }
  }
  std::vector<std::optional<RunOutcome>> results(configs.size());
  std::vector<std::string> errors(configs.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i; (i = next.fetch_add(1)) < configs.size();) {
      try {
        results[i] = run_simulation(configs[i]);
      } catch (const std::exception& e) {
        errors[i] = e.what();
      }
    }
  };
  std::vector<std::thread> pool;
  const unsigned n = std::max(1u, std::min<unsigned>(workers, static_cast<unsigned>(configs.size())));
  for (unsigned t = 0; t < n; ++t) pool.emplace_back(worker);
  for (auto& t : pool) t.join();

  int status = kSuccess;
  for (std::size_t i = 0; i < configs.size(); ++i) {
    if (results[i]) {
      print_outcome(out, configs[i], *results[i]);
    } else {
      out << fmt::format("M={} j={} failed: {}\n", configs[i].m, configs[i].order, errors[i]);
      status = kNumericalFailure;
    }
  }
  return status;
}

}  // namespace

std::pair<double, std::string> default_gamma(std::uint32_t m, std::uint32_t order) {
  const auto choice = order == 3 ? practical_gamma(m, order) : critical_gamma(m, order);
  return {choice.value, std::string(to_string(choice.formula))};
}

RunOutcome run_simulation(const RunConfig& config) {
  if (config.m < 2) throw InvalidArgument("M must be at least 2");
  if (config.order < 1) throw InvalidArgument("j must be at least 1");
  const std::uint64_t n = checked_power(config.m, config.order);
  const Vertex marked = config.marked.value_or(0);
  if (marked >= n) throw InvalidArgument("marked vertex outside the graph");

  RunOutcome outcome;
  double gamma = 0.0;
  if (config.gamma) {
    gamma = *config.gamma;
    outcome.gamma_formula = "user";
  } else {
    std::tie(gamma, outcome.gamma_formula) = default_gamma(config.m, config.order);
  }
  const double t_max = config.t_max.value_or(1.5 * predicted_runtime(n));

  Mode mode = config.mode;
  if (mode == Mode::automatic) mode = n > kAutoReducedAbove ? Mode::reduced : Mode::full;

  if (mode == Mode::full) {
    if (n > kMaxFullDimension) {
      throw CapacityExceeded(fmt::format(
          "full mode needs {} amplitudes, above the limit of {}; rerun with --mode reduced", n,
          kMaxFullDimension));
    }
    const auto problem = make_search_problem(kronecker_graph(config.m, config.order), marked, gamma);
    outcome.result = probability_series(problem, t_max, config.samples);
    outcome.mode = "full";
  } else {
    if (!(gamma > 0.0) || !std::isfinite(gamma)) throw InvalidArgument("gamma must be positive");
    const auto reduced = reduced_for(config.m, config.order, marked, gamma);
    outcome.result = probability_series(reduced, t_max, config.samples);
    outcome.mode = "reduced";
  }

  if (!config.csv_path.empty()) {
    auto f = open_output(config.csv_path);
    write_series_csv(f, outcome.result);
  }
  if (!config.json_path.empty()) {
    open_output(config.json_path)
        << summary_json(outcome.result, config.m, config.order, outcome.gamma_formula, outcome.mode)
               .dump(2)
        << '\n';
  }
  return outcome;
}

std::vector<VerifyCheck> run_verification(std::string_view suite) {
  std::vector<VerifyCheck> out;
  const bool all = suite == "all";
  if (!all && suite != "srg" && suite != "census" && suite != "quotient" && suite != "diameter") {
    throw InvalidArgument("unknown verification suite '" + std::string(suite) + "'");
  }
  if (all || suite == "srg") verify_srg(out);
  if (all || suite == "census") verify_census(out);
  if (all || suite == "quotient") verify_quotient(out);
  if (all || suite == "diameter") verify_diameter(out);
  return out;
}

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Quantum walk search on Kronecker powers of the complete graph", "kronwalk"};
  app.require_subcommand(1);

  RunConfig run;
  std::string mode_name = "auto";
  double gamma = 0.0;
  std::uint32_t marked = 0;
  double t_max = 0.0;

  auto add_size = [](CLI::App* sub, RunConfig& c) {
    sub->add_option("--M", c.m, "Initiator size M")->required()->check(CLI::Range(2u, 1u << 31));
    sub->add_option("--j", c.order, "Kronecker order j")->default_val(1)->check(CLI::Range(1u, 64u));
  };

  auto* simulate = app.add_subcommand("simulate", "Success-probability curve for one (M, j)");
  add_size(simulate, run);
  auto* gamma_opt = simulate->add_option("--gamma", gamma, "Jumping rate (default: critical)");
  auto* marked_opt = simulate->add_option("--marked", marked, "Marked vertex (default 0)");
  auto* tmax_opt = simulate->add_option("--t-max", t_max, "End of the time grid");
  simulate->add_option("--samples", run.samples, "Grid points")->check(CLI::Range(2, 1 << 24));
  simulate->add_option("--mode", mode_name, "full | reduced | auto")
      ->check(CLI::IsMember({"full", "reduced", "auto"}));
  simulate->add_option("--csv", run.csv_path, "Write the curve here");
  simulate->add_option("--json", run.json_path, "Write the summary here");

  RunConfig red;
  std::string red_json;
  std::string census_csv;
  double red_gamma = 0.0;
  std::uint32_t red_marked = 0;
  auto* reduce = app.add_subcommand("reduce", "Equitable partition and quotient Hamiltonian");
  add_size(reduce, red);
  auto* red_gamma_opt = reduce->add_option("--gamma", red_gamma, "Jumping rate");
  auto* red_marked_opt = reduce->add_option("--marked", red_marked, "Marked vertex");
  reduce->add_option("--json", red_json, "Write partition and quotient JSON here");
  reduce->add_option("--census-csv", census_csv, "Write the third-order census here");

  RunConfig ana;
  std::string ana_json;
  auto* analyze = app.add_subcommand("analyze", "Closed-form rates, SRG checks, perturbation report");
  add_size(analyze, ana);
  analyze->add_option("--json", ana_json, "Write the report here");

  std::string suite;
  auto* verify = app.add_subcommand("verify", "Brute-force oracle suites");
  verify->add_option("suite", suite, "srg | census | quotient | diameter | all")->required();

  std::vector<std::uint32_t> sweep_ms;
  std::vector<std::uint32_t> sweep_js{1};
  std::string sweep_dir = "sweep";
  std::string sweep_mode = "auto";
  unsigned workers = std::max(1u, std::thread::hardware_concurrency());
  RunConfig sweep_base;
  auto* sweep = app.add_subcommand("sweep", "Run a grid of (M, j) configurations");
  sweep->add_option("--M", sweep_ms, "Initiator sizes, comma separated")->required()->delimiter(',');
  sweep->add_option("--j", sweep_js, "Orders, comma separated")->delimiter(',');
  sweep->add_option("--samples", sweep_base.samples, "Grid points")->check(CLI::Range(2, 1 << 24));
  sweep->add_option("--mode", sweep_mode, "full | reduced | auto")
      ->check(CLI::IsMember({"full", "reduced", "auto"}));
  sweep->add_option("--out-dir", sweep_dir, "Directory for per-run CSV and JSON");
  sweep->add_option("--workers", workers, "Parallel workers")->check(CLI::Range(1u, 256u));

  std::vector<std::string> argv_storage{"kronwalk"};
  argv_storage.insert(argv_storage.end(), args.begin(), args.end());
  std::vector<char*> argv;
  for (auto& a : argv_storage) argv.push_back(a.data());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kSuccess : kUsageError;
  }

  try {
    if (*simulate) {
      if (*gamma_opt) run.gamma = gamma;
      if (*marked_opt) run.marked = marked;
      if (*tmax_opt) run.t_max = t_max;
      run.mode = parse_mode(mode_name);
      print_outcome(out, run, run_simulation(run));
      return kSuccess;
    }
    if (*reduce) {
      return cmd_reduce(red.m, red.order,
                        *red_marked_opt ? std::optional<Vertex>(red_marked) : std::nullopt,
                        *red_gamma_opt ? std::optional<double>(red_gamma) : std::nullopt, red_json,
                        census_csv, out);
    }
    if (*analyze) return cmd_analyze(ana.m, ana.order, ana_json, out);
    if (*verify) return cmd_verify(suite, out);
    if (*sweep) {
      for (auto m : sweep_ms) {
        if (m < 2) throw InvalidArgument("sweep: every M must be at least 2");
      }
      for (auto j : sweep_js) {
        if (j < 1) throw InvalidArgument("sweep: every j must be at least 1");
      }
      sweep_base.mode = parse_mode(sweep_mode);
      return cmd_sweep(sweep_ms, sweep_js, sweep_base, sweep_dir, workers, out);
    }
  } catch (const SingularFormula& e) {
    err << "error: " << e.what() << "; fallback: " << e.fallback() << " (pass --gamma)\n";
    return kUsageError;
  } catch (const CapacityExceeded& e) {
    err << "error: " << e.what() << '\n';
    return kUsageError;
  } catch (const InvalidArgument& e) {
    err << "error: " << e.what() << '\n';
    return kUsageError;
  } catch (const NumericalFailure& e) {
    err << "numerical failure: " << e.what() << '\n';
    return kNumericalFailure;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kUsageError;
  }
  return kUsageError;
}

}  // namespace kronwalk::cli
