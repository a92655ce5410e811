#include "walksearch/cli.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <cstdio>
#include <fstream>
#include <optional>
#include <ostream>
#include <random>
#include <sstream>
#include <stdexcept>

#include "CLI11.hpp"
#include "walksearch/analytics.hpp"
#include "walksearch/model.hpp"
#include "walksearch/qw_continuous.hpp"
#include "walksearch/qw_discrete.hpp"
#include "walksearch/rw_continuous.hpp"
#include "walksearch/rw_discrete.hpp"

namespace walksearch::cli {

namespace {

enum class Walk { RwDiscrete, RwContinuous, QwDiscrete, QwContinuous };
enum class Mode { Full, Subspace, Closed };
enum class Format { Csv, Json };

Walk parse_walk(const std::string& name) {
  if (name == "rw-discrete") return Walk::RwDiscrete;
  if (name == "rw-continuous") return Walk::RwContinuous;
  if (name == "qw-discrete") return Walk::QwDiscrete;
  if (name == "qw-continuous") return Walk::QwContinuous;
  throw std::invalid_argument("unknown walk: " + name);
}

Mode parse_mode(const std::string& name) {
  if (name == "full") return Mode::Full;
  if (name == "subspace") return Mode::Subspace;
  if (name == "closed") return Mode::Closed;
  throw std::invalid_argument("unknown mode: " + name);
}

bool is_continuous(Walk w) { return w == Walk::RwContinuous || w == Walk::QwContinuous; }

// All floating output carries 12 significant digits.
std::string fmt(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.12g", v);
  return buf;
}

std::string one_line(std::string s) {
  std::replace(s.begin(), s.end(), '\n', ' ');
  return s;
}

// Minimal ordered JSON object/array assembly; keys and string values here
// never need escaping.
class JsonObject {
 public:
  JsonObject& raw(const std::string& key, const std::string& value) {
    body_ += first_ ? "" : ",";
    body_ += "\"" + key + "\":" + value;
    first_ = false;
    return *this;
  }
  JsonObject& str(const std::string& key, const std::string& value) {
    return raw(key, "\"" + value + "\"");
  }
  JsonObject& num(const std::string& key, double value) { return raw(key, fmt(value)); }
  JsonObject& integer(const std::string& key, long long value) {
    return raw(key, std::to_string(value));
  }
  std::string build() const { return "{" + body_ + "}"; }

 private:
  std::string body_;
  bool first_ = true;
};

void emit(const std::string& text, const std::string& output_path, std::ostream& out) {
  if (output_path.empty()) {
    out << text;
    return;
  }
  std::ofstream file(output_path);
  if (!file) throw std::runtime_error("cannot open output file: " + output_path);
  file << text;
  if (!file.good()) throw std::runtime_error("failed writing output file: " + output_path);
}

std::string record_csv(const EvolutionRecord& rec) {
  std::string s = "t,success,conserved\n";
  for (const EvolutionSample& row : rec.samples) {
    s += fmt(row.t) + "," + fmt(row.success) + "," + fmt(row.conserved) + "\n";
  }
  return s;
}

std::string record_json(const JsonObject& config, const EvolutionRecord& rec) {
  std::string samples = "[";
  bool first = true;
  for (const EvolutionSample& row : rec.samples) {
    samples += first ? "" : ",";
    samples += "[" + fmt(row.t) + "," + fmt(row.success) + "," + fmt(row.conserved) + "]";
    first = false;
  }
  samples += "]";
  JsonObject root;
  root.raw("config", config.build());
  root.raw("samples", samples);
  return root.build() + "\n";
}

struct SimulateArgs {
  std::string walk;
  int n = 0;
  int marked = 1;
  std::string mode = "full";
  double t_max = 0.0;
  double dt = 0.0;
  bool dt_given = false;
  double gamma = 0.0;
  bool gamma_given = false;
  std::string format = "csv";
  std::string output;
};

int require_steps(double t_max, const char* what) {
  if (!(t_max >= 0)) throw std::domain_error(std::string(what) + " must be nonnegative");
  if (std::floor(t_max) != t_max || t_max > 1e9) {
    throw std::domain_error(std::string("discrete walks require an integer ") + what);
  }
  return static_cast<int>(t_max);
}

double effective_dt(const SimulateArgs& a, Walk walk) {
  if (a.dt_given) {
    if (!(a.dt > 0)) throw std::domain_error("dt must be positive");
    return a.dt;
  }
  return walk == Walk::RwContinuous ? rw_continuous::default_dt(a.n)
                                    : qw_continuous::default_dt(a.n);
}

EvolutionRecord closed_form_record(Walk walk, int n, const std::vector<double>& times) {
  EvolutionRecord rec;
  for (double t : times) {
    double success = 0.0;
    switch (walk) {
      case Walk::RwDiscrete:
        success = rw_discrete::success_closed_form(n, t);
        break;
      case Walk::RwContinuous:
        success = rw_continuous::success_closed_form(n, t);
        break;
      case Walk::QwDiscrete:
        success = qw_discrete::success_closed_form(n, static_cast<long long>(t));
        break;
      case Walk::QwContinuous:
        success = qw_continuous::success_closed_form(n, t);
        break;
    }
    rec.samples.push_back({t, success, 1.0});
  }
  return rec;
}

std::vector<double> integer_times(int steps) {
  std::vector<double> ts(static_cast<std::size_t>(steps) + 1);
  for (int t = 0; t <= steps; ++t) ts[t] = t;
  return ts;
}

int do_simulate(const SimulateArgs& a, std::ostream& out, std::ostream& err) {
  const Walk walk = parse_walk(a.walk);
  const Mode mode = parse_mode(a.mode);
  const CompleteGraphInstance g(a.n, a.marked);

  if (a.dt_given && !is_continuous(walk)) {
    throw std::domain_error("--dt applies only to continuous-time walks");
  }
  if (a.gamma_given && walk != Walk::QwContinuous) {
    throw std::domain_error("--gamma applies only to the continuous-time quantum walk");
  }

  double gamma = 0.0;
  bool critical = true;
  if (walk == Walk::QwContinuous) {
    const double crit = qw_continuous::critical_gamma(g.n);
    gamma = a.gamma_given ? a.gamma : crit;
    critical = std::abs(gamma - crit) <= 1e-15 * std::max(1.0, crit);
    if (!critical && mode != Mode::Full) {
      throw std::domain_error(
          "closed and subspace modes assume the critical gamma 1/N; use --mode full");
    }
    if (!critical) {
      err << "note: gamma " << fmt(gamma) << " differs from the critical 1/N = " << fmt(crit)
          << "; closed-form predictions do not apply\n";
    }
  }

  EvolutionRecord rec;
  double dt_effective = 0.0;
  if (is_continuous(walk)) {
    dt_effective = effective_dt(a, walk);
    const std::vector<double> times = sample_times(a.t_max, dt_effective);
    switch (mode) {
      case Mode::Full:
        rec = (walk == Walk::RwContinuous)
                  ? rw_continuous::evolve_full(g, a.t_max, dt_effective)
                  : qw_continuous::evolve_full(g, gamma, a.t_max, dt_effective);
        break;
      case Mode::Subspace:
        for (double t : times) {
          if (walk == Walk::RwContinuous) {
            const auto s = rw_continuous::evolve_subspace(g, t);
            rec.samples.push_back({t, s.marked, s.marked + s.unmarked});
          } else {
            const auto s = qw_continuous::evolve_subspace(g, t);
            rec.samples.push_back(
                {t, std::norm(s.marked), std::norm(s.marked) + std::norm(s.unmarked)});
          }
        }
        break;
      case Mode::Closed:
        rec = closed_form_record(walk, g.n, times);
        break;
    }
  } else {
    const int steps = require_steps(a.t_max, "--t-max");
    switch (mode) {
      case Mode::Full:
        rec = (walk == Walk::RwDiscrete) ? rw_discrete::evolve_full(g, steps)
                                         : qw_discrete::evolve_full(g, steps);
        break;
      case Mode::Subspace:
        if (walk == Walk::RwDiscrete) {
          const auto series = rw_discrete::evolve_subspace(g, steps);
          for (std::size_t t = 0; t < series.size(); ++t) {
            rec.samples.push_back({static_cast<double>(t), series[t].marked,
                                   series[t].marked + series[t].unmarked});
          }
        } else {
          const auto series = qw_discrete::evolve_subspace(g, steps);
          for (std::size_t t = 0; t < series.size(); ++t) {
            const auto& s = series[t];
            const double norm_sq = s.from_marked * s.from_marked + s.to_marked * s.to_marked +
                                   s.between_unmarked * s.between_unmarked;
            rec.samples.push_back(
                {static_cast<double>(t), s.from_marked * s.from_marked, norm_sq});
          }
        }
        break;
      case Mode::Closed:
        rec = closed_form_record(walk, g.n, integer_times(steps));
        break;
    }
  }

  if (a.format == "json") {
    JsonObject config;
    config.str("command", "simulate").str("walk", a.walk).integer("n", g.n);
    config.integer("marked", g.marked).str("mode", a.mode).num("t_max", a.t_max);
    if (is_continuous(walk)) config.num("dt", dt_effective);
    if (walk == Walk::QwContinuous) config.num("gamma", gamma);
    emit(record_json(config, rec), a.output, out);
  } else {
    emit(record_csv(rec), a.output, out);
  }
  return 0;
}

struct RuntimeArgs {
  std::string walk;
  int n = 0;
  double epsilon = 0.1;
  std::string format = "csv";
  std::string output;
};

int do_runtime(const RuntimeArgs& a, std::ostream& out) {
  const Walk walk = parse_walk(a.walk);
  if (a.n < 2) throw std::invalid_argument("runtime requires n >= 2");

  double t = 0.0;
  double success = 0.0;
  std::optional<qw_discrete::RepetitionPlan> plan;
  switch (walk) {
    case Walk::RwDiscrete:
      t = rw_discrete::runtime_for_epsilon(a.n, a.epsilon);
      success = 1.0 - a.epsilon;
      break;
    case Walk::RwContinuous:
      t = rw_continuous::runtime_for_epsilon(a.n, a.epsilon);
      success = 1.0 - a.epsilon;
      break;
    case Walk::QwDiscrete: {
      const long long steps = qw_discrete::optimal_steps(a.n);
      t = static_cast<double>(steps);
      success = qw_discrete::success_closed_form(a.n, steps);
      plan = qw_discrete::repetition_plan(a.n, a.epsilon);
      break;
    }
    case Walk::QwContinuous:
      t = qw_continuous::runtime(a.n);
      success = qw_continuous::success_closed_form(a.n, t);
      break;
  }

  if (a.format == "json") {
    JsonObject config;
    config.str("command", "runtime").str("walk", a.walk).integer("n", a.n);
    config.num("epsilon", a.epsilon);
    JsonObject result;
    result.num("epsilon", a.epsilon).num("t", t).num("success", success);
    if (plan) {
      result.integer("runs", plan->runs).num("total_steps", plan->total_steps);
    }
    JsonObject root;
    root.raw("config", config.build()).raw("runtime", result.build());
    emit(root.build() + "\n", a.output, out);
  } else {
    std::string s = "epsilon,t,success";
    if (plan) s += ",runs,total_steps";
    s += "\n" + fmt(a.epsilon) + "," + fmt(t) + "," + fmt(success);
    if (plan) s += "," + std::to_string(plan->runs) + "," + fmt(plan->total_steps);
    s += "\n";
    emit(s, a.output, out);
  }
  return 0;
}

struct TableArgs {
  int n = 0;
  double epsilon = 0.1;
  std::string format = "csv";
  std::string output;
};

std::string cell_csv(const analytics::SummaryCell& c) { return c.has_value ? fmt(c.value) : c.label; }

std::string cell_json(const analytics::SummaryCell& c) {
  return c.has_value ? fmt(c.value) : "\"" + c.label + "\"";
}

int do_table(const TableArgs& a, std::ostream& out) {
  const analytics::SummaryTable table = analytics::summary_table(a.n, a.epsilon);

  using CellOf = const analytics::SummaryCell& (*)(const analytics::SummaryColumn&);
  const std::pair<const char*, CellOf> rows[] = {
      {"Probability",
       +[](const analytics::SummaryColumn& c) -> const analytics::SummaryCell& {
         return c.probability;
       }},
      {"Runtime",
       +[](const analytics::SummaryColumn& c) -> const analytics::SummaryCell& {
         return c.runtime;
       }},
      {"Asymptotic Probability",
       +[](const analytics::SummaryColumn& c) -> const analytics::SummaryCell& {
         return c.asymptotic_probability;
       }},
      {"Asymptotic Runtime",
       +[](const analytics::SummaryColumn& c) -> const analytics::SummaryCell& {
         return c.asymptotic_runtime;
       }},
  };

  if (a.format == "json") {
    JsonObject config;
    config.str("command", "table").integer("n", a.n).num("epsilon", a.epsilon);
    JsonObject body;
    for (const auto& [name, cell] : rows) {
      JsonObject row;
      for (const analytics::SummaryColumn& col : table.columns) {
        row.raw(col.walk, cell_json(cell(col)));
      }
      body.raw(name, row.build());
    }
    JsonObject order;
    for (const analytics::SummaryColumn& col : table.columns) {
      order.str(col.walk, col.overall_order);
    }
    body.raw("Overall Runtime", order.build());
    JsonObject root;
    root.raw("config", config.build()).raw("table", body.build());
    emit(root.build() + "\n", a.output, out);
  } else {
    std::string s = "row";
    for (const analytics::SummaryColumn& col : table.columns) s += "," + col.walk;
    s += "\n";
    for (const auto& [name, cell] : rows) {
      s += name;
      for (const analytics::SummaryColumn& col : table.columns) s += "," + cell_csv(cell(col));
      s += "\n";
    }
    s += "Overall Runtime";
    for (const analytics::SummaryColumn& col : table.columns) s += "," + col.overall_order;
    s += "\n";
    emit(s, a.output, out);
  }
  return 0;
}

struct DeltaArgs {
  std::vector<int> ns;
  std::string format = "csv";
  std::string output;
};

int do_delta(const DeltaArgs& a, std::ostream& out) {
  std::vector<analytics::DeltaReport> reports;
  reports.reserve(a.ns.size());
  for (int n : a.ns) reports.push_back(analytics::delta_max(n));

  if (a.format == "json") {
    JsonObject config;
    config.str("command", "delta");
    std::string ns = "[";
    for (std::size_t i = 0; i < a.ns.size(); ++i) {
      ns += (i ? "," : "") + std::to_string(a.ns[i]);
    }
    ns += "]";
    config.raw("n", ns);
    std::string body = "[";
    for (std::size_t i = 0; i < reports.size(); ++i) {
      JsonObject row;
      row.integer("n", reports[i].n).num("t_star", reports[i].t_star);
      row.num("delta_max", reports[i].delta_max).num("asymptote", reports[i].asymptote);
      body += (i ? "," : "") + row.build();
    }
    body += "]";
    JsonObject root;
    root.raw("config", config.build()).raw("reports", body);
    emit(root.build() + "\n", a.output, out);
  } else {
    std::string s = "n,t_star,delta_max,asymptote\n";
    for (const analytics::DeltaReport& r : reports) {
      s += std::to_string(r.n) + "," + fmt(r.t_star) + "," + fmt(r.delta_max) + "," +
           fmt(r.asymptote) + "\n";
    }
    emit(s, a.output, out);
  }
  return 0;
}

struct SampleArgs {
  std::string walk;
  int n = 0;
  int marked = 1;
  double t_max = 0.0;
  double dt = 0.0;
  bool dt_given = false;
  std::uint64_t seed = 0;
  std::string format = "csv";
  std::string output;
};

// One simulated measurement per sample time: each row collapses an
// independent copy of the evolved state at that time.
int do_sample(const SampleArgs& a, std::ostream& out) {
  const Walk walk = parse_walk(a.walk);
  const CompleteGraphInstance g(a.n, a.marked);
  if (a.dt_given && !is_continuous(walk)) {
    throw std::domain_error("--dt applies only to continuous-time walks");
  }

  std::mt19937_64 rng(a.seed);
  std::vector<std::pair<double, int>> draws;
  double dt_effective = 0.0;

  switch (walk) {
    case Walk::RwDiscrete: {
      const int steps = require_steps(a.t_max, "--t-max");
      const auto p = rw_discrete::build_transition(g).matrix;
      std::vector<double> state = uniform_distribution(g).probs;
      for (int t = 0; t <= steps; ++t) {
        if (t > 0) state = linalg::matvec(p, state);
        draws.emplace_back(t, sample_vertex(ProbabilityState(state), rng));
      }
      break;
    }
    case Walk::QwDiscrete: {
      const int steps = require_steps(a.t_max, "--t-max");
      const auto ops = qw_discrete::build_operators(g);
      ArcState state = uniform_superposition_arcs(g);
      for (int t = 0; t <= steps; ++t) {
        if (t > 0) state = qw_discrete::step(state, ops);
        draws.emplace_back(t, sample_vertex(state, rng));
      }
      break;
    }
    case Walk::RwContinuous: {
      const double dt = a.dt_given ? a.dt : rw_continuous::default_dt(g.n);
      dt_effective = dt;
      const std::vector<double> times = sample_times(a.t_max, dt);
      auto generator = rw_continuous::build_absorbing_laplacian(g).matrix;
      for (double& v : generator.data()) v /= g.n;
      const auto hop = linalg::expm(generator, dt, 1e-13);
      std::vector<double> state = uniform_distribution(g).probs;
      for (std::size_t k = 0; k < times.size(); ++k) {
        if (k > 0) {
          const double span = times[k] - times[k - 1];
          state = (std::abs(span - dt) <= 1e-12 * dt)
                      ? linalg::matvec(hop, state)
                      : linalg::expm_apply(generator, span, state, 1e-13);
        }
        draws.emplace_back(times[k], sample_vertex(ProbabilityState(state), rng));
      }
      break;
    }
    case Walk::QwContinuous: {
      const double dt = a.dt_given ? a.dt : qw_continuous::default_dt(g.n);
      dt_effective = dt;
      const std::vector<double> times = sample_times(a.t_max, dt);
      const auto h = qw_continuous::build_hamiltonian(g, qw_continuous::critical_gamma(g.n));
      linalg::ComplexMatrix generator(g.n, g.n);
      for (int r = 0; r < g.n; ++r) {
        for (int c = 0; c < g.n; ++c) generator(r, c) = cplx{0.0, -h.matrix(r, c)};
      }
      const auto hop = linalg::expm(generator, dt, 1e-13);
      std::vector<cplx> state = uniform_superposition_vertices(g).amps;
      for (std::size_t k = 0; k < times.size(); ++k) {
        if (k > 0) {
          const double span = times[k] - times[k - 1];
          state = (std::abs(span - dt) <= 1e-12 * dt)
                      ? linalg::matvec(hop, state)
                      : linalg::expm_apply(generator, span, state, 1e-13);
        }
        draws.emplace_back(times[k], sample_vertex(VertexAmplitudeState(state), rng));
      }
      break;
    }
  }

  if (a.format == "json") {
    JsonObject config;
    config.str("command", "sample").str("walk", a.walk).integer("n", g.n);
    config.integer("marked", g.marked).num("t_max", a.t_max);
    if (is_continuous(walk)) config.num("dt", dt_effective);
    config.integer("seed", static_cast<long long>(a.seed));
    std::string body = "[";
    for (std::size_t i = 0; i < draws.size(); ++i) {
      body += (i ? "," : "");
      body += "[" + fmt(draws[i].first) + "," + std::to_string(draws[i].second) + "]";
    }
    body += "]";
    JsonObject root;
    root.raw("config", config.build()).raw("samples", body);
    emit(root.build() + "\n", a.output, out);
  } else {
    std::string s = "t,vertex\n";
    for (const auto& [t, v] : draws) s += fmt(t) + "," + std::to_string(v) + "\n";
    emit(s, a.output, out);
  }
  return 0;
}

void add_format_options(CLI::App* cmd, std::string& format, std::string& output) {
  cmd->add_option("--format", format, "Output format")
      ->check(CLI::IsMember({"csv", "json"}));
  cmd->add_option("--output", output, "Write to this file instead of standard output");
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Unstructured search on the complete graph by random and quantum walk"};
  app.require_subcommand(1);

  const std::vector<std::string> walk_names{"rw-discrete", "rw-continuous", "qw-discrete",
                                            "qw-continuous"};

  SimulateArgs sim;
  CLI::App* simulate = app.add_subcommand("simulate", "Emit a success-probability time series");
  simulate->add_option("--walk", sim.walk, "Walk family")
      ->required()
      ->check(CLI::IsMember(walk_names));
  simulate->add_option("--n", sim.n, "Number of vertices")->required();
  simulate->add_option("--marked", sim.marked, "Marked vertex label (1-based)");
  simulate->add_option("--mode", sim.mode, "Evolution route")
      ->check(CLI::IsMember({"full", "subspace", "closed"}));
  simulate->add_option("--t-max", sim.t_max, "Final time (steps for discrete walks)")
      ->required();
  simulate->add_option("--dt", sim.dt, "Sample spacing, continuous walks only");
  simulate->add_option("--gamma", sim.gamma, "Jumping rate, qw-continuous only");
  add_format_options(simulate, sim.format, sim.output);

  RuntimeArgs rt;
  CLI::App* runtime = app.add_subcommand("runtime", "Report the time to reach the target");
  runtime->add_option("--walk", rt.walk, "Walk family")
      ->required()
      ->check(CLI::IsMember(walk_names));
  runtime->add_option("--n", rt.n, "Number of vertices")->required();
  runtime->add_option("--epsilon", rt.epsilon, "Failure probability target");
  add_format_options(runtime, rt.format, rt.output);

  TableArgs tab;
  CLI::App* table = app.add_subcommand("table", "Summary table across all four walks");
  table->add_option("--n", tab.n, "Number of vertices")->required();
  table->add_option("--epsilon", tab.epsilon, "Failure probability target");
  add_format_options(table, tab.format, tab.output);

  DeltaArgs del;
  CLI::App* delta = app.add_subcommand("delta", "Random-walk convergence report per n");
  delta->add_option("--n", del.ns, "Number of vertices (repeatable)")->required();
  add_format_options(delta, del.format, del.output);

  SampleArgs smp;
  CLI::App* sample = app.add_subcommand("sample", "Draw one measurement per sample time");
  sample->add_option("--walk", smp.walk, "Walk family")
      ->required()
      ->check(CLI::IsMember(walk_names));
  sample->add_option("--n", smp.n, "Number of vertices")->required();
  sample->add_option("--marked", smp.marked, "Marked vertex label (1-based)");
  sample->add_option("--t-max", smp.t_max, "Final time (steps for discrete walks)")
      ->required();
  sample->add_option("--dt", smp.dt, "Sample spacing, continuous walks only");
  sample->add_option("--seed", smp.seed, "Measurement RNG seed");
  add_format_options(sample, smp.format, smp.output);

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(std::move(reversed));
    sim.dt_given = simulate->count("--dt") > 0;
    sim.gamma_given = simulate->count("--gamma") > 0;
    smp.dt_given = sample->count("--dt") > 0;

    if (simulate->parsed()) return do_simulate(sim, out, err);
    if (runtime->parsed()) return do_runtime(rt, out);
    if (table->parsed()) return do_table(tab, out);
    if (delta->parsed()) return do_delta(del, out);
    if (sample->parsed()) return do_sample(smp, out);
    throw std::logic_error("no subcommand dispatched");
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "error: " << one_line(e.what()) << "\n";
    return std::max(1, e.get_exit_code());
  } catch (const std::exception& e) {
    err << "error: " << one_line(e.what()) << "\n";
    return 1;
  }
}

}  // namespace walksearch::cli
