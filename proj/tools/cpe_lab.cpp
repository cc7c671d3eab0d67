#include <CLI11.hpp>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include "cpe/config.hpp"
#include "cpe/csv.hpp"
#include "cpe/errors.hpp"
#include "cpe/experiments.hpp"
#include "cpe/inequality_lab.hpp"
#include "cpe/initial_conditions.hpp"
#include "cpe/integrators.hpp"
#include "cpe/picard.hpp"
#include "cpe/snapshot.hpp"

namespace fs = std::filesystem;
using namespace cpe;

namespace {

struct Globals {
  std::string config;
  std::string out = ".";
  std::optional<std::uint64_t> seed;
  bool quiet = false;
};

class Summary {
 public:
  template <class T>
  Summary& add(const std::string& key, const T& value) {
    std::ostringstream os;
    if constexpr (std::is_floating_point_v<T>) {
      os << format_double(value);
    } else {
      os << value;
    }
    lines_ += key + " = " + os.str() + "\n";
    return *this;
  }
  void emit(const Globals& g) const {
    std::ofstream(fs::path(g.out) / "summary.txt") << lines_;
    if (!g.quiet) std::cout << lines_;
  }

 private:
  std::string lines_;
};

RunConfig load(const Globals& g) {
  if (g.config.empty()) throw UsageFault("--config is required");
  RunConfig cfg = load_config(g.config);
  if (g.seed) apply_seed(cfg, *g.seed);
  fs::create_directories(g.out);
  return cfg;
}

std::string out_path(const Globals& g, const char* name) { return (fs::path(g.out) / name).string(); }

int finish_fault(Summary& s, const Globals& g, FaultKind kind, const std::string& msg) {
  s.add("status", "fault").add("fault", to_string(kind)).add("message", msg);
  s.emit(g);
  return exit_code(kind);
}

int cmd_run(const Globals& g) {
  const RunConfig cfg = load(g);
  const State u0 = make_initial(cfg.grid(), cfg.params, cfg.initial);
  const RunResult r = advance(u0, cfg.params, cfg.run);
  write_csv(out_path(g, "timeseries.csv"), energy_table(r.records));
  write_snapshot(out_path(g, "final.cpe"), r.final_state, r.t_final, cfg.params);
  Summary s;
  s.add("command", "run").add("steps", r.steps).add("steps_taken", r.steps_taken).add("dt", r.dt)
      .add("t_final", r.t_final).add("records", r.records.size());
  for (const auto& w : r.warnings) s.add("warning", w);
  if (!r.ok()) return finish_fault(s, g, *r.fault, r.fault_message);
  s.add("status", "ok");
  s.emit(g);
  return 0;
}

int cmd_mms(const Globals& g) {
  const RunConfig cfg = load(g);
  MmsConfig mc;
  mc.case_id = cfg.experiment.mms_case;
  mc.params = cfg.params;
  mc.T = cfg.experiment.mms_T;
  mc.dts = cfg.experiment.mms_dts;
  mc.temporal_n = cfg.experiment.mms_temporal_n;
  mc.resolutions = cfg.experiment.mms_resolutions;
  mc.spatial_dt = cfg.experiment.mms_spatial_dt;
  const MmsTable t = mms_run(mc);
  CsvTable csv;
  csv.header = {"study", "n", "dt", "steps", "error", "order"};
  auto emit = [&](const char* study, const std::vector<MmsRow>& rows) {
    for (const auto& r : rows)
      csv.add_row({study, std::to_string(r.n), format_double(r.dt), std::to_string(r.steps),
                   format_double(r.error), format_double(r.order)});
  };
  emit("temporal", t.temporal);
  emit("spatial", t.spatial);
  write_csv(out_path(g, "mms.csv"), csv);
  Summary s;
  s.add("command", "mms").add("case", t.case_id).add("temporal_order", t.temporal_order)
      .add("status", "ok");
  s.emit(g);
  return 0;
}

int cmd_eps_sweep(const Globals& g) {
  const RunConfig cfg = load(g);
  const State u0 = make_initial(cfg.grid(), cfg.params, cfg.initial);
  EpsilonSweepConfig ec;
  ec.params = cfg.params;
  ec.T = cfg.run.T_final;
  ec.eps = cfg.experiment.eps;
  ec.c_cfl = cfg.run.c_cfl;
  const EpsilonSweepResult r = epsilon_sweep(u0, ec);
  CsvTable csv;
  csv.header = {"eps", "distance", "mass_drift"};
  for (const auto& row : r.rows)
    csv.add_row({format_double(row.eps), format_double(row.distance), format_double(row.mass_drift)});
  write_csv(out_path(g, "eps_sweep.csv"), csv);
  Summary s;
  s.add("command", "eps-sweep").add("steps", r.steps).add("dt", r.dt)
      .add("reference_mass_drift", r.reference_mass_drift)
      .add("strictly_decreasing", r.strictly_decreasing ? "true" : "false").add("slope", r.slope)
      .add("status", "ok");
  s.emit(g);
  return 0;
}

int cmd_perturb(const Globals& g) {
  const RunConfig cfg = load(g);
  const Grid grid = cfg.grid();
  const State u0 = make_initial(grid, cfg.params, cfg.initial);
  const State dir = random_direction(grid, cfg.experiment.perturb_band, cfg.seed + 1);
  PerturbationConfig pc;
  pc.params = cfg.params;
  pc.T = cfg.run.T_final;
  pc.deltas = cfg.experiment.deltas;
  pc.c_cfl = cfg.run.c_cfl;
  const PerturbationResult r = continuous_dependence(u0, dir, pc);
  CsvTable csv;
  csv.header = {"delta", "difference", "ratio", "dissipation"};
  for (const auto& row : r.rows)
    csv.add_row({format_double(row.delta), format_double(row.difference), format_double(row.ratio),
                 format_double(row.dissipation)});
  write_csv(out_path(g, "perturb.csv"), csv);
  Summary s;
  s.add("command", "perturb").add("steps", r.steps).add("dt", r.dt)
      .add("ratio_spread", r.ratio_spread).add("dissipation_slope", r.dissipation_slope)
      .add("status", "ok");
  s.emit(g);
  return 0;
}

int cmd_picard(const Globals& g) {
  const RunConfig cfg = load(g);
  const State u0 = make_initial(cfg.grid(), cfg.params, cfg.initial);
  PicardOptions po;
  po.T = cfg.run.T_final;
  po.dt = cfg.run.dt;
  po.c_cfl = cfg.run.c_cfl;
  po.tol = cfg.experiment.picard_tol;
  po.max_iter = cfg.experiment.picard_max_iter;
  po.raise_on_no_contraction = false;
  const PicardResult r = picard_solve(u0, cfg.params, po);

  CsvTable it;
  it.header = {"iteration", "delta", "ratio"};
  for (std::size_t k = 0; k < r.report.deltas.size(); ++k)
    it.add_row({std::to_string(k + 1), format_double(r.report.deltas[k]),
                k > 0 ? format_double(r.report.ratios[k - 1]) : std::string{}});
  write_csv(out_path(g, "picard.csv"), it);

  std::vector<EnergyReport> records;
  DissipationSums sums;
  for (std::size_t n = 0; n < r.trajectory.size(); ++n) {
    const double t = static_cast<double>(n) * r.dt;
    sums.observe(r.trajectory[n], t);
    if (n % static_cast<std::size_t>(cfg.run.record_every) == 0 || n + 1 == r.trajectory.size())
      records.push_back(energy_report(r.trajectory[n], cfg.params, t, sums));
  }
  write_csv(out_path(g, "timeseries.csv"), energy_table(records));

  Summary s;
  s.add("command", "picard").add("steps", r.steps).add("dt", r.dt)
      .add("iterations", r.report.iterations)
      .add("converged", r.report.converged ? "true" : "false");
  if (r.report.no_contraction)
    return finish_fault(s, g, FaultKind::NoContraction, "contraction ratios stayed at or above 1");
  s.add("status", "ok");
  s.emit(g);
  return 0;
}

int cmd_ineq(const Globals& g) {
  const RunConfig cfg = load(g);
  const InequalityStats st = inequality_sample(cfg.ineq);
  CsvTable trials;
  trials.header = {"trial", "lhs", "rhs", "ratio"};
  for (std::size_t k = 0; k < st.samples.size(); ++k)
    trials.add_row({std::to_string(k), format_double(st.samples[k].lhs),
                    format_double(st.samples[k].rhs), format_double(st.samples[k].ratio)});
  write_csv(out_path(g, "ineq.csv"), trials);
  CsvTable hist;
  hist.header = {"bin_lo", "bin_hi", "count"};
  const double w = st.max_ratio / static_cast<double>(st.histogram.size());
  for (std::size_t b = 0; b < st.histogram.size(); ++b)
    hist.add_row({format_double(b * w), format_double((b + 1) * w), std::to_string(st.histogram[b])});
  write_csv(out_path(g, "ineq_histogram.csv"), hist);
  Summary s;
  s.add("command", "ineq-lab").add("kind", to_string(st.kind)).add("grid", st.grid)
      .add("trials", st.trials).add("max_ratio", st.max_ratio).add("mean_ratio", st.mean_ratio)
      .add("status", "ok");
  s.emit(g);
  return 0;
}

int cmd_inspect(const std::string& path, bool quiet) {
  const SnapshotHeader h = read_snapshot_header(path);
  read_snapshot(path);
  if (!quiet) {
    std::cout << "version = " << h.version << "\n"
              << "nx = " << h.nx << "\nny = " << h.ny << "\nnz = " << h.nz << "\n"
              << "time = " << format_double(h.time) << "\n"
              << "gamma = " << format_double(h.gamma) << "\n"
              << "mu = " << format_double(h.mu) << "\n"
              << "lambda = " << format_double(h.lambda) << "\n"
              << "kappa = " << format_double(h.kappa) << "\n"
              << "R = " << format_double(h.R) << "\n"
              << "epsilon = " << format_double(h.epsilon) << "\n";
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Primitive-equation channel solver and experiment driver"};
  app.require_subcommand(1);
  app.fallthrough();
  Globals g;
  std::uint64_t seed = 0;
  app.add_option("--config", g.config, "INI configuration file");
  app.add_option("--out", g.out, "Output directory");
  auto* seed_opt = app.add_option("--seed", seed, "Override the configured seed");
  app.add_flag("--quiet", g.quiet, "Suppress the summary on stdout");

  std::string snapshot;
  auto* run = app.add_subcommand("run", "Integrate the regularized system with RK4");
  auto* mms = app.add_subcommand("mms", "Manufactured-solution convergence table");
  auto* eps = app.add_subcommand("eps-sweep", "Distances to the eps = 0 run");
  auto* perturb = app.add_subcommand("perturb", "Continuous dependence on initial data");
  auto* picard = app.add_subcommand("picard", "Picard iteration of the solution map");
  auto* ineq = app.add_subcommand("ineq-lab", "Sample the product and commutator estimates");
  auto* inspect = app.add_subcommand("inspect", "Print a snapshot header");
  inspect->add_option("snapshot", snapshot, "Snapshot file")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }
  if (seed_opt->count() > 0) g.seed = seed;

  try {
    if (*run) return cmd_run(g);
    if (*mms) return cmd_mms(g);
    if (*eps) return cmd_eps_sweep(g);
    if (*perturb) return cmd_perturb(g);
    if (*picard) return cmd_picard(g);
    if (*ineq) return cmd_ineq(g);
    if (*inspect) return cmd_inspect(snapshot, g.quiet);
  } catch (const Fault& f) {
    std::cerr << "cpe-lab: " << to_string(f.kind()) << ": " << f.what() << "\n";
    return exit_code(f.kind());
  } catch (const std::exception& e) {
    std::cerr << "cpe-lab: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
