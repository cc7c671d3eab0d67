#include "cpe/config.hpp"

#include <boost/property_tree/ini_parser.hpp>
#include <boost/property_tree/ptree.hpp>
#include <charconv>
#include <filesystem>
#include <fstream>
#include <map>
#include <set>
#include <sstream>

#include "cpe/errors.hpp"

namespace cpe {

namespace pt = boost::property_tree;

namespace {

const std::map<std::string, std::set<std::string>>& schema() {
  static const std::map<std::string, std::set<std::string>> s{
      {"grid", {"nx", "ny", "nz"}},
      {"physics",
       {"gamma", "mu", "lambda", "kappa", "R", "epsilon", "sigma_floor", "p_floor", "tol_bc"}},
      {"initial", {"family", "sigma0", "p0", "amplitude", "band", "snapshot"}},
      {"run", {"T", "dt", "c_cfl", "record_every", "monitor_energy"}},
      {"experiment",
       {"eps", "deltas", "perturb_band", "mms_case", "mms_T", "mms_dts", "mms_temporal_n",
        "mms_resolutions", "mms_spatial_dt", "picard_tol", "picard_max_iter"}},
      {"ineq",
       {"kind", "m", "q", "r1", "s1", "r2", "s2", "trials", "band_limit", "constant_f", "bins"}},
  };
  return s;
}

std::string trim(std::string s) {
  const auto b = s.find_first_not_of(" \t");
  const auto e = s.find_last_not_of(" \t");
  return b == std::string::npos ? std::string{} : s.substr(b, e - b + 1);
}

template <class T>
T parse_number(const std::string& key, const std::string& raw) {
  const std::string s = trim(raw);
  T v{};
  const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc{} || ptr != s.data() + s.size() || s.empty())
    throw ParseFault(key, "cannot parse '" + raw + "' as a number");
  return v;
}

template <class T>
std::vector<T> parse_list(const std::string& key, const std::string& raw) {
  std::vector<T> out;
  std::stringstream ss(raw);
  std::string item;
  while (std::getline(ss, item, ',')) out.push_back(parse_number<T>(key, item));
  if (out.empty()) throw ParseFault(key, "empty list");
  return out;
}

bool parse_bool(const std::string& key, const std::string& raw) {
  const std::string s = trim(raw);
  if (s == "true" || s == "1" || s == "yes") return true;
  if (s == "false" || s == "0" || s == "no") return false;
  throw ParseFault(key, "expected true or false, got '" + raw + "'");
}

class Section {
 public:
  Section(const pt::ptree* tree, std::string name) : tree_(tree), name_(std::move(name)) {}
  std::optional<std::string> raw(const std::string& k) const {
    if (!tree_) return std::nullopt;
    auto v = tree_->get_optional<std::string>(pt::ptree::path_type(k, '\0'));
    if (!v) return std::nullopt;
    return trim(*v);
  }
  std::string key(const std::string& k) const { return name_ + "." + k; }
  template <class T>
  void number(const std::string& k, T& out) const {
    if (auto v = raw(k)) out = parse_number<T>(key(k), *v);
  }
  template <class T>
  void list(const std::string& k, std::vector<T>& out) const {
    if (auto v = raw(k)) out = parse_list<T>(key(k), *v);
  }
  void text(const std::string& k, std::string& out) const {
    if (auto v = raw(k)) out = *v;
  }
  void flag(const std::string& k, bool& out) const {
    if (auto v = raw(k)) out = parse_bool(key(k), *v);
  }

 private:
  const pt::ptree* tree_;
  std::string name_;
};

std::string reason_of(const ConstraintFault& e) {
  return std::string(e.what()).substr(e.key().size() + 2);
}

void require(bool ok, const std::string& key, const std::string& reason) {
  if (!ok) throw ConstraintFault(key, reason);
}

}  // namespace

void apply_seed(RunConfig& cfg, std::uint64_t seed) {
  cfg.seed = seed;
  cfg.initial.seed = seed;
  cfg.ineq.seed = seed;
}

RunConfig parse_config(const std::string& text) {
  pt::ptree tree;
  try {
    std::istringstream in(text);
    pt::ini_parser::read_ini(in, tree);
  } catch (const pt::ini_parser_error& e) {
    throw ParseFault("line " + std::to_string(e.line()), e.message());
  }

  for (const auto& [name, node] : tree) {
    if (node.empty()) {
      if (name != "seed") throw ParseFault(name, "unknown top-level key");
      continue;
    }
    const auto it = schema().find(name);
    if (it == schema().end()) throw ParseFault(name, "unknown section");
    for (const auto& [k, child] : node) {
      if (!child.empty() || !it->second.count(k)) throw ParseFault(name + "." + k, "unknown key");
    }
  }
  auto section = [&](const std::string& name) {
    const auto child = tree.get_child_optional(name);
    return Section(child ? &*child : nullptr, name);
  };

  RunConfig cfg;
  if (auto s = tree.get_optional<std::string>("seed"))
    cfg.seed = parse_number<std::uint64_t>("seed", *s);

  const Section grid = section("grid");
  grid.number("nx", cfg.nx);
  grid.number("ny", cfg.ny);
  grid.number("nz", cfg.nz);
  try {
    (void)cfg.grid();
  } catch (const ConstraintFault& e) {
    throw ConstraintFault("grid." + e.key(), reason_of(e));
  }

  const Section phys = section("physics");
  double gamma = 1.4, mu = 1.0, lambda = 0.0, kappa = 1.0, R = 1.0, eps = 0.0, sf = 0.5, pf = 0.5;
  phys.number("gamma", gamma);
  phys.number("mu", mu);
  phys.number("lambda", lambda);
  phys.number("kappa", kappa);
  phys.number("R", R);
  phys.number("epsilon", eps);
  phys.number("sigma_floor", sf);
  phys.number("p_floor", pf);
  phys.number("tol_bc", cfg.tol_bc);
  try {
    cfg.params = PhysParams(gamma, mu, lambda, kappa, R, eps, sf, pf);
  } catch (const ConstraintFault& e) {
    throw ConstraintFault("physics." + e.key(), reason_of(e));
  }
  require(cfg.tol_bc > 0.0, "physics.tol_bc", "must be positive");

  const Section init = section("initial");
  init.text("family", cfg.initial.family);
  init.number("sigma0", cfg.initial.sigma0);
  init.number("p0", cfg.initial.p0);
  init.number("amplitude", cfg.initial.amplitude);
  init.number("band", cfg.initial.band);
  init.text("snapshot", cfg.initial.snapshot_path);
  static const std::set<std::string> families{"constant", "example-A", "smooth-random", "snapshot"};
  require(families.count(cfg.initial.family) > 0, "initial.family",
          "unknown family '" + cfg.initial.family + "'");
  require(cfg.initial.sigma0 > 0.0, "initial.sigma0", "must be positive");
  require(cfg.initial.p0 > 0.0, "initial.p0", "must be positive");
  require(cfg.initial.band >= 1, "initial.band", "must be at least 1");
  if (cfg.initial.family == "snapshot")
    require(std::filesystem::exists(cfg.initial.snapshot_path), "initial.snapshot",
            "file '" + cfg.initial.snapshot_path + "' does not exist");

  const Section run = section("run");
  cfg.run.T_final = 0.1;
  run.number("T", cfg.run.T_final);
  if (auto dt = run.raw("dt"); dt && *dt != "auto") cfg.run.dt = parse_number<double>("run.dt", *dt);
  run.number("c_cfl", cfg.run.c_cfl);
  run.number("record_every", cfg.run.record_every);
  run.flag("monitor_energy", cfg.run.monitor_energy);
  require(cfg.run.T_final > 0.0, "run.T", "must be positive");
  require(cfg.run.dt >= 0.0, "run.dt", "must be positive or auto");
  require(cfg.run.c_cfl > 0.0, "run.c_cfl", "must be positive");
  require(cfg.run.record_every >= 1, "run.record_every", "must be at least 1");

  const Section ex = section("experiment");
  ExperimentConfig& e = cfg.experiment;
  ex.list("eps", e.eps);
  ex.list("deltas", e.deltas);
  ex.number("perturb_band", e.perturb_band);
  ex.text("mms_case", e.mms_case);
  ex.number("mms_T", e.mms_T);
  ex.list("mms_dts", e.mms_dts);
  ex.number("mms_temporal_n", e.mms_temporal_n);
  ex.list("mms_resolutions", e.mms_resolutions);
  ex.number("mms_spatial_dt", e.mms_spatial_dt);
  ex.number("picard_tol", e.picard_tol);
  ex.number("picard_max_iter", e.picard_max_iter);
  for (double x : e.eps) require(x > 0.0, "experiment.eps", "values must be positive");
  for (double x : e.mms_dts) require(x > 0.0, "experiment.mms_dts", "values must be positive");
  require(e.mms_T > 0.0, "experiment.mms_T", "must be positive");
  require(e.mms_spatial_dt > 0.0, "experiment.mms_spatial_dt", "must be positive");
  require(e.perturb_band >= 1, "experiment.perturb_band", "must be at least 1");
  require(e.picard_tol > 0.0, "experiment.picard_tol", "must be positive");
  require(e.picard_max_iter >= 1, "experiment.picard_max_iter", "must be at least 1");

  const Section iq = section("ineq");
  if (auto k = iq.raw("kind")) {
    try {
      cfg.ineq.kind = parse_inequality_kind(*k);
    } catch (const UsageFault&) {
      throw ParseFault("ineq.kind", "unknown inequality '" + *k + "'");
    }
  }
  Exponents& x = cfg.ineq.exponents;
  iq.number("m", x.m);
  iq.number("q", x.q);
  iq.number("r1", x.r1);
  iq.number("s1", x.s1);
  iq.number("r2", x.r2);
  iq.number("s2", x.s2);
  iq.number("trials", cfg.ineq.trials);
  iq.number("band_limit", cfg.ineq.band_limit);
  iq.flag("constant_f", cfg.ineq.constant_f);
  iq.number("bins", cfg.ineq.histogram_bins);
  try {
    validate(x, cfg.ineq.kind);
  } catch (const UsageFault& err) {
    throw ConstraintFault("ineq", err.what());
  }
  require(cfg.ineq.trials >= 1, "ineq.trials", "must be at least 1");
  require(cfg.ineq.band_limit >= 1, "ineq.band_limit", "must be at least 1");
  require(cfg.ineq.histogram_bins >= 1, "ineq.bins", "must be at least 1");

  apply_seed(cfg, cfg.seed);
  return cfg;
}

RunConfig load_config(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw IoFault("cannot open config '" + path + "'");
  std::stringstream ss;
  ss << in.rdbuf();
  return parse_config(ss.str());
}

}  // namespace cpe
