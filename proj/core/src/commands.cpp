#include "mkdvlab/commands.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <numbers>

#include "config.hpp"
#include "mkdvlab/b4.hpp"
#include "mkdvlab/energy.hpp"
#include "mkdvlab/errors.hpp"
#include "mkdvlab/estimates.hpp"
#include "mkdvlab/nonlinear.hpp"
#include "mkdvlab/norms.hpp"
#include "mkdvlab/parallel.hpp"
#include "mkdvlab/persistence.hpp"
#include "mkdvlab/random_data.hpp"
#include "mkdvlab/solver.hpp"

namespace mkdv {

namespace fs = std::filesystem;
using config::json;
using config::Reader;

const std::vector<std::string>& command_verbs() {
  static const std::vector<std::string> verbs{"solve",   "energy-track",  "verify-estimates", "b4-check",
                                              "scaling", "linear-window", "apriori"};
  return verbs;
}

namespace {

constexpr double kPi = std::numbers::pi;

struct Run {
  CommandOptions opts;
  json cfg;
  std::uint64_t seed = 1;
  Provenance prov;
};

// JSON has no infinities; exponents are echoed as strings when infinite.
json num(double v) {
  if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
  if (std::isnan(v)) return "nan";
  return v;
}

std::ofstream open_file(const fs::path& p) {
  std::ofstream f(p, std::ios::binary | std::ios::trunc);
  if (!f) throw ConfigError("cannot open output file " + p.string());
  return f;
}

json provenance(const Run& run) {
  return {{"tool", "mkdvlab"},
          {"version", run.prov.version},
          {"command", run.prov.command},
          {"seed", run.prov.seed},
          {"threads", run.prov.threads},
          {"config", run.cfg}};
}

void write_json(const fs::path& p, const json& j) { open_file(p) << j.dump(2) << '\n'; }

GridSpec parse_grid(Reader& r, double default_length, int default_n) {
  if (r.has("length") && r.has("length_pi")) throw ConfigError("give only one of length and length_pi");
  const double L = r.has("length_pi") ? r.number("length_pi") * kPi : r.number("length", default_length);
  const long long n = r.integer("n", default_n);
  if (!(L > 0.0) || !std::isfinite(L)) throw ConfigError(r.where("length") + " must be positive and finite");
  if (n < 4 || n % 2 != 0 || n > (1LL << 26)) throw ConfigError(r.where("n") + " must be an even integer in [4, 2^26]");
  return GridSpec(L, static_cast<int>(n));
}

SolverConfig parse_solver(Reader& r, const SolverConfig& defaults) {
  SolverConfig c = defaults;
  c.grid = parse_grid(r, defaults.grid.length(), defaults.grid.size());
  c.dt = r.number("dt", defaults.dt);
  c.horizon = r.number("horizon", defaults.horizon);
  c.sign = static_cast<int>(r.integer("sign", defaults.sign));
  c.dealias = r.boolean("dealias", defaults.dealias);
  c.record_stride = static_cast<int>(r.integer("record_stride", defaults.record_stride));
  c.nonlinearity = r.number("nonlinearity", defaults.nonlinearity);
  if (c.sign != 1 && c.sign != -1) throw ConfigError(r.where("sign") + " must be 1 or -1");
  step_count(c);
  return c;
}

SolverConfig default_solver() {
  SolverConfig c;
  c.grid = GridSpec(64.0 * kPi, 256);
  c.dt = 1e-4;
  c.horizon = 1.0;
  c.record_stride = 100;
  return c;
}

RealField parse_initial(const json& j, const GridSpec& g, std::uint64_t seed) {
  Reader r(j, "initial");
  const std::string kind = r.string("kind", "gaussian");
  RealField out(g);
  if (kind == "zero") {
    // all samples already zero
  } else if (kind == "gaussian") {
    const double amp = r.number("amplitude", 1.0);
    const double center = r.number("center", g.length() / 2.0);
    const double width = r.number("width", 2.0);
    if (!(width > 0.0)) throw ConfigError("initial.width must be positive");
    out = gaussian_profile(g, amp, center, width);
  } else if (kind == "block") {
    const double N = r.number("N");
    const double amp = r.number("amplitude", 1.0);
    const double width = r.number("envelope_width", 2.0);
    const double center = r.number("center", g.length() / 2.0);
    const LPPartition part = LPPartition::for_grid(g, 1.0);
    if (!part.has_block(N)) throw ConfigError("initial.N must be a dyadic block representable on the grid");
    Rng rng(derive_seed(seed, 0x1b));
    SpectralField phi = random_block_data(g, part, N, rng);
    phi = normalize_l2(lp_project(envelope_localize(phi, center, width), part, N));
    out = idft(amp * phi);
  } else if (kind == "rough") {
    const double s = r.number("s", -1.0 / 16.0);
    const double M = r.number("M", 1.0);
    const double R = r.number("R", 1.0);
    Rng rng(derive_seed(seed, 0x2b));
    out = idft(random_rough_data(g, s, M, R, g.dxi() * dealias_cutoff(g), rng));
  } else {
    throw ConfigError("initial.kind must be one of zero, gaussian, block, rough");
  }
  r.finish();
  return out;
}

SymbolA parse_symbol(const json& j) {
  Reader r(j, "symbol");
  const double M = r.number("M", 1.0);
  if (r.has("constant")) {
    const double v = r.number("constant");
    r.finish();
    if (!(v > 0.0)) throw ConfigError("symbol.constant must be positive");
    return SymbolA::constant(v, M);
  }
  const double N = r.number("N", 1.0);
  const double s = r.number("s", -0.125);
  r.finish();
  return make_aN(N, s, M);
}

json symbol_json(const SymbolA& a) {
  json j{{"tag", a.tag()}, {"M", a.M()}};
  if (a.an_tag()) {
    j["N"] = a.an_tag()->N;
    j["s"] = a.an_tag()->s;
  }
  return j;
}

const json& optional_object(Reader& r, const std::string& key) {
  static const json empty = json::object();
  return r.has(key) ? r.raw(key) : empty;
}

// ---------------------------------------------------------------- solve

int cmd_solve(Run& run, std::ostream& out) {
  Reader top(run.cfg, "config");
  top.integer("seed", 0);
  const SolverConfig sc = parse_solver(top, default_solver());
  const RealField u0 = parse_initial(optional_object(top, "initial"), sc.grid, run.seed);
  top.finish();
  const FlowRecord flow = solve(u0, sc);
  write_flow_record(run.opts.out_dir, flow, run.prov);
  out << "final_time=" << format_double(flow.times.back()) << " mass_drift=" << format_double(flow.mass_drift())
      << " blow_up=" << (flow.blow_up ? "true" : "false") << '\n';
  return flow.blow_up ? kExitBlowUp : kExitOk;
}

// ---------------------------------------------------------------- energy-track

int cmd_energy_track(Run& run, std::ostream& out) {
  Reader top(run.cfg, "config");
  top.integer("seed", 0);
  SolverConfig defaults = default_solver();
  defaults.grid = GridSpec(16.0 * kPi, 64);
  defaults.horizon = 0.01;
  defaults.record_stride = 1;
  const SolverConfig sc = parse_solver(top, defaults);
  const RealField u0 = parse_initial(optional_object(top, "initial"), sc.grid, run.seed);
  const SymbolA a = parse_symbol(optional_object(top, "symbol"));
  const std::string which = top.string("which", "both");
  IdentityOptions io;
  io.fd_steps = top.numbers("fd_steps", io.fd_steps);
  io.max_points = static_cast<int>(top.integer("max_points", io.max_points));
  io.dealias = sc.dealias;
  const int stride = static_cast<int>(top.integer("report_stride", 10));
  const double eps = top.number("eps_rel", 1e-3);
  top.finish();
  if (which != "both" && which != "E0-R4" && which != "E0E1-R6")
    throw ConfigError("config.which must be both, E0-R4 or E0E1-R6");
  const B4Evaluator b4 = make_flow_b4(a, sc.sign, eps);

  // Fails fast with the required mode count before any time stepping.
  energy_E1(sc.dealias ? truncate_two_thirds(dft(u0)) : dft(u0), b4);

  const FlowRecord flow = solve(u0, sc);
  const EnergyReport rep = energy_report(flow, b4, sc.sign, stride, sc.dealias);
  {
    std::ofstream f = open_file(run.opts.out_dir / "energy.jsonl");
    f << json{{"provenance", provenance(run)}}.dump() << '\n';
    for (const EnergySample& s : rep.samples)
      f << json{{"t", s.t},   {"E0", s.E0},     {"E1", s.E1},          {"R4", s.R4},
                {"R6", s.R6}, {"sign", rep.sign}, {"symbol", rep.symbol_tag}}
               .dump()
        << '\n';
  }
  json summary{{"provenance", provenance(run)},
               {"symbol", symbol_json(a)},
               {"blow_up", flow.blow_up},
               {"mass_drift", flow.mass_drift()}};
  CsvWriter table(run.opts.out_dir / "identity.csv", {"identity", "h", "max_rel", "median_rel"}, run.prov);
  auto run_identity = [&](IdentityKind kind, const std::string& name) {
    const IdentityReport r = energy_identity_check(flow, b4, kind, sc.sign, io);
    json rows = json::array();
    for (const IdentityRow& row : r.rows) {
      table.row({name, format_double(row.h), format_double(row.max_rel), format_double(row.median_rel)});
      rows.push_back({{"h", row.h}, {"max_rel", row.max_rel}, {"median_rel", row.median_rel}});
      out << name << " h=" << format_double(row.h) << " max_rel=" << format_double(row.max_rel)
          << " median_rel=" << format_double(row.median_rel) << '\n';
    }
    out << name << " order=" << format_double(r.order) << '\n';
    summary["identities"][name] = {{"rows", rows}, {"order", r.order}};
  };
  if (!flow.blow_up) {
    if (which != "E0E1-R6") run_identity(IdentityKind::E0_R4, "E0-R4");
    if (which != "E0-R4") run_identity(IdentityKind::E0E1_R6, "E0E1-R6");
  }
  write_json(run.opts.out_dir / "summary.json", summary);
  return flow.blow_up ? kExitBlowUp : kExitOk;
}

// ---------------------------------------------------------------- verify-estimates

std::vector<ExponentPair> parse_pairs(Reader& r, const std::vector<ExponentPair>& fallback) {
  if (!r.has("pairs")) return fallback;
  const json& arr = r.raw("pairs");
  if (!arr.is_array()) throw ConfigError("config.pairs must be an array of [p, q] pairs");
  std::vector<ExponentPair> out;
  for (size_t i = 0; i < arr.size(); ++i) {
    const std::string w = "config.pairs[" + std::to_string(i) + "]";
    if (!arr[i].is_array() || arr[i].size() != 2) throw ConfigError(w + " must be a [p, q] pair");
    const ExponentPair pq{config::to_number(arr[i][0], w), config::to_number(arr[i][1], w)};
    if (!admissible(pq.p, pq.q)) throw ConfigError(w + " is not an admissible exponent pair");
    out.push_back(pq);
  }
  return out;
}

std::vector<std::pair<double, double>> default_bilinear_points() {
  std::vector<std::pair<double, double>> pts;
  for (double m2 : {8.0, 16.0, 32.0, 64.0, 128.0}) pts.emplace_back(4.0, m2);
  for (double m2 : {8.0, 16.0, 32.0, 64.0, 128.0}) pts.emplace_back(m2, m2);
  return pts;
}

int cmd_verify_estimates(Run& run, std::ostream& out) {
  Reader top(run.cfg, "config");
  top.integer("seed", 0);
  std::vector<std::string> which{"strichartz", "smoothing", "bilinear"};
  if (top.has("estimates")) {
    which.clear();
    const json& arr = top.raw("estimates");
    if (!arr.is_array()) throw ConfigError("config.estimates must be an array of names");
    for (const json& e : arr) {
      if (!e.is_string()) throw ConfigError("config.estimates entries must be strings");
      const std::string name = e.get<std::string>();
      if (name != "strichartz" && name != "smoothing" && name != "bilinear")
        throw ConfigError("unknown estimate " + name);
      which.push_back(name);
    }
  }
  SweepOptions so;
  so.pairs = parse_pairs(top, so.pairs);
  so.scales = top.numbers("scales", so.scales);
  so.trials = static_cast<int>(top.integer("trials", so.trials));
  so.seed = run.seed;
  BilinearOptions bo;
  bo.points = default_bilinear_points();
  if (top.has("bilinear_points")) {
    bo.points.clear();
    const json& arr = top.raw("bilinear_points");
    if (!arr.is_array()) throw ConfigError("config.bilinear_points must be an array of [M1, M2] pairs");
    for (size_t i = 0; i < arr.size(); ++i) {
      const std::string w = "config.bilinear_points[" + std::to_string(i) + "]";
      if (!arr[i].is_array() || arr[i].size() != 2) throw ConfigError(w + " must be an [M1, M2] pair");
      bo.points.emplace_back(config::to_number(arr[i][0], w), config::to_number(arr[i][1], w));
    }
  }
  bo.trials = so.trials;
  bo.seed = run.seed;
  bo.time_samples = static_cast<int>(top.integer("bilinear_time_samples", bo.time_samples));
  top.finish();
  for (double N : so.scales)
    if (!(N >= 2.0) || std::exp2(std::round(std::log2(N))) != N) throw ConfigError("config.scales must be dyadic >= 2");
  for (const auto& [m1, m2] : bo.points) bilinear_geometry(m1, m2);

  std::vector<SweepRecord> records;
  for (const std::string& name : which) {
    std::vector<SweepRecord> part;
    if (name == "strichartz") part = strichartz_sweep(so);
    if (name == "smoothing") part = smoothing_maximal_sweep(so);
    if (name == "bilinear") part = bilinear_sweep(bo);
    records.insert(records.end(), part.begin(), part.end());
  }
  CsvWriter csv(run.opts.out_dir / "records.csv",
                {"estimate_id", "p", "q", "scale1", "scale2", "trial", "seed", "raw_ratio", "normalized_ratio"},
                run.prov);
  for (const SweepRecord& r : records)
    csv.row({r.estimate, format_double(r.p), format_double(r.q), format_double(r.scale1), format_double(r.scale2),
             std::to_string(r.trial), std::to_string(r.seed), format_double(r.raw_ratio),
             format_double(r.normalized_ratio)});
  json groups = json::array();
  bool all = true;
  for (const SweepSummary& s : summarize(records)) {
    json scales = json::array();
    for (const auto& [scale, mx] : s.scale_max) scales.push_back({{"scale", scale}, {"max", mx}});
    groups.push_back({{"estimate", s.estimate},
                      {"p", num(s.p)},
                      {"q", num(s.q)},
                      {"fixed_M1", s.fixed_scale},
                      {"per_scale_max", scales},
                      {"max", s.max},
                      {"median", s.median},
                      {"max_over_median", num(s.spread)},
                      {"pass", s.bounded}});
    all = all && s.bounded;
    out << s.estimate << " (p,q)=(" << format_double(s.p) << "," << format_double(s.q) << ")";
    if (s.estimate == "bilinear") out << (s.fixed_scale > 0 ? " M1=" + format_double(s.fixed_scale) : " M1=M2");
    out << " max/median=" << format_double(s.spread) << (s.bounded ? " PASS" : " FAIL") << '\n';
  }
  write_json(run.opts.out_dir / "summary.json",
             {{"provenance", provenance(run)}, {"criterion", "max/median <= 4"}, {"groups", groups}, {"all_pass", all}});
  return kExitOk;
}

// ---------------------------------------------------------------- b4-check

int cmd_b4_check(Run& run, std::ostream& out) {
  Reader top(run.cfg, "config");
  top.integer("seed", 0);
  std::vector<SymbolA> symbols;
  if (top.has("symbols")) {
    const json& arr = top.raw("symbols");
    if (!arr.is_array()) throw ConfigError("config.symbols must be an array of symbol objects");
    for (const json& j : arr) symbols.push_back(parse_symbol(j));
  } else {
    for (double N : {4.0, 16.0, 64.0}) symbols.push_back(make_aN(N, -0.125, 1.0));
  }
  const int samples = static_cast<int>(top.integer("samples", 10000));
  const int near = static_cast<int>(top.integer("near_singular_samples", 1000));
  const double eps = top.number("eps_rel", 1e-3);
  const double n_top = top.number("size_N_top", 256.0);
  const int per_cell = static_cast<int>(top.integer("size_samples_per_cell", 16));
  top.finish();

  json reports = json::array();
  for (size_t i = 0; i < symbols.size(); ++i) {
    const SymbolA& a = symbols[i];
    const B4CheckReport r = b4_check(a, samples, near, derive_seed(run.seed, i), eps);
    const B4SizeReport sz = b4_size_sweep(a, n_top, per_cell, derive_seed(run.seed, i, 1));
    reports.push_back({{"symbol", symbol_json(a)},
                       {"samples", r.samples},
                       {"near_singular_samples", r.near_samples},
                       {"identity_max_rel", r.identity_max},
                       {"stable_vs_reference_max_rel", r.agreement_max},
                       {"permutation_max_rel", r.symmetry_max},
                       {"evenness_max_rel", r.evenness_max},
                       {"near_singular_permutation_max_rel", r.near_symmetry_max},
                       {"factorization_max_rel", r.factorization_max},
                       {"printed_factorization_ratio", {r.printed_ratio_min, r.printed_ratio_max}},
                       {"finite", r.finite},
                       {"size_bound_constant", sz.constant},
                       {"size_bound_samples", sz.samples},
                       {"size_bound_worst_xi", sz.worst.xi}});
    out << a.tag() << " identity=" << format_double(r.identity_max) << " agreement=" << format_double(r.agreement_max)
        << " symmetry=" << format_double(std::max(r.symmetry_max, r.near_symmetry_max))
        << " factorization=" << format_double(r.factorization_max) << " size_C=" << format_double(sz.constant)
        << " finite=" << (r.finite ? "true" : "false") << '\n';
  }
  write_json(run.opts.out_dir / "b4_report.json", {{"provenance", provenance(run)}, {"symbols", reports}});
  return kExitOk;
}

// ---------------------------------------------------------------- scaling

int cmd_scaling(Run& run, std::ostream& out) {
  Reader top(run.cfg, "config");
  top.integer("seed", 0);
  SolverConfig defaults = default_solver();
  defaults.dt = 1e-3;
  defaults.horizon = 0.25;
  defaults.record_stride = 50;
  const SolverConfig sc = parse_solver(top, defaults);
  const RealField u0 = parse_initial(optional_object(top, "initial"), sc.grid, run.seed);
  const std::vector<double> lambdas = top.numbers("lambdas", {2.0});
  top.finish();
  CsvWriter csv(run.opts.out_dir / "scaling.csv", {"lambda", "discrepancy"}, run.prov);
  for (double lambda : lambdas) {
    const double d = scaling_equivariance_check(u0, lambda, sc);
    csv.row_numbers({lambda, d});
    out << "lambda=" << format_double(lambda) << " discrepancy=" << format_double(d) << '\n';
  }
  return kExitOk;
}

// ---------------------------------------------------------------- linear-window

int cmd_linear_window(Run& run, std::ostream& out) {
  Reader top(run.cfg, "config");
  top.integer("seed", 0);
  WindowOptions o;
  const std::vector<double> Ns = top.numbers("Ns", {8.0, 16.0, 32.0});
  o.s = top.number("s", o.s);
  o.theta_max = top.number("theta_max", o.theta_max);
  o.records_per_unit_theta = static_cast<int>(top.integer("records_per_unit_theta", o.records_per_unit_theta));
  o.steps_per_record = static_cast<int>(top.integer("steps_per_record", o.steps_per_record));
  o.sign = static_cast<int>(top.integer("sign", o.sign));
  o.nonlinearity = top.number("nonlinearity", o.nonlinearity);
  if (top.has("length") && top.has("length_pi")) throw ConfigError("give only one of length and length_pi");
  o.length = top.has("length_pi") ? top.number("length_pi") * kPi : top.number("length", o.length);
  o.band_half_width = top.number("band_half_width", o.band_half_width);
  o.envelope_width = top.number("envelope_width", o.envelope_width);
  top.finish();
  if (Ns.empty()) throw ConfigError("config.Ns must not be empty");
  o.top_scale = *std::max_element(Ns.begin(), Ns.end());
  o.seed = run.seed;

  CsvWriter csv(run.opts.out_dir / "window.csv", {"N", "t", "theta", "deviation"}, run.prov);
  json per = json::array();
  double lo = kInf, hi = 0.0;
  bool blow = false;
  for (double N : Ns) {
    const WindowCurve c = linear_window_experiment(N, o);
    for (size_t i = 0; i < c.times.size(); ++i) csv.row_numbers({N, c.times[i], c.theta[i], c.deviation[i]});
    per.push_back({{"N", N},
                   {"deviation_at_theta1", c.deviation_at_theta1},
                   {"blow_up", c.blow_up},
                   {"wraparound_ok", c.wraparound.ok},
                   {"wraparound_travel", c.wraparound.travel},
                   {"wraparound_limit", c.wraparound.limit}});
    lo = std::min(lo, c.deviation_at_theta1);
    hi = std::max(hi, c.deviation_at_theta1);
    blow = blow || c.blow_up;
    out << "N=" << format_double(N) << " deviation(theta=1)=" << format_double(c.deviation_at_theta1)
        << (c.blow_up ? " blow_up" : "") << '\n';
  }
  const double collapse = lo > 0.0 ? hi / lo : kInf;
  out << "collapse max/min=" << format_double(collapse) << '\n';
  write_json(run.opts.out_dir / "summary.json", {{"provenance", provenance(run)},
                                                 {"grid_n", window_grid(o).size()},
                                                 {"curves", per},
                                                 {"collapse_max_over_min", num(collapse)},
                                                 {"collapse_ok", collapse <= 4.0}});
  return blow ? kExitBlowUp : kExitOk;
}

// ---------------------------------------------------------------- apriori

int cmd_apriori(Run& run, std::ostream& out) {
  Reader top(run.cfg, "config");
  top.integer("seed", 0);
  AprioriOptions o;
  o.s = top.number("s", o.s);
  o.M = top.number("M", o.M);
  o.R = top.number("R", o.R);
  o.trials = static_cast<int>(top.integer("trials", o.trials));
  o.solver = parse_solver(top, o.solver);
  o.seed = run.seed;
  top.finish();
  const AprioriTable t = apriori_growth_experiment(o);
  CsvWriter csv(run.opts.out_dir / "apriori.csv",
                {"trial", "seed", "initial_norm", "max_ratio", "blow_up", "last_time"}, run.prov);
  bool blow = false;
  for (const AprioriRow& r : t.rows) {
    csv.row({std::to_string(r.trial), std::to_string(r.seed), format_double(r.initial_norm),
             format_double(r.max_ratio), r.blow_up ? "1" : "0", format_double(r.last_time)});
    blow = blow || r.blow_up;
  }
  write_json(run.opts.out_dir / "summary.json", {{"provenance", provenance(run)},
                                                 {"s", t.s},
                                                 {"M", t.M},
                                                 {"R", t.R},
                                                 {"T", t.T},
                                                 {"reference", t.reference},
                                                 {"max_ratio", t.max_ratio},
                                                 {"below_reference", t.below_reference}});
  out << "max_ratio=" << format_double(t.max_ratio) << " reference=" << format_double(t.reference)
      << " below_reference=" << (t.below_reference ? "true" : "false") << '\n';
  return blow ? kExitBlowUp : kExitOk;
}

void report_error(std::ostream& err, const std::string& kind, const std::string& message, json extra = {}) {
  json j{{"error", kind}, {"message", message}};
  if (extra.is_object()) j.update(extra);
  err << j.dump() << '\n';
}

}  // namespace

int run_command(const CommandOptions& options, std::ostream& out, std::ostream& err) {
  try {
    Run run;
    run.opts = options;
    const auto& verbs = command_verbs();
    if (std::find(verbs.begin(), verbs.end(), options.verb) == verbs.end())
      throw ConfigError("unknown command " + options.verb);
    if (options.threads) {
      if (*options.threads < 1) throw ConfigError("--threads must be a positive integer");
      set_thread_count(*options.threads);
    }
    run.cfg = config::load_file(options.config);
    if (options.seed) {
      run.seed = *options.seed;
    } else if (run.cfg.contains("seed")) {
      const json& s = run.cfg["seed"];
      if (!s.is_number_integer() || (s.is_number_integer() && !s.is_number_unsigned() && s.get<long long>() < 0))
        throw ConfigError("config.seed must be a non-negative integer");
      run.seed = s.get<std::uint64_t>();
    }
    run.cfg["seed"] = run.seed;
    run.prov.seed = run.seed;
    run.prov.threads = thread_count();
    run.prov.command = options.verb;
    run.prov.config_json = run.cfg.dump();
    fs::create_directories(options.out_dir);

    if (options.verb == "solve") return cmd_solve(run, out);
    if (options.verb == "energy-track") return cmd_energy_track(run, out);
    if (options.verb == "verify-estimates") return cmd_verify_estimates(run, out);
    if (options.verb == "b4-check") return cmd_b4_check(run, out);
    if (options.verb == "scaling") return cmd_scaling(run, out);
    if (options.verb == "linear-window") return cmd_linear_window(run, out);
    return cmd_apriori(run, out);
  } catch (const BudgetError& e) {
    report_error(err, "budget", e.what(),
                 {{"required_active", e.required_active()}, {"allowed_active", e.allowed_active()}});
    return kExitBudget;
  } catch (const ConfigError& e) {
    report_error(err, "validation", e.what());
    return kExitValidation;
  } catch (const DomainError& e) {
    report_error(err, "domain", e.what());
    return kExitValidation;
  } catch (const ConstructionError& e) {
    report_error(err, "construction", e.what());
    return kExitValidation;
  } catch (const std::exception& e) {
    report_error(err, "internal", e.what());
    return kExitFailure;
  }
}

}  // namespace mkdv
