// Command-line front end: runs the library's experiments with a persisted
// flat key=value configuration and writes CSV/SVG/JSON reports plus a run
// manifest into a per-run output directory.

#include <cmath>
#include <cstdio>
#include <filesystem>
#include <functional>
#include <limits>
#include <memory>
#include <string>
#include <variant>
#include <vector>

#include "CLI11.hpp"
#include "heatlab/bounds.hpp"
#include "heatlab/certificate.hpp"
#include "heatlab/errors.hpp"
#include "heatlab/evolve.hpp"
#include "heatlab/geometry.hpp"
#include "heatlab/kernel.hpp"
#include "heatlab/ode.hpp"
#include "heatlab/osgood.hpp"
#include "heatlab/report.hpp"
#include "heatlab/semilinear.hpp"
#include "heatlab/source.hpp"
#include "heatlab/verify.hpp"

namespace {

using namespace heatlab;

constexpr int kExitViolation = 1;
constexpr int kExitBadConfig = 2;
constexpr int kExitNumeric = 3;

// ---------------------------------------------------------------------
// config plumbing

std::vector<double> parse_number_list(const std::string& text,
                                      const std::string& what) {
  std::vector<double> out;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const std::size_t comma = std::min(text.find(',', pos), text.size());
    const std::string piece = text.substr(pos, comma - pos);
    try {
      std::size_t used = 0;
      const double v = std::stod(piece, &used);
      while (used < piece.size() && piece[used] == ' ') ++used;
      if (used != piece.size()) throw std::invalid_argument(piece);
      out.push_back(v);
    } catch (const std::exception&) {
      throw InvalidQuery(what + ": cannot parse number from '" + piece + "'");
    }
    pos = comma + 1;
    if (comma == text.size()) break;
  }
  return out;
}

Domain parse_domain(const std::string& spec) {
  const std::size_t colon = spec.find(':');
  const std::string head = spec.substr(0, colon);
  if (colon == std::string::npos || colon + 1 == spec.size())
    throw InvalidQuery("domain spec '" + spec +
                       "' wants the form interval:A or box:A,B[,C]");
  const std::string tail = spec.substr(colon + 1);
  if (head == "interval") {
    const auto vals = parse_number_list(tail, "domain");
    if (vals.size() != 1)
      throw InvalidQuery("interval domain takes one half-width");
    return Interval{vals[0]};
  }
  if (head == "box") return Box{parse_number_list(tail, "domain")};
  throw InvalidQuery("unknown domain kind '" + head + "'");
}

std::string join_coords(const std::vector<double>& v) {
  std::string out;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) out += ";";
    out += format_double(v[i]);
  }
  return out;
}

// One subcommand flag bound to a config key; applied only when the user
// actually passed it, so file values survive otherwise.
struct Binding {
  std::string key;
  CLI::Option* opt = nullptr;
  std::function<std::string()> value;
};

struct SubCmd {
  CLI::App* app = nullptr;
  std::string name;
  Config defaults;
  // behind a stable address: CLI11 keeps a pointer to the target while
  // this struct gets moved out of make_subcommand
  std::shared_ptr<std::string> config_file =
      std::make_shared<std::string>();
  std::vector<Binding> bindings;

  void add_number(const char* flag, const char* key, double def,
                  const char* desc) {
    defaults.set(key, def);
    auto holder = std::make_shared<double>(def);
    CLI::Option* opt = app->add_option(flag, *holder, desc);
    bindings.push_back(
        {key, opt, [holder] { return format_double(*holder); }});
  }

  void add_string(const char* flag, const char* key, const std::string& def,
                  const char* desc) {
    defaults.set(key, def);
    auto holder = std::make_shared<std::string>(def);
    CLI::Option* opt = app->add_option(flag, *holder, desc);
    bindings.push_back({key, opt, [holder] { return *holder; }});
  }

  void add_flag(const char* flag, const char* key, const char* desc) {
    defaults.set(key, std::string("0"));
    auto holder = std::make_shared<bool>(false);
    CLI::Option* opt = app->add_flag(flag, *holder, desc);
    bindings.push_back(
        {key, opt, [holder] { return *holder ? "1" : "0"; }});
  }

  Config resolve() const {
    Config cfg = defaults;
    if (!config_file->empty()) {
      const Config file = Config::load(*config_file);
      for (const auto& [k, v] : file.entries()) cfg.set(k, v);
    }
    for (const auto& b : bindings)
      if (b.opt->count() > 0) cfg.set(b.key, b.value());
    cfg.set("command", name);
    return cfg;
  }
};

SubCmd make_subcommand(CLI::App& app, const char* name, const char* desc) {
  SubCmd sc;
  sc.app = app.add_subcommand(name, desc);
  sc.name = name;
  sc.defaults.set("command", std::string(name));
  sc.app->add_option("--config", *sc.config_file,
                     "key=value config file; flags override its entries");
  sc.add_string("--out", "out", "",
                "output root (else HEATLAB_OUT, else ./heatlab-out)");
  sc.add_number("--seed", "seed", 0.0,
                "random seed, recorded but unused by the mathematics");
  return sc;
}

// ---------------------------------------------------------------------
// JSON rendering (handcrafted: deterministic bytes, no dependencies)

std::string json_number(double v) {
  if (std::isfinite(v)) return format_double(v);
  return json_quote(format_double(v));
}

class JsonObject {
public:
  void str(const std::string& key, const std::string& v) {
    fields_.push_back({key, json_quote(v)});
  }
  void num(const std::string& key, double v) {
    fields_.push_back({key, json_number(v)});
  }
  void integer(const std::string& key, long long v) {
    fields_.push_back({key, std::to_string(v)});
  }
  void boolean(const std::string& key, bool v) {
    fields_.push_back({key, v ? "true" : "false"});
  }
  void raw(const std::string& key, const std::string& v) {
    fields_.push_back({key, v});
  }
  std::string render(int indent) const {
    const std::string pad(static_cast<std::size_t>(indent), ' ');
    const std::string inner(static_cast<std::size_t>(indent) + 2, ' ');
    std::string out = "{\n";
    for (std::size_t i = 0; i < fields_.size(); ++i) {
      out += inner + json_quote(fields_[i].first) + ": " + fields_[i].second;
      out += i + 1 < fields_.size() ? ",\n" : "\n";
    }
    out += pad + "}";
    return out;
  }

private:
  std::vector<std::pair<std::string, std::string>> fields_;
};

std::string json_array(const std::vector<std::string>& items, int indent) {
  if (items.empty()) return "[]";
  const std::string pad(static_cast<std::size_t>(indent), ' ');
  const std::string inner(static_cast<std::size_t>(indent) + 2, ' ');
  std::string out = "[\n";
  for (std::size_t i = 0; i < items.size(); ++i) {
    out += inner + items[i];
    out += i + 1 < items.size() ? ",\n" : "\n";
  }
  out += pad + "]";
  return out;
}

std::string config_json(const Config& cfg, int indent) {
  JsonObject obj;
  for (const auto& [k, v] : cfg.entries()) obj.str(k, v);
  return obj.render(indent);
}

// report.json skeleton shared by every subcommand
void emit_report(RunDirectory& run, const std::string& filename,
                 const std::string& result_json) {
  JsonObject doc;
  doc.integer("schema_version", kReportSchemaVersion);
  doc.str("command", run.config().get_or("command", ""));
  doc.raw("config", config_json(run.config(), 2));
  doc.raw("result", result_json);
  run.write_text(filename, doc.render(0) + "\n");
}

RunDirectory open_run(const Config& cfg) {
  const auto root = resolve_out_dir(cfg.get_or("out", ""));
  RunDirectory run(root, cfg.get_or("command", "run"), cfg);
  run.write_text("config.txt", cfg.serialize());
  return run;
}

void finish(RunDirectory& run) {
  run.finalize();
  std::fprintf(stderr, "run %s -> %s\n", run.id().c_str(),
               run.path().string().c_str());
}

// ---------------------------------------------------------------------
// subcommands

int run_kernel(const Config& cfg) {
  const Domain dom = parse_domain(cfg.get_or("domain", "interval:0.5"));
  const auto* iv = std::get_if<Interval>(&dom);
  if (!iv) throw InvalidQuery("kernel: only interval domains are plotted");
  const double width = 2.0 * iv->a;
  const double y = cfg.number_or("y", 0.2);
  const double t = cfg.number_or("t", 0.02);
  const int points = static_cast<int>(cfg.number_or("points", 21));
  const bool plot = cfg.number_or("plot", 0.0) != 0.0;

  const KernelFigure fig = kernel_figure(width, y, t, points);

  RunDirectory run = open_run(cfg);
  CsvBuilder csv({"x", "y", "t", "kernel", "bound", "slack"});
  for (const auto& p : fig.points)
    csv.row(std::vector<double>{p.x, y, t, p.kernel, p.bound,
                                p.kernel - p.bound});
  run.write_text("kernel.csv", csv.str());

  if (plot) {
    LinePlot svg("interval kernel and lower bound", "x", "value");
    std::vector<double> xs, ks, bs;
    for (const auto& p : fig.points) {
      xs.push_back(p.x);
      ks.push_back(p.kernel);
      bs.push_back(p.bound);
    }
    svg.add_series("kernel", xs, ks);
    svg.add_series("bound", xs, bs, true);
    run.write_text("kernel.svg", svg.render());
  }

  JsonObject result;
  result.num("width", width);
  result.num("y", y);
  result.num("t", t);
  result.integer("points", points);
  result.num("peak_x", fig.points[fig.peak_index].x);
  result.num("min_slack", fig.min_slack);
  emit_report(run, "report.json", result.render(2));
  finish(run);

  if (fig.min_slack < -1e-12) {
    std::fprintf(stderr, "kernel: bound exceeds kernel, min slack %s\n",
                 format_double(fig.min_slack).c_str());
    return kExitViolation;
  }
  return 0;
}

int run_bounds_sweep(const Config& cfg) {
  const BoundKind kind =
      bound_kind_from_string(cfg.get_or("kind", "short-time-nd"));
  const Domain dom = parse_domain(cfg.get_or("domain", "interval:0.5"));
  GridSpec grid;
  grid.points_per_axis =
      static_cast<int>(cfg.number_or("points_per_axis", 9));
  grid.time_points = static_cast<int>(cfg.number_or("time_points", 25));
  grid.t_lo_factor = cfg.number_or("t_lo", 1e-4);
  grid.t_hi_factor = cfg.number_or("t_hi", 10.0);

  const SweepReport rep = sweep_verify(dom, kind, grid, SeriesBudget{});

  RunDirectory run = open_run(cfg);
  CsvBuilder csv({"x", "y", "t", "kernel", "bound", "slack"});
  for (const auto& row : rep.rows)
    csv.row(std::vector<std::string>{
        join_coords(row.x), join_coords(row.y), format_double(row.t),
        format_double(row.kernel), format_double(row.bound),
        format_double(row.slack)});
  run.write_text("sweep.csv", csv.str());

  JsonObject result;
  result.str("kind", to_string(rep.kind));
  result.str("grid", rep.grid_note);
  result.integer("rows", static_cast<long long>(rep.rows.size()));
  result.num("min_slack", rep.min_slack);
  result.integer("violations", static_cast<long long>(rep.violations.size()));
  emit_report(run, "report.json", result.render(2));
  finish(run);

  if (!rep.violations.empty()) {
    std::fprintf(stderr, "bounds-sweep: %zu slack violations, worst %s\n",
                 rep.violations.size(),
                 format_double(rep.min_slack).c_str());
    return kExitViolation;
  }
  return 0;
}

int run_prop_ball(const Config& cfg) {
  const EvolveDomain dom = Interval{cfg.number_or("a", 1.0)};
  const SingularData d{
      cfg.number_or("alpha", 0.5), cfg.number_or("R", 0.5),
      cfg.number_or("cap", std::numeric_limits<double>::infinity())};
  const std::vector<double> phis =
      cfg.numbers_or("phis", {4.0, 8.0, 16.0, 32.0, 64.0});

  const LargenessCertificate cert = largeness_certificate(dom, d, phis);

  RunDirectory run = open_run(cfg);
  CsvBuilder csv({"phi", "r", "tau"});
  for (const auto& s : cert.samples)
    csv.row(std::vector<double>{s.phi, s.r, s.tau});
  run.write_text("prop-ball.csv", csv.str());

  if (cert.samples.size() >= 2) {
    LinePlot svg("certified scales against level", "log10 phi",
                 "log10 scale");
    std::vector<double> xs, rs, taus;
    for (const auto& s : cert.samples) {
      xs.push_back(std::log10(s.phi));
      rs.push_back(std::log10(s.r));
      taus.push_back(std::log10(s.tau));
    }
    svg.add_series("radius", xs, rs);
    svg.add_series("time", xs, taus, true);
    run.write_text("prop-ball.svg", svg.render());
  }

  JsonObject result;
  result.num("alpha", d.alpha);
  result.num("R", d.R);
  result.num("phi_star", cert.phi_star);
  result.num("sigma", cert.sigma);
  result.integer("levels", static_cast<long long>(cert.samples.size()));
  result.integer("skipped",
                 static_cast<long long>(cert.skipped_phis.size()));
  try {
    const ScalingExponents fit = fit_scaling_exponents(cert);
    result.num("p_r", fit.p_r);
    result.num("p_t", fit.p_t);
  } catch (const InvalidQuery&) {
    result.raw("p_r", "null");
    result.raw("p_t", "null");
  }
  emit_report(run, "report.json", result.render(2));
  finish(run);

  if (!cert.skipped_phis.empty()) {
    std::fprintf(stderr, "prop-ball: %zu levels not certified\n",
                 cert.skipped_phis.size());
    return kExitViolation;
  }
  return 0;
}

int run_blowup(const Config& cfg) {
  SimConfig sim;
  sim.n = static_cast<int>(cfg.number_or("n", 1));
  sim.domain = Interval{cfg.number_or("a", 1.0)};
  sim.data.alpha = cfg.number_or("alpha", 0.9);
  sim.data.R = cfg.number_or("R", 0.5);
  sim.source = FujitaPower{cfg.number_or("p", 6.0)};
  sim.cells = static_cast<int>(cfg.number_or("cells", 256));
  sim.u_max = cfg.number_or("u_max", 1e12);
  sim.caps = cfg.numbers_or("caps", {10.0, 100.0, 1000.0, 10000.0});
  const double q = cfg.number_or("q", 1.0);
  const double t_star = cfg.number_or("t_star", 0.2);
  FunctionalOptions fopts;
  fopts.s_per_decade = static_cast<int>(cfg.number_or("s_per_decade", 16));
  fopts.y_per_decade = static_cast<int>(cfg.number_or("y_per_decade", 64));

  const BlowupReport rep = blowup_experiment(sim, t_star, q, fopts);

  RunDirectory run = open_run(cfg);
  CsvBuilder csv({"M", "I", "blew_up", "t_blowup"});
  for (const auto& r : rep.records)
    csv.row(std::vector<std::string>{
        format_double(r.cap), format_double(r.mass_bound),
        r.blew_up ? "1" : "0", format_double(r.t_blowup)});
  run.write_text("blowup.csv", csv.str());

  if (rep.records.size() >= 2) {
    LinePlot svg("mass functional against cap", "log10 M", "log10 I");
    std::vector<double> xs, ys;
    for (const auto& r : rep.records) {
      xs.push_back(std::log10(r.cap));
      ys.push_back(std::log10(r.mass_bound));
    }
    svg.add_series("I(t*)", xs, ys);
    run.write_text("blowup.svg", svg.render());
  }

  JsonObject result;
  result.num("t_star", rep.t_star);
  result.num("q", rep.q);
  result.integer("caps", static_cast<long long>(rep.records.size()));
  result.num("fitted_slope", rep.fitted_slope);
  result.num("theoretical_slope", rep.theoretical_slope);
  result.str("regime", rep.regime);
  emit_report(run, "report.json", result.render(2));
  finish(run);

  // the classification must match what the ladder actually did
  bool consistent = true;
  if (rep.regime == "nonexistence") {
    for (std::size_t k = 1; k < rep.records.size(); ++k)
      if (!(rep.records[k].mass_bound > rep.records[k - 1].mass_bound))
        consistent = false;
  } else if (rep.regime == "local-existence") {
    double prev_inc = std::numeric_limits<double>::infinity();
    for (std::size_t k = 1; k < rep.records.size(); ++k) {
      const double inc =
          (rep.records[k].mass_bound - rep.records[k - 1].mass_bound) /
          rep.records[k - 1].mass_bound;
      if (!(inc < prev_inc)) consistent = false;
      prev_inc = inc;
    }
  }
  if (!consistent) {
    std::fprintf(stderr,
                 "blowup: ladder contradicts the %s classification\n",
                 rep.regime.c_str());
    return kExitViolation;
  }
  return 0;
}

int run_osgood(const Config& cfg) {
  const int terms = static_cast<int>(cfg.number_or("terms", 8));
  if (terms < 1 || terms > 1000)
    throw InvalidQuery("osgood: terms must be in 1..1000");

  RunDirectory run = open_run(cfg);
  CsvBuilder csv({"i", "log_phi", "log_f_phi", "term", "partial_sum"});
  for (int i = 1; i <= terms; ++i) {
    const TowerReal phi = phi_seq(i);
    const double log_phi = phi.depth >= 1
                               ? tower_to_double({phi.depth - 1, phi.top})
                               : std::log(phi.top);
    const double log_f = tower_to_double(log_f_at_phi(i));
    csv.row(std::vector<double>{static_cast<double>(i), log_phi, log_f,
                                osgood_term(i), osgood_partial_sum(i)});
  }
  run.write_text("osgood.csv", csv.str());

  const OdeResult square = ode_integrate(FujitaPower{2.0}, 1.0, 1.1);
  const OdeResult walker =
      ode_integrate(BadOsgood{}, phi_double(2), 10.0);

  JsonObject result;
  result.integer("terms", terms);
  result.num("partial_sum", osgood_partial_sum(terms));
  result.boolean("square_blew_up", square.blew_up);
  result.num("square_t_blowup", square.t_blowup);
  result.boolean("walker_blew_up", walker.blew_up);
  result.integer("walker_steps", walker.steps);
  emit_report(run, "report.json", result.render(2));
  finish(run);

  if (!square.blew_up || walker.blew_up) {
    std::fprintf(stderr, "osgood: ODE witness contradicts the dichotomy\n");
    return kExitViolation;
  }
  return 0;
}

int run_verify_all(const Config& cfg) {
  std::vector<CriterionResult> results;
  for (int i = 1; i <= kCheckCount; ++i) {
    const CriterionResult r = run_acceptance_check(i);
    std::fprintf(stderr, "[%d/%d] %s: %s (%.2f s)\n", r.index, kCheckCount,
                 r.name.c_str(), r.pass ? "pass" : "FAIL", r.seconds);
    if (!r.pass) std::fprintf(stderr, "      %s\n", r.detail.c_str());
    results.push_back(r);
  }

  RunDirectory run = open_run(cfg);
  std::vector<std::string> items;
  bool all_pass = true;
  bool any_violation = false;
  bool any_numeric = false;
  for (const auto& r : results) {
    JsonObject check;
    check.integer("index", r.index);
    check.str("name", r.name);
    check.boolean("pass", r.pass);
    check.str("detail", r.detail);
    items.push_back(check.render(4));
    if (!r.pass) {
      all_pass = false;
      if (r.detail.rfind("exception: ", 0) == 0)
        any_numeric = true;
      else
        any_violation = true;
    }
  }
  JsonObject result;
  result.boolean("all_pass", all_pass);
  result.raw("checks", json_array(items, 2));
  emit_report(run, "verify.json", result.render(2));
  finish(run);

  if (all_pass) return 0;
  return any_violation ? kExitViolation : kExitNumeric;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"numerical laboratory for Dirichlet heat kernels, lower "
               "bounds, and reaction blow-up"};
  app.require_subcommand(1);

  SubCmd kernel = make_subcommand(
      app, "kernel", "tabulate the interval kernel against its bound");
  kernel.add_string("--domain", "domain", "interval:0.5",
                    "interval:A (frame is [0, 2A])");
  kernel.add_number("--y", "y", 0.2, "source point in frame coordinates");
  kernel.add_number("--t", "t", 0.02, "evaluation time");
  kernel.add_number("--points", "points", 21, "grid resolution");
  kernel.add_flag("--plot", "plot", "also render an SVG figure");

  SubCmd sweep = make_subcommand(app, "bounds-sweep",
                                 "verify a lower bound over a grid");
  sweep.add_string("--kind", "kind", "short-time-nd", "bound kind");
  sweep.add_string("--domain", "domain", "interval:0.5",
                   "interval:A or box:A,B[,C]");
  {
    // convenience spelling from the docs: --box 1,1
    auto holder = std::make_shared<std::string>();
    CLI::Option* opt = sweep.app->add_option(
        "--box", *holder, "shorthand for --domain box:...");
    sweep.bindings.push_back(
        {"domain", opt, [holder] { return "box:" + *holder; }});
  }
  sweep.add_number("--points-per-axis", "points_per_axis", 9,
                   "spatial nodes per axis");
  sweep.add_number("--time-points", "time_points", 25, "time nodes");
  sweep.add_number("--t-lo", "t_lo", 1e-4, "low end of t/a^2");
  sweep.add_number("--t-hi", "t_hi", 10.0, "high end of t/a^2");

  SubCmd ball = make_subcommand(
      app, "prop-ball", "certify largeness boxes under singular data");
  ball.add_number("--a", "a", 1.0, "interval half-width");
  ball.add_number("--alpha", "alpha", 0.5, "singularity strength");
  ball.add_number("--R", "R", 0.5, "support radius");
  ball.add_number("--cap", "cap",
                  std::numeric_limits<double>::infinity(),
                  "data truncation height");
  ball.add_string("--phis", "phis", "4,8,16,32,64", "levels to certify");

  SubCmd blowup = make_subcommand(
      app, "blowup", "cap-ladder probe of the existence dichotomy");
  blowup.add_number("--n", "n", 1, "space dimension");
  blowup.add_number("--q", "q", 1, "data integrability exponent");
  blowup.add_number("--p", "p", 6, "reaction power");
  blowup.add_number("--alpha", "alpha", 0.9, "singularity strength");
  blowup.add_number("--R", "R", 0.5, "support radius");
  blowup.add_number("--a", "a", 1.0, "interval half-width");
  blowup.add_string("--caps", "caps", "10,100,1000,10000", "cap ladder");
  blowup.add_number("--t-star", "t_star", 0.2, "probe time");
  blowup.add_number("--cells", "cells", 256, "radial grid cells");
  blowup.add_number("--u-max", "u_max", 1e12, "blow-up threshold");
  blowup.add_number("--s-per-decade", "s_per_decade", 16,
                    "time quadrature density");
  blowup.add_number("--y-per-decade", "y_per_decade", 64,
                    "space quadrature density");

  SubCmd osgood = make_subcommand(
      app, "osgood", "tabulate the slow-divergence construction");
  osgood.add_number("--terms", "terms", 8, "table rows");

  SubCmd verify = make_subcommand(app, "verify-all",
                                  "run the full verification suite");

  int rc = 0;
  kernel.app->callback([&] { rc = run_kernel(kernel.resolve()); });
  sweep.app->callback([&] { rc = run_bounds_sweep(sweep.resolve()); });
  ball.app->callback([&] { rc = run_prop_ball(ball.resolve()); });
  blowup.app->callback([&] { rc = run_blowup(blowup.resolve()); });
  osgood.app->callback([&] { rc = run_osgood(osgood.resolve()); });
  verify.app->callback([&] { rc = run_verify_all(verify.resolve()); });

  try {
    app.parse(argc, argv);
    return rc;
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    const std::string name = e.get_name();
    if (name == "CallForHelp" || name == "CallForAllHelp" ||
        name == "CallForVersion")
      return code;
    return kExitBadConfig;
  } catch (const InvalidQuery& e) {
    std::fprintf(stderr, "invalid config: %s\n", e.what());
    return kExitBadConfig;
  } catch (const OutOfValidity& e) {
    std::fprintf(stderr, "outside supported range: %s\n", e.what());
    return kExitBadConfig;
  } catch (const std::filesystem::filesystem_error& e) {
    std::fprintf(stderr, "filesystem: %s\n", e.what());
    return kExitBadConfig;
  } catch (const BudgetExhausted& e) {
    std::fprintf(stderr, "budget exhausted: %s\n", e.what());
    return kExitNumeric;
  } catch (const NumericFailure& e) {
    std::fprintf(stderr, "numeric failure: %s\n", e.what());
    return kExitNumeric;
  } catch (const std::exception& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return kExitNumeric;
  }
}
