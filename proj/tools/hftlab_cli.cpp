// hftlab: experiment runner. One subcommand per experiment; each writes
// <out>/<experiment>.json (and CSV where it makes sense) and echoes the JSON.
//
// Exit status: 0 all checks pass, 1 some invariant failed, 2 bad input.

#include <CLI11.hpp>

#include <cmath>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <limits>
#include <iostream>
#include <numbers>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "hftlab/deficiency.hpp"
#include "hftlab/domain.hpp"
#include "hftlab/errors.hpp"
#include "hftlab/friedrichs.hpp"
#include "hftlab/hft.hpp"
#include "hftlab/io.hpp"
#include "hftlab/mobius.hpp"
#include "hftlab/operators.hpp"
#include "hftlab/physics.hpp"
#include "hftlab/profiles.hpp"
#include "hftlab/serialize.hpp"
#include "hftlab/spectrum.hpp"
#include "hftlab/transform.hpp"

namespace {

using namespace hftlab;

constexpr int exit_pass = 0;
constexpr int exit_fail = 1;
constexpr int exit_input = 2;

struct Options {
  std::string out = "hftlab_out";
  std::string format = "both";
  double hbar = 1.0;

  // roundtrip / plancherel / commutator / domains
  std::string profile = "all";
  double y = 1.0;
  double y_min = 1e-3;
  std::string rep = "both";
  std::string input_csv;

  // deficiency / spectrum
  std::string op = "Z";
  std::string lambda;

  // friedrichs / sqrt
  double length = 20.0;
  int nodes = 400;
  int samples = 1000;
  std::uint64_t seed = 20240917;

  // mobius
  std::string mobius;
  std::optional<double> dilate;
  std::optional<double> translate;
  bool invert = false;
  std::string interval = "0,inf";

  // demo free-particle
  double e_prime = 1.0;
  double sigma = 0.05;
  double t_min = -5.0;
  double t_max = 5.0;
  int t_count = 1001;
  double y_line = 1e-3;
  double mass = 1.0;
  double momentum = 2.0;
};

json defaults_json() {
  const Options d;
  return make_report("defaults",
                     json{{"hbar", d.hbar},
                          {"out", d.out},
                          {"format", d.format},
                          {"roundtrip", {{"profile", d.profile}, {"y", d.y}, {"tolerance", 1e-6}}},
                          {"plancherel", {{"profile", d.profile}, {"y_min", d.y_min}, {"tolerance", 1e-4}}},
                          {"commutator", {{"profile", d.profile}, {"rep", d.rep}, {"tolerance", 1e-6}}},
                          {"deficiency", {{"op", d.op}, {"windows", default_windows(d.hbar)}}},
                          {"friedrichs",
                           {{"L", d.length}, {"N", d.nodes}, {"samples", d.samples}, {"seed", d.seed}}},
                          {"sqrt", {{"L", d.length}, {"N", d.nodes}, {"tolerance", 1e-10}, {"witness_min", 0.1}}},
                          {"spectrum", {{"op", d.op}, {"lengths", SpectrumParams{}.lengths}}},
                          {"mobius", {{"interval", d.interval}, {"profile", "sexp"}}},
                          {"demo_free_particle",
                           {{"E_prime", d.e_prime},
                            {"sigma", d.sigma},
                            {"t_min", d.t_min},
                            {"t_max", d.t_max},
                            {"t_count", d.t_count},
                            {"y", d.y_line},
                            {"mass", d.mass},
                            {"momentum", d.momentum}}}});
}

class Runner {
 public:
  explicit Runner(const Options& o) : o_(o) {
    if (const char* env = std::getenv("HFTLAB_OUTPUT"); env != nullptr && *env != '\0') out_ = env;
    else out_ = o.out;
  }

  bool want_json() const { return o_.format == "json" || o_.format == "both"; }
  bool want_csv() const { return o_.format == "csv" || o_.format == "both"; }

  std::string path(const std::string& name) const { return (std::filesystem::path(out_) / name).string(); }

  int emit(const std::string& experiment, json body, bool pass) {
    body["pass"] = pass;
    const json report = make_report(experiment, body);
    const std::string text = dump(report);
    if (want_json()) write_file(path(experiment + ".json"), text);
    write_file(path("defaults.json"), dump(defaults_json()));
    std::cout << text;
    return pass ? exit_pass : exit_fail;
  }

  template <class Fn>
  void csv(const std::string& name, Fn&& fn) {
    if (!want_csv()) return;
    std::ostringstream os;
    os.imbue(std::locale::classic());
    fn(os);
    write_file(path(name), os.str());
  }

  std::vector<Profile> profiles() const {
    if (o_.profile == "all") return decaying_suite();
    return {profile_by_name(o_.profile)};
  }

  const Options& opt() const { return o_; }

 private:
  Options o_;
  std::string out_;
};

void check_hbar(double hbar) {
  if (!(hbar > 0.0) || !std::isfinite(hbar)) throw InputError("--hbar must be positive");
}

int run_roundtrip(Runner& r) {
  const auto& o = r.opt();
  if (!(o.y > 0.0)) throw DomainError("--y must be positive");
  json rows = json::array();
  bool pass = true;
  for (const auto& p : r.profiles()) {
    const auto res = roundtrip(p.f, o.y, o.hbar);
    const bool ok = res.relative_error < 1e-6;
    pass = pass && ok;
    rows.push_back(json{{"profile", p.name},
                        {"formula", p.formula},
                        {"y", o.y},
                        {"relative_error", res.relative_error},
                        {"tail_estimate", res.tail_estimate},
                        {"pass", ok}});
    r.csv("roundtrip_" + p.name + ".csv", [&](std::ostream& os) { write_csv(os, res.reconstructed); });
  }
  return r.emit("roundtrip",
                json{{"paper_ref", "inverse of the forward transform on a horizontal line"},
                     {"hbar", o.hbar},
                     {"tolerance", 1e-6},
                     {"results", rows}},
                pass);
}

int run_plancherel(Runner& r) {
  const auto& o = r.opt();
  if (!(o.y_min > 0.0)) throw DomainError("--y-min must be positive");
  std::vector<double> probes;
  for (double y = o.y_min; y <= 4.0 + 1e-12; y *= 2.0) probes.push_back(y);
  json rows = json::array();
  bool pass = true;
  const auto grid = default_source_grid();
  for (const auto& p : r.profiles()) {
    const auto f = SampledHalfLineFunction::sample(grid, p.f, o.hbar);
    const auto sup = hardy_sup_norm(f, probes);
    const double nsq = f.norm_sq();
    const double rel = std::abs(sup.value - nsq) / nsq;
    const bool ok = rel < 1e-4 && sup.strictly_decreasing;
    pass = pass && ok;
    json row = to_json(sup);
    row["profile"] = p.name;
    row["norm_sq"] = nsq;
    row["relative_gap"] = rel;
    row["pass"] = ok;
    rows.push_back(row);
  }
  return r.emit("plancherel",
                json{{"paper_ref", "Hardy norm equals the L2 norm of f"}, {"tolerance", 1e-4}, {"results", rows}},
                pass);
}

int run_commutator(Runner& r) {
  const auto& o = r.opt();
  std::vector<Representation> reps;
  if (o.rep == "s" || o.rep == "both") reps.push_back(Representation::s_representation);
  if (o.rep == "z" || o.rep == "both") reps.push_back(Representation::z_representation);
  if (reps.empty()) throw InputError("--rep must be s, z or both");
  json rows = json::array();
  bool pass = true;
  const auto grid = default_source_grid();
  for (const auto& p : r.profiles()) {
    const auto f = SampledHalfLineFunction::sample(grid, p.f, o.hbar);
    json row{{"profile", p.name}};
    try {
      for (auto rep : reps) {
        const auto c = commutator_residual(f, rep);
        const bool ok = c.residual < 1e-6;
        pass = pass && ok;
        row[std::string(to_string(rep))] = json{{"residual", c.residual}, {"pass", ok}};
        row["domain"] = to_json(c.domain);
      }
    } catch (const DomainPreconditionError& e) {
      if (o.profile != "all") throw;
      row["skipped"] = e.what();
      row["domain"] = to_json(e.report());
    }
    rows.push_back(row);
  }
  return r.emit("commutator",
                json{{"paper_ref", "[Z, S] = i hbar on the joint domain"}, {"tolerance", 1e-6}, {"results", rows}},
                pass);
}

int run_domains(Runner& r) {
  const auto& o = r.opt();
  json rows = json::array();
  auto add = [&](const std::string& name, const SampledHalfLineFunction& f) {
    json row = to_json(domain_membership(f));
    row["function"] = name;
    rows.push_back(row);
  };
  if (!o.input_csv.empty()) {
    std::ifstream in(o.input_csv);
    if (!in) throw InputError("cannot read " + o.input_csv);
    add(o.input_csv, read_sampled_csv(in, default_source_grid(), o.hbar));
  } else {
    const auto grid = default_source_grid();
    for (const auto& p : r.profiles()) add(p.name, SampledHalfLineFunction::sample(grid, p.f, o.hbar));
  }
  return r.emit("domains", json{{"paper_ref", "domains of S, Z and Z_dagger"}, {"results", rows}}, true);
}

int run_deficiency(Runner& r) {
  const auto& o = r.opt();
  const auto op = deficiency_operator_from_string(o.op);
  const auto rep = deficiency_indices(op, o.hbar, default_windows(o.hbar));
  std::pair<int, int> expected{0, 1};
  if (op == DeficiencyOperator::S) expected = {0, 0};
  if (op == DeficiencyOperator::Z_squared) expected = {1, 1};
  json body = to_json(rep);
  body["expected"] = json::array({expected.first, expected.second});
  return r.emit("deficiency", body, rep.d_plus == expected.first && rep.d_minus == expected.second);
}

complex parse_complex(const std::string& text) {
  const auto comma = text.find(',');
  try {
    if (comma == std::string::npos) return {std::stod(text), 0.0};
    return {std::stod(text.substr(0, comma)), std::stod(text.substr(comma + 1))};
  } catch (const std::exception&) {
    throw InputError("expected re,im but got '" + text + "'");
  }
}

int run_residual_spectrum(Runner& r) {
  const auto& o = r.opt();
  std::vector<complex> lambdas;
  if (!o.lambda.empty()) {
    lambdas.push_back(parse_complex(o.lambda));
  } else {
    for (double im : {1.0, 0.1, 0.0, -0.1, -1.0})
      for (double re : {-2.0, 0.0, 2.0}) lambdas.emplace_back(re, im);
  }
  json rows = json::array();
  bool pass = true;
  for (auto lam : lambdas) {
    const auto m = residual_membership_Z(lam, o.hbar, default_windows(o.hbar));
    // Upper half-plane: L2 kernel of the adjoint. Real axis: bounded boundary case. Lower: nothing.
    const bool ok = lam.imag() > 0.0 ? m.member : (lam.imag() == 0.0 ? (m.boundary_case && !m.member) : !m.member);
    pass = pass && ok;
    json row = to_json(m);
    row["consistent"] = ok;
    rows.push_back(row);
  }
  return r.emit("residual-spectrum",
                json{{"paper_ref", "residual spectrum of Z"}, {"operator", "Z"}, {"results", rows}}, pass);
}

int run_friedrichs(Runner& r) {
  const auto& o = r.opt();
  const auto op = build_friedrichs_Zsq(o.length, o.nodes, o.hbar);
  const double min_rq = min_rayleigh_quotient(op, o.samples, o.seed);
  const auto dec = decompose(op);
  std::vector<double> ev(dec.eigenvalues.data(), dec.eigenvalues.data() + dec.eigenvalues.size());
  json lowest = json::array();
  for (int k = 1; k <= std::min<int>(5, static_cast<int>(ev.size())); ++k) {
    const double exact = std::pow(o.hbar * k * std::numbers::pi / o.length, 2);
    lowest.push_back(json{{"k", k}, {"eigenvalue", ev[k - 1]}, {"continuum", exact},
                          {"relative_error", std::abs(ev[k - 1] - exact) / exact}});
  }
  const bool pass = min_rq >= -1e-12 && ev.front() >= -1e-12;
  r.csv("friedrichs_eigenvalues.csv", [&](std::ostream& os) { write_eigenvalues_csv(os, ev); });
  return r.emit("friedrichs",
                json{{"paper_ref", "Friedrichs extension of Z^2 is bounded below by 0"},
                     {"L", o.length},
                     {"N", o.nodes},
                     {"hbar", o.hbar},
                     {"mesh", op.mesh},
                     {"samples", o.samples},
                     {"seed", o.seed},
                     {"min_rayleigh_quotient", min_rq},
                     {"min_eigenvalue", ev.front()},
                     {"decomposition_residual", dec.residual},
                     {"lowest", lowest}},
                pass);
}

int run_sqrt(Runner& r) {
  const auto& o = r.opt();
  const auto op = build_friedrichs_Zsq(o.length, o.nodes, o.hbar);
  const auto root = sqrt_friedrichs(op);
  const double consistency = root_consistency(root, op.dense());
  const auto& re = root.root_eigenvalues;
  const double min_root = re.minCoeff();
  const auto witness = noncommutation_witness(o.length, o.nodes, o.hbar);
  const bool pass = consistency < 1e-10 && min_root >= 0.0 && witness.value > 0.1;
  std::vector<double> ev(re.data(), re.data() + re.size());
  r.csv("sqrt_eigenvalues.csv", [&](std::ostream& os) { write_eigenvalues_csv(os, ev); });
  return r.emit("sqrt",
                json{{"paper_ref", "square root of the Friedrichs extension"},
                     {"L", o.length},
                     {"N", o.nodes},
                     {"hbar", o.hbar},
                     {"root_consistency", consistency},
                     {"min_root_eigenvalue", min_root},
                     {"witness", to_json(witness)}},
                pass);
}

int run_spectrum(Runner& r) {
  const auto& o = r.opt();
  SpectrumParams params;
  params.hbar = o.hbar;
  const auto rep = spectrum_report(spectrum_operator_from_string(o.op), params);
  return r.emit("spectrum", to_json(rep), rep.all_pass());
}

std::vector<double> parse_list(const std::string& text, std::size_t count) {
  std::vector<double> v;
  std::stringstream ss(text);
  std::string tok;
  while (std::getline(ss, tok, ',')) {
    try {
      std::size_t used = 0;
      v.push_back(std::stod(tok, &used));
      if (used != tok.size()) throw std::invalid_argument(tok);
    } catch (const std::exception&) {
      throw InputError("not a number: '" + tok + "'");
    }
  }
  if (v.size() != count) throw InputError("expected " + std::to_string(count) + " comma-separated numbers");
  return v;
}

int run_mobius(Runner& r) {
  const auto& o = r.opt();
  const int chosen = static_cast<int>(!o.mobius.empty()) + static_cast<int>(o.dilate.has_value()) +
                     static_cast<int>(o.translate.has_value()) + static_cast<int>(o.invert);
  if (chosen > 1) throw InputError("choose one of --mobius, --dilate, --translate, --invert");
  MobiusTransform m = MobiusTransform::identity();
  if (!o.mobius.empty()) {
    const auto c = parse_list(o.mobius, 4);
    m = MobiusTransform(c[0], c[1], c[2], c[3]);
  } else if (o.dilate) {
    m = MobiusTransform::dilation(*o.dilate);
  } else if (o.translate) {
    m = MobiusTransform::translation(*o.translate);
  } else if (o.invert) {
    m = MobiusTransform::inversion();
  }
  const auto image = boundary_action(m, parse_interval(o.interval));

  // Im-preservation on a fixed lattice of upper half-plane points.
  double worst = std::numeric_limits<double>::infinity();
  for (int i = -10; i <= 10; ++i)
    for (double y : {1e-3, 0.1, 1.0, 10.0}) {
      const auto w = mobius_apply(m, HalfPlanePoint(0.5 * i, y));
      worst = std::min(worst, w.y);
    }
  bool pass = worst > 0.0;

  json body{{"paper_ref", "Moebius action on the upper half-plane and its boundary"},
            {"transform", to_json(m)},
            {"description", m.to_string()},
            {"interval", o.interval},
            {"image", image.to_string()},
            {"min_image_imaginary_part", worst}};
  try {
    const auto kind = classify_transform(m);
    const auto f = SampledHalfLineFunction::sample(default_source_grid(), profile_by_name("sexp").f, o.hbar);
    const auto pair = transform_hft_pair(m, f);
    const double res = pair.commutator_residual();
    pass = pass && res < 1e-6;
    body["kind"] = std::string(to_string(kind));
    body["tilde_pair"] = json{{"profile", "sexp"},
                              {"commutator_sign", pair.commutator_sign()},
                              {"commutator_residual", res},
                              {"z_shift", pair.z_shift()},
                              {"scale", pair.scale()}};
  } catch (const UnsupportedTransformError& e) {
    body["kind"] = "general";
    body["tilde_pair"] = nullptr;
    body["tilde_pair_note"] = e.what();
  }
  return r.emit("mobius", body, pass);
}

int run_free_particle(Runner& r) {
  const auto& o = r.opt();
  if (o.t_count < 5) throw InputError("--t-count must be at least 5");
  if (!(o.t_max > o.t_min)) throw InputError("--t-max must exceed --t-min");
  const auto t = uniform_nodes(o.t_min, o.t_max, static_cast<std::size_t>(o.t_count));
  const auto rep = time_representation(o.e_prime, o.sigma, t, o.y_line, o.hbar);
  const double slope_error = std::abs(rep.phase_slope - o.e_prime / o.hbar);
  const double schr = schrodinger_residual(o.e_prime, t, o.hbar, -1);
  const double wrong = schrodinger_residual(o.e_prime, t, o.hbar, +1);
  const auto map = free_particle_map(FreeParticleConfig{o.mass, o.hbar, o.momentum});
  const auto mirror = free_particle_map(FreeParticleConfig{o.mass, o.hbar, -o.momentum});
  const bool degenerate = map.energy == mirror.energy;
  const bool pass = slope_error < 1e-2 && schr < 1e-8 && degenerate;
  r.csv("free_particle.csv", [&](std::ostream& os) { write_demo_csv(os, rep); });
  return r.emit("demo-free-particle",
                json{{"paper_ref", "time representation of an energy eigenfunction"},
                     {"E_prime", o.e_prime},
                     {"sigma", o.sigma},
                     {"y", o.y_line},
                     {"hbar", o.hbar},
                     {"phase_slope", rep.phase_slope},
                     {"limit_case", rep.limit_case},
                     {"residuals",
                      {{"phase_slope_error", slope_error},
                       {"phase_error", rep.phase_error},
                       {"schrodinger", schr},
                       {"schrodinger_wrong_sign", wrong}}},
                     {"free_particle", to_json(map)},
                     {"degeneracy_exact", degenerate}},
                pass);
}

int run_defaults(Runner& r) {
  const std::string text = dump(defaults_json());
  write_file(r.path("defaults.json"), text);
  std::cout << text;
  return exit_pass;
}

}  // namespace

int main(int argc, char** argv) {
  Options o;
  CLI::App app{"hftlab: numerical experiments with the holomorphic Fourier transform on (0, inf)"};
  app.require_subcommand(1);
  app.fallthrough();
  app.add_option("--out", o.out, "Output directory (HFTLAB_OUTPUT overrides)")->capture_default_str();
  app.add_option("--format", o.format, "json | csv | both")
      ->check(CLI::IsMember({"json", "csv", "both"}))
      ->capture_default_str();
  app.add_option("--hbar", o.hbar, "Planck constant")->capture_default_str();

  int (*selected)(Runner&) = nullptr;
  auto sub = [&](const char* name, const char* help, int (*fn)(Runner&)) {
    auto* s = app.add_subcommand(name, help);
    s->callback([&selected, fn] { selected = fn; });
    return s;
  };
  auto profile_opt = [&](CLI::App* s) {
    s->add_option("--profile", o.profile, "exp | sexp | gauss | s2exp | inv1p | all")->capture_default_str();
  };

  auto* rt = sub("roundtrip", "forward then inverse transform on one line", run_roundtrip);
  profile_opt(rt);
  rt->add_option("--y", o.y, "Im z of the sampling line")->capture_default_str();

  auto* pl = sub("plancherel", "sup over lines of the line norm versus ||f||^2", run_plancherel);
  profile_opt(pl);
  pl->add_option("--y-min", o.y_min, "smallest probe line")->capture_default_str();

  auto* cm = sub("commutator", "[Z, S] f - i hbar f in both representations", run_commutator);
  profile_opt(cm);
  cm->add_option("--rep", o.rep, "s | z | both")->capture_default_str();

  auto* dm = sub("domains", "membership in D(S), D(Z), D(Z_dagger)", run_domains);
  profile_opt(dm);
  dm->add_option("--input", o.input_csv, "s,re,im CSV on the default source grid");

  auto* df = sub("deficiency", "deficiency indices of S, Z or Z^2", run_deficiency);
  df->add_option("--op", o.op, "S | Z | Z2")->capture_default_str();

  auto* rs = sub("residual-spectrum", "adjoint-kernel test for lambda in the residual spectrum of Z",
                 run_residual_spectrum);
  rs->add_option("--lambda", o.lambda, "re,im (default: a 5x3 sample grid)");

  auto* fr = sub("friedrichs", "Dirichlet realization of Z^2", run_friedrichs);
  fr->add_option("--L", o.length, "interval length")->capture_default_str();
  fr->add_option("--N", o.nodes, "interior nodes")->capture_default_str();
  fr->add_option("--samples", o.samples, "random Rayleigh quotient samples")->capture_default_str();
  fr->add_option("--seed", o.seed, "RNG seed")->capture_default_str();

  auto* sq = sub("sqrt", "positive square root of the Friedrichs extension", run_sqrt);
  sq->add_option("--L", o.length, "interval length")->capture_default_str();
  sq->add_option("--N", o.nodes, "interior nodes")->capture_default_str();

  auto* sp = sub("spectrum", "point, residual and continuous spectrum evidence", run_spectrum);
  sp->add_option("--op", o.op, "S | Z | Z2F | Zsqrt")->capture_default_str();

  auto* mb = sub("mobius", "SL(2,R) action and the transformed pair", run_mobius);
  mb->add_option("--mobius", o.mobius, "a,b,c,d with ad - bc = 1");
  mb->add_option("--dilate", o.dilate, "z -> lambda z");
  mb->add_option("--translate", o.translate, "z -> z + k");
  mb->add_flag("--invert", o.invert, "z -> -1/z");
  mb->add_option("--interval", o.interval, "boundary interval lo,hi (inf allowed)")->capture_default_str();

  auto* demo = app.add_subcommand("demo", "physics demonstrations");
  demo->require_subcommand(1);
  auto* fp = demo->add_subcommand("free-particle", "time representation and Schroedinger residual");
  fp->callback([&selected] { selected = run_free_particle; });
  fp->add_option("--E-prime", o.e_prime, "energy eigenvalue")->capture_default_str();
  fp->add_option("--sigma", o.sigma, "Gaussian width standing in for the delta")->capture_default_str();
  fp->add_option("--t-min", o.t_min)->capture_default_str();
  fp->add_option("--t-max", o.t_max)->capture_default_str();
  fp->add_option("--t-count", o.t_count)->capture_default_str();
  fp->add_option("--y", o.y_line, "Hardy line approaching the time axis")->capture_default_str();
  fp->add_option("--mass", o.mass)->capture_default_str();
  fp->add_option("--momentum", o.momentum)->capture_default_str();

  sub("defaults", "write defaults.json", run_defaults);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    std::cerr << app.help();
    return exit_input;
  }

  try {
    check_hbar(o.hbar);
    Runner runner(o);
    return selected(runner);
  } catch (const TruncationError& e) {
    std::cerr << "hftlab: " << e.what() << " (estimate " << e.estimate() << ")\n";
    return exit_fail;
  } catch (const PositivityError& e) {
    std::cerr << "hftlab: " << e.what() << "\n";
    return exit_fail;
  } catch (const Error& e) {
    std::cerr << "hftlab: " << e.what() << "\n";
    return exit_input;
  }
}
