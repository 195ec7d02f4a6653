#include "shiftalg/cli.hpp"

#include <cmath>
#include <cstdio>
#include <map>
#include <numbers>
#include <optional>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>

#include "shiftalg/contour.hpp"
#include "shiftalg/expr.hpp"
#include "shiftalg/field.hpp"
#include "shiftalg/functions.hpp"
#include "shiftalg/json_io.hpp"
#include "shiftalg/matrix.hpp"
#include "shiftalg/signal.hpp"
#include "shiftalg/structure.hpp"

namespace shiftalg {

namespace {

std::string num(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.12g", v == 0.0 ? 0.0 : v);
  return buf;
}

std::string full(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v == 0.0 ? 0.0 : v);
  return buf;
}

std::string sci(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.3e", v);
  return buf;
}

struct Options {
  int eps = 1;
  bool json = false;
  double tol = kDefaultSetTol;
  bool tol_given = false;
  int quad_order = 8;
  int subdivisions = 64;
  std::uint64_t seed = 42;
  std::string out;

  Signature sig() const { return signature_from_int(eps); }
  QuadratureSettings quad() const { return {quad_order, subdivisions}; }
};

// Writes to --out when given, else to the output stream.
void emit(const Options& o, std::ostream& out, const std::string& text) {
  if (o.out.empty()) {
    out << text;
  } else {
    write_text_file(o.out, text);
  }
}

// ---------------------------------------------------------------- eval

int cmd_eval(const Options& o, const std::string& src, std::ostream& out) {
  const Ast ast = parse(src);
  const Binarion v = eval(*ast, o.sig());
  if (o.json) {
    out << to_json(v).dump() << "\n";
  } else {
    out << to_string(v) << "\n";
  }
  return kExitOk;
}

// ---------------------------------------------------------------- classify

int cmd_classify(const Options& o, double x, double y, std::ostream& out) {
  const Binarion a(x, y, o.sig());
  const Region r = classify(a, o.tol);
  const FixedPointReport fp = fixed_analysis(a, o.tol);

  std::optional<Binarion> inverse;
  if (r.in_LC2_star) inverse = inv(a);
  std::optional<Binarion> partner;
  if (r.in_N && !a.is_zero()) partner = zero_divisor_partner(a, o.tol);

  std::vector<std::string> lines;
  if (fp.in_FS1) lines.push_back("FS1 (x - y = 1)");
  if (fp.in_FS2) lines.push_back("FS2 (x + y = 1)");
  if (fp.in_S1) lines.push_back("S1 (x + y = 0)");
  if (fp.in_S2) lines.push_back("S2 (x - y = 0)");

  if (o.json) {
    Json j = {{"L", to_json(a)}, {"region", to_json(r)}};
    j["inverse"] = inverse ? to_json(*inverse) : Json(nullptr);
    j["zero_divisor_partner"] = partner ? to_json(*partner) : Json(nullptr);
    j["fixed_lines"] = lines;
    out << j.dump(2) << "\n";
    return kExitOk;
  }

  auto yn = [](bool b) { return b ? "yes" : "no"; };
  out << "L = " << to_string(a) << "\n";
  out << "det = " << num(r.det) << "\n";
  out << "region: " << region_tag_name(r.tag) << "\n";
  out << "  LC2*: " << yn(r.in_LC2_star) << "  H: " << yn(r.in_H) << "  V: " << yn(r.in_V)
      << "  U: " << yn(r.in_U) << "  N: " << yn(r.in_N) << "  E: " << yn(r.in_Ecal) << "\n";
  if (inverse) {
    out << "invertible: yes, inverse " << to_string(*inverse) << "\n";
  } else {
    out << "invertible: no\n";
  }
  if (partner) {
    out << "zero divisor: partner " << to_string(*partner) << ", product "
        << to_string(mul(a, *partner)) << "\n";
  } else if (a.is_zero()) {
    out << "zero element\n";
  }
  if (!lines.empty()) {
    out << "fixed-point lines:";
    for (const std::string& l : lines) out << " " << l << ";";
    out << "\n";
  }
  return kExitOk;
}

// ---------------------------------------------------------------- integrate

const std::map<std::string, std::string>& named_functions() {
  static const std::map<std::string, std::string> table = {
      {"identity", "L"},   {"conj", "conj(L)"}, {"one", "I"},
      {"square", "L^2"},   {"exp", "exp(L)"},   {"inv", "inv(L)"},
  };
  return table;
}

int cmd_integrate(const Options& o, const std::string& path, const std::string& fname,
                  const std::vector<double>& l0, std::ostream& out) {
  const Contour c = contour_from_json(read_json_file(path));
  const auto it = named_functions().find(fname);
  const std::string src = it != named_functions().end() ? it->second : fname;
  const BinarionFn f = compile_function(src);
  const Signature sig = o.sig();
  const QuadratureSettings q = o.quad();

  Json j = {{"f", src},
            {"eps", eps_of(sig)},
            {"closed", c.closed()},
            {"segments", c.segments().size()},
            {"quad_order", q.order},
            {"subdivisions", q.subdivisions}};
  std::ostringstream text;
  text << "f(L) = " << src << "\n";
  text << "contour: " << (c.closed() ? "closed" : "open") << ", " << c.segments().size()
       << " segment(s)\n";
  text << "quadrature: order " << q.order << ", " << q.subdivisions << " subdivisions\n";

  if (l0.empty()) {
    const Binarion v = integrate(f, c, q, sig);
    j["integral"] = to_json(v);
    text << "integral = " << to_string(v) << "\n";
  } else {
    const Binarion p(l0[0], l0[1], sig);
    const CauchyResult r = cauchy_probe(f, c, p, q);
    j["L0"] = to_json(p);
    j["clearance"] = r.clearance;
    j["tol"] = r.tol;
    j["divergent"] = r.divergent;
    j["integral"] = r.divergent ? Json(nullptr) : to_json(r.value);
    text << "L0 = " << to_string(p) << "\n";
    text << "clearance = " << num(r.clearance) << " (tol " << num(r.tol) << ")\n";
    if (r.divergent) {
      text << "cauchy integral: Divergent (contour meets the singular lines of L0)\n";
    } else {
      text << "cauchy integral = " << to_string(r.value) << "\n";
    }
  }
  out << (o.json ? j.dump(2) + "\n" : text.str());
  return kExitOk;
}

// ---------------------------------------------------------------- analyze-grid

std::string with_suffix(const std::string& path, const std::string& suffix) {
  const auto slash = path.find_last_of('/');
  const auto dot = path.find_last_of('.');
  if (dot == std::string::npos || (slash != std::string::npos && dot < slash)) return path + suffix;
  return path.substr(0, dot) + suffix + path.substr(dot);
}

int cmd_analyze_grid(const Options& o, const std::string& path, const std::string& sense,
                     std::ostream& out) {
  const FieldGrid g = grid_from_json(read_json_file(path), o.sig());
  const double threshold = o.tol_given ? o.tol : analytic_threshold(g);

  std::vector<std::pair<std::string, CrSense>> senses;
  if (sense == "split" || sense == "both") senses.emplace_back("split", CrSense::Split);
  if (sense == "complex" || sense == "both") senses.emplace_back("complex", CrSense::Complex);

  const ComponentMax wave = wave_residual(g);
  const ComponentMax lap = laplace_residual(g);

  Json j = {{"nx", g.geom.nx}, {"ny", g.geom.ny}, {"hx", g.geom.hx()}, {"hy", g.geom.hy()},
            {"threshold", threshold}};
  std::ostringstream text;
  text << "grid " << g.geom.nx << "x" << g.geom.ny << " on [" << num(g.geom.xmin) << ", "
       << num(g.geom.xmax) << "] x [" << num(g.geom.ymin) << ", " << num(g.geom.ymax)
       << "], h = (" << num(g.geom.hx()) << ", " << num(g.geom.hy()) << ")\n";
  text << "threshold " << sci(threshold) << "\n";

  std::vector<std::string> verdicts;
  for (const auto& [name, s] : senses) {
    const ResidualGrid r = cr_residual(g, s);
    const bool ok = r.max() <= threshold;
    const std::string verdict = std::string(ok ? "PASS " : "FAIL ") + name + "-CR";
    verdicts.push_back(verdict);
    text << name << "-CR: max |r1| = " << sci(r.max_r1) << ", max |r2| = " << sci(r.max_r2)
         << " -> " << (ok ? "PASS" : "FAIL") << "\n";
    j[name + "_cr"] = {{"max_r1", r.max_r1}, {"max_r2", r.max_r2}, {"pass", ok}};
    if (!o.out.empty()) {
      std::ostringstream csv;
      write_residual_csv(csv, r);
      write_text_file(senses.size() > 1 ? with_suffix(o.out, "-" + name) : o.out, csv.str());
    }
  }
  text << "wave residual: u " << sci(wave.u) << ", v " << sci(wave.v) << "\n";
  text << "laplace residual: u " << sci(lap.u) << ", v " << sci(lap.v) << "\n";
  j["wave"] = {{"u", wave.u}, {"v", wave.v}};
  j["laplace"] = {{"u", lap.u}, {"v", lap.v}};

  std::string summary;
  for (const std::string& v : verdicts) summary += (summary.empty() ? "" : ", ") + v;
  text << "verdict: " << summary << "\n";
  j["verdict"] = verdicts;
  out << (o.json ? j.dump(2) + "\n" : text.str());
  return kExitOk;
}

// ---------------------------------------------------------------- decompose

bool ends_with(const std::string& s, const std::string& suffix) {
  return s.size() >= suffix.size() && s.compare(s.size() - suffix.size(), suffix.size(), suffix) == 0;
}

int cmd_decompose(const Options& o, const std::string& path, const std::string& csv_kind,
                  std::ostream& out) {
  const SampledSignal s = ends_with(path, ".csv")
                              ? signal_from_csv(read_text_file(path), signal_kind_from_name(csv_kind))
                              : signal_from_json(read_json_file(path));
  const Decomposition d = decompose(s);

  std::string prefix = o.out;
  if (prefix.empty()) {
    const auto slash = path.find_last_of('/');
    const auto dot = path.find_last_of('.');
    prefix = (dot == std::string::npos || (slash != std::string::npos && dot < slash))
                 ? path
                 : path.substr(0, dot);
  }
  const std::string p1_path = prefix + "_p1.json";
  const std::string ap1_path = prefix + "_ap1.json";
  write_text_file(p1_path, to_json(d.p1).dump(2) + "\n");
  write_text_file(ap1_path, to_json(d.ap1).dump(2) + "\n");

  const Binarion e = Binarion::unit_shift(Signature::Split);
  const double reassembly = max_abs_diff(d.p1 + d.ap1, s);
  const double e_plus = max_abs_diff(apply_operator(e, d.p1), d.p1);
  const double e_minus = max_abs_diff(apply_operator(e, d.ap1), -1.0 * d.ap1);

  if (o.json) {
    const Json j = {{"n", s.size()},
                    {"p1", p1_path},
                    {"ap1", ap1_path},
                    {"reassembly_residual", reassembly},
                    {"e_action_p1_residual", e_plus},
                    {"e_action_ap1_residual", e_minus}};
    out << j.dump(2) << "\n";
  } else {
    out << "signal: " << signal_kind_name(s.kind()) << ", N = " << s.size() << "\n";
    out << "wrote " << p1_path << " (1-periodic part)\n";
    out << "wrote " << ap1_path << " (1-antiperiodic part)\n";
    out << "max |p1 + ap1 - s| = " << sci(reassembly) << "\n";
    out << "max |E p1 - p1| = " << sci(e_plus) << "\n";
    out << "max |E ap1 + ap1| = " << sci(e_minus) << "\n";
  }
  return kExitOk;
}

// ---------------------------------------------------------------- compare

int cmd_compare(const Options& o, double x, double y, std::ostream& out) {
  const Binarion lc(x, y, Signature::Complex);
  const Binarion ls(x, y, Signature::Split);
  const Binarion sq_c = mul(lc, lc);
  const Binarion sq_s = mul(ls, ls);
  const double rho = norm(lc, NormKind::L2);

  std::optional<double> arg;
  try {
    arg = arg_principal(lc);
  } catch (const Error&) {
  }
  double euler_c = 0.0;
  if (arg) {
    const Binarion e = exp(Binarion(0.0, *arg, Signature::Complex));
    euler_c = std::max(std::abs(e.x() - std::cos(*arg)), std::abs(e.y() - std::sin(*arg)));
    euler_c = std::max(euler_c, distance_inf(scale(rho, e), lc));
  }

  const Region r = classify(ls, o.tol);
  std::optional<HyperbolicForm> hyp;
  if (r.in_Ecal) hyp = to_hyperbolic(ls);
  double euler_s = 0.0;
  if (hyp) {
    const Binarion e = exp(Binarion(0.0, hyp->theta, Signature::Split));
    euler_s = std::max(std::abs(e.x() - std::cosh(hyp->theta)),
                       std::abs(e.y() - std::sinh(hyp->theta)));
    euler_s = std::max(euler_s, distance_inf(from_hyperbolic(*hyp), ls));
  }
  std::string why;
  if (!hyp) {
    why = r.in_N ? "null cone |x| = |y| (degeneracy)" : "outside the region x > |y|";
  }

  if (o.json) {
    Json j = {{"x", x}, {"y", y}};
    j["complex"] = {{"product_rule", "(ac - bd) I + (ad + bc) E"},
                    {"square", to_json(sq_c)},
                    {"rho", rho},
                    {"arg", arg ? Json(*arg) : Json(nullptr)},
                    {"euler_residual", arg ? Json(euler_c) : Json(nullptr)},
                    {"cr", "u_x = v_y, u_y = -v_x"}};
    j["split"] = {{"product_rule", "(ac + bd) I + (ad + bc) E"},
                  {"square", to_json(sq_s)},
                  {"rho_hyp", hyp ? Json(hyp->rho) : Json(nullptr)},
                  {"theta", hyp ? Json(hyp->theta) : Json(nullptr)},
                  {"euler_residual", hyp ? Json(euler_s) : Json(nullptr)},
                  {"cr", "u_x = v_y, u_y = v_x"}};
    if (!hyp) j["split"]["undefined_reason"] = why;
    out << j.dump(2) << "\n";
    return kExitOk;
  }

  char row[256];
  auto line = [&](const char* label, const std::string& a, const std::string& b) {
    std::snprintf(row, sizeof row, "%-14s %-44s %s\n", label, a.c_str(), b.c_str());
    out << row;
  };
  const std::string undefined = "undefined: " + why;
  line("", "C (E^2 = -I)", "LC2 (E^2 = +I)");
  line("L", to_string(lc), to_string(ls));
  line("product", "(ac - bd) I + (ad + bc) E", "(ac + bd) I + (ad + bc) E");
  line("L^2", to_string(sq_c), to_string(sq_s));
  line("modulus", "rho = " + num(rho), hyp ? "rho_hyp = " + num(hyp->rho) : "rho_hyp " + undefined);
  line("argument", arg ? "arg = " + num(*arg) : "arg undefined at 0",
       hyp ? "theta = " + num(hyp->theta) : "theta " + undefined);
  line("polar form", "rho e^{arg E}", "rho_hyp e^{theta E}");
  line("Euler", arg ? "e^{tE} = cos t I + sin t E, residual " + sci(euler_c) : "n/a",
       hyp ? "e^{tE} = cosh t I + sinh t E, residual " + sci(euler_s) : "n/a");
  line("CR equations", "u_x = v_y, u_y = -v_x", "u_x = v_y, u_y = v_x");
  line("harmonic", "Laplace: u_xx + u_yy = 0", "wave: u_xx - u_yy = 0");
  return kExitOk;
}

// ---------------------------------------------------------------- plot-data

int cmd_plot_data(const Options& o, const std::string& kind, const std::vector<double>& cs,
                  int samples, double extent, std::ostream& out) {
  if (samples < 2) throw Error(ErrorCode::InvalidValue, "--samples must be at least 2");
  if (!(extent > 0.0)) throw Error(ErrorCode::InvalidValue, "--extent must be positive");
  const Signature sig = o.sig();
  std::ostringstream csv;
  csv << "curve,x,y\n";
  auto curve = [&](const std::string& name, auto&& point) {
    for (int k = 0; k < samples; ++k) {
      const double s = static_cast<double>(k) / (samples - 1);
      const auto [px, py] = point(s);
      csv << name << "," << full(px) << "," << full(py) << "\n";
    }
  };
  auto lerp = [&](double s) { return -extent + 2.0 * extent * s; };

  if (kind == "level-curves") {
    if (cs.empty()) throw Error(ErrorCode::InvalidValue, "--c needs at least one level");
    for (const double c : cs) {
      if (!(c > 0.0)) throw Error(ErrorCode::InvalidValue, "level values must be positive");
      const std::string tag = "c=" + num(c);
      switch (sig) {
        case Signature::Split:
          // x^2 - y^2 = c^2, both branches
          curve(tag + "/right", [&](double s) {
            const double t = lerp(s);
            return std::pair{c * std::cosh(t), c * std::sinh(t)};
          });
          curve(tag + "/left", [&](double s) {
            const double t = lerp(s);
            return std::pair{-c * std::cosh(t), c * std::sinh(t)};
          });
          break;
        case Signature::Complex:
          curve(tag, [&](double s) {
            const double t = 2.0 * std::numbers::pi * s;
            return std::pair{c * std::cos(t), c * std::sin(t)};
          });
          break;
        case Signature::Parabolic:
          // |x| = c
          curve(tag + "/right", [&](double s) { return std::pair{c, lerp(s)}; });
          curve(tag + "/left", [&](double s) { return std::pair{-c, lerp(s)}; });
          break;
      }
    }
  } else if (kind == "null-lines") {
    switch (sig) {
      case Signature::Split:
        curve("y=x", [&](double s) { return std::pair{lerp(s), lerp(s)}; });
        curve("y=-x", [&](double s) { return std::pair{lerp(s), -lerp(s)}; });
        break;
      case Signature::Parabolic:
        curve("x=0", [&](double s) { return std::pair{0.0, lerp(s)}; });
        break;
      case Signature::Complex:
        csv << "origin,0,0\n";
        break;
    }
  } else {
    throw Error(ErrorCode::InvalidValue, "unknown plot kind " + kind);
  }
  emit(o, out, csv.str());
  return kExitOk;
}

// ---------------------------------------------------------------- iso-check

int cmd_iso_check(const Options& o, int trials, std::ostream& out) {
  Json j = Json::array();
  std::ostringstream text;
  for (const Signature s : {Signature::Complex, Signature::Parabolic, Signature::Split}) {
    const IsoReport r = iso_check(s, trials, o.seed);
    const bool ok = r.max_residual() <= 1e-10 && r.subgroup_failures == 0;
    j.push_back({{"eps", eps_of(s)},
                 {"trials", r.trials},
                 {"seed", r.seed},
                 {"add", r.add_residual},
                 {"mul", r.mul_residual},
                 {"det", r.det_residual},
                 {"trace", r.trace_residual},
                 {"spectrum", r.spectrum_residual},
                 {"inverse", r.inverse_residual},
                 {"subgroup_checks", r.subgroup_checks},
                 {"subgroup_failures", r.subgroup_failures},
                 {"pass", ok}});
    text << "eps = " << eps_of(s) << " (" << signature_name(s) << "), " << r.trials
         << " trials, seed " << r.seed << "\n";
    text << "  add " << sci(r.add_residual) << "  mul " << sci(r.mul_residual) << "  det "
         << sci(r.det_residual) << "  trace " << sci(r.trace_residual) << "  spectrum "
         << sci(r.spectrum_residual) << "  inverse " << sci(r.inverse_residual) << "\n";
    if (r.subgroup_checks > 0) {
      text << "  subgroup checks " << r.subgroup_checks << ", failures " << r.subgroup_failures
           << "\n";
    }
    text << "  " << (ok ? "PASS" : "FAIL") << "\n";
  }
  out << (o.json ? j.dump(2) + "\n" : text.str());
  return kExitOk;
}

// ---------------------------------------------------------------- errors

void report_syntax(std::ostream& err, const std::string& src, std::size_t pos) {
  err << "  " << src << "\n  " << std::string(std::min(pos, src.size()), ' ') << "^\n";
}

int exit_code_for(ErrorCode c) {
  switch (c) {
    case ErrorCode::Lex:
    case ErrorCode::Parse: return kExitUsage;
    case ErrorCode::Io: return kExitIo;
    default: return kExitMath;
  }
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Numerics for the algebras xI + yE with E^2 = -I, 0 or +I", "shiftalg"};
  app.require_subcommand(1);

  Options o;
  app.add_option("--eps", o.eps, "Signature: E^2 = eps I")
      ->check(CLI::IsMember({-1, 0, 1}))
      ->capture_default_str();
  app.add_flag("--json", o.json, "Machine-readable JSON output");
  CLI::Option* tol_opt = app.add_option("--tol", o.tol, "Set-membership or residual tolerance")
                             ->check(CLI::PositiveNumber);
  app.add_option("--quad-order", o.quad_order, "Gauss-Legendre nodes per subdivision")
      ->check(CLI::Range(1, 64))
      ->capture_default_str();
  app.add_option("--subdivisions", o.subdivisions, "Subdivisions per contour segment")
      ->check(CLI::Range(1, 1 << 20))
      ->capture_default_str();
  app.add_option("--seed", o.seed, "PRNG seed")->capture_default_str();
  app.add_option("--out", o.out, "Output path");

  std::string expr_src;
  auto* eval_cmd = app.add_subcommand("eval", "Evaluate an expression");
  eval_cmd->add_option("expr", expr_src, "Expression, e.g. \"exp(ln(2I+1E))\"")->required();

  double cx = 0.0;
  double cy = 0.0;
  auto* classify_cmd = app.add_subcommand("classify", "Region report for xI + yE (E^2 = +I)");
  classify_cmd->add_option("x", cx)->required();
  classify_cmd->add_option("y", cy)->required();

  std::string contour_path;
  std::string fname = "identity";
  std::vector<double> l0;
  auto* integrate_cmd = app.add_subcommand("integrate", "Line integral over a contour file");
  integrate_cmd->add_option("contour", contour_path, "Contour JSON file")->required();
  integrate_cmd
      ->add_option("-f,--function", fname,
                   "identity, conj, one, square, exp, inv, or an expression in L")
      ->capture_default_str();
  integrate_cmd->add_option("--l0", l0, "Cauchy probe point: X Y")->expected(2)->allow_extra_args(false);

  std::string grid_path;
  std::string sense = "both";
  auto* grid_cmd = app.add_subcommand("analyze-grid", "CR-type residuals of a sampled field");
  grid_cmd->add_option("grid", grid_path, "FieldGrid JSON file")->required();
  grid_cmd->add_option("--sense", sense)
      ->check(CLI::IsMember({"split", "complex", "both"}))
      ->capture_default_str();

  std::string signal_path;
  std::string csv_kind = "periodic2";
  auto* decompose_cmd = app.add_subcommand("decompose", "Split a 2-periodic signal");
  decompose_cmd->add_option("signal", signal_path, "Signal JSON or CSV (t,value) file")->required();
  decompose_cmd->add_option("--kind", csv_kind, "Signal kind for CSV input")
      ->check(CLI::IsMember({"periodic2", "antiperiodic2"}))
      ->capture_default_str();

  double px = 0.0;
  double py = 0.0;
  auto* compare_cmd = app.add_subcommand("compare", "Complex vs split side by side");
  compare_cmd->add_option("x", px)->required();
  compare_cmd->add_option("y", py)->required();

  std::string plot_kind = "level-curves";
  std::vector<double> levels{1.0};
  int samples = 101;
  double extent = 2.0;
  auto* plot_cmd = app.add_subcommand("plot-data", "CSV points of level curves or null lines");
  plot_cmd->add_option("--kind", plot_kind)
      ->check(CLI::IsMember({"level-curves", "null-lines"}))
      ->capture_default_str();
  plot_cmd->add_option("--c", levels, "Comma-separated levels")->delimiter(',');
  plot_cmd->add_option("--samples", samples, "Points per curve")->capture_default_str();
  plot_cmd->add_option("--extent", extent, "Parameter half-range")->capture_default_str();

  int trials = 1000;
  auto* iso_cmd = app.add_subcommand("iso-check", "Randomized matrix-isomorphism check");
  iso_cmd->add_option("--trials", trials)->check(CLI::PositiveNumber)->capture_default_str();

  for (CLI::App* sub : app.get_subcommands({})) sub->fallthrough();

  std::vector<std::string> rev(args.rbegin(), args.rend());
  try {
    app.parse(rev);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  o.tol_given = tol_opt->count() > 0;

  try {
    if (*eval_cmd) return cmd_eval(o, expr_src, out);
    if (*classify_cmd) return cmd_classify(o, cx, cy, out);
    if (*integrate_cmd) return cmd_integrate(o, contour_path, fname, l0, out);
    if (*grid_cmd) return cmd_analyze_grid(o, grid_path, sense, out);
    if (*decompose_cmd) return cmd_decompose(o, signal_path, csv_kind, out);
    if (*compare_cmd) return cmd_compare(o, px, py, out);
    if (*plot_cmd) return cmd_plot_data(o, plot_kind, levels, samples, extent, out);
    if (*iso_cmd) return cmd_iso_check(o, trials, out);
  } catch (const SyntaxError& e) {
    err << "error: " << e.what() << "\n";
    report_syntax(err, *eval_cmd ? expr_src : fname, e.position());
    return kExitUsage;
  } catch (const EvalError& e) {
    err << "error: " << e.what() << "\n";
    if (*eval_cmd) report_syntax(err, expr_src, e.position());
    return exit_code_for(e.code());
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return exit_code_for(e.code());
  }
  return kExitUsage;
}

}  // namespace shiftalg
