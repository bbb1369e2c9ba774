#include "cli.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <optional>
#include <sstream>

#include "CLI11.hpp"
#include "pairfile.hpp"
#include "pauli/constructions.hpp"
#include "pauli/periodic.hpp"
#include "pauli/steppairs.hpp"
#include "pauli/verify.hpp"

namespace pauli::cli {

namespace {

using Action = std::function<int()>;

std::string joined(std::span<const complex> zs) {
  std::string s;
  for (std::size_t i = 0; i < zs.size(); ++i) s += (i ? "," : "") + format_complex(zs[i]);
  return s;
}

std::string bool_text(bool b) { return b ? "true" : "false"; }

Grid symmetric_grid(double ymax, int points) {
  if (!(ymax > 0.0) || points < 1) throw UsageError("--ymax must be positive and --ypoints at least 1");
  return Grid(-ymax, ymax, static_cast<std::size_t>(points));
}

void save_pair(const FunctionPair& p, const std::string& path, std::ostream& out) {
  write_text_file(path, pair_to_json(p));
  out << "wrote " << path << "\n";
}

void save_set(const SetFile& s, const std::string& path, std::ostream& out) {
  write_text_file(path, set_to_json(s));
  out << "wrote " << path << " (" << (s.kind == SetKind::step ? s.steps.size() : s.signals.size())
      << " members)\n";
}

// Signals of uzd_line(m) on a shared grid.
std::vector<Signal> line_signals(int m, int per_unit, const Grid& yg) {
  if (per_unit < 1) throw UsageError("--per-unit must be at least 1");
  const auto line = uzd_line(m);
  int k = 0;
  for (const auto& s : line) k = std::max(k, s.cutoff());
  const Grid xg = interleave_grid(k, per_unit);
  std::vector<Signal> fs;
  fs.reserve(line.size());
  for (const auto& s : line) fs.push_back(interleave_signal(s, xg, yg));
  return fs;
}

// ---------------------------------------------------------------------------

struct FamilyOpts {
  double p = 0.0, phi = 0.0, psi = 0.0, theta = 0.0;
  std::string out;
};

void family_options(CLI::App* sub, FamilyOpts& o, const char* first) {
  sub->add_option(first, o.p, "Modulus parameter")->required();
  sub->add_option("--phi", o.phi, "Angle phi (radians)")->required();
  sub->add_option("--psi", o.psi, "Angle psi (radians)")->required();
  sub->add_option("--theta", o.theta, "Angle theta (radians)")->required();
  sub->add_option("--out", o.out, "Output pair file")->required();
}

struct MPOpts {
  double a = 1.0, alpha = 1.0, power = 2.0;
  int points = 800;
  std::string out;
};

int construct_mp(const MPOpts& o, std::ostream& out) {
  if (!(o.a > 0.0)) throw UsageError("--a must be positive");
  if (o.points < 4) throw UsageError("--points must be at least 4");
  const SmoothBump rho(Interval{0.0, o.a});
  const double alpha = o.alpha, power = o.power;
  MPParams params{[rho](double x) { return rho(x); },
                  [alpha, power](double x) { return alpha * std::pow(std::abs(x), power); }, o.a,
                  Interval{0.0, o.a}};
  auto pair = mp_pair(params, Grid(-0.25 * o.a, 1.25 * o.a, static_cast<std::size_t>(o.points)));
  pair.provenance().parameters["alpha"] = o.alpha;
  pair.provenance().parameters["power"] = o.power;
  pair.provenance().parameters["points"] = static_cast<double>(o.points);
  save_pair(pair, o.out, out);
  return kOk;
}

struct IsmagilovOpts {
  double alpha = 1.0, shift = 0.0, shift2 = 0.5, window_lo = 0.0, window_hi = 1.0;
  int cutoff = 64;
  double xmax = 40.0;
  int xpoints = 4001;
  double ymax = 50.0;
  int ypoints = 4001;
  std::string out;
};

int construct_ismagilov(const IsmagilovOpts& o, std::ostream& out) {
  if (!(o.window_hi > o.window_lo)) throw UsageError("--window-hi must exceed --window-lo");
  if (!(o.xmax > 0.0) || o.xpoints < 1) throw UsageError("--xmax must be positive and --xpoints at least 1");
  const Grid yg = symmetric_grid(o.ymax, o.ypoints);
  const double alpha = o.alpha;
  const IsmagilovFamily fam([alpha](double t) { return std::polar(1.0, alpha * std::cos(t)); },
                            SmoothBump(Interval{o.window_lo, o.window_hi}), o.cutoff, 160.0,
                            std::max(64.0, o.ymax));
  const Grid xg(-o.xmax, o.xmax, static_cast<std::size_t>(o.xpoints));
  Signal f{fam.sample(o.shift, xg), fam.fourier_quadrature(o.shift, yg)};
  Signal g{fam.sample(o.shift2, xg), fam.fourier_quadrature(o.shift2, yg)};
  Provenance prov{"ismagilov",
                  {{"alpha", o.alpha},
                   {"shift", o.shift},
                   {"shift2", o.shift2},
                   {"window_lo", o.window_lo},
                   {"window_hi", o.window_hi},
                   {"cutoff", static_cast<double>(o.cutoff)}}};
  save_pair(FunctionPair(std::move(f), std::move(g), std::move(prov)), o.out, out);
  return kOk;
}

struct LineOpts {
  int m = 3;
  int per_unit = 16;
  double ymax = 50.0;
  int ypoints = 4001;
  std::string w, v, state, out;
};

int construct_interleave(const LineOpts& o, std::ostream& out) {
  const auto w = parse_complex_list(o.w);
  const auto v = parse_complex_list(o.v);
  if (w.size() != static_cast<std::size_t>(o.m) || v.size() != w.size())
    throw UsageError("--w and --v need exactly m = " + std::to_string(o.m) + " entries");
  const auto fs = line_signals(o.m, o.per_unit, symmetric_grid(o.ymax, o.ypoints));
  const std::vector<double> c(fs.size(), 1.0);
  Provenance prov{"interleave",
                  {{"m", static_cast<double>(o.m)},
                   {"per_unit", static_cast<double>(o.per_unit)},
                   {"w", joined(w)},
                   {"v", joined(v)}}};
  save_pair(FunctionPair(pauli_combine(fs, c, w), pauli_combine(fs, c, v), std::move(prov)), o.out, out);
  return kOk;
}

int construct_uzd(const LineOpts& o, std::ostream& out) {
  const Grid yg = symmetric_grid(o.ymax, o.ypoints);
  if (!o.state.empty()) {
    const auto coeffs = parse_complex_list(o.state);
    if (static_cast<int>(2 * coeffs.size()) != o.m)
      throw UsageError("--state needs m / 2 coefficients");
    auto fs = line_signals(o.m, o.per_unit, yg);
    for (auto& s : fs) s = normalized(s);
    auto pair = pauli_state_pair(fs, coeffs);
    pair.provenance().parameters["per_unit"] = static_cast<double>(o.per_unit);
    pair.provenance().parameters["state"] = joined(coeffs);
    save_pair(pair, o.out, out);
    return kOk;
  }
  SetFile set;
  set.kind = SetKind::uzd;
  set.provenance = {"uzd", {{"m", static_cast<double>(o.m)}, {"per_unit", static_cast<double>(o.per_unit)}}};
  set.signals = line_signals(o.m, o.per_unit, yg);
  save_set(set, o.out, out);
  return kOk;
}

struct PeriodicOpts {
  int n = 2;
  int points = 4096;
  int kmax = 0;
  std::string out;
};

int construct_periodic(const PeriodicOpts& o, std::ostream& out) {
  if (o.points < 1) throw UsageError("--points must be at least 1");
  const auto members = uzd_periodic(o.n);
  const int kmax = o.kmax > 0 ? o.kmax : std::max(64, 1 << o.n);
  const Grid xg(0.0, kTwoPi, static_cast<std::size_t>(o.points));
  SetFile set;
  set.kind = SetKind::uzd;
  set.provenance = {"periodic-uzd", {{"n", static_cast<double>(o.n)}, {"kmax", static_cast<double>(kmax)}}};
  for (const auto& pm : members) set.signals.push_back(periodic_signal(pm, xg, kmax));
  save_set(set, o.out, out);
  return kOk;
}

// ---------------------------------------------------------------------------

struct VerifyOpts {
  std::string in;
  double ymax = 50.0;
  int ypoints = 4001;
  double tol_freq = 1e-6;
  double tol_space = 1e-10;
};

int verify(const VerifyOpts& o, std::ostream& out) {
  const Grid yg = symmetric_grid(o.ymax, o.ypoints);
  const auto pair = pair_from_json(read_text_file(o.in));
  const auto r = verify_pair(pair, yg, o.tol_space, o.tol_freq);
  out << to_text(r);
  out << "overall: " << (r.overall() ? "PASS" : "FAIL") << "\n";
  return r.overall() ? kOk : kVerifyFailed;
}

int classify(const std::string& in, double tol, std::ostream& out) {
  const auto pair = pair_from_json(read_text_file(in));
  if (pair.kind() != PairKind::step) throw UsageError("classify needs a step pair");
  const auto c = classify_pair(pair.steps().left, pair.steps().right, tol);
  out << "trivial:" << bool_text(c.trivial) << " mp1:" << bool_text(c.mp1) << " mp2:" << bool_text(c.mp2) << "\n";
  return kOk;
}

struct SolveOpts {
  std::string b;
  int grid = 360;
  double match_tol = 1e-6;
  std::string out;
};

int solve(const SolveOpts& o, std::ostream& out) {
  const StepVector b(parse_complex_list(o.b));
  SolverOptions opt;
  opt.grid = o.grid;
  const auto partners = solve_partners(b, opt);
  out << "b = [" << joined(b.span()) << "]\n";
  out << "partners: " << partners.size() << "\n";
  bool all_matched = true;
  for (const auto& c : partners) {
    out << "c = [" << joined(c.span()) << "]";
    const auto m = match_family(b, c, o.match_tol);
    if (!m) {
      all_matched = false;
      out << " family:none\n";
      continue;
    }
    out << " family:" << to_string(m->family) << " distance:" << format_double(m->distance);
    if (!m->parameters.empty()) {
      out << " parameters:";
      for (std::size_t i = 0; i < m->parameters.size(); ++i) out << (i ? "," : "") << format_double(m->parameters[i]);
    }
    out << "\n";
  }
  if (!o.out.empty()) {
    SetFile set;
    set.kind = SetKind::step;
    set.provenance = {"solve", {{"b", joined(b.span())}, {"grid", static_cast<double>(o.grid)}}};
    set.steps = partners;
    save_set(set, o.out, out);
  }
  return all_matched ? kOk : kVerifyFailed;
}

int check_set(const std::string& in, std::optional<double> tol, std::ostream& out) {
  const auto set = set_from_json(read_text_file(in));
  const auto r = set.kind == SetKind::step ? is_pauli_set(set.steps, tol.value_or(1e-9))
                                           : verify_uzd(set.signals, tol.value_or(1e-8));
  out << to_text(r);
  out << "overall: " << (r.overall() ? "PASS" : "FAIL") << "\n";
  return r.overall() ? kOk : kVerifyFailed;
}

struct SampleOpts {
  std::string in, out;
  int points = 2001;
  double ymax = 50.0;
  int ypoints = 2001;
};

struct Curves {
  std::vector<double> x, f, g, y, fh, gh;
};

std::vector<double> abs_values(const SampledFunction& s) {
  std::vector<double> v(s.size());
  for (std::size_t i = 0; i < s.size(); ++i) v[i] = std::abs(s[i]);
  return v;
}

std::vector<double> spectrum_abs(const Signal& s, const Grid& yg) {
  return abs_values(s.spectrum ? *s.spectrum : fourier_transform(s.space, yg));
}

int sample(const SampleOpts& o, std::ostream& out) {
  if (o.points < 1) throw UsageError("--points must be at least 1");
  const auto pair = pair_from_json(read_text_file(o.in));
  const Grid yg = symmetric_grid(o.ymax, o.ypoints);
  Curves c;
  if (pair.kind() == PairKind::step) {
    const auto& [b, bc] = pair.steps();
    const Grid xg(-1.0, static_cast<double>(b.size()) + 1.0, static_cast<std::size_t>(o.points));
    c.x = xg.points();
    for (double x : c.x) c.f.push_back(std::abs(b.evaluate(x))), c.g.push_back(std::abs(bc.evaluate(x)));
    c.y = yg.points();
    for (double y : c.y) c.fh.push_back(step_fourier_abs(b, y)), c.gh.push_back(step_fourier_abs(bc, y));
  } else {
    const auto& l = pair.left_signal();
    const auto& r = pair.right_signal();
    c.x = l.space.grid().points();
    c.f = abs_values(l.space);
    c.g = abs_values(r.space);
    c.y = l.spectrum ? l.spectrum->grid().points() : yg.points();
    c.fh = spectrum_abs(l, yg);
    c.gh = spectrum_abs(r, yg);
  }
  std::ostringstream csv;
  csv << "x,|f|,|g|,y,|f_hat|,|g_hat|\n";
  const auto cell = [](const std::vector<double>& v, std::size_t i) {
    return i < v.size() ? format_double(v[i]) : std::string();
  };
  const std::size_t rows = std::max(c.x.size(), c.y.size());
  for (std::size_t i = 0; i < rows; ++i)
    csv << cell(c.x, i) << ',' << cell(c.f, i) << ',' << cell(c.g, i) << ',' << cell(c.y, i) << ','
        << cell(c.fh, i) << ',' << cell(c.gh, i) << '\n';
  write_text_file(o.out, csv.str());
  out << "wrote " << o.out << " (" << rows << " rows)\n";
  return kOk;
}

const CLI::App* deepest(const CLI::App* app) {
  for (const auto* sub : app->get_subcommands())
    if (sub->parsed()) return deepest(sub);
  return app;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Construct and verify Pauli pairs and ultimate zero divisor sets.", "pauli"};
  app.require_subcommand(1);
  Action action;

  // construct
  auto* construct = app.add_subcommand("construct", "Build a pair or set and write it to a file");
  construct->require_subcommand(1);

  FamilyOpts sol2_o, sol3_o;
  auto* sol2 = construct->add_subcommand("sol2", "Four-step pair from the (p, phi, psi, theta) family");
  family_options(sol2, sol2_o, "--p");
  sol2->callback([&] {
    action = [&] {
      auto [b, c] = family_sol2({sol2_o.p, sol2_o.phi, sol2_o.psi, sol2_o.theta});
      Provenance prov{"sol2", {{"p", sol2_o.p}, {"phi", sol2_o.phi}, {"psi", sol2_o.psi}, {"theta", sol2_o.theta}}};
      save_pair(FunctionPair(std::move(b), std::move(c), std::move(prov)), sol2_o.out, out);
      return int{kOk};
    };
  });
  auto* sol3 = construct->add_subcommand("sol3", "Four-step pair from the (r, phi, psi, theta) family");
  family_options(sol3, sol3_o, "--r");
  sol3->callback([&] {
    action = [&] {
      auto [b, c] = family_sol3({sol3_o.p, sol3_o.phi, sol3_o.psi, sol3_o.theta});
      Provenance prov{"sol3", {{"r", sol3_o.p}, {"phi", sol3_o.phi}, {"psi", sol3_o.psi}, {"theta", sol3_o.theta}}};
      save_pair(FunctionPair(std::move(b), std::move(c), std::move(prov)), sol3_o.out, out);
      return int{kOk};
    };
  });

  MPOpts mp_o;
  auto* mp = construct->add_subcommand("mp", "Moroz-Perelomov pair: bump on [0,a], phase alpha |x|^power");
  mp->add_option("--a", mp_o.a, "Support length")->capture_default_str();
  mp->add_option("--alpha", mp_o.alpha, "Phase coefficient")->capture_default_str();
  mp->add_option("--power", mp_o.power, "Phase exponent")->capture_default_str();
  mp->add_option("--points", mp_o.points, "Samples over [-a/4, 5a/4]")->capture_default_str();
  mp->add_option("--out", mp_o.out, "Output pair file")->required();
  mp->callback([&] { action = [&] { return construct_mp(mp_o, out); }; });

  IsmagilovOpts is_o;
  auto* ism = construct->add_subcommand("ismagilov", "Two shifts of g^(x) exp(i alpha cos(x - shift))");
  ism->add_option("--alpha", is_o.alpha, "Phase amplitude")->capture_default_str();
  ism->add_option("--shift", is_o.shift, "Shift of the left member")->capture_default_str();
  ism->add_option("--shift2", is_o.shift2, "Shift of the right member")->capture_default_str();
  ism->add_option("--window-lo", is_o.window_lo, "Window start")->capture_default_str();
  ism->add_option("--window-hi", is_o.window_hi, "Window end (length at most 1)")->capture_default_str();
  ism->add_option("--cutoff", is_o.cutoff, "Phase coefficient cutoff")->capture_default_str();
  ism->add_option("--xmax", is_o.xmax, "Space samples over [-xmax, xmax]")->capture_default_str();
  ism->add_option("--xpoints", is_o.xpoints, "Number of space samples")->capture_default_str();
  ism->add_option("--ymax", is_o.ymax, "Transform samples over [-ymax, ymax]")->capture_default_str();
  ism->add_option("--ypoints", is_o.ypoints, "Number of transform samples")->capture_default_str();
  ism->add_option("--out", is_o.out, "Output pair file")->required();
  ism->callback([&] { action = [&] { return construct_ismagilov(is_o, out); }; });

  LineOpts il_o, uz_o;
  const auto line_options = [](CLI::App* sub, LineOpts& o) {
    sub->add_option("--m", o.m, "Number of interleaved members (2..64)")->capture_default_str();
    sub->add_option("--per-unit", o.per_unit, "Space samples per unit length")->capture_default_str();
    sub->add_option("--ymax", o.ymax, "Transform samples over [-ymax, ymax]")->capture_default_str();
    sub->add_option("--ypoints", o.ypoints, "Number of transform samples")->capture_default_str();
    sub->add_option("--out", o.out, "Output file")->required();
  };
  auto* il = construct->add_subcommand("interleave", "Pair sum w_n f_n, sum v_n f_n over a UZD line");
  line_options(il, il_o);
  il->add_option("--w", il_o.w, "Unimodular weights \"re:im,...\" for the left member")->required();
  il->add_option("--v", il_o.v, "Unimodular weights \"re:im,...\" for the right member")->required();
  il->callback([&] { action = [&] { return construct_interleave(il_o, out); }; });
  auto* uz = construct->add_subcommand("uzd", "UZD line as a set, or a Pauli pair from it with --state");
  line_options(uz, uz_o);
  uz->add_option("--state", uz_o.state, "Coefficients \"re:im,...\" (m/2 of them); writes a pair");
  uz->callback([&] { action = [&] { return construct_uzd(uz_o, out); }; });

  PeriodicOpts pe_o;
  auto* pe = construct->add_subcommand("periodic-uzd", "Periodic UZD set of n Rademacher-modulated members");
  pe->add_option("--n", pe_o.n, "Set size (2..8)")->required();
  pe->add_option("--points", pe_o.points, "Samples over [0, 2pi]")->capture_default_str();
  pe->add_option("--kmax", pe_o.kmax, "Largest Fourier coefficient index (default max(64, 2^n))");
  pe->add_option("--out", pe_o.out, "Output set file")->required();
  pe->callback([&] { action = [&] { return construct_periodic(pe_o, out); }; });

  // verify
  VerifyOpts ve_o;
  auto* ve = app.add_subcommand("verify", "Check |f| = |g|, |f^| = |g^| and independence");
  ve->add_option("--in", ve_o.in, "Pair file")->required();
  ve->add_option("--ymax", ve_o.ymax, "Frequency grid over [-ymax, ymax]")->capture_default_str();
  ve->add_option("--ypoints", ve_o.ypoints, "Frequency grid points")->capture_default_str();
  ve->add_option("--tol-freq", ve_o.tol_freq, "Transform modulus tolerance")->capture_default_str();
  ve->add_option("--tol-space", ve_o.tol_space, "Space modulus tolerance")->capture_default_str();
  ve->callback([&] { action = [&] { return verify(ve_o, out); }; });

  // classify
  std::string cl_in;
  double cl_tol = 1e-9;
  auto* cl = app.add_subcommand("classify", "Print trivial/mp1/mp2 flags of a step pair");
  cl->add_option("--in", cl_in, "Pair file")->required();
  cl->add_option("--tol", cl_tol, "Comparison tolerance")->capture_default_str();
  cl->callback([&] { action = [&] { return classify(cl_in, cl_tol, out); }; });

  // solve
  SolveOpts so_o;
  auto* so = app.add_subcommand("solve", "All partners c of a 3- or 4-step vector b with b_1 = 1");
  so->add_option("--b", so_o.b, "Entries \"1,re:im,...\"")->required();
  so->add_option("--grid", so_o.grid, "Phase grid resolution")->capture_default_str();
  so->add_option("--match-tol", so_o.match_tol, "Family membership tolerance")->capture_default_str();
  so->add_option("--out", so_o.out, "Optional step-set file of the partners");
  so->callback([&] { action = [&] { return solve(so_o, out); }; });

  // check-set
  std::string cs_in;
  std::optional<double> cs_tol;
  auto* cs = app.add_subcommand("check-set", "Verify a step Pauli set or a UZD set");
  cs->add_option("--in", cs_in, "Set file")->required();
  cs->add_option("--tol", cs_tol, "Tolerance (default 1e-9 for step sets, 1e-8 for UZD sets)");
  cs->callback([&] { action = [&] { return check_set(cs_in, cs_tol, out); }; });

  // sample
  SampleOpts sa_o;
  auto* sa = app.add_subcommand("sample", "Export |f|, |g|, |f^|, |g^| as CSV");
  sa->add_option("--in", sa_o.in, "Pair file")->required();
  sa->add_option("--out", sa_o.out, "CSV file")->required();
  sa->add_option("--points", sa_o.points, "Space samples for step pairs")->capture_default_str();
  sa->add_option("--ymax", sa_o.ymax, "Frequency range when no spectrum is stored")->capture_default_str();
  sa->add_option("--ypoints", sa_o.ypoints, "Frequency samples when no spectrum is stored")->capture_default_str();
  sa->callback([&] { action = [&] { return sample(sa_o, out); }; });

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << deepest(&app)->help();
    return kOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n\n" << deepest(&app)->help();
    return kUsage;
  }

  try {
    return action();
  } catch (const IoError& e) {
    err << "error: " << e.what() << "\n";
    return kIo;
  } catch (const UsageError& e) {
    err << "error: " << e.what() << "\n\n" << deepest(&app)->help();
    return kUsage;
  } catch (const ContractError& e) {
    err << "error: " << e.what() << "\n\n" << deepest(&app)->help();
    return kUsage;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kVerifyFailed;
  }
}

}  // namespace pauli::cli
