// homfour: verification suite, one-off transforms and geometry tables.
//
// Exit codes: 0 success, 1 a verification check failed, 2 usage,
// configuration or input-file error.

#include <chrono>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "homfour/function_io.hpp"
#include "homfour/verify.hpp"

namespace {

using namespace homfour;

constexpr int kExitFail = 1;
constexpr int kExitUsage = 2;

struct VerifyArgs {
  int p = 0, n = 1, r = 0;
  int pmax = 0, qmax = 9, rmax = 3;
  std::vector<std::string> checks;
  std::uint64_t seed = 20240611;
  std::size_t random_count = 100;
  std::string format = "text";
  std::string out;
  long long bound = 0;
  bool timing = false;
};

struct TransformArgs {
  std::string op;
  std::string in, out;
  std::string sign_mode = "default";
  int psi_unit = 1;
  long long bound = 0;
};

struct TableArgs {
  std::string kind;
  int p = 3, n = 1, r = 2;
};

struct BenchArgs {
  int pmax = 7, qmax = 9, rmax = 3;
  long long bound = 0;
};

long long effective_bound(long long flag) { return flag > 0 ? flag : size_bound_from_env(); }

void emit(const std::string& text, const std::string& path) {
  if (path.empty() || path == "-") {
    std::cout << text;
    return;
  }
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write " + path);
  out << text;
}

int cmd_verify(const VerifyArgs& a, bool p_given, bool pmax_given) {
  if (p_given && pmax_given) throw ConfigError("--p and --pmax are mutually exclusive");
  GridSpec grid = default_grid();
  if (p_given) grid.fields = {{a.p, a.n}};
  else if (pmax_given) grid.fields = fields_up_to(a.pmax, a.qmax);
  if (a.r > 0) grid.ranks = {static_cast<std::size_t>(a.r)};
  else {
    grid.ranks.clear();
    for (int r = 1; r <= a.rmax; ++r) grid.ranks.push_back(static_cast<std::size_t>(r));
  }
  grid.checks = a.checks;
  grid.seed = a.seed;
  grid.random_count = a.random_count;
  grid.bound = effective_bound(a.bound);

  const Report report = run_suite(grid);
  std::string text;
  if (a.format == "json") text = format_json(report, a.timing);
  else if (a.format == "csv") text = format_csv(report, a.timing);
  else text = format_text(report, a.timing);
  emit(text, a.out);
  return report.all_pass() ? 0 : kExitFail;
}

int cmd_transform(const TransformArgs& a) {
  const FunctionFile in = read_function_file(a.in);
  if (!is_prime(in.p)) throw SchemaError("file declares p = " + std::to_string(in.p) + ", which is not prime");
  if (in.n < 1) throw SchemaError("file declares n < 1");
  FieldPtr field;
  HomSpacePtr hs;
  try {
    field = field_make(in.p, in.n);
    hs = HomSpace::make(field, in.r, effective_bound(a.bound));
  } catch (const std::length_error& e) {
    throw ConfigError(e.what());
  }

  struct OpSpec {
    const char* name;
    const char* in_space;
    const char* out_space;
  };
  static const OpSpec ops[] = {{"four_hom", "hV", "hVdual"},     {"four_hom_dual", "hVdual", "hV"},
                               {"four_deligne", "V", "Vdual"},   {"radon", "PV", "PVdual"},
                               {"radon_dual", "PVdual", "PV"}};
  const OpSpec* op = nullptr;
  for (const auto& o : ops)
    if (a.op == o.name) op = &o;
  if (!op) throw ConfigError("unknown op " + a.op);
  if (in.space != op->in_space)
    throw SchemaError(a.op + " expects a function on " + op->in_space + ", file has " + in.space);

  const TraceFunction t = to_trace_function(*hs, in);
  const SignMode mode = a.sign_mode == "unsigned" ? SignMode::Unsigned : SignMode::Default;
  TraceFunction out;
  const std::string name = a.op;
  if (name == "four_hom") out = four_hom(*hs, t, mode);
  else if (name == "four_hom_dual") out = four_hom_dual(*hs, t, mode);
  else if (name == "four_deligne") out = four_deligne(*hs, t, a.psi_unit);
  else if (name == "radon") out = radon(*hs, t);
  else out = radon_dual(*hs, t);
  emit(dump_function_file(to_function_file(*hs, op->out_space, out)), a.out);
  return 0;
}

std::string point_str(PointView x) {
  std::ostringstream os;
  os << "(";
  for (std::size_t j = 0; j < x.size(); ++j) os << (j ? "," : "") << x[j].value;
  os << ")";
  return os.str();
}

int cmd_table(const TableArgs& a) {
  if (!is_prime(a.p)) throw ConfigError("p = " + std::to_string(a.p) + " is not prime");
  if (a.n < 1 || a.r < 1) throw ConfigError("n and r must be at least 1");
  FieldPtr field;
  try {
    field = field_make(a.p, a.n);
  } catch (const std::length_error& e) {
    throw ConfigError(e.what());
  }
  const auto r = static_cast<std::size_t>(a.r);
  std::ostringstream os;
  if (a.kind == "psi" || a.kind == "psi_prime") {
    const TraceFunction t = a.kind == "psi" ? builtin_Psi(field) : builtin_Psi_prime(field);
    os << "closed: " << t.values[0].to_string() << "\n";
    os << "open: " << t.values[1].to_string() << "\n";
  } else if (a.kind == "pv" || a.kind == "pvdual") {
    const auto pts = projective_points(*field, r);
    for (std::size_t i = 0; i < pts.size(); ++i) os << i << " " << point_str(pts[i]) << "\n";
  } else if (a.kind == "incidence") {
    const auto pts = projective_points(*field, r);
    const auto pairs = incidence(*field, r);
    for (const auto& [w, v] : pairs) os << "w" << w << " " << point_str(pts[w]) << "  v" << v << " " << point_str(pts[v]) << "\n";
    os << "# " << pairs.size() << " incident pairs\n";
  } else if (a.kind == "classes") {
    auto v = build_V(field, r, "V", size_bound_from_env());
    os << "class rep size stabilizer\n";
    for (std::size_t c = 0; c < v->orbits().size(); ++c) {
      const auto& o = v->orbits()[c];
      os << c << " " << point_str(v->point(o.rep)) << " " << o.size << " " << o.stabilizer << "\n";
    }
  } else {
    throw ConfigError("unknown table " + a.kind);
  }
  std::cout << os.str();
  return 0;
}

int cmd_bench(const BenchArgs& a) {
  const long long bound = effective_bound(a.bound);
  std::cout << "q  r  classes  four_hom_ms  definitional_ms  deligne_ms\n";
  for (const auto& [p, n] : fields_up_to(a.pmax, a.qmax)) {
    auto field = field_make(p, n);
    for (int r = 1; r <= a.rmax; ++r) {
      long long size = 1;
      for (int i = 0; i < r; ++i) size *= field->q();
      if (size > bound) continue;
      auto hs = HomSpace::make(field, static_cast<std::size_t>(r), bound);
      const TraceFunction t = random_function(hs->V(), stream_seed(1, "bench", {p, n, static_cast<std::size_t>(r)}, 0));
      auto time_ms = [](auto&& fn) {
        const auto s = std::chrono::steady_clock::now();
        fn();
        return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - s).count();
      };
      const double fh = time_ms([&] { (void)four_hom(*hs, t); });
      const double def = time_ms([&] { (void)four_hom_definitional(hs, t); });
      const TraceFunction l = rho_pullback(*hs, t);
      const double del = time_ms([&] { (void)four_deligne(*hs, l); });
      std::cout << field->q() << "  " << r << "  " << hs->V()->orbits().size() << "  " << fh << "  " << def << "  "
                << del << "\n";
    }
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact trace-function engine for the homogeneous Fourier transform over finite fields"};
  app.require_subcommand(1);

  VerifyArgs va;
  auto* verify = app.add_subcommand("verify", "Run the identity checks over a parameter grid");
  auto* p_opt = verify->add_option("--p", va.p, "Characteristic (single field)");
  verify->add_option("--n", va.n, "Extension degree for --p")->check(CLI::PositiveNumber);
  verify->add_option("--r", va.r, "Single rank")->check(CLI::PositiveNumber);
  auto* pmax_opt = verify->add_option("--pmax", va.pmax, "Largest characteristic of the grid");
  verify->add_option("--qmax", va.qmax, "Largest field size of the grid");
  verify->add_option("--rmax", va.rmax, "Largest rank of the grid")->check(CLI::NonNegativeNumber);
  verify->add_option("--checks", va.checks, "Comma-separated check ids")->delimiter(',');
  verify->add_option("--seed", va.seed, "Seed of all random functions");
  verify->add_option("--random-count", va.random_count, "Random functions per check and cell");
  verify->add_option("--format", va.format, "Report format")->check(CLI::IsMember({"text", "json", "csv"}));
  verify->add_option("--out", va.out, "Report path (default stdout)");
  verify->add_option("--bound", va.bound, "Bound on q^r (default HOMFOUR_SIZE_BOUND or 2048)");
  verify->add_flag("--timing", va.timing, "Include per-check timings (reports are then not reproducible)");

  TransformArgs ta;
  auto* transform = app.add_subcommand("transform", "Apply a transform to a function file");
  transform->add_option("--op", ta.op, "Transform")
      ->required()
      ->check(CLI::IsMember({"four_hom", "four_hom_dual", "four_deligne", "radon", "radon_dual"}));
  transform->add_option("--in", ta.in, "Input function file")->required();
  transform->add_option("--out", ta.out, "Output path (default stdout)");
  transform->add_option("--sign-mode", ta.sign_mode, "Sign convention of four_hom")
      ->check(CLI::IsMember({"default", "unsigned"}));
  transform->add_option("--psi-unit", ta.psi_unit, "Use the character a -> psi(unit * a) in four_deligne");
  transform->add_option("--bound", ta.bound, "Bound on q^r");

  TableArgs tb;
  auto* table = app.add_subcommand("table", "Print kernel tables and finite geometry");
  table->add_option("kind", tb.kind, "psi | psi_prime | pv | pvdual | incidence | classes")
      ->required()
      ->check(CLI::IsMember({"psi", "psi_prime", "pv", "pvdual", "incidence", "classes"}));
  table->add_option("--p", tb.p, "Characteristic");
  table->add_option("--n", tb.n, "Extension degree");
  table->add_option("--r", tb.r, "Rank");

  BenchArgs ba;
  auto* bench = app.add_subcommand("bench", "Time the transforms over a grid");
  bench->add_option("--pmax", ba.pmax, "Largest characteristic");
  bench->add_option("--qmax", ba.qmax, "Largest field size");
  bench->add_option("--rmax", ba.rmax, "Largest rank");
  bench->add_option("--bound", ba.bound, "Bound on q^r");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitUsage;
  }

  try {
    if (*verify) return cmd_verify(va, p_opt->count() > 0, pmax_opt->count() > 0);
    if (*transform) return cmd_transform(ta);
    if (*table) return cmd_table(tb);
    if (*bench) return cmd_bench(ba);
  } catch (const ConfigError& e) {
    std::cerr << "homfour: " << e.what() << "\n";
    return kExitUsage;
  } catch (const SchemaError& e) {
    std::cerr << "homfour: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::invalid_argument& e) {
    std::cerr << "homfour: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "homfour: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}
