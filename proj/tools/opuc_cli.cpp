#include <chrono>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "opuc/verify.hpp"

using json = nlohmann::ordered_json;
using namespace opuc;

namespace {

constexpr int kSchemaVersion = 1;
constexpr int kExitCheckFailed = 1;
constexpr int kExitZeroVerblunsky = 2;
constexpr int kExitCap = 3;
constexpr int kExitUsage = 64;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct RunConfig {
  std::string command;
  std::string mode = "auto";
  std::string family;
  std::string param;
  std::string alphas;
  int n = 0, r = 0, s = 0;
  std::string method = "lukasiewicz";
  std::string model = "lukasiewicz";
  std::string suite = "all";
  int max = 4;
  std::uint64_t seed = 1;
  int samples = 20;
  std::size_t cap = kDefaultEnumerationCap;
  unsigned jobs = 1;
  bool list = false;
  std::string format;
  std::string out;

  json echo() const {
    json j{{"command", command}, {"mode", mode}};
    if (!family.empty()) j["family"] = family;
    if (!param.empty()) j["param"] = param;
    if (!alphas.empty()) j["alphas"] = alphas;
    if (command == "moment" || command == "paths") {
      j["n"] = n;
      j["r"] = r;
      j["s"] = s;
    }
    if (command == "moment") j["method"] = method;
    if (command == "paths") {
      j["model"] = model;
      j["cap"] = cap;
      j["list"] = list;
    }
    if (command == "family") j["n"] = n;
    if (command == "verify") {
      j["suite"] = suite;
      j["max"] = max;
      j["seed"] = seed;
      j["samples"] = samples;
      j["jobs"] = jobs;
    }
    j["format"] = format;
    return j;
  }
};

struct Record {
  int n = 0, r = 0, s = 0;
  std::string method;
  std::string value;
  double elapsed_ms = 0;
  std::string path;  // paths subcommand only
  std::optional<Complex> numeric;
};

struct Report {
  std::vector<Record> results;
  std::vector<Check> checks;
  std::vector<std::string> text;  // human-readable lines for --format text
  json extra = json::object();
};

// Literal parsing ---------------------------------------------------------

struct Source {
  Mode mode = Mode::symbolic;
  std::optional<FamilySpec> family;
  std::vector<GaussianRational> table;
};

Source resolve_source(const RunConfig& c) {
  Source src;
  bool decimal = false;
  if (!c.family.empty() && !c.alphas.empty()) throw UsageError("--family and --alphas are exclusive");
  if (!c.family.empty()) {
    FamilySpec spec;
    spec.family = parse_family(c.family);
    const std::string want = spec.info().param;
    if (c.param.empty()) throw UsageError("family " + c.family + " needs --param " + want + "=VALUE");
    auto eq = c.param.find('=');
    if (eq == std::string::npos) throw UsageError("--param expects key=value");
    if (c.param.substr(0, eq) != want)
      throw UsageError("family " + c.family + " takes parameter '" + want + "', got '" + c.param.substr(0, eq) + "'");
    auto lit = parse_gaussian(c.param.substr(eq + 1));
    decimal = lit.decimal;
    spec.param = lit.value;
    validate(spec);
    src.family = spec;
  } else if (!c.param.empty()) {
    throw UsageError("--param requires --family");
  }
  if (!c.alphas.empty()) {
    std::stringstream ss(c.alphas);
    std::string item;
    while (std::getline(ss, item, ',')) {
      auto lit = parse_gaussian(item);
      decimal = decimal || lit.decimal;
      if (lit.value.norm() >= 1) throw UsageError("alpha table entry '" + item + "' is not inside the unit disk");
      src.table.push_back(lit.value);
    }
  }
  if (c.mode == "symbolic") {
    if (decimal) throw UsageError("decimal literals are not exact; use fractions in symbolic mode or --mode numeric");
    src.mode = Mode::symbolic;
  } else if (c.mode == "numeric") {
    src.mode = Mode::numeric;
  } else {
    src.mode = decimal ? Mode::numeric : Mode::symbolic;
  }
  return src;
}

template <Scalar T>
VerblunskySequence<T> make_sequence(const Source& src) {
  if (src.family) return verblunsky_of<T>(*src.family);
  if (!src.table.empty()) {
    std::vector<T> t;
    for (const auto& v : src.table) t.push_back(scalar_from<T>(v));
    return VerblunskySequence<T>::from_table(std::move(t));
  }
  if constexpr (std::same_as<T, Expr>) {
    return VerblunskySequence<Expr>::generic();
  } else {
    throw UsageError("numeric mode needs --family or --alphas");
  }
}

std::string show(const Expr& x) { return x.str(); }
std::string show(const Complex& x) {
  char buf[96];
  if (x.imag() == 0.0) std::snprintf(buf, sizeof buf, "%.15g", x.real());
  else std::snprintf(buf, sizeof buf, "%.15g%+.15gi", x.real(), x.imag());
  return buf;
}

template <Scalar T>
void attach(Record& rec, const T& v) {
  rec.value = show(v);
  if constexpr (std::same_as<T, Complex>) rec.numeric = v;
}

double ms_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
}

// moment ------------------------------------------------------------------

template <Scalar T>
T evaluate_signed(Method m, const VerblunskySequence<T>& vs, const RunConfig& c, const Source& src) {
  if (c.n >= 0) return evaluate_moment(m, vs, c.n, c.r, c.s, src.family);
  switch (m) {
    case Method::schroder: return moment_negative(vs, -c.n, c.r, c.s);
    case Method::oracle: return moment_oracle(vs, c.n, c.r, c.s);
    default: throw UsageError(std::string("method ") + to_string(m) + " needs n >= 0");
  }
}

template <Scalar T>
Report cmd_moment(const RunConfig& c, const Source& src) {
  if (c.r < 0 || c.s < 0) throw UsageError("-r and -s must be >= 0");
  auto vs = make_sequence<T>(src);
  Report rep;
  const bool all = c.method == "all";
  std::vector<Method> methods;
  if (!all) methods.push_back(parse_method(c.method));
  else if (c.n < 0) methods = {Method::schroder, Method::oracle};
  else methods = applicable_methods(src.family);

  std::vector<T> values;
  for (Method m : methods) {
    Record rec{c.n, c.r, c.s, to_string(m)};
    auto t0 = std::chrono::steady_clock::now();
    if (all && m == Method::schroder) {
      // A zero coefficient makes the Schröder weights undefined; `all` skips it.
      try {
        values.push_back(evaluate_signed(m, vs, c, src));
      } catch (const ZeroVerblunsky& e) {
        rep.text.push_back(std::string(to_string(m)) + ": skipped, " + e.what());
        rep.checks.push_back({"moment", to_string(m), true, std::string("skipped: ") + e.what()});
        continue;
      }
    } else {
      values.push_back(evaluate_signed(m, vs, c, src));
    }
    rec.elapsed_ms = ms_since(t0);
    attach(rec, values.back());
    rep.text.push_back(rec.method + ": " + rec.value);
    rep.results.push_back(std::move(rec));
  }
  if (all) {
    bool agree = true;
    for (const auto& v : values) agree = agree && same_value(v, values.front());
    rep.checks.push_back({"moment", "agreement", agree,
                          std::to_string(values.size()) + " methods " + (agree ? "agree" : "disagree")});
    rep.text.push_back(std::string("agreement: ") + (agree ? "yes" : "NO") + " (" + std::to_string(values.size()) +
                       " methods)");
  }
  return rep;
}

// paths -------------------------------------------------------------------

PathModel parse_model(const std::string& s) {
  for (PathModel m : {PathModel::lukasiewicz, PathModel::gmotzkin, PathModel::schroder})
    if (s == to_string(m)) return m;
  throw UsageError("unknown path model '" + s + "'");
}

template <Scalar T>
Report cmd_paths(const RunConfig& c, const Source& src) {
  if (c.n < 0 || c.r < 0 || c.s < 0) throw UsageError("paths needs n, r, s >= 0");
  const PathModel model = parse_model(c.model);
  auto vs = make_sequence<T>(src);
  Report rep;
  auto t0 = std::chrono::steady_clock::now();
  auto paths = enumerate(model, c.n, c.r, c.s, c.cap);
  T total(0);
  for (const auto& p : paths) {
    Record rec{c.n, c.r, c.s, to_string(model)};
    rec.path = render(p);
    if (!c.list) {
      T w = path_weight(p, vs);
      total += w;
      attach(rec, w);
      rep.text.push_back(rec.path + "\t" + rec.value);
    } else {
      rep.text.push_back(rec.path);
    }
    rep.results.push_back(std::move(rec));
  }
  if (c.list) {
    rep.text.push_back("total " + std::to_string(paths.size()) + " paths");
    rep.extra["count"] = paths.size();
  } else {
    rep.text.push_back("total\t" + show(total) + "\t(" + std::to_string(paths.size()) + " paths)");
    rep.extra["count"] = paths.size();
    rep.extra["total"] = show(total);
  }
  rep.extra["elapsed_ms"] = ms_since(t0);
  return rep;
}

// family ------------------------------------------------------------------

Report cmd_family_list() {
  Report rep;
  json fams = json::array();
  for (const auto& info : family_registry()) {
    fams.push_back({{"name", info.name}, {"param", info.param}, {"closed_forms", info.closed_forms}});
    rep.text.push_back(std::string(info.name) + "  --param " + info.param + "=VALUE" +
                       (info.closed_forms ? "  (closed forms)" : ""));
  }
  rep.extra["families"] = fams;
  return rep;
}

template <Scalar T>
Report cmd_family(const RunConfig& c, const Source& src) {
  if (!src.family) throw UsageError("family needs --family NAME --param KEY=VALUE (or --list)");
  if (c.n < 0) throw UsageError("-n must be >= 0");
  auto vs = make_sequence<T>(src);
  const auto& spec = *src.family;
  Report rep;
  rep.text.push_back(spec.str());
  for (int j = 0; j <= c.n; ++j) {
    Record rec{j, 0, 0, "alpha"};
    attach(rec, vs.alpha(j));
    rep.text.push_back("alpha_" + std::to_string(j) + " = " + rec.value);
    rep.results.push_back(std::move(rec));
  }
  const bool closed = spec.info().closed_forms;
  for (int k = 0; k <= c.n; ++k) {
    Record rec{k, 0, 0, closed ? "closed" : "lukasiewicz"};
    auto t0 = std::chrono::steady_clock::now();
    T v = closed ? closed_moment_nm<T>(spec, k, 0) : moment_lukasiewicz(vs, k, 0, 0);
    rec.elapsed_ms = ms_since(t0);
    attach(rec, v);
    rep.text.push_back("mu_" + std::to_string(k) + " = " + rec.value);
    rep.results.push_back(std::move(rec));
  }
  return rep;
}

// verify ------------------------------------------------------------------

Report cmd_verify(const RunConfig& c) {
  Report rep;
  VerifyOptions o;
  o.mode = c.mode == "numeric" ? Mode::numeric : Mode::symbolic;
  o.max = c.max;
  o.seed = c.seed;
  o.samples = c.samples;
  o.jobs = c.jobs;
  rep.checks = run_suite(c.suite, o);
  std::size_t failed = 0;
  for (const auto& ch : rep.checks) {
    if (!ch.pass) ++failed;
    rep.text.push_back(std::string(ch.pass ? "PASS " : "FAIL ") + ch.suite + " " + ch.name +
                       (ch.detail.empty() ? "" : "  " + ch.detail));
  }
  rep.text.push_back(std::to_string(rep.checks.size() - failed) + "/" + std::to_string(rep.checks.size()) +
                     " checks passed");
  return rep;
}

// output ------------------------------------------------------------------

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char ch : s) out += ch == '"' ? std::string("\"\"") : std::string(1, ch);
  return out + "\"";
}

std::string format_report(const RunConfig& c, const Report& rep) {
  std::ostringstream os;
  if (c.format == "json") {
    json results = json::array();
    for (const auto& r : rep.results) {
      json j{{"n", r.n}, {"r", r.r}, {"s", r.s}, {"method", r.method}};
      if (!r.path.empty()) j["path"] = r.path;
      if (!r.value.empty()) j["value"] = r.value;
      if (r.numeric) {
        j["re"] = r.numeric->real();
        j["im"] = r.numeric->imag();
      }
      j["elapsed_ms"] = r.elapsed_ms;
      j["mode"] = c.mode;
      results.push_back(std::move(j));
    }
    json checks = json::array();
    for (const auto& ch : rep.checks)
      checks.push_back({{"suite", ch.suite}, {"name", ch.name}, {"pass", ch.pass}, {"detail", ch.detail}});
    json doc{{"schema_version", kSchemaVersion}, {"config_echo", c.echo()}, {"results", results}, {"checks", checks}};
    for (const auto& [k, v] : rep.extra.items()) doc[k] = v;
    os << doc.dump(2) << '\n';
  } else if (c.format == "csv") {
    const bool with_path = c.command == "paths";
    os << "n,r,s,method,value,elapsed_ms" << (with_path ? ",path" : "") << '\n';
    for (const auto& r : rep.results) {
      os << r.n << ',' << r.r << ',' << r.s << ',' << csv_field(r.method) << ',' << csv_field(r.value) << ','
         << r.elapsed_ms;
      if (with_path) os << ',' << csv_field(r.path);
      os << '\n';
    }
    for (const auto& ch : rep.checks)
      os << "# " << (ch.pass ? "PASS " : "FAIL ") << ch.suite << ' ' << ch.name << '\n';
  } else {
    for (const auto& line : rep.text) os << line << '\n';
  }
  return os.str();
}

template <Scalar T>
Report dispatch_typed(const RunConfig& c, const Source& src) {
  if (c.command == "moment") return cmd_moment<T>(c, src);
  if (c.command == "paths") return cmd_paths<T>(c, src);
  return cmd_family<T>(c, src);
}

int run(RunConfig c) {
  Report rep;
  if (c.command == "verify") {
    if (c.mode == "auto") c.mode = "symbolic";
    if (c.list) {
      for (const auto& s : suite_names()) rep.text.push_back(s);
      rep.extra["suites"] = suite_names();
    } else {
      rep = cmd_verify(c);
    }
  } else if (c.command == "family" && c.list) {
    rep = cmd_family_list();
  } else {
    Source src = resolve_source(c);
    c.mode = to_string(src.mode);
    rep = src.mode == Mode::symbolic ? dispatch_typed<Expr>(c, src) : dispatch_typed<Complex>(c, src);
  }

  std::string text = format_report(c, rep);
  if (c.out.empty()) {
    std::cout << text;
  } else {
    std::ofstream f(c.out);
    if (!f) throw UsageError("cannot open " + c.out + " for writing");
    f << text;
  }
  for (const auto& ch : rep.checks)
    if (!ch.pass) return kExitCheckFailed;
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Generalized moments of orthogonal polynomials on the unit circle"};
  app.require_subcommand(1);
  RunConfig c;

  auto add_source = [&](CLI::App* sub) {
    sub->add_option("--family", c.family, "named family (see `family --list`)");
    sub->add_option("--param", c.param, "family parameter as key=value");
    sub->add_option("--alphas", c.alphas, "explicit comma-separated Verblunsky table");
    sub->add_option("--mode", c.mode, "symbolic, numeric or auto")
        ->check(CLI::IsMember({"auto", "symbolic", "numeric"}));
  };
  auto add_output = [&](CLI::App* sub) {
    sub->add_option("--format", c.format, "json, csv or text")->check(CLI::IsMember({"json", "csv", "text"}));
    sub->add_option("--out", c.out, "write to FILE instead of stdout");
  };
  auto add_nrs = [&](CLI::App* sub) {
    sub->add_option("-n", c.n, "power of z");
    sub->add_option("-r", c.r, "index of Phi_r");
    sub->add_option("-s", c.s, "index of Phi_s");
  };

  auto* moment = app.add_subcommand("moment", "compute mu_{n,r,s}");
  add_source(moment);
  add_nrs(moment);
  moment->add_option("--method", c.method, "evaluation method or `all`")
      ->check(CLI::IsMember({"lukasiewicz", "gmotzkin", "schroder", "matrix_u", "matrix_cmv", "oracle", "closed",
                             "all"}));

  auto* paths = app.add_subcommand("paths", "enumerate weighted lattice paths");
  add_source(paths);
  add_nrs(paths);
  paths->add_option("--model", c.model, "lukasiewicz, gmotzkin or schroder");
  paths->add_option("--cap", c.cap, "maximum number of paths");
  paths->add_flag("--list", c.list, "print step strings only");

  auto* family = app.add_subcommand("family", "show a family's coefficients and moments");
  add_source(family);
  family->add_option("-n", c.n, "largest index shown");
  family->add_flag("--list", c.list, "list registered families");

  auto* verify = app.add_subcommand("verify", "run invariant suites");
  verify->add_option("--suite", c.suite, "suite name or `all`");
  verify->add_option("--max", c.max, "index bound");
  verify->add_option("--mode", c.mode, "symbolic or numeric")->check(CLI::IsMember({"auto", "symbolic", "numeric"}));
  verify->add_option("--seed", c.seed, "seed for random sequences");
  verify->add_option("--samples", c.samples, "random sequences per numeric suite");
  verify->add_option("--jobs", c.jobs, "worker tasks");
  verify->add_flag("--list", c.list, "list suite names");

  for (auto* sub : {moment, paths, family, verify}) add_output(sub);

  CLI11_PARSE(app, argc, argv);
  for (auto* sub : app.get_subcommands()) {
    c.command = sub->get_name();
    if (c.format.empty()) c.format = c.command == "verify" ? "json" : "text";
  }

  try {
    return run(c);
  } catch (const ZeroVerblunsky& e) {
    std::cerr << "error: " << e.what() << " (alpha_" << e.index() << " = 0)\n";
    return kExitZeroVerblunsky;
  } catch (const CapExceeded& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitCap;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  }
}
