#include "lagsub/cli.hpp"

#include <fstream>
#include <optional>
#include <sstream>

#include <CLI11.hpp>

#include "lagsub/verify.hpp"

namespace lagsub::cli {

const char* const kGrammar =
    "usage:\n"
    "  lagsub strata table|stratum|bounds|exceptions [--g G --n N --t T --gmax G --nmax N] [--json]\n"
    "  lagsub og enumerate|lift|component [--shape even|odd --n N --q Q --c C --e JSON --ref JSON\n"
    "                                      --gram JSON --file PATH --count-only --cap D] [--json]\n"
    "  lagsub og verify|verify parity|bijection|two_to_one|corank|witt|tables|exceptions\n"
    "                   [--n N --q Q --gmax G --nmax N --samples K --seed S --max-dim D --primes P,..] [--json]\n";

namespace {

using json::Json;

// Flag validation failures that must be reported as usage errors.
struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Options {
  std::int64_t g = -1, n = -1, t = -1, gmax = -1, nmax = -1;
  std::int64_t q = 0;
  std::int64_t c = 1;
  std::int64_t cap = -1;
  std::string shape, e, ref, gram, file, suite, primes = "3,5";
  int samples = 200;
  std::uint64_t seed = 1;
  std::int64_t max_dim = 6;
  bool count_only = false;
  bool json = false;
};

enum class Action { None, Table, Stratum, Bounds, Exceptions, Enumerate, Lift, ComponentOf, Verify };

std::int64_t need(std::int64_t value, const char* flag) {
  if (value < 0) throw UsageError(std::string("missing required flag ") + flag);
  return value;
}

strata::CurveParams curve(const Options& o) {
  need(o.g, "--g");
  need(o.n, "--n");
  try {
    return strata::CurveParams::make(o.g, o.n);
  } catch (const Error& ex) {
    throw UsageError(ex.what());
  }
}

std::optional<FieldCtx> field_from_flags(const Options& o) {
  if (o.q == 0) return std::nullopt;
  try {
    return FieldCtx::prime(o.q);
  } catch (const Error& ex) {
    throw UsageError(std::string("--q: ") + ex.what());
  }
}

Json parse_json(const std::string& text, const char* what) {
  try {
    return Json::parse(text);
  } catch (const nlohmann::json::exception& ex) {
    throw UsageError(std::string(what) + ": " + ex.what());
  }
}

// Inline JSON flags win over keys of the --file object.
struct Payload {
  std::optional<Json> gram, e, ref;
};

Payload load_payload(const Options& o) {
  Payload p;
  if (!o.file.empty()) {
    std::ifstream in(o.file);
    if (!in) throw UsageError("--file: cannot open " + o.file);
    std::stringstream buf;
    buf << in.rdbuf();
    const Json j = parse_json(buf.str(), "--file");
    if (!j.is_object()) throw UsageError("--file must hold a JSON object");
    if (j.contains("gram")) p.gram = j["gram"];
    if (j.contains("e")) p.e = j["e"];
    if (j.contains("ref")) p.ref = j["ref"];
  }
  if (!o.gram.empty()) p.gram = parse_json(o.gram, "--gram");
  if (!o.e.empty()) p.e = parse_json(o.e, "--e");
  if (!o.ref.empty()) p.ref = parse_json(o.ref, "--ref");
  return p;
}

// ---- strata ----

std::string row_text(const strata::StratumRow& r) {
  std::ostringstream os;
  os << r.t << '\t' << strata::to_string(r.component) << '\t' << r.dim_max_lagrangians << '\t' << r.stratum_dim << '\t';
  for (std::size_t i = 0; i < r.flags.size(); ++i) os << (i ? "," : "") << r.flags[i];
  return os.str();
}

int do_table(const Options& o, std::ostream& out) {
  const auto p = curve(o);
  const auto rows = strata::mod4_table(p);
  if (o.json) {
    Json arr = Json::array();
    for (const auto& r : rows) arr.push_back(json::encode(r));
    out << arr.dump() << "\n";
    return kOk;
  }
  out << "g=" << p.g << " n=" << p.n << " N=" << p.threshold() << " (N mod 4 = " << p.threshold() % 4 << ")\n";
  out << "t\tcomponent\tdim_M\tstratum_dim\tflags\n";
  for (const auto& r : rows) out << row_text(r) << "\n";
  return kOk;
}

int do_stratum(const Options& o, std::ostream& out) {
  const auto p = curve(o);
  need(o.t, "--t");
  const auto row = strata::stratum_row(p, o.t);
  if (o.json) {
    out << json::encode(row).dump() << "\n";
    return kOk;
  }
  out << "t\tcomponent\tdim_M\tstratum_dim\tflags\n" << row_text(row) << "\n";
  return kOk;
}

int do_bounds(const Options& o, std::ostream& out) {
  const auto p = curve(o);
  const auto general = strata::general_t_values(p);
  std::optional<Rational> hn;
  if (p.n >= 2) hn = strata::hn_bound(p);
  const auto plus = strata::closure_chain(p, strata::Sign::Plus);
  const auto minus = strata::closure_chain(p, strata::Sign::Minus);
  if (o.json) {
    Json j;
    j["g"] = p.g;
    j["n"] = p.n;
    j["N"] = p.threshold();
    j["moduli_dim"] = strata::moduli_dim(p);
    j["sharp_bound"] = strata::sharp_bound(p);
    j["hn_bound"] = hn ? json::encode(*hn) : Json(nullptr);
    j["hirschowitz_bound"] = strata::hirschowitz_bound(p);
    Json gv = Json::array();
    for (const auto& v : general) gv.push_back({{"t", v.t}, {"component", strata::to_string(v.component)}});
    j["general_t"] = gv;
    j["closure_chain"] = {{"+", plus}, {"-", minus}};
    j["og_tangent_dim"] = og_tangent_dim(p.n);
    out << j.dump() << "\n";
    return kOk;
  }
  auto chain = [](const std::vector<std::int64_t>& c) {
    std::string s;
    for (std::size_t i = 0; i < c.size(); ++i) s += (i ? " < " : "") + std::to_string(c[i]);
    return s.empty() ? std::string("(none)") : s;
  };
  out << "moduli_dim\t" << strata::moduli_dim(p) << "\n"
      << "N\t" << p.threshold() << "\n"
      << "sharp_bound\t" << strata::sharp_bound(p) << "\n"
      << "hn_bound\t" << (hn ? hn->str() : std::string("undefined (n = 1)")) << "\n"
      << "hirschowitz_bound\t" << strata::hirschowitz_bound(p) << "\n"
      << "general_t\t" << general[0].t << strata::to_string(general[0].component) << " " << general[1].t
      << strata::to_string(general[1].component) << "\n"
      << "closure_chain+\t" << chain(plus) << "\n"
      << "closure_chain-\t" << chain(minus) << "\n"
      << "og_tangent_dim\t" << og_tangent_dim(p.n) << "\n";
  return kOk;
}

int do_exceptions(const Options& o, std::ostream& out) {
  const std::int64_t gmax = need(o.gmax, "--gmax");
  const std::int64_t nmax = need(o.nmax, "--nmax");
  if (gmax < 2 || nmax < 1) throw UsageError("--gmax must be >= 2 and --nmax >= 1");
  const auto cases = strata::hirschowitz_exceptions(gmax, nmax);
  if (o.json) {
    Json arr = Json::array();
    for (const auto& c : cases)
      arr.push_back({{"g", c.g}, {"n", c.n}, {"t", c.t}, {"bound", strata::hirschowitz_bound({c.g, c.n})}});
    out << arr.dump() << "\n";
    return kOk;
  }
  out << "g\tn\tt\tbound\n";
  for (const auto& c : cases) out << c.g << '\t' << c.n << '\t' << c.t << '\t' << strata::hirschowitz_bound({c.g, c.n}) << "\n";
  return kOk;
}

// ---- og ----

verify::Limits limits_from(const Options& o) {
  verify::Limits limits;
  if (o.cap >= 0) {
    limits.max_dim = o.cap;
    limits.max_q = std::numeric_limits<std::uint32_t>::max();
  }
  return limits;
}

int do_enumerate(const Options& o, std::ostream& out) {
  if (o.shape.empty()) throw UsageError("missing required flag --shape");
  const std::int64_t n = need(o.n, "--n");
  const auto ctx = field_from_flags(o);
  if (!ctx) throw UsageError("enumeration needs --q");
  const auto limits = limits_from(o);
  if (ctx->p > limits.max_q)
    throw Error(ErrorKind::CapExceeded, "q = " + std::to_string(ctx->p) + " exceeds cap " + std::to_string(limits.max_q));
  const Shape shape = o.shape == "even" ? Shape::Even2n : Shape::Odd2nPlus1;
  const auto ls = enumerate_lagrangians(standard_form<ModP>(*ctx, n, shape), {limits.max_dim});
  if (o.count_only) {
    if (o.json)
      out << Json{{"count", ls.size()}}.dump() << "\n";
    else
      out << ls.size() << "\n";
    return kOk;
  }
  Json arr = Json::array();
  for (const auto& l : ls) arr.push_back(json::encode(l));
  out << arr.dump() << "\n";
  return kOk;
}

template <ExactScalar S>
GramSpace<S> space_for(const Options& o, const Payload& payload, const FieldCtx& ctx, Shape shape) {
  if (payload.gram) {
    GramSpace<S> v = json::decode_gram<S>(*payload.gram);
    if (!(v.ctx() == ctx)) throw UsageError("--gram field " + v.ctx().str() + " disagrees with --q");
    return v;
  }
  return standard_form<S>(ctx, need(o.n, "--n"), shape);
}

FieldCtx resolve_field(const Options& o, const Payload& payload) {
  if (const auto ctx = field_from_flags(o)) return *ctx;
  if (payload.gram && payload.gram->is_object() && payload.gram->contains("field"))
    return json::decode_field((*payload.gram)["field"]);
  return FieldCtx::rationals();
}

template <ExactScalar S>
int lift_in(const Options& o, const Payload& payload, const FieldCtx& ctx, std::ostream& out) {
  const GramSpace<S> v = space_for<S>(o, payload, ctx, Shape::Odd2nPlus1);
  if (!payload.e) throw UsageError("missing required flag --e");
  const Subspace<S> e = json::decode_subspace<S>(ctx, *payload.e, v.dim());
  const LiftPair<S> pair = lift_odd_to_even(v, e, make_scalar<S>(ctx, o.c));
  out << json::encode(pair).dump() << "\n";
  return kOk;
}

template <ExactScalar S>
int component_in(const Options& o, const Payload& payload, const FieldCtx& ctx, std::ostream& out) {
  const GramSpace<S> v = space_for<S>(o, payload, ctx, Shape::Even2n);
  if (!payload.e) throw UsageError("missing required flag --e");
  if (!payload.ref) throw UsageError("missing required flag --ref");
  const Subspace<S> f = json::decode_subspace<S>(ctx, *payload.e, v.dim());
  const Subspace<S> ref = json::decode_subspace<S>(ctx, *payload.ref, v.dim());
  const ComponentLabel<S> label = component_of(v, f, ref);
  if (o.json) {
    Json j;
    j["component"] = to_string(label.label);
    j["intersection_dim"] = intersect(f, ref).dim();
    j["reference"] = json::encode(ref);
    out << j.dump() << "\n";
  } else {
    out << to_string(label.label) << "\n";
  }
  return kOk;
}

int do_lift(const Options& o, std::ostream& out) {
  const Payload payload = load_payload(o);
  const FieldCtx ctx = resolve_field(o, payload);
  return ctx.is_prime_field() ? lift_in<ModP>(o, payload, ctx, out) : lift_in<Rational>(o, payload, ctx, out);
}

int do_component(const Options& o, std::ostream& out) {
  const Payload payload = load_payload(o);
  const FieldCtx ctx = resolve_field(o, payload);
  return ctx.is_prime_field() ? component_in<ModP>(o, payload, ctx, out) : component_in<Rational>(o, payload, ctx, out);
}

std::vector<std::uint32_t> parse_primes(const std::string& text) {
  std::vector<std::uint32_t> primes;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      std::size_t used = 0;
      const long long v = std::stoll(item, &used);
      if (used != item.size()) throw std::invalid_argument(item);
      primes.push_back(FieldCtx::prime(v).p);
    } catch (const std::exception&) {
      throw UsageError("--primes: '" + item + "' is not an odd prime");
    }
  }
  if (primes.empty()) throw UsageError("--primes is empty");
  return primes;
}

int do_verify(const Options& o, std::ostream& out) {
  const auto limits = limits_from(o);
  auto nq = [&]() -> std::pair<Index, std::uint32_t> {
    const std::int64_t n = need(o.n, "--n");
    if (n < 1) throw UsageError("--n must be >= 1");
    const auto ctx = field_from_flags(o);
    if (!ctx) throw UsageError("verify " + o.suite + " needs --q");
    return {n, ctx->p};
  };
  verify::Report report;
  if (o.suite == "parity") {
    const auto [n, q] = nq();
    report = verify::parity(n, q, limits);
  } else if (o.suite == "bijection") {
    const auto [n, q] = nq();
    report = verify::bijection(n, q, limits);
  } else if (o.suite == "two_to_one") {
    const auto [n, q] = nq();
    report = verify::two_to_one(n, q, limits);
  } else if (o.suite == "corank") {
    const auto [n, q] = nq();
    report = verify::corank(n, q, limits);
  } else if (o.suite == "witt") {
    if (o.samples < 1) throw UsageError("--samples must be positive");
    if (o.max_dim < 1 || o.max_dim > 6) throw UsageError("--max-dim must be in 1..6");
    report = verify::witt(o.samples, o.seed, o.max_dim, parse_primes(o.primes));
  } else if (o.suite == "tables") {
    const std::int64_t gmax = o.gmax < 0 ? 50 : o.gmax;
    const std::int64_t nmax = o.nmax < 0 ? 50 : o.nmax;
    if (gmax < 2 || nmax < 1) throw UsageError("--gmax must be >= 2 and --nmax >= 1");
    report = verify::tables(gmax, nmax);
  } else {
    const std::int64_t gmax = o.gmax < 0 ? 10 : o.gmax;
    const std::int64_t nmax = o.nmax < 0 ? 20 : o.nmax;
    if (gmax < 2 || nmax < 1) throw UsageError("--gmax must be >= 2 and --nmax >= 1");
    report = verify::exceptions(gmax, nmax);
  }
  out << (o.json ? report.to_json().dump() + "\n" : report.render());
  return report.passed() ? kOk : kDomainError;
}

void add_json_flag(CLI::App* app, Options& o) { app->add_flag("--json", o.json, "Emit JSON"); }

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Options o;
  Action action = Action::None;

  CLI::App app{"Exact linear algebra of orthogonal Grassmannians and stratum invariants", "lagsub"};
  app.require_subcommand(1);

  auto* strata_cmd = app.add_subcommand("strata", "Dimension formulas, bounds and tables");
  strata_cmd->require_subcommand(1);
  auto add_gn = [&](CLI::App* cmd) {
    cmd->add_option("--g", o.g, "Genus (>= 2)");
    cmd->add_option("--n", o.n, "Rank parameter: bundles of rank 2n+1");
  };
  auto* table = strata_cmd->add_subcommand("table", "The two general strata rows for (g, n)");
  add_gn(table);
  add_json_flag(table, o);
  table->callback([&] { action = Action::Table; });
  auto* stratum = strata_cmd->add_subcommand("stratum", "One stratum row");
  add_gn(stratum);
  stratum->add_option("--t", o.t, "Even Segre invariant");
  add_json_flag(stratum, o);
  stratum->callback([&] { action = Action::Stratum; });
  auto* bounds = strata_cmd->add_subcommand("bounds", "Bounds, general values and closure chains");
  add_gn(bounds);
  add_json_flag(bounds, o);
  bounds->callback([&] { action = Action::Bounds; });
  auto* exc = strata_cmd->add_subcommand("exceptions", "Scan for Hirschowitz exceptions");
  exc->add_option("--gmax", o.gmax, "Largest genus");
  exc->add_option("--nmax", o.nmax, "Largest n");
  add_json_flag(exc, o);
  exc->callback([&] { action = Action::Exceptions; });

  auto add_verify = [&](CLI::App* cmd) {
    cmd->add_option("suite", o.suite, "Property suite")
        ->required()
        ->check(CLI::IsMember({"parity", "bijection", "two_to_one", "corank", "witt", "tables", "exceptions"}));
    cmd->add_option("--n", o.n, "Half dimension");
    cmd->add_option("--q", o.q, "Odd prime field size");
    cmd->add_option("--gmax", o.gmax, "Largest genus (tables, exceptions)");
    cmd->add_option("--nmax", o.nmax, "Largest n (tables, exceptions)");
    cmd->add_option("--samples", o.samples, "Random forms (witt)");
    cmd->add_option("--seed", o.seed, "RNG seed (witt)");
    cmd->add_option("--max-dim", o.max_dim, "Largest dimension (witt)");
    cmd->add_option("--primes", o.primes, "Comma-separated primes (witt)");
    cmd->add_option("--cap", o.cap, "Raise the enumeration dimension cap (also lifts the q <= 7 cap)");
    add_json_flag(cmd, o);
    cmd->callback([&] { action = Action::Verify; });
  };

  auto* og = app.add_subcommand("og", "Orthogonal Grassmannians over exact fields");
  og->require_subcommand(1);
  auto add_space = [&](CLI::App* cmd) {
    cmd->add_option("--n", o.n, "Half dimension");
    cmd->add_option("--q", o.q, "Odd prime field size (omit for Q)");
    cmd->add_option("--gram", o.gram, "Gram space as JSON {\"field\":..,\"gram\":..}");
    cmd->add_option("--file", o.file, "JSON object with optional gram, e, ref");
    add_json_flag(cmd, o);
  };
  auto* enumerate = og->add_subcommand("enumerate", "List the Lagrangians of a standard split form");
  enumerate->add_option("--shape", o.shape, "even (dim 2n) or odd (dim 2n+1)")->check(CLI::IsMember({"even", "odd"}));
  enumerate->add_option("--n", o.n, "Half dimension");
  enumerate->add_option("--q", o.q, "Odd prime field size");
  enumerate->add_flag("--count-only", o.count_only, "Print only the number of Lagrangians");
  enumerate->add_option("--cap", o.cap, "Raise the dimension cap (also lifts the q <= 7 cap)");
  add_json_flag(enumerate, o);
  enumerate->callback([&] { action = Action::Enumerate; });
  auto* lift = og->add_subcommand("lift", "The two Lagrangians of V ⊥ <c> over a Lagrangian E of V");
  add_space(lift);
  lift->add_option("--c", o.c, "Norm of the extension vector");
  lift->add_option("--e", o.e, "Lagrangian E as JSON rows or subspace");
  lift->callback([&] { action = Action::Lift; });
  auto* component = og->add_subcommand("component", "Component of F relative to a reference Lagrangian");
  add_space(component);
  component->add_option("--e", o.e, "Lagrangian F");
  component->add_option("--ref", o.ref, "Reference Lagrangian");
  component->callback([&] { action = Action::ComponentOf; });
  add_verify(og->add_subcommand("verify", "Run a verification suite"));
  add_verify(app.add_subcommand("verify", "Run a verification suite"));

  std::vector<std::string> argv_storage{"lagsub"};
  argv_storage.insert(argv_storage.end(), args.begin(), args.end());
  std::vector<const char*> argv;
  for (const auto& a : argv_storage) argv.push_back(a.c_str());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::ParseError& ex) {
    err << "error: " << ex.what() << "\n" << kGrammar;
    return kUsageError;
  }

  try {
    switch (action) {
      case Action::Table: return do_table(o, out);
      case Action::Stratum: return do_stratum(o, out);
      case Action::Bounds: return do_bounds(o, out);
      case Action::Exceptions: return do_exceptions(o, out);
      case Action::Enumerate: return do_enumerate(o, out);
      case Action::Lift: return do_lift(o, out);
      case Action::ComponentOf: return do_component(o, out);
      case Action::Verify: return do_verify(o, out);
      case Action::None: break;
    }
    err << "error: no command\n" << kGrammar;
    return kUsageError;
  } catch (const UsageError& ex) {
    err << "error: " << ex.what() << "\n" << kGrammar;
    return kUsageError;
  } catch (const Error& ex) {
    if (ex.kind() == ErrorKind::Parse) {
      err << "error: " << ex.what() << "\n" << kGrammar;
      return kUsageError;
    }
    err << "error: " << ex.what() << "\n";
    return kDomainError;
  }
}

}  // namespace lagsub::cli
