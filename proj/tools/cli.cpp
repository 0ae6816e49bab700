#include "cli.hpp"

#include <charconv>
#include <cstdlib>
#include <optional>
#include <sstream>
#include <stdexcept>

#include <CLI11.hpp>

#include "report.hpp"

namespace fatpoints::cli {

namespace {

constexpr const char* kSeedEnv = "FATPOINTS_SEED";

/// Raised for malformed input that CLI11 itself cannot detect.
struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

Int parse_int(std::string_view text) {
  Int value = 0;
  const auto* end = text.data() + text.size();
  const auto [ptr, ec] = std::from_chars(text.data(), end, value);
  if (ec != std::errc() || ptr != end || text.empty()) {
    throw UsageError("not an integer: '" + std::string(text) + "'");
  }
  return value;
}

/// "3,3,2" or "2^4,1" (m^k repeats m k times); empty means no points.
std::vector<Int> parse_mults(const std::string& text) {
  std::vector<Int> out;
  if (text.empty()) return out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    const auto caret = item.find('^');
    if (caret == std::string::npos) {
      out.push_back(parse_int(item));
      continue;
    }
    const Int m = parse_int(std::string_view(item).substr(0, caret));
    const Int times = parse_int(std::string_view(item).substr(caret + 1));
    if (times < 0 || times > 64) throw UsageError("bad repetition count in '" + item + "'");
    out.insert(out.end(), static_cast<std::size_t>(times), m);
  }
  if (!text.empty() && text.back() == ',') throw UsageError("trailing comma in '" + text + "'");
  return out;
}

struct Options {
  std::string format = "json";
  std::optional<std::uint64_t> seed;
  int samples = 2;
  int prime_bits = 59;
  bool allow_raw = false;
  bool with_oracle = false;

  std::string degree;
  std::string mults;
  std::string space = "p3";

  Int bound = kDefaultCurveDegreeBound;
  std::size_t points = 0;
  std::size_t quadric_points = 0;
  std::size_t point_index = 0;

  Int dmax = 6;
  Int mmax = 3;
  std::size_t sweep_points = 8;
  std::size_t random = 0;
  Int random_dmax = 12;
  Int random_mmax = 7;
  unsigned jobs = 0;
};

OracleConfig oracle_config(const Options& opt) {
  OracleConfig cfg;
  cfg.samples = opt.samples;
  cfg.prime_bits = opt.prime_bits;
  if (opt.seed) {
    cfg.seed = *opt.seed;
  } else if (const char* env = std::getenv(kSeedEnv); env != nullptr && *env != '\0') {
    const Int v = parse_int(env);
    cfg.seed = static_cast<std::uint64_t>(v);
  }
  cfg.validate();
  return cfg;
}

void check_raw(const Options& opt, Int degree, const std::vector<Int>& mults) {
  if (opt.allow_raw) return;
  if (degree < 0) throw UsageError("negative degree requires --allow-raw");
  for (Int m : mults) {
    if (m < 0) throw UsageError("negative multiplicity requires --allow-raw");
  }
}

void check_count(const std::vector<Int>& mults, std::size_t limit, const char* what) {
  if (mults.size() > limit) {
    throw UsageError(std::string(what) + " accepts at most " + std::to_string(limit) + " points");
  }
}

std::string join(const std::vector<Int>& v, char sep = ',') {
  std::string out;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) out += sep;
    out += std::to_string(v[i]);
  }
  return out;
}

std::string padded_csv(const std::vector<Int>& mults, std::size_t width) {
  std::vector<Int> p = mults;
  p.resize(std::max(width, p.size()), 0);
  return join(p);
}

int emit(const Options& opt, std::ostream& out, const Json& report, const std::string& text,
         const std::string& csv) {
  if (opt.format == "json") {
    out << report.dump(2) << '\n';
  } else if (opt.format == "csv") {
    out << csv;
  } else {
    out << text;
  }
  return kExitOk;
}

// --- dim / trace -------------------------------------------------------------

int run_dim(const Options& opt, const char* command, std::ostream& out) {
  const SystemP3 s{parse_int(opt.degree), parse_mults(opt.mults)};
  check_raw(opt, s.degree, s.mults);
  check_count(s.mults, kMaxPoints, command);

  const DimReport report = full_dim(s);
  Json oracle = nullptr;
  std::optional<OracleResult> oracle_result;
  if (opt.with_oracle) {
    const OracleConfig cfg = oracle_config(opt);
    oracle_result = oracle_p3(s, cfg);
    oracle = oracle_json(*oracle_result, cfg);
  }

  std::ostringstream text;
  text << "system     " << s << '\n'
       << "dim        " << report.dim << '\n'
       << "vdim       " << report.vdim << '\n'
       << "speciality " << report.speciality << (report.special ? " (special)" : "") << '\n'
       << "terminal   " << report.terminal << '\n';
  if (std::string_view(command) == "trace" || !report.trace.empty()) {
    text << "trace:\n";
    for (const auto& step : report.trace) {
      text << "  " << to_string(step.kind) << ' ' << step.before << " -> " << step.after;
      if (step.kind == StepKind::cremona) text << " k=" << step.k;
      if (step.kind == StepKind::declare_empty) text << " (" << step.reason << ')';
      if (!step.points.empty()) {
        text << " points=";
        for (std::size_t i = 0; i < step.points.size(); ++i) text << (i ? "," : "") << step.points[i];
      }
      text << '\n';
    }
  }
  for (const auto& term : report.correction_terms) {
    text << "  correction t_" << term.index << '=' << term.t << " contributes " << term.contribution << '\n';
  }
  if (oracle_result) text << "oracle     " << oracle_result->dim << '\n';

  std::ostringstream csv;
  csv << "d,m1,m2,m3,m4,m5,m6,m7,m8,dim,vdim,speciality,special"
      << (oracle_result ? ",oracle_dim" : "") << '\n'
      << s.degree << ',' << padded_csv(s.mults, kMaxPoints) << ',' << report.dim << ','
      << report.vdim << ',' << report.speciality << ',' << (report.special ? 1 : 0);
  if (oracle_result) csv << ',' << oracle_result->dim;
  csv << '\n';

  return emit(opt, out, dim_report_json(command, s, report, oracle), text.str(), csv.str());
}

// --- oracle ------------------------------------------------------------------

int run_oracle(const Options& opt, std::ostream& out) {
  const OracleConfig cfg = oracle_config(opt);
  const std::vector<Int> mults = parse_mults(opt.mults);
  Json input;
  Json result;
  OracleResult r;
  std::string label;

  if (opt.space == "p3" || opt.space == "p2") {
    const Int degree = parse_int(opt.degree);
    check_raw(opt, degree, mults);
    Int vdim = 0;
    if (opt.space == "p3") {
      check_count(mults, kMaxPoints, "oracle");
      const SystemP3 s{degree, mults};
      r = oracle_p3(s, cfg);
      vdim = vdim_p3(s);
      input = class_json(s);
      label = to_string(s);
    } else {
      check_count(mults, 9, "oracle --space p2");
      const PlaneSystem s{degree, mults};
      r = oracle_p2(s, cfg);
      vdim = vdim_p2(s);
      input = class_json(s);
      label = to_string(s);
    }
    input["space"] = opt.space;
    result = {{"dim", r.dim},
              {"vdim", vdim},
              {"speciality", r.dim > vdim ? r.dim - vdim : 0},
              {"special", r.dim > std::max<Int>(vdim, -1)}};
  } else if (opt.space == "quadric") {
    const auto bideg = parse_mults(opt.degree);
    if (bideg.size() != 2) throw UsageError("quadric bidegree must be given as a,b");
    const QuadricSystem q{bideg[0], bideg[1], mults};
    check_raw(opt, std::min(q.a, q.b), mults);
    check_count(mults, 9, "oracle --space quadric");
    r = oracle_quadric(q, cfg);
    const Int vdim = vdim_quadric(q);
    input = class_json(q);
    input["space"] = "quadric";
    label = to_string(q);
    result = {{"dim", r.dim},
              {"vdim", vdim},
              {"speciality", r.dim > vdim ? r.dim - vdim : 0},
              {"special", r.dim > std::max<Int>(vdim, -1)}};
  } else {
    throw UsageError("unknown space '" + opt.space + "' (expected p3, p2 or quadric)");
  }

  const Json report{{"command", "oracle"},
                    {"input", input},
                    {"result", result},
                    {"trace", Json::array()},
                    {"oracle", oracle_json(r, cfg)}};
  std::ostringstream text;
  text << r.dim << '\n';
  std::ostringstream csv;
  csv << "system,dim,vdim,rank,rows,cols\n"
      << '"' << label << "\"," << r.dim << ',' << result["vdim"].get<Int>() << ',' << r.rank << ','
      << r.rows << ',' << r.cols << '\n';
  return emit(opt, out, report, text.str(), csv.str());
}

// --- verify ------------------------------------------------------------------

int run_verify(const Options& opt, std::ostream& out) {
  const OracleConfig cfg = oracle_config(opt);
  if (opt.sweep_points > kMaxPoints) throw UsageError("verify accepts at most 8 points");
  if (opt.dmax < 0 || opt.mmax < 0 || opt.random_dmax < 0 || opt.random_mmax < 0) {
    throw UsageError("sweep bounds must be non-negative");
  }

  std::vector<SystemP3> systems = canonical_systems(opt.dmax, opt.sweep_points, opt.mmax);
  if (opt.random > 0) {
    const auto extra = random_systems(opt.random, opt.random_dmax, opt.random_mmax,
                                      std::max<std::size_t>(opt.sweep_points, 1), cfg.seed);
    systems.insert(systems.end(), extra.begin(), extra.end());
  }
  std::vector<VerifyRow> rows = cross_validate(systems, cfg, opt.jobs);
  // Canonical output order, independent of scheduling and generation.
  std::stable_sort(rows.begin(), rows.end(), [](const VerifyRow& a, const VerifyRow& b) {
    if (a.system.degree != b.system.degree) return a.system.degree < b.system.degree;
    return a.system.mults < b.system.mults;
  });

  Json mismatches = Json::array();
  std::ostringstream text;
  std::ostringstream csv;
  csv << "d,m1,m2,m3,m4,m5,m6,m7,m8,fast_dim,oracle_dim,match\n";
  for (const auto& row : rows) {
    csv << row.system.degree << ',' << padded_csv(row.system.mults, kMaxPoints) << ',' << row.fast_dim
        << ',' << row.oracle_dim << ',' << (row.match() ? 1 : 0) << '\n';
    if (!row.match()) {
      mismatches.push_back({{"input", class_json(row.system)},
                            {"fast_dim", row.fast_dim},
                            {"oracle_dim", row.oracle_dim}});
      text << "mismatch " << row.system << " fast=" << row.fast_dim << " oracle=" << row.oracle_dim << '\n';
    }
  }
  text << rows.size() << " instances, " << mismatches.size() << " mismatches\n";

  const Json report{{"command", "verify"},
                    {"sweep",
                     {{"dmax", opt.dmax},
                      {"mmax", opt.mmax},
                      {"points", opt.sweep_points},
                      {"random", opt.random},
                      {"random_dmax", opt.random_dmax},
                      {"random_mmax", opt.random_mmax}}},
                    {"instances", rows.size()},
                    {"mismatches", mismatches.size()},
                    {"mismatch_instances", mismatches},
                    {"oracle", {{"samples", cfg.samples}, {"primes", sample_primes(cfg)}, {"seed", cfg.seed}}}};
  emit(opt, out, report, text.str(), csv.str());
  return mismatches.empty() ? kExitOk : kExitComputation;
}

// --- curves ------------------------------------------------------------------

int run_curves(const Options& opt, std::ostream& out) {
  if (opt.bound < 1) throw UsageError("--bound must be at least 1");
  std::ostringstream text;
  std::ostringstream csv;
  Json report;

  if (opt.degree.empty()) {
    if (opt.points < 1 || opt.points > kMaxPoints) throw UsageError("--points must lie in 1..8");
    Json curves = Json::array();
    csv << "degree,mults,arrangements,minus_one\n";
    for (const auto& c : enumerate_minus_one(opt.points, opt.bound)) {
      const std::size_t n = arrangement_count(c);
      curves.push_back({{"degree", c.degree}, {"mults", c.mults}, {"arrangements", n}});
      text << normalize(c) << "  x" << n << '\n';
      csv << c.degree << ",\"" << join(c.mults) << "\"," << n << ",1\n";
    }
    report = {{"command", "curves"},
              {"input", {{"points", opt.points}, {"bound", opt.bound}}},
              {"curves", curves}};
  } else {
    SystemP3 s{parse_int(opt.degree), parse_mults(opt.mults)};
    check_raw(opt, s.degree, s.mults);
    check_count(s.mults, kMaxPoints, "curves");
    s = normalize(s);
    const auto records = negative_curves(s, opt.bound);
    Json list = Json::array();
    csv << "degree,mults,t,contribution\n";
    for (const auto& rec : records) {
      list.push_back({{"curve", class_json(rec.curve)}, {"t", rec.t}, {"contribution", rec.contribution}});
      text << rec.curve << " t=" << rec.t << " contributes " << rec.contribution << '\n';
      csv << rec.curve.degree << ",\"" << join(rec.curve.mults) << "\"," << rec.t << ',' << rec.contribution
          << '\n';
    }
    const Int bound = speciality_lower_bound(s, records);
    text << "speciality lower bound " << bound << '\n';
    report = {{"command", "curves"},
              {"input", class_json(s)},
              {"bound", opt.bound},
              {"negative_curves", list},
              {"speciality_lower_bound", bound}};
  }
  return emit(opt, out, report, text.str(), csv.str());
}

// --- restrict ----------------------------------------------------------------

int run_restrict(const Options& opt, std::ostream& out) {
  SystemP3 s{parse_int(opt.degree), parse_mults(opt.mults)};
  check_raw(opt, s.degree, s.mults);
  check_count(s.mults, kMaxPoints, "restrict");
  s = normalize(s);
  const std::size_t a = opt.quadric_points == 0 ? s.points() : opt.quadric_points;
  const RestrictionResult res = restrict_and_map(s, a, opt.point_index);

  const Int vq = vdim_quadric(res.quadric);
  const Int vp = vdim_p2(res.plane_image);
  Json oracle = nullptr;
  std::ostringstream text;
  text << "system      " << s << '\n'
       << "quadric     " << res.quadric << "  vdim " << vq << '\n'
       << "plane image " << res.plane_image << "  vdim " << vp << '\n';
  std::string csv_oracle;
  if (opt.with_oracle) {
    const OracleConfig cfg = oracle_config(opt);
    const Int dq = oracle_dim_quadric(res.quadric, cfg);
    oracle = {{"dim_quadric", dq}, {"samples", cfg.samples}, {"primes", sample_primes(cfg)}};
    bool nonspecial = false;
    if (s.degree >= s.mult(0) && a >= 4) {
      nonspecial = restricted_nonspecial_check(s, a, cfg);
      oracle["nonspecial"] = nonspecial;
    } else {
      oracle["nonspecial"] = nullptr;
    }
    bool nonneg_image = true;
    for (Int m : res.plane_image.mults) nonneg_image = nonneg_image && m >= 0;
    if (nonneg_image) {
      oracle["dim_plane"] = oracle_dim_p2(res.plane_image, cfg);
    } else {
      oracle["dim_plane"] = nullptr;
    }
    text << "oracle      quadric dim " << dq << '\n';
    csv_oracle = "," + std::to_string(dq);
  }

  const Json report{{"command", "restrict"},
                    {"input", class_json(s)},
                    {"a", a},
                    {"point", res.point_used},
                    {"quadric", class_json(res.quadric)},
                    {"plane_image", class_json(res.plane_image)},
                    {"vdim_quadric", vq},
                    {"vdim_plane", vp},
                    {"oracle", oracle}};
  std::ostringstream csv;
  csv << "a,b,quadric_mults,plane_degree,plane_mults,vdim_quadric,vdim_plane"
      << (opt.with_oracle ? ",oracle_dim_quadric" : "") << '\n'
      << res.quadric.a << ',' << res.quadric.b << ",\"" << join(res.quadric.mults) << "\","
      << res.plane_image.degree << ",\"" << join(res.plane_image.mults) << "\"," << vq << ',' << vp
      << csv_oracle << '\n';
  return emit(opt, out, report, text.str(), csv.str());
}

void add_common(CLI::App* cmd, Options& opt, bool oracle_flags) {
  cmd->add_option("--format", opt.format, "Output format")
      ->check(CLI::IsMember({"json", "csv", "text"}));
  if (oracle_flags) {
    cmd->add_option("--seed", opt.seed, "Oracle seed (default: $FATPOINTS_SEED or 0)");
    cmd->add_option("--samples", opt.samples, "Oracle samples, each over a distinct prime");
    cmd->add_option("--prime-bits", opt.prime_bits, "Bit size of the sample primes (50..62)");
  }
}

void add_system(CLI::App* cmd, Options& opt, bool required) {
  auto* deg = cmd->add_option("degree", opt.degree, "Degree (or a,b for a quadric)");
  if (required) deg->required();
  cmd->add_option("mults", opt.mults, "Comma-separated multiplicities, m^k repeats m k times");
  cmd->add_flag("--allow-raw", opt.allow_raw, "Accept negative degree or multiplicities");
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Dimensions of linear systems of surfaces in P3 through general fat points", "fatpoints"};
  app.require_subcommand(1);
  Options opt;

  auto* dim = app.add_subcommand("dim", "Dimension via Cremona reduction");
  add_system(dim, opt, true);
  add_common(dim, opt, true);
  dim->add_flag("--oracle", opt.with_oracle, "Also run the interpolation oracle");

  auto* trace = app.add_subcommand("trace", "Dimension with the full reduction trace");
  add_system(trace, opt, true);
  add_common(trace, opt, true);
  trace->add_flag("--oracle", opt.with_oracle, "Also run the interpolation oracle");

  auto* oracle = app.add_subcommand("oracle", "Dimension by interpolation rank over prime fields");
  add_system(oracle, opt, true);
  add_common(oracle, opt, true);
  oracle->add_option("--space", opt.space, "Ambient space")->check(CLI::IsMember({"p3", "p2", "quadric"}));

  auto* verify = app.add_subcommand("verify", "Cross-validate the reduction against the oracle");
  add_common(verify, opt, true);
  verify->add_option("--dmax", opt.dmax, "Largest degree of the exhaustive sweep");
  verify->add_option("--mmax", opt.mmax, "Largest multiplicity of the exhaustive sweep");
  verify->add_option("--points", opt.sweep_points, "Largest number of points");
  verify->add_option("--random", opt.random, "Additional seeded random systems");
  verify->add_option("--random-dmax", opt.random_dmax, "Largest degree of random systems");
  verify->add_option("--random-mmax", opt.random_mmax, "Largest multiplicity of random systems");
  verify->add_option("--jobs", opt.jobs, "Worker threads (0 = available parallelism)");

  auto* curves = app.add_subcommand("curves", "(-1)-curve classes, or those meeting a system negatively");
  add_system(curves, opt, false);
  add_common(curves, opt, false);
  curves->add_option("--points", opt.points, "Number of points for the orbit listing");
  curves->add_option("--bound", opt.bound, "Largest curve degree");

  auto* restrict = app.add_subcommand("restrict", "Restriction to a quadric and its plane model");
  add_system(restrict, opt, true);
  add_common(restrict, opt, true);
  restrict->add_option("--a", opt.quadric_points, "Points on the quadric (default: all)");
  restrict->add_option("--point", opt.point_index, "Distinguished point of the plane model (0-based)");
  restrict->add_flag("--oracle", opt.with_oracle, "Certify with the oracle");

  std::vector<std::string> argv_storage{"fatpoints"};
  argv_storage.insert(argv_storage.end(), args.begin(), args.end());
  std::vector<const char*> argv;
  for (const auto& a : argv_storage) argv.push_back(a.c_str());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (*dim) return run_dim(opt, "dim", out);
    if (*trace) return run_dim(opt, "trace", out);
    if (*oracle) return run_oracle(opt, out);
    if (*verify) return run_verify(opt, out);
    if (*curves) return run_curves(opt, out);
    if (*restrict) return run_restrict(opt, out);
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const Error& e) {
    if (e.code() == Errc::invalid_config) {
      err << "usage error: " << e.what() << '\n';
      return kExitUsage;
    }
    err << "error: " << e.what() << '\n';
    return kExitComputation;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitComputation;
  }
  return kExitUsage;
}

}  // namespace fatpoints::cli
