#include "numsg/cli.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <optional>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>

#include "numsg/asymptotics.hpp"
#include "numsg/relations.hpp"
#include "numsg/report.hpp"
#include "numsg/semigroup.hpp"

namespace numsg::cli {

namespace {

struct Common {
  std::string out_path;
  std::string format = "json";
  unsigned threads = 0;
  bool no_timestamp = false;
};

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

void add_common(CLI::App* sub, Common& c) {
  sub->add_option("--out", c.out_path, "Write the record to this file instead of stdout");
  sub->add_option("--format", c.format, "Output format")
      ->check(CLI::IsMember({"json", "csv"}))
      ->capture_default_str();
  sub->add_option("--threads", c.threads, "Worker threads (0: all cores)")->capture_default_str();
  sub->add_flag("--no-timestamp", c.no_timestamp, "Omit run-dependent fields for byte-identical output");
}

// Shared between every subcommand so the handlers can stay flat.
struct Args {
  std::vector<u64> gens;
  u64 dmax = 0;
  bool verify = false;
  std::vector<u64> base, u, w, series;
  u64 N = 0, r = 0;
  std::optional<u64> sample, seed;
  unsigned m = 0;
  u64 samples = 0, lo = 2, hi = 1'000'000;
  std::size_t bins = 0;
  std::vector<double> box{0.125, 8.0};
  std::size_t points = 33, refine = 21;
  u64 budget = SweepOptions{}.exhaustive_budget;
};

RunRecord make_record(const std::string& command, const Common& c) {
  RunRecord r;
  r.command = command;
  if (!c.no_timestamp) r.timestamp = utc_timestamp();
  return r;
}

void stamp_elapsed(RunRecord& rec, const Common& c, std::chrono::steady_clock::time_point start) {
  if (c.no_timestamp) return;
  rec.results["elapsed_seconds"] =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
}

std::array<u64, 3> triple(const std::vector<u64>& v, const char* flag) {
  if (v.size() != 3) throw UsageError(std::string(flag) + " needs exactly 3 values");
  return {v[0], v[1], v[2]};
}

std::vector<RunRecord> cmd_analyze(const Args& a, const Common& c) {
  const auto start = std::chrono::steady_clock::now();
  const GeneratorTuple gens(a.gens);
  RunRecord rec = make_record("analyze", c);
  rec.spec = json{{"gens", a.gens}};
  rec.results = profile_json(gens, profile(gens));
  stamp_elapsed(rec, c, start);
  return {rec};
}

std::vector<RunRecord> cmd_relations(const Args& a, const Common& c) {
  const auto start = std::chrono::steady_clock::now();
  const GeneratorTuple gens(a.gens);
  require_numerical(gens);
  const UWPair uw = uw_decomposition(gens);
  const RelationMatrix mat = minimal_relation_matrix(gens);
  const ClosedFormTerms t = closed_form_terms(uw);
  const SemigroupProfile prof = profile(gens);
  const Rational Q = q_closed_form_exact(uw);
  const RhoVector rho = RhoVector::from_uw(uw);

  RunRecord rec = make_record("relations", c);
  rec.spec = json{{"gens", a.gens}};
  rec.results = json{{"matrix", mat.a},
                     {"uw", uw_json(uw)},
                     {"conductor", conductor_closed_form(uw)},
                     {"genus", genus_closed_form(uw)},
                     {"twice_genus", t.twice_genus},
                     {"min_a3b3", t.min_a3b3},
                     {"max_a3b3", t.max_a3b3},
                     {"K", k_closed_form(uw)},
                     {"Q", json{{"num", Q.num}, {"den", Q.den}, {"value", Q.to_double()}}},
                     {"P", p_from_q(Q.to_double())},
                     {"rho", rho.rho},
                     {"L", l_function(rho)},
                     {"lower_bound", conductor_lower_bound(gens, false)},
                     {"brute_conductor", prof.conductor},
                     {"brute_genus", prof.genus}};
  stamp_elapsed(rec, c, start);
  return {rec};
}

std::vector<RunRecord> cmd_scan(const Args& a, const Common& c) {
  const auto start = std::chrono::steady_clock::now();
  const ScanSummary s = scan_triples(a.dmax);
  RunRecord rec = make_record("scan", c);
  rec.spec = json{{"dmax", a.dmax}, {"verify", a.verify}};
  rec.results = scan_json(s);
  stamp_elapsed(rec, c, start);
  if (a.verify && s.failures() != 0) {
    throw Error(ErrorKind::InconsistentMatrix,
                std::to_string(s.failures()) + " identity failures, first " + *s.first_failure);
  }
  return {rec};
}

std::optional<Sampling> sampling(const Args& a) {
  if (!a.sample) return std::nullopt;
  return Sampling{*a.sample, *a.seed};
}

std::vector<RunRecord> cmd_sweep_d(const Args& a, const Common& c) {
  std::vector<u64> ns = a.series;
  if (ns.empty()) {
    if (a.N == 0) throw UsageError("sweep-d needs --N or --series");
    ns.push_back(a.N);
  }
  std::vector<NeighborhoodSpec> specs;
  for (u64 n : ns) {
    specs.push_back(NeighborhoodSpec::d_lattice(a.base, n, a.r, sampling(a)));
    validate(specs.back());
  }
  std::vector<RunRecord> out;
  for (const NeighborhoodSpec& spec : specs) {
    const EstimatorReport rep = d_lattice_sweep(spec, {c.threads});
    RunRecord rec = make_record("sweep-d", c);
    rec.spec = spec_json(spec);
    rec.results = estimator_json(rep);
    if (!c.no_timestamp) rec.results["elapsed_seconds"] = rep.elapsed_seconds;
    rec.seed = a.seed;
    out.push_back(std::move(rec));
  }
  return out;
}

std::vector<RunRecord> cmd_sweep_uw(const Args& a, const Common& c) {
  UWPair base;
  base.u = triple(a.u, "--u");
  base.w = triple(a.w, "--w");
  validate_uw(base);
  const NeighborhoodSpec spec = NeighborhoodSpec::uw_lattice(base, a.N, a.r, sampling(a));
  validate(spec);
  const EstimatorReport rep = uw_sweep(spec, {c.threads, a.budget});
  RunRecord rec = make_record("sweep-uw", c);
  rec.spec = spec_json(spec);
  rec.results = estimator_json(rep);
  if (!c.no_timestamp) rec.results["elapsed_seconds"] = rep.elapsed_seconds;
  rec.seed = a.seed;
  return {rec};
}

std::vector<RunRecord> cmd_density(const Args& a, const Common& c) {
  const auto start = std::chrono::steady_clock::now();
  const DensityReport rep = coprime_density(a.m, a.samples, *a.seed, a.lo, a.hi, c.threads);
  RunRecord rec = make_record("density", c);
  rec.spec = json{{"m", a.m}, {"samples", a.samples}, {"lo", a.lo}, {"hi", a.hi}};
  rec.results = density_json(rep);
  rec.seed = a.seed;
  stamp_elapsed(rec, c, start);
  return {rec};
}

std::vector<RunRecord> cmd_fill(const Args& a, const Common& c) {
  const auto start = std::chrono::steady_clock::now();
  const GeneratorTuple gens(a.gens);
  RunRecord rec = make_record("fill", c);
  rec.spec = json{{"gens", a.gens}, {"bins", a.bins}};
  rec.results = fill_json(fill_density(gens, a.bins));
  stamp_elapsed(rec, c, start);
  return {rec};
}

std::vector<RunRecord> cmd_l_minimum(const Args& a, const Common& c) {
  const auto start = std::chrono::steady_clock::now();
  if (a.box.size() != 2) throw UsageError("--box needs lo,hi");
  LGridSpec spec{a.box[0], a.box[1], a.points, a.refine, c.threads};
  RunRecord rec = make_record("appendix-min", c);
  rec.spec = json{{"lo", spec.lo}, {"hi", spec.hi}, {"points", spec.points}, {"refine_points", spec.refine_points}};
  rec.results = l_minimum_json(minimize_l(spec));
  stamp_elapsed(rec, c, start);
  return {rec};
}

std::string render(const std::vector<RunRecord>& records, const Common& c, const std::string& command) {
  std::ostringstream s;
  if (c.format == "csv") {
    write_csv(records, s, command);
  } else {
    write_json(records, s);
  }
  return s.str();
}

// Plain-text digest printed when the record itself goes to a file.
void summarize(const std::vector<RunRecord>& records, std::ostream& out) {
  for (const RunRecord& r : records) {
    out << r.command << ' ' << r.spec.dump() << '\n';
    for (const auto& [key, v] : r.results.items()) {
      if (v.is_array() && v.size() > 8) continue;
      if (v.is_object() && v.contains("num")) {
        out << "  " << key << " = " << v["num"] << '/' << v["den"] << '\n';
      } else {
        out << "  " << key << " = " << v.dump() << '\n';
      }
    }
  }
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Numerical semigroups of small embedding dimension: invariants, closed forms, lattice averages",
               "numsg"};
  app.require_subcommand(1, 1);
  Common common;
  Args a;

  auto* analyze = app.add_subcommand("analyze", "Full profile of S(d1, d2[, d3])");
  analyze->add_option("gens", a.gens, "Generators")->required()->expected(2, 3);

  auto* relations = app.add_subcommand("relations", "Relation matrix, (u,w) form and closed forms");
  relations->add_option("gens", a.gens, "Generators")->required()->expected(3);

  auto* scan = app.add_subcommand("scan", "Check every identity on all minimal coprime triples");
  scan->add_option("--dmax", a.dmax, "Largest generator")->required()->check(CLI::Range(u64{5}, u64{2000}));
  scan->add_flag("--verify", a.verify, "Exit 1 if any identity fails");

  auto* sweep_d = app.add_subcommand("sweep-d", "Estimators over a d-lattice neighbourhood");
  sweep_d->add_option("--base", a.base, "Base generators d1,d2[,d3]")->required()->delimiter(',')->expected(2, 3);
  sweep_d->add_option("--N", a.N, "Scale")->check(CLI::PositiveNumber);
  sweep_d->add_option("--r", a.r, "Radius")->required()->check(CLI::PositiveNumber);
  sweep_d->add_option("--series", a.series, "Several scales N1,N2,...")->delimiter(',');

  auto* sweep_uw = app.add_subcommand("sweep-uw", "Closed-form averages over the (u,w) lattice");
  sweep_uw->add_option("--u", a.u, "u1,u2,u3")->required()->delimiter(',');
  sweep_uw->add_option("--w", a.w, "w1,w2,w3")->required()->delimiter(',');
  sweep_uw->add_option("--N", a.N, "Scale")->required()->check(CLI::PositiveNumber);
  sweep_uw->add_option("--r", a.r, "Radius")->required()->check(CLI::PositiveNumber);
  sweep_uw->add_option("--budget", a.budget, "Largest exhaustive sweep")->capture_default_str();

  for (CLI::App* sub : {sweep_d, sweep_uw}) {
    auto* s = sub->add_option("--sample", a.sample, "Sample this many points")->check(CLI::PositiveNumber);
    auto* seed = sub->add_option("--seed", a.seed, "Seed for sampled mode");
    s->needs(seed);
    seed->needs(s);
  }

  auto* density = app.add_subcommand("density", "Coprime fraction of random m-tuples");
  density->add_option("--m", a.m, "Tuple size")->required()->check(CLI::IsMember({2u, 3u, 4u}));
  density->add_option("--samples", a.samples, "Sample count")
      ->required()
      ->check(CLI::Range(u64{10'000}, u64{1'000'000'000}));
  density->add_option("--seed", a.seed, "Seed")->required();
  density->add_option("--lo", a.lo, "Smallest coordinate")->capture_default_str()->check(CLI::PositiveNumber);
  density->add_option("--hi", a.hi, "Largest coordinate")->capture_default_str();

  auto* fill = app.add_subcommand("fill", "Fill-density histogram of S on [0, C-1]");
  fill->add_option("--gens", a.gens, "d1,d2,d3")->required()->delimiter(',');
  fill->add_option("--bins", a.bins, "Bin count")->required()->check(CLI::PositiveNumber);

  auto* lmin = app.add_subcommand("appendix-min", "Grid minimum of L(rho)");
  lmin->add_option("--box", a.box, "lo,hi")->delimiter(',')->expected(2);
  lmin->add_option("--points", a.points, "Grid points per axis")->capture_default_str();
  lmin->add_option("--refine", a.refine, "Refinement points per axis")->capture_default_str();

  for (CLI::App* sub : app.get_subcommands({})) add_common(sub, common);

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) {
      out << app.help();
      return kOk;
    }
    err << "usage error: " << e.what() << '\n';
    return kUsageError;
  }

  CLI::App* sub = app.get_subcommands().front();
  const std::string command = sub->get_name();
  try {
    std::vector<RunRecord> records;
    if (sub == analyze) records = cmd_analyze(a, common);
    else if (sub == relations) records = cmd_relations(a, common);
    else if (sub == scan) records = cmd_scan(a, common);
    else if (sub == sweep_d) records = cmd_sweep_d(a, common);
    else if (sub == sweep_uw) records = cmd_sweep_uw(a, common);
    else if (sub == density) records = cmd_density(a, common);
    else if (sub == fill) records = cmd_fill(a, common);
    else records = cmd_l_minimum(a, common);

    const std::string text = render(records, common, command);
    if (common.out_path.empty()) {
      out << text;
    } else {
      write_file(common.out_path, text);
      summarize(records, out);
    }
    return kOk;
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << '\n';
    return kUsageError;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kDomainError;
  }
}

}  // namespace numsg::cli
