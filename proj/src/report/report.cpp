#include "numsg/report.hpp"

#include <chrono>
#include <ctime>
#include <fstream>
#include <istream>
#include <limits>
#include <ostream>
#include <sstream>

namespace numsg {

namespace {

json opt(const std::optional<double>& v) { return v ? json(*v) : json(nullptr); }

json rational(const Rational& r) {
  return json{{"num", r.num}, {"den", r.den}, {"value", r.to_double()}};
}

std::string cell(const json& v) {
  if (v.is_null()) return "";
  if (v.is_string()) return v.get<std::string>();
  if (v.is_array()) {
    std::string s;
    for (std::size_t i = 0; i < v.size(); ++i) s += (i ? ";" : "") + cell(v[i]);
    return s;
  }
  if (v.is_object() && v.contains("num") && v.contains("den")) {
    return cell(v["num"]) + "/" + cell(v["den"]);
  }
  return v.dump();
}

std::string quote(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string q = "\"";
  for (char c : s) {
    if (c == '"') q += '"';
    q += c;
  }
  return q + '"';
}

json read_pointer(const json& doc, const std::string& pointer) {
  const json::json_pointer p(pointer);
  return doc.contains(p) ? doc.at(p) : json(nullptr);
}

}  // namespace

std::string utc_timestamp() {
  const std::time_t now = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
  std::tm tm{};
  gmtime_r(&now, &tm);
  char buf[32];
  std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
  return buf;
}

json to_json(const RunRecord& record) {
  json doc;
  doc["schema_version"] = record.schema_version;
  if (record.timestamp) doc["timestamp"] = *record.timestamp;
  doc["command"] = record.command;
  doc["spec"] = record.spec;
  doc["results"] = record.results;
  doc["seed"] = record.seed ? json(*record.seed) : json(nullptr);
  doc["software_version"] = record.software_version;
  return doc;
}

RunRecord record_from_json(const json& doc) {
  try {
    RunRecord r;
    r.schema_version = doc.at("schema_version").get<std::string>();
    if (doc.contains("timestamp")) r.timestamp = doc["timestamp"].get<std::string>();
    r.command = doc.at("command").get<std::string>();
    r.spec = doc.at("spec");
    r.results = doc.at("results");
    if (!doc.at("seed").is_null()) r.seed = doc["seed"].get<u64>();
    r.software_version = doc.at("software_version").get<std::string>();
    return r;
  } catch (const json::exception& e) {
    throw Error(ErrorKind::ParseError, std::string("not a run record: ") + e.what());
  }
}

void write_json(std::span<const RunRecord> records, std::ostream& out) {
  if (records.size() == 1) {
    write_json(records[0], out);
    return;
  }
  json arr = json::array();
  for (const RunRecord& r : records) arr.push_back(to_json(r));
  out << arr.dump(2) << '\n';
}

void write_json(const RunRecord& record, std::ostream& out) { out << to_json(record).dump(2) << '\n'; }

std::vector<CsvColumn> csv_columns(std::string_view command) {
  if (command == "analyze") {
    return {{"gens", "/spec/gens"},           {"frobenius", "/results/frobenius"},
            {"conductor", "/results/conductor"}, {"genus", "/results/genus"},
            {"nongaps", "/results/nongaps"},     {"type", "/results/type"},
            {"symmetric", "/results/symmetric"}, {"p", "/results/p"},
            {"q", "/results/q"},                 {"pseudo_frobenius", "/results/pseudo_frobenius"}};
  }
  if (command == "relations") {
    return {{"gens", "/spec/gens"},
            {"u", "/results/uw/u"},
            {"w", "/results/uw/w"},
            {"conductor", "/results/conductor"},
            {"genus", "/results/genus"},
            {"min_a3b3", "/results/min_a3b3"},
            {"K", "/results/K"},
            {"Q", "/results/Q"},
            {"P", "/results/P"},
            {"lower_bound", "/results/lower_bound"}};
  }
  if (command == "scan") {
    return {{"dmax", "/spec/dmax"},
            {"triples", "/results/triples"},
            {"symmetric", "/results/symmetric"},
            {"non_symmetric", "/results/non_symmetric"},
            {"failures", "/results/failures"},
            {"derived_single", "/results/derived_single"},
            {"genus_twice_nongaps_hits", "/results/genus_twice_nongaps_hits"}};
  }
  if (command == "sweep-d") {
    return {{"base", "/spec/base"},
            {"N", "/spec/N"},
            {"r", "/spec/r"},
            {"sample_count", "/spec/sample_count"},
            {"total_points", "/results/total_points"},
            {"coprime_count", "/results/coprime_count"},
            {"admissible_count", "/results/admissible_count"},
            {"symmetric_count", "/results/symmetric_count"},
            {"symmetric_fraction", "/results/symmetric_fraction"},
            {"K_est", "/results/K_est"},
            {"K_lower_bound", "/results/K_lower_bound"},
            {"p_est", "/results/p_est"},
            {"q_est", "/results/q_est"},
            {"density", "/results/density"}};
  }
  if (command == "sweep-uw") {
    return {{"u", "/spec/u"},
            {"w", "/spec/w"},
            {"N", "/spec/N"},
            {"r", "/spec/r"},
            {"sample_count", "/spec/sample_count"},
            {"total_points", "/results/total_points"},
            {"admissible_count", "/results/admissible_count"},
            {"K_est", "/results/K_est"},
            {"K_closed", "/results/K_closed"},
            {"q_est", "/results/q_est"},
            {"Q_closed", "/results/Q_closed"},
            {"p_est", "/results/p_est"}};
  }
  if (command == "density") {
    return {{"m", "/spec/m"},
            {"samples", "/spec/samples"},
            {"lo", "/spec/lo"},
            {"hi", "/spec/hi"},
            {"coprime", "/results/coprime"},
            {"fraction", "/results/fraction"},
            {"expected", "/results/expected"},
            {"deviation", "/results/deviation"}};
  }
  if (command == "fill") {
    return {{"gens", "/spec/gens"},
            {"bins", "/spec/bins"},
            {"conductor", "/results/conductor"},
            {"mean_occupancy", "/results/mean_occupancy"},
            {"p", "/results/p"},
            {"l1_distance", "/results/l1_distance"},
            {"bin_lo", "/results/bin_lo"},
            {"occupancy", "/results/occupancy"},
            {"conjectured", "/results/conjectured"}};
  }
  if (command == "appendix-min") {
    return {{"lo", "/spec/lo"},
            {"hi", "/spec/hi"},
            {"points", "/spec/points"},
            {"grid_min", "/results/grid/value"},
            {"grid_at", "/results/grid/at"},
            {"refined_min", "/results/refined/value"},
            {"refined_at", "/results/refined/at"}};
  }
  throw Error(ErrorKind::DomainError, "no CSV layout for command '" + std::string(command) + "'");
}

void write_csv(std::span<const RunRecord> records, std::ostream& out, std::string_view empty_command) {
  const std::string_view command = records.empty() ? empty_command : std::string_view(records[0].command);
  for (const RunRecord& r : records) {
    if (r.command != command) {
      throw Error(ErrorKind::MixedKinds, "cannot mix '" + std::string(command) + "' and '" + r.command +
                                             "' records in one CSV");
    }
  }
  if (command.empty()) return;
  const auto cols = csv_columns(command);
  for (std::size_t i = 0; i < cols.size(); ++i) out << (i ? "," : "") << cols[i].header;
  out << '\n';
  for (const RunRecord& r : records) {
    const json doc = to_json(r);
    for (std::size_t i = 0; i < cols.size(); ++i) {
      out << (i ? "," : "") << quote(cell(read_pointer(doc, cols[i].pointer)));
    }
    out << '\n';
  }
}

void write_file(const std::filesystem::path& path, const std::string& contents) {
  std::ofstream f(path, std::ios::binary | std::ios::trunc);
  if (!f) throw Error(ErrorKind::IoError, "cannot open " + path.string() + " for writing");
  f << contents;
  f.flush();
  if (!f) throw Error(ErrorKind::IoError, "write to " + path.string() + " failed");
}

std::vector<std::vector<std::string>> parse_csv(std::istream& in) {
  std::vector<std::vector<std::string>> rows;
  std::vector<std::string> row;
  std::string field;
  bool quoted = false, any = false;
  char c;
  while (in.get(c)) {
    any = true;
    if (quoted) {
      if (c == '"') {
        if (in.peek() == '"') {
          field += '"';
          in.get();
        } else {
          quoted = false;
        }
      } else {
        field += c;
      }
    } else if (c == '"') {
      quoted = true;
    } else if (c == ',') {
      row.push_back(std::move(field));
      field.clear();
    } else if (c == '\n') {
      row.push_back(std::move(field));
      field.clear();
      rows.push_back(std::move(row));
      row.clear();
      any = false;
    } else {
      field += c;
    }
  }
  if (quoted) throw Error(ErrorKind::ParseError, "unterminated quoted CSV field");
  if (any) {
    row.push_back(std::move(field));
    rows.push_back(std::move(row));
  }
  return rows;
}

json big_integer(u128 v) {
  if (v <= std::numeric_limits<u64>::max()) return static_cast<u64>(v);
  std::string s;
  while (v) {
    s.insert(s.begin(), static_cast<char>('0' + static_cast<int>(v % 10)));
    v /= 10;
  }
  return s;
}

json profile_json(const GeneratorTuple& gens, const SemigroupProfile& prof) {
  return json{{"frobenius", prof.frobenius},
              {"conductor", prof.conductor},
              {"genus", prof.genus},
              {"nongaps", prof.nongaps},
              {"type", prof.type},
              {"symmetric", prof.symmetric},
              {"p", rational(prof.p)},
              {"q", rational(prof.q)},
              {"gaps", prof.gaps},
              {"pseudo_frobenius", prof.pseudo_frobenius},
              {"minimal_generators", minimal_generators(gens)}};
}

json uw_json(const UWPair& uw) { return json{{"u", uw.u}, {"w", uw.w}}; }

json spec_json(const NeighborhoodSpec& spec) {
  json j;
  if (spec.kind == LatticeKind::D) {
    j["lattice"] = "d";
    j["base"] = spec.base;
  } else {
    j["lattice"] = "uw";
    j["u"] = spec.uw_base.u;
    j["w"] = spec.uw_base.w;
  }
  j["N"] = spec.N;
  j["r"] = spec.r;
  j["mode"] = spec.sampling ? "sampled" : "exhaustive";
  j["sample_count"] = spec.sampling ? json(spec.sampling->count) : json(nullptr);
  j["sample_seed"] = spec.sampling ? json(spec.sampling->seed) : json(nullptr);
  return j;
}

json estimator_json(const EstimatorReport& rep) {
  json j{{"total_points", rep.total_points},
         {"coprime_count", rep.coprime_count},
         {"admissible_count", rep.admissible_count},
         {"symmetric_count", rep.symmetric_count},
         {"sum_conductor", big_integer(rep.sum_conductor)},
         {"sum_genus", big_integer(rep.sum_genus)},
         {"sum_nongaps", big_integer(rep.sum_nongaps)},
         {"sum_min_a3b3", big_integer(rep.sum_min_a3b3)},
         {"sum_root_volume", rep.sum_root_volume},
         {"K_est", opt(rep.K_est)},
         {"p_est", opt(rep.p_est)},
         {"q_est", opt(rep.q_est)},
         {"symmetric_fraction", opt(rep.symmetric_fraction)},
         {"density", rep.density},
         {"K_lower_bound", opt(rep.K_lower_bound)},
         {"K_closed", opt(rep.K_closed)},
         {"Q_closed", opt(rep.Q_closed)},
         {"empty_reason", rep.empty_reason ? json(*rep.empty_reason) : json(nullptr)},
         {"warnings", rep.warnings}};
  return j;
}

json density_json(const DensityReport& rep) {
  return json{{"coprime", rep.coprime},
              {"fraction", rep.fraction},
              {"expected", rep.expected},
              {"zeta", 1.0 / rep.expected},
              {"deviation", rep.deviation}};
}

json fill_json(const FillHistogram& h) {
  std::vector<u64> lo, hi, count;
  std::vector<double> occ, conj;
  for (const FillBin& b : h.bins) {
    lo.push_back(b.lo);
    hi.push_back(b.hi);
    count.push_back(b.count);
    occ.push_back(b.occupancy);
    conj.push_back(b.conjectured);
  }
  return json{{"conductor", h.conductor},
              {"m", h.m},
              {"mean_occupancy", rational(h.mean_occupancy)},
              {"p", rational(h.p)},
              {"mean_equals_p", h.mean_occupancy == h.p},
              {"l1_distance", h.l1_distance},
              {"conjectured_integral", rational(h.conjectured_integral)},
              {"conjectured_integral_quadrature", h.conjectured_integral_quadrature},
              {"bin_lo", lo},
              {"bin_hi", hi},
              {"count", count},
              {"occupancy", occ},
              {"conjectured", conj}};
}

json scan_json(const ScanSummary& s) {
  return json{{"triples", s.triples},
              {"symmetric", s.symmetric},
              {"non_symmetric", s.non_symmetric},
              {"failures", s.failures()},
              {"structure_failures", s.structure_failures},
              {"closed_form_mismatches", s.closed_form_mismatches},
              {"roundtrip_failures", s.roundtrip_failures},
              {"tri_equivalence_failures", s.tri_equivalence_failures},
              {"type_failures", s.type_failures},
              {"genus_type_bound_failures", s.genus_type_bound_failures},
              {"lower_bound_failures", s.lower_bound_failures},
              {"derived_over_two", s.derived_over_two},
              {"derived_single", s.derived_single},
              {"derived_nonsym_not_three", s.derived_nonsym_not_three},
              {"genus_twice_nongaps_hits", s.genus_twice_nongaps_hits},
              {"genus_twice_nongaps_outside_family", s.genus_twice_nongaps_outside_family},
              {"first_failure", s.first_failure ? json(*s.first_failure) : json(nullptr)}};
}

json l_minimum_json(const LMinimum& m) {
  auto point = [](const LPoint& p) { return json{{"value", p.value}, {"at", p.at}}; };
  return json{{"grid", point(m.grid)},
              {"refined", point(m.refined)},
              {"plane_rho1_eq_rho2", point(m.planes[0])},
              {"plane_rho2_eq_rho3", point(m.planes[1])},
              {"plane_rho3_eq_rho1", point(m.planes[2])}};
}

}  // namespace numsg
