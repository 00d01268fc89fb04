#pragma once

// Run records and their JSON / CSV serialization. A record is one
// self-describing document: which command ran, the exact inputs, the
// results, and the seed and version needed to reproduce it.

#include <filesystem>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "numsg/asymptotics.hpp"
#include "numsg/relations.hpp"
#include "numsg/semigroup.hpp"

namespace numsg {

using json = nlohmann::ordered_json;

inline constexpr std::string_view kSchemaVersion = "1";
inline constexpr std::string_view kSoftwareVersion = "0.1.0";

struct RunRecord {
  std::string schema_version{kSchemaVersion};
  std::optional<std::string> timestamp;  // UTC, ISO 8601
  std::string command;
  json spec = json::object();
  json results = json::object();
  std::optional<u64> seed;
  std::string software_version{kSoftwareVersion};

  friend bool operator==(const RunRecord&, const RunRecord&) = default;
};

std::string utc_timestamp();

json to_json(const RunRecord& record);
// Throws ParseError on a document that is not a run record.
RunRecord record_from_json(const json& doc);

// One record is written as an object, several as an array.
void write_json(std::span<const RunRecord> records, std::ostream& out);
void write_json(const RunRecord& record, std::ostream& out);

// Column headers and the JSON pointers they read, fixed per command.
struct CsvColumn {
  std::string header;
  std::string pointer;
};
std::vector<CsvColumn> csv_columns(std::string_view command);

// Header plus one row per record. Throws MixedKinds unless every record has
// the same command. An empty sequence writes nothing but the header of
// `empty_command`, when one is given.
void write_csv(std::span<const RunRecord> records, std::ostream& out,
               std::string_view empty_command = {});

// Throws IoError when the file cannot be written.
void write_file(const std::filesystem::path& path, const std::string& contents);

std::vector<std::vector<std::string>> parse_csv(std::istream& in);

// Field layouts shared by the CLI and the tests.
json big_integer(u128 v);  // a number when it fits 64 bits, a decimal string otherwise
json profile_json(const GeneratorTuple& gens, const SemigroupProfile& prof);
json spec_json(const NeighborhoodSpec& spec);
json estimator_json(const EstimatorReport& rep);
json density_json(const DensityReport& rep);
json fill_json(const FillHistogram& hist);
json scan_json(const ScanSummary& summary);
json l_minimum_json(const LMinimum& min);
json uw_json(const UWPair& uw);

}  // namespace numsg
