#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "numsg/report.hpp"

using namespace numsg;

namespace {

RunRecord sweep_record(u64 N) {
  const auto spec = NeighborhoodSpec::d_lattice({3, 5, 7}, N, 2);
  RunRecord r;
  r.command = "sweep-d";
  r.spec = spec_json(spec);
  r.results = estimator_json(d_lattice_sweep(spec, {1}));
  return r;
}

}  // namespace

TEST(Report, ProfileDocument) {
  const GeneratorTuple t{3, 4, 5};
  const json j = profile_json(t, profile(t));
  EXPECT_EQ(j["frobenius"], 2);
  EXPECT_EQ(j["genus"], 2);
  EXPECT_EQ(j["symmetric"], false);
  EXPECT_EQ(j["p"]["num"], 1);
  EXPECT_EQ(j["p"]["den"], 3);
}

TEST(Report, JsonRoundTrip) {
  RunRecord r = sweep_record(10);
  r.timestamp = "2024-01-01T00:00:00Z";
  r.seed = 12345678901234567ULL;
  std::ostringstream s;
  write_json(r, s);
  const RunRecord back = record_from_json(json::parse(s.str()));
  EXPECT_EQ(back, r);
  EXPECT_EQ(back.results["K_est"].get<double>(), r.results["K_est"].get<double>());
}

TEST(Report, ArrayOfRecordsRoundTrips) {
  std::vector<RunRecord> rs{sweep_record(10), sweep_record(20)};
  std::ostringstream s;
  write_json(rs, s);
  const json doc = json::parse(s.str());
  ASSERT_TRUE(doc.is_array());
  ASSERT_EQ(doc.size(), 2u);
  EXPECT_EQ(record_from_json(doc[1]), rs[1]);
}

TEST(Report, EmptySweepHasNullEstimators) {
  EstimatorReport rep;
  rep.empty_reason = "no admissible point in the neighbourhood";
  const json j = estimator_json(rep);
  EXPECT_TRUE(j["K_est"].is_null());
  EXPECT_TRUE(j["p_est"].is_null());
  EXPECT_EQ(j["empty_reason"], "no admissible point in the neighbourhood");
  EXPECT_EQ(j["admissible_count"], 0);
}

TEST(Report, BigIntegers) {
  EXPECT_EQ(big_integer(42), json(42));
  const u128 big = static_cast<u128>(1) << 70;
  EXPECT_EQ(big_integer(big), json("1180591620717411303424"));
}

TEST(Report, RejectsForeignDocuments) {
  try {
    record_from_json(json{{"command", "x"}});
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::ParseError);
  }
}

TEST(Report, CsvSeries) {
  std::vector<RunRecord> rs{sweep_record(10), sweep_record(20), sweep_record(40)};
  std::ostringstream s;
  write_csv(rs, s);
  std::istringstream in(s.str());
  const auto rows = parse_csv(in);
  ASSERT_EQ(rows.size(), 4u);
  const auto& header = rows[0];
  for (const char* col : {"N", "r", "admissible_count", "symmetric_fraction", "K_est", "p_est"}) {
    EXPECT_NE(std::find(header.begin(), header.end(), col), header.end()) << col;
  }
  const auto n_col = std::find(header.begin(), header.end(), "N") - header.begin();
  EXPECT_EQ(rows[3][n_col], "40");
  const auto base_col = std::find(header.begin(), header.end(), "base") - header.begin();
  EXPECT_EQ(rows[1][base_col], "3;5;7");
  // Integer fields survive exactly and reals to the last bit.
  const auto k_col = std::find(header.begin(), header.end(), "K_est") - header.begin();
  EXPECT_EQ(std::stod(rows[2][k_col]), rs[1].results["K_est"].get<double>());
}

TEST(Report, CsvProfileRow) {
  RunRecord r;
  r.command = "analyze";
  const GeneratorTuple t{4, 5, 11};
  r.spec = json{{"gens", {4, 5, 11}}};
  r.results = profile_json(t, profile(t));
  std::ostringstream s;
  write_csv(std::vector<RunRecord>{r}, s);
  std::istringstream in(s.str());
  const auto rows = parse_csv(in);
  ASSERT_EQ(rows.size(), 2u);
  EXPECT_EQ(rows[1][0], "4;5;11");
  EXPECT_EQ(rows[1][2], "8");  // conductor
}

TEST(Report, CsvEmptyAndMixed) {
  std::ostringstream s;
  write_csv({}, s, "sweep-d");
  std::istringstream in(s.str());
  EXPECT_EQ(parse_csv(in).size(), 1u);

  RunRecord a = sweep_record(10), b;
  b.command = "analyze";
  std::ostringstream t;
  try {
    write_csv(std::vector<RunRecord>{a, b}, t);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::MixedKinds);
  }
}

TEST(Report, CsvQuoting) {
  std::istringstream in("a,\"b,c\",\"d\"\"e\"\n1,2,3\n");
  const auto rows = parse_csv(in);
  ASSERT_EQ(rows.size(), 2u);
  EXPECT_EQ(rows[0][1], "b,c");
  EXPECT_EQ(rows[0][2], "d\"e");
}

TEST(Report, WriteFile) {
  const auto path = std::filesystem::temp_directory_path() / "numsg_report_test.json";
  write_file(path, "{}\n");
  std::ifstream f(path);
  std::string s;
  std::getline(f, s);
  EXPECT_EQ(s, "{}");
  std::filesystem::remove(path);
  try {
    write_file("/nonexistent-dir/x.json", "{}");
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::IoError);
  }
}
