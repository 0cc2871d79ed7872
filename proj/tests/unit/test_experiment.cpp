#include <gtest/gtest.h>

#include <fstream>
#include <sstream>

#include <json.hpp>

#include "toricleak/experiment.hpp"

using namespace toricleak;

namespace {

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  std::stringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

}  // namespace

TEST(Experiment, CsvHeaderIsFixed) {
  const std::string csv = to_csv({});
  EXPECT_EQ(csv,
            "isotope,circuit,d,sigma_b_gauss,p_scatter,trials,cycles,logical_fail_rate,per_cycle_rate,stderr,"
            "leak_events_mean,seed\n");
}

TEST(Experiment, SweepPointOrderAndSeeds) {
  const auto spec = parse_sweep(R"({
    "trials": 10, "seed": 100,
    "circuits": ["zeeman:standard", "hyperfine:lrc"],
    "distances": [3, 5],
    "sigma_b_gauss": [0.0, 1e-5],
    "p_scatter": [1e-4, 1e-3, 1e-2]
  })");
  const auto pts = spec.points();
  ASSERT_EQ(pts.size(), 24u);
  EXPECT_EQ(pts[0].isotope.kind, IsotopeKind::zeeman);
  EXPECT_EQ(pts[1].p_scatter, 1e-3);
  EXPECT_EQ(pts[3].sigma_b_gauss, 1e-5);
  EXPECT_EQ(pts[6].distance, 5);
  EXPECT_EQ(pts[12].isotope.kind, IsotopeKind::hyperfine);
  EXPECT_TRUE(pts[12].lrc_enabled);
  for (std::size_t k = 0; k < pts.size(); ++k) EXPECT_EQ(pts[k].seed, 100 + k);
}

TEST(Experiment, InvalidPointAbortsSweep) {
  EXPECT_THROW(parse_sweep(R"({"circuits": ["zeeman:lrc"]})"), ConfigError);
  EXPECT_THROW(parse_sweep(R"({"distances": [3, 4]})"), ConfigError);
  EXPECT_THROW(parse_sweep(R"({"p_scatter": []})"), ConfigError);
  EXPECT_THROW(parse_sweep(R"({"circuits": ["zeeman-standard"]})"), ConfigError);
}

TEST(Experiment, ZeroNoisePointGivesZeroRate) {
  const auto spec = parse_sweep(R"({"trials": 50, "distances": [3]})");
  const auto rows = run_sweep(spec);
  ASSERT_EQ(rows.size(), 1u);
  const std::string csv = to_csv(rows);
  EXPECT_NE(csv.find("zeeman,standard,3,0,0,50,3,0,0,0,0,1\n"), std::string::npos) << csv;
}

TEST(Experiment, CsvIsByteIdenticalAcrossRunsAndWorkers) {
  const auto spec = parse_sweep(R"({
    "trials": 400, "seed": 3,
    "circuits": ["hyperfine:lrc", "zeeman:standard"],
    "distances": [3], "sigma_b_gauss": 1e-4, "p_scatter": [3e-3, 1e-2]
  })");
  RunOptions one, three;
  one.workers = 1;
  three.workers = 3;
  const std::string a = to_csv(run_sweep(spec, one));
  const std::string b = to_csv(run_sweep(spec, three));
  const std::string c = to_csv(run_sweep(spec, one));
  EXPECT_EQ(a, b);
  EXPECT_EQ(a, c);
}

TEST(Experiment, JsonMirrorsCsv) {
  const auto spec = parse_sweep(R"({"trials": 100, "distances": [3], "p_scatter": [0.01]})");
  const auto rows = run_sweep(spec);
  const auto doc = nlohmann::json::parse(to_json(rows));
  ASSERT_EQ(doc["rows"].size(), 1u);
  const auto& r = doc["rows"][0];
  for (const char* col : {"isotope", "circuit", "d", "sigma_b_gauss", "p_scatter", "trials", "cycles",
                          "logical_fail_rate", "per_cycle_rate", "stderr", "leak_events_mean", "seed"}) {
    EXPECT_TRUE(r.contains(col)) << col;
  }
  EXPECT_DOUBLE_EQ(r["logical_fail_rate"].get<double>(), rows[0].logical_fail_rate());
}

TEST(Experiment, DescribeChannels) {
  ExperimentConfig c;
  c.sigma_b_gauss = 1e-5;
  const std::string table = describe_channels(c);
  EXPECT_NE(table.find("zeeman     two_qubit"), std::string::npos);
  EXPECT_NE(table.find("7.75"), std::string::npos) << table;
  c.sigma_b_gauss = 0.0;
  c.p_scatter = 0.0;
  const std::string zero = describe_channels(c);
  const auto body = zero.find('\n') + 1;
  const std::string channels = zero.substr(body, zero.find("\n\n") - body);
  EXPECT_EQ(channels.find("e-"), std::string::npos) << channels;
}

TEST(Experiment, DumpLayoutMatchesGolden) {
  EXPECT_EQ(dump_layout(3), read_file(TORICLEAK_GOLDEN_DIR "/dump_layout_d3.txt"));
}

TEST(Experiment, DescribeMatching) {
  const std::string out = describe_matching("distance 5\n0 0 0\n0 1 0\n3 3 2\n3 3 4\n");
  EXPECT_NE(out.find("total_weight 3"), std::string::npos) << out;
}
