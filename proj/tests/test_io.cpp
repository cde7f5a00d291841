#include <cstdio>
#include <fstream>
#include <numbers>
#include <stdexcept>

#include <gtest/gtest.h>

#include "engel/io.hpp"

using namespace engel;

TEST(ChartJson, RoundTrip) {
  const ChartPoint charts[] = {ChartN1{0.5, 1, 2, -3}, ChartN2{0.7, 0.1, 3.0, 2, -1}, ChartN3{1.2, -0.4, 0.5, 1},
                               ChartN6{0.2, -1.5, 4}, ChartN7{-2.0, 0.25}};
  for (const ChartPoint& nu : charts) {
    const Json j = to_json(nu);
    EXPECT_EQ(j.at("chart"), chart_name(nu));
    const ChartPoint back = chart_from_json(Json::parse(j.dump()));
    EXPECT_EQ(back.index(), nu.index());
    EXPECT_EQ(chart_params(back), chart_params(nu));
  }
  EXPECT_EQ(to_json(ChartN2{0.7, 0.1, 3.0, 2, -1}).at("params").at("sign_c"), -1);
}

TEST(ChartJson, Errors) {
  EXPECT_THROW(chart_from_json(Json::parse(R"({"chart":"N4","params":{}})")), std::invalid_argument);
  EXPECT_THROW(chart_from_json(Json::parse(R"({"chart":"N7","params":{"theta":1}})")), std::invalid_argument);
  EXPECT_THROW(chart_from_json(Json::parse(R"([1,2])")), std::invalid_argument);
}

TEST(ResultJson, Layout) {
  const Json j = to_json(minimizers({0, 1, 0, 1}));
  EXPECT_EQ(j.at("stratum"), "I0x+");
  EXPECT_EQ(j.at("multiplicity"), "2");
  ASSERT_EQ(j.at("minimizers").size(), 2u);
  for (const Json& m : j.at("minimizers")) {
    EXPECT_EQ(m.at("chart"), "N1");
    for (const char* key : {"params", "time", "residual", "covector"}) EXPECT_TRUE(m.contains(key)) << key;
  }
  const Json f = to_json(minimizers({0, 0, 0, 1}));
  EXPECT_EQ(f.at("multiplicity"), "family");
  EXPECT_TRUE(f.contains("family"));
  const Json s = to_json(classify_point({0, 0, 1, 0}));
  EXPECT_EQ(s.at("label"), "Nx^+[C]");
  EXPECT_EQ(s.at("maxwell"), true);
}

TEST(Config, DefaultsAreValid) {
  const Config c;
  EXPECT_NO_THROW(c.validate());
  const SynthesisOptions o = c.synthesis();
  EXPECT_EQ(o.tol, c.tol);
  EXPECT_EQ(o.strata.eps_strat, c.eps_strat);
  EXPECT_EQ(o.ode.rtol, c.ode_rtol);
  const Config back = config_from_json(to_json(c));
  EXPECT_EQ(to_json(back), to_json(c));
}

TEST(Config, Overrides) {
  const Config c = config_from_json(Json::parse(R"({"format":"json","grid":7,"eps_strat":1e-6})"));
  EXPECT_EQ(c.format, "json");
  EXPECT_EQ(c.grid, 7);
  EXPECT_EQ(c.eps_strat, 1e-6);
  EXPECT_EQ(c.samples, Config{}.samples);
}

TEST(Config, Rejections) {
  EXPECT_THROW(config_from_json(Json::parse(R"({"bogus":1})")), std::invalid_argument);
  EXPECT_THROW(config_from_json(Json::parse(R"({"grid":"many"})")), std::invalid_argument);
  EXPECT_THROW(config_from_json(Json::parse("3")), std::invalid_argument);
  Config c;
  c.tol = 0;
  EXPECT_THROW(c.validate(), std::invalid_argument);
  c = {};
  c.samples = 1;
  EXPECT_THROW(c.validate(), std::invalid_argument);
  c = {};
  c.format = "xml";
  EXPECT_THROW(c.validate(), std::invalid_argument);
}

TEST(Config, Files) {
  EXPECT_THROW(load_config("/nonexistent/engel.json"), std::invalid_argument);
  const std::string path = ::testing::TempDir() + "engel_cfg.json";
  {
    std::ofstream out(path);
    out << R"({"seed": 5, "family_samples": 4})";
  }
  const Config c = load_config(path);
  EXPECT_EQ(c.seed, 5u);
  EXPECT_EQ(c.family_samples, 4);
  {
    std::ofstream out(path);
    out << "{not json";
  }
  EXPECT_THROW(load_config(path), std::invalid_argument);
  std::remove(path.c_str());
}
