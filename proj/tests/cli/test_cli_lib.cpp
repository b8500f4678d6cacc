#include <gtest/gtest.h>

#include <stdexcept>

#include "ergolab/cli/config.hpp"
#include "ergolab/cli/experiment.hpp"
#include "ergolab/cli/specs.hpp"
#include "ergolab/induced.hpp"

using namespace ergolab;
using namespace ergolab::cli;

TEST(Config, RoundTripsThroughJsonText) {
  ExperimentConfig c;
  c.command = "spectrum";
  c.system = "rotation:golden";
  c.set = "interval:0,1/3;0.5,0.75";
  c.observables = {"char:1", "fiber-sign"};
  c.mode = "skew";
  c.orbit_length = 123456;
  c.lags = 17;
  c.ta2 = true;
  c.a = 0.1 + 0.2;
  c.ladder = {2, 4};
  c.seed = 18446744073709551615ull;
  c.out = "/tmp/x";
  EXPECT_EQ(config_from_json(Json::parse(to_json(c).dump())), c);
  EXPECT_EQ(config_from_json(to_json(ExperimentConfig{})), ExperimentConfig{});
}

TEST(Config, MergeOverlaysOnlyPresentKeys) {
  ExperimentConfig base;
  base.cells = 16;
  auto c = merge_json(base, Json{{"orbit_length", 1e5}, {"samples", "2e3"}});
  EXPECT_EQ(c.cells, 16u);
  EXPECT_EQ(c.orbit_length, 100000u);
  EXPECT_EQ(c.samples, 2000u);
  EXPECT_THROW(merge_json(base, Json{{"orbit", 5}}), std::invalid_argument);
  EXPECT_THROW(merge_json(base, Json{{"cells", -1}}), std::invalid_argument);
  EXPECT_THROW(merge_json(base, Json{{"lags", 2.5}}), std::invalid_argument);
  EXPECT_THROW(merge_json(base, Json::array()), std::invalid_argument);
}

TEST(Specs, Numbers) {
  EXPECT_EQ(parse_count("1e6"), 1'000'000u);
  EXPECT_EQ(parse_count("18446744073709551615"), 18446744073709551615ull);
  EXPECT_THROW(parse_count("1.5"), std::invalid_argument);
  EXPECT_THROW(parse_count("-3"), std::invalid_argument);
  EXPECT_DOUBLE_EQ(parse_real("1/4"), 0.25);
  EXPECT_THROW(parse_real("1/0"), std::invalid_argument);
  EXPECT_THROW(parse_real("nan"), std::invalid_argument);
  EXPECT_THROW(parse_real(""), std::invalid_argument);
}

TEST(Specs, Systems) {
  EXPECT_TRUE(std::holds_alternative<CatMap>(parse_system("catmap")));
  EXPECT_DOUBLE_EQ(std::get<TorusRotation>(parse_system("rotation:golden")).alpha()[0], kGoldenMean);
  EXPECT_EQ(std::get<TorusRotation>(parse_system("rotation:0.1,0.2")).dim(), 2u);
  EXPECT_EQ(std::get<FinitePermutation>(parse_system("perm:1,0,3,2")), FinitePermutation({1, 0, 3, 2}));
  EXPECT_EQ(std::get<FinitePermutation>(parse_system("cycle:5")), FinitePermutation::cycle(5));
  for (const char* bad : {"torus", "perm:0,0", "rotation:", "rotation:1.5", "catmap:2", "cycle:x"})
    EXPECT_THROW(parse_system(bad), std::invalid_argument) << bad;
}

TEST(Specs, Sets) {
  const System rot = TorusRotation::golden();
  const System perm = FinitePermutation::cycle(4);
  EXPECT_EQ(parse_set("interval:0,0.5;0.75,1", rot, 1), Set(IntervalUnion(std::vector<Interval>{{0, 0.5}, {0.75, 1}})));
  EXPECT_EQ(parse_set("finite:0,1", perm, 1), Set(FiniteSet::of(4, {0, 1})));
  EXPECT_EQ(parse_set("rect:16:1/2,1/2", CatMap{}, 1), Set(GridSet::rectangle(16, 0.5, 0.5)));
  EXPECT_EQ(parse_set("segment:8:0.25", rot, 1), Set(GridSet::segment(8, 0.25)));
  EXPECT_EQ(parse_set("gridrand:64:1:0.5", rot, 3), parse_set("gridrand:64:1:0.5", rot, 3));
  EXPECT_DOUBLE_EQ(measure(parse_set("full", perm, 1)), 1.0);
  EXPECT_DOUBLE_EQ(measure(parse_set("full", CatMap{}, 1)), 1.0);
  EXPECT_EQ(parse_set("cobound:finite:1", perm, 1), Set(FiniteSet::of(4, {1, 2})));
  for (const char* bad : {"interval:0.5", "interval:0.6,0.5", "finite:4", "rect:4:0.3,0.5", "ball:1", "cobound:"})
    EXPECT_THROW(parse_set(bad, std::string_view(bad).starts_with("finite") ? perm : rot, 1), std::invalid_argument)
        << bad;
  EXPECT_THROW(parse_set("finite:0", rot, 1), std::invalid_argument);
}

TEST(Specs, ObservablesAndCochains) {
  EXPECT_EQ(parse_observable("char:1,0").describe(), "char:1,0");
  EXPECT_EQ(parse_observable("fiber-sign").kind(), Observable::Kind::kFiberSign);
  EXPECT_EQ(parse_observable("values:1,2,3").kind(), Observable::Kind::kGridFunction);
  EXPECT_THROW(parse_observable("char:0.5"), std::invalid_argument);
  EXPECT_EQ(parse_cochain2("cells:0,3", 4).f.indices(), (std::vector<std::size_t>{0, 3}));
  EXPECT_EQ(parse_cochain2("hex:9", 4).f.indices(), (std::vector<std::size_t>{0, 3}));
  EXPECT_THROW(parse_cochain2("cells:4", 4), std::invalid_argument);
}

TEST(Run, FiniteCohomologyOfTwoTranspositions) {
  ExperimentConfig c;
  c.command = "finite-cohomology";
  c.system = "perm:1,0,3,2";
  auto r = run_experiment(c);
  EXPECT_EQ(r.exit_code, kExitOk);
  EXPECT_EQ(r.summary["result"]["k"], 2);
  EXPECT_EQ(r.summary["result"]["coboundary_dim"], 2);
  EXPECT_EQ(r.summary["config"], to_json(c));
  EXPECT_EQ(r.summary["tool"], "ergolab");
}

TEST(Run, InconclusiveSkewTestMapsToExitThree) {
  ExperimentConfig c;
  c.command = "stepin";
  c.system = "rotation:golden";
  c.set = "interval:0,1/17";
  c.seed = 2;
  auto r = run_experiment(c);
  EXPECT_EQ(r.summary["result"]["report"]["verdict"], "inconclusive");
  EXPECT_EQ(r.summary["status"], "inconclusive");
  EXPECT_EQ(r.exit_code, kExitInconclusive);
}

TEST(Run, CapExceededPropagates) {
  ExperimentConfig c;
  c.command = "induced";
  c.system = "cycle:10";
  c.set = "finite:0,1";
  c.cap = 3;
  c.samples = 200;
  EXPECT_GT(run_experiment(c).summary["result"]["returns"]["cap_hits"].get<int>(), 0);
  c.ta2 = true;
  c.cells = 2;
  c.orbit_length = 40;
  EXPECT_THROW(run_experiment(c), CapExceededError);
}

TEST(Run, UnknownCommandIsInvalid) {
  ExperimentConfig c;
  c.command = "entropy";
  EXPECT_THROW(run_experiment(c), std::invalid_argument);
}
