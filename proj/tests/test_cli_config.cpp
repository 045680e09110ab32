#include <stdexcept>

#include "doctest.h"
#include "suncs/report.hpp"

using namespace suncs;

TEST_CASE("integer list parsing") {
  CHECK(parse_int_list("1,0,1") == std::vector<int>{1, 0, 1});
  CHECK(parse_int_list("3") == std::vector<int>{3});
  CHECK_THROWS_AS(parse_int_list("1,,2"), std::invalid_argument);
  CHECK_THROWS_AS(parse_int_list("1,x"), std::invalid_argument);
  CHECK_THROWS_AS(parse_int_list(""), std::invalid_argument);
}

TEST_CASE("tolerance flag parsing") {
  RunConfig config;
  apply_tolerance_flags(config, {"commutator=1e-9", "jacobi=0.5"});
  CHECK(config.tol("commutator", 0.0) == 1e-9);
  CHECK(config.tol("jacobi", 0.0) == 0.5);
  CHECK(config.tol("missing", 2.5) == 2.5);
  CHECK_THROWS_AS(apply_tolerance_flags(config, {"oops"}),
                  std::invalid_argument);
  CHECK_THROWS_AS(apply_tolerance_flags(config, {"=1"}), std::invalid_argument);
}

TEST_CASE("config json round trip") {
  RunConfig config;
  config.n = 3;
  config.c = {1, 1};
  config.seed = 42;
  config.samples = 5000;
  config.tolerances["covariance"] = 1e-8;
  const RunConfig back = RunConfig::from_json(config.to_json());
  CHECK(back.n == 3);
  CHECK(back.c == std::vector<int>{1, 1});
  CHECK(back.seed == 42);
  CHECK(back.samples == 5000);
  CHECK(back.tol("covariance", 0.0) == 1e-8);
  CHECK(back.sector_cap == kDefaultSectorCap);
}

TEST_CASE("config validation") {
  RunConfig config;
  config.n = 1;
  CHECK_THROWS_WITH_AS(config.require_n(), "group rank too small",
                       std::invalid_argument);
  config.n = 3;
  config.c = {1};
  CHECK_THROWS_AS(config.require_label(), std::invalid_argument);
  config.c = {1, 1};
  CHECK_NOTHROW(config.require_label());
}

TEST_CASE("algebra command reports the su(2) epsilon tensor") {
  RunConfig config;
  config.n = 2;
  const Report report = cmd_algebra(config);
  CHECK(report.pass());
  const auto& f = report.payload.at("structureConstants");
  REQUIRE(f.size() == 1);
  CHECK(f[0][0] == 1);
  CHECK(f[0][1] == 2);
  CHECK(f[0][2] == 3);
  CHECK(std::abs(f[0][3].get<double>() - 1.0) < 1e-14);
}

TEST_CASE("irrep command cross-checks rank against the weyl dimension") {
  RunConfig config;
  config.n = 3;
  config.c = {1, 1};
  const Report report = cmd_irrep(config);
  CHECK(report.pass());
  CHECK(report.payload.at("sectorDim") == 9);
  CHECK(report.payload.at("weylDim") == 8);
  CHECK(report.payload.at("rankDim") == 8);
}

TEST_CASE("coherent command runs a seeded sweep") {
  RunConfig config;
  config.n = 2;
  config.c = {1};
  config.seed = 1;
  config.samples = 200;
  const Report report = cmd_coherent(config);
  CHECK(report.pass());
}

TEST_CASE("identity command rejects tiny sample counts") {
  RunConfig config;
  config.n = 2;
  config.c = {1};
  config.samples = 10;
  CHECK_THROWS_WITH_AS(cmd_identity(config), "insufficient samples",
                       std::invalid_argument);
}

TEST_CASE("reports are deterministic apart from wall time") {
  RunConfig config;
  config.n = 2;
  config.c = {1};
  config.seed = 9;
  config.samples = 1500;
  nlohmann::json a = cmd_identity(config).to_json();
  nlohmann::json b = cmd_identity(config).to_json();
  for (nlohmann::json* j : {&a, &b}) {
    j->erase("wallTimeMs");
    if (j->contains("payload") && j->at("payload").contains("wallTimeMs"))
      j->at("payload").erase("wallTimeMs");
  }
  CHECK(a.dump() == b.dump());
  CHECK(a.at("schemaVersion") == 1);
}

TEST_CASE("report records failing checks with tolerance and value") {
  RunConfig config;
  config.n = 3;
  config.tolerances["commutator"] = 1e-30;  // force a failure
  const Report report = cmd_algebra(config);
  CHECK(!report.pass());
  bool found = false;
  for (const Check& c : report.checks) {
    if (c.name == "maxCommutatorResidual") {
      found = true;
      CHECK(!c.pass);
      CHECK(c.tolerance == 1e-30);
      CHECK(c.value > 0.0);
    }
  }
  CHECK(found);
}
