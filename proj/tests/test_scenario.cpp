// SPDX-License-Identifier: Apache-2.0
#include <doctest.h>

#include <fstream>
#include <sstream>

#include "ccndtn/scenario.hpp"

using namespace ccndtn;

namespace {

nlohmann::json base_json() {
  return nlohmann::json::parse(builtin_scenario_text("fig3a"));
}

std::string repo_file(const std::string& rel) {
#ifdef CCNDTN_SOURCE_DIR
  return std::string(CCNDTN_SOURCE_DIR) + "/" + rel;
#else
  return rel;
#endif
}

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  REQUIRE(in.good());
  std::stringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

}  // namespace

TEST_CASE("builtin scenarios parse and validate") {
  for (const auto& name : builtin_scenario_names()) {
    Scenario s = load_scenario(name);
    CHECK(s.name == name);
    CHECK(s.t_end > 0);
    CHECK(!s.nodes.empty());
    CHECK(!s.workload.empty());
  }
}

TEST_CASE("scenario files on disk pin the builtin texts byte for byte") {
  for (const auto& name : builtin_scenario_names()) {
    std::string disk = slurp(repo_file("scenarios/" + name + ".json"));
    CHECK(disk == builtin_scenario_text(name));
  }
}

TEST_CASE("to_json/from_json round-trip is stable") {
  for (const auto& name : builtin_scenario_names()) {
    Scenario s = load_scenario(name);
    nlohmann::json j1 = s.to_json();
    Scenario back = Scenario::from_json(j1);
    nlohmann::json j2 = back.to_json();
    CHECK(j1 == j2);
    CHECK(j1.dump(2) == j2.dump(2));
  }
}

TEST_CASE("defaults fill in for omitted keys") {
  nlohmann::json j = {
      {"t_end", 1000u},
      {"nodes", {{{"id", "A"}, {"roles", {"ccn"}}}}},
  };
  Scenario s = Scenario::from_json(j);
  CHECK(s.seed == 1);
  CHECK(s.cs_capacity == 1024);
  CHECK(!s.jitter);
  CHECK(s.gateway.lifetime_multiplier_k == 100);
  CHECK(s.gateway.default_hop_limit == 8);
  CHECK(!s.gateway.status_response_enabled);
  CHECK(s.gateway.backoff_factor == 4);
  CHECK(s.links.empty());
  CHECK(s.workload.empty());
}

TEST_CASE("gateway role implies both stacks") {
  nlohmann::json j = {
      {"t_end", 1000u},
      {"nodes", {{{"id", "E"}, {"roles", {"gateway"}}}}},
  };
  Scenario s = Scenario::from_json(j);
  REQUIRE(s.nodes.size() == 1);
  CHECK(s.nodes[0].gateway);
  CHECK(s.nodes[0].ccn);
  CHECK(s.nodes[0].dtn);
}

TEST_CASE("structural validation rejects rule violations") {
  SUBCASE("zero t_end") {
    nlohmann::json j = base_json();
    j["t_end"] = 0u;
    CHECK_THROWS_AS(Scenario::from_json(j), ValidationError);
  }
  SUBCASE("duplicate node id") {
    nlohmann::json j = base_json();
    j["nodes"].push_back(j["nodes"][0]);
    CHECK_THROWS_AS(Scenario::from_json(j), ValidationError);
  }
  SUBCASE("reserved id any") {
    nlohmann::json j = base_json();
    j["nodes"][0]["id"] = "any";
    CHECK_THROWS_AS(Scenario::from_json(j), ValidationError);
  }
  SUBCASE("bad id characters") {
    nlohmann::json j = base_json();
    j["nodes"][0]["id"] = "a b";
    CHECK_THROWS_AS(Scenario::from_json(j), ValidationError);
  }
  SUBCASE("node without roles") {
    nlohmann::json j = base_json();
    j["nodes"][0]["roles"] = nlohmann::json::array();
    CHECK_THROWS_AS(Scenario::from_json(j), ValidationError);
  }
  SUBCASE("link to unknown node") {
    nlohmann::json j = base_json();
    j["links"][0]["b"] = "nosuch";
    CHECK_THROWS_AS(Scenario::from_json(j), ValidationError);
  }
  SUBCASE("self link") {
    nlohmann::json j = base_json();
    j["links"][0]["b"] = j["links"][0]["a"];
    CHECK_THROWS_AS(Scenario::from_json(j), ValidationError);
  }
  SUBCASE("duplicate link pair") {
    nlohmann::json j = base_json();
    nlohmann::json dup = j["links"][0];
    std::swap(dup["a"], dup["b"]);
    j["links"].push_back(dup);
    CHECK_THROWS_AS(Scenario::from_json(j), ValidationError);
  }
  SUBCASE("ccn link needs ccn roles") {
    nlohmann::json j = base_json();
    // F-G is dtn between two gateways; retyping E-F to ccn is fine (gateway
    // has ccn), but a ccn link to a dtn-only node is not.
    j["nodes"][1]["roles"] = {"dtn"};  // R loses ccn
    CHECK_THROWS_AS(Scenario::from_json(j), ValidationError);
  }
  SUBCASE("dtn link needs dtn roles") {
    nlohmann::json j = base_json();
    j["links"][1]["kind"] = "dtn";  // R-E; R is ccn-only
    CHECK_THROWS_AS(Scenario::from_json(j), ValidationError);
  }
  SUBCASE("zero latency") {
    nlohmann::json j = base_json();
    j["links"][0]["latency_ms"] = 0u;
    CHECK_THROWS_AS(Scenario::from_json(j), ValidationError);
  }
  SUBCASE("bad schedule") {
    nlohmann::json j = base_json();
    j["links"][2]["schedule"] = {{4000, 3000}};
    CHECK_THROWS_AS(Scenario::from_json(j), ValidationError);
  }
  SUBCASE("route at non-ccn node") {
    nlohmann::json j = base_json();
    j["routes"][0]["node"] = "nosuch";
    CHECK_THROWS_AS(Scenario::from_json(j), ValidationError);
  }
  SUBCASE("route without a ccn link") {
    nlohmann::json j = base_json();
    j["routes"][0]["via"] = "E";  // A-E has no link
    CHECK_THROWS_AS(Scenario::from_json(j), ValidationError);
  }
  SUBCASE("publish at unknown node") {
    nlohmann::json j = base_json();
    j["workload"][0]["node"] = "nosuch";
    CHECK_THROWS_AS(Scenario::from_json(j), ValidationError);
  }
  SUBCASE("carry_content requires a gateway") {
    nlohmann::json j = base_json();
    j["workload"][0]["node"] = "A";  // ccn-only
    j["workload"][0]["carry_content"] = true;
    CHECK_THROWS_AS(Scenario::from_json(j), ValidationError);
  }
  SUBCASE("carry_content requires content_size") {
    nlohmann::json j = base_json();
    j["workload"][0]["content_size"] = 0u;
    j["workload"][0]["carry_content"] = true;
    CHECK_THROWS_AS(Scenario::from_json(j), ValidationError);
  }
  SUBCASE("content_name must extend the prefix") {
    nlohmann::json j = base_json();
    j["workload"][0]["content_name"] = "/elsewhere/doc";
    CHECK_THROWS_AS(Scenario::from_json(j), ValidationError);
  }
  SUBCASE("workload after t_end") {
    nlohmann::json j = base_json();
    j["workload"][1]["at"] = j["t_end"];
    CHECK_THROWS_AS(Scenario::from_json(j), ValidationError);
  }
  SUBCASE("zero request lifetime") {
    nlohmann::json j = base_json();
    j["workload"][1]["lifetime_ms"] = 0u;
    CHECK_THROWS_AS(Scenario::from_json(j), ValidationError);
  }
  SUBCASE("zero re-expression interval") {
    nlohmann::json j = base_json();
    j["workload"][1]["reexpress_interval_ms"] = 0u;
    CHECK_THROWS_AS(Scenario::from_json(j), ValidationError);
  }
  SUBCASE("zero lifetime multiplier") {
    nlohmann::json j = base_json();
    j["gateway"]["lifetime_multiplier_k"] = 0u;
    CHECK_THROWS_AS(Scenario::from_json(j), ValidationError);
  }
  SUBCASE("backoff below 2") {
    nlohmann::json j = base_json();
    j["gateway"]["backoff_factor"] = 1u;
    CHECK_THROWS_AS(Scenario::from_json(j), ValidationError);
  }
}

TEST_CASE("parse errors for malformed documents") {
  CHECK_THROWS_AS(Scenario::from_json(nlohmann::json::array()), ParseError);
  nlohmann::json no_nodes = {{"t_end", 100u}};
  CHECK_THROWS_AS(Scenario::from_json(no_nodes), ParseError);
  nlohmann::json bad_role = {
      {"t_end", 100},
      {"nodes", {{{"id", "A"}, {"roles", {"router"}}}}},
  };
  CHECK_THROWS_AS(Scenario::from_json(bad_role), ParseError);
  nlohmann::json bad_kind = base_json();
  bad_kind["links"][0]["kind"] = "quic";
  CHECK_THROWS_AS(Scenario::from_json(bad_kind), ParseError);
  nlohmann::json bad_type = base_json();
  bad_type["workload"][0]["type"] = "mystery";
  CHECK_THROWS_AS(Scenario::from_json(bad_type), ParseError);
  nlohmann::json bad_num = base_json();
  bad_num["t_end"] = "soon";
  CHECK_THROWS_AS(Scenario::from_json(bad_num), ParseError);
}

TEST_CASE("load_scenario resolves builtins and file paths") {
  Scenario builtin = load_scenario("fig4");
  CHECK(builtin.name == "fig4");

  Scenario from_file = load_scenario(repo_file("scenarios/fig4.json"));
  CHECK(from_file.to_json() == builtin.to_json());

  CHECK_THROWS_AS(load_scenario("/nonexistent/path.json"), ParseError);
}

TEST_CASE("load_file rejects invalid json") {
  std::string path = "bad_scenario_tmp.json";
  {
    std::ofstream out(path, std::ios::binary);
    out << "{ not json";
  }
  CHECK_THROWS_AS(Scenario::load_file(path), ParseError);
  std::remove(path.c_str());
}

TEST_CASE("validation errors are parse errors too") {
  // Callers treating every malformed input uniformly catch one type.
  nlohmann::json j = base_json();
  j["t_end"] = 0u;
  CHECK_THROWS_AS(Scenario::from_json(j), ParseError);
}
