// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <optional>
#include <string>
#include <variant>
#include <vector>

#include <json.hpp>

#include "ccndtn/gateway.hpp"
#include "ccndtn/simnet.hpp"

namespace ccndtn {

// Structurally valid JSON that violates scenario rules.
struct ValidationError : ParseError {
  using ParseError::ParseError;
};

// Make `prefix` available under the node's repository and FIB; gateways
// also flood a publish bundle (announcement, or the content itself when
// carry_content is set).
struct PublishAction {
  NodeId node;
  Name prefix;
  TimeMs at = 0;
  std::uint64_t content_size = 0;    // 0 = announce only, no stored content
  std::optional<Name> content_name;  // defaults to prefix
  bool carry_content = false;
};

// Consumer request: express an interest, re-express on an interval until
// satisfied or the re-expression budget is spent.
struct RequestAction {
  NodeId node;
  Name name;
  TimeMs at = 0;
  TimeMs reexpress_interval_ms = 4000;
  std::uint32_t max_reexpressions = 0;
  TimeMs lifetime_ms = 4000;
};

using WorkloadAction = std::variant<PublishAction, RequestAction>;

struct NodeSpec {
  NodeId id;
  bool ccn = false;
  bool dtn = false;
  bool gateway = false;
};

// Static FIB entry: prefix reachable via the link to neighbor `via`.
struct RouteSpec {
  NodeId node;
  Name prefix;
  NodeId via;
};

struct Scenario {
  std::string name;
  std::string notes;
  TimeMs t_end = 0;
  std::uint64_t seed = 1;
  std::size_t cs_capacity = 1024;
  bool jitter = false;  // +-10% on re-expression intervals
  GatewayConfig gateway;
  std::vector<NodeSpec> nodes;
  std::vector<Link> links;
  std::vector<RouteSpec> routes;
  std::vector<WorkloadAction> workload;

  const NodeSpec* find_node(const NodeId& id) const;

  // Structural rules: declared unique node ids, links and routes between
  // declared nodes, gateway implies ccn+dtn, link kinds match node roles,
  // schedules well-formed, workload nodes exist, "any" reserved.
  void validate() const;

  static Scenario from_json(const nlohmann::json& j);
  static Scenario load_file(const std::string& path);
  nlohmann::json to_json() const;
};

// Built-in scenarios compiled into the library.
const std::vector<std::string>& builtin_scenario_names();
bool is_builtin_scenario(const std::string& name);
const std::string& builtin_scenario_text(const std::string& name);

// `ref` names a builtin or a JSON file path.
Scenario load_scenario(const std::string& ref);

}  // namespace ccndtn
