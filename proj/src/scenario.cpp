// SPDX-License-Identifier: Apache-2.0
#include "ccndtn/scenario.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <set>
#include <sstream>
#include <utility>

namespace ccndtn {

namespace {

bool valid_node_id(const std::string& id) {
  if (id.empty()) return false;
  for (unsigned char c : id) {
    if (!std::isalnum(c) && c != '_' && c != '-') return false;
  }
  return true;
}

const nlohmann::json& require(const nlohmann::json& j, const char* key) {
  if (!j.contains(key)) {
    throw ParseError(std::string("scenario missing required key '") + key +
                     "'");
  }
  return j[key];
}

std::uint64_t get_u64(const nlohmann::json& j, const char* key,
                      std::uint64_t fallback) {
  if (!j.contains(key)) return fallback;
  if (!j[key].is_number_unsigned()) {
    throw ParseError(std::string("'") + key +
                     "' must be a non-negative integer");
  }
  return j[key].get<std::uint64_t>();
}

std::string get_str(const nlohmann::json& j, const char* key) {
  const nlohmann::json& v = require(j, key);
  if (!v.is_string()) {
    throw ParseError(std::string("'") + key + "' must be a string");
  }
  return v.get<std::string>();
}

Name get_name(const nlohmann::json& j, const char* key) {
  return Name::parse(get_str(j, key));
}

}  // namespace

const NodeSpec* Scenario::find_node(const NodeId& id) const {
  for (const auto& n : nodes) {
    if (n.id == id) return &n;
  }
  return nullptr;
}

void Scenario::validate() const {
  if (t_end == 0) throw ValidationError("t_end must be positive");
  std::set<NodeId> ids;
  for (const auto& n : nodes) {
    if (!valid_node_id(n.id)) {
      throw ValidationError("bad node id '" + n.id +
                            "' (alphanumeric, '_' or '-')");
    }
    if (n.id == "any") {
      throw ValidationError("node id 'any' is reserved for the pseudo EID");
    }
    if (!ids.insert(n.id).second) {
      throw ValidationError("duplicate node id '" + n.id + "'");
    }
    if (n.gateway && !(n.ccn && n.dtn)) {
      throw ValidationError("gateway node '" + n.id +
                            "' must have both ccn and dtn roles");
    }
    if (!n.ccn && !n.dtn) {
      throw ValidationError("node '" + n.id + "' has no roles");
    }
  }
  std::set<std::pair<NodeId, NodeId>> pairs;
  for (const auto& l : links) {
    const NodeSpec* a = find_node(l.a);
    const NodeSpec* b = find_node(l.b);
    if (a == nullptr || b == nullptr) {
      throw ValidationError("link " + l.label() + " references unknown node");
    }
    if (l.a == l.b) throw ValidationError("link endpoints must differ");
    auto key = std::minmax(l.a, l.b);
    if (!pairs.insert({key.first, key.second}).second) {
      throw ValidationError("duplicate link between " + l.a + " and " + l.b);
    }
    if (l.kind == LinkKind::CcnFace && (!a->ccn || !b->ccn)) {
      throw ValidationError("ccn link " + l.label() +
                            " requires ccn role at both ends");
    }
    if (l.kind == LinkKind::DtnContact && (!a->dtn || !b->dtn)) {
      throw ValidationError("dtn link " + l.label() +
                            " requires dtn role at both ends");
    }
    if (l.latency_ms == 0) {
      throw ValidationError("link " + l.label() + " latency must be positive");
    }
    try {
      l.schedule.validate();
    } catch (const ParseError& e) {
      throw ValidationError("link " + l.label() + ": " + e.what());
    }
  }
  for (const auto& r : routes) {
    const NodeSpec* n = find_node(r.node);
    if (n == nullptr || !n->ccn) {
      throw ValidationError("route at unknown or non-ccn node '" + r.node +
                            "'");
    }
    bool linked = false;
    for (const auto& l : links) {
      if (l.kind != LinkKind::CcnFace) continue;
      if ((l.a == r.node && l.b == r.via) || (l.b == r.node && l.a == r.via)) {
        linked = true;
        break;
      }
    }
    if (!linked) {
      throw ValidationError("route at '" + r.node + "' via '" + r.via +
                            "' has no ccn link");
    }
  }
  for (const auto& action : workload) {
    if (const auto* p = std::get_if<PublishAction>(&action)) {
      const NodeSpec* n = find_node(p->node);
      if (n == nullptr || !n->ccn) {
        throw ValidationError("publish at unknown or non-ccn node '" +
                              p->node + "'");
      }
      if (p->carry_content && !n->gateway) {
        throw ValidationError("carry_content publish requires a gateway node");
      }
      if (p->carry_content && p->content_size == 0) {
        throw ValidationError("carry_content publish requires content_size");
      }
      if (p->content_name && !p->prefix.is_prefix_of(*p->content_name)) {
        throw ValidationError("content_name must extend the published prefix");
      }
      if (p->at >= t_end) {
        throw ValidationError("publish scheduled at or after t_end");
      }
    } else {
      const auto& r = std::get<RequestAction>(action);
      const NodeSpec* n = find_node(r.node);
      if (n == nullptr || !n->ccn) {
        throw ValidationError("request at unknown or non-ccn node '" + r.node +
                              "'");
      }
      if (r.lifetime_ms == 0) {
        throw ValidationError("request lifetime must be positive");
      }
      if (r.reexpress_interval_ms == 0) {
        throw ValidationError("re-expression interval must be positive");
      }
      if (r.at >= t_end) {
        throw ValidationError("request scheduled at or after t_end");
      }
    }
  }
  if (gateway.lifetime_multiplier_k == 0) {
    throw ValidationError("gateway lifetime multiplier must be positive");
  }
  if (gateway.backoff_factor < 2) {
    throw ValidationError("backoff factor must be at least 2");
  }
}

Scenario Scenario::from_json(const nlohmann::json& j) {
  if (!j.is_object()) throw ParseError("scenario must be a JSON object");
  Scenario s;
  s.name = j.contains("name") ? get_str(j, "name") : "";
  s.notes = j.contains("notes") ? get_str(j, "notes") : "";
  s.t_end = get_u64(j, "t_end", 0);
  s.seed = get_u64(j, "seed", 1);
  s.cs_capacity = static_cast<std::size_t>(get_u64(j, "cs_capacity", 1024));
  if (j.contains("jitter")) {
    if (!j["jitter"].is_boolean()) throw ParseError("'jitter' must be boolean");
    s.jitter = j["jitter"].get<bool>();
  }
  if (j.contains("gateway")) {
    const auto& g = j["gateway"];
    if (!g.is_object()) throw ParseError("'gateway' must be an object");
    s.gateway.lifetime_multiplier_k =
        get_u64(g, "lifetime_multiplier_k", s.gateway.lifetime_multiplier_k);
    s.gateway.default_hop_limit =
        get_u64(g, "hop_limit", s.gateway.default_hop_limit);
    if (g.contains("status_response")) {
      if (!g["status_response"].is_boolean()) {
        throw ParseError("'status_response' must be boolean");
      }
      s.gateway.status_response_enabled = g["status_response"].get<bool>();
    }
    s.gateway.backoff_factor =
        get_u64(g, "backoff_factor", s.gateway.backoff_factor);
  }
  for (const auto& nj : require(j, "nodes")) {
    NodeSpec n;
    n.id = get_str(nj, "id");
    if (nj.contains("roles")) {
      for (const auto& role : nj["roles"]) {
        std::string r = role.get<std::string>();
        if (r == "ccn") {
          n.ccn = true;
        } else if (r == "dtn") {
          n.dtn = true;
        } else if (r == "gateway") {
          n.gateway = true;
        } else {
          throw ParseError("unknown role '" + r + "'");
        }
      }
    }
    if (n.gateway) {
      n.ccn = true;
      n.dtn = true;
    }
    s.nodes.push_back(std::move(n));
  }
  if (j.contains("links")) {
    for (const auto& lj : j["links"]) {
      Link l;
      l.a = get_str(lj, "a");
      l.b = get_str(lj, "b");
      std::string kind = lj.contains("kind") ? get_str(lj, "kind") : "ccn";
      if (kind == "ccn") {
        l.kind = LinkKind::CcnFace;
      } else if (kind == "dtn") {
        l.kind = LinkKind::DtnContact;
      } else {
        throw ParseError("unknown link kind '" + kind + "'");
      }
      l.latency_ms = get_u64(lj, "latency_ms", 10);
      if (lj.contains("schedule")) {
        for (const auto& iv : lj["schedule"]) {
          if (!iv.is_array() || iv.size() != 2) {
            throw ParseError("schedule entries must be [up, down] pairs");
          }
          l.schedule.intervals.push_back(
              {iv[0].get<std::uint64_t>(), iv[1].get<std::uint64_t>()});
        }
      }
      s.links.push_back(std::move(l));
    }
  }
  if (j.contains("routes")) {
    for (const auto& rj : j["routes"]) {
      RouteSpec r;
      r.node = get_str(rj, "node");
      r.prefix = get_name(rj, "prefix");
      r.via = get_str(rj, "via");
      s.routes.push_back(std::move(r));
    }
  }
  if (j.contains("workload")) {
    for (const auto& wj : j["workload"]) {
      std::string type = get_str(wj, "type");
      if (type == "publish") {
        PublishAction p;
        p.node = get_str(wj, "node");
        p.prefix = get_name(wj, "prefix");
        p.at = get_u64(wj, "at", 0);
        p.content_size = get_u64(wj, "content_size", 0);
        if (wj.contains("content_name")) {
          p.content_name = get_name(wj, "content_name");
        }
        if (wj.contains("carry_content")) {
          p.carry_content = wj["carry_content"].get<bool>();
        }
        s.workload.emplace_back(std::move(p));
      } else if (type == "request") {
        RequestAction r;
        r.node = get_str(wj, "node");
        r.name = get_name(wj, "name");
        r.at = get_u64(wj, "at", 0);
        r.reexpress_interval_ms = get_u64(wj, "reexpress_interval_ms", 4000);
        r.max_reexpressions = static_cast<std::uint32_t>(
            get_u64(wj, "max_reexpressions", 0));
        r.lifetime_ms = get_u64(wj, "lifetime_ms", 4000);
        s.workload.emplace_back(std::move(r));
      } else {
        throw ParseError("unknown workload type '" + type + "'");
      }
    }
  }
  s.validate();
  return s;
}

nlohmann::json Scenario::to_json() const {
  nlohmann::json j;
  j["name"] = name;
  if (!notes.empty()) j["notes"] = notes;
  j["t_end"] = t_end;
  j["seed"] = seed;
  j["cs_capacity"] = cs_capacity;
  if (jitter) j["jitter"] = true;
  j["gateway"] = {{"lifetime_multiplier_k", gateway.lifetime_multiplier_k},
                  {"hop_limit", gateway.default_hop_limit},
                  {"status_response", gateway.status_response_enabled},
                  {"backoff_factor", gateway.backoff_factor}};
  j["nodes"] = nlohmann::json::array();
  for (const auto& n : nodes) {
    nlohmann::json roles = nlohmann::json::array();
    if (n.gateway) {
      roles.push_back("gateway");
    } else {
      if (n.ccn) roles.push_back("ccn");
      if (n.dtn) roles.push_back("dtn");
    }
    j["nodes"].push_back({{"id", n.id}, {"roles", roles}});
  }
  j["links"] = nlohmann::json::array();
  for (const auto& l : links) {
    nlohmann::json lj = {{"a", l.a},
                         {"b", l.b},
                         {"kind", to_string(l.kind)},
                         {"latency_ms", l.latency_ms}};
    if (!l.schedule.always_up()) {
      nlohmann::json sched = nlohmann::json::array();
      for (const auto& iv : l.schedule.intervals) {
        sched.push_back({iv.up_at, iv.down_at});
      }
      lj["schedule"] = sched;
    }
    j["links"].push_back(lj);
  }
  if (!routes.empty()) {
    j["routes"] = nlohmann::json::array();
    for (const auto& r : routes) {
      j["routes"].push_back(
          {{"node", r.node}, {"prefix", r.prefix.to_string()}, {"via", r.via}});
    }
  }
  j["workload"] = nlohmann::json::array();
  for (const auto& action : workload) {
    if (const auto* p = std::get_if<PublishAction>(&action)) {
      nlohmann::json wj = {{"type", "publish"},
                           {"node", p->node},
                           {"prefix", p->prefix.to_string()},
                           {"at", p->at}};
      if (p->content_size != 0) wj["content_size"] = p->content_size;
      if (p->content_name) wj["content_name"] = p->content_name->to_string();
      if (p->carry_content) wj["carry_content"] = true;
      j["workload"].push_back(wj);
    } else {
      const auto& r = std::get<RequestAction>(action);
      j["workload"].push_back({{"type", "request"},
                               {"node", r.node},
                               {"name", r.name.to_string()},
                               {"at", r.at},
                               {"reexpress_interval_ms", r.reexpress_interval_ms},
                               {"max_reexpressions", r.max_reexpressions},
                               {"lifetime_ms", r.lifetime_ms}});
    }
  }
  return j;
}

Scenario Scenario::load_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError("cannot open scenario file: " + path);
  std::stringstream buf;
  buf << in.rdbuf();
  nlohmann::json j = nlohmann::json::parse(buf.str(), nullptr, false);
  if (j.is_discarded()) {
    throw ParseError("scenario file is not valid JSON: " + path);
  }
  return from_json(j);
}

Scenario load_scenario(const std::string& ref) {
  if (is_builtin_scenario(ref)) {
    nlohmann::json j = nlohmann::json::parse(builtin_scenario_text(ref));
    return Scenario::from_json(j);
  }
  return Scenario::load_file(ref);
}

}  // namespace ccndtn
