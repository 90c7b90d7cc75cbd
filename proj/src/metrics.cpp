// SPDX-License-Identifier: Apache-2.0
#include "ccndtn/metrics.hpp"

namespace ccndtn {

namespace {

std::string field_str(const TraceEvent& e, const char* key) {
  if (!e.fields.contains(key) || !e.fields[key].is_string()) {
    throw ParseError("trace event '" + e.event + "' missing string '" + key +
                     "'");
  }
  return e.fields[key].get<std::string>();
}

std::uint64_t field_u64(const TraceEvent& e, const char* key) {
  if (!e.fields.contains(key) || !e.fields[key].is_number_unsigned()) {
    throw ParseError("trace event '" + e.event + "' missing unsigned '" + key +
                     "'");
  }
  return e.fields[key].get<std::uint64_t>();
}

}  // namespace

nlohmann::json Metrics::to_json() const {
  nlohmann::json j;
  j["delivery_ratio"] = delivery_ratio;
  if (mean_delivery_delay_ms) {
    j["mean_delivery_delay_ms"] = *mean_delivery_delay_ms;
  }
  j["interest_transmissions"] = interest_transmissions;
  j["bundle_transmissions"] = bundle_transmissions;
  j["retransmissions"] = retransmissions;
  j["cache_hits"] = cache_hits;
  return j;
}

Metrics collect_metrics(const std::vector<TraceEvent>& trace) {
  Metrics m;
  std::map<std::string, std::uint64_t> first_express;  // request -> t
  std::map<std::string, std::uint64_t> delivered;      // request -> delay
  for (const auto& e : trace) {
    if (e.event == "express") {
      std::string request = field_str(e, "request");
      ++m.interest_transmissions;
      if (field_u64(e, "expression") > 0) ++m.retransmissions;
      first_express.emplace(request, e.t);
    } else if (e.event == "interest_send") {
      ++m.interest_transmissions;
    } else if (e.event == "bundle_send") {
      ++m.bundle_transmissions;
    } else if (e.event == "cs_hit" || e.event == "repo_hit" ||
               e.event == "bpq_hit") {
      ++m.cache_hits[e.node];
    } else if (e.event == "data_deliver") {
      std::string request = field_str(e, "request");
      auto it = first_express.find(request);
      if (it == first_express.end()) {
        throw ParseError("data_deliver for unknown request '" + request + "'");
      }
      delivered.emplace(request, e.t - it->second);
    }
  }
  if (!first_express.empty()) {
    m.delivery_ratio = static_cast<double>(delivered.size()) /
                       static_cast<double>(first_express.size());
  }
  if (!delivered.empty()) {
    double sum = 0;
    for (const auto& [request, delay] : delivered) {
      sum += static_cast<double>(delay);
    }
    m.mean_delivery_delay_ms = sum / static_cast<double>(delivered.size());
  }
  return m;
}

}  // namespace ccndtn
