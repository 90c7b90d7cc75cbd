// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "ccndtn/trace.hpp"

namespace ccndtn {

// Run metrics, a pure function of the trace: feeding a saved trace back in
// reproduces them exactly.
struct Metrics {
  double delivery_ratio = 1.0;  // 1.0 when the scenario has no requests
  std::optional<double> mean_delivery_delay_ms;  // absent without deliveries
  std::uint64_t interest_transmissions = 0;  // expressions + link sends
  std::uint64_t bundle_transmissions = 0;
  std::uint64_t retransmissions = 0;  // re-expressions only
  std::map<std::string, std::uint64_t> cache_hits;  // per node; CS+repo+BPQ

  nlohmann::json to_json() const;

  bool operator==(const Metrics&) const = default;
};

Metrics collect_metrics(const std::vector<TraceEvent>& trace);

}  // namespace ccndtn
