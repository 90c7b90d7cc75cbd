// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "ccndtn/name.hpp"

namespace ccndtn {

// One trace record. Serialized as a flat JSON object: {"t":..., "node":...,
// "event":..., <event-specific fields>}. Keys are emitted in sorted order,
// so equal event sequences serialize to identical bytes.
struct TraceEvent {
  std::uint64_t t = 0;
  std::string node;  // "" for engine-level records
  std::string event;
  nlohmann::json fields = nlohmann::json::object();

  nlohmann::json to_json() const;
  static TraceEvent from_json(const nlohmann::json& j);
  std::string to_line() const;

  bool operator==(const TraceEvent&) const = default;
};

// Append-only event log for one simulation run.
class Trace {
 public:
  void emit(TraceEvent e) { events_.push_back(std::move(e)); }
  void emit(std::uint64_t t, std::string node, std::string event,
            nlohmann::json fields = nlohmann::json::object()) {
    events_.push_back({t, std::move(node), std::move(event), std::move(fields)});
  }

  const std::vector<TraceEvent>& events() const { return events_; }
  std::size_t size() const { return events_.size(); }

  // One JSON object per line, newline-terminated.
  std::string to_jsonl() const;

  // Throws ParseError on malformed lines or records.
  static std::vector<TraceEvent> parse_jsonl(std::string_view text);

 private:
  std::vector<TraceEvent> events_;
};

}  // namespace ccndtn
