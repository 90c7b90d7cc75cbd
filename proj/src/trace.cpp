// SPDX-License-Identifier: Apache-2.0
#include "ccndtn/trace.hpp"

namespace ccndtn {

nlohmann::json TraceEvent::to_json() const {
  nlohmann::json j = fields;
  if (!j.is_object()) j = nlohmann::json::object();
  j["t"] = t;
  j["node"] = node;
  j["event"] = event;
  return j;
}

TraceEvent TraceEvent::from_json(const nlohmann::json& j) {
  if (!j.is_object()) throw ParseError("trace record is not an object");
  if (!j.contains("t") || !j["t"].is_number_unsigned()) {
    throw ParseError("trace record missing unsigned 't'");
  }
  if (!j.contains("node") || !j["node"].is_string()) {
    throw ParseError("trace record missing string 'node'");
  }
  if (!j.contains("event") || !j["event"].is_string()) {
    throw ParseError("trace record missing string 'event'");
  }
  TraceEvent e;
  e.t = j["t"].get<std::uint64_t>();
  e.node = j["node"].get<std::string>();
  e.event = j["event"].get<std::string>();
  e.fields = j;
  e.fields.erase("t");
  e.fields.erase("node");
  e.fields.erase("event");
  return e;
}

std::string TraceEvent::to_line() const { return to_json().dump(); }

std::string Trace::to_jsonl() const {
  std::string out;
  for (const auto& e : events_) {
    out += e.to_line();
    out += '\n';
  }
  return out;
}

std::vector<TraceEvent> Trace::parse_jsonl(std::string_view text) {
  std::vector<TraceEvent> out;
  std::size_t start = 0;
  std::size_t lineno = 0;
  while (start < text.size()) {
    std::size_t nl = text.find('\n', start);
    std::string_view line = nl == std::string_view::npos
                                ? text.substr(start)
                                : text.substr(start, nl - start);
    ++lineno;
    if (!line.empty()) {
      nlohmann::json j = nlohmann::json::parse(line, nullptr, false);
      if (j.is_discarded()) {
        throw ParseError("trace line " + std::to_string(lineno) +
                         " is not valid JSON");
      }
      out.push_back(TraceEvent::from_json(j));
    }
    if (nl == std::string_view::npos) break;
    start = nl + 1;
  }
  return out;
}

}  // namespace ccndtn
