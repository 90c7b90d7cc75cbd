// SPDX-License-Identifier: Apache-2.0
//
// ccndtn: scenario runner and wire-format inspector.
//
//   ccndtn run --scenario <file|builtin> [--seed N] [--trace F] [--metrics F]
//   ccndtn validate --scenario <file|builtin>
//   ccndtn list-scenarios
//   ccndtn wire dump <hexfile>
//
// Exit codes: 0 success, 2 malformed scenario or wire input, 1 other errors.

#include <cctype>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "ccndtn/sim.hpp"

namespace {

using namespace ccndtn;

int cmd_run(const std::string& ref, std::uint64_t seed, bool seed_set,
            const std::string& trace_path, const std::string& metrics_path) {
  Scenario scenario = load_scenario(ref);
  if (seed_set) scenario.seed = seed;
  Sim sim(scenario);
  SimResult result = sim.run();

  if (!trace_path.empty()) {
    std::ofstream out(trace_path, std::ios::binary);
    if (!out) {
      std::cerr << "error: cannot write trace file: " << trace_path << "\n";
      return 1;
    }
    Trace t;
    for (const auto& e : result.trace) t.emit(e);
    out << t.to_jsonl();
  }
  nlohmann::json metrics = result.metrics.to_json();
  if (!metrics_path.empty()) {
    std::ofstream out(metrics_path, std::ios::binary);
    if (!out) {
      std::cerr << "error: cannot write metrics file: " << metrics_path << "\n";
      return 1;
    }
    out << metrics.dump(2) << "\n";
  }
  nlohmann::json summary = metrics;
  summary["scenario"] = scenario.name;
  summary["seed"] = scenario.seed;
  summary["t_end"] = scenario.t_end;
  summary["events_executed"] = result.summary.executed;
  summary["trace_events"] = result.trace.size();
  std::cout << summary.dump(2) << "\n";
  return 0;
}

int cmd_validate(const std::string& ref) {
  Scenario scenario = load_scenario(ref);
  std::cout << "ok: scenario '" << scenario.name << "' with "
            << scenario.nodes.size() << " nodes, " << scenario.links.size()
            << " links, " << scenario.workload.size()
            << " workload actions\n";
  return 0;
}

int cmd_list() {
  for (const auto& name : builtin_scenario_names()) {
    std::cout << name << "\n";
  }
  return 0;
}

Bytes read_hex_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError("cannot open file: " + path);
  std::stringstream buf;
  buf << in.rdbuf();
  std::string text = buf.str();
  Bytes out;
  int hi = -1;
  for (char c : text) {
    int v;
    if (c >= '0' && c <= '9') {
      v = c - '0';
    } else if (c >= 'a' && c <= 'f') {
      v = c - 'a' + 10;
    } else if (c >= 'A' && c <= 'F') {
      v = c - 'A' + 10;
    } else if (std::isspace(static_cast<unsigned char>(c))) {
      continue;
    } else {
      throw ParseError(std::string("invalid hex character '") + c + "'");
    }
    if (hi < 0) {
      hi = v;
    } else {
      out.push_back(static_cast<std::uint8_t>((hi << 4) | v));
      hi = -1;
    }
  }
  if (hi >= 0) throw ParseError("odd number of hex digits");
  return out;
}

nlohmann::json packet_to_json(const CcnPacket& p) {
  nlohmann::json j;
  j["type"] = to_string(packet_kind(p));
  j["name"] = packet_name(p).to_string();
  if (const auto* i = std::get_if<Interest>(&p)) {
    std::string nonce;
    static const char* digits = "0123456789abcdef";
    for (auto b : i->nonce) {
      nonce += digits[b >> 4];
      nonce += digits[b & 0xF];
    }
    j["nonce"] = nonce;
    j["lifetime_ms"] = i->lifetime_ms;
  } else if (const auto* d = std::get_if<DataPacket>(&p)) {
    j["payload_bytes"] = d->payload.size();
    j["freshness_ms"] = d->freshness_ms;
    j["signature_bytes"] = d->signature_placeholder.size();
  } else {
    j["code"] = std::get<StatusResponse>(p).code;
  }
  return j;
}

nlohmann::json bundle_to_json(const Bundle& b) {
  nlohmann::json j;
  j["type"] = "bundle";
  j["id"] = b.id();
  j["source"] = b.source.to_string();
  j["destination"] = b.destination.to_string();
  j["creation_time_ms"] = b.creation_timestamp.time_ms;
  j["creation_seq"] = b.creation_timestamp.seq;
  j["lifetime_ms"] = b.lifetime_ms;
  j["hop_limit"] = b.hop_limit;
  j["payload_bytes"] = b.payload.size();
  if (b.bpq) {
    nlohmann::json q;
    q["kind"] = to_string(b.bpq->kind);
    q["value"] = std::string(b.bpq->value.begin(), b.bpq->value.end());
    q["original_time_ms"] = b.bpq->original_creation_timestamp.time_ms;
    q["original_seq"] = b.bpq->original_creation_timestamp.seq;
    q["fragment_count"] = b.bpq->fragment_count;
    j["bpq"] = q;
  }
  return j;
}

int cmd_wire_dump(const std::string& path) {
  Bytes frame = read_hex_file(path);
  if (frame.empty()) throw WireError("empty frame");
  WireDiagnostics diag;
  nlohmann::json j;
  if (frame[0] == kBundleFrameType) {
    j = bundle_to_json(decode_bundle(frame, &diag));
  } else {
    j = packet_to_json(decode_ccn_packet(frame, &diag));
  }
  j["frame_bytes"] = frame.size();
  if (!diag.notes.empty()) j["diagnostics"] = diag.notes;
  std::cout << j.dump(2) << "\n";
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"CCN/DTN protocol simulator"};
  app.require_subcommand(1);

  std::string scenario_ref;
  std::uint64_t seed = 0;
  std::string trace_path;
  std::string metrics_path;

  CLI::App* run = app.add_subcommand("run", "Run a scenario");
  run->add_option("--scenario", scenario_ref,
                  "Scenario file or builtin name")->required();
  CLI::Option* seed_opt =
      run->add_option("--seed", seed, "Override the scenario seed");
  run->add_option("--trace", trace_path, "Write the JSONL event trace here");
  run->add_option("--metrics", metrics_path, "Write the metrics JSON here");

  std::string validate_ref;
  CLI::App* validate = app.add_subcommand("validate", "Check a scenario");
  validate->add_option("--scenario", validate_ref,
                       "Scenario file or builtin name")->required();

  app.add_subcommand("list-scenarios", "List builtin scenarios");

  CLI::App* wire = app.add_subcommand("wire", "Wire-format utilities");
  wire->require_subcommand(1);
  std::string hex_path;
  CLI::App* dump = wire->add_subcommand("dump", "Decode a hex-encoded frame");
  dump->add_option("hexfile", hex_path, "File containing the frame as hex")
      ->required();

  CLI11_PARSE(app, argc, argv);

  try {
    if (run->parsed()) {
      return cmd_run(scenario_ref, seed, seed_opt->count() > 0, trace_path,
                     metrics_path);
    }
    if (validate->parsed()) return cmd_validate(validate_ref);
    if (app.get_subcommand("list-scenarios")->parsed()) return cmd_list();
    if (wire->parsed()) return cmd_wire_dump(hex_path);
  } catch (const ccndtn::WireError& e) {
    std::cerr << "wire error: " << e.what() << "\n";
    return 2;
  } catch (const ccndtn::ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 1;
}
