// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "ccndtn/ccn_node.hpp"
#include "ccndtn/dtn_node.hpp"
#include "ccndtn/gateway.hpp"
#include "ccndtn/metrics.hpp"
#include "ccndtn/rng.hpp"
#include "ccndtn/scenario.hpp"
#include "ccndtn/simnet.hpp"
#include "ccndtn/trace.hpp"

namespace ccndtn {

struct SimResult {
  std::vector<TraceEvent> trace;
  Metrics metrics;
  Engine::RunSummary summary;
};

// One simulated host: CCN forwarder, bundle daemon, gateway glue and the
// shared repository, wired per the node's roles.
struct SimNode {
  NodeSpec spec;
  Eid eid;
  CcnNode ccn;
  DtnNode dtn;
  Gateway gw;
  Repository repo;
  int app_face = -1;
  int repo_face = -1;
  int bundle_face = -1;
  std::map<int, int> face_to_link;  // ccn link face -> engine link index
  std::map<int, int> link_to_face;  // engine link index -> ccn link face
  std::vector<std::pair<int, NodeId>> dtn_links;  // (link index, peer)
  Timestamp last_ts;
  bool ts_used = false;
  std::optional<TimeMs> ccn_sweep_at;
  std::optional<TimeMs> dtn_sweep_at;
};

// Drives one scenario: instantiates the nodes, routes packets and bundles
// between the protocol state machines and the event engine, runs consumers
// and publishers, and records the trace.
class Sim : public EngineHandler {
 public:
  explicit Sim(Scenario scenario);
  Sim(const Sim&) = delete;
  Sim& operator=(const Sim&) = delete;

  SimResult run();

  const Scenario& scenario() const { return scenario_; }
  const Trace& trace() const { return trace_; }
  const CcnNode& ccn(const NodeId& id) const { return node(id).ccn; }
  const DtnNode& dtn(const NodeId& id) const { return node(id).dtn; }
  const Repository& repo(const NodeId& id) const { return node(id).repo; }
  bool request_satisfied(std::size_t workload_index) const;

  void on_deliver(const FrameEvent& e, TimeMs now) override;
  void on_link_up(int link, TimeMs now) override;
  void on_link_down(int link, TimeMs now) override;
  void on_timer(const TimerEvent& e, TimeMs now) override;
  void on_workload(const WorkloadEvent& e, TimeMs now) override;

 private:
  struct ConsumerState {
    RequestAction spec;
    std::string request_id;
    bool satisfied = false;
    std::uint32_t expressions = 0;  // sent so far
    TimeMs last_expression_at = 0;
    TimeMs interval = 0;  // current; grows on status-response backoff
    std::uint64_t generation = 0;
  };

  SimNode& node(const NodeId& id);
  const SimNode& node(const NodeId& id) const;
  Timestamp fresh_timestamp(SimNode& n, TimeMs now);
  TimeMs jittered(TimeMs interval);

  void do_publish(const PublishAction& p, TimeMs now);
  void express(std::size_t action_index, ConsumerState& c, TimeMs now);
  void schedule_expression(std::size_t action_index, const ConsumerState& c,
                           TimeMs now);

  void handle_interest_at(SimNode& n, int in_face, const Interest& interest,
                          TimeMs now);
  void handle_data_at(SimNode& n, int in_face, const DataPacket& data,
                      TimeMs now);
  void handle_status_at(SimNode& n, int in_face, const StatusResponse& sr,
                        TimeMs now);
  void dispatch_emission(SimNode& n, const Emission& em, TimeMs now,
                         bool* crossed);
  void transmit_packet(SimNode& n, int face, const CcnPacket& packet,
                       TimeMs now);

  void cross_interest(SimNode& n, const Interest& interest, TimeMs now);
  void data_on_bundle_face(SimNode& n, const DataPacket& data, TimeMs now);
  void dtn_ingest(SimNode& n, const NodeId& from, const Bundle& b, TimeMs now);
  void answer_query_from_cache(SimNode& n, const Bundle& query,
                               const Bundle& matched, TimeMs now);
  void gateway_handle(SimNode& n, const Bundle& b, TimeMs now);
  void suppress_queries(SimNode& n, const Bytes& value, const Eid& source,
                        TimeMs now);

  void consumer_deliver(SimNode& n, const DataPacket& data, TimeMs now);
  void consumer_status(SimNode& n, const StatusResponse& sr, TimeMs now);

  void push_to_neighbor(SimNode& n, int link, const NodeId& peer, TimeMs now);
  void push_to_active_contacts(SimNode& n, TimeMs now);
  void ensure_ccn_sweep(SimNode& n, TimeMs now);
  void ensure_dtn_sweep(SimNode& n, TimeMs now);

  Scenario scenario_;
  Trace trace_;
  Engine engine_;
  std::map<NodeId, std::unique_ptr<SimNode>> nodes_;
  std::map<std::size_t, ConsumerState> consumers_;  // workload index -> state
  SplitMix64 nonce_rng_;
  SplitMix64 jitter_rng_;
};

SimResult run_scenario(const Scenario& scenario);

}  // namespace ccndtn
