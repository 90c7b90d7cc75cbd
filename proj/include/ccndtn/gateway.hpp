// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <list>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "ccndtn/trace.hpp"
#include "ccndtn/wire.hpp"

namespace ccndtn {

using NodeId = std::string;

struct GatewayConfig {
  // Query bundle lifetime = k * interest lifetime: bundles must outlive the
  // interests that spawned them to cover DTN disruption timescales.
  std::uint64_t lifetime_multiplier_k = 100;
  std::uint64_t default_hop_limit = 8;
  // Queries are not addressed to a concrete node; epidemic forwarding plus
  // the hop limit bound their spread.
  Eid pseudo_destination{"dtn", "any"};
  bool status_response_enabled = false;
  // Consumer re-expression interval multiplier applied per status response.
  std::uint64_t backoff_factor = 4;

  std::uint64_t publish_base_lifetime_ms = 4000;  // multiplied by k

  bool operator==(const GatewayConfig&) const = default;
};

struct RepoEntry {
  DataPacket data;
  TimeMs expires_at = 0;
};

// Name-addressed content repository, shared between the CCN side (repo
// face) and the DTN side (query resolution): both views of one store.
class Repository {
 public:
  explicit Repository(std::size_t capacity = 4096,
                      TimeMs default_ttl_ms = 3'600'000)
      : capacity_(capacity), default_ttl_ms_(default_ttl_ms) {}

  void put(const DataPacket& data, TimeMs now);

  // Longest unexpired entry whose name extends `name`; ties break to the
  // lexicographically smallest name.
  std::optional<DataPacket> get(const Name& name, TimeMs now) const;

  bool contains(const Name& name) const { return entries_.count(name) != 0; }
  std::size_t size() const { return entries_.size(); }

 private:
  std::size_t capacity_;
  TimeMs default_ttl_ms_;
  std::map<Name, RepoEntry> entries_;
  std::list<Name> order_;  // insertion order; front evicted on overflow
  std::map<Name, std::list<Name>::iterator> order_pos_;
};

// A remote query this gateway injected into its CCN side and still owes a
// response bundle for.
struct PendingQuery {
  Name name;
  Eid source;
  std::string query_id;
  std::uint64_t lifetime_ms = 0;  // of the query bundle
  TimeMs expires_at = 0;
  Timestamp original;  // query's original creation timestamp
};

// Protocol translation between a CCN forwarder and a bundle daemon living
// on the same node. Builds bundles and status responses and tracks pending
// remote queries; the simulation host wires its pieces together.
class Gateway {
 public:
  Gateway() = default;
  Gateway(NodeId node, Eid self, GatewayConfig cfg, Trace* trace = nullptr);

  const GatewayConfig& config() const { return cfg_; }

  // Interest -> BPQ query bundle: value = canonical name text, payload =
  // encoded interest, lifetime = k * interest lifetime, pseudo destination.
  Bundle make_query_bundle(const Interest& interest, Timestamp ts) const;

  // Prefix announcement, optionally carrying the content item itself.
  Bundle make_publish_bundle(const Name& prefix,
                             const std::optional<DataPacket>& content,
                             Timestamp ts) const;

  // Complete response to `query`, carrying `content`, addressed to the
  // querying node. Preserves the query's value and original timestamp.
  Bundle make_response_bundle(const BpqBlock& query, const Eid& dest,
                              const DataPacket& content,
                              std::uint64_t lifetime_ms, Timestamp ts) const;

  // Response synthesized from a cached complete-response bundle.
  Bundle make_response_from_cached(const Bundle& cached, const Eid& dest,
                                   std::uint64_t lifetime_ms,
                                   Timestamp ts) const;

  // 450: content may exist but is reachable only over a disrupted path.
  std::optional<StatusResponse> status_response(const Name& name) const;

  void register_pending_query(const Bundle& query, const Name& name,
                              TimeMs now);
  // Pending queries satisfied by data named `data_name`, in registration
  // order; matched entries are removed.
  std::vector<PendingQuery> take_pending_matching(const Name& data_name,
                                                  TimeMs now);
  std::size_t pending_count() const { return pending_.size(); }

 private:
  NodeId node_;
  Eid self_;
  GatewayConfig cfg_;
  Trace* trace_ = nullptr;
  std::vector<PendingQuery> pending_;
};

}  // namespace ccndtn
