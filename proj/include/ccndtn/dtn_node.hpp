// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <optional>
#include <set>
#include <string>
#include <vector>

#include "ccndtn/trace.hpp"
#include "ccndtn/wire.hpp"

namespace ccndtn {

using NodeId = std::string;

struct BundleCacheEntry {
  Bundle bundle;
  TimeMs received_at = 0;
  std::set<NodeId> forwarded_to;  // neighbors this copy was already sent to
};

// Bundle daemon: persistent cache, duplicate suppression, epidemic
// forwarding and BPQ query matching. Pure state machine like CcnNode;
// the driving code performs transmissions and gateway hand-off.
class DtnNode {
 public:
  DtnNode() = default;
  DtnNode(NodeId id, Eid self, Trace* trace = nullptr);

  const NodeId& id() const { return id_; }
  const Eid& self() const { return self_; }

  struct ReceivePlan {
    enum class Kind : std::uint8_t {
      DuplicateDrop,    // bundle id already seen
      AnswerFromCache,  // query matched a complete response; not stored
      Stored,           // added to the cache
    };
    Kind kind = Kind::Stored;
    bool deliver_to_gateway = false;  // Stored only
    // AnswerFromCache only; index into cache() of the matched bundle,
    // valid until the cache is next mutated.
    std::size_t matched_index = 0;
  };

  // Ingest one bundle. `from` is the sending node (== id() for bundles
  // originated locally). `gateway_attached` gates gateway delivery:
  //  - duplicates drop;
  //  - queries matching a cached complete response are answered, not stored
  //    (the query is not forwarded further);
  //  - unmatched remote queries store and go to the gateway for CCN-side
  //    resolution; self-originated queries store silently;
  //  - responses, publishes and bundles addressed to self store and go to
  //    the gateway; anything else just stores.
  ReceivePlan receive_bundle(const NodeId& from, const Bundle& bundle,
                             TimeMs now, bool gateway_attached);

  // Store a locally created bundle (publish/query/response origination).
  void store_local(const Bundle& bundle, TimeMs now);

  // Newest unexpired complete response whose value equals the query value.
  // Publish bundles count only when they carry content.
  std::optional<std::size_t> bpq_match(const BpqBlock& query, TimeMs now) const;

  // Epidemic step for one contact: every stored bundle that is unexpired,
  // has hops left and was not yet sent to `neighbor`, destination matches
  // first, then oldest creation first. Returned copies have hop_limit
  // already decremented; the stored copies are marked as forwarded.
  std::vector<Bundle> collect_for_neighbor(const NodeId& neighbor, TimeMs now);

  // Drop stored queries answered elsewhere: same value, same querying
  // source. Returns removed bundle ids.
  std::vector<std::string> remove_queries_matching(const Bytes& value,
                                                   const Eid& source);

  struct ExpiryEvent {
    std::string bundle_id;
  };
  std::vector<ExpiryEvent> sweep_expired(TimeMs now);
  std::optional<TimeMs> earliest_expiry() const;

  bool seen(const std::string& bundle_id) const {
    return seen_.count(bundle_id) != 0;
  }
  bool holds(const std::string& bundle_id) const;
  const std::vector<BundleCacheEntry>& cache() const { return cache_; }

  static Eid eid_for(const NodeId& node) { return Eid{"dtn", node}; }

 private:
  void store(const Bundle& bundle, const NodeId& from, TimeMs now);
  void trace(TimeMs t, std::string event, nlohmann::json fields) const;

  NodeId id_;
  Eid self_;
  Trace* trace_ = nullptr;

  std::vector<BundleCacheEntry> cache_;  // arrival order
  std::set<std::string> seen_;           // persists past removal
};

}  // namespace ccndtn
