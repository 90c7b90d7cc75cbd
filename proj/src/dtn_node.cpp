// SPDX-License-Identifier: Apache-2.0
#include "ccndtn/dtn_node.hpp"

#include <algorithm>

namespace ccndtn {

DtnNode::DtnNode(NodeId id, Eid self, Trace* trace)
    : id_(std::move(id)), self_(std::move(self)), trace_(trace) {}

void DtnNode::trace(TimeMs t, std::string event, nlohmann::json fields) const {
  if (trace_ != nullptr) {
    trace_->emit(t, id_, std::move(event), std::move(fields));
  }
}

void DtnNode::store(const Bundle& bundle, const NodeId& from, TimeMs now) {
  BundleCacheEntry entry{bundle, now, {}};
  if (from != id_) entry.forwarded_to.insert(from);
  cache_.push_back(std::move(entry));
  trace(now, "bundle_store",
        {{"id", bundle.id()},
         {"kind", bundle.bpq ? to_string(bundle.bpq->kind) : "plain"}});
}

DtnNode::ReceivePlan DtnNode::receive_bundle(const NodeId& from,
                                             const Bundle& bundle, TimeMs now,
                                             bool gateway_attached) {
  std::string id = bundle.id();
  if (seen_.count(id) != 0) {
    trace(now, "bundle_dup", {{"id", id}});
    return {ReceivePlan::Kind::DuplicateDrop, false, 0};
  }
  seen_.insert(id);

  bool local = from == id_;
  if (bundle.bpq && bundle.bpq->kind == BpqKind::Query) {
    if (auto matched = bpq_match(*bundle.bpq, now)) {
      trace(now, "bpq_hit",
            {{"query", id},
             {"response", cache_[*matched].bundle.id()},
             {"value", std::string(bundle.bpq->value.begin(),
                                   bundle.bpq->value.end())}});
      return {ReceivePlan::Kind::AnswerFromCache, false, *matched};
    }
    trace(now, "bpq_miss", {{"id", id},
                            {"value", std::string(bundle.bpq->value.begin(),
                                                  bundle.bpq->value.end())}});
    store(bundle, from, now);
    return {ReceivePlan::Kind::Stored, gateway_attached && !local, 0};
  }

  bool deliver = gateway_attached &&
                 (bundle.bpq.has_value() || bundle.destination == self_);
  store(bundle, from, now);
  return {ReceivePlan::Kind::Stored, deliver, 0};
}

void DtnNode::store_local(const Bundle& bundle, TimeMs now) {
  seen_.insert(bundle.id());
  store(bundle, id_, now);
}

std::optional<std::size_t> DtnNode::bpq_match(const BpqBlock& query,
                                              TimeMs now) const {
  std::optional<std::size_t> best;
  for (std::size_t i = 0; i < cache_.size(); ++i) {
    const Bundle& b = cache_[i].bundle;
    if (!b.bpq) continue;
    BpqKind k = b.bpq->kind;
    bool response_like = k == BpqKind::Response ||
                         k == BpqKind::ResponseDoNotFragment ||
                         (k == BpqKind::Publish && !b.payload.empty());
    if (!response_like) continue;
    if (b.bpq->fragment_count != 0) continue;  // incomplete never satisfies
    if (b.bpq->value != query.value) continue;
    if (now >= b.expires_at()) continue;
    if (!best || cache_[*best].bundle.creation_timestamp <
                     b.creation_timestamp) {
      best = i;
    }
  }
  return best;
}

std::vector<Bundle> DtnNode::collect_for_neighbor(const NodeId& neighbor,
                                                  TimeMs now) {
  Eid neighbor_eid = eid_for(neighbor);
  std::vector<std::size_t> eligible;
  for (std::size_t i = 0; i < cache_.size(); ++i) {
    const BundleCacheEntry& e = cache_[i];
    if (now >= e.bundle.expires_at()) continue;
    if (e.bundle.hop_limit == 0) continue;
    if (e.forwarded_to.count(neighbor) != 0) continue;
    eligible.push_back(i);
  }
  std::stable_sort(eligible.begin(), eligible.end(),
                   [&](std::size_t a, std::size_t b) {
                     const Bundle& ba = cache_[a].bundle;
                     const Bundle& bb = cache_[b].bundle;
                     bool da = ba.destination == neighbor_eid;
                     bool db = bb.destination == neighbor_eid;
                     if (da != db) return da;
                     return ba.creation_timestamp < bb.creation_timestamp;
                   });
  std::vector<Bundle> out;
  out.reserve(eligible.size());
  for (std::size_t i : eligible) {
    cache_[i].forwarded_to.insert(neighbor);
    Bundle copy = cache_[i].bundle;
    copy.hop_limit -= 1;
    out.push_back(std::move(copy));
  }
  return out;
}

std::vector<std::string> DtnNode::remove_queries_matching(const Bytes& value,
                                                          const Eid& source) {
  std::vector<std::string> removed;
  for (auto it = cache_.begin(); it != cache_.end();) {
    const Bundle& b = it->bundle;
    if (b.bpq && b.bpq->kind == BpqKind::Query && b.bpq->value == value &&
        b.source == source) {
      removed.push_back(b.id());
      it = cache_.erase(it);
    } else {
      ++it;
    }
  }
  return removed;
}

std::vector<DtnNode::ExpiryEvent> DtnNode::sweep_expired(TimeMs now) {
  std::vector<ExpiryEvent> out;
  for (auto it = cache_.begin(); it != cache_.end();) {
    if (now >= it->bundle.expires_at()) {
      out.push_back({it->bundle.id()});
      trace(now, "bundle_expire", {{"id", it->bundle.id()}});
      it = cache_.erase(it);
    } else {
      ++it;
    }
  }
  return out;
}

std::optional<TimeMs> DtnNode::earliest_expiry() const {
  std::optional<TimeMs> best;
  for (const auto& e : cache_) {
    TimeMs at = e.bundle.expires_at();
    if (!best || at < *best) best = at;
  }
  return best;
}

bool DtnNode::holds(const std::string& bundle_id) const {
  for (const auto& e : cache_) {
    if (e.bundle.id() == bundle_id) return true;
  }
  return false;
}

}  // namespace ccndtn
