// SPDX-License-Identifier: Apache-2.0
#include "ccndtn/gateway.hpp"

namespace ccndtn {

void Repository::put(const DataPacket& data, TimeMs now) {
  TimeMs ttl = data.freshness_ms != 0 ? data.freshness_ms : default_ttl_ms_;
  bool existing = entries_.count(data.name) != 0;
  entries_[data.name] = RepoEntry{data, now + ttl};
  if (!existing) {
    order_.push_back(data.name);
    order_pos_[data.name] = std::prev(order_.end());
    if (entries_.size() > capacity_) {
      Name victim = order_.front();
      entries_.erase(victim);
      order_.erase(order_pos_[victim]);
      order_pos_.erase(victim);
    }
  }
}

std::optional<DataPacket> Repository::get(const Name& name, TimeMs now) const {
  const RepoEntry* best = nullptr;
  std::size_t best_len = 0;
  for (auto it = entries_.lower_bound(name);
       it != entries_.end() && name.is_prefix_of(it->first); ++it) {
    if (now >= it->second.expires_at) continue;
    if (best == nullptr || it->first.size() > best_len) {
      best = &it->second;
      best_len = it->first.size();
    }
  }
  if (best == nullptr) return std::nullopt;
  return best->data;
}

Gateway::Gateway(NodeId node, Eid self, GatewayConfig cfg, Trace* trace)
    : node_(std::move(node)), self_(std::move(self)), cfg_(cfg), trace_(trace) {}

Bundle Gateway::make_query_bundle(const Interest& interest, Timestamp ts) const {
  Bundle b;
  b.source = self_;
  b.destination = cfg_.pseudo_destination;
  b.creation_timestamp = ts;
  b.lifetime_ms = cfg_.lifetime_multiplier_k * interest.lifetime_ms;
  b.hop_limit = cfg_.default_hop_limit;
  b.payload = encode_ccn_packet(interest);
  BpqBlock q;
  q.kind = BpqKind::Query;
  q.value = interest.name.to_bpq_value();
  q.original_creation_timestamp = ts;
  b.bpq = std::move(q);
  return b;
}

Bundle Gateway::make_publish_bundle(const Name& prefix,
                                    const std::optional<DataPacket>& content,
                                    Timestamp ts) const {
  Bundle b;
  b.source = self_;
  b.destination = cfg_.pseudo_destination;
  b.creation_timestamp = ts;
  b.lifetime_ms = cfg_.lifetime_multiplier_k * cfg_.publish_base_lifetime_ms;
  b.hop_limit = cfg_.default_hop_limit;
  if (content) b.payload = encode_ccn_packet(*content);
  BpqBlock q;
  q.kind = BpqKind::Publish;
  q.value = prefix.to_bpq_value();
  q.original_creation_timestamp = ts;
  b.bpq = std::move(q);
  return b;
}

Bundle Gateway::make_response_bundle(const BpqBlock& query, const Eid& dest,
                                     const DataPacket& content,
                                     std::uint64_t lifetime_ms,
                                     Timestamp ts) const {
  Bundle b;
  b.source = self_;
  b.destination = dest;
  b.creation_timestamp = ts;
  b.lifetime_ms = lifetime_ms;
  b.hop_limit = cfg_.default_hop_limit;
  b.payload = encode_ccn_packet(content);
  BpqBlock r;
  r.kind = BpqKind::Response;
  r.value = query.value;
  r.original_creation_timestamp = query.original_creation_timestamp;
  b.bpq = std::move(r);
  return b;
}

Bundle Gateway::make_response_from_cached(const Bundle& cached, const Eid& dest,
                                          std::uint64_t lifetime_ms,
                                          Timestamp ts) const {
  Bundle b;
  b.source = self_;
  b.destination = dest;
  b.creation_timestamp = ts;
  b.lifetime_ms = lifetime_ms;
  b.hop_limit = cfg_.default_hop_limit;
  b.payload = cached.payload;
  BpqBlock r;
  r.kind = BpqKind::Response;
  r.value = cached.bpq ? cached.bpq->value : Bytes{};
  r.original_creation_timestamp =
      cached.bpq ? cached.bpq->original_creation_timestamp : Timestamp{};
  b.bpq = std::move(r);
  return b;
}

std::optional<StatusResponse> Gateway::status_response(const Name& name) const {
  if (!cfg_.status_response_enabled) return std::nullopt;
  return StatusResponse{name, 450};
}

void Gateway::register_pending_query(const Bundle& query, const Name& name,
                                     TimeMs now) {
  // one pending slot per (name, source)
  for (const auto& p : pending_) {
    if (p.name == name && p.source == query.source) return;
  }
  PendingQuery p;
  p.name = name;
  p.source = query.source;
  p.query_id = query.id();
  p.lifetime_ms = query.lifetime_ms;
  p.expires_at = query.expires_at();
  if (query.bpq) p.original = query.bpq->original_creation_timestamp;
  if (trace_ != nullptr) {
    trace_->emit(now, node_, "pending_query",
                 {{"name", name.to_string()},
                  {"source", query.source.to_string()},
                  {"id", p.query_id}});
  }
  pending_.push_back(std::move(p));
}

std::vector<PendingQuery> Gateway::take_pending_matching(const Name& data_name,
                                                         TimeMs now) {
  std::vector<PendingQuery> out;
  std::vector<PendingQuery> keep;
  for (auto& p : pending_) {
    if (now >= p.expires_at) continue;  // expired entries vanish
    if (p.name.is_prefix_of(data_name)) {
      out.push_back(std::move(p));
    } else {
      keep.push_back(std::move(p));
    }
  }
  pending_ = std::move(keep);
  return out;
}

}  // namespace ccndtn
