// SPDX-License-Identifier: Apache-2.0
#include "ccndtn/ccn_node.hpp"

namespace ccndtn {

const char* to_string(FaceKind k) {
  switch (k) {
    case FaceKind::Link: return "link";
    case FaceKind::App: return "app";
    case FaceKind::Repo: return "repo";
    case FaceKind::BundleDaemon: return "bundle";
  }
  return "?";
}

const char* to_string(InterestDisposition d) {
  switch (d) {
    case InterestDisposition::DuplicateNonce: return "duplicate_nonce";
    case InterestDisposition::CsHit: return "cs_hit";
    case InterestDisposition::Aggregated: return "aggregated";
    case InterestDisposition::Forwarded: return "forwarded";
    case InterestDisposition::NoRoute: return "no_route";
  }
  return "?";
}

CcnNode::CcnNode(NodeId id, Config cfg, Trace* trace)
    : id_(std::move(id)), cfg_(cfg), trace_(trace) {}

int CcnNode::add_face(FaceKind kind) {
  faces_.push_back(kind);
  return static_cast<int>(faces_.size()) - 1;
}

FaceKind CcnNode::face_kind(int face) const {
  return faces_.at(static_cast<std::size_t>(face));
}

bool CcnNode::face_usable(int face) const {
  return !face_up_ || face_up_(face);
}

void CcnNode::trace(TimeMs t, std::string event, nlohmann::json fields) const {
  if (trace_ != nullptr) {
    trace_->emit(t, id_, std::move(event), std::move(fields));
  }
}

InterestResult CcnNode::on_interest(int in_face, const Interest& interest,
                                    TimeMs now) {
  auto pit_it = pit_.find(interest.name);
  bool pit_live = pit_it != pit_.end() && now < pit_it->second.expires_at;

  // (1) duplicate nonce on a live entry
  if (pit_live && pit_it->second.nonces_seen.count(interest.nonce) != 0) {
    trace(now, "interest_dup_nonce", {{"name", interest.name.to_string()}});
    return {InterestDisposition::DuplicateNonce, {}, false};
  }

  // (2) content store
  if (const CsEntry* hit = cs_lookup(interest.name, now)) {
    trace(now, "cs_hit", {{"name", interest.name.to_string()},
                          {"data", hit->data.name.to_string()}});
    return {InterestDisposition::CsHit, {{in_face, hit->data}}, false};
  }

  // (3) aggregation onto a live entry
  if (pit_live) {
    PitEntry& e = pit_it->second;
    e.in_faces.insert(in_face);
    e.nonces_seen.insert(interest.nonce);
    e.expires_at = std::max(e.expires_at, now + interest.lifetime_ms);
    trace(now, "pit_aggregate",
          {{"name", interest.name.to_string()}, {"face", in_face}});
    return {InterestDisposition::Aggregated, {}, false};
  }

  // (4) FIB longest-prefix match, arrival face and down faces excluded
  std::set<int> viable;
  if (const std::set<int>* faces = fib_longest_prefix_match(interest.name)) {
    for (int f : *faces) {
      if (f != in_face && face_usable(f)) viable.insert(f);
    }
  }
  bool used_fallback = false;
  if (viable.empty() && fallback_face_ && *fallback_face_ != in_face) {
    viable.insert(*fallback_face_);
    used_fallback = true;
  }

  // (5) unroutable
  if (viable.empty()) {
    trace(now, "interest_no_route", {{"name", interest.name.to_string()}});
    return {InterestDisposition::NoRoute, {}, false};
  }

  PitEntry entry;
  entry.in_faces = {in_face};
  entry.out_faces = viable;
  entry.expires_at = now + interest.lifetime_ms;
  entry.nonces_seen = {interest.nonce};
  pit_[interest.name] = std::move(entry);
  trace(now, "pit_create", {{"name", interest.name.to_string()}});
  if (used_fallback) {
    trace(now, "dtn_fallback", {{"name", interest.name.to_string()}});
  }

  InterestResult result{InterestDisposition::Forwarded, {}, used_fallback};
  for (int f : viable) result.emissions.push_back({f, interest});
  return result;
}

std::vector<Emission> CcnNode::on_data(int in_face, const DataPacket& data,
                                       TimeMs now) {
  std::set<int> downstream;
  std::vector<Name> satisfied;
  for (const auto& [name, entry] : pit_) {
    if (now < entry.expires_at && name.is_prefix_of(data.name)) {
      downstream.insert(entry.in_faces.begin(), entry.in_faces.end());
      satisfied.push_back(name);
    }
  }
  if (satisfied.empty()) {
    trace(now, "data_unsolicited", {{"name", data.name.to_string()}});
    return {};
  }
  for (const auto& name : satisfied) {
    pit_.erase(name);
    trace(now, "pit_satisfied", {{"name", name.to_string()},
                                 {"data", data.name.to_string()}});
  }
  cs_insert(data, now);
  std::vector<Emission> out;
  for (int f : downstream) {
    if (f != in_face) out.push_back({f, data});
  }
  return out;
}

std::vector<Emission> CcnNode::on_status(int in_face, const StatusResponse& sr,
                                         TimeMs now) {
  auto it = pit_.find(sr.name);
  if (it == pit_.end() || now >= it->second.expires_at) {
    trace(now, "status_unsolicited",
          {{"name", sr.name.to_string()}, {"code", sr.code}});
    return {};
  }
  trace(now, "status_relay",
        {{"name", sr.name.to_string()}, {"code", sr.code}});
  std::vector<Emission> out;
  for (int f : it->second.in_faces) {
    if (f != in_face) out.push_back({f, sr});
  }
  return out;
}

void CcnNode::fib_add_route(const Name& prefix, int face) {
  fib_[prefix].insert(face);
}

const std::set<int>* CcnNode::fib_longest_prefix_match(const Name& name) const {
  const std::set<int>* best = nullptr;
  std::size_t best_len = 0;
  for (const auto& [prefix, faces] : fib_) {
    if (prefix.is_prefix_of(name) &&
        (best == nullptr || prefix.size() >= best_len)) {
      // map order guarantees later equal-length prefixes never occur:
      // prefixes of one name at the same length are identical
      best = &faces;
      best_len = prefix.size();
    }
  }
  return best;
}

void CcnNode::cs_touch(const Name& name) {
  auto pos = cs_lru_pos_.find(name);
  if (pos == cs_lru_pos_.end()) return;
  cs_lru_.erase(pos->second);
  cs_lru_.push_back(name);
  pos->second = std::prev(cs_lru_.end());
}

void CcnNode::cs_erase(const Name& name) {
  cs_.erase(name);
  auto pos = cs_lru_pos_.find(name);
  if (pos != cs_lru_pos_.end()) {
    cs_lru_.erase(pos->second);
    cs_lru_pos_.erase(pos);
  }
}

void CcnNode::cs_insert(const DataPacket& data, TimeMs now) {
  if (cfg_.cs_capacity == 0) return;
  TimeMs freshness =
      data.freshness_ms != 0 ? data.freshness_ms : cfg_.default_freshness_ms;
  bool existing = cs_.count(data.name) != 0;
  cs_[data.name] = CsEntry{data, now, now + freshness};
  if (existing) {
    cs_touch(data.name);
  } else {
    cs_lru_.push_back(data.name);
    cs_lru_pos_[data.name] = std::prev(cs_lru_.end());
    if (cs_.size() > cfg_.cs_capacity) {
      Name victim = cs_lru_.front();
      cs_erase(victim);
      trace(now, "cs_evict", {{"name", victim.to_string()}});
    }
  }
  trace(now, "cs_insert", {{"name", data.name.to_string()}});
}

const CsEntry* CcnNode::cs_lookup(const Name& name, TimeMs now) {
  // entries extending `name` are contiguous from lower_bound in name order
  const Name* best = nullptr;
  for (auto it = cs_.lower_bound(name);
       it != cs_.end() && name.is_prefix_of(it->first); ++it) {
    if (now >= it->second.expires_at) continue;
    if (best == nullptr || it->first.size() > best->size()) {
      best = &it->first;
    }
  }
  if (best == nullptr) return nullptr;
  cs_touch(*best);
  return &cs_[*best];
}

std::vector<CcnNode::ExpiryEvent> CcnNode::sweep_timeouts(TimeMs now) {
  std::vector<ExpiryEvent> out;
  std::vector<Name> dead;
  for (const auto& [name, entry] : pit_) {
    if (entry.expires_at <= now) dead.push_back(name);
  }
  for (const auto& name : dead) {
    pit_.erase(name);
    trace(now, "pit_expire", {{"name", name.to_string()}});
    out.push_back({ExpiryEvent::Kind::PitExpired, name});
  }
  dead.clear();
  for (const auto& [name, entry] : cs_) {
    if (entry.expires_at <= now) dead.push_back(name);
  }
  for (const auto& name : dead) {
    cs_erase(name);
    trace(now, "cs_expire", {{"name", name.to_string()}});
    out.push_back({ExpiryEvent::Kind::CsExpired, name});
  }
  return out;
}

std::optional<TimeMs> CcnNode::earliest_expiry() const {
  std::optional<TimeMs> best;
  for (const auto& [name, entry] : pit_) {
    if (!best || entry.expires_at < *best) best = entry.expires_at;
  }
  for (const auto& [name, entry] : cs_) {
    if (!best || entry.expires_at < *best) best = entry.expires_at;
  }
  return best;
}

}  // namespace ccndtn
