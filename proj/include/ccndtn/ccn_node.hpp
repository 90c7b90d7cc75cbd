// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <functional>
#include <list>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "ccndtn/trace.hpp"
#include "ccndtn/wire.hpp"

namespace ccndtn {

using NodeId = std::string;

enum class FaceKind : std::uint8_t {
  Link,          // point-to-point link to another node
  App,           // local application (consumer delivery)
  Repo,          // local repository lookup
  BundleDaemon,  // hand-off into the DTN daemon
};

const char* to_string(FaceKind k);

struct CsEntry {
  DataPacket data;
  TimeMs inserted_at = 0;
  TimeMs expires_at = 0;
};

struct PitEntry {
  std::set<int> in_faces;
  std::set<int> out_faces;
  TimeMs expires_at = 0;
  std::set<std::array<std::uint8_t, 8>> nonces_seen;
};

enum class InterestDisposition : std::uint8_t {
  DuplicateNonce,  // dropped, nonce already seen on a live entry
  CsHit,           // answered from the content store
  Aggregated,      // collapsed onto a live PIT entry
  Forwarded,       // new PIT entry, sent upstream
  NoRoute,         // dropped, no viable face
};

const char* to_string(InterestDisposition d);

// A packet the node wants sent out of one of its faces.
struct Emission {
  int face = -1;
  CcnPacket packet;

  bool operator==(const Emission&) const = default;
};

struct InterestResult {
  InterestDisposition disposition = InterestDisposition::NoRoute;
  std::vector<Emission> emissions;
  bool used_fallback = false;
};

// CCN forwarder: content store, PIT and FIB plus the forwarding pipeline.
// Pure state machine; owns no I/O. Driving code routes the returned
// emissions. Copyable so tests can replay inputs against a snapshot.
class CcnNode {
 public:
  struct Config {
    std::size_t cs_capacity = 1024;        // 0 disables caching
    TimeMs default_freshness_ms = 60'000;  // for Data with freshness 0
  };

  CcnNode() = default;
  CcnNode(NodeId id, Config cfg, Trace* trace = nullptr);

  const NodeId& id() const { return id_; }
  const Config& config() const { return cfg_; }

  // Faces get sequential ids starting at 0 in creation order.
  int add_face(FaceKind kind);
  FaceKind face_kind(int face) const;
  std::size_t face_count() const { return faces_.size(); }

  // DTN strategy fallback: when the FIB yields no viable face, forward to
  // this face instead of dropping (unless it is the arrival face).
  void set_fallback_face(int face) { fallback_face_ = face; }

  // Link availability oracle; absent means every face is usable.
  void set_face_up_fn(std::function<bool(int)> fn) { face_up_ = std::move(fn); }

  // Forwarding pipeline: duplicate-nonce check, CS lookup, PIT aggregation,
  // FIB forwarding, drop. Exactly one branch applies per interest.
  InterestResult on_interest(int in_face, const Interest& interest, TimeMs now);

  // Consumes every live PIT entry whose name is a prefix of data.name,
  // caches the packet and returns one emission per downstream face.
  std::vector<Emission> on_data(int in_face, const DataPacket& data, TimeMs now);

  // Relays toward PIT downstream faces; the PIT entry is kept (only Data
  // consumes PIT state).
  std::vector<Emission> on_status(int in_face, const StatusResponse& sr,
                                  TimeMs now);

  void fib_add_route(const Name& prefix, int face);
  const std::map<Name, std::set<int>>& fib() const { return fib_; }
  const std::set<int>* fib_longest_prefix_match(const Name& name) const;

  void cs_insert(const DataPacket& data, TimeMs now);
  // Longest fresh entry whose name extends `name`; refreshes LRU recency.
  const CsEntry* cs_lookup(const Name& name, TimeMs now);
  bool cs_contains(const Name& name) const { return cs_.count(name) != 0; }
  std::size_t cs_size() const { return cs_.size(); }

  const std::map<Name, PitEntry>& pit() const { return pit_; }

  struct ExpiryEvent {
    enum class Kind : std::uint8_t { PitExpired, CsExpired } kind;
    Name name;
  };

  // Removes every PIT entry and CS entry whose expiry has passed.
  std::vector<ExpiryEvent> sweep_timeouts(TimeMs now);

  // Earliest future expiry across PIT and CS, for sweep scheduling.
  std::optional<TimeMs> earliest_expiry() const;

 private:
  bool face_usable(int face) const;
  void cs_touch(const Name& name);
  void cs_erase(const Name& name);
  void trace(TimeMs t, std::string event, nlohmann::json fields) const;

  NodeId id_;
  Config cfg_;
  Trace* trace_ = nullptr;

  std::vector<FaceKind> faces_;
  std::optional<int> fallback_face_;
  std::function<bool(int)> face_up_;

  std::map<Name, std::set<int>> fib_;
  std::map<Name, PitEntry> pit_;
  std::map<Name, CsEntry> cs_;
  std::list<Name> cs_lru_;  // front = least recently used
  std::map<Name, std::list<Name>::iterator> cs_lru_pos_;
};

}  // namespace ccndtn
