// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>
#include <queue>
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

#include "ccndtn/wire.hpp"

namespace ccndtn {

using NodeId = std::string;

struct ContactInterval {
  TimeMs up_at = 0;
  TimeMs down_at = 0;  // half-open: up during [up_at, down_at)

  bool operator==(const ContactInterval&) const = default;
};

// Empty interval list = always up. Intervals must be well-formed and
// strictly increasing.
struct ContactSchedule {
  std::vector<ContactInterval> intervals;

  bool always_up() const { return intervals.empty(); }
  bool up_at(TimeMs t) const;
  void validate() const;  // throws ParseError

  bool operator==(const ContactSchedule&) const = default;
};

enum class LinkKind : std::uint8_t {
  CcnFace,     // carries CCN packets between forwarder faces
  DtnContact,  // carries bundles between daemons
};

const char* to_string(LinkKind k);

struct Link {
  NodeId a;
  NodeId b;
  LinkKind kind = LinkKind::CcnFace;
  TimeMs latency_ms = 10;
  ContactSchedule schedule;

  std::string label() const { return a + "-" + b; }

  bool operator==(const Link&) const = default;
};

// --- event payloads ---------------------------------------------------------

// A frame in flight. Frames already transmitted are delivered even if the
// link goes down before arrival; availability is decided at send time.
struct FrameEvent {
  int link = -1;
  NodeId from;
  NodeId to;
  Bytes frame;
};

struct LinkUpEvent {
  int link = -1;
};

struct LinkDownEvent {
  int link = -1;
};

struct TimerEvent {
  NodeId node;
  std::string tag;
};

struct WorkloadEvent {
  std::size_t action = 0;      // index into the scenario workload
  std::uint32_t expression = 0;  // re-expression counter for requests
  std::uint64_t generation = 0;  // bumped on backoff rescheduling
};

using EventPayload = std::variant<FrameEvent, LinkUpEvent, LinkDownEvent,
                                  TimerEvent, WorkloadEvent>;

// Receives dispatched events. Callbacks may schedule further events.
class EngineHandler {
 public:
  virtual ~EngineHandler() = default;
  virtual void on_deliver(const FrameEvent& e, TimeMs now) = 0;
  virtual void on_link_up(int link, TimeMs now) {}
  virtual void on_link_down(int link, TimeMs now) {}
  virtual void on_timer(const TimerEvent& e, TimeMs now) {}
  virtual void on_workload(const WorkloadEvent& e, TimeMs now) {}
};

// Deterministic discrete-event engine. Events execute in (at, seq) order
// where seq is assigned at schedule time, so same-time events run FIFO.
class Engine {
 public:
  explicit Engine(EngineHandler& handler) : handler_(&handler) {}

  // Registers a link and schedules its contact transitions. Returns the
  // link index used by transmit() and the handler callbacks.
  int add_link(Link link);
  const Link& link(int index) const { return links_.at(index); }
  std::size_t link_count() const { return links_.size(); }

  // Availability is a pure function of the schedule and t.
  bool link_is_up(int index, TimeMs t) const {
    return links_.at(index).schedule.up_at(t);
  }

  TimeMs now() const { return clock_; }

  void schedule(TimeMs at, EventPayload payload);

  // Sends one frame if the link is up right now; returns false (frame
  // dropped) otherwise. Delivery happens at now + latency.
  bool transmit(int link_index, const NodeId& from, Bytes frame);

  struct RunSummary {
    TimeMs clock = 0;
    std::size_t executed = 0;
    std::size_t remaining = 0;
  };

  // Dispatches every event with at <= t_end, then advances the clock to
  // t_end. Callable repeatedly with increasing horizons.
  RunSummary run_until(TimeMs t_end);

 private:
  struct Queued {
    TimeMs at;
    std::uint64_t seq;
    EventPayload payload;
  };
  struct Later {
    bool operator()(const Queued& a, const Queued& b) const {
      if (a.at != b.at) return a.at > b.at;
      return a.seq > b.seq;
    }
  };

  EngineHandler* handler_;
  std::vector<Link> links_;
  std::priority_queue<Queued, std::vector<Queued>, Later> queue_;
  TimeMs clock_ = 0;
  std::uint64_t next_seq_ = 0;
  std::size_t executed_ = 0;
};

}  // namespace ccndtn
