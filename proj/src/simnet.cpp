// SPDX-License-Identifier: Apache-2.0
#include "ccndtn/simnet.hpp"

#include <type_traits>

#include "ccndtn/name.hpp"

namespace ccndtn {

bool ContactSchedule::up_at(TimeMs t) const {
  if (intervals.empty()) return true;
  for (const auto& iv : intervals) {
    if (t >= iv.up_at && t < iv.down_at) return true;
    if (iv.up_at > t) break;  // sorted; later intervals cannot match
  }
  return false;
}

void ContactSchedule::validate() const {
  TimeMs prev_end = 0;
  bool first = true;
  for (const auto& iv : intervals) {
    if (iv.down_at <= iv.up_at) {
      throw ParseError("contact interval must end after it starts");
    }
    if (!first && iv.up_at < prev_end) {
      throw ParseError("contact intervals must not overlap or go backwards");
    }
    prev_end = iv.down_at;
    first = false;
  }
}

const char* to_string(LinkKind k) {
  switch (k) {
    case LinkKind::CcnFace: return "ccn";
    case LinkKind::DtnContact: return "dtn";
  }
  return "?";
}

int Engine::add_link(Link link) {
  link.schedule.validate();
  int index = static_cast<int>(links_.size());
  links_.push_back(std::move(link));
  for (const auto& iv : links_.back().schedule.intervals) {
    schedule(iv.up_at, LinkUpEvent{index});
    schedule(iv.down_at, LinkDownEvent{index});
  }
  return index;
}

void Engine::schedule(TimeMs at, EventPayload payload) {
  if (at < clock_) {
    throw std::logic_error("cannot schedule an event in the past");
  }
  queue_.push(Queued{at, next_seq_++, std::move(payload)});
}

bool Engine::transmit(int link_index, const NodeId& from, Bytes frame) {
  const Link& l = links_.at(link_index);
  if (from != l.a && from != l.b) {
    throw std::logic_error("transmit from a node not on the link");
  }
  if (!link_is_up(link_index, clock_)) return false;
  FrameEvent e;
  e.link = link_index;
  e.from = from;
  e.to = from == l.a ? l.b : l.a;
  e.frame = std::move(frame);
  schedule(clock_ + l.latency_ms, std::move(e));
  return true;
}

Engine::RunSummary Engine::run_until(TimeMs t_end) {
  std::size_t executed_before = executed_;
  while (!queue_.empty() && queue_.top().at <= t_end) {
    Queued q = queue_.top();
    queue_.pop();
    clock_ = q.at;
    ++executed_;
    std::visit(
        [&](auto&& payload) {
          using T = std::decay_t<decltype(payload)>;
          if constexpr (std::is_same_v<T, FrameEvent>) {
            handler_->on_deliver(payload, clock_);
          } else if constexpr (std::is_same_v<T, LinkUpEvent>) {
            handler_->on_link_up(payload.link, clock_);
          } else if constexpr (std::is_same_v<T, LinkDownEvent>) {
            handler_->on_link_down(payload.link, clock_);
          } else if constexpr (std::is_same_v<T, TimerEvent>) {
            handler_->on_timer(payload, clock_);
          } else {
            handler_->on_workload(payload, clock_);
          }
        },
        q.payload);
  }
  if (t_end > clock_) clock_ = t_end;
  return RunSummary{clock_, executed_ - executed_before, queue_.size()};
}

}  // namespace ccndtn
