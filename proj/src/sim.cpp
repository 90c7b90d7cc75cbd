// SPDX-License-Identifier: Apache-2.0
#include "ccndtn/sim.hpp"

#include <algorithm>

namespace ccndtn {

namespace {

std::string hex_byte_string(const Bytes& bytes, std::size_t limit = 8) {
  static const char* digits = "0123456789abcdef";
  std::string out;
  for (std::size_t i = 0; i < bytes.size() && i < limit; ++i) {
    out += digits[bytes[i] >> 4];
    out += digits[bytes[i] & 0xF];
  }
  return out;
}

}  // namespace

Sim::Sim(Scenario scenario)
    : scenario_(std::move(scenario)),
      engine_(*this),
      nonce_rng_(fnv1a64(scenario_.seed, "nonce", 5)),
      jitter_rng_(fnv1a64(scenario_.seed, "jitter", 6)) {
  scenario_.validate();

  for (const auto& spec : scenario_.nodes) {
    auto n = std::make_unique<SimNode>();
    n->spec = spec;
    n->eid = DtnNode::eid_for(spec.id);
    if (spec.ccn) {
      n->ccn = CcnNode(spec.id, {scenario_.cs_capacity, 60'000}, &trace_);
      n->app_face = n->ccn.add_face(FaceKind::App);
      n->repo_face = n->ccn.add_face(FaceKind::Repo);
      if (spec.gateway) {
        n->bundle_face = n->ccn.add_face(FaceKind::BundleDaemon);
        n->ccn.set_fallback_face(n->bundle_face);
      }
    }
    if (spec.dtn) {
      n->dtn = DtnNode(spec.id, n->eid, &trace_);
      n->gw = Gateway(spec.id, n->eid, scenario_.gateway, &trace_);
    }
    nodes_.emplace(spec.id, std::move(n));
  }

  for (const auto& link : scenario_.links) {
    int index = engine_.add_link(link);
    if (link.kind == LinkKind::CcnFace) {
      for (const NodeId& end : {link.a, link.b}) {
        SimNode& n = node(end);
        int face = n.ccn.add_face(FaceKind::Link);
        n.face_to_link[face] = index;
        n.link_to_face[index] = face;
      }
    } else {
      node(link.a).dtn_links.push_back({index, link.b});
      node(link.b).dtn_links.push_back({index, link.a});
    }
  }

  for (auto& [id, n] : nodes_) {
    if (!n->spec.ccn) continue;
    SimNode* raw = n.get();
    n->ccn.set_face_up_fn([this, raw](int face) {
      auto it = raw->face_to_link.find(face);
      if (it == raw->face_to_link.end()) return true;  // local faces
      return engine_.link_is_up(it->second, engine_.now());
    });
  }

  for (const auto& r : scenario_.routes) {
    SimNode& n = node(r.node);
    int link_index = -1;
    for (std::size_t i = 0; i < scenario_.links.size(); ++i) {
      const Link& l = scenario_.links[i];
      if (l.kind != LinkKind::CcnFace) continue;
      if ((l.a == r.node && l.b == r.via) || (l.b == r.node && l.a == r.via)) {
        link_index = static_cast<int>(i);
        break;
      }
    }
    int face = n.link_to_face.at(link_index);
    n.ccn.fib_add_route(r.prefix, face);
    trace_.emit(0, r.node, "fib_add",
                {{"prefix", r.prefix.to_string()},
                 {"face", "link"},
                 {"via", r.via}});
  }

  for (std::size_t i = 0; i < scenario_.workload.size(); ++i) {
    const auto& action = scenario_.workload[i];
    TimeMs at = std::visit([](const auto& a) { return a.at; }, action);
    engine_.schedule(at, WorkloadEvent{i, 0, 0});
    if (const auto* r = std::get_if<RequestAction>(&action)) {
      ConsumerState c;
      c.spec = *r;
      c.request_id = r->node + "#" + std::to_string(i);
      c.interval = r->reexpress_interval_ms;
      consumers_.emplace(i, std::move(c));
    }
  }
}

SimNode& Sim::node(const NodeId& id) { return *nodes_.at(id); }
const SimNode& Sim::node(const NodeId& id) const { return *nodes_.at(id); }

Timestamp Sim::fresh_timestamp(SimNode& n, TimeMs now) {
  if (n.ts_used && n.last_ts.time_ms == now) {
    n.last_ts.seq += 1;
  } else {
    n.last_ts = Timestamp{now, 0};
  }
  n.ts_used = true;
  return n.last_ts;
}

TimeMs Sim::jittered(TimeMs interval) {
  if (!scenario_.jitter) return interval;
  TimeMs delta = interval / 10;
  return interval - delta + jitter_rng_.bounded(2 * delta + 1);
}

SimResult Sim::run() {
  SimResult result;
  result.summary = engine_.run_until(scenario_.t_end);
  result.trace = trace_.events();
  result.metrics = collect_metrics(result.trace);
  return result;
}

bool Sim::request_satisfied(std::size_t workload_index) const {
  auto it = consumers_.find(workload_index);
  return it != consumers_.end() && it->second.satisfied;
}

// --- workload ----------------------------------------------------------------

void Sim::on_workload(const WorkloadEvent& e, TimeMs now) {
  const auto& action = scenario_.workload.at(e.action);
  if (const auto* p = std::get_if<PublishAction>(&action)) {
    do_publish(*p, now);
    return;
  }
  ConsumerState& c = consumers_.at(e.action);
  if (c.satisfied || e.generation != c.generation ||
      e.expression != c.expressions) {
    return;  // superseded by satisfaction or backoff rescheduling
  }
  express(e.action, c, now);
}

void Sim::do_publish(const PublishAction& p, TimeMs now) {
  SimNode& n = node(p.node);
  std::optional<DataPacket> content;
  if (p.content_size > 0) {
    Name cname = p.content_name.value_or(p.prefix);
    DataPacket d;
    d.name = cname;
    d.payload =
        deterministic_payload(scenario_.seed, cname.to_string(), p.content_size);
    content = std::move(d);
    n.repo.put(*content, now);
    trace_.emit(now, p.node, "repo_put", {{"name", cname.to_string()}});
    n.ccn.fib_add_route(p.prefix, n.repo_face);
    trace_.emit(now, p.node, "fib_add",
                {{"prefix", p.prefix.to_string()}, {"face", "repo"}});
  }
  if (n.spec.gateway) {
    Bundle b = n.gw.make_publish_bundle(
        p.prefix, p.carry_content ? content : std::nullopt,
        fresh_timestamp(n, now));
    trace_.emit(now, p.node, "publish_created",
                {{"id", b.id()},
                 {"prefix", p.prefix.to_string()},
                 {"carry", p.carry_content},
                 {"hops", b.hop_limit}});
    n.dtn.store_local(b, now);
    push_to_active_contacts(n, now);
    ensure_dtn_sweep(n, now);
  }
}

void Sim::express(std::size_t action_index, ConsumerState& c, TimeMs now) {
  SimNode& n = node(c.spec.node);
  Interest interest;
  interest.name = c.spec.name;
  interest.nonce = nonce_rng_.next_bytes8();
  interest.lifetime_ms = c.spec.lifetime_ms;
  trace_.emit(now, c.spec.node, "express",
              {{"request", c.request_id},
               {"name", c.spec.name.to_string()},
               {"expression", c.expressions}});
  c.expressions += 1;
  c.last_expression_at = now;
  std::uint64_t generation_before = c.generation;
  handle_interest_at(n, n.app_face, interest, now);
  if (!c.satisfied && c.generation == generation_before &&
      c.expressions <= c.spec.max_reexpressions) {
    schedule_expression(action_index, c, now);
  }
}

void Sim::schedule_expression(std::size_t action_index, const ConsumerState& c,
                              TimeMs now) {
  TimeMs next = c.last_expression_at + jittered(c.interval);
  if (next < now) next = now;
  engine_.schedule(next, WorkloadEvent{action_index, c.expressions,
                                       c.generation});
}

// --- CCN plumbing -------------------------------------------------------------

void Sim::handle_interest_at(SimNode& n, int in_face, const Interest& interest,
                             TimeMs now) {
  InterestResult res = n.ccn.on_interest(in_face, interest, now);
  ensure_ccn_sweep(n, now);
  bool crossed = false;
  for (const auto& em : res.emissions) {
    dispatch_emission(n, em, now, &crossed);
  }
  if (crossed) {
    if (auto sr = n.gw.status_response(interest.name)) {
      trace_.emit(now, n.spec.id, "status_450",
                  {{"name", interest.name.to_string()}});
      dispatch_emission(n, Emission{in_face, *sr}, now, nullptr);
    }
  }
}

void Sim::handle_data_at(SimNode& n, int in_face, const DataPacket& data,
                         TimeMs now) {
  auto emissions = n.ccn.on_data(in_face, data, now);
  ensure_ccn_sweep(n, now);
  for (const auto& em : emissions) {
    dispatch_emission(n, em, now, nullptr);
  }
}

void Sim::handle_status_at(SimNode& n, int in_face, const StatusResponse& sr,
                           TimeMs now) {
  auto emissions = n.ccn.on_status(in_face, sr, now);
  for (const auto& em : emissions) {
    dispatch_emission(n, em, now, nullptr);
  }
}

void Sim::dispatch_emission(SimNode& n, const Emission& em, TimeMs now,
                            bool* crossed) {
  switch (n.ccn.face_kind(em.face)) {
    case FaceKind::App:
      if (const auto* d = std::get_if<DataPacket>(&em.packet)) {
        consumer_deliver(n, *d, now);
      } else if (const auto* sr = std::get_if<StatusResponse>(&em.packet)) {
        consumer_status(n, *sr, now);
      }
      break;
    case FaceKind::Repo:
      if (const auto* i = std::get_if<Interest>(&em.packet)) {
        if (auto d = n.repo.get(i->name, now)) {
          trace_.emit(now, n.spec.id, "repo_hit",
                      {{"name", i->name.to_string()},
                       {"data", d->name.to_string()}});
          handle_data_at(n, n.repo_face, *d, now);
        } else {
          trace_.emit(now, n.spec.id, "repo_miss",
                      {{"name", i->name.to_string()}});
        }
      }
      break;
    case FaceKind::BundleDaemon:
      if (const auto* i = std::get_if<Interest>(&em.packet)) {
        if (crossed != nullptr) *crossed = true;
        trace_.emit(now, n.spec.id, "bundle_face_interest",
                    {{"name", i->name.to_string()}});
        cross_interest(n, *i, now);
      } else if (const auto* d = std::get_if<DataPacket>(&em.packet)) {
        data_on_bundle_face(n, *d, now);
      }
      break;
    case FaceKind::Link:
      transmit_packet(n, em.face, em.packet, now);
      break;
  }
}

void Sim::transmit_packet(SimNode& n, int face, const CcnPacket& packet,
                          TimeMs now) {
  int link_index = n.face_to_link.at(face);
  const Link& l = engine_.link(link_index);
  const NodeId& peer = l.a == n.spec.id ? l.b : l.a;
  Bytes frame = encode_ccn_packet(packet);
  if (!engine_.transmit(link_index, n.spec.id, std::move(frame))) {
    trace_.emit(now, n.spec.id, "frame_drop",
                {{"link", l.label()},
                 {"kind", to_string(packet_kind(packet))},
                 {"reason", "link_down"}});
    return;
  }
  const char* event = packet_kind(packet) == PacketKind::Interest
                          ? "interest_send"
                          : packet_kind(packet) == PacketKind::Data
                                ? "data_send"
                                : "status_send";
  trace_.emit(now, n.spec.id, event,
              {{"name", packet_name(packet).to_string()},
               {"to", peer},
               {"link", l.label()}});
}

// --- gateway plumbing ---------------------------------------------------------

void Sim::cross_interest(SimNode& n, const Interest& interest, TimeMs now) {
  Bundle q = n.gw.make_query_bundle(interest, fresh_timestamp(n, now));
  trace_.emit(now, n.spec.id, "bpq_query_created",
              {{"id", q.id()},
               {"name", interest.name.to_string()},
               {"hops", q.hop_limit},
               {"lifetime_ms", q.lifetime_ms}});
  dtn_ingest(n, n.spec.id, q, now);
}

void Sim::data_on_bundle_face(SimNode& n, const DataPacket& data, TimeMs now) {
  auto pending = n.gw.take_pending_matching(data.name, now);
  if (pending.empty()) {
    trace_.emit(now, n.spec.id, "gw_drop",
                {{"name", data.name.to_string()},
                 {"reason", "no_pending_query"}});
    return;
  }
  for (const auto& p : pending) {
    BpqBlock qb;
    qb.kind = BpqKind::Query;
    qb.value = p.name.to_bpq_value();
    qb.original_creation_timestamp = p.original;
    Bundle resp = n.gw.make_response_bundle(qb, p.source, data, p.lifetime_ms,
                                            fresh_timestamp(n, now));
    trace_.emit(now, n.spec.id, "response_created",
                {{"id", resp.id()},
                 {"for_query", p.query_id},
                 {"name", data.name.to_string()},
                 {"dest", p.source.to_string()}});
    n.dtn.store_local(resp, now);
    suppress_queries(n, qb.value, p.source, now);
  }
  push_to_active_contacts(n, now);
  ensure_dtn_sweep(n, now);
}

void Sim::dtn_ingest(SimNode& n, const NodeId& from, const Bundle& b,
                     TimeMs now) {
  auto plan = n.dtn.receive_bundle(from, b, now, n.spec.gateway);
  switch (plan.kind) {
    case DtnNode::ReceivePlan::Kind::DuplicateDrop:
      return;
    case DtnNode::ReceivePlan::Kind::AnswerFromCache: {
      Bundle matched = n.dtn.cache()[plan.matched_index].bundle;
      answer_query_from_cache(n, b, matched, now);
      break;
    }
    case DtnNode::ReceivePlan::Kind::Stored:
      if (plan.deliver_to_gateway) {
        trace_.emit(now, n.spec.id, "bundle_deliver",
                    {{"id", b.id()},
                     {"kind", b.bpq ? to_string(b.bpq->kind) : "plain"}});
        if (b.bpq) gateway_handle(n, b, now);
      }
      break;
  }
  push_to_active_contacts(n, now);
  ensure_dtn_sweep(n, now);
}

void Sim::answer_query_from_cache(SimNode& n, const Bundle& query,
                                  const Bundle& matched, TimeMs now) {
  Bundle resp = n.gw.make_response_from_cached(matched, query.source,
                                               query.lifetime_ms,
                                               fresh_timestamp(n, now));
  bool local = query.source == n.eid;
  trace_.emit(now, n.spec.id, "response_created",
              {{"id", resp.id()},
               {"for_query", query.id()},
               {"from_cache", matched.id()},
               {"dest", query.source.to_string()},
               {"local", local}});
  if (local) {
    // own query, answered from the local cache: hand straight back
    gateway_handle(n, resp, now);
    return;
  }
  n.dtn.store_local(resp, now);
  suppress_queries(n, query.bpq->value, query.source, now);
}

void Sim::gateway_handle(SimNode& n, const Bundle& b, TimeMs now) {
  const BpqBlock& q = *b.bpq;
  switch (q.kind) {
    case BpqKind::Publish: {
      Name value_name;
      try {
        value_name = Name::from_bpq_value(q.value);
      } catch (const ParseError&) {
        trace_.emit(now, n.spec.id, "gw_drop",
                    {{"id", b.id()}, {"reason", "bad_publish_value"}});
        return;
      }
      n.ccn.fib_add_route(value_name, n.bundle_face);
      trace_.emit(now, n.spec.id, "fib_add",
                  {{"prefix", value_name.to_string()}, {"face", "bundle"}});
      if (!b.payload.empty()) {
        DataPacket content;
        try {
          CcnPacket p = decode_ccn_packet(b.payload);
          if (!std::holds_alternative<DataPacket>(p)) {
            throw WireError("publish payload is not a data packet");
          }
          content = std::get<DataPacket>(std::move(p));
        } catch (const WireError&) {
          trace_.emit(now, n.spec.id, "gw_drop",
                      {{"id", b.id()}, {"reason", "bad_publish_payload"}});
          return;
        }
        if (!value_name.is_prefix_of(content.name)) {
          trace_.emit(now, n.spec.id, "gw_drop",
                      {{"id", b.id()}, {"reason", "publish_name_mismatch"}});
          return;
        }
        n.repo.put(content, now);
        trace_.emit(now, n.spec.id, "repo_put",
                    {{"name", content.name.to_string()}});
        n.ccn.fib_add_route(content.name, n.repo_face);
        trace_.emit(now, n.spec.id, "fib_add",
                    {{"prefix", content.name.to_string()}, {"face", "repo"}});
      }
      break;
    }
    case BpqKind::Query: {
      Name name;
      Interest interest;
      try {
        name = Name::from_bpq_value(q.value);
        CcnPacket p = decode_ccn_packet(b.payload);
        if (!std::holds_alternative<Interest>(p)) {
          throw WireError("query payload is not an interest");
        }
        interest = std::get<Interest>(std::move(p));
      } catch (const std::runtime_error&) {
        trace_.emit(now, n.spec.id, "gw_drop",
                    {{"id", b.id()}, {"reason", "bad_query"}});
        return;
      }
      if (interest.name != name) {
        trace_.emit(now, n.spec.id, "gw_drop",
                    {{"id", b.id()}, {"reason", "query_name_mismatch"}});
        return;
      }
      if (auto d = n.repo.get(name, now)) {
        trace_.emit(now, n.spec.id, "repo_hit",
                    {{"name", name.to_string()}, {"data", d->name.to_string()}});
        Bundle resp = n.gw.make_response_bundle(q, b.source, *d, b.lifetime_ms,
                                                fresh_timestamp(n, now));
        trace_.emit(now, n.spec.id, "response_created",
                    {{"id", resp.id()},
                     {"for_query", b.id()},
                     {"name", d->name.to_string()},
                     {"dest", b.source.to_string()}});
        n.dtn.store_local(resp, now);
        suppress_queries(n, q.value, b.source, now);
      } else {
        trace_.emit(now, n.spec.id, "repo_miss", {{"name", name.to_string()}});
        n.gw.register_pending_query(b, name, now);
        trace_.emit(now, n.spec.id, "query_injected",
                    {{"id", b.id()}, {"name", name.to_string()}});
        handle_interest_at(n, n.bundle_face, interest, now);
      }
      break;
    }
    case BpqKind::Response:
    case BpqKind::ResponseDoNotFragment: {
      DataPacket content;
      try {
        CcnPacket p = decode_ccn_packet(b.payload);
        if (!std::holds_alternative<DataPacket>(p)) {
          throw WireError("response payload is not a data packet");
        }
        content = std::get<DataPacket>(std::move(p));
      } catch (const WireError&) {
        trace_.emit(now, n.spec.id, "gw_drop",
                    {{"id", b.id()}, {"reason", "bad_response_payload"}});
        return;
      }
      trace_.emit(now, n.spec.id, "response_injected",
                  {{"id", b.id()}, {"name", content.name.to_string()}});
      handle_data_at(n, n.bundle_face, content, now);
      break;
    }
  }
}

void Sim::suppress_queries(SimNode& n, const Bytes& value, const Eid& source,
                           TimeMs now) {
  for (const auto& id : n.dtn.remove_queries_matching(value, source)) {
    trace_.emit(now, n.spec.id, "query_suppressed",
                {{"id", id}, {"reason", "answered"}});
  }
}

// --- consumers ----------------------------------------------------------------

void Sim::consumer_deliver(SimNode& n, const DataPacket& data, TimeMs now) {
  for (auto& [index, c] : consumers_) {
    if (c.spec.node != n.spec.id || c.satisfied || c.expressions == 0) continue;
    if (!c.spec.name.is_prefix_of(data.name)) continue;
    c.satisfied = true;
    trace_.emit(now, n.spec.id, "data_deliver",
                {{"request", c.request_id},
                 {"name", data.name.to_string()},
                 {"bytes", data.payload.size()},
                 {"payload_head", hex_byte_string(data.payload)}});
  }
}

void Sim::consumer_status(SimNode& n, const StatusResponse& sr, TimeMs now) {
  for (auto& [index, c] : consumers_) {
    if (c.spec.node != n.spec.id || c.satisfied || c.expressions == 0) continue;
    if (c.spec.name != sr.name) continue;
    c.interval *= scenario_.gateway.backoff_factor;
    c.generation += 1;
    trace_.emit(now, n.spec.id, "backoff",
                {{"request", c.request_id},
                 {"code", sr.code},
                 {"interval_ms", c.interval}});
    if (c.expressions <= c.spec.max_reexpressions) {
      schedule_expression(index, c, now);
    }
  }
}

// --- DTN plumbing ---------------------------------------------------------------

void Sim::push_to_neighbor(SimNode& n, int link, const NodeId& peer,
                           TimeMs now) {
  auto batch = n.dtn.collect_for_neighbor(peer, now);
  for (const auto& b : batch) {
    Bytes frame = encode_bundle(b);
    if (!engine_.transmit(link, n.spec.id, std::move(frame))) {
      trace_.emit(now, n.spec.id, "frame_drop",
                  {{"link", engine_.link(link).label()},
                   {"kind", "bundle"},
                   {"reason", "link_down"}});
      continue;
    }
    trace_.emit(now, n.spec.id, "bundle_send",
                {{"id", b.id()},
                 {"kind", b.bpq ? to_string(b.bpq->kind) : "plain"},
                 {"to", peer},
                 {"hops", b.hop_limit},
                 {"link", engine_.link(link).label()}});
  }
}

void Sim::push_to_active_contacts(SimNode& n, TimeMs now) {
  for (const auto& [link, peer] : n.dtn_links) {
    if (engine_.link_is_up(link, now)) {
      push_to_neighbor(n, link, peer, now);
    }
  }
}

void Sim::ensure_ccn_sweep(SimNode& n, TimeMs now) {
  auto at = n.ccn.earliest_expiry();
  if (!at) return;
  TimeMs when = std::max(*at, now);
  if (n.ccn_sweep_at && *n.ccn_sweep_at <= when) return;
  engine_.schedule(when, TimerEvent{n.spec.id, "ccn"});
  n.ccn_sweep_at = when;
}

void Sim::ensure_dtn_sweep(SimNode& n, TimeMs now) {
  auto at = n.dtn.earliest_expiry();
  if (!at) return;
  TimeMs when = std::max(*at, now);
  if (n.dtn_sweep_at && *n.dtn_sweep_at <= when) return;
  engine_.schedule(when, TimerEvent{n.spec.id, "dtn"});
  n.dtn_sweep_at = when;
}

// --- engine callbacks -----------------------------------------------------------

void Sim::on_deliver(const FrameEvent& e, TimeMs now) {
  SimNode& n = node(e.to);
  const Link& l = engine_.link(e.link);
  WireDiagnostics diag;
  std::optional<CcnPacket> packet;
  std::optional<Bundle> bundle;
  try {
    if (l.kind == LinkKind::CcnFace) {
      packet = decode_ccn_packet(e.frame, &diag);
    } else {
      bundle = decode_bundle(e.frame, &diag);
    }
  } catch (const WireError& err) {
    trace_.emit(now, e.to, "decode_error",
                {{"link", l.label()}, {"reason", err.what()}});
    return;
  }
  for (const auto& note : diag.notes) {
    trace_.emit(now, e.to, "wire_diag", {{"note", note}});
  }
  if (packet) {
    int face = n.link_to_face.at(e.link);
    if (const auto* i = std::get_if<Interest>(&*packet)) {
      trace_.emit(now, e.to, "interest_recv",
                  {{"name", i->name.to_string()}, {"from", e.from}});
      handle_interest_at(n, face, *i, now);
    } else if (const auto* d = std::get_if<DataPacket>(&*packet)) {
      trace_.emit(now, e.to, "data_recv",
                  {{"name", d->name.to_string()}, {"from", e.from}});
      handle_data_at(n, face, *d, now);
    } else {
      const auto& sr = std::get<StatusResponse>(*packet);
      trace_.emit(now, e.to, "status_recv",
                  {{"name", sr.name.to_string()},
                   {"code", sr.code},
                   {"from", e.from}});
      handle_status_at(n, face, sr, now);
    }
  } else {
    trace_.emit(now, e.to, "bundle_recv",
                {{"id", bundle->id()},
                 {"kind", bundle->bpq ? to_string(bundle->bpq->kind) : "plain"},
                 {"from", e.from},
                 {"hops", bundle->hop_limit}});
    dtn_ingest(n, e.from, *bundle, now);
  }
}

void Sim::on_link_up(int link, TimeMs now) {
  const Link& l = engine_.link(link);
  trace_.emit(now, "", "link_up",
              {{"link", l.label()}, {"kind", to_string(l.kind)}});
  if (l.kind != LinkKind::DtnContact) return;
  NodeId first = std::min(l.a, l.b);
  NodeId second = std::max(l.a, l.b);
  push_to_neighbor(node(first), link, second, now);
  push_to_neighbor(node(second), link, first, now);
}

void Sim::on_link_down(int link, TimeMs now) {
  const Link& l = engine_.link(link);
  trace_.emit(now, "", "link_down", {{"link", l.label()}});
}

void Sim::on_timer(const TimerEvent& e, TimeMs now) {
  SimNode& n = node(e.node);
  if (e.tag == "ccn") {
    n.ccn_sweep_at.reset();
    n.ccn.sweep_timeouts(now);
    ensure_ccn_sweep(n, now);
  } else if (e.tag == "dtn") {
    n.dtn_sweep_at.reset();
    n.dtn.sweep_expired(now);
    ensure_dtn_sweep(n, now);
  }
}

SimResult run_scenario(const Scenario& scenario) {
  Sim sim(scenario);
  return sim.run();
}

}  // namespace ccndtn
