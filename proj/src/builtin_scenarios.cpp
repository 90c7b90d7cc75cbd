// SPDX-License-Identifier: Apache-2.0
#include "ccndtn/scenario.hpp"

namespace ccndtn {

namespace {

// Kept byte-identical with the copies under scenarios/ (pinned by a test).

const std::string kFig4 = R"JSON({
  "name": "fig4",
  "notes": "Opportunistic content distribution and retrieval across six CCNDTN machines. The published content item floods hop by hop during disjoint contact windows; machine E's query travels E-D-A, the response returns A-D-E, and the daemons along the way keep copies. A second identical request at E is served from E's own content store with no transmissions.",
  "t_end": 40000,
  "seed": 7,
  "cs_capacity": 1024,
  "gateway": {"lifetime_multiplier_k": 100, "hop_limit": 8, "status_response": false, "backoff_factor": 4},
  "nodes": [
    {"id": "pub", "roles": ["gateway"]},
    {"id": "A", "roles": ["gateway"]},
    {"id": "B", "roles": ["gateway"]},
    {"id": "C", "roles": ["gateway"]},
    {"id": "D", "roles": ["gateway"]},
    {"id": "E", "roles": ["gateway"]}
  ],
  "links": [
    {"a": "pub", "b": "B", "kind": "dtn", "latency_ms": 5, "schedule": [[1000, 3000]]},
    {"a": "B", "b": "A", "kind": "dtn", "latency_ms": 5, "schedule": [[4000, 6000]]},
    {"a": "B", "b": "C", "kind": "dtn", "latency_ms": 5, "schedule": [[20000, 22000]]},
    {"a": "E", "b": "D", "kind": "dtn", "latency_ms": 5, "schedule": [[8000, 10000], [16000, 18000]]},
    {"a": "D", "b": "A", "kind": "dtn", "latency_ms": 5, "schedule": [[12000, 14000]]}
  ],
  "workload": [
    {"type": "publish", "node": "pub", "prefix": "/pub/doc", "at": 0, "content_size": 600, "carry_content": true},
    {"type": "request", "node": "E", "name": "/pub/doc", "at": 7000, "reexpress_interval_ms": 3000, "max_reexpressions": 8, "lifetime_ms": 4000},
    {"type": "request", "node": "E", "name": "/pub/doc", "at": 30000, "reexpress_interval_ms": 3000, "max_reexpressions": 3, "lifetime_ms": 4000}
  ]
}
)JSON";

const std::string kFig3a = R"JSON({
  "name": "fig3a",
  "notes": "Content retrieval across a stable CCN segment (A-R-E) and an intermittent DTN segment (E..F..G). G's publish announcement floods to edge router E before the interest arrives; the interest crosses A-R-E in exactly two hops, E converts it into a query that reaches G, and the returned data crosses the same two CCN hops back to A.",
  "t_end": 15000,
  "seed": 3,
  "cs_capacity": 1024,
  "gateway": {"lifetime_multiplier_k": 100, "hop_limit": 8, "status_response": false, "backoff_factor": 4},
  "nodes": [
    {"id": "A", "roles": ["ccn"]},
    {"id": "R", "roles": ["ccn"]},
    {"id": "E", "roles": ["gateway"]},
    {"id": "F", "roles": ["gateway"]},
    {"id": "G", "roles": ["gateway"]}
  ],
  "links": [
    {"a": "A", "b": "R", "kind": "ccn", "latency_ms": 5},
    {"a": "R", "b": "E", "kind": "ccn", "latency_ms": 5},
    {"a": "E", "b": "F", "kind": "dtn", "latency_ms": 5, "schedule": [[3000, 4000], [6000, 7000], [10000, 11000]]},
    {"a": "F", "b": "G", "kind": "dtn", "latency_ms": 5, "schedule": [[1000, 2000], [8000, 9000]]}
  ],
  "routes": [
    {"node": "A", "prefix": "/pub", "via": "R"},
    {"node": "R", "prefix": "/pub", "via": "E"}
  ],
  "workload": [
    {"type": "publish", "node": "G", "prefix": "/pub", "at": 0, "content_size": 700, "content_name": "/pub/doc"},
    {"type": "request", "node": "A", "name": "/pub/doc", "at": 5000, "reexpress_interval_ms": 30000, "max_reexpressions": 0, "lifetime_ms": 30000}
  ]
}
)JSON";

const std::string kFig3b = R"JSON({
  "name": "fig3b",
  "notes": "Content retrieval initiated inside the DTN region. H has no route for the content, so its forwarder falls back to the bundle daemon and creates a BPQ query; edge router E converts the delivered query into a native interest, pulls the content from A across the stable segment, and a response bundle carries it back to H.",
  "t_end": 12000,
  "seed": 5,
  "cs_capacity": 1024,
  "gateway": {"lifetime_multiplier_k": 100, "hop_limit": 8, "status_response": false, "backoff_factor": 4},
  "nodes": [
    {"id": "A", "roles": ["ccn"]},
    {"id": "R", "roles": ["ccn"]},
    {"id": "E", "roles": ["gateway"]},
    {"id": "F", "roles": ["gateway"]},
    {"id": "H", "roles": ["gateway"]}
  ],
  "links": [
    {"a": "A", "b": "R", "kind": "ccn", "latency_ms": 5},
    {"a": "R", "b": "E", "kind": "ccn", "latency_ms": 5},
    {"a": "E", "b": "F", "kind": "dtn", "latency_ms": 5, "schedule": [[3000, 4000], [6000, 7000]]},
    {"a": "F", "b": "H", "kind": "dtn", "latency_ms": 5, "schedule": [[1000, 2000], [9000, 10000]]}
  ],
  "routes": [
    {"node": "E", "prefix": "/stable", "via": "R"},
    {"node": "R", "prefix": "/stable", "via": "A"}
  ],
  "workload": [
    {"type": "publish", "node": "A", "prefix": "/stable", "at": 0, "content_size": 500, "content_name": "/stable/doc"},
    {"type": "request", "node": "H", "name": "/stable/doc", "at": 500, "reexpress_interval_ms": 3000, "max_reexpressions": 5, "lifetime_ms": 20000}
  ]
}
)JSON";

const std::string kBaselineCcn = R"JSON({
  "name": "baseline_ccn",
  "notes": "The fig4 topology with the bundle faces removed: the same contact windows drive plain CCN links, every node is ccn-only, and static routes point E toward the publisher. Interests meet down faces and drop, nothing is stored and carried, and no request is ever satisfied.",
  "t_end": 40000,
  "seed": 7,
  "cs_capacity": 1024,
  "gateway": {"lifetime_multiplier_k": 100, "hop_limit": 8, "status_response": false, "backoff_factor": 4},
  "nodes": [
    {"id": "pub", "roles": ["ccn"]},
    {"id": "A", "roles": ["ccn"]},
    {"id": "B", "roles": ["ccn"]},
    {"id": "C", "roles": ["ccn"]},
    {"id": "D", "roles": ["ccn"]},
    {"id": "E", "roles": ["ccn"]}
  ],
  "links": [
    {"a": "pub", "b": "B", "kind": "ccn", "latency_ms": 5, "schedule": [[1000, 3000]]},
    {"a": "B", "b": "A", "kind": "ccn", "latency_ms": 5, "schedule": [[4000, 6000]]},
    {"a": "B", "b": "C", "kind": "ccn", "latency_ms": 5, "schedule": [[20000, 22000]]},
    {"a": "E", "b": "D", "kind": "ccn", "latency_ms": 5, "schedule": [[8000, 10000], [16000, 18000]]},
    {"a": "D", "b": "A", "kind": "ccn", "latency_ms": 5, "schedule": [[12000, 14000]]}
  ],
  "routes": [
    {"node": "E", "prefix": "/pub", "via": "D"},
    {"node": "D", "prefix": "/pub", "via": "A"},
    {"node": "A", "prefix": "/pub", "via": "B"},
    {"node": "B", "prefix": "/pub", "via": "pub"}
  ],
  "workload": [
    {"type": "publish", "node": "pub", "prefix": "/pub", "at": 0, "content_size": 600, "content_name": "/pub/doc"},
    {"type": "request", "node": "E", "name": "/pub/doc", "at": 7000, "reexpress_interval_ms": 3000, "max_reexpressions": 8, "lifetime_ms": 4000},
    {"type": "request", "node": "E", "name": "/pub/doc", "at": 30000, "reexpress_interval_ms": 3000, "max_reexpressions": 3, "lifetime_ms": 4000}
  ]
}
)JSON";

}  // namespace

const std::vector<std::string>& builtin_scenario_names() {
  static const std::vector<std::string> names = {"fig3a", "fig3b", "fig4",
                                                 "baseline_ccn"};
  return names;
}

bool is_builtin_scenario(const std::string& name) {
  for (const auto& n : builtin_scenario_names()) {
    if (n == name) return true;
  }
  return false;
}

const std::string& builtin_scenario_text(const std::string& name) {
  if (name == "fig4") return kFig4;
  if (name == "fig3a") return kFig3a;
  if (name == "fig3b") return kFig3b;
  if (name == "baseline_ccn") return kBaselineCcn;
  throw ParseError("unknown builtin scenario '" + name + "'");
}

}  // namespace ccndtn
