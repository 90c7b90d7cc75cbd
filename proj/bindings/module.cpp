// SPDX-License-Identifier: Apache-2.0
// Python bindings: names, wire codecs, bundles and the scenario runner.
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <algorithm>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>

#include <json.hpp>

#include "ccndtn/sim.hpp"

namespace py = pybind11;
using namespace ccndtn;

namespace {

py::bytes to_py(const Bytes& b) {
  return py::bytes(std::string(b.begin(), b.end()));
}

Bytes from_py(const py::bytes& b) {
  std::string s = b;
  return Bytes(s.begin(), s.end());
}

py::object json_to_py(const nlohmann::json& j) {
  return py::module_::import("json").attr("loads")(j.dump());
}

Scenario parse_scenario_text(const std::string& text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("bad JSON: ") + e.what());
  }
  return Scenario::from_json(j);
}

py::dict run_result_to_py(const Scenario& s, const SimResult& r) {
  nlohmann::json trace = nlohmann::json::array();
  for (const auto& e : r.trace) trace.push_back(e.to_json());
  py::dict out;
  out["scenario"] = s.name;
  out["seed"] = s.seed;
  out["metrics"] = json_to_py(r.metrics.to_json());
  out["trace"] = json_to_py(trace);
  out["events_executed"] = r.summary.executed;
  return out;
}

py::dict run_prepared(Scenario s, std::optional<std::uint64_t> seed) {
  if (seed) s.seed = *seed;
  s.validate();
  SimResult r = run_scenario(s);
  return run_result_to_py(s, r);
}

}  // namespace

PYBIND11_MODULE(_ccndtn, m) {
  m.doc() = "Content-centric networking over delay-tolerant bundles: "
            "protocol codecs and a deterministic scenario simulator";
  m.attr("__version__") = "0.1.0";

  // ValidationError derives from ParseError, so one registration covers both.
  py::register_exception<WireError>(m, "WireError", PyExc_ValueError);
  py::register_exception<ParseError>(m, "ParseError", PyExc_ValueError);

  py::class_<Name>(m, "Name")
      .def(py::init([](const std::string& text) { return Name::parse(text); }),
           py::arg("text"))
      .def_static(
          "parse", [](const std::string& text) { return Name::parse(text); },
          py::arg("text"))
      .def("__str__", &Name::to_string)
      .def("__repr__",
           [](const Name& n) { return "Name('" + n.to_string() + "')"; })
      .def("__len__", &Name::size)
      .def("__hash__",
           [](const Name& n) { return py::hash(py::str(n.to_string())); })
      .def(
          "__eq__", [](const Name& a, const Name& b) { return a == b; },
          py::is_operator())
      .def_property_readonly("components", &Name::components)
      .def("is_prefix_of", &Name::is_prefix_of, py::arg("other"));

  py::class_<Eid>(m, "Eid")
      .def(py::init([](const std::string& text) { return Eid::parse(text); }),
           py::arg("text"))
      .def(py::init([](std::string scheme, std::string ssp) {
             return Eid{std::move(scheme), std::move(ssp)};
           }),
           py::arg("scheme"), py::arg("ssp"))
      .def_readwrite("scheme", &Eid::scheme)
      .def_readwrite("ssp", &Eid::ssp)
      .def("__str__", &Eid::to_string)
      .def("__repr__",
           [](const Eid& e) { return "Eid('" + e.to_string() + "')"; })
      .def(
          "__eq__", [](const Eid& a, const Eid& b) { return a == b; },
          py::is_operator());

  py::class_<Timestamp>(m, "Timestamp")
      .def(py::init<>())
      .def(py::init([](std::uint64_t time_ms, std::uint64_t seq) {
             return Timestamp{time_ms, seq};
           }),
           py::arg("time_ms"), py::arg("seq") = 0)
      .def_readwrite("time_ms", &Timestamp::time_ms)
      .def_readwrite("seq", &Timestamp::seq)
      .def(
          "__eq__",
          [](const Timestamp& a, const Timestamp& b) { return a == b; },
          py::is_operator());

  py::enum_<BpqKind>(m, "BpqKind")
      .value("Query", BpqKind::Query)
      .value("Response", BpqKind::Response)
      .value("ResponseDoNotFragment", BpqKind::ResponseDoNotFragment)
      .value("Publish", BpqKind::Publish);

  py::class_<FragmentRange>(m, "FragmentRange")
      .def(py::init<>())
      .def(py::init([](std::uint64_t offset, std::uint64_t length) {
             return FragmentRange{offset, length};
           }),
           py::arg("offset"), py::arg("length"))
      .def_readwrite("offset", &FragmentRange::offset)
      .def_readwrite("length", &FragmentRange::length)
      .def(
          "__eq__",
          [](const FragmentRange& a, const FragmentRange& b) { return a == b; },
          py::is_operator());

  py::class_<BpqBlock>(m, "BpqBlock")
      .def(py::init<>())
      .def_readwrite("kind", &BpqBlock::kind)
      .def_property(
          "value", [](const BpqBlock& b) { return to_py(b.value); },
          [](BpqBlock& b, const py::bytes& v) { b.value = from_py(v); })
      .def_readwrite("original_creation_timestamp",
                     &BpqBlock::original_creation_timestamp)
      .def_readwrite("fragment_count", &BpqBlock::fragment_count)
      .def_readwrite("fragments", &BpqBlock::fragments)
      .def(
          "__eq__",
          [](const BpqBlock& a, const BpqBlock& b) { return a == b; },
          py::is_operator());

  py::class_<Interest>(m, "Interest")
      .def(py::init<>())
      .def_readwrite("name", &Interest::name)
      .def_property(
          "nonce",
          [](const Interest& i) {
            return py::bytes(std::string(i.nonce.begin(), i.nonce.end()));
          },
          [](Interest& i, const py::bytes& b) {
            std::string s = b;
            if (s.size() != i.nonce.size()) {
              throw py::value_error("nonce must be 8 bytes");
            }
            std::copy(s.begin(), s.end(), i.nonce.begin());
          })
      .def_readwrite("lifetime_ms", &Interest::lifetime_ms)
      .def(
          "__eq__",
          [](const Interest& a, const Interest& b) { return a == b; },
          py::is_operator());

  py::class_<DataPacket>(m, "DataPacket")
      .def(py::init<>())
      .def_readwrite("name", &DataPacket::name)
      .def_property(
          "payload", [](const DataPacket& d) { return to_py(d.payload); },
          [](DataPacket& d, const py::bytes& v) { d.payload = from_py(v); })
      .def_readwrite("freshness_ms", &DataPacket::freshness_ms)
      .def_property(
          "signature_placeholder",
          [](const DataPacket& d) { return to_py(d.signature_placeholder); },
          [](DataPacket& d, const py::bytes& v) {
            d.signature_placeholder = from_py(v);
          })
      .def(
          "__eq__",
          [](const DataPacket& a, const DataPacket& b) { return a == b; },
          py::is_operator());

  py::class_<StatusResponse>(m, "StatusResponse")
      .def(py::init<>())
      .def_readwrite("name", &StatusResponse::name)
      .def_readwrite("code", &StatusResponse::code)
      .def(
          "__eq__",
          [](const StatusResponse& a, const StatusResponse& b) {
            return a == b;
          },
          py::is_operator());

  py::class_<Bundle>(m, "Bundle")
      .def(py::init<>())
      .def_readwrite("source", &Bundle::source)
      .def_readwrite("destination", &Bundle::destination)
      .def_readwrite("creation_timestamp", &Bundle::creation_timestamp)
      .def_readwrite("lifetime_ms", &Bundle::lifetime_ms)
      .def_readwrite("hop_limit", &Bundle::hop_limit)
      .def_property(
          "payload", [](const Bundle& b) { return to_py(b.payload); },
          [](Bundle& b, const py::bytes& v) { b.payload = from_py(v); })
      .def_readwrite("bpq", &Bundle::bpq)
      .def("id", &Bundle::id)
      .def("expires_at", &Bundle::expires_at)
      .def(
          "__eq__", [](const Bundle& a, const Bundle& b) { return a == b; },
          py::is_operator());

  m.def(
      "sdnv_encode",
      [](std::uint64_t value) { return to_py(sdnv::encode(value)); },
      py::arg("value"));
  m.def(
      "sdnv_decode",
      [](const py::bytes& data, std::size_t at) {
        Bytes b = from_py(data);
        sdnv::Decoded d = sdnv::decode(b, at);
        return py::make_tuple(d.value, d.consumed, d.minimal);
      },
      py::arg("data"), py::arg("at") = 0,
      "Returns (value, bytes consumed, was minimal).");

  m.def("encode_packet", [](const Interest& p) {
    return to_py(encode_ccn_packet(p));
  });
  m.def("encode_packet", [](const DataPacket& p) {
    return to_py(encode_ccn_packet(p));
  });
  m.def("encode_packet", [](const StatusResponse& p) {
    return to_py(encode_ccn_packet(p));
  });
  m.def(
      "decode_packet",
      [](const py::bytes& data) -> CcnPacket {
        return decode_ccn_packet(from_py(data));
      },
      py::arg("data"));

  m.def("encode_bundle", [](const Bundle& b) {
    return to_py(ccndtn::encode_bundle(b));
  });
  m.def(
      "decode_bundle",
      [](const py::bytes& data) { return ccndtn::decode_bundle(from_py(data)); },
      py::arg("data"));

  m.def("builtin_scenarios", [] { return builtin_scenario_names(); });
  m.def(
      "scenario_text",
      [](const std::string& name) { return builtin_scenario_text(name); },
      py::arg("name"));
  m.def(
      "validate_scenario",
      [](const std::string& json_text) {
        Scenario s = parse_scenario_text(json_text);
        s.validate();
        return s.name;
      },
      py::arg("json_text"),
      "Parses and validates a scenario document; returns its name.");

  m.def(
      "run",
      [](const std::string& scenario, std::optional<std::uint64_t> seed) {
        return run_prepared(load_scenario(scenario), seed);
      },
      py::arg("scenario"), py::arg("seed") = py::none(),
      "Runs a builtin scenario or a scenario file; returns a dict with "
      "metrics, trace and summary counters.");
  m.def(
      "run_json",
      [](const std::string& json_text, std::optional<std::uint64_t> seed) {
        return run_prepared(parse_scenario_text(json_text), seed);
      },
      py::arg("json_text"), py::arg("seed") = py::none(),
      "Runs a scenario given as a JSON document string.");
}
