// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

#include "ccndtn/name.hpp"

namespace ccndtn {

using Bytes = std::vector<std::uint8_t>;
using TimeMs = std::uint64_t;

// Malformed or unencodable wire data. Raised by both directions of every
// codec: decoders on truncation, bounds, trailing bytes and bad values;
// encoders on structural invariant violations.
struct WireError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Non-fatal oddities observed while decoding (e.g. non-minimal SDNVs).
struct WireDiagnostics {
  std::vector<std::string> notes;
};

// Self-Delimiting Numeric Values: big-endian base-128, high bit of every
// byte except the last set. Encoders always emit the minimal form; decoders
// accept non-minimal input and report it.
namespace sdnv {

void append(Bytes& out, std::uint64_t value);
Bytes encode(std::uint64_t value);

struct Decoded {
  std::uint64_t value = 0;
  std::size_t consumed = 0;
  bool minimal = true;
};

// Decodes starting at offset `at`. Throws WireError on truncation or when
// the value does not fit in 64 bits.
Decoded decode(std::span<const std::uint8_t> buf, std::size_t at = 0);

}  // namespace sdnv

// ---------------------------------------------------------------------------
// CCN packets

struct Interest {
  Name name;
  std::array<std::uint8_t, 8> nonce{};
  std::uint64_t lifetime_ms = 4000;  // must stay > 0

  bool operator==(const Interest&) const = default;
};

struct DataPacket {
  Name name;
  Bytes payload;
  std::uint64_t freshness_ms = 0;  // 0 selects the caching node's default
  Bytes signature_placeholder;     // carried verbatim, never interpreted

  bool operator==(const DataPacket&) const = default;
};

struct StatusResponse {
  Name name;
  std::uint32_t code = 450;  // three-digit status

  bool operator==(const StatusResponse&) const = default;
};

using CcnPacket = std::variant<Interest, DataPacket, StatusResponse>;

enum class PacketKind : std::uint8_t {
  Interest = 1,
  Data = 2,
  Status = 3,
};

PacketKind packet_kind(const CcnPacket& p);
const Name& packet_name(const CcnPacket& p);
const char* to_string(PacketKind k);

Bytes encode_ccn_packet(const CcnPacket& p);
CcnPacket decode_ccn_packet(std::span<const std::uint8_t> buf,
                            WireDiagnostics* diag = nullptr);

// ---------------------------------------------------------------------------
// Bundles

// Creation timestamp: milliseconds plus a per-node sequence number that
// disambiguates bundles created in the same millisecond.
struct Timestamp {
  std::uint64_t time_ms = 0;
  std::uint64_t seq = 0;

  bool operator==(const Timestamp&) const = default;
  auto operator<=>(const Timestamp&) const = default;
};

enum class BpqKind : std::uint8_t {
  Query = 0,
  Response = 1,
  ResponseDoNotFragment = 2,
  Publish = 3,
};

const char* to_string(BpqKind k);

struct FragmentRange {
  std::uint64_t offset = 0;
  std::uint64_t length = 0;

  bool operator==(const FragmentRange&) const = default;
  auto operator<=>(const FragmentRange&) const = default;
};

// Query extension block. The value is the canonical text of the content
// name. fragment_count == 0 means the bundle carries a complete response.
struct BpqBlock {
  BpqKind kind = BpqKind::Query;
  Bytes value;
  Timestamp original_creation_timestamp;
  std::uint64_t fragment_count = 0;
  std::vector<FragmentRange> fragments;

  bool operator==(const BpqBlock&) const = default;
};

struct Bundle {
  Eid source;
  Eid destination;
  Timestamp creation_timestamp;
  std::uint64_t lifetime_ms = 0;
  std::uint64_t hop_limit = 0;
  Bytes payload;
  std::optional<BpqBlock> bpq;

  TimeMs expires_at() const { return creation_timestamp.time_ms + lifetime_ms; }

  // Unique bundle key: "source|time_ms|seq".
  std::string id() const;

  bool operator==(const Bundle&) const = default;
};

// First frame byte distinguishing bundles from CCN packets (types 1..3).
inline constexpr std::uint8_t kBundleFrameType = 4;

Bytes encode_bundle(const Bundle& b);
Bundle decode_bundle(std::span<const std::uint8_t> buf,
                     WireDiagnostics* diag = nullptr);

}  // namespace ccndtn
