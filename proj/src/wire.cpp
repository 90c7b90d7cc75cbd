// SPDX-License-Identifier: Apache-2.0
#include "ccndtn/wire.hpp"

#include <algorithm>
#include <limits>
#include <type_traits>

namespace ccndtn {

namespace sdnv {

void append(Bytes& out, std::uint64_t value) {
  int groups = 1;
  for (std::uint64_t v = value; v >>= 7;) ++groups;
  for (int i = groups - 1; i >= 0; --i) {
    auto b = static_cast<std::uint8_t>((value >> (7 * i)) & 0x7F);
    if (i != 0) b |= 0x80;
    out.push_back(b);
  }
}

Bytes encode(std::uint64_t value) {
  Bytes out;
  append(out, value);
  return out;
}

Decoded decode(std::span<const std::uint8_t> buf, std::size_t at) {
  if (at >= buf.size()) throw WireError("truncated SDNV");
  Decoded d;
  d.minimal = buf[at] != 0x80;
  std::size_t pos = at;
  constexpr std::uint64_t kMax = std::numeric_limits<std::uint64_t>::max();
  while (true) {
    if (pos >= buf.size()) throw WireError("truncated SDNV");
    std::uint8_t b = buf[pos++];
    if (d.value > (kMax >> 7)) throw WireError("SDNV exceeds 64 bits");
    d.value = (d.value << 7) | (b & 0x7F);
    if ((b & 0x80) == 0) break;
  }
  d.consumed = pos - at;
  return d;
}

}  // namespace sdnv

namespace {

// Bounds-checked sequential reader over a frame.
struct Reader {
  std::span<const std::uint8_t> buf;
  std::size_t pos = 0;
  WireDiagnostics* diag = nullptr;

  std::uint8_t u8(const char* what) {
    if (pos >= buf.size()) throw WireError(std::string("truncated ") + what);
    return buf[pos++];
  }

  std::uint64_t varint(const char* what) {
    sdnv::Decoded d = sdnv::decode(buf, pos);
    if (!d.minimal && diag != nullptr) {
      diag->notes.push_back(std::string("non-minimal SDNV in ") + what);
    }
    pos += d.consumed;
    return d.value;
  }

  std::span<const std::uint8_t> take(std::uint64_t n, const char* what) {
    if (n > buf.size() - pos) throw WireError(std::string("truncated ") + what);
    auto out = buf.subspan(pos, static_cast<std::size_t>(n));
    pos += static_cast<std::size_t>(n);
    return out;
  }

  Bytes bytes_field(const char* what) {
    std::uint64_t n = varint(what);
    auto s = take(n, what);
    return Bytes(s.begin(), s.end());
  }

  std::string text_field(const char* what) {
    std::uint64_t n = varint(what);
    auto s = take(n, what);
    return std::string(s.begin(), s.end());
  }

  void expect_end(const char* what) {
    if (pos != buf.size()) {
      throw WireError(std::string("trailing bytes after ") + what);
    }
  }
};

void append_bytes_field(Bytes& out, std::span<const std::uint8_t> bytes) {
  sdnv::append(out, bytes.size());
  out.insert(out.end(), bytes.begin(), bytes.end());
}

void append_text_field(Bytes& out, const std::string& text) {
  sdnv::append(out, text.size());
  out.insert(out.end(), text.begin(), text.end());
}

void append_name(Bytes& out, const Name& name) {
  sdnv::append(out, name.size());
  for (const auto& c : name.components()) {
    sdnv::append(out, c.size());
    out.insert(out.end(), c.begin(), c.end());
  }
}

Name read_name(Reader& r) {
  std::uint64_t count = r.varint("name component count");
  std::vector<std::string> components;
  components.reserve(static_cast<std::size_t>(count));
  for (std::uint64_t i = 0; i < count; ++i) {
    std::string c = r.text_field("name component");
    if (c.empty()) throw WireError("empty name component");
    components.push_back(std::move(c));
  }
  return Name{std::move(components)};
}

Eid read_eid(Reader& r, const char* what) {
  std::string text = r.text_field(what);
  try {
    return Eid::parse(text);
  } catch (const ParseError& e) {
    throw WireError(std::string("bad ") + what + ": " + e.what());
  }
}

}  // namespace

PacketKind packet_kind(const CcnPacket& p) {
  return std::visit(
      [](const auto& v) -> PacketKind {
        using T = std::decay_t<decltype(v)>;
        if constexpr (std::is_same_v<T, Interest>) return PacketKind::Interest;
        if constexpr (std::is_same_v<T, DataPacket>) return PacketKind::Data;
        if constexpr (std::is_same_v<T, StatusResponse>) {
          return PacketKind::Status;
        }
      },
      p);
}

const Name& packet_name(const CcnPacket& p) {
  return std::visit([](const auto& v) -> const Name& { return v.name; }, p);
}

const char* to_string(PacketKind k) {
  switch (k) {
    case PacketKind::Interest: return "interest";
    case PacketKind::Data: return "data";
    case PacketKind::Status: return "status";
  }
  return "?";
}

Bytes encode_ccn_packet(const CcnPacket& p) {
  Bytes body;
  std::visit(
      [&body](const auto& v) {
        using T = std::decay_t<decltype(v)>;
        append_name(body, v.name);
        if constexpr (std::is_same_v<T, Interest>) {
          if (v.lifetime_ms == 0) {
            throw WireError("interest lifetime must be positive");
          }
          append_bytes_field(body, std::span(v.nonce.data(), v.nonce.size()));
          sdnv::append(body, v.lifetime_ms);
        } else if constexpr (std::is_same_v<T, DataPacket>) {
          append_bytes_field(body, v.payload);
          sdnv::append(body, v.freshness_ms);
          append_bytes_field(body, v.signature_placeholder);
        } else {
          if (v.code < 100 || v.code > 999) {
            throw WireError("status code must have three digits");
          }
          sdnv::append(body, v.code);
        }
      },
      p);
  Bytes out;
  out.push_back(static_cast<std::uint8_t>(packet_kind(p)));
  sdnv::append(out, body.size());
  out.insert(out.end(), body.begin(), body.end());
  return out;
}

CcnPacket decode_ccn_packet(std::span<const std::uint8_t> buf,
                            WireDiagnostics* diag) {
  Reader frame{buf, 0, diag};
  std::uint8_t type = frame.u8("packet type");
  std::uint64_t body_len = frame.varint("packet length");
  auto body_span = frame.take(body_len, "packet body");
  frame.expect_end("packet");

  Reader r{body_span, 0, diag};
  CcnPacket out;
  switch (type) {
    case static_cast<std::uint8_t>(PacketKind::Interest): {
      Interest v;
      v.name = read_name(r);
      Bytes nonce = r.bytes_field("nonce");
      if (nonce.size() != v.nonce.size()) {
        throw WireError("interest nonce must be 8 bytes");
      }
      std::copy(nonce.begin(), nonce.end(), v.nonce.begin());
      v.lifetime_ms = r.varint("interest lifetime");
      if (v.lifetime_ms == 0) {
        throw WireError("interest lifetime must be positive");
      }
      out = std::move(v);
      break;
    }
    case static_cast<std::uint8_t>(PacketKind::Data): {
      DataPacket v;
      v.name = read_name(r);
      v.payload = r.bytes_field("data payload");
      v.freshness_ms = r.varint("data freshness");
      v.signature_placeholder = r.bytes_field("data signature");
      out = std::move(v);
      break;
    }
    case static_cast<std::uint8_t>(PacketKind::Status): {
      StatusResponse v;
      v.name = read_name(r);
      std::uint64_t code = r.varint("status code");
      if (code < 100 || code > 999) {
        throw WireError("status code must have three digits");
      }
      v.code = static_cast<std::uint32_t>(code);
      out = std::move(v);
      break;
    }
    default:
      throw WireError("unknown packet type " + std::to_string(type));
  }
  r.expect_end("packet body");
  return out;
}

const char* to_string(BpqKind k) {
  switch (k) {
    case BpqKind::Query: return "query";
    case BpqKind::Response: return "response";
    case BpqKind::ResponseDoNotFragment: return "response_do_not_fragment";
    case BpqKind::Publish: return "publish";
  }
  return "?";
}

std::string Bundle::id() const {
  return source.to_string() + "|" + std::to_string(creation_timestamp.time_ms) +
         "|" + std::to_string(creation_timestamp.seq);
}

Bytes encode_bundle(const Bundle& b) {
  if (b.bpq && b.bpq->fragments.size() != b.bpq->fragment_count) {
    throw WireError("BPQ fragment list does not match fragment_count");
  }
  Bytes out;
  out.push_back(kBundleFrameType);
  append_text_field(out, b.source.to_string());
  append_text_field(out, b.destination.to_string());
  sdnv::append(out, b.creation_timestamp.time_ms);
  sdnv::append(out, b.creation_timestamp.seq);
  sdnv::append(out, b.lifetime_ms);
  sdnv::append(out, b.hop_limit);
  out.push_back(b.bpq ? 1 : 0);
  if (b.bpq) {
    const BpqBlock& q = *b.bpq;
    out.push_back(static_cast<std::uint8_t>(q.kind));
    append_bytes_field(out, q.value);
    sdnv::append(out, q.original_creation_timestamp.time_ms);
    sdnv::append(out, q.original_creation_timestamp.seq);
    sdnv::append(out, q.fragment_count);
    for (const auto& f : q.fragments) {
      sdnv::append(out, f.offset);
      sdnv::append(out, f.length);
    }
  }
  append_bytes_field(out, b.payload);
  return out;
}

Bundle decode_bundle(std::span<const std::uint8_t> buf, WireDiagnostics* diag) {
  Reader r{buf, 0, diag};
  if (r.u8("bundle frame type") != kBundleFrameType) {
    throw WireError("not a bundle frame");
  }
  Bundle b;
  b.source = read_eid(r, "source EID");
  b.destination = read_eid(r, "destination EID");
  b.creation_timestamp.time_ms = r.varint("creation time");
  b.creation_timestamp.seq = r.varint("creation sequence");
  b.lifetime_ms = r.varint("bundle lifetime");
  b.hop_limit = r.varint("hop limit");
  std::uint8_t has_bpq = r.u8("BPQ flag");
  if (has_bpq > 1) throw WireError("bad BPQ flag");
  if (has_bpq == 1) {
    BpqBlock q;
    std::uint8_t kind = r.u8("BPQ kind");
    if (kind > static_cast<std::uint8_t>(BpqKind::Publish)) {
      throw WireError("unknown BPQ kind " + std::to_string(kind));
    }
    q.kind = static_cast<BpqKind>(kind);
    q.value = r.bytes_field("BPQ value");
    q.original_creation_timestamp.time_ms = r.varint("BPQ original time");
    q.original_creation_timestamp.seq = r.varint("BPQ original sequence");
    q.fragment_count = r.varint("BPQ fragment count");
    if (q.fragment_count > buf.size()) {
      throw WireError("BPQ fragment count exceeds frame size");
    }
    q.fragments.reserve(static_cast<std::size_t>(q.fragment_count));
    for (std::uint64_t i = 0; i < q.fragment_count; ++i) {
      FragmentRange f;
      f.offset = r.varint("fragment offset");
      f.length = r.varint("fragment length");
      q.fragments.push_back(f);
    }
    b.bpq = std::move(q);
  }
  b.payload = r.bytes_field("bundle payload");
  r.expect_end("bundle");
  return b;
}

}  // namespace ccndtn
