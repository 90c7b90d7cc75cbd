// SPDX-License-Identifier: Apache-2.0
#include "ccndtn/name.hpp"

#include <cctype>
#include <ostream>

namespace ccndtn {

namespace {

bool needs_escape(unsigned char c) {
  return c == '/' || c == '%' || c < 0x20 || c > 0x7E;
}

int hex_digit(char c) {
  if (c >= '0' && c <= '9') return c - '0';
  if (c >= 'A' && c <= 'F') return c - 'A' + 10;
  if (c >= 'a' && c <= 'f') return c - 'a' + 10;
  return -1;
}

void append_escaped(std::string& out, const std::string& component) {
  static const char* hex = "0123456789ABCDEF";
  for (unsigned char c : component) {
    if (needs_escape(c)) {
      out += '%';
      out += hex[c >> 4];
      out += hex[c & 0xF];
    } else {
      out += static_cast<char>(c);
    }
  }
}

std::string decode_component(std::string_view text) {
  std::string out;
  out.reserve(text.size());
  for (std::size_t i = 0; i < text.size(); ++i) {
    char c = text[i];
    if (c != '%') {
      out += c;
      continue;
    }
    if (i + 2 >= text.size()) {
      throw ParseError("truncated percent-escape in name component");
    }
    int hi = hex_digit(text[i + 1]);
    int lo = hex_digit(text[i + 2]);
    if (hi < 0 || lo < 0) {
      throw ParseError("malformed percent-escape in name component");
    }
    out += static_cast<char>((hi << 4) | lo);
    i += 2;
  }
  return out;
}

}  // namespace

Name::Name(std::vector<std::string> components)
    : components_(std::move(components)) {
  for (const auto& c : components_) {
    if (c.empty()) throw ParseError("empty name component");
  }
}

Name Name::parse(std::string_view text) {
  if (text.empty() || text.front() != '/') {
    throw ParseError("name must begin with '/'");
  }
  if (text == "/") return Name{};
  std::vector<std::string> components;
  std::size_t start = 1;
  while (start <= text.size()) {
    std::size_t slash = text.find('/', start);
    std::string_view raw = slash == std::string_view::npos
                               ? text.substr(start)
                               : text.substr(start, slash - start);
    if (raw.empty()) throw ParseError("empty name component");
    components.push_back(decode_component(raw));
    if (slash == std::string_view::npos) break;
    start = slash + 1;
    if (start == text.size()) throw ParseError("empty name component");
  }
  return Name{std::move(components)};
}

std::string Name::to_string() const {
  if (components_.empty()) return "/";
  std::string out;
  for (const auto& c : components_) {
    out += '/';
    append_escaped(out, c);
  }
  return out;
}

bool Name::is_prefix_of(const Name& other) const {
  if (components_.size() > other.components_.size()) return false;
  for (std::size_t i = 0; i < components_.size(); ++i) {
    if (components_[i] != other.components_[i]) return false;
  }
  return true;
}

std::vector<std::uint8_t> Name::to_bpq_value() const {
  std::string text = to_string();
  return {text.begin(), text.end()};
}

Name Name::from_bpq_value(std::span<const std::uint8_t> value) {
  std::string text(value.begin(), value.end());
  Name parsed = Name::parse(text);
  if (parsed.to_string() != text) {
    throw ParseError("BPQ value is not a canonical name: " + text);
  }
  return parsed;
}

std::ostream& operator<<(std::ostream& os, const Name& name) {
  return os << name.to_string();
}

Eid Eid::parse(std::string_view text) {
  std::size_t colon = text.find(':');
  if (colon == std::string_view::npos) {
    throw ParseError("EID missing ':' separator: " + std::string(text));
  }
  std::string scheme(text.substr(0, colon));
  if (scheme.empty()) throw ParseError("EID scheme is empty");
  for (unsigned char c : scheme) {
    if (!std::isalnum(c)) {
      throw ParseError("EID scheme must be alphanumeric: " + scheme);
    }
  }
  return Eid{std::move(scheme), std::string(text.substr(colon + 1))};
}

std::string Eid::to_string() const { return scheme + ":" + ssp; }

std::ostream& operator<<(std::ostream& os, const Eid& eid) {
  return os << eid.to_string();
}

}  // namespace ccndtn
