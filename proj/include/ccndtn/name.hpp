// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace ccndtn {

// Malformed textual or structural input (names, EIDs, JSON documents).
struct ParseError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Hierarchical content name. Components are arbitrary byte strings; the
// canonical text form is "/"-separated with percent-encoding for '/', '%'
// and bytes outside printable ASCII. The empty name renders as "/".
class Name {
 public:
  Name() = default;
  explicit Name(std::vector<std::string> components);

  // Liberal parser: accepts lowercase hex digits and unnecessary escapes.
  // Rejects missing leading '/', empty components and malformed escapes.
  static Name parse(std::string_view text);

  // Canonical text: uppercase hex, minimal escaping.
  std::string to_string() const;

  // True when every component of *this equals the corresponding leading
  // component of other. Reflexive; the empty name is a prefix of all names.
  bool is_prefix_of(const Name& other) const;

  std::size_t size() const { return components_.size(); }
  bool empty() const { return components_.empty(); }
  const std::string& at(std::size_t i) const { return components_.at(i); }
  const std::vector<std::string>& components() const { return components_; }

  // BPQ value <-> name. The value is the canonical text as bytes; decoding
  // is strict: non-canonical input is rejected.
  std::vector<std::uint8_t> to_bpq_value() const;
  static Name from_bpq_value(std::span<const std::uint8_t> value);

  // Component-wise lexicographic byte order; a proper prefix sorts first.
  bool operator==(const Name&) const = default;
  auto operator<=>(const Name&) const = default;

 private:
  std::vector<std::string> components_;
};

std::ostream& operator<<(std::ostream& os, const Name& name);

// DTN endpoint identifier, "scheme:ssp". The scheme is non-empty
// alphanumeric ASCII; the ssp may be empty.
struct Eid {
  std::string scheme;
  std::string ssp;

  static Eid parse(std::string_view text);
  std::string to_string() const;

  bool operator==(const Eid&) const = default;
  auto operator<=>(const Eid&) const = default;
};

std::ostream& operator<<(std::ostream& os, const Eid& eid);

}  // namespace ccndtn
