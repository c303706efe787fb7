// Copyright 2026 The Multisurface Gripper Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

// Minimal "key = value" text format with optional [section] headers and
// '#' comments.

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace gripper {

struct KvEntry {
  std::string section;  ///< empty before the first header
  std::string key;
  std::string value;
  std::size_t line = 0;
};

/// Throws ParseError on malformed lines and duplicate keys.
std::vector<KvEntry> parse_kv_text(std::string_view text);

/// Lookup over parsed entries that remembers which keys were read, so the
/// rest can be rejected as unknown.
class KvTable {
 public:
  explicit KvTable(std::vector<KvEntry> entries);

  const KvEntry* find(std::string_view section, std::string_view key);
  std::optional<std::string> text(std::string_view section, std::string_view key);
  /// Finite number or ParseError carrying the entry's line.
  std::optional<double> number(std::string_view section, std::string_view key);
  double require_number(std::string_view section, std::string_view key);

  /// Throws ParseError for the first entry never looked up.
  void reject_unread() const;
  const std::vector<KvEntry>& entries() const { return entries_; }

 private:
  std::vector<KvEntry> entries_;
  std::vector<bool> read_;
};

}  // namespace gripper
