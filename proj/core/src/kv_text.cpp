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

#include "gripper/kv_text.hpp"

#include <cmath>

#include "gripper/error.hpp"
#include "gripper/trace_io.hpp"

namespace gripper {
namespace {

std::string_view trim(std::string_view s) {
  const auto blank = [](char c) { return c == ' ' || c == '\t' || c == '\r'; };
  while (!s.empty() && blank(s.front())) s.remove_prefix(1);
  while (!s.empty() && blank(s.back())) s.remove_suffix(1);
  return s;
}

std::string qualified(std::string_view section, std::string_view key) {
  return section.empty() ? std::string(key)
                         : std::string(section) + "." + std::string(key);
}

}  // namespace

std::vector<KvEntry> parse_kv_text(std::string_view text) {
  std::vector<KvEntry> out;
  std::string section;
  std::size_t lineno = 0;
  while (!text.empty()) {
    ++lineno;
    const std::size_t nl = text.find('\n');
    std::string_view line = text.substr(0, nl);
    text.remove_prefix(nl == std::string_view::npos ? text.size() : nl + 1);

    if (const std::size_t hash = line.find('#'); hash != std::string_view::npos) {
      line = line.substr(0, hash);
    }
    line = trim(line);
    if (line.empty()) continue;

    if (line.front() == '[') {
      if (line.back() != ']' || line.size() < 3) {
        throw ParseError(lineno, "malformed section header");
      }
      section = std::string(trim(line.substr(1, line.size() - 2)));
      continue;
    }
    const std::size_t eq = line.find('=');
    if (eq == std::string_view::npos) {
      throw ParseError(lineno, "expected key=value");
    }
    KvEntry e{section, std::string(trim(line.substr(0, eq))),
              std::string(trim(line.substr(eq + 1))), lineno};
    if (e.key.empty()) throw ParseError(lineno, "empty key");
    for (const KvEntry& prev : out) {
      if (prev.section == e.section && prev.key == e.key) {
        throw ParseError(lineno, "duplicate key '" + qualified(e.section, e.key) +
                                     "' (first on line " +
                                     std::to_string(prev.line) + ")");
      }
    }
    out.push_back(std::move(e));
  }
  return out;
}

KvTable::KvTable(std::vector<KvEntry> entries)
    : entries_(std::move(entries)), read_(entries_.size(), false) {}

const KvEntry* KvTable::find(std::string_view section, std::string_view key) {
  for (std::size_t i = 0; i < entries_.size(); ++i) {
    if (entries_[i].section == section && entries_[i].key == key) {
      read_[i] = true;
      return &entries_[i];
    }
  }
  return nullptr;
}

std::optional<std::string> KvTable::text(std::string_view section,
                                         std::string_view key) {
  const KvEntry* e = find(section, key);
  if (e == nullptr) return std::nullopt;
  return e->value;
}

std::optional<double> KvTable::number(std::string_view section,
                                      std::string_view key) {
  const KvEntry* e = find(section, key);
  if (e == nullptr) return std::nullopt;
  const double v = parse_number(e->value, e->line);
  if (!std::isfinite(v)) {
    throw ParseError(e->line, qualified(section, key) + " must be finite");
  }
  return v;
}

double KvTable::require_number(std::string_view section, std::string_view key) {
  const auto v = number(section, key);
  if (!v) throw ParseError(0, "missing required key '" + qualified(section, key) + "'");
  return *v;
}

void KvTable::reject_unread() const {
  for (std::size_t i = 0; i < entries_.size(); ++i) {
    if (!read_[i]) {
      throw ParseError(entries_[i].line,
                       "unknown key '" +
                           qualified(entries_[i].section, entries_[i].key) + "'");
    }
  }
}

}  // namespace gripper
