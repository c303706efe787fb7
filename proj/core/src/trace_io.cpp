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

#include "gripper/trace_io.hpp"

#include <array>
#include <charconv>
#include <istream>
#include <ostream>

#include "gripper/error.hpp"
#include "gripper/units.hpp"

namespace gripper {

std::string format_number(double value) {
  if (value == 0.0) return "0";  // folds -0
  std::array<char, 64> buf{};
  const auto [end, ec] = std::to_chars(buf.data(), buf.data() + buf.size(), value);
  if (ec != std::errc{}) {
    throw Error("number formatting failed");
  }
  return std::string(buf.data(), end);
}

double parse_number(std::string_view text, std::size_t line) {
  while (!text.empty() && (text.front() == ' ' || text.front() == '\t')) {
    text.remove_prefix(1);
  }
  while (!text.empty() && (text.back() == ' ' || text.back() == '\t' ||
                           text.back() == '\r')) {
    text.remove_suffix(1);
  }
  if (!text.empty() && text.front() == '+') text.remove_prefix(1);
  double value = 0.0;
  const auto [ptr, ec] =
      std::from_chars(text.data(), text.data() + text.size(), value);
  if (text.empty() || ec != std::errc{} || ptr != text.data() + text.size()) {
    throw ParseError(line, "not a number: '" + std::string(text) + "'");
  }
  return value;
}

std::vector<std::string> split_csv_line(std::string_view line) {
  if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
  std::vector<std::string> fields;
  std::size_t start = 0;
  while (true) {
    const std::size_t comma = line.find(',', start);
    if (comma == std::string_view::npos) {
      fields.emplace_back(line.substr(start));
      break;
    }
    fields.emplace_back(line.substr(start, comma - start));
    start = comma + 1;
  }
  return fields;
}

void write_trace_csv(std::ostream& os, const SimTrace& trace) {
  os << kTraceHeader << '\n';
  for (const TraceRow& r : trace.rows) {
    os << r.step << ',' << format_number(rad_to_deg(r.theta_m)) << ','
       << format_number(r.tau_m) << ',' << format_number(r.d_f3s) << ','
       << format_number(r.d_f4s) << ','
       << format_number(rad_to_deg(r.theta_fb3s)) << ','
       << format_number(rad_to_deg(r.theta_fb4s)) << ','
       << format_number(r.f_g) << ',' << to_string(r.phase) << '\n';
  }
}

void write_events_csv(std::ostream& os, const SimTrace& trace) {
  os << kEventHeader << '\n';
  for (const SimEvent& e : trace.events) {
    os << e.step << ',' << to_string(e.type) << ',' << e.detail << '\n';
  }
}

namespace {

std::size_t parse_index(const std::string& text, std::size_t line) {
  std::size_t value = 0;
  const auto [ptr, ec] =
      std::from_chars(text.data(), text.data() + text.size(), value);
  if (text.empty() || ec != std::errc{} || ptr != text.data() + text.size()) {
    throw ParseError(line, "not a step index: '" + text + "'");
  }
  return value;
}

void expect_header(std::istream& is, std::string_view header) {
  std::string line;
  if (!std::getline(is, line)) {
    throw ParseError(1, "missing CSV header");
  }
  if (!line.empty() && line.back() == '\r') line.pop_back();
  if (line != header) {
    throw ParseError(1, "unexpected CSV header '" + line + "'");
  }
}

EventType parse_event_type(const std::string& name, std::size_t line) {
  for (EventType t : {EventType::kObjectContact, EventType::kStopperContact,
                      EventType::kBreakaway, EventType::kDetentReengage,
                      EventType::kModeChanged}) {
    if (to_string(t) == name) return t;
  }
  throw ParseError(line, "unknown event '" + name + "'");
}

}  // namespace

std::vector<TraceRow> read_trace_csv(std::istream& is) {
  expect_header(is, kTraceHeader);
  std::vector<TraceRow> rows;
  std::string line;
  std::size_t lineno = 1;
  while (std::getline(is, line)) {
    ++lineno;
    if (line.empty() || line == "\r") continue;
    const auto f = split_csv_line(line);
    if (f.size() != 9) {
      throw ParseError(lineno, "expected 9 columns, got " +
                                   std::to_string(f.size()));
    }
    TraceRow r;
    r.step = parse_index(f[0], lineno);
    r.theta_m = deg_to_rad(parse_number(f[1], lineno));
    r.tau_m = parse_number(f[2], lineno);
    r.d_f3s = parse_number(f[3], lineno);
    r.d_f4s = parse_number(f[4], lineno);
    r.theta_fb3s = deg_to_rad(parse_number(f[5], lineno));
    r.theta_fb4s = deg_to_rad(parse_number(f[6], lineno));
    r.f_g = parse_number(f[7], lineno);
    try {
      r.phase = parse_phase(f[8]);
    } catch (const InvalidArgument& e) {
      throw ParseError(lineno, e.what());
    }
    r.mode_index = 0;
    rows.push_back(r);
  }
  return rows;
}

std::vector<SimEvent> read_events_csv(std::istream& is) {
  expect_header(is, kEventHeader);
  std::vector<SimEvent> events;
  std::string line;
  std::size_t lineno = 1;
  while (std::getline(is, line)) {
    ++lineno;
    if (line.empty() || line == "\r") continue;
    const auto f = split_csv_line(line);
    if (f.size() != 3) {
      throw ParseError(lineno, "expected 3 columns, got " +
                                   std::to_string(f.size()));
    }
    events.push_back({parse_index(f[0], lineno), parse_event_type(f[1], lineno),
                      f[2]});
  }
  return events;
}

std::string sidecar_path(std::string_view trace_path, std::string_view suffix) {
  std::string path(trace_path);
  const std::size_t slash = path.find_last_of('/');
  const std::size_t dot = path.find_last_of('.');
  if (dot != std::string::npos && (slash == std::string::npos || dot > slash)) {
    return path.substr(0, dot) + std::string(suffix) + path.substr(dot);
  }
  return path + std::string(suffix) + ".csv";
}

}  // namespace gripper
