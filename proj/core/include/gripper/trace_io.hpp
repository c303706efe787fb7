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

// CSV serialization of simulator traces. Angles are written in degrees,
// numbers in shortest round-trip form with '.' as the decimal separator.

#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include "gripper/sim_engine.hpp"

namespace gripper {

inline constexpr std::string_view kTraceHeader =
    "step,theta_m_deg,tau_m_Nmm,d_f3S_mm,d_f4S_mm,theta_FB3S_deg,"
    "theta_FB4S_deg,f_g_N,phase";
inline constexpr std::string_view kEventHeader = "step,event,detail";

/// Locale-independent shortest representation that parses back exactly.
std::string format_number(double value);
/// Strict locale-independent parse; throws ParseError on trailing junk.
double parse_number(std::string_view text, std::size_t line = 0);

std::vector<std::string> split_csv_line(std::string_view line);

void write_trace_csv(std::ostream& os, const SimTrace& trace);
void write_events_csv(std::ostream& os, const SimTrace& trace);

/// Reads rows written by write_trace_csv. mode_index is not serialized and
/// comes back as 0.
std::vector<TraceRow> read_trace_csv(std::istream& is);
std::vector<SimEvent> read_events_csv(std::istream& is);

/// "out/trace.csv" -> "out/trace_events.csv".
std::string sidecar_path(std::string_view trace_path,
                         std::string_view suffix = "_events");

}  // namespace gripper
