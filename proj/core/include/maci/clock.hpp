#pragma once

#include <string>

namespace maci {

// Minutes since midnight; the whole engine plans within a single day.
using Minute = int;

constexpr Minute kMinutesPerDay = 1440;

// Accepts "H:MM", "HH:MM", or a bare minute count ("780").
Minute parse_minute(const std::string& text);

// 780 -> "13:00".
std::string format_minute(Minute m);

// "13:00-14:30" style interval used in reports.
std::string format_window(Minute start, Minute end);

}  // namespace maci
