#include "maci/clock.hpp"

#include <cctype>
#include <cstdio>
#include <stdexcept>

namespace maci {

Minute parse_minute(const std::string& text) {
  if (text.empty()) throw std::invalid_argument("empty time value");
  auto colon = text.find(':');
  if (colon == std::string::npos) {
    size_t pos = 0;
    int v = std::stoi(text, &pos);
    if (pos != text.size()) throw std::invalid_argument("bad time value: " + text);
    return v;
  }
  int h = std::stoi(text.substr(0, colon));
  const std::string mm = text.substr(colon + 1);
  if (mm.size() != 2 || !isdigit((unsigned char)mm[0]) || !isdigit((unsigned char)mm[1]))
    throw std::invalid_argument("bad time value: " + text);
  int m = std::stoi(mm);
  if (h < 0 || h > 24 || m < 0 || m > 59)
    throw std::invalid_argument("time out of range: " + text);
  return h * 60 + m;
}

std::string format_minute(Minute m) {
  char buf[16];
  std::snprintf(buf, sizeof(buf), "%02d:%02d", m / 60, m % 60);
  return buf;
}

std::string format_window(Minute start, Minute end) {
  if (start == end) return format_minute(start);
  return format_minute(start) + "-" + format_minute(end);
}

}  // namespace maci
