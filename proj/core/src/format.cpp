#include "powerlog/format.hpp"

#include <cstdio>

namespace powerlog {

std::string format_significant(double value, int digits) {
  if (value == 0.0) value = 0.0;
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.*g", digits, value);
  return buf;
}

std::string format_fixed(double value, int decimals) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.*f", decimals, value);
  std::string s = buf;
  // "-0.000" -> "0.000"
  if (s.front() == '-' && s.find_first_not_of("-0.") == std::string::npos) s.erase(0, 1);
  return s;
}

}  // namespace powerlog
