#pragma once

#include <string>

namespace powerlog {

/// printf "%.<digits>g"; -0 is written as 0 so output is byte-stable.
[[nodiscard]] std::string format_significant(double value, int digits = 12);

/// printf "%.<decimals>f".
[[nodiscard]] std::string format_fixed(double value, int decimals);

}  // namespace powerlog
