#include "qutrit/format.hpp"

#include <cstdio>

namespace qutrit {

std::string format_double(double x) {
  char buf[32];
  const int len = std::snprintf(buf, sizeof buf, "%.17g", x);
  return std::string(buf, static_cast<std::size_t>(len));
}

}  // namespace qutrit
