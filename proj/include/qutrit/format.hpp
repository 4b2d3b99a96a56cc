#ifndef QUTRIT_FORMAT_HPP
#define QUTRIT_FORMAT_HPP

#include <string>

namespace qutrit {

/// 17 significant digits (%.17g): parses back to the identical double.
std::string format_double(double x);

}  // namespace qutrit

#endif  // QUTRIT_FORMAT_HPP
