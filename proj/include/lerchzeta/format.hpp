#pragma once

#include <charconv>
#include <string>

namespace lerchzeta {

/// Shortest decimal form that reads back to the same double.
inline std::string shortest(double x) {
  char buf[32];
  const auto res = std::to_chars(buf, buf + sizeof buf, x);
  return std::string(buf, res.ptr);
}

}  // namespace lerchzeta
