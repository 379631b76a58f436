#include "akr/function.hpp"

#include <cstdio>
#include <string>

#include "akr/errors.hpp"

namespace akr {

std::string describe_real(double x) {
  char buffer[32];
  std::snprintf(buffer, sizeof buffer, "%g", x);
  return buffer;
}

void require_unit_interval(double x, const char* what) {
  if (!(x >= 0.0 && x <= 1.0)) {
    throw DomainError(std::string(what) + " = " + describe_real(x) + " is outside [0,1]");
  }
}

SquarePoint::SquarePoint(double x, double y) : x_(x), y_(y) {
  require_unit_interval(x, "x");
  require_unit_interval(y, "y");
}

}  // namespace akr
