#include "casimir/format.hpp"

#include <cstdio>

namespace casimir {

std::string sci9(double v) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.8e", v);
  return buf;
}

}  // namespace casimir
