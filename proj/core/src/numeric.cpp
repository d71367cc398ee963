#include "ferrers/numeric.hpp"

namespace ferrers {

std::string to_string(u128 v) {
  if (v == 0) return "0";
  char buf[48];
  char* p = buf + sizeof buf;
  while (v > 0) {
    *--p = static_cast<char>('0' + static_cast<unsigned>(v % 10));
    v /= 10;
  }
  return std::string(p, buf + sizeof buf);
}

}  // namespace ferrers
