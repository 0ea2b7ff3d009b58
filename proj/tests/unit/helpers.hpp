#pragma once

#include <algorithm>
#include <string>
#include <vector>

#include "permahank/format.hpp"
#include "permahank/polynomial.hpp"

namespace permahank::test {

inline std::vector<Polynomial> polys(const Ring& ring, const std::vector<std::string>& texts) {
  return parse_all(texts, ring);
}

inline std::vector<std::string> texts(const std::vector<Polynomial>& ps) { return format_all(ps); }

inline std::vector<std::string> sorted_texts(const std::vector<Polynomial>& ps) {
  std::vector<std::string> out = format_all(ps);
  std::sort(out.begin(), out.end());
  return out;
}

inline std::vector<std::string> sorted(std::vector<std::string> v) {
  std::sort(v.begin(), v.end());
  return v;
}

}  // namespace permahank::test
