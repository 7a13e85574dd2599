#pragma once

#include <cstdint>
#include <map>

namespace brieskorn {

// Closed degree interval [lo, hi].
struct DegreeWindow {
  std::int64_t lo = 0;
  std::int64_t hi = 0;

  bool contains(std::int64_t d) const noexcept { return lo <= d && d <= hi; }
  friend bool operator==(const DegreeWindow&, const DegreeWindow&) = default;
};

// Degree -> GF(2) dimension. Ordered so that emitted tables are stable.
using DegreeDims = std::map<std::int64_t, std::int64_t>;

// All degrees of the window present, zero-filled.
DegreeDims zero_dims(DegreeWindow w);

}  // namespace brieskorn
