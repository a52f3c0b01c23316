#pragma once

#include <algorithm>
#include <cmath>

namespace testing_support {

inline bool rel_close(double x, double y, double tol) {
    return std::abs(x - y) <= tol * std::max({1.0, std::abs(x), std::abs(y)});
}

}  // namespace testing_support
