#pragma once

namespace monoconn::detail {

inline long long ceil_div(long long a, long long b) { return a >= 0 ? (a + b - 1) / b : -((-a) / b); }
inline long long floor_div(long long a, long long b) { return a >= 0 ? a / b : -ceil_div(-a, b); }

}  // namespace monoconn::detail
