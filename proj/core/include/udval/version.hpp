#pragma once

namespace udval {

inline constexpr const char* kVersion = "0.1.0";

}  // namespace udval
