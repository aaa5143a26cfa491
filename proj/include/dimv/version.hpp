#pragma once

namespace dimv {

inline constexpr const char* kToolName = "dimv";
inline constexpr const char* kToolVersion = "0.1.0";

}  // namespace dimv
