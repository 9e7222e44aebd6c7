#pragma once

namespace igz {

inline constexpr const char* kToolName = "igz";
inline constexpr const char* kVersion = "0.1.0";

} // namespace igz
