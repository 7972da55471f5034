#pragma once

namespace mutvis {

inline constexpr const char* kToolName = "mutvis";
inline constexpr const char* kToolVersion = "0.1.0";

} // namespace mutvis
