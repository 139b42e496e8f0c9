#pragma once

namespace folkman {

inline constexpr const char* kToolVersion = "0.1.0";
inline constexpr const char* kSchemaVersion = "folkman.cert/1";

}  // namespace folkman
