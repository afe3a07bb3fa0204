#pragma once

namespace jchains {

inline constexpr const char* kToolVersion = "1.0.0";
/// Bumped on any change to the JSON layout or a CSV column set.
inline constexpr int kSchemaVersion = 1;

}  // namespace jchains
