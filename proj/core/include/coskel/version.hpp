#pragma once

namespace coskel {

inline constexpr const char* kEngineName = "coskel";
inline constexpr const char* kEngineVersion = "0.1.0";

// Bumped whenever the JSON report layout changes incompatibly.
inline constexpr const char* kReportSchemaVersion = "1";

} // namespace coskel
