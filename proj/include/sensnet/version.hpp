#pragma once

namespace sensnet {

// Embedded in every report so result files identify the code that wrote them.
inline constexpr const char* kVersion = "1.0.0";
inline constexpr int kSchemaVersion = 1;

}  // namespace sensnet
