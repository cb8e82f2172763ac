#pragma once

namespace qmcnls {

inline constexpr const char* kVersion = "0.1.0";

}  // namespace qmcnls
