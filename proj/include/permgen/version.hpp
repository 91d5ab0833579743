#pragma once

namespace permgen {

inline constexpr const char* kVersion = "0.1.0";

}  // namespace permgen
