#pragma once

namespace rama {

inline constexpr const char* kVersion = "1.0.0";

}  // namespace rama
