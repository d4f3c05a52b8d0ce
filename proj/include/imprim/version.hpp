#pragma once

namespace imprim {

inline constexpr const char* kVersion = "0.1.0";

}  // namespace imprim
