#pragma once

namespace gclr {

inline constexpr const char* kVersion = "0.1.0";

}  // namespace gclr
