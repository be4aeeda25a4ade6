#pragma once

namespace stiran {

inline constexpr const char* kVersion = "0.1.0";

}  // namespace stiran
