#pragma once

namespace adjhopf {

inline constexpr const char* kVersion = "0.1.0";

} // namespace adjhopf
