#pragma once

namespace wittkit {

inline constexpr const char* kVersion = "0.1.0";

}  // namespace wittkit
