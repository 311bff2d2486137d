#pragma once

namespace lgdot {

inline constexpr const char* version = "0.1.0";

}  // namespace lgdot
