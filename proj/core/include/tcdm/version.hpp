#pragma once

namespace tcdm {

inline constexpr const char* version = "0.1.0";

} // namespace tcdm
