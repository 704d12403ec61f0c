#pragma once

namespace gkpsim {

inline constexpr const char* kVersion = "0.1.0";

}  // namespace gkpsim
