#pragma once

namespace eigenzeros {

inline constexpr const char* kVersion = "1.0.0";

}  // namespace eigenzeros
