#pragma once

#include <string_view>

namespace sliceball {

inline constexpr std::string_view kToolName = "sliceball";
inline constexpr std::string_view kVersion = "0.1.0";

}  // namespace sliceball
