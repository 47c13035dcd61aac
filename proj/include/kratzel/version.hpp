#pragma once

namespace kratzel {

inline constexpr const char* library_version = "1.0.0";

}  // namespace kratzel
