#pragma once

namespace ncwave {

inline constexpr const char* kVersion = "0.1.0";

} // namespace ncwave
