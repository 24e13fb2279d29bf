#pragma once

namespace fincomp {

inline constexpr const char* kVersion = "0.1.0";

} // namespace fincomp
