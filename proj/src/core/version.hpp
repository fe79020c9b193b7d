#pragma once

namespace cl8 {
inline constexpr const char* kVersion = "0.1.0";
}
