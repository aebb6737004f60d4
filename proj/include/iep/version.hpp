#pragma once

namespace iep {
inline constexpr const char* kVersion = "iep 0.1.0";
}
