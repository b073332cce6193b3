#pragma once

namespace dimerlab {

inline constexpr const char* kVersion = "0.1.0";

}  // namespace dimerlab
