#pragma once

namespace permlab {

inline constexpr const char* kToolVersion = "0.1.0";

}  // namespace permlab
