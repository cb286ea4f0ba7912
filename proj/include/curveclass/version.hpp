#pragma once

namespace curveclass {

inline constexpr const char* kToolkitVersion = "0.1.0";

}  // namespace curveclass
