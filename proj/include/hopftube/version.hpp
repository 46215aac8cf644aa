#pragma once

namespace hopftube {

inline constexpr const char* kVersion = "0.1.0";

}  // namespace hopftube
