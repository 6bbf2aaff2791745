#pragma once

namespace berncond {

inline constexpr const char* kVersion = "0.1.0";

}  // namespace berncond
