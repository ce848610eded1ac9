#pragma once

namespace feqs {

inline constexpr const char* kVersion = "0.1.0";

}  // namespace feqs
