#pragma once

namespace homsuper {

inline constexpr const char* kVersion = "0.1.0";

} // namespace homsuper
