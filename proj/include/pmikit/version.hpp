#pragma once

namespace pmikit {

inline constexpr const char* kVersion = "0.1.0";

// Version of the model artifact JSON layout. Bump on incompatible changes.
inline constexpr int kModelFormatVersion = 1;

}  // namespace pmikit
