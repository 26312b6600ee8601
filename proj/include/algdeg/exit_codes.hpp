#pragma once

namespace algdeg {

inline constexpr int kExitMatch = 0;
inline constexpr int kExitMismatch = 2;
inline constexpr int kExitTimeout = 3;
inline constexpr int kExitParseError = 4;
inline constexpr int kExitShapeError = 5;

}  // namespace algdeg
