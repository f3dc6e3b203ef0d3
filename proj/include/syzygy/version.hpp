#pragma once

#include <string_view>

namespace syzygy {

/// Bumped whenever basis ordering or matrix assembly changes; cached ranks
/// carry it and are ignored on mismatch.
inline constexpr std::string_view kVersion = "1.0.0";

} // namespace syzygy
