#pragma once

#include <cstdint>
#include <string>
#include <string_view>

namespace cyclesync {

/// FNV-1a 64-bit digest of a byte string. Used to stamp reports and meta
/// files with a short fingerprint of the exact input bytes.
[[nodiscard]] std::uint64_t fnv1a64(std::string_view bytes);

/// The digest as 16 lowercase hex digits.
[[nodiscard]] std::string fnv1a64_hex(std::string_view bytes);

}  // namespace cyclesync
