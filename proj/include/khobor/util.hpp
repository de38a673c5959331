// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 Khobor Contributors

#pragma once

#include <cstdint>
#include <string>
#include <string_view>

namespace khobor {

// Fixed two-decimal formatting, round half-up ("0.925" -> "0.93").
std::string format_fixed2(double value);

// FNV-1a, 64 bit.
std::uint64_t fnv1a64(std::string_view bytes,
                      std::uint64_t state = 0xcbf29ce484222325ULL);

std::string to_hex(std::uint64_t value);

// UTC timestamp, e.g. "2026-08-10T12:00:00Z".
std::string iso8601_now();

}  // namespace khobor
