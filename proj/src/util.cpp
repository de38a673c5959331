// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 Khobor Contributors

#include "khobor/util.hpp"

#include <chrono>
#include <cmath>
#include <cstdio>
#include <ctime>

namespace khobor {

std::string format_fixed2(double value) {
    const bool negative = value < 0.0;
    const double cents = std::floor(std::abs(value) * 100.0 + 0.5);
    const auto whole = static_cast<long long>(cents) / 100;
    const auto frac = static_cast<long long>(cents) % 100;
    char buf[48];
    std::snprintf(buf, sizeof(buf), "%s%lld.%02lld", negative ? "-" : "", whole, frac);
    return buf;
}

std::uint64_t fnv1a64(std::string_view bytes, std::uint64_t state) {
    for (unsigned char b : bytes) {
        state ^= b;
        state *= 0x100000001b3ULL;
    }
    return state;
}

std::string to_hex(std::uint64_t value) {
    char buf[17];
    std::snprintf(buf, sizeof(buf), "%016llx", static_cast<unsigned long long>(value));
    return buf;
}

std::string iso8601_now() {
    const std::time_t now = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
    std::tm utc{};
    gmtime_r(&now, &utc);
    char buf[32];
    std::strftime(buf, sizeof(buf), "%Y-%m-%dT%H:%M:%SZ", &utc);
    return buf;
}

}  // namespace khobor
