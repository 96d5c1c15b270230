#pragma once

/*
 Small shared helpers: deterministic sub-seeding, round-trip float
 formatting (artifact files must be byte-stable across runs), ISO-8601
 timestamp handling and a FNV-1a hash used to fingerprint configs.
*/

#include <charconv>
#include <cstdint>
#include <cstdio>
#include <string>
#include <string_view>
#include <vector>

#include "stormcast/errors.hpp"

namespace stormcast {

// splitmix64; decorrelates per-stream seeds derived from one master seed.
inline std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t stream) {
    std::uint64_t z = seed + 0x9e3779b97f4a7c15ULL * (stream + 1);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

// Shortest round-trip decimal representation; locale-independent.
inline std::string format_double(double v) {
    char buf[32];
    auto res = std::to_chars(buf, buf + sizeof(buf), v);
    return std::string(buf, res.ptr);
}

inline std::uint64_t fnv1a64(std::string_view bytes, std::uint64_t h = 0xcbf29ce484222325ULL) {
    for (unsigned char c : bytes) {
        h ^= c;
        h *= 0x100000001b3ULL;
    }
    return h;
}

inline std::string fnv1a64_hex(std::string_view bytes) {
    char buf[17];
    std::snprintf(buf, sizeof(buf), "%016llx", (unsigned long long)fnv1a64(bytes));
    return std::string(buf);
}

// ---- civil time <-> unix seconds (UTC only) --------------------------------

namespace detail {

// Howard Hinnant's algorithms, valid across the whole int64 range we use.
inline std::int64_t days_from_civil(int y, int m, int d) {
    y -= m <= 2;
    const std::int64_t era = (y >= 0 ? y : y - 399) / 400;
    const unsigned yoe = static_cast<unsigned>(y - era * 400);
    const unsigned doy = (153u * (m + (m > 2 ? -3 : 9)) + 2) / 5 + d - 1;
    const unsigned doe = yoe * 365 + yoe / 4 - yoe / 100 + doy;
    return era * 146097 + static_cast<std::int64_t>(doe) - 719468;
}

inline void civil_from_days(std::int64_t z, int& y, int& m, int& d) {
    z += 719468;
    const std::int64_t era = (z >= 0 ? z : z - 146096) / 146097;
    const unsigned doe = static_cast<unsigned>(z - era * 146097);
    const unsigned yoe = (doe - doe / 1460 + doe / 36524 - doe / 146096) / 365;
    const std::int64_t yy = static_cast<std::int64_t>(yoe) + era * 400;
    const unsigned doy = doe - (365 * yoe + yoe / 4 - yoe / 100);
    const unsigned mp = (5 * doy + 2) / 153;
    d = static_cast<int>(doy - (153 * mp + 2) / 5 + 1);
    m = static_cast<int>(mp + (mp < 10 ? 3 : -9));
    y = static_cast<int>(yy + (m <= 2));
}

} // namespace detail

// "20170612T150500Z" (ISO-8601 basic format, UTC).
inline std::string iso_basic_utc(std::int64_t unix_seconds) {
    std::int64_t days = unix_seconds / 86400;
    std::int64_t rem = unix_seconds % 86400;
    if (rem < 0) {
        rem += 86400;
        days -= 1;
    }
    int y, m, d;
    detail::civil_from_days(days, y, m, d);
    char buf[20];
    std::snprintf(buf, sizeof(buf), "%04d%02d%02dT%02d%02d%02dZ", y, m, d,
                  (int)(rem / 3600), (int)(rem / 60 % 60), (int)(rem % 60));
    return std::string(buf);
}

// Accepts both basic (20170612T150500Z) and extended (2017-06-12T15:05:00Z).
inline std::int64_t parse_iso_utc(std::string_view s) {
    std::string digits;
    digits.reserve(14);
    for (char c : s) {
        if (c >= '0' && c <= '9') digits.push_back(c);
    }
    if (digits.size() != 14 || s.back() != 'Z')
        throw DataError("bad ISO-8601 UTC timestamp: " + std::string(s));
    auto num = [&](int pos, int len) {
        int v = 0;
        for (int i = 0; i < len; ++i) v = v * 10 + (digits[pos + i] - '0');
        return v;
    };
    const int y = num(0, 4), mo = num(4, 2), d = num(6, 2);
    const int h = num(8, 2), mi = num(10, 2), se = num(12, 2);
    if (mo < 1 || mo > 12 || d < 1 || d > 31 || h > 23 || mi > 59 || se > 60)
        throw DataError("bad ISO-8601 UTC timestamp: " + std::string(s));
    return detail::days_from_civil(y, mo, d) * 86400 + h * 3600 + mi * 60 + se;
}

// ---- tiny CSV helpers ------------------------------------------------------

// Fields never contain commas or quotes in our schemas, so no quoting logic.
inline std::vector<std::string> split_csv_line(std::string_view line) {
    std::vector<std::string> out;
    std::size_t start = 0;
    while (true) {
        std::size_t pos = line.find(',', start);
        if (pos == std::string_view::npos) {
            out.emplace_back(line.substr(start));
            break;
        }
        out.emplace_back(line.substr(start, pos - start));
        start = pos + 1;
    }
    if (!out.empty() && !out.back().empty() && out.back().back() == '\r') out.back().pop_back();
    return out;
}

inline double parse_double(std::string_view s) {
    double v = 0;
    auto res = std::from_chars(s.data(), s.data() + s.size(), v);
    if (res.ec != std::errc{}) throw DataError("bad numeric field: " + std::string(s));
    return v;
}

inline std::int64_t parse_int(std::string_view s) {
    std::int64_t v = 0;
    auto res = std::from_chars(s.data(), s.data() + s.size(), v);
    if (res.ec != std::errc{}) throw DataError("bad integer field: " + std::string(s));
    return v;
}

} // namespace stormcast
