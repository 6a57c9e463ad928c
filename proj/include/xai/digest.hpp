#pragma once

#include <cstddef>
#include <cstdint>
#include <string>

namespace xai {

// 64-bit FNV-1a.
inline std::uint64_t fnv1a64(const unsigned char* data, std::size_t n) {
    std::uint64_t h = 0xCBF29CE484222325ULL;
    for (std::size_t i = 0; i < n; ++i) {
        h ^= static_cast<std::uint64_t>(data[i]);
        h *= 0x100000001B3ULL;
    }
    return h;
}

inline std::string to_hex64(std::uint64_t v) {
    static const char* digits = "0123456789abcdef";
    std::string s(16, '0');
    for (int i = 15; i >= 0; --i) {
        s[static_cast<std::size_t>(i)] = digits[v & 0xF];
        v >>= 4;
    }
    return s;
}

// Lowercase-hex FNV-1a digest of a file's bytes; throws IoError if unreadable.
std::string file_digest_hex(const std::string& path);

} // namespace xai
