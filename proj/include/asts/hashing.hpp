#pragma once

#include <cstdint>
#include <string>
#include <string_view>

namespace asts {

/// 64-bit FNV-1a. Used for artifact/manifest fingerprints, not security.
constexpr std::uint64_t fnv1a64(std::string_view bytes, std::uint64_t h = 0xcbf29ce484222325ull) {
    for (char c : bytes) {
        h ^= static_cast<unsigned char>(c);
        h *= 0x00000100000001b3ull;
    }
    return h;
}

std::string hash_hex(std::uint64_t h);
std::string hash_string(std::string_view bytes);

/// Fingerprint of a file's contents. Throws std::runtime_error if unreadable.
std::string hash_file(const std::string& path);

}  // namespace asts
