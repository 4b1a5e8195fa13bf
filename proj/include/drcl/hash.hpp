#pragma once

#include <cstdint>
#include <cstddef>
#include <string>
#include <vector>

namespace drcl {

// FNV-1a, 64 bit. Used for config hashes and checkpoint payload integrity.
// Not cryptographic; the contract is deterministic identity, not security.
inline std::uint64_t fnv1a64(const void* data, std::size_t n,
                             std::uint64_t h = 0xcbf29ce484222325ULL) {
    const auto* p = static_cast<const unsigned char*>(data);
    for (std::size_t i = 0; i < n; ++i) {
        h ^= p[i];
        h *= 0x100000001b3ULL;
    }
    return h;
}

inline std::uint64_t fnv1a64(const std::string& s) {
    return fnv1a64(s.data(), s.size());
}

inline std::uint64_t fnv1a64(const std::vector<double>& v,
                             std::uint64_t h = 0xcbf29ce484222325ULL) {
    return fnv1a64(v.data(), v.size() * sizeof(double), h);
}

std::string to_hex(std::uint64_t h);

} // namespace drcl
