#pragma once

#include <cmath>
#include <cstdint>
#include <cstring>
#include <string>
#include <tuple>

namespace vox {

struct Vec3i {
    int x = 0;
    int y = 0;
    int z = 0;

    friend Vec3i operator+(Vec3i a, Vec3i b) { return {a.x + b.x, a.y + b.y, a.z + b.z}; }
    friend Vec3i operator-(Vec3i a, Vec3i b) { return {a.x - b.x, a.y - b.y, a.z - b.z}; }
    friend bool operator==(Vec3i a, Vec3i b) { return a.x == b.x && a.y == b.y && a.z == b.z; }
    friend bool operator!=(Vec3i a, Vec3i b) { return !(a == b); }
    friend bool operator<(Vec3i a, Vec3i b) {
        return std::tie(a.x, a.y, a.z) < std::tie(b.x, b.y, b.z);
    }
};

struct Vec3d {
    double x = 0.0;
    double y = 0.0;
    double z = 0.0;

    friend Vec3d operator+(Vec3d a, Vec3d b) { return {a.x + b.x, a.y + b.y, a.z + b.z}; }
    friend Vec3d operator-(Vec3d a, Vec3d b) { return {a.x - b.x, a.y - b.y, a.z - b.z}; }
    friend Vec3d operator*(Vec3d a, double s) { return {a.x * s, a.y * s, a.z * s}; }

    double length() const { return std::sqrt(x * x + y * y + z * z); }
};

inline Vec3d center_of(Vec3i cell) {
    return {cell.x + 0.5, cell.y + 0.5, cell.z + 0.5};
}

inline double distance(Vec3d a, Vec3d b) { return (a - b).length(); }

// FNV-1a, the project's one hash for signatures, world hashes and transcripts.
inline std::uint64_t fnv1a64(const void* data, std::size_t n,
                             std::uint64_t h = 1469598103934665603ull) {
    const auto* p = static_cast<const unsigned char*>(data);
    for (std::size_t i = 0; i < n; ++i) {
        h ^= p[i];
        h *= 1099511628211ull;
    }
    return h;
}

inline std::uint64_t fnv1a64(const std::string& s, std::uint64_t h = 1469598103934665603ull) {
    return fnv1a64(s.data(), s.size(), h);
}

inline std::string hex64(std::uint64_t v) {
    char buf[17];
    std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(v));
    return buf;
}

// splitmix64 finalizer; used as a stateless per-coordinate RNG in terrain
// generation so results never depend on evaluation order.
inline std::uint64_t mix64(std::uint64_t v) {
    v += 0x9e3779b97f4a7c15ull;
    v = (v ^ (v >> 30)) * 0xbf58476d1ce4e5b9ull;
    v = (v ^ (v >> 27)) * 0x94d049bb133111ebull;
    return v ^ (v >> 31);
}

inline std::uint64_t mix64(std::uint64_t a, std::uint64_t b) { return mix64(a ^ mix64(b)); }

inline std::uint64_t coord_hash(std::uint64_t seed, int x, int y, int z, std::uint64_t salt) {
    std::uint64_t h = seed ^ salt;
    h = mix64(h ^ (static_cast<std::uint64_t>(static_cast<std::uint32_t>(x)) << 1));
    h = mix64(h ^ (static_cast<std::uint64_t>(static_cast<std::uint32_t>(y)) << 2));
    h = mix64(h ^ (static_cast<std::uint64_t>(static_cast<std::uint32_t>(z)) << 3));
    return h;
}

// uniform double in [0,1)
inline double hash_unit(std::uint64_t h) {
    return static_cast<double>(h >> 11) * (1.0 / 9007199254740992.0);
}

constexpr double kPi = 3.14159265358979323846;

inline double deg_to_rad(double d) { return d * kPi / 180.0; }
inline double rad_to_deg(double r) { return r * 180.0 / kPi; }

}  // namespace vox
