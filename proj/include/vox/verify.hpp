#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "vox/world.hpp"

namespace vox::verify {

// A block set translated so its min corner is the origin and minimized
// lexicographically over the four yaw rotations. Invariant under translation
// and yaw rotation of the input; canonicalization is idempotent.
struct CanonicalShape {
    std::vector<std::pair<Vec3i, std::uint8_t>> cells;  // sorted
    std::uint64_t signature = 0;

    bool operator==(const CanonicalShape& o) const { return cells == o.cells; }
};

CanonicalShape canonicalize(const std::vector<std::pair<Vec3i, BlockId>>& blockset);

// Translation/rotation-invariant hash of a diff's additions with material
// classes collapsed (all planks equal, all logs equal). Used for the
// uniqueness metric.
std::uint64_t shape_signature(const WorldDiff& diff);

enum class StructureKind { pole, wall, stairs, portal, pyramid };

std::string to_string(StructureKind kind);
std::optional<StructureKind> structure_from(const std::string& name);
const std::vector<StructureKind>& all_structures();

struct VerifyReport {
    bool success = false;
    std::string reason;  // non-empty on failure
    std::optional<Vec3i> matched_at;
};

// Ground-truth oracle: searches diff.added for a subset matching the
// template at any anchor and orientation. Grounding, air-above and portal
// interior rules are checked against world_after.
VerifyReport verify_structure(StructureKind kind, const WorldDiff& diff,
                              const VoxelWorld& world_after);

// Nether portal ignition: pos must sit in the 2x3 all-air interior of an
// obsidian frame (4-wide base, 5-tall sides, corners optional); fills the
// interior with portal blocks. No world change on failure.
OpStatus ignite(VoxelWorld& world, Vec3i pos);

}  // namespace vox::verify
