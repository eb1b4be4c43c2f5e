#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "vox/blocks.hpp"
#include "vox/geom.hpp"

namespace vox {

enum class WorldKind : std::uint8_t { flat, regular };

std::string to_string(WorldKind kind);
std::optional<WorldKind> world_kind_from(const std::string& s);

// World extent. x,z in [-128, 128], y in [0, 64]; everything outside reads
// as air except the y=0 bedrock floor.
constexpr int kWorldRadius = 128;
constexpr int kWorldHeight = 64;
constexpr int kFlatSurfaceY = 4;
constexpr double kReach = 4.0;
constexpr double kStationRange = 3.0;
constexpr double kEyeHeight = 1.6;
constexpr int kStackLimit = 64;
constexpr int kInventorySlots = 36;

struct ItemStack {
    std::string item;
    int count = 0;
};

// Slot-normalized inventory: stacks stay in first-acquisition order, same
// items merge up to the stack limit, empty slots are dropped.
class Inventory {
public:
    int count(const std::string& item) const;
    // false when the 36-slot cap would be exceeded; the overflow is discarded
    // by callers (there are no ground item entities).
    bool add(const std::string& item, int n);
    bool remove(const std::string& item, int n);
    int slots_used() const;
    bool empty() const { return stacks_.empty(); }

    // Aggregated (item, total) pairs in first-acquisition order.
    std::vector<ItemStack> aggregated() const;
    const std::vector<ItemStack>& slots() const { return stacks_; }

private:
    std::vector<ItemStack> stacks_;
};

struct AgentState {
    Vec3i pos;  // feet cell; the agent occupies pos and pos+(0,1,0)
    double yaw = 0.0;
    double pitch = 0.0;
    Inventory inventory;
    std::optional<std::string> equipment;
    // Combat and eating are out of scope; these render as constants.
    static constexpr double health = 20.0;
    static constexpr double hunger = 20.0;

    Vec3d eye() const { return {pos.x + 0.5, pos.y + kEyeHeight, pos.z + 0.5}; }
    Vec3d feet_center() const { return {pos.x + 0.5, pos.y + 0.5, pos.z + 0.5}; }
};

class VoxelWorld {
public:
    VoxelWorld(std::uint64_t seed, WorldKind kind);

    std::uint64_t seed() const { return seed_; }
    WorldKind kind() const { return kind_; }
    std::int64_t time() const { return time_; }
    void advance_time(std::int64_t ticks) { time_ += ticks; }

    BlockId at(Vec3i pos) const;
    void set(Vec3i pos, BlockId id);
    static bool in_bounds(Vec3i pos);

    // Terrain height (top solid ground, ignoring trees) for a column; used
    // for spawning and biome labels.
    int ground_height(int x, int z) const;
    std::string biome_at(Vec3i pos) const;
    std::string time_label() const;

    std::uint64_t block_hash() const;

private:
    void generate_flat();
    void generate_regular();
    void plant_tree(int x, int z, int surface_y, std::uint64_t column_hash);

    std::uint64_t seed_;
    WorldKind kind_;
    std::int64_t time_ = 0;
    std::vector<std::uint8_t> blocks_;
};

VoxelWorld generate_world(std::uint64_t seed, WorldKind kind);

// Nearest valid standing cell to (0, 0): solid dry ground, two air cells
// above, no tree trunk in the column.
AgentState spawn_agent(const VoxelWorld& world);

enum class WorldError {
    OutOfReach,
    InsufficientTool,
    Unbreakable,
    NotInInventory,
    NoSupport,
    Occupied,
    WouldSuffocate,
    NoRecipe,
    MissingStation,
    MissingInputs,
    InsufficientFuel,
    NotAValidFrame,
    SeedMismatch,
    InventoryFull,
};

std::string to_string(WorldError e);

struct OpError {
    WorldError code;
    std::string detail;

    std::string message() const {
        return detail.empty() ? to_string(code) : to_string(code) + ": " + detail;
    }
};

template <typename T>
struct OpResult {
    std::optional<T> value;
    std::optional<OpError> error;

    bool ok() const { return !error.has_value(); }
    static OpResult success(T v) { return {std::move(v), std::nullopt}; }
    static OpResult fail(WorldError code, std::string detail = "") {
        return {std::nullopt, OpError{code, std::move(detail)}};
    }
};

using OpStatus = OpResult<std::monostate>;
inline OpStatus op_ok() { return OpStatus::success({}); }

// Primitive world operations. Errors leave world and inventory untouched.
OpResult<ItemStack> break_block(VoxelWorld& world, AgentState& agent, Vec3i pos);
OpStatus place_block(VoxelWorld& world, AgentState& agent, Vec3i pos, const std::string& item);
OpStatus craft(VoxelWorld& world, AgentState& agent, const std::string& item, int count);
OpStatus smelt(VoxelWorld& world, AgentState& agent, const std::string& item, int count,
               const std::string& fuel);

std::vector<std::string> nearby_blocks(const VoxelWorld& world, Vec3i pos, int radius = 16);

struct WorldDiff {
    std::vector<std::pair<Vec3i, BlockId>> added;
    std::vector<std::pair<Vec3i, BlockId>> removed;

    bool empty() const { return added.empty() && removed.empty(); }
};

OpResult<WorldDiff> world_diff(const VoxelWorld& before, const VoxelWorld& after);
void apply_diff(VoxelWorld& world, const WorldDiff& diff);

// Snapshot file: {format_version, seed, kind, palette, blocks, agent, time}
// with canonical (sorted) key order.
std::string snapshot_to_json(const VoxelWorld& world, const AgentState& agent);
std::pair<VoxelWorld, AgentState> snapshot_from_json(const std::string& text);

}  // namespace vox
