#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace vox {

// Closed block enumeration. Order is the palette order used by snapshots
// and must stay in sync with assets/data/blocks.json.
enum class BlockId : std::uint8_t {
    air = 0,
    bedrock,
    dirt,
    grass_block,
    stone,
    cobblestone,
    oak_log,
    oak_leaves,
    spruce_log,
    oak_planks,
    spruce_planks,
    crafting_table,
    furnace,
    coal_ore,
    iron_ore,
    water,
    obsidian,
    portal,
    count_
};

constexpr int kBlockCount = static_cast<int>(BlockId::count_);

enum class ToolTier : std::uint8_t { none = 0, wooden, stone, iron, diamond };

struct BlockInfo {
    std::string name;
    std::array<std::uint8_t, 3> color{};
    bool breakable = true;
    ToolTier min_tier = ToolTier::none;
    std::string drop;  // empty = drops nothing
};

struct Recipe {
    std::string output;
    int output_count = 1;
    // Input item may be a tag reference ("#planks"); resolved against tags.
    std::vector<std::pair<std::string, int>> inputs;
    std::string station;  // "none", "crafting_table"
};

// The versioned block/recipe/drop/fuel tables, loaded once from
// assets/data/blocks.json and immutable afterwards.
class Registry {
public:
    static const Registry& instance();

    int format_version() const { return format_version_; }

    const BlockInfo& info(BlockId id) const;
    std::optional<BlockId> block_by_name(const std::string& name) const;
    const std::string& name(BlockId id) const { return info(id).name; }

    // Material class used by shape signatures; blocks outside any class map
    // to themselves.
    std::string material_class(const std::string& block_name) const;

    const std::vector<Recipe>& recipes() const { return recipes_; }
    const Recipe* recipe_for(const std::string& output) const;
    const std::vector<std::string>& tag_members(const std::string& tag) const;

    std::optional<std::string> smelt_output(const std::string& input) const;
    std::optional<double> fuel_value(const std::string& item) const;

    ToolTier tool_tier(const std::string& item) const;  // none for non-tools

private:
    Registry();

    int format_version_ = 0;
    std::vector<BlockInfo> blocks_;
    std::map<std::string, BlockId> by_name_;
    std::map<std::string, std::string> material_classes_;
    std::map<std::string, std::vector<std::string>> tags_;
    std::vector<Recipe> recipes_;
    std::map<std::string, std::string> smelting_;
    std::map<std::string, double> fuels_;
    std::map<std::string, ToolTier> tools_;
};

}  // namespace vox
