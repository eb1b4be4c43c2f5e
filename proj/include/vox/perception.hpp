#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "vox/world.hpp"

namespace vox {

struct Camera {
    Vec3d position;
    double yaw = 0.0;    // degrees; 0 looks along +x, 90 along +z
    double pitch = 0.0;  // degrees in [-90, 90]; positive looks up
    double fov_y = 70.0;
    int width = 320;
    int height = 240;
};

// Camera placed exactly at the agent's head, matching its orientation.
Camera camera_at_head(const AgentState& agent, int width = 320, int height = 240);

struct Image {
    int width = 0;
    int height = 0;
    std::vector<std::uint8_t> rgb;  // row-major, 3 bytes per pixel

    bool valid() const {
        return rgb.size() == static_cast<std::size_t>(width) * height * 3;
    }
    const std::uint8_t* pixel(int x, int y) const {
        return rgb.data() + (static_cast<std::size_t>(y) * width + x) * 3;
    }
};

struct RayHit {
    Vec3i pos;
    Vec3i face;  // unit normal of the entered face
    double dist = 0.0;
};

// Exact voxel traversal (no skipped cells) up to max_dist.
// Returns nullopt on a miss; throws std::invalid_argument for a zero direction.
std::optional<RayHit> raycast(const VoxelWorld& world, Vec3d origin, Vec3d direction,
                              double max_dist = 64.0);

// Direction of the primary ray through pixel (px, py); exposed so tests can
// cross-check the renderer pixel by pixel.
Vec3d camera_ray(const Camera& camera, int px, int py);

// Color a single primary ray: flat block color x face shading, distance fog
// past 32 blocks, sky gradient on a miss.
void shade_ray(const VoxelWorld& world, Vec3d origin, Vec3d dir, std::uint8_t out[3]);

Image render(const VoxelWorld& world, const Camera& camera);
Image capture_pov(const VoxelWorld& world, const AgentState& agent, int width = 320,
                  int height = 240);

std::string encode_ppm(const Image& image);
Image decode_ppm(const std::string& bytes);
std::string encode_png(const Image& image);

}  // namespace vox
