#pragma once

#include <cstdint>
#include <filesystem>
#include <vector>

#include "lanewatch/types.hpp"

namespace lanewatch {

/// 8-bit grayscale raster, row-major.
struct GrayImage {
    int width = 0;
    int height = 0;
    std::vector<std::uint8_t> pixels;

    GrayImage() = default;
    GrayImage(int w, int h, std::uint8_t fill = 0)
        : width(w), height(h), pixels(static_cast<std::size_t>(w) * h, fill) {}

    std::uint8_t at(int x, int y) const {
        return pixels[static_cast<std::size_t>(y) * width + x];
    }
    std::uint8_t& at(int x, int y) {
        return pixels[static_cast<std::size_t>(y) * width + x];
    }
};

/// Rec.601 luma conversion for callers holding interleaved RGB buffers.
GrayImage gray_from_rgb(const std::uint8_t* rgb, int width, int height);

GrayImage load_pgm(const std::filesystem::path& path);
void save_pgm(const GrayImage& img, const std::filesystem::path& path);

}  // namespace lanewatch
