#pragma once

#include <cstdint>
#include <vector>

namespace voicefp {

// Square 8-bit single-channel raster, row-major.
struct GrayImage {
    int side = 0;
    std::vector<std::uint8_t> pixels; // side * side

    std::uint8_t& at(int row, int col) { return pixels[static_cast<std::size_t>(row) * side + col]; }
    std::uint8_t at(int row, int col) const { return pixels[static_cast<std::size_t>(row) * side + col]; }
};

inline GrayImage make_gray(int side, std::uint8_t fill = 0) {
    return GrayImage{side, std::vector<std::uint8_t>(static_cast<std::size_t>(side) * side, fill)};
}

// The fused fingerprint raster: three 512x512 planes, stored planar.
struct RgbImage {
    static constexpr int kSide = 512;

    std::vector<std::uint8_t> red;
    std::vector<std::uint8_t> green;
    std::vector<std::uint8_t> blue;
};

inline RgbImage make_rgb(std::uint8_t fill = 0) {
    const std::size_t n = static_cast<std::size_t>(RgbImage::kSide) * RgbImage::kSide;
    return RgbImage{std::vector<std::uint8_t>(n, fill),
                    std::vector<std::uint8_t>(n, fill),
                    std::vector<std::uint8_t>(n, fill)};
}

} // namespace voicefp
