#pragma once

#include "voicefp/image.hpp"

#include <cstdint>
#include <filesystem>
#include <vector>

namespace voicefp {

// Decoded PNG pixels, interleaved row-major. channels is 1 (gray) or 3 (RGB).
struct PngImage {
    std::uint32_t width = 0;
    std::uint32_t height = 0;
    int channels = 0;
    std::vector<std::uint8_t> data;
};

// Reader/writer for the subset this project emits: 8-bit depth, grayscale or
// RGB, no alpha, no interlacing, zlib-compressed scanlines. All five scanline
// filter types are handled on read; writes use filter 0 throughout so output
// bytes are a pure function of pixel content.
PngImage read_png(const std::filesystem::path& path);
void write_png(const std::filesystem::path& path, std::uint32_t width, std::uint32_t height,
               int channels, const std::uint8_t* data);

void write_png(const std::filesystem::path& path, const GrayImage& image);
void write_png(const std::filesystem::path& path, const RgbImage& image);

// In-memory encode, for byte-level determinism checks.
std::vector<std::uint8_t> encode_png(std::uint32_t width, std::uint32_t height, int channels,
                                     const std::uint8_t* data);

GrayImage gray_from_png(const PngImage& png);
RgbImage rgb_from_png(const PngImage& png);

} // namespace voicefp
