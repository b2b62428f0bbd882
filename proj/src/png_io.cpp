#include "voicefp/png_io.hpp"

#include "voicefp/errors.hpp"

#include <zlib.h>

#include <cmath>
#include <cstdlib>
#include <cstring>
#include <fstream>

namespace voicefp {

namespace {

constexpr std::uint8_t kSignature[8] = {137, 80, 78, 71, 13, 10, 26, 10};

void put_be32(std::vector<std::uint8_t>& out, std::uint32_t v) {
    out.push_back(static_cast<std::uint8_t>(v >> 24));
    out.push_back(static_cast<std::uint8_t>((v >> 16) & 0xff));
    out.push_back(static_cast<std::uint8_t>((v >> 8) & 0xff));
    out.push_back(static_cast<std::uint8_t>(v & 0xff));
}

std::uint32_t get_be32(const std::uint8_t* p) {
    return (static_cast<std::uint32_t>(p[0]) << 24) | (static_cast<std::uint32_t>(p[1]) << 16) |
           (static_cast<std::uint32_t>(p[2]) << 8) | static_cast<std::uint32_t>(p[3]);
}

void append_chunk(std::vector<std::uint8_t>& out, const char type[4],
                  const std::uint8_t* payload, std::size_t size) {
    put_be32(out, static_cast<std::uint32_t>(size));
    const std::size_t type_pos = out.size();
    out.insert(out.end(), type, type + 4);
    out.insert(out.end(), payload, payload + size);
    uLong crc = crc32(0L, Z_NULL, 0);
    crc = crc32(crc, out.data() + type_pos, static_cast<uInt>(4 + size));
    put_be32(out, static_cast<std::uint32_t>(crc));
}

int paeth(int a, int b, int c) {
    const int p = a + b - c;
    const int pa = std::abs(p - a);
    const int pb = std::abs(p - b);
    const int pc = std::abs(p - c);
    if (pa <= pb && pa <= pc) return a;
    if (pb <= pc) return b;
    return c;
}

} // namespace

std::vector<std::uint8_t> encode_png(std::uint32_t width, std::uint32_t height, int channels,
                                     const std::uint8_t* data) {
    if (width == 0 || height == 0 || (channels != 1 && channels != 3)) {
        throw BadPng("unsupported geometry for encode");
    }

    const std::size_t stride = static_cast<std::size_t>(width) * channels;
    std::vector<std::uint8_t> raw;
    raw.reserve((stride + 1) * height);
    for (std::uint32_t y = 0; y < height; ++y) {
        raw.push_back(0); // filter type: none
        raw.insert(raw.end(), data + y * stride, data + (y + 1) * stride);
    }

    uLongf comp_size = compressBound(static_cast<uLong>(raw.size()));
    std::vector<std::uint8_t> comp(comp_size);
    if (compress2(comp.data(), &comp_size, raw.data(), static_cast<uLong>(raw.size()),
                  Z_DEFAULT_COMPRESSION) != Z_OK) {
        throw BadPng("deflate failed");
    }
    comp.resize(comp_size);

    std::vector<std::uint8_t> out;
    out.insert(out.end(), kSignature, kSignature + 8);

    std::uint8_t ihdr[13];
    ihdr[0] = static_cast<std::uint8_t>(width >> 24);
    ihdr[1] = static_cast<std::uint8_t>((width >> 16) & 0xff);
    ihdr[2] = static_cast<std::uint8_t>((width >> 8) & 0xff);
    ihdr[3] = static_cast<std::uint8_t>(width & 0xff);
    ihdr[4] = static_cast<std::uint8_t>(height >> 24);
    ihdr[5] = static_cast<std::uint8_t>((height >> 16) & 0xff);
    ihdr[6] = static_cast<std::uint8_t>((height >> 8) & 0xff);
    ihdr[7] = static_cast<std::uint8_t>(height & 0xff);
    ihdr[8] = 8;                                             // bit depth
    ihdr[9] = static_cast<std::uint8_t>(channels == 1 ? 0 : 2); // gray / RGB
    ihdr[10] = 0;                                            // compression
    ihdr[11] = 0;                                            // filter method
    ihdr[12] = 0;                                            // no interlace
    append_chunk(out, "IHDR", ihdr, sizeof(ihdr));
    append_chunk(out, "IDAT", comp.data(), comp.size());
    append_chunk(out, "IEND", nullptr, 0);
    return out;
}

void write_png(const std::filesystem::path& path, std::uint32_t width, std::uint32_t height,
               int channels, const std::uint8_t* data) {
    const std::vector<std::uint8_t> bytes = encode_png(width, height, channels, data);
    std::ofstream f(path, std::ios::binary | std::ios::trunc);
    if (!f) {
        throw IoFailure("cannot open " + path.string() + " for writing");
    }
    f.write(reinterpret_cast<const char*>(bytes.data()), static_cast<std::streamsize>(bytes.size()));
    if (!f) {
        throw IoFailure("write failed for " + path.string());
    }
}

void write_png(const std::filesystem::path& path, const GrayImage& image) {
    write_png(path, static_cast<std::uint32_t>(image.side), static_cast<std::uint32_t>(image.side),
              1, image.pixels.data());
}

void write_png(const std::filesystem::path& path, const RgbImage& image) {
    const std::size_t n = static_cast<std::size_t>(RgbImage::kSide) * RgbImage::kSide;
    std::vector<std::uint8_t> interleaved(n * 3);
    for (std::size_t i = 0; i < n; ++i) {
        interleaved[i * 3 + 0] = image.red[i];
        interleaved[i * 3 + 1] = image.green[i];
        interleaved[i * 3 + 2] = image.blue[i];
    }
    write_png(path, RgbImage::kSide, RgbImage::kSide, 3, interleaved.data());
}

PngImage read_png(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw IoFailure("cannot open " + path.string());
    }
    std::vector<std::uint8_t> bytes((std::istreambuf_iterator<char>(in)),
                                    std::istreambuf_iterator<char>());
    if (in.bad()) {
        throw IoFailure("read failed for " + path.string());
    }

    if (bytes.size() < 8 || std::memcmp(bytes.data(), kSignature, 8) != 0) {
        throw BadPng("bad signature in " + path.string());
    }

    PngImage img;
    std::vector<std::uint8_t> idat;
    bool have_ihdr = false;
    bool have_iend = false;

    std::size_t off = 8;
    while (off + 12 <= bytes.size()) {
        const std::uint32_t size = get_be32(bytes.data() + off);
        const std::uint8_t* type = bytes.data() + off + 4;
        if (off + 12 + static_cast<std::size_t>(size) > bytes.size()) {
            throw BadPng("truncated chunk");
        }
        const std::uint8_t* payload = bytes.data() + off + 8;

        uLong crc = crc32(0L, Z_NULL, 0);
        crc = crc32(crc, type, 4 + size);
        if (static_cast<std::uint32_t>(crc) != get_be32(payload + size)) {
            throw BadPng("chunk CRC mismatch");
        }

        if (std::memcmp(type, "IHDR", 4) == 0) {
            if (size != 13) throw BadPng("bad IHDR size");
            img.width = get_be32(payload);
            img.height = get_be32(payload + 4);
            const int depth = payload[8];
            const int color = payload[9];
            const int interlace = payload[12];
            if (depth != 8 || (color != 0 && color != 2) || interlace != 0) {
                throw BadPng("unsupported PNG variant (need 8-bit gray or RGB, no interlace)");
            }
            img.channels = (color == 0) ? 1 : 3;
            have_ihdr = true;
        } else if (std::memcmp(type, "IDAT", 4) == 0) {
            idat.insert(idat.end(), payload, payload + size);
        } else if (std::memcmp(type, "IEND", 4) == 0) {
            have_iend = true;
            break;
        }
        off += 12 + size;
    }

    if (!have_ihdr || !have_iend || idat.empty() || img.width == 0 || img.height == 0) {
        throw BadPng("incomplete PNG stream");
    }

    const std::size_t stride = static_cast<std::size_t>(img.width) * img.channels;
    const std::size_t raw_size = (stride + 1) * img.height;
    std::vector<std::uint8_t> raw(raw_size);
    uLongf dest_len = static_cast<uLongf>(raw_size);
    if (uncompress(raw.data(), &dest_len, idat.data(), static_cast<uLong>(idat.size())) != Z_OK ||
        dest_len != raw_size) {
        throw BadPng("inflate failed");
    }

    // Undo per-scanline filtering.
    const int bpp = img.channels;
    img.data.assign(stride * img.height, 0);
    for (std::uint32_t y = 0; y < img.height; ++y) {
        const std::uint8_t filter = raw[y * (stride + 1)];
        const std::uint8_t* src = raw.data() + y * (stride + 1) + 1;
        std::uint8_t* cur = img.data.data() + y * stride;
        const std::uint8_t* prev = (y > 0) ? img.data.data() + (y - 1) * stride : nullptr;
        for (std::size_t x = 0; x < stride; ++x) {
            const int a = (x >= static_cast<std::size_t>(bpp)) ? cur[x - bpp] : 0;
            const int b = prev ? prev[x] : 0;
            const int c = (prev && x >= static_cast<std::size_t>(bpp)) ? prev[x - bpp] : 0;
            int v = src[x];
            switch (filter) {
                case 0: break;
                case 1: v += a; break;
                case 2: v += b; break;
                case 3: v += (a + b) / 2; break;
                case 4: v += paeth(a, b, c); break;
                default: throw BadPng("unknown scanline filter");
            }
            cur[x] = static_cast<std::uint8_t>(v & 0xff);
        }
    }
    return img;
}

GrayImage gray_from_png(const PngImage& png) {
    if (png.channels != 1 || png.width != png.height) {
        throw BadPng("expected a square grayscale PNG");
    }
    GrayImage img;
    img.side = static_cast<int>(png.width);
    img.pixels = png.data;
    return img;
}

RgbImage rgb_from_png(const PngImage& png) {
    if (png.channels != 3 || png.width != RgbImage::kSide || png.height != RgbImage::kSide) {
        throw BadPng("expected a 512x512 RGB PNG");
    }
    RgbImage img = make_rgb();
    const std::size_t n = static_cast<std::size_t>(RgbImage::kSide) * RgbImage::kSide;
    for (std::size_t i = 0; i < n; ++i) {
        img.red[i] = png.data[i * 3 + 0];
        img.green[i] = png.data[i * 3 + 1];
        img.blue[i] = png.data[i * 3 + 2];
    }
    return img;
}

} // namespace voicefp
