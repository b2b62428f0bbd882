#include "voicefp/audio.hpp"

#include "voicefp/errors.hpp"

#include <algorithm>
#include <cmath>
#include <cstring>
#include <fstream>

namespace voicefp {

namespace {

std::vector<std::uint8_t> read_file(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw IoFailure("cannot open " + path.string());
    }
    std::vector<std::uint8_t> bytes((std::istreambuf_iterator<char>(in)),
                                    std::istreambuf_iterator<char>());
    if (in.bad()) {
        throw IoFailure("read failed for " + path.string());
    }
    return bytes;
}

std::uint16_t read_u16(const std::uint8_t* p) {
    return static_cast<std::uint16_t>(p[0] | (p[1] << 8));
}

std::uint32_t read_u32(const std::uint8_t* p) {
    return static_cast<std::uint32_t>(p[0]) | (static_cast<std::uint32_t>(p[1]) << 8) |
           (static_cast<std::uint32_t>(p[2]) << 16) | (static_cast<std::uint32_t>(p[3]) << 24);
}

void put_u16(std::vector<std::uint8_t>& out, std::uint16_t v) {
    out.push_back(static_cast<std::uint8_t>(v & 0xff));
    out.push_back(static_cast<std::uint8_t>(v >> 8));
}

void put_u32(std::vector<std::uint8_t>& out, std::uint32_t v) {
    out.push_back(static_cast<std::uint8_t>(v & 0xff));
    out.push_back(static_cast<std::uint8_t>((v >> 8) & 0xff));
    out.push_back(static_cast<std::uint8_t>((v >> 16) & 0xff));
    out.push_back(static_cast<std::uint8_t>((v >> 24) & 0xff));
}

} // namespace

AudioClip load_wav(const std::filesystem::path& path) {
    const std::vector<std::uint8_t> bytes = read_file(path);

    if (bytes.size() < 12 || std::memcmp(bytes.data(), "RIFF", 4) != 0 ||
        std::memcmp(bytes.data() + 8, "WAVE", 4) != 0) {
        throw NotWav(path.string());
    }

    // Chunk walk. Only fmt and data matter; everything else is skipped.
    bool have_fmt = false;
    std::uint16_t channels = 0;
    std::uint32_t sample_rate = 0;
    const std::uint8_t* data = nullptr;
    std::size_t data_size = 0;

    std::size_t off = 12;
    while (off + 8 <= bytes.size()) {
        const char* id = reinterpret_cast<const char*>(bytes.data() + off);
        const std::uint32_t size = read_u32(bytes.data() + off + 4);
        off += 8;
        if (size > bytes.size() - off) {
            throw NotWav("truncated chunk in " + path.string());
        }
        if (std::memcmp(id, "fmt ", 4) == 0) {
            if (size < 16) {
                throw NotWav("short fmt chunk");
            }
            const std::uint16_t format = read_u16(bytes.data() + off);
            channels = read_u16(bytes.data() + off + 2);
            sample_rate = read_u32(bytes.data() + off + 4);
            const std::uint16_t bits = read_u16(bytes.data() + off + 14);
            if (format != 1) {
                throw UnsupportedEncoding("format tag " + std::to_string(format) + " (PCM only)");
            }
            if (bits != 16) {
                throw UnsupportedEncoding(std::to_string(bits) + "-bit samples (16-bit only)");
            }
            if (channels == 0) {
                throw NotWav("fmt chunk declares zero channels");
            }
            if (sample_rate < 8000) {
                throw UnsupportedEncoding("sample rate " + std::to_string(sample_rate) + " below 8000 Hz");
            }
            have_fmt = true;
        } else if (std::memcmp(id, "data", 4) == 0) {
            data = bytes.data() + off;
            data_size = size;
        }
        off += size + (size & 1); // chunks are word-aligned
    }

    if (!have_fmt) {
        throw NotWav("missing fmt chunk");
    }
    if (data == nullptr) {
        throw EmptyAudio("missing data chunk");
    }

    const std::size_t frame_bytes = 2u * channels;
    const std::size_t frames = data_size / frame_bytes;
    if (frames == 0) {
        throw EmptyAudio(path.string());
    }

    AudioClip clip;
    clip.sample_rate = sample_rate;
    clip.samples.resize(frames);
    for (std::size_t i = 0; i < frames; ++i) {
        double acc = 0.0;
        for (std::uint16_t c = 0; c < channels; ++c) {
            const std::uint8_t* p = data + i * frame_bytes + 2u * c;
            acc += static_cast<std::int16_t>(read_u16(p));
        }
        const double s = acc / channels / 32768.0;
        clip.samples[i] = std::clamp(s, -1.0, 1.0);
    }
    return clip;
}

void save_wav(const AudioClip& clip, const std::filesystem::path& path) {
    if (clip.samples.empty()) {
        throw EmptyAudio("refusing to write an empty WAV");
    }

    const std::uint32_t data_size = static_cast<std::uint32_t>(clip.samples.size() * 2);

    std::vector<std::uint8_t> out;
    out.reserve(44 + data_size);
    out.insert(out.end(), {'R', 'I', 'F', 'F'});
    put_u32(out, 36 + data_size);
    out.insert(out.end(), {'W', 'A', 'V', 'E'});
    out.insert(out.end(), {'f', 'm', 't', ' '});
    put_u32(out, 16);
    put_u16(out, 1); // PCM
    put_u16(out, 1); // mono
    put_u32(out, clip.sample_rate);
    put_u32(out, clip.sample_rate * 2); // byte rate
    put_u16(out, 2);                    // block align
    put_u16(out, 16);                   // bits per sample
    out.insert(out.end(), {'d', 'a', 't', 'a'});
    put_u32(out, data_size);

    for (double s : clip.samples) {
        const long q = std::lround(s * 32767.0);
        const std::int16_t v = static_cast<std::int16_t>(std::clamp(q, -32768L, 32767L));
        put_u16(out, static_cast<std::uint16_t>(v));
    }

    std::ofstream f(path, std::ios::binary | std::ios::trunc);
    if (!f) {
        throw IoFailure("cannot open " + path.string() + " for writing");
    }
    f.write(reinterpret_cast<const char*>(out.data()), static_cast<std::streamsize>(out.size()));
    if (!f) {
        throw IoFailure("write failed for " + path.string());
    }
}

} // namespace voicefp
