#pragma once

#include <cstdint>
#include <filesystem>
#include <vector>

namespace voicefp {

// Mono audio in the canonical normalized range.
// Invariants: every sample in [-1, 1], sample_rate >= 8000, samples non-empty.
struct AudioClip {
    std::vector<double> samples;
    std::uint32_t sample_rate = 0;
};

// Reads a 16-bit PCM WAV (mono or multi-channel; channels are averaged to
// mono). Samples are mapped to [-1, 1] by division by 32768 and clamped.
// Throws NotWav, UnsupportedEncoding, EmptyAudio, IoFailure.
AudioClip load_wav(const std::filesystem::path& path);

// Writes a 16-bit PCM mono WAV with a canonical 44-byte header. Each sample
// is encoded as round(s * 32767) clamped to [-32768, 32767].
// Throws EmptyAudio, IoFailure.
void save_wav(const AudioClip& clip, const std::filesystem::path& path);

} // namespace voicefp
