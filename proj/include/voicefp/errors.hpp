#pragma once

#include <stdexcept>
#include <string>

namespace voicefp {

// Base class for all data-level failures. name() is the stable identifier
// the CLI prints on stderr before exiting with code 2.
class Error : public std::runtime_error {
public:
    Error(std::string name, const std::string& detail)
        : std::runtime_error(detail.empty() ? name : name + ": " + detail),
          name_(std::move(name)) {}

    const std::string& name() const noexcept { return name_; }

private:
    std::string name_;
};

#define VOICEFP_ERROR_TYPE(NAME)                          \
    class NAME : public Error {                           \
    public:                                               \
        explicit NAME(const std::string& detail = "")     \
            : Error(#NAME, detail) {}                     \
    }

// audio_io
VOICEFP_ERROR_TYPE(NotWav);
VOICEFP_ERROR_TYPE(UnsupportedEncoding);
VOICEFP_ERROR_TYPE(EmptyAudio);
VOICEFP_ERROR_TYPE(IoFailure);

// green_codec / fingerprint
VOICEFP_ERROR_TYPE(MalformedHeader);
VOICEFP_ERROR_TYPE(HeaderOutOfRange);
VOICEFP_ERROR_TYPE(CapacityExceeded);
VOICEFP_ERROR_TYPE(LengthExceedsCapacity);

// dsp_core
VOICEFP_ERROR_TYPE(BadLength);
VOICEFP_ERROR_TYPE(TooShort);
VOICEFP_ERROR_TYPE(ConfigMismatch);
VOICEFP_ERROR_TYPE(BadKernel);
VOICEFP_ERROR_TYPE(EmptyInput);

// features
VOICEFP_ERROR_TYPE(BadAlpha);
VOICEFP_ERROR_TYPE(BandEmpty);

// fingerprint
VOICEFP_ERROR_TYPE(BadZ);

// dataset
VOICEFP_ERROR_TYPE(BadParameter);

// classifier
VOICEFP_ERROR_TYPE(DegenerateDataset);
VOICEFP_ERROR_TYPE(UnknownLabel);
VOICEFP_ERROR_TYPE(BadModelFile);

// png_io / manifests
VOICEFP_ERROR_TYPE(BadPng);
VOICEFP_ERROR_TYPE(BadManifest);

#undef VOICEFP_ERROR_TYPE

} // namespace voicefp
