#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace barn {

// Base class for every error thrown by this library.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// 1-based index outside [1, length].
struct IndexError : Error {
    using Error::Error;
};

// Requested bit length exceeds what is available.
struct LengthError : Error {
    using Error::Error;
};

// An entropy source ran out of bits.
struct UnderrunError : Error {
    UnderrunError(std::uint64_t requested_bits, std::uint64_t remaining_bits)
        : Error("entropy underrun: requested " + std::to_string(requested_bits) +
                " bits, only " + std::to_string(remaining_bits) + " remaining"),
          requested(requested_bits),
          remaining(remaining_bits) {}

    std::uint64_t requested;
    std::uint64_t remaining;
};

// Key derivation consumed all input bits without producing a single digit.
struct InsufficientEntropyError : Error {
    using Error::Error;
};

// Key derivation produced an all-ones digit list, which is not a usable key.
struct DegenerateKeyError : Error {
    using Error::Error;
};

// File could not be read or written.
struct IoError : Error {
    using Error::Error;
};

// Malformed key file or cipher container.
struct FormatError : Error {
    using Error::Error;
};

// Requested extraction reaches past the end of the cipher.
struct RangeError : Error {
    using Error::Error;
};

// Operation declined because the key space exceeds the configured cap.
struct RefusalError : Error {
    RefusalError(std::string key_count, std::uint64_t cap)
        : Error("key space of " + key_count + " keys exceeds enumeration cap of " +
                std::to_string(cap)),
          key_count(std::move(key_count)),
          cap(cap) {}

    std::string key_count;  // exact decimal count
    std::uint64_t cap;
};

// Input too short for a meaningful statistic.
struct InsufficientDataError : Error {
    using Error::Error;
};

// Byte outside the declared encoding (e.g. >= 0x80 in 7-bit mode).
struct EncodingError : Error {
    using Error::Error;
};

// Failure during streaming encode/decode, annotated with the bit offset
// reached in the output (encode) or input (decode) stream.
struct StreamError : Error {
    StreamError(std::uint64_t bit_offset, const std::string& cause)
        : Error("stream error at bit offset " + std::to_string(bit_offset) + ": " + cause),
          offset(bit_offset) {}

    std::uint64_t offset;
};

}  // namespace barn
