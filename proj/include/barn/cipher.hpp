#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <vector>

#include "barn/bitstring.hpp"
#include "barn/entropy.hpp"
#include "barn/keygen.hpp"

namespace barn {

/**
 * Emits the 1-based stream positions that receive message bits.
 *
 * The gap between consecutive positions is the next key digit, digits
 * reused cyclically; the first position is the first digit. Positions are
 * strictly increasing because every digit is >= 1. position_at gives the
 * same sequence in closed form:
 *
 *   position_at(j) = floor((j-1)/kappa) * digit_sum + prefix_sum(t),
 *   t = j - floor((j-1)/kappa) * kappa
 */
class PositionIterator {
public:
    explicit PositionIterator(const Key& key) : key_(&key) {}

    /// Position of the next message bit (j = 1, 2, ... across calls).
    std::uint64_t next() {
        position_ += key_->digits()[cursor_];
        cursor_ = (cursor_ + 1) % key_->kappa();
        return position_;
    }

    /// Closed-form position of message bit j; cross-checks the iterator.
    static std::uint64_t position_at(const Key& key, std::uint64_t j);

private:
    const Key* key_;
    std::size_t cursor_ = 0;
    std::uint64_t position_ = 0;
};

/// Positions of message bits 1..mu.
std::vector<std::uint64_t> insertion_positions(const Key& key, std::uint64_t mu);

/// Total cipher length for a mu-bit message: the position of the last
/// inserted bit. Requires mu >= 1.
std::uint64_t cipher_length(const Key& key, std::uint64_t mu);

/// Largest message length whose final insertion position fits in
/// cipher_bits stream bits.
std::uint64_t max_message_bits(const Key& key, std::uint64_t cipher_bits);

/**
 * A cipher bit stream plus optional plaintext length.
 *
 * Carrying message_bits in the container makes decoding self-contained but
 * leaks the plaintext length; raw mode omits it and the receiver supplies
 * the length out of band.
 */
struct CipherEnvelope {
    BitString cipher;
    std::optional<std::uint64_t> message_bits;

    bool operator==(const CipherEnvelope&) const = default;
};

/**
 * Embed `message` into fresh stream bits from `src`.
 *
 * Draws cipher_length(key, mu) bits and overwrites the insertion positions
 * with the message bits in order; every other bit is an untouched source
 * bit. `tail_bits` extra source bits may be appended so a raw-mode cipher
 * does not end exactly at the last insertion.
 */
CipherEnvelope encode(const BitString& message, const Key& key, EntropySource& src,
                      std::uint64_t tail_bits = 0);

/**
 * Extract the message from a cipher: the bits at the key's insertion
 * positions, in order.
 *
 * The message length is taken from `mu` if given, else from the envelope,
 * else the maximal length that fits the cipher is extracted. Throws
 * RangeError if the requested length needs a position beyond the cipher.
 */
BitString decode(const CipherEnvelope& env, const Key& key,
                 std::optional<std::uint64_t> mu = std::nullopt);

// Incremental one-bit-at-a-time interfaces for continuous streams.
class BitProducer {
public:
    virtual ~BitProducer() = default;
    virtual std::optional<bool> next() = 0;  // nullopt at end of stream
};

class BitConsumer {
public:
    virtual ~BitConsumer() = default;
    virtual void put(bool bit) = 0;
};

class BitStringReader final : public BitProducer {
public:
    explicit BitStringReader(const BitString& bits) : bits_(&bits) {}
    std::optional<bool> next() override {
        if (cursor_ >= bits_->size()) return std::nullopt;
        return bits_->get(++cursor_);
    }

private:
    const BitString* bits_;
    std::uint64_t cursor_ = 0;
};

class BitStringWriter final : public BitConsumer {
public:
    void put(bool bit) override { bits.push_back(bit); }
    BitString bits;
};

/// Streaming encode: for each message bit, emits the next key-digit-many
/// source bits with the last one replaced by the message bit. Bit-identical
/// to encode() on the same inputs. Source errors are rethrown as
/// StreamError carrying the output bit offset reached.
void encode_stream(BitProducer& message, const Key& key, EntropySource& src, BitConsumer& sink);

/// Streaming decode: emits exactly the cipher bits at the key's insertion
/// positions; a trailing partial gap is ignored.
void decode_stream(BitProducer& cipher, const Key& key, BitConsumer& sink);

// Cipher container: magic "BARN", version byte 0x01, message bit count as
// an 8-byte big-endian integer, then the packed cipher bits. A raw cipher
// file is the packed bits alone.
std::vector<std::uint8_t> serialize_envelope(const CipherEnvelope& env);
CipherEnvelope parse_envelope(std::span<const std::uint8_t> data);
void save_envelope(const CipherEnvelope& env, const std::filesystem::path& path);
CipherEnvelope load_envelope(const std::filesystem::path& path);

}  // namespace barn
