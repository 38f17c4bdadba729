#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "barn/errors.hpp"

namespace barn {

/**
 * Ordered sequence of bits with 1-based indexing.
 *
 * Storage is packed, MSB-first: bit 1 of the stream is the most significant
 * bit of byte 0, and a final partial byte is zero-padded on the
 * least-significant side. Unused padding bits are kept at zero, so equality
 * is plain byte comparison.
 */
class BitString {
public:
    BitString() = default;

    /// Take exactly `bit_length` bits from `data`, MSB-first.
    static BitString from_bytes(std::span<const std::uint8_t> data, std::uint64_t bit_length);

    /// Parse a string of '0'/'1' characters. Convenience for tests and tools.
    static BitString from_string(std::string_view bits);

    /// Inverse of from_bytes: packed bytes plus the exact bit count.
    std::pair<std::vector<std::uint8_t>, std::uint64_t> to_bytes() const;

    std::uint64_t size() const { return size_; }
    bool empty() const { return size_ == 0; }

    /// Read bit at 1-based position i.
    bool get(std::uint64_t i) const {
        check_index(i);
        return (data_[(i - 1) >> 3] >> (7 - ((i - 1) & 7))) & 1;
    }

    /// Overwrite bit at 1-based position i.
    void set(std::uint64_t i, bool bit) {
        check_index(i);
        const std::uint8_t mask = static_cast<std::uint8_t>(0x80u >> ((i - 1) & 7));
        if (bit)
            data_[(i - 1) >> 3] |= mask;
        else
            data_[(i - 1) >> 3] &= static_cast<std::uint8_t>(~mask);
    }

    void push_back(bool bit) {
        if ((size_ & 7) == 0) data_.push_back(0);
        if (bit) data_.back() |= static_cast<std::uint8_t>(0x80u >> (size_ & 7));
        ++size_;
    }

    /// Append the low `count` bits of `value`, most significant of them first.
    void append_bits(std::uint64_t value, unsigned count);

    void append(const BitString& other);

    void reserve(std::uint64_t bit_count) { data_.reserve((bit_count + 7) / 8); }

    /// Packed storage including the zero padding of the final byte.
    const std::vector<std::uint8_t>& bytes() const { return data_; }

    std::uint64_t count_ones() const;

    std::string to_string() const;

    bool operator==(const BitString&) const = default;

private:
    void check_index(std::uint64_t i) const {
        if (i == 0 || i > size_)
            throw IndexError("bit index " + std::to_string(i) + " out of range 1.." +
                             std::to_string(size_));
    }

    std::vector<std::uint8_t> data_;
    std::uint64_t size_ = 0;
};

}  // namespace barn
