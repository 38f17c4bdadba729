#pragma once

#include <array>
#include <cstdint>
#include <filesystem>
#include <string>
#include <vector>

#include "barn/bitstring.hpp"
#include "barn/entropy.hpp"

namespace barn {

/**
 * One of the five counting systems a key alphabet is drawn from.
 *
 * A digit is encoded as a chunk_bits-wide big-endian chunk of entropy;
 * chunks of value 0 or >= radix do not encode a digit and are discarded,
 * so the usable fraction of the entropy stream is (radix-1) / 2^chunk_bits.
 */
struct Base {
    const char* name;
    unsigned radix;       // 3, 4, 8, 10 or 16
    unsigned chunk_bits;  // 2, 2, 3, 4 or 4

    constexpr unsigned digit_count() const { return radix - 1; }  // valid digits are 1..radix-1

    /// Exact usable fraction of the entropy stream, as numerator/denominator.
    constexpr std::pair<unsigned, unsigned> efficiency() const {
        return {radix - 1, 1u << chunk_bits};
    }

    constexpr bool operator==(const Base& other) const { return radix == other.radix; }
};

inline constexpr Base kTernary{"ternary", 3, 2};
inline constexpr Base kQuaternary{"quaternary", 4, 2};
inline constexpr Base kOctal{"octal", 8, 3};
inline constexpr Base kDecimal{"decimal", 10, 4};
inline constexpr Base kHexadecimal{"hexadecimal", 16, 4};

inline constexpr std::array<Base, 5> kAllBases{kTernary, kQuaternary, kOctal, kDecimal,
                                               kHexadecimal};

/// Look up a base by its radix; throws FormatError for anything but 3|4|8|10|16.
const Base& base_from_radix(unsigned radix);

/**
 * Ordered list of non-zero digits; the l-th digit is the number of stream
 * bits advanced before the l-th insertion, digits reused cyclically.
 *
 * Rejected at construction: empty digit lists, digits outside 1..radix-1,
 * and all-ones digit lists (an all-ones key would copy the message into
 * consecutive stream bits).
 */
class Key {
public:
    Key(Base base, std::vector<std::uint8_t> digits);

    /// Test-only: bypasses the all-ones check (used for analytic identities).
    static Key unchecked(Base base, std::vector<std::uint8_t> digits);

    const Base& base() const { return base_; }
    const std::vector<std::uint8_t>& digits() const { return digits_; }
    std::size_t kappa() const { return digits_.size(); }

    /// Sum of all digits: the stream-length cost of one full key cycle.
    std::uint64_t digit_sum() const { return digit_sum_; }

    bool operator==(const Key& other) const {
        return base_ == other.base_ && digits_ == other.digits_;
    }

private:
    Key() = default;

    Base base_{};
    std::vector<std::uint8_t> digits_;
    std::uint64_t digit_sum_ = 0;
};

/**
 * Chunk `bits` left-to-right into chunk_bits-wide candidate digits, keeping
 * the valid ones in order. Trailing bits shorter than a chunk are dropped.
 *
 * Throws InsufficientEntropyError when no digit survives and
 * DegenerateKeyError when the surviving digits are all ones.
 */
Key derive_key(const BitString& bits, const Base& base);

/// Consume entropy until exactly kappa valid digits are collected. If the
/// result would be all ones, the last digit is redrawn until it is not 1.
Key derive_key_exact(EntropySource& src, const Base& base, std::size_t kappa);

/// floor(key_bits * (radix-1) / (chunk_bits * 2^chunk_bits)): the expected
/// digit yield of derive_key for a given entropy budget, exact arithmetic.
std::uint64_t expected_element_count(const Base& base, std::uint64_t key_bits);

// Key file: line 1 "BARN-KEY 1", line 2 the radix, line 3 the digits as
// space-separated decimals. Parsing enforces the Key invariants.
std::string format_key(const Key& key);
Key parse_key(std::string_view text);
void save_key(const Key& key, const std::filesystem::path& path);
Key load_key(const std::filesystem::path& path);

}  // namespace barn
