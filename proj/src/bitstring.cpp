#include "barn/bitstring.hpp"

#include <bit>

namespace barn {

BitString BitString::from_bytes(std::span<const std::uint8_t> data, std::uint64_t bit_length) {
    if (bit_length > data.size() * 8ull)
        throw LengthError("bit length " + std::to_string(bit_length) + " exceeds the " +
                          std::to_string(data.size() * 8ull) + " bits available");
    BitString out;
    out.size_ = bit_length;
    out.data_.assign(data.begin(), data.begin() + static_cast<std::size_t>((bit_length + 7) / 8));
    // keep padding bits zero so equality stays byte-wise
    if (bit_length & 7) out.data_.back() &= static_cast<std::uint8_t>(0xFF00u >> (bit_length & 7));
    return out;
}

BitString BitString::from_string(std::string_view bits) {
    BitString out;
    out.reserve(bits.size());
    for (char c : bits) {
        if (c != '0' && c != '1') throw FormatError("bit string may contain only '0' and '1'");
        out.push_back(c == '1');
    }
    return out;
}

std::pair<std::vector<std::uint8_t>, std::uint64_t> BitString::to_bytes() const {
    return {data_, size_};
}

void BitString::append_bits(std::uint64_t value, unsigned count) {
    while (count > 0) {
        --count;
        push_back((value >> count) & 1);
    }
}

void BitString::append(const BitString& other) {
    if ((size_ & 7) == 0) {
        // byte-aligned: splice the packed storage directly
        data_.insert(data_.end(), other.data_.begin(), other.data_.end());
        size_ += other.size_;
        return;
    }
    for (std::uint64_t i = 1; i <= other.size_; ++i) push_back(other.get(i));
}

std::uint64_t BitString::count_ones() const {
    std::uint64_t ones = 0;
    for (std::uint8_t b : data_) ones += std::popcount(b);
    return ones;  // padding bits are zero by invariant
}

std::string BitString::to_string() const {
    std::string s;
    s.reserve(static_cast<std::size_t>(size_));
    for (std::uint64_t i = 1; i <= size_; ++i) s.push_back(get(i) ? '1' : '0');
    return s;
}

}  // namespace barn
