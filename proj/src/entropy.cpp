#include "barn/entropy.hpp"

#include <algorithm>

#include "barn/io.hpp"

namespace barn {

namespace {

// Shared drain loop: word_fn() yields 64 fresh bits big-endian. `buffer`
// keeps the unconsumed low `buffered` bits of the last word across calls,
// so next_bits(a) followed by next_bits(b) equals next_bits(a+b).
template <typename WordFn>
BitString drain_words(std::uint64_t n, std::uint64_t& buffer, unsigned& buffered, WordFn word_fn) {
    BitString out;
    out.reserve(n);
    while (n > 0) {
        if (buffered == 0) {
            buffer = word_fn();
            buffered = 64;
        }
        const unsigned take = static_cast<unsigned>(std::min<std::uint64_t>(n, buffered));
        out.append_bits(buffer >> (buffered - take), take);
        buffered -= take;
        n -= take;
    }
    return out;
}

}  // namespace

std::uint64_t SeededSource::next_word() {
    state_ ^= state_ >> 12;
    state_ ^= state_ << 25;
    state_ ^= state_ >> 27;
    return state_ * 2685821657736338717ull;
}

BitString SeededSource::next_bits(std::uint64_t n) {
    return drain_words(n, buffer_, buffered_, [this] { return next_word(); });
}

FileSource::FileSource(const std::filesystem::path& path)
    : data_(read_file(path)), total_bits_(data_.size() * 8ull) {}

BitString FileSource::next_bits(std::uint64_t n) {
    if (n > bits_remaining()) throw UnderrunError(n, bits_remaining());
    BitString out;
    out.reserve(n);
    for (std::uint64_t i = 0; i < n; ++i, ++cursor_)
        out.push_back((data_[cursor_ >> 3] >> (7 - (cursor_ & 7))) & 1);
    return out;
}

BitString OsSource::next_bits(std::uint64_t n) {
    return drain_words(n, buffer_, buffered_, [this] {
        // std::random_device yields unsigned ints; pack two 32-bit draws
        std::uint64_t hi = static_cast<std::uint32_t>(device_());
        std::uint64_t lo = static_cast<std::uint32_t>(device_());
        return (hi << 32) | lo;
    });
}

std::unique_ptr<EntropySource> os_source() { return std::make_unique<OsSource>(); }

std::unique_ptr<EntropySource> file_source(const std::filesystem::path& path) {
    return std::make_unique<FileSource>(path);
}

std::unique_ptr<EntropySource> seeded_source(std::uint64_t seed) {
    return std::make_unique<SeededSource>(seed);
}

}  // namespace barn
