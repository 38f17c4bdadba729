#include "barn/keygen.hpp"

#include <algorithm>
#include <charconv>
#include <numeric>
#include <sstream>

#include "barn/io.hpp"

namespace barn {

namespace {

bool all_ones(const std::vector<std::uint8_t>& digits) {
    return std::all_of(digits.begin(), digits.end(), [](std::uint8_t d) { return d == 1; });
}

// Next valid digit from the source, skipping chunks of value 0 or >= radix.
std::uint8_t draw_digit(EntropySource& src, const Base& base) {
    for (;;) {
        const BitString chunk = src.next_bits(base.chunk_bits);
        unsigned value = 0;
        for (std::uint64_t i = 1; i <= base.chunk_bits; ++i) value = value << 1 | chunk.get(i);
        if (value >= 1 && value < base.radix) return static_cast<std::uint8_t>(value);
    }
}

}  // namespace

const Base& base_from_radix(unsigned radix) {
    for (const Base& b : kAllBases)
        if (b.radix == radix) return b;
    throw FormatError("radix must be one of 3, 4, 8, 10, 16; got " + std::to_string(radix));
}

Key::Key(Base base, std::vector<std::uint8_t> digits) {
    if (digits.empty()) throw InsufficientEntropyError("a key needs at least one digit");
    for (std::uint8_t d : digits)
        if (d < 1 || d >= base.radix)
            throw FormatError("digit " + std::to_string(d) + " outside 1.." +
                              std::to_string(base.radix - 1) + " for " + base.name + " keys");
    if (all_ones(digits))
        throw DegenerateKeyError("an all-ones key copies the message verbatim");
    base_ = base;
    digits_ = std::move(digits);
    digit_sum_ = std::accumulate(digits_.begin(), digits_.end(), std::uint64_t{0});
}

Key Key::unchecked(Base base, std::vector<std::uint8_t> digits) {
    Key key;
    key.base_ = base;
    key.digits_ = std::move(digits);
    key.digit_sum_ = std::accumulate(key.digits_.begin(), key.digits_.end(), std::uint64_t{0});
    return key;
}

Key derive_key(const BitString& bits, const Base& base) {
    std::vector<std::uint8_t> digits;
    const std::uint64_t chunk_count = bits.size() / base.chunk_bits;
    for (std::uint64_t c = 0; c < chunk_count; ++c) {
        unsigned value = 0;
        for (unsigned b = 1; b <= base.chunk_bits; ++b)
            value = value << 1 | bits.get(c * base.chunk_bits + b);
        if (value >= 1 && value < base.radix) digits.push_back(static_cast<std::uint8_t>(value));
    }
    if (digits.empty())
        throw InsufficientEntropyError("no valid digit in " + std::to_string(bits.size()) +
                                       " input bits");
    if (all_ones(digits))
        throw DegenerateKeyError("derived digits are all ones; supply more bits");
    return Key(base, std::move(digits));
}

Key derive_key_exact(EntropySource& src, const Base& base, std::size_t kappa) {
    if (kappa < 1) throw Error("kappa must be at least 1");
    std::vector<std::uint8_t> digits;
    digits.reserve(kappa);
    while (digits.size() < kappa) digits.push_back(draw_digit(src, base));
    while (all_ones(digits)) digits.back() = draw_digit(src, base);
    return Key(base, std::move(digits));
}

std::uint64_t expected_element_count(const Base& base, std::uint64_t key_bits) {
    if (key_bits < base.chunk_bits)
        throw Error("key_bits must be at least one chunk (" + std::to_string(base.chunk_bits) +
                    " bits)");
    return key_bits * (base.radix - 1) / (base.chunk_bits * (1ull << base.chunk_bits));
}

std::string format_key(const Key& key) {
    std::string out = "BARN-KEY 1\n" + std::to_string(key.base().radix) + "\n";
    for (std::size_t i = 0; i < key.digits().size(); ++i) {
        if (i) out += ' ';
        out += std::to_string(key.digits()[i]);
    }
    out += '\n';
    return out;
}

Key parse_key(std::string_view text) {
    std::istringstream in{std::string(text)};
    std::string magic, line2, line3;
    if (!std::getline(in, magic) || magic != "BARN-KEY 1")
        throw FormatError("not a key file: first line must be \"BARN-KEY 1\"");
    if (!std::getline(in, line2)) throw FormatError("key file truncated: missing radix line");
    unsigned radix = 0;
    auto [p, ec] = std::from_chars(line2.data(), line2.data() + line2.size(), radix);
    if (ec != std::errc{} || p != line2.data() + line2.size())
        throw FormatError("key file radix line is not a number: \"" + line2 + "\"");
    const Base& base = base_from_radix(radix);
    if (!std::getline(in, line3)) throw FormatError("key file truncated: missing digits line");
    std::vector<std::uint8_t> digits;
    std::istringstream dl(line3);
    unsigned d;
    while (dl >> d) {
        if (d < 1 || d >= base.radix)
            throw FormatError("key digit " + std::to_string(d) + " outside 1.." +
                              std::to_string(base.radix - 1));
        digits.push_back(static_cast<std::uint8_t>(d));
    }
    if (!dl.eof()) throw FormatError("key file digits line has a non-numeric token");
    return Key(base, std::move(digits));  // enforces non-empty and not-all-ones
}

void save_key(const Key& key, const std::filesystem::path& path) {
    const std::string text = format_key(key);
    write_file(path, std::span(reinterpret_cast<const std::uint8_t*>(text.data()), text.size()));
}

Key load_key(const std::filesystem::path& path) {
    const std::vector<std::uint8_t> data = read_file(path);
    return parse_key(std::string_view(reinterpret_cast<const char*>(data.data()), data.size()));
}

}  // namespace barn
