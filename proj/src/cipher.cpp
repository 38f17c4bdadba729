#include "barn/cipher.hpp"

#include <array>

#include "barn/io.hpp"

namespace barn {

namespace {

constexpr std::array<std::uint8_t, 4> kMagic{'B', 'A', 'R', 'N'};
constexpr std::uint8_t kVersion = 0x01;

// cipher_length without the mu >= 1 gate, overflow-checked.
std::uint64_t last_position(const Key& key, std::uint64_t mu) {
    const std::uint64_t kappa = key.kappa();
    const std::uint64_t full_cycles = (mu - 1) / kappa;
    const std::uint64_t t = mu - full_cycles * kappa;
    unsigned __int128 total = static_cast<unsigned __int128>(full_cycles) * key.digit_sum();
    for (std::uint64_t l = 0; l < t; ++l) total += key.digits()[l];
    if (total > UINT64_MAX) throw RangeError("cipher length overflows 64 bits");
    return static_cast<std::uint64_t>(total);
}

}  // namespace

std::uint64_t PositionIterator::position_at(const Key& key, std::uint64_t j) {
    return last_position(key, j);
}

std::vector<std::uint64_t> insertion_positions(const Key& key, std::uint64_t mu) {
    std::vector<std::uint64_t> positions;
    positions.reserve(mu);
    PositionIterator it(key);
    for (std::uint64_t j = 0; j < mu; ++j) positions.push_back(it.next());
    return positions;
}

std::uint64_t cipher_length(const Key& key, std::uint64_t mu) {
    if (mu < 1) throw Error("cipher_length needs a message of at least 1 bit");
    return last_position(key, mu);
}

std::uint64_t max_message_bits(const Key& key, std::uint64_t cipher_bits) {
    const std::uint64_t full_cycles = cipher_bits / key.digit_sum();
    std::uint64_t remainder = cipher_bits - full_cycles * key.digit_sum();
    std::uint64_t extra = 0;
    std::uint64_t prefix = 0;
    for (std::uint8_t d : key.digits()) {
        prefix += d;
        if (prefix > remainder) break;
        ++extra;
    }
    return full_cycles * key.kappa() + extra;
}

CipherEnvelope encode(const BitString& message, const Key& key, EntropySource& src,
                      std::uint64_t tail_bits) {
    const std::uint64_t mu = message.size();
    if (mu < 1) throw Error("cannot encode an empty message; use the stream interface");
    BitString cipher = src.next_bits(cipher_length(key, mu));
    PositionIterator positions(key);
    for (std::uint64_t j = 1; j <= mu; ++j) cipher.set(positions.next(), message.get(j));
    if (tail_bits > 0) cipher.append(src.next_bits(tail_bits));
    return CipherEnvelope{std::move(cipher), mu};
}

BitString decode(const CipherEnvelope& env, const Key& key, std::optional<std::uint64_t> mu) {
    const std::uint64_t n =
        mu ? *mu : env.message_bits ? *env.message_bits : max_message_bits(key, env.cipher.size());
    if (n == 0) return BitString{};
    if (last_position(key, n) > env.cipher.size())
        throw RangeError("message of " + std::to_string(n) + " bits needs position " +
                         std::to_string(last_position(key, n)) + " but cipher has only " +
                         std::to_string(env.cipher.size()) + " bits");
    BitString message;
    message.reserve(n);
    PositionIterator positions(key);
    for (std::uint64_t j = 0; j < n; ++j) message.push_back(env.cipher.get(positions.next()));
    return message;
}

void encode_stream(BitProducer& message, const Key& key, EntropySource& src, BitConsumer& sink) {
    std::size_t cursor = 0;
    std::uint64_t emitted = 0;
    for (;;) {
        const std::optional<bool> bit = message.next();
        if (!bit) return;
        const unsigned gap = key.digits()[cursor];
        cursor = (cursor + 1) % key.kappa();
        BitString fill;
        try {
            fill = src.next_bits(gap);
        } catch (const Error& e) {
            throw StreamError(emitted, e.what());
        }
        // the gap-th drawn bit is the insertion slot: replaced by the message bit
        for (unsigned b = 1; b < gap; ++b, ++emitted) sink.put(fill.get(b));
        sink.put(*bit);
        ++emitted;
    }
}

void decode_stream(BitProducer& cipher, const Key& key, BitConsumer& sink) {
    std::size_t cursor = 0;
    std::uint64_t consumed = 0;
    std::uint64_t countdown = key.digits()[0];
    for (;;) {
        std::optional<bool> bit;
        try {
            bit = cipher.next();
        } catch (const Error& e) {
            throw StreamError(consumed, e.what());
        }
        if (!bit) return;
        ++consumed;
        if (--countdown == 0) {
            sink.put(*bit);
            cursor = (cursor + 1) % key.kappa();
            countdown = key.digits()[cursor];
        }
    }
}

std::vector<std::uint8_t> serialize_envelope(const CipherEnvelope& env) {
    if (!env.message_bits)
        throw FormatError("container format carries the message bit count; "
                          "an envelope without one must be written raw");
    std::vector<std::uint8_t> out(kMagic.begin(), kMagic.end());
    out.push_back(kVersion);
    for (int shift = 56; shift >= 0; shift -= 8)
        out.push_back(static_cast<std::uint8_t>(*env.message_bits >> shift));
    const auto& bits = env.cipher.bytes();
    out.insert(out.end(), bits.begin(), bits.end());
    return out;
}

CipherEnvelope parse_envelope(std::span<const std::uint8_t> data) {
    if (data.size() < 13 || !std::equal(kMagic.begin(), kMagic.end(), data.begin()))
        throw FormatError("not a BARN cipher container");
    if (data[4] != kVersion)
        throw FormatError("unsupported container version " + std::to_string(data[4]));
    std::uint64_t mu = 0;
    for (int i = 0; i < 8; ++i) mu = mu << 8 | data[5 + i];
    const auto payload = data.subspan(13);
    // packed padding is irretrievable without the key; expose all payload bits
    return CipherEnvelope{BitString::from_bytes(payload, payload.size() * 8ull), mu};
}

void save_envelope(const CipherEnvelope& env, const std::filesystem::path& path) {
    write_file(path, serialize_envelope(env));
}

CipherEnvelope load_envelope(const std::filesystem::path& path) {
    const std::vector<std::uint8_t> data = read_file(path);
    return parse_envelope(data);
}

}  // namespace barn
