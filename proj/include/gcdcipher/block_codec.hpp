#pragma once

#include <cstdint>
#include <compare>

#include "gcdcipher/error.hpp"

namespace gcdcipher {

/// One plaintext or ciphertext character.
using ByteValue = std::uint8_t;

/// Sixteen plaintext bits: `first` holds the high byte, `second` the low byte.
struct Block16 {
    ByteValue first = 0;
    ByteValue second = 0;

    friend constexpr bool operator==(const Block16&, const Block16&) = default;
};

/// Per-block 40-bit key, fields in wire order.
struct KeyRecord {
    ByteValue zero_weight_first = 0;
    ByteValue zero_weight_second = 0;
    ByteValue rp_first = 0;
    ByteValue quotient = 0;
    ByteValue remainder = 0;

    friend constexpr bool operator==(const KeyRecord&, const KeyRecord&) = default;
};

struct EncryptedBlock {
    ByteValue cipher = 0;
    KeyRecord key;

    friend constexpr bool operator==(const EncryptedBlock&, const EncryptedBlock&) = default;
};

/// Greatest common divisor. gcd(0, x) == x and gcd(0, 0) == 0.
constexpr ByteValue gcd(ByteValue a, ByteValue b) noexcept {
    while (b != 0) {
        const ByteValue r = static_cast<ByteValue>(a % b);
        a = b;
        b = r;
    }
    return a;
}

/// Sum of the positional weights (128, 64, ..., 1) of the zero bits of `x`.
constexpr ByteValue zero_weight(ByteValue x) noexcept {
    unsigned sum = 0;
    for (unsigned weight = 0x80; weight != 0; weight >>= 1) {
        if ((x & weight) == 0) sum += weight;
    }
    return static_cast<ByteValue>(sum);
}

/// Encrypts one block using the supplied gcd function.
///
/// The remaining product (RP) of a sub-block is the sub-block divided by the
/// block's gcd. With a zero first sub-block there is nothing to divide by, so
/// quotient is 0 and the remainder carries the second RP. A gcd of 0 (only
/// possible for the all-zero block) leaves every arithmetic field at 0.
template <class GcdFn>
constexpr EncryptedBlock encrypt_block_using(Block16 block, GcdFn&& gcd_fn) {
    EncryptedBlock out;
    out.cipher = static_cast<ByteValue>(gcd_fn(block.first, block.second));
    out.key.zero_weight_first = zero_weight(block.first);
    out.key.zero_weight_second = zero_weight(block.second);
    if (out.cipher == 0) return out;

    const unsigned rp_first = block.first / out.cipher;
    const unsigned rp_second = block.second / out.cipher;
    out.key.rp_first = static_cast<ByteValue>(rp_first);
    if (rp_first == 0) {
        out.key.quotient = 0;
        out.key.remainder = static_cast<ByteValue>(rp_second);
    } else {
        out.key.quotient = static_cast<ByteValue>(rp_second / rp_first);
        out.key.remainder = static_cast<ByteValue>(rp_second % rp_first);
    }
    return out;
}

constexpr EncryptedBlock encrypt_block(Block16 block) noexcept {
    return encrypt_block_using(block, [](ByteValue a, ByteValue b) { return gcd(a, b); });
}

/// Inverts encrypt_block. Throws CorruptionError when either reconstructed
/// sub-block would exceed 255, which no genuine record can produce.
Block16 decrypt_block(ByteValue cipher, const KeyRecord& key);

/// Non-throwing core of decrypt_block; returns false on overflow.
constexpr bool try_decrypt_block(ByteValue cipher, const KeyRecord& key, Block16& out) noexcept {
    const std::uint32_t first = std::uint32_t{key.rp_first} * cipher;
    const std::uint32_t rp_second =
        std::uint32_t{key.rp_first} * key.quotient + key.remainder;
    const std::uint32_t second = rp_second * cipher;
    if (first > 0xFF || second > 0xFF) return false;
    out.first = static_cast<ByteValue>(first);
    out.second = static_cast<ByteValue>(second);
    return true;
}

}  // namespace gcdcipher
