#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <span>
#include <vector>

#include "gcdcipher/block_codec.hpp"

namespace gcdcipher {

// Key file layout (all multi-byte integers big-endian):
//   [0..4)   magic "GCDK"
//   [4]      version
//   [5..13)  plaintext length in bytes, u64
//   [13..)   one 5-byte record per block:
//            zero_weight_first, zero_weight_second, rp_first, quotient, remainder
inline constexpr std::array<ByteValue, 4> kKeyMagic = {0x47, 0x43, 0x44, 0x4B};
inline constexpr ByteValue kKeyVersion = 0x01;
inline constexpr std::size_t kKeyHeaderSize = 13;
inline constexpr std::size_t kKeyRecordSize = 5;

struct KeyFileHeader {
    std::uint64_t plaintext_length = 0;

    friend bool operator==(const KeyFileHeader&, const KeyFileHeader&) = default;
};

struct KeyFile {
    KeyFileHeader header;
    std::vector<KeyRecord> records;

    friend bool operator==(const KeyFile&, const KeyFile&) = default;
};

struct EncryptedFile {
    std::vector<ByteValue> cipher;
    KeyFile key;
};

/// Number of 16-bit blocks covering `plaintext_length` bytes.
constexpr std::uint64_t block_count(std::uint64_t plaintext_length) noexcept {
    return plaintext_length / 2 + (plaintext_length & 1);
}

/// Blocks are consecutive byte pairs. A trailing unpaired byte is paired with itself.
EncryptedFile encrypt_file(std::span<const ByteValue> plaintext);

/// Inverse of encrypt_file. Throws ConsistencyError when the cipher, the
/// records and the header length disagree, and CorruptionError (with block
/// index) for a record that overflows.
std::vector<ByteValue> decrypt_file(std::span<const ByteValue> cipher, const KeyFile& key);

std::array<ByteValue, kKeyHeaderSize> serialize_key_header(const KeyFileHeader& header);
std::vector<ByteValue> serialize_key_file(const KeyFile& key);

/// Parses the 13-byte header; throws FormatError on short input, wrong magic or version.
KeyFileHeader parse_key_header(std::span<const ByteValue> raw);

/// Parses a whole key file, checking that the payload is exactly
/// 5 * block_count(plaintext_length) bytes.
KeyFile parse_key_file(std::span<const ByteValue> raw);

/// Streams plaintext into cipher and key sinks in bounded memory. The key
/// stream must be seekable; its header length is patched after the last block.
/// Returns the plaintext length.
std::uint64_t encrypt_stream(std::istream& plaintext, std::ostream& cipher, std::ostream& key);

/// Streaming counterpart of decrypt_file. Returns the number of bytes written.
std::uint64_t decrypt_stream(std::istream& cipher, std::istream& key, std::ostream& plaintext);

/// Reads and validates the header from the current position of `key`.
KeyFileHeader read_key_header(std::istream& key);

}  // namespace gcdcipher
