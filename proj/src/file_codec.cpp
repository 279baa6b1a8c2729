#include "gcdcipher/file_codec.hpp"

#include <algorithm>
#include <istream>
#include <limits>
#include <ostream>
#include <string>

namespace gcdcipher {
namespace {

constexpr std::size_t kChunkBlocks = 8192;

void put_record(const KeyRecord& r, ByteValue* out) {
    out[0] = r.zero_weight_first;
    out[1] = r.zero_weight_second;
    out[2] = r.rp_first;
    out[3] = r.quotient;
    out[4] = r.remainder;
}

KeyRecord get_record(const ByteValue* in) {
    return KeyRecord{in[0], in[1], in[2], in[3], in[4]};
}

// Reads up to `n` bytes, returning how many arrived. Only hard stream
// failures throw; hitting EOF is the caller's concern.
std::size_t read_some(std::istream& in, ByteValue* dst, std::size_t n, const char* what) {
    in.read(reinterpret_cast<char*>(dst), static_cast<std::streamsize>(n));
    if (in.bad()) throw IoError(std::string("failed reading ") + what);
    return static_cast<std::size_t>(in.gcount());
}

void write_all(std::ostream& out, const ByteValue* src, std::size_t n, const char* what) {
    out.write(reinterpret_cast<const char*>(src), static_cast<std::streamsize>(n));
    if (!out) throw IoError(std::string("failed writing ") + what);
}

}  // namespace

EncryptedFile encrypt_file(std::span<const ByteValue> plaintext) {
    EncryptedFile out;
    const std::size_t blocks = block_count(plaintext.size());
    out.key.header.plaintext_length = plaintext.size();
    out.cipher.reserve(blocks);
    out.key.records.reserve(blocks);
    for (std::size_t i = 0; i < blocks; ++i) {
        const std::size_t lo = 2 * i;
        const ByteValue first = plaintext[lo];
        const ByteValue second = lo + 1 < plaintext.size() ? plaintext[lo + 1] : first;
        const EncryptedBlock eb = encrypt_block({first, second});
        out.cipher.push_back(eb.cipher);
        out.key.records.push_back(eb.key);
    }
    return out;
}

std::vector<ByteValue> decrypt_file(std::span<const ByteValue> cipher, const KeyFile& key) {
    const std::uint64_t length = key.header.plaintext_length;
    if (key.records.size() != cipher.size()) {
        throw ConsistencyError("key file has " + std::to_string(key.records.size()) +
                               " records but cipher file has " + std::to_string(cipher.size()) +
                               " blocks");
    }
    if (block_count(length) != cipher.size()) {
        throw ConsistencyError("plaintext length " + std::to_string(length) + " implies " +
                               std::to_string(block_count(length)) + " blocks but cipher file has " +
                               std::to_string(cipher.size()));
    }

    std::vector<ByteValue> out;
    out.reserve(static_cast<std::size_t>(length));
    for (std::size_t i = 0; i < cipher.size(); ++i) {
        Block16 block;
        if (!try_decrypt_block(cipher[i], key.records[i], block)) {
            throw CorruptionError("malformed key record", i);
        }
        out.push_back(block.first);
        if (out.size() < length) out.push_back(block.second);
    }
    return out;
}

std::array<ByteValue, kKeyHeaderSize> serialize_key_header(const KeyFileHeader& header) {
    std::array<ByteValue, kKeyHeaderSize> out{};
    std::copy(kKeyMagic.begin(), kKeyMagic.end(), out.begin());
    out[4] = kKeyVersion;
    for (int i = 0; i < 8; ++i) {
        out[5 + i] = static_cast<ByteValue>(header.plaintext_length >> (8 * (7 - i)));
    }
    return out;
}

std::vector<ByteValue> serialize_key_file(const KeyFile& key) {
    std::vector<ByteValue> out(kKeyHeaderSize + kKeyRecordSize * key.records.size());
    const auto header = serialize_key_header(key.header);
    std::copy(header.begin(), header.end(), out.begin());
    ByteValue* p = out.data() + kKeyHeaderSize;
    for (const KeyRecord& r : key.records) {
        put_record(r, p);
        p += kKeyRecordSize;
    }
    return out;
}

KeyFileHeader parse_key_header(std::span<const ByteValue> raw) {
    if (raw.size() < kKeyHeaderSize) {
        throw FormatError("truncated key file header: " + std::to_string(raw.size()) + " of " +
                          std::to_string(kKeyHeaderSize) + " bytes");
    }
    if (!std::equal(kKeyMagic.begin(), kKeyMagic.end(), raw.begin())) {
        throw FormatError("bad key file magic (expected \"GCDK\")");
    }
    if (raw[4] != kKeyVersion) {
        throw FormatError("unsupported key file version " + std::to_string(raw[4]));
    }
    KeyFileHeader header;
    for (int i = 0; i < 8; ++i) {
        header.plaintext_length = (header.plaintext_length << 8) | raw[5 + i];
    }
    return header;
}

KeyFile parse_key_file(std::span<const ByteValue> raw) {
    KeyFile key;
    key.header = parse_key_header(raw);
    const std::uint64_t blocks = block_count(key.header.plaintext_length);
    const std::uint64_t payload = raw.size() - kKeyHeaderSize;
    if (blocks > std::numeric_limits<std::uint64_t>::max() / kKeyRecordSize ||
        payload != blocks * kKeyRecordSize) {
        throw FormatError("key file payload is " + std::to_string(payload) +
                          " bytes; plaintext length " +
                          std::to_string(key.header.plaintext_length) + " requires " +
                          std::to_string(blocks) + " records of 5 bytes");
    }
    key.records.reserve(static_cast<std::size_t>(blocks));
    for (const ByteValue* p = raw.data() + kKeyHeaderSize; p != raw.data() + raw.size();
         p += kKeyRecordSize) {
        key.records.push_back(get_record(p));
    }
    return key;
}

KeyFileHeader read_key_header(std::istream& key) {
    std::array<ByteValue, kKeyHeaderSize> raw{};
    const std::size_t got = read_some(key, raw.data(), raw.size(), "key file");
    return parse_key_header(std::span<const ByteValue>(raw.data(), got));
}

std::uint64_t encrypt_stream(std::istream& plaintext, std::ostream& cipher, std::ostream& key) {
    const std::ostream::pos_type header_pos = key.tellp();
    if (header_pos == std::ostream::pos_type(-1)) {
        throw IoError("key output stream is not seekable");
    }
    const auto placeholder = serialize_key_header({});
    write_all(key, placeholder.data(), placeholder.size(), "key file");

    std::vector<ByteValue> in(2 * kChunkBlocks);
    std::vector<ByteValue> ct(kChunkBlocks);
    std::vector<ByteValue> kr(kKeyRecordSize * kChunkBlocks);
    std::uint64_t length = 0;
    std::size_t pending = 0;  // unpaired byte carried from the previous chunk
    while (true) {
        const std::size_t got =
            read_some(plaintext, in.data() + pending, in.size() - pending, "plaintext");
        length += got;
        const bool at_end = got == 0 || plaintext.eof();
        std::size_t n = pending + got;
        if (n == 0) break;
        // Mid-stream, an odd byte waits for its partner; at EOF it pairs with itself.
        const bool carry = (n & 1) && !at_end;
        if (carry) --n;

        const std::size_t blocks = block_count(n);
        for (std::size_t i = 0; i < blocks; ++i) {
            const ByteValue first = in[2 * i];
            const ByteValue second = 2 * i + 1 < n ? in[2 * i + 1] : first;
            const EncryptedBlock eb = encrypt_block({first, second});
            ct[i] = eb.cipher;
            put_record(eb.key, kr.data() + kKeyRecordSize * i);
        }
        write_all(cipher, ct.data(), blocks, "cipher file");
        write_all(key, kr.data(), kKeyRecordSize * blocks, "key file");

        pending = 0;
        if (carry) {
            in[0] = in[n];
            pending = 1;
        }
        if (at_end) break;
    }

    const std::ostream::pos_type end_pos = key.tellp();
    key.seekp(header_pos);
    const auto header = serialize_key_header({length});
    write_all(key, header.data(), header.size(), "key file");
    key.seekp(end_pos);
    if (!key) throw IoError("failed to finalize key file header");
    return length;
}

std::uint64_t decrypt_stream(std::istream& cipher, std::istream& key, std::ostream& plaintext) {
    const KeyFileHeader header = read_key_header(key);
    const std::uint64_t length = header.plaintext_length;
    const std::uint64_t expected_blocks = block_count(length);

    std::vector<ByteValue> ct(kChunkBlocks);
    std::vector<ByteValue> kr(kKeyRecordSize * kChunkBlocks);
    std::vector<ByteValue> pt(2 * kChunkBlocks);
    std::uint64_t block_index = 0;
    std::uint64_t written = 0;
    while (block_index < expected_blocks) {
        const std::size_t want =
            static_cast<std::size_t>(std::min<std::uint64_t>(kChunkBlocks, expected_blocks - block_index));
        const std::size_t got_ct = read_some(cipher, ct.data(), want, "cipher file");
        const std::size_t got_kr = read_some(key, kr.data(), kKeyRecordSize * want, "key file");
        if (got_kr != kKeyRecordSize * want) {
            throw FormatError("key file truncated: plaintext length " + std::to_string(length) +
                              " requires " + std::to_string(expected_blocks) + " records, found " +
                              std::to_string(block_index + got_kr / kKeyRecordSize));
        }
        if (got_ct != want) {
            throw ConsistencyError("cipher file has " + std::to_string(block_index + got_ct) +
                                   " blocks but key file has " + std::to_string(expected_blocks) +
                                   " records");
        }
        std::size_t out_n = 0;
        for (std::size_t i = 0; i < want; ++i) {
            Block16 block;
            if (!try_decrypt_block(ct[i], get_record(kr.data() + kKeyRecordSize * i), block)) {
                throw CorruptionError("malformed key record", block_index + i);
            }
            pt[out_n++] = block.first;
            if (written + out_n < length) pt[out_n++] = block.second;
        }
        write_all(plaintext, pt.data(), out_n, "plaintext");
        written += out_n;
        block_index += want;
    }

    ByteValue probe = 0;
    if (read_some(key, &probe, 1, "key file") != 0) {
        throw FormatError("key file has trailing bytes beyond " + std::to_string(expected_blocks) +
                          " records");
    }
    if (read_some(cipher, &probe, 1, "cipher file") != 0) {
        throw ConsistencyError("cipher file has more than " + std::to_string(expected_blocks) +
                               " blocks");
    }
    return written;
}

}  // namespace gcdcipher
