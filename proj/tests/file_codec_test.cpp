#include "gcdcipher/file_codec.hpp"

#include <gtest/gtest.h>

#include <random>
#include <sstream>
#include <streambuf>

using namespace gcdcipher;

namespace {

using Bytes = std::vector<ByteValue>;

Bytes table_one_key_file() {
    return {0x47, 0x43, 0x44, 0x4B, 0x01, 0, 0, 0, 0, 0, 0, 0, 2, 150, 145, 21, 1, 1};
}

std::string as_string(const Bytes& b) { return std::string(b.begin(), b.end()); }
Bytes as_bytes(const std::string& s) { return Bytes(s.begin(), s.end()); }

Bytes random_bytes(std::mt19937_64& rng, std::size_t n) {
    std::uniform_int_distribution<int> byte(0, 255);
    Bytes out(n);
    for (auto& b : out) b = static_cast<ByteValue>(byte(rng));
    return out;
}

// Sink streambuf that cannot seek.
class PipeBuf : public std::streambuf {
public:
    std::string data;

protected:
    int overflow(int c) override {
        if (c != traits_type::eof()) data.push_back(static_cast<char>(c));
        return c;
    }
};

}  // namespace

TEST(EncryptFile, TableOneExample) {
    const EncryptedFile e = encrypt_file(Bytes{105, 110});
    EXPECT_EQ(e.cipher, Bytes{5});
    ASSERT_EQ(e.key.records.size(), 1u);
    EXPECT_EQ(e.key.records[0], (KeyRecord{150, 145, 21, 1, 1}));
    EXPECT_EQ(e.key.header.plaintext_length, 2u);
    EXPECT_EQ(serialize_key_file(e.key), table_one_key_file());
}

TEST(EncryptFile, EmptyInput) {
    const EncryptedFile e = encrypt_file(Bytes{});
    EXPECT_TRUE(e.cipher.empty());
    EXPECT_TRUE(e.key.records.empty());
    EXPECT_EQ(e.key.header.plaintext_length, 0u);
    EXPECT_EQ(serialize_key_file(e.key).size(), kKeyHeaderSize);
}

TEST(EncryptFile, OddLengthPairsLastByteWithItself) {
    const EncryptedFile e = encrypt_file(Bytes{50, 100, 7});
    EXPECT_EQ(e.cipher, (Bytes{50, 7}));
    ASSERT_EQ(e.key.records.size(), 2u);
    EXPECT_EQ(e.key.records[0], (KeyRecord{205, 155, 1, 2, 0}));
    EXPECT_EQ(e.key.records[1], (KeyRecord{248, 248, 1, 1, 0}));
    EXPECT_EQ(e.key.header.plaintext_length, 3u);
    // Each record is encrypt_block applied to its block.
    EXPECT_EQ(e.key.records[1], encrypt_block({7, 7}).key);
}

TEST(DecryptFile, Examples) {
    EXPECT_EQ(decrypt_file(Bytes{5}, parse_key_file(table_one_key_file())), (Bytes{105, 110}));
    EXPECT_TRUE(decrypt_file(Bytes{}, KeyFile{}).empty());

    KeyFile three{{3}, {{205, 155, 1, 2, 0}, {248, 248, 1, 1, 0}}};
    EXPECT_EQ(decrypt_file(Bytes{50, 7}, three), (Bytes{50, 100, 7}));
}

TEST(DecryptFile, RecordCountMismatch) {
    const KeyFile key = parse_key_file(table_one_key_file());
    EXPECT_THROW(decrypt_file(Bytes{5, 5}, key), ConsistencyError);
    EXPECT_THROW(decrypt_file(Bytes{}, key), ConsistencyError);
}

TEST(DecryptFile, LengthDisagreesWithBlockCount) {
    KeyFile key = parse_key_file(table_one_key_file());
    key.header.plaintext_length = 4;
    EXPECT_THROW(decrypt_file(Bytes{5}, key), ConsistencyError);
}

TEST(DecryptFile, CorruptRecordNamesBlockIndex) {
    EncryptedFile e = encrypt_file(Bytes{1, 2, 3, 4, 105, 110});
    e.key.records[2].rp_first = 255;
    try {
        decrypt_file(e.cipher, e.key);
        FAIL() << "expected CorruptionError";
    } catch (const CorruptionError& err) {
        ASSERT_TRUE(err.has_block_index());
        EXPECT_EQ(err.block_index(), 2u);
        EXPECT_NE(std::string(err.what()).find("block 2"), std::string::npos);
    }
}

TEST(ParseKeyFile, Examples) {
    const KeyFile k = parse_key_file(table_one_key_file());
    EXPECT_EQ(k.header.plaintext_length, 2u);
    ASSERT_EQ(k.records.size(), 1u);
    EXPECT_EQ(k.records[0], (KeyRecord{150, 145, 21, 1, 1}));

    const Bytes header_only{0x47, 0x43, 0x44, 0x4B, 0x01, 0, 0, 0, 0, 0, 0, 0, 0};
    EXPECT_TRUE(parse_key_file(header_only).records.empty());

    Bytes short_payload = table_one_key_file();
    short_payload.pop_back();
    EXPECT_THROW(parse_key_file(short_payload), FormatError);
}

TEST(ParseKeyFile, Rejections) {
    EXPECT_THROW(parse_key_file(Bytes{0x47, 0x43, 0x44}), FormatError);
    EXPECT_THROW(parse_key_file(Bytes{}), FormatError);

    Bytes bad_magic = table_one_key_file();
    bad_magic[3] = 'X';
    EXPECT_THROW(parse_key_file(bad_magic), FormatError);

    Bytes bad_version = table_one_key_file();
    bad_version[4] = 0x02;
    EXPECT_THROW(parse_key_file(bad_version), FormatError);

    Bytes trailing = table_one_key_file();
    trailing.push_back(0);
    EXPECT_THROW(parse_key_file(trailing), FormatError);

    // Length whose record count would overflow 5 * blocks.
    Bytes huge = table_one_key_file();
    for (int i = 5; i < 13; ++i) huge[i] = 0xFF;
    EXPECT_THROW(parse_key_file(huge), FormatError);
}

TEST(KeyHeader, LengthIsBigEndian) {
    const auto h = serialize_key_header({0x0102030405060708ull});
    EXPECT_EQ(h[5], 0x01);
    EXPECT_EQ(h[12], 0x08);
    EXPECT_EQ(parse_key_header(h).plaintext_length, 0x0102030405060708ull);
}

TEST(FileCodecProperties, RandomRoundTripAndSizeLaws) {
    std::mt19937_64 rng(20150328);
    std::uniform_int_distribution<std::size_t> len(0, 4096);
    for (int iter = 0; iter < 300; ++iter) {
        const Bytes p = random_bytes(rng, len(rng));
        const EncryptedFile e = encrypt_file(p);
        ASSERT_EQ(e.cipher.size(), (p.size() + 1) / 2);
        ASSERT_EQ(serialize_key_file(e.key).size() - kKeyHeaderSize, 5 * ((p.size() + 1) / 2));
        ASSERT_EQ(parse_key_file(serialize_key_file(e.key)), e.key);
        ASSERT_EQ(decrypt_file(e.cipher, e.key), p);
        // Order preservation: block i maps to cipher byte i.
        for (std::size_t i = 0; i < e.cipher.size(); ++i) {
            const ByteValue a = p[2 * i];
            const ByteValue b = 2 * i + 1 < p.size() ? p[2 * i + 1] : a;
            ASSERT_EQ(e.cipher[i], gcd(a, b));
        }
    }
}

TEST(FileCodecProperties, DirectedEdgeCases) {
    for (const Bytes& p : {Bytes{}, Bytes{0}, Bytes(1001, 0), Bytes(1000, 0), Bytes(777, 0xFF),
                           Bytes{0, 1}, Bytes{1, 0}, Bytes{0, 0, 0}}) {
        const EncryptedFile e = encrypt_file(p);
        EXPECT_EQ(decrypt_file(e.cipher, e.key), p) << "length " << p.size();
    }
}

TEST(Streaming, MatchesInMemoryAcrossChunkBoundaries) {
    std::mt19937_64 rng(7);
    for (std::size_t n : {0u, 1u, 2u, 3u, 16383u, 16384u, 16385u, 32767u, 32768u, 40001u}) {
        const Bytes p = random_bytes(rng, n);
        const EncryptedFile mem = encrypt_file(p);

        std::istringstream in(as_string(p));
        std::ostringstream ct, key;
        EXPECT_EQ(encrypt_stream(in, ct, key), n);
        EXPECT_EQ(as_bytes(ct.str()), mem.cipher) << n;
        EXPECT_EQ(as_bytes(key.str()), serialize_key_file(mem.key)) << n;

        std::istringstream ct_in(ct.str()), key_in(key.str());
        std::ostringstream pt;
        EXPECT_EQ(decrypt_stream(ct_in, key_in, pt), n);
        EXPECT_EQ(as_bytes(pt.str()), p) << n;
    }
}

TEST(Streaming, NonSeekableKeySinkIsRejected) {
    PipeBuf pipe;
    std::ostream key(&pipe);
    std::istringstream in("in");
    std::ostringstream ct;
    EXPECT_THROW(encrypt_stream(in, ct, key), IoError);
}

TEST(Streaming, DecryptErrors) {
    const std::string key = as_string(table_one_key_file());
    {
        std::istringstream ct(std::string("\x05\x05", 2)), kf(key);
        std::ostringstream pt;
        EXPECT_THROW(decrypt_stream(ct, kf, pt), ConsistencyError);
    }
    {
        std::istringstream ct(""), kf(key);
        std::ostringstream pt;
        EXPECT_THROW(decrypt_stream(ct, kf, pt), ConsistencyError);
    }
    {
        std::istringstream ct("\x05"), kf(key.substr(0, 16));
        std::ostringstream pt;
        EXPECT_THROW(decrypt_stream(ct, kf, pt), FormatError);
    }
    {
        std::istringstream ct("\x05"), kf(key.substr(0, 10));
        std::ostringstream pt;
        EXPECT_THROW(decrypt_stream(ct, kf, pt), FormatError);
    }
    {
        std::string bad = key;
        bad[15] = static_cast<char>(255);
        std::istringstream ct("\x05"), kf(bad);
        std::ostringstream pt;
        try {
            decrypt_stream(ct, kf, pt);
            FAIL();
        } catch (const CorruptionError& e) {
            EXPECT_EQ(e.block_index(), 0u);
        }
    }
}
