#include "gcdcipher/analysis.hpp"

#include <algorithm>
#include <bit>
#include <chrono>
#include <numeric>
#include <stdexcept>

namespace gcdcipher {
namespace {

unsigned popcount8(ByteValue x) { return static_cast<unsigned>(std::popcount(x)); }

}  // namespace

std::uint64_t FrequencyTable::total() const noexcept {
    return std::accumulate(counts.begin(), counts.end(), std::uint64_t{0});
}

FrequencyTable frequency_table(std::span<const ByteValue> bytes) {
    FrequencyTable table;
    for (ByteValue b : bytes) ++table.counts[b];
    return table;
}

ChiSquare chi_square(const FrequencyTable& source, const FrequencyTable& encrypted) {
    ChiSquare out;
    unsigned present = 0;
    for (std::size_t c = 0; c < source.counts.size(); ++c) {
        const std::uint64_t expected = source.counts[c];
        if (expected == 0) continue;
        ++present;
        const double diff = static_cast<double>(encrypted.counts[c]) - static_cast<double>(expected);
        out.statistic += diff * diff / static_cast<double>(expected);
    }
    if (present == 0) throw UndefinedError("chi-square is undefined for an empty source file");
    out.degrees_of_freedom = present - 1;
    return out;
}

std::vector<ByteValue> flip_avalanche_bit(std::span<const ByteValue> plaintext) {
    std::vector<ByteValue> out(plaintext.begin(), plaintext.end());
    for (ByteValue& b : out) b ^= kAvalancheMask;
    return out;
}

double avalanche_percent(std::span<const ByteValue> original, std::span<const ByteValue> mutated) {
    if (original.empty()) throw UndefinedError("avalanche is undefined for an empty file");
    if (original.size() != mutated.size()) {
        throw UndefinedError("avalanche needs plaintexts of equal length");
    }
    const EncryptedFile a = encrypt_file(original);
    const EncryptedFile b = encrypt_file(mutated);

    std::uint64_t differing = 0;
    for (std::size_t i = 0; i < a.cipher.size(); ++i) {
        differing += popcount8(a.cipher[i] ^ b.cipher[i]);
        const KeyRecord& x = a.key.records[i];
        const KeyRecord& y = b.key.records[i];
        differing += popcount8(x.zero_weight_first ^ y.zero_weight_first);
        differing += popcount8(x.zero_weight_second ^ y.zero_weight_second);
        differing += popcount8(x.rp_first ^ y.rp_first);
        differing += popcount8(x.quotient ^ y.quotient);
        differing += popcount8(x.remainder ^ y.remainder);
    }
    const std::uint64_t total_bits = a.cipher.size() * 8 * (1 + kKeyRecordSize);
    return 100.0 * static_cast<double>(differing) / static_cast<double>(total_bits);
}

double avalanche(std::span<const ByteValue> plaintext) {
    const std::vector<ByteValue> mutated = flip_avalanche_bit(plaintext);
    return avalanche_percent(plaintext, mutated);
}

std::vector<ByteValue> keyfile_leakage_audit(const KeyFile& key) {
    const std::uint64_t length = key.header.plaintext_length;
    if (key.records.size() != block_count(length)) {
        throw ConsistencyError("key file record count does not match its plaintext length");
    }
    std::vector<ByteValue> out;
    out.reserve(static_cast<std::size_t>(length));
    for (const KeyRecord& r : key.records) {
        out.push_back(static_cast<ByteValue>(0xFF - r.zero_weight_first));
        if (out.size() < length) out.push_back(static_cast<ByteValue>(0xFF - r.zero_weight_second));
    }
    return out;
}

std::vector<ByteValue> keyfile_leakage_audit(std::span<const ByteValue> raw_key_file) {
    return keyfile_leakage_audit(parse_key_file(raw_key_file));
}

AnalysisReport analyze_file(std::span<const ByteValue> plaintext) {
    if (plaintext.empty()) throw UndefinedError("cannot analyze an empty file");
    using clock = std::chrono::steady_clock;

    const auto t0 = clock::now();
    const EncryptedFile enc = encrypt_file(plaintext);
    const auto t1 = clock::now();
    const std::vector<ByteValue> dec = decrypt_file(enc.cipher, enc.key);
    const auto t2 = clock::now();

    if (!std::equal(dec.begin(), dec.end(), plaintext.begin(), plaintext.end())) {
        throw std::logic_error("round trip mismatch: decrypted output differs from plaintext");
    }

    AnalysisReport report;
    report.source_size = plaintext.size();
    report.cipher_size = enc.cipher.size();
    report.encrypt_time_s = std::chrono::duration<double>(t1 - t0).count();
    report.decrypt_time_s = std::chrono::duration<double>(t2 - t1).count();
    const ChiSquare chi = chi_square(frequency_table(plaintext), frequency_table(enc.cipher));
    report.chi_square = chi.statistic;
    report.degrees_of_freedom = chi.degrees_of_freedom;
    report.avalanche_percent = avalanche(plaintext);
    report.compression_percent =
        100.0 * (1.0 - static_cast<double>(report.cipher_size) / static_cast<double>(report.source_size));
    return report;
}

}  // namespace gcdcipher
