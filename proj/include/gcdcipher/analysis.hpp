#pragma once

#include <array>
#include <cstdint>
#include <span>
#include <vector>

#include "gcdcipher/block_codec.hpp"
#include "gcdcipher/file_codec.hpp"

namespace gcdcipher {

/// Byte-value histogram of a file.
struct FrequencyTable {
    std::array<std::uint64_t, 256> counts{};

    std::uint64_t total() const noexcept;
    friend bool operator==(const FrequencyTable&, const FrequencyTable&) = default;
};

FrequencyTable frequency_table(std::span<const ByteValue> bytes);

struct ChiSquare {
    double statistic = 0.0;
    std::uint32_t degrees_of_freedom = 0;
};

/// Pearson statistic with the source table as the expected frequencies.
/// Classes absent from the source are skipped, both in the sum and in the
/// degrees of freedom (classes present in the source, minus one).
/// Throws UndefinedError if the source table is empty.
ChiSquare chi_square(const FrequencyTable& source, const FrequencyTable& encrypted);

/// Mask of the bit flipped for the avalanche test: 5th position counting
/// from the most significant bit, weight 8.
inline constexpr ByteValue kAvalancheMask = 0x08;

std::vector<ByteValue> flip_avalanche_bit(std::span<const ByteValue> plaintext);

/// Percentage of differing bits between the encryptions of two equal-length
/// plaintexts, measured over cipher bytes followed by key-record bytes.
/// Throws UndefinedError on empty or mismatched inputs.
double avalanche_percent(std::span<const ByteValue> original, std::span<const ByteValue> mutated);

/// avalanche_percent(plaintext, flip_avalanche_bit(plaintext)).
double avalanche(std::span<const ByteValue> plaintext);

/// Recovers the plaintext from a key file alone: the stored zero-weight sums
/// are the complements of the plaintext bytes.
std::vector<ByteValue> keyfile_leakage_audit(const KeyFile& key);
std::vector<ByteValue> keyfile_leakage_audit(std::span<const ByteValue> raw_key_file);

struct AnalysisReport {
    std::uint64_t source_size = 0;
    std::uint64_t cipher_size = 0;
    double encrypt_time_s = 0.0;
    double decrypt_time_s = 0.0;
    double chi_square = 0.0;
    std::uint32_t degrees_of_freedom = 0;
    double avalanche_percent = 0.0;
    double compression_percent = 0.0;
};

/// Encrypts, decrypts (timed, wall clock around the codec calls only),
/// verifies the round trip and collects the metrics. Throws UndefinedError
/// for an empty input and std::logic_error if the round trip ever fails.
AnalysisReport analyze_file(std::span<const ByteValue> plaintext);

}  // namespace gcdcipher
