#pragma once

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "gcdcipher/analysis.hpp"

namespace gcdcipher {

struct CorpusRow {
    std::string file_name;
    std::optional<std::uint64_t> source_size;
    std::optional<AnalysisReport> report;  // empty when analysis failed
    std::string error;

    bool ok() const noexcept { return report.has_value(); }
};

inline constexpr const char* kCorpusCsvHeader =
    "file_name,source_size_bytes,cipher_size_bytes,encrypt_time_s,decrypt_time_s,chi_square,"
    "degrees_of_freedom,avalanche_percent,compression_percent";

/// Regular files directly inside `dir`, sorted by file name.
std::vector<std::filesystem::path> list_corpus_files(const std::filesystem::path& dir);

CorpusRow analyze_corpus_file(const std::filesystem::path& file);

/// Analyzes every file on a pool of at most `jobs` workers. Each file is
/// timed on the worker that owns it; rows come back in input order.
std::vector<CorpusRow> analyze_corpus(const std::vector<std::filesystem::path>& files, unsigned jobs);

void write_corpus_csv(std::ostream& out, const std::vector<CorpusRow>& rows);

}  // namespace gcdcipher
