#include "gcdcipher/corpus.hpp"

#include <algorithm>
#include <atomic>
#include <cstdio>
#include <fstream>
#include <iterator>
#include <ostream>
#include <thread>

namespace gcdcipher {
namespace {

std::string format(const char* fmt, double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, fmt, v);
    return buf;
}

// RFC 4180 quoting, only when the field needs it.
std::string csv_field(const std::string& s) {
    if (s.find_first_of(",\"\r\n") == std::string::npos) return s;
    std::string out = "\"";
    for (char c : s) {
        if (c == '"') out += '"';
        out += c;
    }
    out += '"';
    return out;
}

}  // namespace

std::vector<std::filesystem::path> list_corpus_files(const std::filesystem::path& dir) {
    std::vector<std::filesystem::path> files;
    for (const auto& entry : std::filesystem::directory_iterator(dir)) {
        if (entry.is_regular_file()) files.push_back(entry.path());
    }
    std::sort(files.begin(), files.end(),
              [](const auto& a, const auto& b) { return a.filename() < b.filename(); });
    return files;
}

CorpusRow analyze_corpus_file(const std::filesystem::path& file) {
    CorpusRow row;
    row.file_name = file.filename().string();
    std::ifstream in(file, std::ios::binary);
    if (!in) {
        row.error = "cannot open " + file.string();
        return row;
    }
    std::vector<ByteValue> bytes{std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
    if (in.bad()) {
        row.error = "failed reading " + file.string();
        return row;
    }
    row.source_size = bytes.size();
    try {
        row.report = analyze_file(bytes);
    } catch (const std::exception& e) {
        row.error = e.what();
    }
    return row;
}

std::vector<CorpusRow> analyze_corpus(const std::vector<std::filesystem::path>& files, unsigned jobs) {
    std::vector<CorpusRow> rows(files.size());
    const unsigned workers = std::max(1u, std::min<unsigned>(jobs, static_cast<unsigned>(files.size())));
    std::atomic<std::size_t> next{0};
    auto work = [&] {
        for (std::size_t i = next++; i < files.size(); i = next++) rows[i] = analyze_corpus_file(files[i]);
    };
    if (workers <= 1) {
        work();
        return rows;
    }
    {
        std::vector<std::jthread> pool;
        pool.reserve(workers);
        for (unsigned w = 0; w < workers; ++w) pool.emplace_back(work);
    }
    return rows;
}

void write_corpus_csv(std::ostream& out, const std::vector<CorpusRow>& rows) {
    out << kCorpusCsvHeader << "\n";
    for (const CorpusRow& row : rows) {
        out << csv_field(row.file_name) << ",";
        if (row.source_size) out << *row.source_size;
        if (!row.report) {
            out << ",,,,,,,\n";
            continue;
        }
        const AnalysisReport& r = *row.report;
        out << "," << r.cipher_size << "," << format("%.3f", r.encrypt_time_s) << ","
            << format("%.3f", r.decrypt_time_s) << "," << format("%.4f", r.chi_square) << ","
            << r.degrees_of_freedom << "," << format("%.2f", r.avalanche_percent) << ","
            << format("%.1f", r.compression_percent) << "\n";
    }
}

}  // namespace gcdcipher
