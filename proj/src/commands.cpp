#include "gcdcipher/commands.hpp"

#include <chrono>
#include <fstream>
#include <iterator>
#include <ostream>
#include <sstream>
#include <string>
#include <system_error>

#include "gcdcipher/analysis.hpp"
#include "gcdcipher/corpus.hpp"
#include "gcdcipher/file_codec.hpp"

namespace gcdcipher {
namespace {

fs::path sibling(const fs::path& p, const std::string& prefix, const std::string& strip = {}) {
    std::string name = p.filename().string();
    if (!strip.empty() && name.starts_with(strip) && name.size() > strip.size()) {
        name.erase(0, strip.size());
    }
    return p.parent_path() / (prefix + name);
}

void remove_quietly(const fs::path& p) {
    std::error_code ec;
    fs::remove(p, ec);
}

int exit_for(const std::exception& e) {
    if (dynamic_cast<const CorruptionError*>(&e)) return exit_code::kCorruption;
    if (dynamic_cast<const FormatError*>(&e) || dynamic_cast<const ConsistencyError*>(&e)) {
        return exit_code::kFormat;
    }
    return exit_code::kUsageOrIo;
}

std::string seconds(std::chrono::steady_clock::duration d) {
    std::ostringstream s;
    s.setf(std::ios::fixed);
    s.precision(3);
    s << std::chrono::duration<double>(d).count() << " s";
    return s.str();
}

std::ifstream open_input(const fs::path& p) {
    std::ifstream in(p, std::ios::binary);
    if (!in) throw IoError("cannot open " + p.string() + " for reading");
    return in;
}

std::ofstream open_output(const fs::path& p) {
    std::ofstream out(p, std::ios::binary | std::ios::trunc);
    if (!out) throw IoError("cannot open " + p.string() + " for writing");
    return out;
}

void close_output(std::ofstream& out, const fs::path& p) {
    out.close();
    if (!out) throw IoError("failed writing " + p.string());
}

}  // namespace

fs::path default_cipher_path(const fs::path& input) { return sibling(input, "ct_"); }
fs::path default_key_path(const fs::path& input) { return sibling(input, "key_"); }
fs::path default_plain_path(const fs::path& cipher) { return sibling(cipher, "pt_", "ct_"); }
fs::path default_audit_path(const fs::path& key) { return sibling(key, "leaked_", "key_"); }

int cmd_encrypt(const fs::path& input, const std::optional<fs::path>& cipher_out,
                const std::optional<fs::path>& key_out, std::ostream& out, std::ostream& err) {
    const fs::path ct_path = cipher_out.value_or(default_cipher_path(input));
    const fs::path key_path = key_out.value_or(default_key_path(input));
    bool created = false;
    try {
        std::ifstream in = open_input(input);
        std::ofstream ct = open_output(ct_path);
        created = true;
        std::ofstream key = open_output(key_path);

        const auto t0 = std::chrono::steady_clock::now();
        const std::uint64_t n = encrypt_stream(in, ct, key);
        const auto elapsed = std::chrono::steady_clock::now() - t0;
        close_output(ct, ct_path);
        close_output(key, key_path);

        out << "plaintext " << input.string() << ": " << n << " bytes\n"
            << "cipher    " << ct_path.string() << ": " << block_count(n) << " bytes\n"
            << "key       " << key_path.string() << ": "
            << kKeyHeaderSize + kKeyRecordSize * block_count(n) << " bytes\n"
            << "encrypted in " << seconds(elapsed) << "\n";
        return exit_code::kOk;
    } catch (const std::exception& e) {
        if (created) {
            remove_quietly(ct_path);
            remove_quietly(key_path);
        }
        err << "encrypt: " << e.what() << "\n";
        return exit_for(e);
    }
}

int cmd_decrypt(const fs::path& cipher, const fs::path& key, const std::optional<fs::path>& plain_out,
                std::ostream& out, std::ostream& err) {
    const fs::path pt_path = plain_out.value_or(default_plain_path(cipher));
    bool created = false;
    try {
        std::ifstream ct = open_input(cipher);
        std::ifstream kf = open_input(key);
        std::ofstream pt = open_output(pt_path);
        created = true;

        const auto t0 = std::chrono::steady_clock::now();
        const std::uint64_t n = decrypt_stream(ct, kf, pt);
        const auto elapsed = std::chrono::steady_clock::now() - t0;
        close_output(pt, pt_path);

        out << "plaintext " << pt_path.string() << ": " << n << " bytes\n"
            << "decrypted in " << seconds(elapsed) << "\n";
        return exit_code::kOk;
    } catch (const std::exception& e) {
        if (created) remove_quietly(pt_path);
        err << "decrypt: " << e.what() << "\n";
        return exit_for(e);
    }
}

int cmd_audit(const fs::path& key, const std::optional<fs::path>& plain_out, std::ostream& out,
              std::ostream& err) {
    const fs::path pt_path = plain_out.value_or(default_audit_path(key));
    try {
        std::ifstream kf = open_input(key);
        const std::vector<ByteValue> raw{std::istreambuf_iterator<char>(kf),
                                         std::istreambuf_iterator<char>()};
        if (kf.bad()) throw IoError("failed reading " + key.string());
        const std::vector<ByteValue> recovered = keyfile_leakage_audit(raw);

        std::ofstream pt = open_output(pt_path);
        pt.write(reinterpret_cast<const char*>(recovered.data()),
                 static_cast<std::streamsize>(recovered.size()));
        close_output(pt, pt_path);

        out << "WARNING: the key file alone reveals the plaintext; its zero-weight fields are "
               "the bitwise complements of the plaintext bytes.\n"
            << "recovered " << recovered.size() << " bytes without the cipher file -> "
            << pt_path.string() << "\n";
        return exit_code::kOk;
    } catch (const std::exception& e) {
        err << "audit: " << e.what() << "\n";
        return exit_for(e);
    }
}

int cmd_corpus(const fs::path& dir, const std::optional<fs::path>& csv_out, unsigned jobs,
               std::ostream& out, std::ostream& err) {
    std::vector<fs::path> files;
    try {
        files = list_corpus_files(dir);
    } catch (const std::exception& e) {
        err << "corpus: " << e.what() << "\n";
        return exit_code::kUsageOrIo;
    }
    const std::vector<CorpusRow> rows = analyze_corpus(files, jobs);

    int status = exit_code::kOk;
    for (const CorpusRow& row : rows) {
        if (!row.ok()) {
            err << "corpus: " << row.file_name << ": " << row.error << "\n";
            status = exit_code::kUsageOrIo;
        }
    }
    if (csv_out) {
        std::ofstream csv(*csv_out, std::ios::trunc);
        if (!csv) {
            err << "corpus: cannot open " << csv_out->string() << " for writing\n";
            return exit_code::kUsageOrIo;
        }
        write_corpus_csv(csv, rows);
        csv.close();
        if (!csv) {
            err << "corpus: failed writing " << csv_out->string() << "\n";
            return exit_code::kUsageOrIo;
        }
        out << "wrote " << rows.size() << " rows to " << csv_out->string() << "\n";
    } else {
        write_corpus_csv(out, rows);
    }
    return status;
}

int cmd_selftest(std::ostream& out, const SelfTestHooks& hooks) {
    return print_selftest(run_selftest(hooks), out);
}

}  // namespace gcdcipher
