#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "gcdcipher/commands.hpp"

namespace {

std::optional<std::filesystem::path> opt_path(const std::string& s) {
    if (s.empty()) return std::nullopt;
    return std::filesystem::path(s);
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"GCD-based bit-level block cipher: encrypt, decrypt, audit and analyze files"};
    app.require_subcommand(1);

    std::string input, ct, key, out, dir, csv;
    unsigned jobs = 1;

    auto* enc = app.add_subcommand("encrypt", "Encrypt a file into a cipher file and a key file");
    enc->add_option("input", input, "Plaintext file")->required();
    enc->add_option("--ct", ct, "Cipher output (default ct_<name>)");
    enc->add_option("--key", key, "Key output (default key_<name>)");

    auto* dec = app.add_subcommand("decrypt", "Recover the plaintext from a cipher file and its key file");
    dec->add_option("ct", ct, "Cipher file")->required();
    dec->add_option("key", key, "Key file")->required();
    dec->add_option("--out", out, "Plaintext output (default pt_<name>)");

    auto* aud = app.add_subcommand("audit", "Recover the plaintext from the key file alone");
    aud->add_option("key", key, "Key file")->required();
    aud->add_option("--out", out, "Recovered output (default leaked_<name>)");

    auto* cor = app.add_subcommand("corpus", "Analyze every file in a directory and emit CSV");
    cor->add_option("dir", dir, "Corpus directory")->required();
    cor->add_option("--csv", csv, "CSV output (default stdout)");
    cor->add_option("--jobs", jobs, "Worker threads")->check(CLI::PositiveNumber);

    auto* self = app.add_subcommand("selftest", "Exhaustive block round trip and golden vectors");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        return rc == 0 ? 0 : gcdcipher::exit_code::kUsageOrIo;
    }

    if (*enc) return gcdcipher::cmd_encrypt(input, opt_path(ct), opt_path(key), std::cout, std::cerr);
    if (*dec) return gcdcipher::cmd_decrypt(ct, key, opt_path(out), std::cout, std::cerr);
    if (*aud) return gcdcipher::cmd_audit(key, opt_path(out), std::cout, std::cerr);
    if (*cor) return gcdcipher::cmd_corpus(dir, opt_path(csv), jobs, std::cout, std::cerr);
    if (*self) return gcdcipher::cmd_selftest(std::cout);
    return gcdcipher::exit_code::kUsageOrIo;
}
