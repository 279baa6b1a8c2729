#pragma once

#include <filesystem>
#include <iosfwd>
#include <optional>

#include "gcdcipher/selftest.hpp"

namespace gcdcipher {

namespace exit_code {
inline constexpr int kOk = 0;
inline constexpr int kUsageOrIo = 1;
inline constexpr int kFormat = 2;  // also record/cipher consistency
inline constexpr int kCorruption = 3;
}  // namespace exit_code

namespace fs = std::filesystem;

// Default output names follow ct_<name>, key_<name>, pt_<name>, placed next
// to the input.
fs::path default_cipher_path(const fs::path& input);
fs::path default_key_path(const fs::path& input);
fs::path default_plain_path(const fs::path& cipher);
fs::path default_audit_path(const fs::path& key);

int cmd_encrypt(const fs::path& input, const std::optional<fs::path>& cipher_out,
                const std::optional<fs::path>& key_out, std::ostream& out, std::ostream& err);

int cmd_decrypt(const fs::path& cipher, const fs::path& key, const std::optional<fs::path>& plain_out,
                std::ostream& out, std::ostream& err);

int cmd_audit(const fs::path& key, const std::optional<fs::path>& plain_out, std::ostream& out,
              std::ostream& err);

/// Writes the CSV to `csv_out`, or to `out` when no path is given.
int cmd_corpus(const fs::path& dir, const std::optional<fs::path>& csv_out, unsigned jobs,
               std::ostream& out, std::ostream& err);

int cmd_selftest(std::ostream& out, const SelfTestHooks& hooks = {});

}  // namespace gcdcipher
