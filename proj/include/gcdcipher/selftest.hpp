#pragma once

#include <cstdint>
#include <functional>
#include <iosfwd>
#include <string>

#include "gcdcipher/block_codec.hpp"

namespace gcdcipher {

/// Codec entry points exercised by the self test. Defaults are the real
/// implementations; tests substitute broken ones to check the harness.
struct SelfTestHooks {
    std::function<EncryptedBlock(Block16)> encrypt = [](Block16 b) { return encrypt_block(b); };
    std::function<Block16(ByteValue, const KeyRecord&)> decrypt =
        [](ByteValue c, const KeyRecord& k) { return decrypt_block(c, k); };
    std::function<ByteValue(ByteValue)> zero_weight = [](ByteValue x) { return gcdcipher::zero_weight(x); };
};

struct SelfTestReport {
    bool golden_ok = false;
    bool complement_ok = false;
    std::uint32_t blocks_ok = 0;
    std::uint32_t blocks_total = 0;
    std::string first_failure;

    bool passed() const noexcept {
        return golden_ok && complement_ok && blocks_ok == blocks_total && first_failure.empty();
    }
};

SelfTestReport run_selftest(const SelfTestHooks& hooks = {});

/// Prints one line per check and returns the process exit status.
int print_selftest(const SelfTestReport& report, std::ostream& out);

}  // namespace gcdcipher
