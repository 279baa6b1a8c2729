#include "gcdcipher/selftest.hpp"

#include <ostream>
#include <sstream>

namespace gcdcipher {
namespace {

std::string describe(Block16 b) {
    std::ostringstream s;
    s << "(" << int{b.first} << ", " << int{b.second} << ")";
    return s.str();
}

std::string describe(const EncryptedBlock& e) {
    std::ostringstream s;
    s << "cipher " << int{e.cipher} << ", key (" << int{e.key.zero_weight_first} << ", "
      << int{e.key.zero_weight_second} << ", " << int{e.key.rp_first} << ", "
      << int{e.key.quotient} << ", " << int{e.key.remainder} << ")";
    return s.str();
}

struct Golden {
    Block16 plain;
    EncryptedBlock encrypted;
};

// Worked examples: 'i','n' -> ENQ and '2','d' -> '2'.
constexpr Golden kGolden[] = {
    {{105, 110}, {5, {150, 145, 21, 1, 1}}},
    {{50, 100}, {50, {205, 155, 1, 2, 0}}},
};

}  // namespace

SelfTestReport run_selftest(const SelfTestHooks& hooks) {
    SelfTestReport report;
    auto fail = [&](std::string msg) {
        if (report.first_failure.empty()) report.first_failure = std::move(msg);
    };

    report.golden_ok = true;
    for (const Golden& g : kGolden) {
        const EncryptedBlock got = hooks.encrypt(g.plain);
        if (!(got == g.encrypted)) {
            report.golden_ok = false;
            fail("golden " + describe(g.plain) + ": expected " + describe(g.encrypted) + ", got " +
                 describe(got));
            continue;
        }
        try {
            const Block16 back = hooks.decrypt(g.encrypted.cipher, g.encrypted.key);
            if (!(back == g.plain)) {
                report.golden_ok = false;
                fail("golden decrypt " + describe(g.encrypted) + ": got " + describe(back));
            }
        } catch (const std::exception& e) {
            report.golden_ok = false;
            fail("golden decrypt " + describe(g.encrypted) + ": " + e.what());
        }
    }

    report.complement_ok = true;
    for (unsigned x = 0; x < 256; ++x) {
        const ByteValue zw = hooks.zero_weight(static_cast<ByteValue>(x));
        if (zw != 255 - x) {
            report.complement_ok = false;
            fail("zero_weight(" + std::to_string(x) + ") = " + std::to_string(zw) + ", expected " +
                 std::to_string(255 - x));
            break;
        }
    }

    for (unsigned a = 0; a < 256; ++a) {
        for (unsigned b = 0; b < 256; ++b) {
            ++report.blocks_total;
            const Block16 plain{static_cast<ByteValue>(a), static_cast<ByteValue>(b)};
            const EncryptedBlock enc = hooks.encrypt(plain);
            const unsigned g = enc.cipher;
            const bool divides = g == 0 ? (a == 0 && b == 0) : (a % g == 0 && b % g == 0);
            if (!divides) {
                fail("block " + describe(plain) + ": cipher " + std::to_string(g) +
                     " does not divide both sub-blocks");
                continue;
            }
            try {
                const Block16 back = hooks.decrypt(enc.cipher, enc.key);
                if (back == plain) {
                    ++report.blocks_ok;
                } else {
                    fail("block " + describe(plain) + " decrypted to " + describe(back));
                }
            } catch (const std::exception& e) {
                fail("block " + describe(plain) + ": " + e.what());
            }
        }
    }
    return report;
}

int print_selftest(const SelfTestReport& report, std::ostream& out) {
    out << (report.golden_ok ? "PASS" : "FAIL") << "  golden vectors (105,110) and (50,100)\n";
    out << (report.complement_ok ? "PASS" : "FAIL") << "  zero_weight(x) == 255 - x for all 256 x\n";
    out << (report.blocks_ok == report.blocks_total ? "PASS" : "FAIL") << "  " << report.blocks_ok
        << "/" << report.blocks_total << " blocks OK\n";
    if (!report.first_failure.empty()) out << "first failure: " << report.first_failure << "\n";
    return report.passed() ? 0 : 1;
}

}  // namespace gcdcipher
