#include "gcdcipher/block_codec.hpp"

#include <string>

namespace gcdcipher {

Block16 decrypt_block(ByteValue cipher, const KeyRecord& key) {
    Block16 out;
    if (!try_decrypt_block(cipher, key, out)) {
        throw CorruptionError("malformed key record: reconstructed sub-block exceeds 255 (cipher " +
                              std::to_string(cipher) + ", rp " + std::to_string(key.rp_first) +
                              ", quotient " + std::to_string(key.quotient) + ", remainder " +
                              std::to_string(key.remainder) + ")");
    }
    return out;
}

}  // namespace gcdcipher
