#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace gcdcipher {

/// Base class for every error raised by the codec and analysis layers.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Stream could not be read or written.
class IoError : public Error {
public:
    using Error::Error;
};

/// Key file is truncated or carries a wrong magic/version.
class FormatError : public Error {
public:
    using Error::Error;
};

/// Key file and cipher file disagree on the number of blocks.
class ConsistencyError : public Error {
public:
    using Error::Error;
};

/// A key record cannot have been produced by encrypt_block.
class CorruptionError : public Error {
public:
    explicit CorruptionError(const std::string& what) : Error(what) {}
    CorruptionError(const std::string& what, std::uint64_t block_index)
        : Error(what + " (block " + std::to_string(block_index) + ")"),
          block_index_(block_index), has_index_(true) {}

    bool has_block_index() const noexcept { return has_index_; }
    std::uint64_t block_index() const noexcept { return block_index_; }

private:
    std::uint64_t block_index_ = 0;
    bool has_index_ = false;
};

/// A statistic has no defined value for the given input (e.g. empty file).
class UndefinedError : public Error {
public:
    using Error::Error;
};

}  // namespace gcdcipher
