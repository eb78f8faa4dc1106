// Copyright 2026 vernam contributors.
// Licensed under the Apache License, Version 2.0, see LICENSE for details.
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace vernam {

enum class ErrorCode {
    KeyTooShort,
    EmptyKey,
    MissingFile,
    IoFailure,
    InvalidArgument,
    EntropyUnavailable,
    UnknownMutant,
    BrokenBaseline,
};

class VernamError : public std::runtime_error {
public:
    VernamError(ErrorCode code, const std::string& message)
        : std::runtime_error(message), code_(code) {}

    ErrorCode code() const noexcept { return code_; }

private:
    ErrorCode code_;
};

class KeyTooShortError : public VernamError {
public:
    KeyTooShortError(std::uint64_t key_len_, std::uint64_t msg_len_)
        : VernamError(ErrorCode::KeyTooShort,
                      "key too short: key " + std::to_string(key_len_) +
                          " bytes < input " + std::to_string(msg_len_) + " bytes"),
          key_len(key_len_),
          msg_len(msg_len_) {}

    std::uint64_t key_len;
    std::uint64_t msg_len;
};

class EmptyKeyError : public VernamError {
public:
    explicit EmptyKeyError(const std::string& what_for)
        : VernamError(ErrorCode::EmptyKey, "empty key: " + what_for) {}
};

class MissingFileError : public VernamError {
public:
    explicit MissingFileError(std::string path_)
        : VernamError(ErrorCode::MissingFile, "missing file: " + path_),
          path(std::move(path_)) {}

    std::string path;
};

class IoFailureError : public VernamError {
public:
    IoFailureError(std::string path_, const std::string& detail)
        : VernamError(ErrorCode::IoFailure, "i/o failure: " + path_ + ": " + detail),
          path(std::move(path_)) {}

    std::string path;
};

class InvalidArgumentError : public VernamError {
public:
    explicit InvalidArgumentError(const std::string& message)
        : VernamError(ErrorCode::InvalidArgument, message) {}
};

class EntropyUnavailableError : public VernamError {
public:
    explicit EntropyUnavailableError(const std::string& detail)
        : VernamError(ErrorCode::EntropyUnavailable, "system entropy unavailable: " + detail) {}
};

class UnknownMutantError : public VernamError {
public:
    explicit UnknownMutantError(const std::string& which)
        : VernamError(ErrorCode::UnknownMutant, "unknown mutant: " + which) {}
};

// The real cipher failed its own round-trip specification; carries the
// witness pair so the failure can be replayed.
class BrokenBaselineError : public VernamError {
public:
    BrokenBaselineError(std::vector<std::uint8_t> msg, std::vector<std::uint8_t> key,
                        std::uint64_t offset)
        : VernamError(ErrorCode::BrokenBaseline,
                      "baseline cipher violates its round-trip specification: msg_len=" +
                          std::to_string(msg.size()) + " key_len=" + std::to_string(key.size()) +
                          " offset=" + std::to_string(offset)),
          witness_msg(std::move(msg)),
          witness_key(std::move(key)),
          first_diff_offset(offset) {}

    std::vector<std::uint8_t> witness_msg;
    std::vector<std::uint8_t> witness_key;
    std::uint64_t first_diff_offset;
};

}  // namespace vernam
