// Copyright 2026 vernam contributors.
// Licensed under the Apache License, Version 2.0, see LICENSE for details.
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "errors.hpp"

namespace vernam {

/// A finite byte sequence used as plaintext or ciphertext. Lengths are
/// exact; no padding or truncation anywhere in the library.
using ByteMessage = std::vector<std::uint8_t>;

enum class KeyOrigin { File, Generated, Literal };

/// Strict enforces the pad rule (key at least as long as the message).
/// RelaxedRepeat cycles the key over the message; that breaks the
/// one-time-pad guarantee and is never the default.
enum class KeyPolicy { Strict, RelaxedRepeat };

/// Key bytes plus their provenance. Immutable once constructed.
class KeyMaterial {
public:
    explicit KeyMaterial(ByteMessage bytes, KeyOrigin origin = KeyOrigin::Literal)
        : bytes_(std::move(bytes)), origin_(origin) {}

    const ByteMessage& bytes() const noexcept { return bytes_; }
    std::size_t length() const noexcept { return bytes_.size(); }
    KeyOrigin origin() const noexcept { return origin_; }

private:
    ByteMessage bytes_;
    KeyOrigin origin_;
};

// Throws KeyTooShortError when Strict and key_len < msg_len, and
// EmptyKeyError when RelaxedRepeat and the key is empty (the cycling
// index needs at least one key byte).
void validate_key(std::uint64_t key_len, std::uint64_t msg_len, KeyPolicy policy);

// out[j] = input[j] ^ key[j mod key_len]. The wrap is only reachable
// under RelaxedRepeat; under Strict the validated key covers the input.
// Shared by encipher and decipher, which are the same operation.
ByteMessage xor_combine(const ByteMessage& input, const KeyMaterial& key, KeyPolicy policy);

ByteMessage encipher(const KeyMaterial& key, const ByteMessage& plaintext,
                     KeyPolicy policy = KeyPolicy::Strict);

ByteMessage decipher(const KeyMaterial& key, const ByteMessage& ciphertext,
                     KeyPolicy policy = KeyPolicy::Strict);

}  // namespace vernam
