// Copyright 2026 vernam contributors.
// Licensed under the Apache License, Version 2.0, see LICENSE for details.
// SPDX-License-Identifier: Apache-2.0

#include "core.hpp"

namespace vernam {

void validate_key(std::uint64_t key_len, std::uint64_t msg_len, KeyPolicy policy) {
    switch (policy) {
        case KeyPolicy::Strict:
            if (key_len < msg_len) {
                throw KeyTooShortError(key_len, msg_len);
            }
            return;
        case KeyPolicy::RelaxedRepeat:
            if (key_len == 0) {
                throw EmptyKeyError("RelaxedRepeat needs at least one key byte to cycle");
            }
            return;
    }
}

ByteMessage xor_combine(const ByteMessage& input, const KeyMaterial& key, KeyPolicy policy) {
    validate_key(key.length(), input.size(), policy);

    ByteMessage out(input.size());
    if (input.empty()) {
        return out;
    }

    const ByteMessage& k = key.bytes();
    const std::size_t key_len = k.size();  // >= 1 whenever input is nonempty
    for (std::size_t j = 0; j < input.size(); ++j) {
        out[j] = static_cast<std::uint8_t>(input[j] ^ k[j % key_len]);
    }
    return out;
}

ByteMessage encipher(const KeyMaterial& key, const ByteMessage& plaintext, KeyPolicy policy) {
    return xor_combine(plaintext, key, policy);
}

ByteMessage decipher(const KeyMaterial& key, const ByteMessage& ciphertext, KeyPolicy policy) {
    return xor_combine(ciphertext, key, policy);
}

}  // namespace vernam
