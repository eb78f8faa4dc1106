// Copyright 2026 vernam contributors.
// Licensed under the Apache License, Version 2.0, see LICENSE for details.
// SPDX-License-Identifier: Apache-2.0

#include "keygen.hpp"

#include <bit>
#include <fstream>

#include "rng.hpp"

namespace vernam {

namespace {

void check_length(std::uint64_t length) {
    if (length == 0) {
        throw InvalidArgumentError("key length must be at least 1");
    }
}

ByteMessage read_system_entropy(std::uint64_t length) {
    std::ifstream urandom("/dev/urandom", std::ios::binary);
    if (!urandom) {
        throw EntropyUnavailableError("cannot open /dev/urandom");
    }
    ByteMessage bytes(length);
    urandom.read(reinterpret_cast<char*>(bytes.data()), static_cast<std::streamsize>(length));
    if (static_cast<std::uint64_t>(urandom.gcount()) != length) {
        throw EntropyUnavailableError("short read from /dev/urandom");
    }
    return bytes;
}

}  // namespace

KeySpec KeySpec::seeded(std::uint64_t length, std::uint64_t seed) {
    check_length(length);
    return KeySpec{length, seed};
}

KeySpec KeySpec::system(std::uint64_t length) {
    check_length(length);
    return KeySpec{length, std::nullopt};
}

KeyMaterial generate_key(const KeySpec& spec) {
    check_length(spec.length);
    if (spec.seed) {
        Xoshiro256ss rng(*spec.seed);
        return KeyMaterial(rng.bytes(spec.length), KeyOrigin::Generated);
    }
    return KeyMaterial(read_system_entropy(spec.length), KeyOrigin::Generated);
}

double monobit_fraction(const KeyMaterial& key) {
    if (key.length() == 0) {
        throw EmptyKeyError("monobit fraction is undefined for zero bits");
    }
    std::uint64_t ones = 0;
    for (std::uint8_t byte : key.bytes()) {
        ones += static_cast<std::uint64_t>(std::popcount(byte));
    }
    return static_cast<double>(ones) / (8.0 * static_cast<double>(key.length()));
}

}  // namespace vernam
