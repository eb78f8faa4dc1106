// Copyright 2026 vernam contributors.
// Licensed under the Apache License, Version 2.0, see LICENSE for details.
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <array>
#include <cstdint>
#include <vector>

namespace vernam {

// splitmix64 step; expands a 64-bit seed into generator state.
inline std::uint64_t splitmix64(std::uint64_t& state) {
    std::uint64_t z = (state += 0x9E3779B97F4A7C15ULL);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
}

// xoshiro256** 1.0 (Blackman/Vigna), state seeded with four sequential
// splitmix64 outputs, bytes emitted as little-endian 64-bit blocks.
//
// Seeded key files and test corpora are contractually byte-exact across
// runs and platforms, so this algorithm is pinned. Changing any part of
// it (seeding, word order, byte order) invalidates the known-answer
// vectors in the test suite and every recorded seed.
class Xoshiro256ss {
public:
    explicit Xoshiro256ss(std::uint64_t seed) {
        std::uint64_t sm = seed;
        for (std::uint64_t& word : state_) {
            word = splitmix64(sm);
        }
    }

    std::uint64_t next() {
        const std::uint64_t result = rotl(state_[1] * 5, 7) * 9;
        const std::uint64_t t = state_[1] << 17;
        state_[2] ^= state_[0];
        state_[3] ^= state_[1];
        state_[1] ^= state_[2];
        state_[0] ^= state_[3];
        state_[2] ^= t;
        state_[3] = rotl(state_[3], 45);
        return result;
    }

    std::vector<std::uint8_t> bytes(std::size_t count) {
        std::vector<std::uint8_t> out;
        out.reserve(count);
        while (out.size() < count) {
            std::uint64_t word = next();
            for (int i = 0; i < 8 && out.size() < count; ++i) {
                out.push_back(static_cast<std::uint8_t>(word & 0xFF));
                word >>= 8;
            }
        }
        return out;
    }

private:
    static std::uint64_t rotl(std::uint64_t x, int k) {
        return (x << k) | (x >> (64 - k));
    }

    std::array<std::uint64_t, 4> state_{};
};

}  // namespace vernam
