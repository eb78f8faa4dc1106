// Copyright 2026 vernam contributors.
// Licensed under the Apache License, Version 2.0, see LICENSE for details.
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstdint>
#include <optional>

#include "core.hpp"

namespace vernam {

/// Requested key length plus randomness source. A present seed selects
/// the deterministic generator (see rng.hpp); absent means OS entropy.
struct KeySpec {
    static KeySpec seeded(std::uint64_t length, std::uint64_t seed);
    static KeySpec system(std::uint64_t length);

    std::uint64_t length = 0;
    std::optional<std::uint64_t> seed;
};

// Returns exactly spec.length bytes with origin Generated. Seeded output
// is a pure function of (seed, length). Throws EntropyUnavailableError
// when the OS entropy source cannot be read.
KeyMaterial generate_key(const KeySpec& spec);

// Fraction of 1-bits over all 8 * length bits. Throws EmptyKeyError on
// an empty key.
double monobit_fraction(const KeyMaterial& key);

}  // namespace vernam
