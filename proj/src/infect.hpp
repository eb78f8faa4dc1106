// Copyright 2026 vernam contributors.
// Licensed under the Apache License, Version 2.0, see LICENSE for details.
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "core.hpp"

namespace vernam {

/// A pluggable pair of byte-sequence transforms. The self-test harness
/// judges any behavior against the round-trip specification
/// decipher(k, encipher(k, m)) == m, so another symmetric cipher with
/// the same shape can be dropped in.
struct CipherBehavior {
    using Transform =
        std::function<ByteMessage(const KeyMaterial&, const ByteMessage&, KeyPolicy)>;

    std::string name;
    Transform encipher_fn;
    Transform decipher_fn;
};

// The genuine XOR cipher wrapped as a behavior.
CipherBehavior vernam_behavior();

/// Catalog of injectable faults. Each id maps to exactly one documented
/// behavioral deviation; see apply_mutant.
enum class MutantId {
    M1_DecipherOr = 1,
    M2_DecipherAnd = 2,
    M3_KeyStreamOffByOne = 3,
    M4_KeyReuseHalf = 4,
    M5_DropLastByte = 5,
    M6_EncipherOr = 6,
};

inline constexpr MutantId kAllMutants[] = {
    MutantId::M1_DecipherOr,   MutantId::M2_DecipherAnd,  MutantId::M3_KeyStreamOffByOne,
    MutantId::M4_KeyReuseHalf, MutantId::M5_DropLastByte, MutantId::M6_EncipherOr,
};

const char* mutant_name(MutantId id);

// Accepts the full catalog name ("M1_DecipherOr") or the short code
// ("M1"); returns nullopt for anything else.
std::optional<MutantId> parse_mutant(std::string_view text);

// Returns a behavior identical to base except for the documented fault:
//   M1  decipher combines bytes with OR instead of XOR
//   M2  decipher combines bytes with AND instead of XOR
//   M3  decipher starts the key stream one byte late (key byte 0 unused)
//   M4  both directions act as if only the first ceil(|key|/2) key bytes
//       existed, cycling them where the policy allows
//   M5  decipher drops the last output byte (empty input stays empty)
//   M6  encipher combines bytes with OR instead of XOR
CipherBehavior apply_mutant(const CipherBehavior& base, MutantId id);

struct RoundTripOutcome {
    bool pass = false;
    // Valid iff !pass: the smallest index where the round trip output
    // differs from the message. A length mismatch reports the length of
    // the shorter sequence; a behavior that errors on an admissible pair
    // reports 0 (no byte of output was produced).
    std::uint64_t first_diff_offset = 0;
};

// Checks decipher(k, encipher(k, msg)) == msg byte-exactly for the given
// behavior. Requires |key| >= |msg| (KeyTooShortError otherwise). An
// error raised by the behavior itself on an admissible pair counts as a
// failed round trip: erroring on valid input is already a deviation from
// the specification.
RoundTripOutcome roundtrip_holds(const CipherBehavior& behavior, const ByteMessage& msg,
                                 const KeyMaterial& key);

struct CorpusPair {
    ByteMessage msg;
    KeyMaterial key;
};

struct Corpus {
    std::uint64_t seed = 0;
    std::vector<CorpusPair> pairs;
};

// Deterministic in (seed, pair_count, max_len). Message lengths spread
// over [0, max_len]; every key is at least one byte longer than its
// message so the off-by-one fault is exercisable. Two fixed adversarial
// vectors are always prepended: (0x00 * 16, 0xFF * 17) and
// (0xFF * 16, 0x55 * 17), which kill the OR and AND combine faults
// whatever the seed. Total size is pair_count + 2.
Corpus generate_corpus(std::uint64_t seed, std::uint64_t pair_count, std::uint64_t max_len);

struct KillWitness {
    ByteMessage msg;
    KeyMaterial key;
    std::uint64_t first_diff_offset = 0;
};

struct KillEntry {
    MutantId mutant;
    bool killed = false;
    std::optional<KillWitness> witness;  // engaged iff killed
};

struct KillMatrix {
    std::uint64_t corpus_seed = 0;
    std::uint64_t corpus_size = 0;
    std::vector<KillEntry> entries;

    bool all_killed() const;
};

// Verifies the pristine base over the whole corpus first and throws
// BrokenBaselineError if it fails anywhere; a broken real cipher must
// never be reported as a mutant verdict. Then, for each requested mutant
// (deduplicated, in id order), records Killed with the first corpus pair
// whose round trip fails, or Survived. The corpus must be nonempty.
KillMatrix run_kill_matrix(const CipherBehavior& base, std::vector<MutantId> mutants,
                           const Corpus& corpus);

// Line-oriented report, one line per mutant:
//   BASELINE OK corpus_seed=<s> corpus_size=<n>
//   MUTANT <id> KILLED witness msg_len=<n> key_len=<n> offset=<j>
//   MUTANT <id> SURVIVED
std::string format_report(const KillMatrix& matrix);

enum class TriangleKind { Equilateral, Isosceles, Scalene, NotATriangle };

// Total function: any non-positive side or a failed strict triangle
// inequality yields NotATriangle. Invariant under permutation of sides.
TriangleKind classify_triangle(std::int64_t a, std::int64_t b, std::int64_t c);

const char* triangle_kind_name(TriangleKind kind);

}  // namespace vernam
