// Copyright 2026 vernam contributors.
// Licensed under the Apache License, Version 2.0, see LICENSE for details.
// SPDX-License-Identifier: Apache-2.0

#include "infect.hpp"

#include <algorithm>
#include <utility>

#include "rng.hpp"

namespace vernam {

namespace {

using CombineOp = std::uint8_t (*)(std::uint8_t, std::uint8_t);

// Same key policy and cycling rules as xor_combine, but with the combine
// operation swapped out. This is where the combine-operator faults live.
ByteMessage combine_with(const ByteMessage& input, const KeyMaterial& key, KeyPolicy policy,
                         CombineOp op) {
    validate_key(key.length(), input.size(), policy);
    ByteMessage out(input.size());
    if (input.empty()) {
        return out;
    }
    const ByteMessage& k = key.bytes();
    for (std::size_t j = 0; j < input.size(); ++j) {
        out[j] = op(input[j], k[j % k.size()]);
    }
    return out;
}

KeyMaterial without_first_key_byte(const KeyMaterial& key) {
    const ByteMessage& b = key.bytes();
    if (b.empty()) {
        return key;
    }
    return KeyMaterial(ByteMessage(b.begin() + 1, b.end()), key.origin());
}

KeyMaterial first_half_of_key(const KeyMaterial& key) {
    const ByteMessage& b = key.bytes();
    const std::size_t half = (b.size() + 1) / 2;
    return KeyMaterial(ByteMessage(b.begin(), b.begin() + static_cast<std::ptrdiff_t>(half)),
                       key.origin());
}

}  // namespace

CipherBehavior vernam_behavior() {
    return CipherBehavior{
        "vernam",
        [](const KeyMaterial& key, const ByteMessage& msg, KeyPolicy policy) {
            return encipher(key, msg, policy);
        },
        [](const KeyMaterial& key, const ByteMessage& msg, KeyPolicy policy) {
            return decipher(key, msg, policy);
        },
    };
}

const char* mutant_name(MutantId id) {
    switch (id) {
        case MutantId::M1_DecipherOr: return "M1_DecipherOr";
        case MutantId::M2_DecipherAnd: return "M2_DecipherAnd";
        case MutantId::M3_KeyStreamOffByOne: return "M3_KeyStreamOffByOne";
        case MutantId::M4_KeyReuseHalf: return "M4_KeyReuseHalf";
        case MutantId::M5_DropLastByte: return "M5_DropLastByte";
        case MutantId::M6_EncipherOr: return "M6_EncipherOr";
    }
    return "unknown";
}

std::optional<MutantId> parse_mutant(std::string_view text) {
    for (MutantId id : kAllMutants) {
        const std::string_view full = mutant_name(id);
        if (text == full || text == full.substr(0, 2)) {
            return id;
        }
    }
    return std::nullopt;
}

CipherBehavior apply_mutant(const CipherBehavior& base, MutantId id) {
    CipherBehavior mutated = base;
    mutated.name = base.name + "+" + mutant_name(id);
    switch (id) {
        case MutantId::M1_DecipherOr:
            mutated.decipher_fn = [](const KeyMaterial& key, const ByteMessage& c,
                                     KeyPolicy policy) {
                return combine_with(c, key, policy, [](std::uint8_t x, std::uint8_t k) {
                    return static_cast<std::uint8_t>(x | k);
                });
            };
            return mutated;
        case MutantId::M2_DecipherAnd:
            mutated.decipher_fn = [](const KeyMaterial& key, const ByteMessage& c,
                                     KeyPolicy policy) {
                return combine_with(c, key, policy, [](std::uint8_t x, std::uint8_t k) {
                    return static_cast<std::uint8_t>(x & k);
                });
            };
            return mutated;
        case MutantId::M3_KeyStreamOffByOne:
            mutated.decipher_fn = [inner = base.decipher_fn](const KeyMaterial& key,
                                                             const ByteMessage& c,
                                                             KeyPolicy policy) {
                return inner(without_first_key_byte(key), c, policy);
            };
            return mutated;
        case MutantId::M4_KeyReuseHalf:
            mutated.encipher_fn = [inner = base.encipher_fn](const KeyMaterial& key,
                                                             const ByteMessage& m,
                                                             KeyPolicy policy) {
                return inner(first_half_of_key(key), m, policy);
            };
            mutated.decipher_fn = [inner = base.decipher_fn](const KeyMaterial& key,
                                                             const ByteMessage& c,
                                                             KeyPolicy policy) {
                return inner(first_half_of_key(key), c, policy);
            };
            return mutated;
        case MutantId::M5_DropLastByte:
            mutated.decipher_fn = [inner = base.decipher_fn](const KeyMaterial& key,
                                                             const ByteMessage& c,
                                                             KeyPolicy policy) {
                ByteMessage out = inner(key, c, policy);
                if (!out.empty()) {
                    out.pop_back();
                }
                return out;
            };
            return mutated;
        case MutantId::M6_EncipherOr:
            mutated.encipher_fn = [](const KeyMaterial& key, const ByteMessage& m,
                                     KeyPolicy policy) {
                return combine_with(m, key, policy, [](std::uint8_t x, std::uint8_t k) {
                    return static_cast<std::uint8_t>(x | k);
                });
            };
            return mutated;
    }
    throw UnknownMutantError(std::to_string(static_cast<int>(id)));
}

RoundTripOutcome roundtrip_holds(const CipherBehavior& behavior, const ByteMessage& msg,
                                 const KeyMaterial& key) {
    if (key.length() < msg.size()) {
        throw KeyTooShortError(key.length(), msg.size());
    }

    ByteMessage out;
    try {
        const ByteMessage ciphertext = behavior.encipher_fn(key, msg, KeyPolicy::Strict);
        out = behavior.decipher_fn(key, ciphertext, KeyPolicy::Strict);
    } catch (const VernamError&) {
        // The pair was admissible, so an error is itself a deviation
        // from the specification.
        return RoundTripOutcome{false, 0};
    }

    const std::size_t common = std::min(out.size(), msg.size());
    for (std::size_t j = 0; j < common; ++j) {
        if (out[j] != msg[j]) {
            return RoundTripOutcome{false, j};
        }
    }
    if (out.size() != msg.size()) {
        return RoundTripOutcome{false, common};
    }
    return RoundTripOutcome{true, 0};
}

Corpus generate_corpus(std::uint64_t seed, std::uint64_t pair_count, std::uint64_t max_len) {
    if (pair_count == 0) {
        throw InvalidArgumentError("corpus pair count must be at least 1");
    }
    constexpr std::uint64_t kMaxLenLimit = 0xFFFFFFFFULL;
    if (max_len > kMaxLenLimit) {
        throw InvalidArgumentError("corpus max_len must be at most 2^32 - 1");
    }

    Corpus corpus;
    corpus.seed = seed;
    corpus.pairs.reserve(static_cast<std::size_t>(pair_count) + 2);
    corpus.pairs.push_back(CorpusPair{ByteMessage(16, 0x00), KeyMaterial(ByteMessage(17, 0xFF))});
    corpus.pairs.push_back(CorpusPair{ByteMessage(16, 0xFF), KeyMaterial(ByteMessage(17, 0x55))});

    Xoshiro256ss rng(seed);
    for (std::uint64_t i = 0; i < pair_count; ++i) {
        const std::uint64_t msg_len = rng.next() % (max_len + 1);
        const std::uint64_t key_len = msg_len + 1 + rng.next() % 8;
        ByteMessage msg = rng.bytes(static_cast<std::size_t>(msg_len));
        ByteMessage key = rng.bytes(static_cast<std::size_t>(key_len));
        corpus.pairs.push_back(CorpusPair{std::move(msg), KeyMaterial(std::move(key), KeyOrigin::Generated)});
    }
    return corpus;
}

bool KillMatrix::all_killed() const {
    return std::all_of(entries.begin(), entries.end(),
                       [](const KillEntry& e) { return e.killed; });
}

KillMatrix run_kill_matrix(const CipherBehavior& base, std::vector<MutantId> mutants,
                           const Corpus& corpus) {
    if (corpus.pairs.empty()) {
        throw InvalidArgumentError("corpus must not be empty");
    }

    // Gate: the real cipher must hold over the whole corpus before any
    // mutant is judged.
    for (const CorpusPair& pair : corpus.pairs) {
        const RoundTripOutcome outcome = roundtrip_holds(base, pair.msg, pair.key);
        if (!outcome.pass) {
            throw BrokenBaselineError(pair.msg, pair.key.bytes(), outcome.first_diff_offset);
        }
    }

    // Entries are assembled in id order whatever the requested order.
    std::sort(mutants.begin(), mutants.end());
    mutants.erase(std::unique(mutants.begin(), mutants.end()), mutants.end());

    KillMatrix matrix;
    matrix.corpus_seed = corpus.seed;
    matrix.corpus_size = corpus.pairs.size();
    for (MutantId id : mutants) {
        const CipherBehavior mutated = apply_mutant(base, id);
        KillEntry entry{id, false, std::nullopt};
        for (const CorpusPair& pair : corpus.pairs) {
            const RoundTripOutcome outcome = roundtrip_holds(mutated, pair.msg, pair.key);
            if (!outcome.pass) {
                entry.killed = true;
                entry.witness = KillWitness{pair.msg, pair.key, outcome.first_diff_offset};
                break;
            }
        }
        matrix.entries.push_back(std::move(entry));
    }
    return matrix;
}

std::string format_report(const KillMatrix& matrix) {
    std::string text = "BASELINE OK corpus_seed=" + std::to_string(matrix.corpus_seed) +
                       " corpus_size=" + std::to_string(matrix.corpus_size) + "\n";
    for (const KillEntry& entry : matrix.entries) {
        text += "MUTANT ";
        text += mutant_name(entry.mutant);
        if (entry.killed) {
            text += " KILLED witness msg_len=" + std::to_string(entry.witness->msg.size()) +
                    " key_len=" + std::to_string(entry.witness->key.length()) +
                    " offset=" + std::to_string(entry.witness->first_diff_offset);
        } else {
            text += " SURVIVED";
        }
        text += "\n";
    }
    return text;
}

TriangleKind classify_triangle(std::int64_t a, std::int64_t b, std::int64_t c) {
    if (a <= 0 || b <= 0 || c <= 0) {
        return TriangleKind::NotATriangle;
    }
    // Sides are positive, so the sums below fit in an unsigned 64-bit.
    const auto ua = static_cast<std::uint64_t>(a);
    const auto ub = static_cast<std::uint64_t>(b);
    const auto uc = static_cast<std::uint64_t>(c);
    if (ua + ub <= uc || ua + uc <= ub || ub + uc <= ua) {
        return TriangleKind::NotATriangle;
    }
    if (a == b && b == c) {
        return TriangleKind::Equilateral;
    }
    if (a == b || b == c || a == c) {
        return TriangleKind::Isosceles;
    }
    return TriangleKind::Scalene;
}

const char* triangle_kind_name(TriangleKind kind) {
    switch (kind) {
        case TriangleKind::Equilateral: return "Equilateral";
        case TriangleKind::Isosceles: return "Isosceles";
        case TriangleKind::Scalene: return "Scalene";
        case TriangleKind::NotATriangle: return "NotATriangle";
    }
    return "unknown";
}

}  // namespace vernam
