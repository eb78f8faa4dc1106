// Copyright 2026 vernam contributors.
// Licensed under the Apache License, Version 2.0, see LICENSE for details.
// SPDX-License-Identifier: Apache-2.0
//
// extern-C surface over the C++ core. Exceptions stop here: every entry
// point maps them to a vn_status and a thread-local detail message.

#include <vernam/vernam.h>

#include <cstdlib>
#include <cstring>
#include <exception>
#include <filesystem>
#include <fstream>
#include <string>
#include <utility>
#include <vector>

#include "core.hpp"
#include "infect.hpp"
#include "keygen.hpp"
#include "stream_io.hpp"

struct vn_key {
    vernam::KeyMaterial material;
};

struct vn_behavior {
    vernam::CipherBehavior behavior;
};

struct vn_corpus {
    vernam::Corpus corpus;
};

struct vn_kill_matrix {
    vernam::KillMatrix matrix;
};

namespace {

thread_local std::string tl_last_error;

void set_last_error(std::string message) {
    tl_last_error = std::move(message);
}

vn_status map_code(vernam::ErrorCode code) {
    switch (code) {
        case vernam::ErrorCode::KeyTooShort: return VN_ERR_KEY_TOO_SHORT;
        case vernam::ErrorCode::EmptyKey: return VN_ERR_EMPTY_KEY;
        case vernam::ErrorCode::MissingFile: return VN_ERR_MISSING_FILE;
        case vernam::ErrorCode::IoFailure: return VN_ERR_IO;
        case vernam::ErrorCode::InvalidArgument: return VN_ERR_INVALID_ARGUMENT;
        case vernam::ErrorCode::EntropyUnavailable: return VN_ERR_ENTROPY_UNAVAILABLE;
        case vernam::ErrorCode::UnknownMutant: return VN_ERR_UNKNOWN_MUTANT;
        case vernam::ErrorCode::BrokenBaseline: return VN_ERR_BROKEN_BASELINE;
    }
    return VN_ERR_INTERNAL;
}

template <typename Fn>
vn_status guarded(Fn&& fn) {
    try {
        return fn();
    } catch (const vernam::VernamError& e) {
        set_last_error(e.what());
        return map_code(e.code());
    } catch (const std::exception& e) {
        set_last_error(e.what());
        return VN_ERR_INTERNAL;
    } catch (...) {
        set_last_error("unknown failure");
        return VN_ERR_INTERNAL;
    }
}

vn_status null_pointer(const char* name) {
    set_last_error(std::string("null pointer: ") + name);
    return VN_ERR_NULL_POINTER;
}

vernam::KeyPolicy to_policy(vn_policy policy) {
    return policy == VN_POLICY_RELAXED_REPEAT ? vernam::KeyPolicy::RelaxedRepeat
                                              : vernam::KeyPolicy::Strict;
}

vn_key_origin from_origin(vernam::KeyOrigin origin) {
    switch (origin) {
        case vernam::KeyOrigin::File: return VN_KEY_ORIGIN_FILE;
        case vernam::KeyOrigin::Generated: return VN_KEY_ORIGIN_GENERATED;
        case vernam::KeyOrigin::Literal: return VN_KEY_ORIGIN_LITERAL;
    }
    return VN_KEY_ORIGIN_LITERAL;
}

vernam::MutantId to_mutant(vn_mutant_id id) {
    if (id < VN_MUTANT_M1_DECIPHER_OR || id > VN_MUTANT_M6_ENCIPHER_OR) {
        throw vernam::UnknownMutantError(std::to_string(static_cast<int>(id)));
    }
    return static_cast<vernam::MutantId>(id);
}

vn_status run_one_direction(const vn_behavior* behavior, const vn_key* key, const uint8_t* input,
                            size_t input_len, vn_policy policy, uint8_t* output, size_t* out_len,
                            bool encipher_direction) {
    if (!behavior) return null_pointer("behavior");
    if (!key) return null_pointer("key");
    if (!input && input_len > 0) return null_pointer("input");
    if (!output && input_len > 0) return null_pointer("output");
    if (!out_len) return null_pointer("out_len");
    return guarded([&]() {
        const vernam::ByteMessage in(input, input + input_len);
        const auto& fn = encipher_direction ? behavior->behavior.encipher_fn
                                            : behavior->behavior.decipher_fn;
        const vernam::ByteMessage out = fn(key->material, in, to_policy(policy));
        if (!out.empty()) {
            std::memcpy(output, out.data(), out.size());
        }
        *out_len = out.size();
        return VN_OK;
    });
}

}  // namespace

extern "C" {

const char* vn_version(void) {
    return VN_VERSION_STRING;
}

const char* vn_status_name(vn_status status) {
    switch (status) {
        case VN_OK: return "VN_OK";
        case VN_ERR_KEY_TOO_SHORT: return "VN_ERR_KEY_TOO_SHORT";
        case VN_ERR_EMPTY_KEY: return "VN_ERR_EMPTY_KEY";
        case VN_ERR_MISSING_FILE: return "VN_ERR_MISSING_FILE";
        case VN_ERR_IO: return "VN_ERR_IO";
        case VN_ERR_INVALID_ARGUMENT: return "VN_ERR_INVALID_ARGUMENT";
        case VN_ERR_ENTROPY_UNAVAILABLE: return "VN_ERR_ENTROPY_UNAVAILABLE";
        case VN_ERR_UNKNOWN_MUTANT: return "VN_ERR_UNKNOWN_MUTANT";
        case VN_ERR_BROKEN_BASELINE: return "VN_ERR_BROKEN_BASELINE";
        case VN_ERR_NULL_POINTER: return "VN_ERR_NULL_POINTER";
        case VN_ERR_INTERNAL: return "VN_ERR_INTERNAL";
    }
    return "unknown";
}

const char* vn_last_error(void) {
    return tl_last_error.c_str();
}

void vn_clear_last_error(void) {
    tl_last_error.clear();
}

void vn_string_free(char* text) {
    std::free(text);
}

vn_status vn_key_from_bytes(const uint8_t* bytes, size_t length, vn_key** out_key) {
    if (!bytes && length > 0) return null_pointer("bytes");
    if (!out_key) return null_pointer("out_key");
    return guarded([&]() {
        vernam::ByteMessage copy(bytes, bytes + length);
        *out_key = new vn_key{vernam::KeyMaterial(std::move(copy), vernam::KeyOrigin::Literal)};
        return VN_OK;
    });
}

vn_status vn_key_from_file(const char* path, vn_key** out_key) {
    if (!path) return null_pointer("path");
    if (!out_key) return null_pointer("out_key");
    return guarded([&]() {
        // Any byte source is a valid key file; quality is keygen's concern.
        namespace fs = std::filesystem;
        std::error_code ec;
        if (!fs::exists(path, ec) || ec) {
            throw vernam::MissingFileError(path);
        }
        if (!fs::is_regular_file(path, ec) || ec) {
            throw vernam::IoFailureError(path, "not a regular file");
        }
        const auto size = fs::file_size(path, ec);
        if (ec) {
            throw vernam::IoFailureError(path, ec.message());
        }
        std::ifstream in(path, std::ios::binary);
        if (!in) {
            throw vernam::IoFailureError(path, "cannot open for reading");
        }
        std::vector<std::uint8_t> bytes(static_cast<std::size_t>(size));
        in.read(reinterpret_cast<char*>(bytes.data()), static_cast<std::streamsize>(size));
        if (static_cast<std::uint64_t>(in.gcount()) != size) {
            throw vernam::IoFailureError(path, "short read");
        }
        *out_key = new vn_key{vernam::KeyMaterial(std::move(bytes), vernam::KeyOrigin::File)};
        return VN_OK;
    });
}

vn_status vn_key_generate_seeded(uint64_t length, uint64_t seed, vn_key** out_key) {
    if (!out_key) return null_pointer("out_key");
    return guarded([&]() {
        *out_key = new vn_key{vernam::generate_key(vernam::KeySpec::seeded(length, seed))};
        return VN_OK;
    });
}

vn_status vn_key_generate_system(uint64_t length, vn_key** out_key) {
    if (!out_key) return null_pointer("out_key");
    return guarded([&]() {
        *out_key = new vn_key{vernam::generate_key(vernam::KeySpec::system(length))};
        return VN_OK;
    });
}

vn_status vn_key_write_file(const vn_key* key, const char* path) {
    if (!key) return null_pointer("key");
    if (!path) return null_pointer("path");
    return guarded([&]() {
        std::ofstream out(path, std::ios::binary | std::ios::trunc);
        if (!out) {
            throw vernam::IoFailureError(path, "cannot open for writing");
        }
        const auto& bytes = key->material.bytes();
        out.write(reinterpret_cast<const char*>(bytes.data()),
                  static_cast<std::streamsize>(bytes.size()));
        out.flush();
        if (!out) {
            throw vernam::IoFailureError(path, "write failed");
        }
        return VN_OK;
    });
}

size_t vn_key_length(const vn_key* key) {
    return key ? key->material.length() : 0;
}

const uint8_t* vn_key_bytes(const vn_key* key) {
    return key ? key->material.bytes().data() : nullptr;
}

vn_key_origin vn_key_get_origin(const vn_key* key) {
    return key ? from_origin(key->material.origin()) : VN_KEY_ORIGIN_LITERAL;
}

vn_status vn_key_monobit_fraction(const vn_key* key, double* out_fraction) {
    if (!key) return null_pointer("key");
    if (!out_fraction) return null_pointer("out_fraction");
    return guarded([&]() {
        *out_fraction = vernam::monobit_fraction(key->material);
        return VN_OK;
    });
}

void vn_key_free(vn_key* key) {
    delete key;
}

vn_status vn_validate_key(uint64_t key_len, uint64_t msg_len, vn_policy policy) {
    return guarded([&]() {
        vernam::validate_key(key_len, msg_len, to_policy(policy));
        return VN_OK;
    });
}

vn_status vn_xor_combine(const uint8_t* input, size_t input_len, const vn_key* key,
                         vn_policy policy, uint8_t* output) {
    if (!input && input_len > 0) return null_pointer("input");
    if (!key) return null_pointer("key");
    if (!output && input_len > 0) return null_pointer("output");
    return guarded([&]() {
        const vernam::ByteMessage in(input, input + input_len);
        const vernam::ByteMessage out = vernam::xor_combine(in, key->material, to_policy(policy));
        if (!out.empty()) {
            std::memcpy(output, out.data(), out.size());
        }
        return VN_OK;
    });
}

vn_status vn_encipher(const vn_key* key, const uint8_t* plaintext, size_t length,
                      vn_policy policy, uint8_t* ciphertext) {
    return vn_xor_combine(plaintext, length, key, policy, ciphertext);
}

vn_status vn_decipher(const vn_key* key, const uint8_t* ciphertext, size_t length,
                      vn_policy policy, uint8_t* plaintext) {
    return vn_xor_combine(ciphertext, length, key, policy, plaintext);
}

vn_status vn_encipher_file(const char* in_path, const char* key_path, const char* out_path,
                           vn_policy policy, uint64_t* out_bytes_processed) {
    if (!in_path) return null_pointer("in_path");
    if (!key_path) return null_pointer("key_path");
    if (!out_path) return null_pointer("out_path");
    return guarded([&]() {
        const std::uint64_t n =
            vernam::encipher_file(vernam::FileJob{in_path, out_path, key_path, to_policy(policy)});
        if (out_bytes_processed) {
            *out_bytes_processed = n;
        }
        return VN_OK;
    });
}

vn_status vn_decipher_file(const char* in_path, const char* key_path, const char* out_path,
                           vn_policy policy, uint64_t* out_bytes_processed) {
    if (!in_path) return null_pointer("in_path");
    if (!key_path) return null_pointer("key_path");
    if (!out_path) return null_pointer("out_path");
    return guarded([&]() {
        const std::uint64_t n =
            vernam::decipher_file(vernam::FileJob{in_path, out_path, key_path, to_policy(policy)});
        if (out_bytes_processed) {
            *out_bytes_processed = n;
        }
        return VN_OK;
    });
}

vn_status vn_files_equal(const char* a_path, const char* b_path, vn_equality_verdict* out_verdict) {
    if (!a_path) return null_pointer("a_path");
    if (!b_path) return null_pointer("b_path");
    if (!out_verdict) return null_pointer("out_verdict");
    return guarded([&]() {
        const vernam::EqualityVerdict verdict = vernam::files_equal(a_path, b_path);
        out_verdict->equal = verdict.equal ? 1 : 0;
        if (verdict.equal) {
            out_verdict->mismatch_kind = VN_MISMATCH_NONE;
            out_verdict->offset = 0;
            out_verdict->left_len = 0;
            out_verdict->right_len = 0;
        } else {
            const auto& mismatch = *verdict.mismatch;
            out_verdict->mismatch_kind = mismatch.kind == vernam::MismatchKind::Length
                                             ? VN_MISMATCH_LENGTH
                                             : VN_MISMATCH_BYTE;
            out_verdict->offset = mismatch.offset;
            out_verdict->left_len = mismatch.left_len;
            out_verdict->right_len = mismatch.right_len;
        }
        return VN_OK;
    });
}

vn_status vn_clean_outputs(const char* const* paths, size_t count) {
    if (!paths && count > 0) return null_pointer("paths");
    return guarded([&]() {
        std::vector<std::filesystem::path> list;
        list.reserve(count);
        for (size_t i = 0; i < count; ++i) {
            if (!paths[i]) {
                throw vernam::InvalidArgumentError("null path in clean list");
            }
            list.emplace_back(paths[i]);
        }
        vernam::clean_outputs(list);
        return VN_OK;
    });
}

vn_status vn_behavior_vernam(vn_behavior** out_behavior) {
    if (!out_behavior) return null_pointer("out_behavior");
    return guarded([&]() {
        *out_behavior = new vn_behavior{vernam::vernam_behavior()};
        return VN_OK;
    });
}

vn_status vn_behavior_with_mutant(const vn_behavior* base, vn_mutant_id mutant,
                                  vn_behavior** out_behavior) {
    if (!base) return null_pointer("base");
    if (!out_behavior) return null_pointer("out_behavior");
    return guarded([&]() {
        *out_behavior = new vn_behavior{vernam::apply_mutant(base->behavior, to_mutant(mutant))};
        return VN_OK;
    });
}

vn_status vn_behavior_encipher(const vn_behavior* behavior, const vn_key* key,
                               const uint8_t* input, size_t input_len, vn_policy policy,
                               uint8_t* output, size_t* out_len) {
    return run_one_direction(behavior, key, input, input_len, policy, output, out_len, true);
}

vn_status vn_behavior_decipher(const vn_behavior* behavior, const vn_key* key,
                               const uint8_t* input, size_t input_len, vn_policy policy,
                               uint8_t* output, size_t* out_len) {
    return run_one_direction(behavior, key, input, input_len, policy, output, out_len, false);
}

void vn_behavior_free(vn_behavior* behavior) {
    delete behavior;
}

const char* vn_mutant_name(vn_mutant_id mutant) {
    if (mutant < VN_MUTANT_M1_DECIPHER_OR || mutant > VN_MUTANT_M6_ENCIPHER_OR) {
        return "unknown";
    }
    return vernam::mutant_name(static_cast<vernam::MutantId>(mutant));
}

vn_status vn_mutant_parse(const char* text, vn_mutant_id* out_mutant) {
    if (!text) return null_pointer("text");
    if (!out_mutant) return null_pointer("out_mutant");
    const auto id = vernam::parse_mutant(text);
    if (!id) {
        set_last_error(std::string("unknown mutant: ") + text);
        return VN_ERR_UNKNOWN_MUTANT;
    }
    *out_mutant = static_cast<vn_mutant_id>(*id);
    return VN_OK;
}

vn_status vn_roundtrip_holds(const vn_behavior* behavior, const uint8_t* msg, size_t msg_len,
                             const vn_key* key, int* out_pass, uint64_t* out_first_diff_offset) {
    if (!behavior) return null_pointer("behavior");
    if (!msg && msg_len > 0) return null_pointer("msg");
    if (!key) return null_pointer("key");
    if (!out_pass) return null_pointer("out_pass");
    return guarded([&]() {
        const vernam::ByteMessage message(msg, msg + msg_len);
        const vernam::RoundTripOutcome outcome =
            vernam::roundtrip_holds(behavior->behavior, message, key->material);
        *out_pass = outcome.pass ? 1 : 0;
        if (out_first_diff_offset) {
            *out_first_diff_offset = outcome.first_diff_offset;
        }
        return VN_OK;
    });
}

vn_status vn_corpus_generate(uint64_t seed, uint64_t pair_count, uint64_t max_len,
                             vn_corpus** out_corpus) {
    if (!out_corpus) return null_pointer("out_corpus");
    return guarded([&]() {
        *out_corpus = new vn_corpus{vernam::generate_corpus(seed, pair_count, max_len)};
        return VN_OK;
    });
}

size_t vn_corpus_size(const vn_corpus* corpus) {
    return corpus ? corpus->corpus.pairs.size() : 0;
}

uint64_t vn_corpus_seed(const vn_corpus* corpus) {
    return corpus ? corpus->corpus.seed : 0;
}

vn_status vn_corpus_pair(const vn_corpus* corpus, size_t index, const uint8_t** out_msg,
                         size_t* out_msg_len, const uint8_t** out_key, size_t* out_key_len) {
    if (!corpus) return null_pointer("corpus");
    if (!out_msg || !out_msg_len || !out_key || !out_key_len) {
        return null_pointer("out parameter");
    }
    if (index >= corpus->corpus.pairs.size()) {
        set_last_error("corpus index out of range: " + std::to_string(index));
        return VN_ERR_INVALID_ARGUMENT;
    }
    const vernam::CorpusPair& pair = corpus->corpus.pairs[index];
    *out_msg = pair.msg.data();
    *out_msg_len = pair.msg.size();
    *out_key = pair.key.bytes().data();
    *out_key_len = pair.key.length();
    return VN_OK;
}

void vn_corpus_free(vn_corpus* corpus) {
    delete corpus;
}

vn_status vn_run_kill_matrix(const vn_behavior* base, const vn_mutant_id* mutants,
                             size_t mutant_count, const vn_corpus* corpus,
                             vn_kill_matrix** out_matrix) {
    if (!base) return null_pointer("base");
    if (!mutants && mutant_count > 0) return null_pointer("mutants");
    if (!corpus) return null_pointer("corpus");
    if (!out_matrix) return null_pointer("out_matrix");
    return guarded([&]() {
        std::vector<vernam::MutantId> ids;
        ids.reserve(mutant_count);
        for (size_t i = 0; i < mutant_count; ++i) {
            ids.push_back(to_mutant(mutants[i]));
        }
        *out_matrix = new vn_kill_matrix{
            vernam::run_kill_matrix(base->behavior, std::move(ids), corpus->corpus)};
        return VN_OK;
    });
}

size_t vn_kill_matrix_size(const vn_kill_matrix* matrix) {
    return matrix ? matrix->matrix.entries.size() : 0;
}

uint64_t vn_kill_matrix_corpus_seed(const vn_kill_matrix* matrix) {
    return matrix ? matrix->matrix.corpus_seed : 0;
}

uint64_t vn_kill_matrix_corpus_size(const vn_kill_matrix* matrix) {
    return matrix ? matrix->matrix.corpus_size : 0;
}

int vn_kill_matrix_all_killed(const vn_kill_matrix* matrix) {
    return matrix && matrix->matrix.all_killed() ? 1 : 0;
}

vn_status vn_kill_matrix_entry(const vn_kill_matrix* matrix, size_t index,
                               vn_kill_entry* out_entry) {
    if (!matrix) return null_pointer("matrix");
    if (!out_entry) return null_pointer("out_entry");
    if (index >= matrix->matrix.entries.size()) {
        set_last_error("kill matrix index out of range: " + std::to_string(index));
        return VN_ERR_INVALID_ARGUMENT;
    }
    const vernam::KillEntry& entry = matrix->matrix.entries[index];
    out_entry->mutant = static_cast<vn_mutant_id>(entry.mutant);
    out_entry->killed = entry.killed ? 1 : 0;
    if (entry.killed) {
        out_entry->witness_msg_len = entry.witness->msg.size();
        out_entry->witness_key_len = entry.witness->key.length();
        out_entry->witness_offset = entry.witness->first_diff_offset;
    } else {
        out_entry->witness_msg_len = 0;
        out_entry->witness_key_len = 0;
        out_entry->witness_offset = 0;
    }
    return VN_OK;
}

vn_status vn_kill_matrix_format(const vn_kill_matrix* matrix, char** out_text) {
    if (!matrix) return null_pointer("matrix");
    if (!out_text) return null_pointer("out_text");
    return guarded([&]() {
        const std::string report = vernam::format_report(matrix->matrix);
        char* buffer = static_cast<char*>(std::malloc(report.size() + 1));
        if (!buffer) {
            throw std::bad_alloc();
        }
        std::memcpy(buffer, report.c_str(), report.size() + 1);
        *out_text = buffer;
        return VN_OK;
    });
}

void vn_kill_matrix_free(vn_kill_matrix* matrix) {
    delete matrix;
}

vn_triangle_kind vn_classify_triangle(int64_t a, int64_t b, int64_t c) {
    return static_cast<vn_triangle_kind>(vernam::classify_triangle(a, b, c));
}

const char* vn_triangle_kind_name(vn_triangle_kind kind) {
    switch (kind) {
        case VN_TRIANGLE_EQUILATERAL: return "Equilateral";
        case VN_TRIANGLE_ISOSCELES: return "Isosceles";
        case VN_TRIANGLE_SCALENE: return "Scalene";
        case VN_TRIANGLE_NOT_A_TRIANGLE: return "NotATriangle";
    }
    return "unknown";
}

}  // extern "C"
