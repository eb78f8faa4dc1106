/* Copyright 2026 vernam contributors.
 * Licensed under the Apache License, Version 2.0, see LICENSE for details.
 * SPDX-License-Identifier: Apache-2.0
 *
 * C API for the vernam library: a byte-stream XOR cipher with a strict
 * one-time-pad key policy, a three-file encipher/decipher protocol, key
 * generation, and a built-in fault-injection self test.
 *
 * Conventions:
 *   - Every fallible function returns vn_status; VN_OK is 0.
 *   - vn_last_error() returns a thread-local detail message for the most
 *     recent failing call on this thread.
 *   - Handles (vn_key, vn_behavior, vn_corpus, vn_kill_matrix) are opaque
 *     and released with their matching *_free function. Pointers returned
 *     by accessors stay valid while the owning handle lives.
 *   - Byte buffers for the in-memory cipher calls are caller-allocated;
 *     a capacity of input_len always suffices (no transform lengthens).
 */

#ifndef VERNAM_VERNAM_H
#define VERNAM_VERNAM_H

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#if defined(VERNAM_BUILD_SHARED)
#define VN_API __declspec(dllexport)
#else
#define VN_API __declspec(dllimport)
#endif
#else
#define VN_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

#define VN_VERSION_STRING "0.1.0"

typedef enum vn_status {
    VN_OK = 0,
    VN_ERR_KEY_TOO_SHORT = 1,
    VN_ERR_EMPTY_KEY = 2,
    VN_ERR_MISSING_FILE = 3,
    VN_ERR_IO = 4,
    VN_ERR_INVALID_ARGUMENT = 5,
    VN_ERR_ENTROPY_UNAVAILABLE = 6,
    VN_ERR_UNKNOWN_MUTANT = 7,
    VN_ERR_BROKEN_BASELINE = 8,
    VN_ERR_NULL_POINTER = 9,
    VN_ERR_INTERNAL = 10
} vn_status;

typedef enum vn_policy {
    /* Reject any key shorter than the message. */
    VN_POLICY_STRICT = 0,
    /* Cycle the key over the message. Breaks the one-time pad; the key
     * must be nonempty. */
    VN_POLICY_RELAXED_REPEAT = 1
} vn_policy;

typedef enum vn_key_origin {
    VN_KEY_ORIGIN_FILE = 0,
    VN_KEY_ORIGIN_GENERATED = 1,
    VN_KEY_ORIGIN_LITERAL = 2
} vn_key_origin;

typedef enum vn_mutant_id {
    VN_MUTANT_M1_DECIPHER_OR = 1,
    VN_MUTANT_M2_DECIPHER_AND = 2,
    VN_MUTANT_M3_KEY_STREAM_OFF_BY_ONE = 3,
    VN_MUTANT_M4_KEY_REUSE_HALF = 4,
    VN_MUTANT_M5_DROP_LAST_BYTE = 5,
    VN_MUTANT_M6_ENCIPHER_OR = 6
} vn_mutant_id;

#define VN_MUTANT_COUNT 6

typedef enum vn_triangle_kind {
    VN_TRIANGLE_EQUILATERAL = 0,
    VN_TRIANGLE_ISOSCELES = 1,
    VN_TRIANGLE_SCALENE = 2,
    VN_TRIANGLE_NOT_A_TRIANGLE = 3
} vn_triangle_kind;

typedef enum vn_mismatch_kind {
    VN_MISMATCH_NONE = 0,
    VN_MISMATCH_LENGTH = 1,
    VN_MISMATCH_BYTE = 2
} vn_mismatch_kind;

/* Result of a byte-wise file comparison. mismatch_kind is VN_MISMATCH_NONE
 * exactly when equal is nonzero. For VN_MISMATCH_BYTE, offset is the
 * smallest differing index; for VN_MISMATCH_LENGTH it is the length of the
 * shorter file. */
typedef struct vn_equality_verdict {
    int equal;
    vn_mismatch_kind mismatch_kind;
    uint64_t offset;
    uint64_t left_len;
    uint64_t right_len;
} vn_equality_verdict;

/* One kill-matrix row. The witness_* fields are valid only when killed is
 * nonzero. */
typedef struct vn_kill_entry {
    vn_mutant_id mutant;
    int killed;
    uint64_t witness_msg_len;
    uint64_t witness_key_len;
    uint64_t witness_offset;
} vn_kill_entry;

typedef struct vn_key vn_key;
typedef struct vn_behavior vn_behavior;
typedef struct vn_corpus vn_corpus;
typedef struct vn_kill_matrix vn_kill_matrix;

/* ---- library ---- */

VN_API const char* vn_version(void);
VN_API const char* vn_status_name(vn_status status);

/* Thread-local detail message for the most recent failing call; empty
 * string when nothing failed yet on this thread. */
VN_API const char* vn_last_error(void);
VN_API void vn_clear_last_error(void);

/* Frees strings returned by vn_kill_matrix_format. */
VN_API void vn_string_free(char* text);

/* ---- key material ---- */

VN_API vn_status vn_key_from_bytes(const uint8_t* bytes, size_t length, vn_key** out_key);
VN_API vn_status vn_key_from_file(const char* path, vn_key** out_key);

/* Deterministic generator: xoshiro256** seeded from splitmix64, bytes in
 * little-endian 64-bit blocks. Byte-exact for a given (seed, length)
 * across runs and platforms. length must be at least 1. */
VN_API vn_status vn_key_generate_seeded(uint64_t length, uint64_t seed, vn_key** out_key);

/* OS entropy. Fails with VN_ERR_ENTROPY_UNAVAILABLE when the source
 * cannot be read. */
VN_API vn_status vn_key_generate_system(uint64_t length, vn_key** out_key);

/* Raw octets, no framing; the file is directly usable as a key file. */
VN_API vn_status vn_key_write_file(const vn_key* key, const char* path);

VN_API size_t vn_key_length(const vn_key* key);
VN_API const uint8_t* vn_key_bytes(const vn_key* key);
VN_API vn_key_origin vn_key_get_origin(const vn_key* key);

/* Fraction of 1-bits over all bits of the key, in [0, 1]. Fails with
 * VN_ERR_EMPTY_KEY on an empty key. */
VN_API vn_status vn_key_monobit_fraction(const vn_key* key, double* out_fraction);

VN_API void vn_key_free(vn_key* key);

/* ---- cipher core ---- */

/* VN_OK iff the policy admits the pair of lengths: STRICT requires
 * key_len >= msg_len; RELAXED_REPEAT requires key_len >= 1. The error
 * message names both lengths. */
VN_API vn_status vn_validate_key(uint64_t key_len, uint64_t msg_len, vn_policy policy);

/* output[j] = input[j] ^ key[j mod key_len]; output has input_len bytes. */
VN_API vn_status vn_xor_combine(const uint8_t* input, size_t input_len, const vn_key* key,
                                vn_policy policy, uint8_t* output);

VN_API vn_status vn_encipher(const vn_key* key, const uint8_t* plaintext, size_t length,
                             vn_policy policy, uint8_t* ciphertext);

VN_API vn_status vn_decipher(const vn_key* key, const uint8_t* ciphertext, size_t length,
                             vn_policy policy, uint8_t* plaintext);

/* ---- file protocol ---- */

/* Reads in_path and key_path, writes the XOR stream to out_path. out_path
 * must differ from both input paths; it is replaced atomically on success
 * and left untouched on error. out_bytes_processed (optional) receives
 * the input length. */
VN_API vn_status vn_encipher_file(const char* in_path, const char* key_path, const char* out_path,
                                  vn_policy policy, uint64_t* out_bytes_processed);

VN_API vn_status vn_decipher_file(const char* in_path, const char* key_path, const char* out_path,
                                  vn_policy policy, uint64_t* out_bytes_processed);

VN_API vn_status vn_files_equal(const char* a_path, const char* b_path,
                                vn_equality_verdict* out_verdict);

/* Removes each listed regular file; paths that do not exist are skipped.
 * A directory is refused with VN_ERR_IO. */
VN_API vn_status vn_clean_outputs(const char* const* paths, size_t count);

/* ---- fault-injection harness ---- */

VN_API vn_status vn_behavior_vernam(vn_behavior** out_behavior);

/* Wraps base with one documented fault; base stays usable. */
VN_API vn_status vn_behavior_with_mutant(const vn_behavior* base, vn_mutant_id mutant,
                                         vn_behavior** out_behavior);

/* Runs the behavior's encipher (resp. decipher) direction. output needs
 * capacity input_len; *out_len receives the actual length (a fault may
 * shorten the output, never lengthen it). */
VN_API vn_status vn_behavior_encipher(const vn_behavior* behavior, const vn_key* key,
                                      const uint8_t* input, size_t input_len, vn_policy policy,
                                      uint8_t* output, size_t* out_len);

VN_API vn_status vn_behavior_decipher(const vn_behavior* behavior, const vn_key* key,
                                      const uint8_t* input, size_t input_len, vn_policy policy,
                                      uint8_t* output, size_t* out_len);

VN_API void vn_behavior_free(vn_behavior* behavior);

VN_API const char* vn_mutant_name(vn_mutant_id mutant);

/* Accepts "M1".."M6" or the full catalog name ("M1_DecipherOr", ...). */
VN_API vn_status vn_mutant_parse(const char* text, vn_mutant_id* out_mutant);

/* Checks decipher(k, encipher(k, msg)) == msg for the behavior. Requires
 * key length >= msg_len (VN_ERR_KEY_TOO_SHORT otherwise). On a failed
 * round trip *out_pass is 0 and *out_first_diff_offset holds the smallest
 * differing index (length of the shorter sequence on a length mismatch,
 * 0 when the behavior errored on the admissible pair). */
VN_API vn_status vn_roundtrip_holds(const vn_behavior* behavior, const uint8_t* msg,
                                    size_t msg_len, const vn_key* key, int* out_pass,
                                    uint64_t* out_first_diff_offset);

/* Deterministic corpus of (message, key) pairs; every key is at least one
 * byte longer than its message. Two fixed adversarial vectors are always
 * prepended, so the total size is pair_count + 2. */
VN_API vn_status vn_corpus_generate(uint64_t seed, uint64_t pair_count, uint64_t max_len,
                                    vn_corpus** out_corpus);

VN_API size_t vn_corpus_size(const vn_corpus* corpus);
VN_API uint64_t vn_corpus_seed(const vn_corpus* corpus);

VN_API vn_status vn_corpus_pair(const vn_corpus* corpus, size_t index, const uint8_t** out_msg,
                                size_t* out_msg_len, const uint8_t** out_key,
                                size_t* out_key_len);

VN_API void vn_corpus_free(vn_corpus* corpus);

/* Verifies the pristine base over the whole corpus (VN_ERR_BROKEN_BASELINE
 * if it fails anywhere), then records a Killed/Survived verdict per
 * requested mutant. Entries are deduplicated and ordered by mutant id. */
VN_API vn_status vn_run_kill_matrix(const vn_behavior* base, const vn_mutant_id* mutants,
                                    size_t mutant_count, const vn_corpus* corpus,
                                    vn_kill_matrix** out_matrix);

VN_API size_t vn_kill_matrix_size(const vn_kill_matrix* matrix);
VN_API uint64_t vn_kill_matrix_corpus_seed(const vn_kill_matrix* matrix);
VN_API uint64_t vn_kill_matrix_corpus_size(const vn_kill_matrix* matrix);
VN_API int vn_kill_matrix_all_killed(const vn_kill_matrix* matrix);
VN_API vn_status vn_kill_matrix_entry(const vn_kill_matrix* matrix, size_t index,
                                      vn_kill_entry* out_entry);

/* Stable line-oriented report:
 *   BASELINE OK corpus_seed=<s> corpus_size=<n>
 *   MUTANT <id> KILLED witness msg_len=<n> key_len=<n> offset=<j>
 *   MUTANT <id> SURVIVED
 * *out_text is heap-allocated; release with vn_string_free. */
VN_API vn_status vn_kill_matrix_format(const vn_kill_matrix* matrix, char** out_text);

VN_API void vn_kill_matrix_free(vn_kill_matrix* matrix);

/* ---- triangle demo ---- */

/* Total: non-positive sides and failed strict triangle inequalities give
 * VN_TRIANGLE_NOT_A_TRIANGLE. Invariant under permutation of sides. */
VN_API vn_triangle_kind vn_classify_triangle(int64_t a, int64_t b, int64_t c);

VN_API const char* vn_triangle_kind_name(vn_triangle_kind kind);

#ifdef __cplusplus
}
#endif

#endif /* VERNAM_VERNAM_H */
