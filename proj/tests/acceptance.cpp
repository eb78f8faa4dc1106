// Copyright 2026 vernam contributors.
// Licensed under the Apache License, Version 2.0, see LICENSE for details.
// SPDX-License-Identifier: Apache-2.0
//
// End-to-end acceptance suite. Each numbered criterion prints exactly one
// PASS/FAIL line; the process exits nonzero if any criterion fails.
// Criteria 3, 7 and 9 drive the command-line binary (path from the
// VERNAM_CLI_PATH compile definition, overridable as argv[1]).

#include <vernam/vernam.h>

#include <chrono>
#include <cstdint>
#include <cstdio>
#include <string>
#include <vector>

#include "subprocess.hpp"
#include "temp_dir.hpp"

using testutil::RunResult;
using testutil::TempDir;
using testutil::read_file;
using testutil::run_command;
using testutil::write_file;

namespace {

int failures = 0;

void report(int number, const char* title, bool pass, const std::string& detail = "") {
    std::printf("%s  criterion %d: %s%s%s\n", pass ? "PASS" : "FAIL", number, title,
                detail.empty() ? "" : " -- ", detail.c_str());
    if (!pass) {
        ++failures;
    }
}

double seconds_since(std::chrono::steady_clock::time_point start) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
}

// 1. Seeded round-trip corpus: >= 1000 pairs, lengths spanning 0..65536,
//    100% byte-exact, under 5 seconds.
void criterion_1() {
    const auto start = std::chrono::steady_clock::now();

    vn_corpus* corpus = nullptr;
    if (vn_corpus_generate(1, 1000, 65536, &corpus) != VN_OK) {
        report(1, "seeded round-trip corpus", false, "corpus generation failed");
        return;
    }
    vn_behavior* vernam = nullptr;
    vn_behavior_vernam(&vernam);

    const size_t total = vn_corpus_size(corpus);
    size_t passed = 0;
    uint64_t min_len = UINT64_MAX;
    uint64_t max_len = 0;
    bool ok = total >= 1000;
    for (size_t i = 0; i < total; ++i) {
        const uint8_t* msg = nullptr;
        size_t msg_len = 0;
        const uint8_t* key_bytes = nullptr;
        size_t key_len = 0;
        vn_corpus_pair(corpus, i, &msg, &msg_len, &key_bytes, &key_len);
        if (msg_len < min_len) min_len = msg_len;
        if (msg_len > max_len) max_len = msg_len;

        vn_key* key = nullptr;
        vn_key_from_bytes(key_bytes, key_len, &key);
        int pass = 0;
        if (vn_roundtrip_holds(vernam, msg, msg_len, key, &pass, nullptr) == VN_OK && pass) {
            ++passed;
        }
        vn_key_free(key);
    }

    // Pin the exact span endpoints as well.
    for (uint64_t len : {uint64_t{0}, uint64_t{65536}}) {
        std::vector<uint8_t> msg(static_cast<size_t>(len), 0xA5);
        vn_key* key = nullptr;
        vn_key_generate_seeded(len + 1, 77, &key);
        int pass = 0;
        ok = ok && vn_roundtrip_holds(vernam, msg.data(), msg.size(), key, &pass, nullptr) ==
                       VN_OK &&
             pass;
        vn_key_free(key);
    }

    const double elapsed = seconds_since(start);
    ok = ok && passed == total && elapsed < 5.0;
    report(1, "seeded round-trip corpus (>=1000 pairs, 0..65536 bytes)", ok,
           std::to_string(passed) + "/" + std::to_string(total) + " pass, msg_len " +
               std::to_string(min_len) + ".." + std::to_string(max_len) + ", " +
               std::to_string(elapsed) + " s");

    vn_behavior_free(vernam);
    vn_corpus_free(corpus);
}

// 2. Exhaustive single-byte laws: round trip and the M1 survival rule
//    over all 65536 (key, msg) pairs, zero exceptions.
void criterion_2() {
    vn_behavior* vernam = nullptr;
    vn_behavior_vernam(&vernam);
    vn_behavior* m1 = nullptr;
    vn_behavior_with_mutant(vernam, VN_MUTANT_M1_DECIPHER_OR, &m1);

    size_t roundtrip_ok = 0;
    size_t law_ok = 0;
    for (int k = 0; k < 256; ++k) {
        const uint8_t key_byte = static_cast<uint8_t>(k);
        vn_key* key = nullptr;
        vn_key_from_bytes(&key_byte, 1, &key);
        for (int m = 0; m < 256; ++m) {
            const uint8_t msg = static_cast<uint8_t>(m);
            int pass = 0;
            if (vn_roundtrip_holds(vernam, &msg, 1, key, &pass, nullptr) == VN_OK && pass) {
                ++roundtrip_ok;
            }
            const bool expected = (k & (~m & 0xFF)) == 0;
            if (vn_roundtrip_holds(m1, &msg, 1, key, &pass, nullptr) == VN_OK &&
                (pass != 0) == expected) {
                ++law_ok;
            }
        }
        vn_key_free(key);
    }

    const bool ok = roundtrip_ok == 65536 && law_ok == 65536;
    report(2, "exhaustive single-byte round trip and M1 survival law", ok,
           std::to_string(roundtrip_ok) + "/65536 round trips, " + std::to_string(law_ok) +
               "/65536 law matches");

    vn_behavior_free(m1);
    vn_behavior_free(vernam);
}

// 3. The fault exercise via the CLI: default selftest exits 0, reports
//    M1_DecipherOr KILLED and all six mutants killed over a green baseline.
void criterion_3(const std::string& cli) {
    TempDir dir;
    const RunResult result = run_command(cli + " selftest", dir);
    const bool ok = result.exit_code == 0 &&
                    result.out.find("BASELINE OK") == 0 &&
                    result.out.find("MUTANT M1_DecipherOr KILLED") != std::string::npos &&
                    result.out.find("SURVIVED") == std::string::npos &&
                    result.out.find("M2_DecipherAnd KILLED") != std::string::npos &&
                    result.out.find("M3_KeyStreamOffByOne KILLED") != std::string::npos &&
                    result.out.find("M4_KeyReuseHalf KILLED") != std::string::npos &&
                    result.out.find("M5_DropLastByte KILLED") != std::string::npos &&
                    result.out.find("M6_EncipherOr KILLED") != std::string::npos;
    report(3, "selftest reproduces the fault exercise, all 6 mutants killed", ok,
           "exit " + std::to_string(result.exit_code));
}

// 4. Key-policy gate at the exact boundary: one byte short fails naming
//    both lengths; equal length is accepted.
void criterion_4() {
    TempDir dir;
    write_file(dir.file("in.bin"), std::vector<uint8_t>(10, 0x11));
    write_file(dir.file("key9.bin"), std::vector<uint8_t>(9, 0x22));
    write_file(dir.file("key10.bin"), std::vector<uint8_t>(10, 0x33));

    const vn_status short_status =
        vn_encipher_file(dir.file("in.bin").string().c_str(),
                         dir.file("key9.bin").string().c_str(),
                         dir.file("out.bin").string().c_str(), VN_POLICY_STRICT, nullptr);
    const std::string detail = vn_last_error();
    const bool short_rejected = short_status == VN_ERR_KEY_TOO_SHORT &&
                                detail.find('9') != std::string::npos &&
                                detail.find("10") != std::string::npos;

    const vn_status equal_status =
        vn_encipher_file(dir.file("in.bin").string().c_str(),
                         dir.file("key10.bin").string().c_str(),
                         dir.file("out.bin").string().c_str(), VN_POLICY_STRICT, nullptr);

    const bool ok = short_rejected && equal_status == VN_OK &&
                    vn_validate_key(9, 10, VN_POLICY_STRICT) == VN_ERR_KEY_TOO_SHORT &&
                    vn_validate_key(10, 10, VN_POLICY_STRICT) == VN_OK;
    report(4, "strict key gate at the one-byte boundary names both lengths", ok, detail);
}

// 5. files_equal against a brute-force in-memory comparison on the
//    crafted suite, including first-diff offsets.
void criterion_5() {
    TempDir dir;
    bool ok = true;
    std::string detail;

    const std::vector<uint8_t> base(101, 0x5A);

    auto check_pair = [&](const std::vector<uint8_t>& a, const std::vector<uint8_t>& b,
                          const char* label) {
        write_file(dir.file("a.bin"), a);
        write_file(dir.file("b.bin"), b);
        vn_equality_verdict verdict{};
        if (vn_files_equal(dir.file("a.bin").string().c_str(),
                           dir.file("b.bin").string().c_str(), &verdict) != VN_OK) {
            ok = false;
            detail += std::string(label) + ": call failed; ";
            return;
        }
        // Brute-force oracle.
        int equal = 1;
        vn_mismatch_kind kind = VN_MISMATCH_NONE;
        uint64_t offset = 0;
        if (a.size() != b.size()) {
            equal = 0;
            kind = VN_MISMATCH_LENGTH;
            offset = std::min(a.size(), b.size());
        } else {
            for (size_t j = 0; j < a.size(); ++j) {
                if (a[j] != b[j]) {
                    equal = 0;
                    kind = VN_MISMATCH_BYTE;
                    offset = j;
                    break;
                }
            }
        }
        const bool match = verdict.equal == equal && verdict.mismatch_kind == kind &&
                           (equal == 1 || verdict.offset == offset);
        if (!match) {
            ok = false;
            detail += std::string(label) + " diverges from oracle; ";
        }
    };

    check_pair(base, base, "equal");
    check_pair(base, std::vector<uint8_t>(102, 0x5A), "length");
    std::vector<uint8_t> first = base;
    first[0] ^= 1;
    check_pair(base, first, "offset 0");
    std::vector<uint8_t> middle = base;
    middle[50] ^= 1;
    check_pair(base, middle, "offset middle");
    std::vector<uint8_t> last = base;
    last[100] ^= 1;
    check_pair(base, last, "offset last");

    report(5, "files_equal matches the brute-force oracle on the crafted suite", ok, detail);
}

// 6. 1 MiB file round trip with a fresh generated key, byte-exact per
//    files_equal, under 2 seconds.
void criterion_6() {
    TempDir dir;

    vn_key* data_key = nullptr;
    vn_key_generate_seeded(1 << 20, 4242, &data_key);
    std::vector<uint8_t> payload(vn_key_bytes(data_key), vn_key_bytes(data_key) + (1 << 20));
    vn_key_free(data_key);
    write_file(dir.file("payload.bin"), payload);

    const auto start = std::chrono::steady_clock::now();

    vn_key* pad = nullptr;
    const bool keygen_ok = vn_key_generate_system(1 << 20, &pad) == VN_OK &&
                           vn_key_write_file(pad, dir.file("pad.bin").string().c_str()) == VN_OK;
    vn_key_free(pad);

    uint64_t processed = 0;
    const bool enc_ok =
        keygen_ok && vn_encipher_file(dir.file("payload.bin").string().c_str(),
                                      dir.file("pad.bin").string().c_str(),
                                      dir.file("enc.bin").string().c_str(), VN_POLICY_STRICT,
                                      &processed) == VN_OK;
    const bool dec_ok =
        enc_ok && vn_decipher_file(dir.file("enc.bin").string().c_str(),
                                   dir.file("pad.bin").string().c_str(),
                                   dir.file("dec.bin").string().c_str(), VN_POLICY_STRICT,
                                   nullptr) == VN_OK;

    vn_equality_verdict verdict{};
    const bool equal_ok =
        dec_ok && vn_files_equal(dir.file("payload.bin").string().c_str(),
                                 dir.file("dec.bin").string().c_str(), &verdict) == VN_OK &&
        verdict.equal == 1;

    const double elapsed = seconds_since(start);
    const bool ok = equal_ok && processed == (1 << 20) && elapsed < 2.0;
    report(6, "1 MiB file round trip with a fresh key", ok,
           std::to_string(elapsed) + " s");
}

// 7. Keygen: byte-identical seeded output across two separate process
//    runs; 1 MiB key monobit fraction within [0.49, 0.51].
void criterion_7(const std::string& cli) {
    TempDir dir;
    const std::string megabyte = std::to_string(1 << 20);
    const RunResult first = run_command(
        cli + " keygen --length " + megabyte + " --seed 31337 --out " +
            dir.file("k1.bin").string(),
        dir);
    const RunResult second = run_command(
        cli + " keygen --length " + megabyte + " --seed 31337 --out " +
            dir.file("k2.bin").string(),
        dir);

    vn_equality_verdict verdict{};
    const bool identical = first.exit_code == 0 && second.exit_code == 0 &&
                           vn_files_equal(dir.file("k1.bin").string().c_str(),
                                          dir.file("k2.bin").string().c_str(),
                                          &verdict) == VN_OK &&
                           verdict.equal == 1;

    vn_key* key = nullptr;
    double fraction = 0.0;
    const bool balanced =
        vn_key_from_file(dir.file("k1.bin").string().c_str(), &key) == VN_OK &&
        vn_key_monobit_fraction(key, &fraction) == VN_OK && fraction >= 0.49 &&
        fraction <= 0.51;
    vn_key_free(key);

    report(7, "seeded keygen is process-stable and the pad is balanced", identical && balanced,
           "monobit " + std::to_string(fraction));
}

// 8. Triangle demo: the classic suite plus permutation invariance over
//    1000 random triples.
void criterion_8() {
    bool ok = vn_classify_triangle(3, 3, 3) == VN_TRIANGLE_EQUILATERAL &&
              vn_classify_triangle(2, 2, 3) == VN_TRIANGLE_ISOSCELES &&
              vn_classify_triangle(3, 4, 5) == VN_TRIANGLE_SCALENE &&
              vn_classify_triangle(1, 2, 3) == VN_TRIANGLE_NOT_A_TRIANGLE &&
              vn_classify_triangle(0, 1, 1) == VN_TRIANGLE_NOT_A_TRIANGLE &&
              vn_classify_triangle(-1, 1, 1) == VN_TRIANGLE_NOT_A_TRIANGLE &&
              vn_classify_triangle(1, 1, 3) == VN_TRIANGLE_NOT_A_TRIANGLE;

    // Simple LCG; the exact stream is irrelevant, only coverage.
    uint64_t state = 0x9E3779B97F4A7C15ULL;
    auto next = [&state]() {
        state = state * 6364136223846793005ULL + 1442695040888963407ULL;
        return state >> 33;
    };
    for (int i = 0; i < 1000 && ok; ++i) {
        const int64_t a = static_cast<int64_t>(next() % 25) - 2;
        const int64_t b = static_cast<int64_t>(next() % 25) - 2;
        const int64_t c = static_cast<int64_t>(next() % 25) - 2;
        const vn_triangle_kind kind = vn_classify_triangle(a, b, c);
        ok = vn_classify_triangle(a, c, b) == kind && vn_classify_triangle(b, a, c) == kind &&
             vn_classify_triangle(b, c, a) == kind && vn_classify_triangle(c, a, b) == kind &&
             vn_classify_triangle(c, b, a) == kind;
    }
    report(8, "triangle suite and permutation invariance over 1000 triples", ok);
}

// 9. Determinism: two selftest runs with the same seed emit byte-identical
//    reports.
void criterion_9(const std::string& cli) {
    TempDir dir;
    const RunResult first = run_command(cli + " selftest --seed 1", dir);
    const RunResult second = run_command(cli + " selftest --seed 1", dir);
    const bool ok = first.exit_code == 0 && second.exit_code == 0 && !first.out.empty() &&
                    first.out == second.out;
    report(9, "selftest reports are byte-identical across runs", ok);
}

}  // namespace

int main(int argc, char** argv) {
    const std::string cli = argc > 1 ? argv[1] : VERNAM_CLI_PATH;

    criterion_1();
    criterion_2();
    criterion_3(cli);
    criterion_4();
    criterion_5();
    criterion_6();
    criterion_7(cli);
    criterion_8();
    criterion_9(cli);

    if (failures > 0) {
        std::printf("%d criterion(s) failed\n", failures);
        return 1;
    }
    std::printf("all 9 criteria passed\n");
    return 0;
}
