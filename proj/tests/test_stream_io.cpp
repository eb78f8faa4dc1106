// Copyright 2026 vernam contributors.
// Licensed under the Apache License, Version 2.0, see LICENSE for details.
// SPDX-License-Identifier: Apache-2.0

#include <doctest.h>

#include <array>
#include <filesystem>

#include "rng.hpp"
#include "stream_io.hpp"
#include "temp_dir.hpp"

using namespace vernam;
using testutil::TempDir;
using testutil::read_file;
using testutil::write_file;

namespace {

// Brute-force in-memory comparison; the oracle files_equal is checked
// against.
EqualityVerdict compare_in_memory(const ByteMessage& a, const ByteMessage& b) {
    if (a.size() != b.size()) {
        return EqualityVerdict{false,
                               EqualityVerdict::Mismatch{MismatchKind::Length,
                                                         std::min(a.size(), b.size()),
                                                         a.size(), b.size()}};
    }
    for (std::size_t j = 0; j < a.size(); ++j) {
        if (a[j] != b[j]) {
            return EqualityVerdict{
                false, EqualityVerdict::Mismatch{MismatchKind::Byte, j, a.size(), b.size()}};
        }
    }
    return EqualityVerdict{true, std::nullopt};
}

// The naive byte loop the buffered implementation must be bit-identical to.
ByteMessage naive_xor(const ByteMessage& input, const ByteMessage& key) {
    ByteMessage out(input.size());
    for (std::size_t j = 0; j < input.size(); ++j) {
        out[j] = static_cast<std::uint8_t>(input[j] ^ key[j % key.size()]);
    }
    return out;
}

}  // namespace

TEST_CASE("file round trip reproduces the input byte-exactly") {
    TempDir dir;
    Xoshiro256ss rng(0x10FEED);
    const ByteMessage original = rng.bytes(100 * 1024 + 13);
    const ByteMessage key = rng.bytes(100 * 1024 + 13);
    write_file(dir.file("in.bin"), original);
    write_file(dir.file("key.bin"), key);

    const FileJob encipher_job{dir.file("in.bin"), dir.file("enc.bin"), dir.file("key.bin"),
                               KeyPolicy::Strict};
    CHECK(encipher_file(encipher_job) == original.size());

    const FileJob decipher_job{dir.file("enc.bin"), dir.file("dec.bin"), dir.file("key.bin"),
                               KeyPolicy::Strict};
    CHECK(decipher_file(decipher_job) == original.size());

    CHECK(files_equal(dir.file("in.bin"), dir.file("dec.bin")).equal);
    CHECK(read_file(dir.file("enc.bin")) == naive_xor(original, key));
}

TEST_CASE("empty input and empty key give an empty output") {
    TempDir dir;
    write_file(dir.file("in.bin"), {});
    write_file(dir.file("key.bin"), {});
    const FileJob job{dir.file("in.bin"), dir.file("out.bin"), dir.file("key.bin"),
                      KeyPolicy::Strict};
    CHECK(encipher_file(job) == 0);
    CHECK(read_file(dir.file("out.bin")).empty());
}

TEST_CASE("a zero input reveals the key prefix") {
    TempDir dir;
    Xoshiro256ss rng(0x20FEED);
    const ByteMessage key = rng.bytes(64);
    write_file(dir.file("in.bin"), ByteMessage(48, 0x00));
    write_file(dir.file("key.bin"), key);
    const FileJob job{dir.file("in.bin"), dir.file("out.bin"), dir.file("key.bin"),
                      KeyPolicy::Strict};
    CHECK(encipher_file(job) == 48);
    CHECK(read_file(dir.file("out.bin")) == ByteMessage(key.begin(), key.begin() + 48));
}

TEST_CASE("an input enciphered with itself is all zero") {
    TempDir dir;
    Xoshiro256ss rng(0x30FEED);
    const ByteMessage data = rng.bytes(1000);
    write_file(dir.file("in.bin"), data);
    write_file(dir.file("key.bin"), data);
    const FileJob job{dir.file("in.bin"), dir.file("out.bin"), dir.file("key.bin"),
                      KeyPolicy::Strict};
    CHECK(decipher_file(job) == 1000);
    CHECK(read_file(dir.file("out.bin")) == ByteMessage(1000, 0x00));
}

TEST_CASE("Strict refuses a key one byte short of the input") {
    TempDir dir;
    write_file(dir.file("in.bin"), ByteMessage(5, 0xAA));
    write_file(dir.file("key.bin"), ByteMessage(4, 0xBB));
    const FileJob job{dir.file("in.bin"), dir.file("out.bin"), dir.file("key.bin"),
                      KeyPolicy::Strict};
    try {
        encipher_file(job);
        FAIL("expected KeyTooShortError");
    } catch (const KeyTooShortError& e) {
        CHECK(e.key_len == 4);
        CHECK(e.msg_len == 5);
    }
    CHECK_FALSE(std::filesystem::exists(dir.file("out.bin")));
}

TEST_CASE("a failed job leaves a pre-existing output untouched") {
    TempDir dir;
    const ByteMessage old_content{0xDE, 0xAD, 0xBE, 0xEF};
    write_file(dir.file("in.bin"), ByteMessage(5, 0xAA));
    write_file(dir.file("key.bin"), ByteMessage(4, 0xBB));
    write_file(dir.file("out.bin"), old_content);
    const FileJob job{dir.file("in.bin"), dir.file("out.bin"), dir.file("key.bin"),
                      KeyPolicy::Strict};
    CHECK_THROWS_AS(encipher_file(job), KeyTooShortError);
    CHECK(read_file(dir.file("out.bin")) == old_content);
    CHECK_FALSE(std::filesystem::exists(dir.file("out.bin.part")));
}

TEST_CASE("RelaxedRepeat cycles the key over a longer input") {
    TempDir dir;
    Xoshiro256ss rng(0x40FEED);
    const ByteMessage input = rng.bytes(200000);
    const ByteMessage key = rng.bytes(257);  // forces many wraps across chunk boundaries
    write_file(dir.file("in.bin"), input);
    write_file(dir.file("key.bin"), key);
    const FileJob job{dir.file("in.bin"), dir.file("out.bin"), dir.file("key.bin"),
                      KeyPolicy::RelaxedRepeat};
    CHECK(encipher_file(job) == input.size());
    CHECK(read_file(dir.file("out.bin")) == naive_xor(input, key));
}

TEST_CASE("missing inputs are reported with their path") {
    TempDir dir;
    write_file(dir.file("in.bin"), ByteMessage(3, 0x01));
    const FileJob job{dir.file("in.bin"), dir.file("out.bin"), dir.file("nokey.bin"),
                      KeyPolicy::Strict};
    try {
        decipher_file(job);
        FAIL("expected MissingFileError");
    } catch (const MissingFileError& e) {
        CHECK(e.path.find("nokey.bin") != std::string::npos);
    }

    const FileJob job2{dir.file("noin.bin"), dir.file("out.bin"), dir.file("in.bin"),
                       KeyPolicy::Strict};
    CHECK_THROWS_AS(decipher_file(job2), MissingFileError);
}

TEST_CASE("the output path must differ from both inputs") {
    TempDir dir;
    write_file(dir.file("in.bin"), ByteMessage(3, 0x01));
    write_file(dir.file("key.bin"), ByteMessage(3, 0x02));

    const FileJob clobber_in{dir.file("in.bin"), dir.file("in.bin"), dir.file("key.bin"),
                             KeyPolicy::Strict};
    CHECK_THROWS_AS(encipher_file(clobber_in), InvalidArgumentError);

    const FileJob clobber_key{dir.file("in.bin"), dir.file("key.bin"), dir.file("key.bin"),
                              KeyPolicy::Strict};
    CHECK_THROWS_AS(encipher_file(clobber_key), InvalidArgumentError);

    // The input doubling as the key is fine.
    const FileJob same_in_key{dir.file("in.bin"), dir.file("out.bin"), dir.file("in.bin"),
                              KeyPolicy::Strict};
    CHECK(encipher_file(same_in_key) == 3);
    CHECK(read_file(dir.file("out.bin")) == ByteMessage(3, 0x00));
}

TEST_CASE("files_equal known answers") {
    TempDir dir;
    Xoshiro256ss rng(0x50FEED);
    const ByteMessage content = rng.bytes(1024);
    write_file(dir.file("a.bin"), content);
    write_file(dir.file("b.bin"), content);
    CHECK(files_equal(dir.file("a.bin"), dir.file("b.bin")).equal);

    write_file(dir.file("c10.bin"), ByteMessage(10, 0x00));
    write_file(dir.file("c11.bin"), ByteMessage(11, 0x00));
    const EqualityVerdict length_verdict = files_equal(dir.file("c10.bin"), dir.file("c11.bin"));
    REQUIRE_FALSE(length_verdict.equal);
    CHECK(length_verdict.mismatch->kind == MismatchKind::Length);
    CHECK(length_verdict.mismatch->left_len == 10);
    CHECK(length_verdict.mismatch->right_len == 11);

    write_file(dir.file("d.bin"), ByteMessage{0, 1, 2, 3});
    write_file(dir.file("e.bin"), ByteMessage{0, 1, 9, 3});
    const EqualityVerdict byte_verdict = files_equal(dir.file("d.bin"), dir.file("e.bin"));
    REQUIRE_FALSE(byte_verdict.equal);
    CHECK(byte_verdict.mismatch->kind == MismatchKind::Byte);
    CHECK(byte_verdict.mismatch->offset == 2);
}

TEST_CASE("files_equal reports first-diff offsets at the edges") {
    TempDir dir;
    const ByteMessage base(100, 0x55);
    for (std::size_t diff_at : {std::size_t{0}, std::size_t{50}, std::size_t{99}}) {
        ByteMessage mutated = base;
        mutated[diff_at] ^= 0x01;
        write_file(dir.file("left.bin"), base);
        write_file(dir.file("right.bin"), mutated);
        const EqualityVerdict verdict = files_equal(dir.file("left.bin"), dir.file("right.bin"));
        REQUIRE_FALSE(verdict.equal);
        CHECK(verdict.mismatch->kind == MismatchKind::Byte);
        CHECK(verdict.mismatch->offset == diff_at);
    }
}

TEST_CASE("files_equal agrees with the in-memory oracle on random pairs") {
    TempDir dir;
    Xoshiro256ss rng(0x60FEED);
    for (int i = 0; i < 50; ++i) {
        const std::size_t len_a = static_cast<std::size_t>(rng.next() % 300);
        ByteMessage a = rng.bytes(len_a);
        ByteMessage b = a;
        switch (rng.next() % 3) {
            case 0:
                break;  // identical
            case 1:
                if (!b.empty()) {
                    b[static_cast<std::size_t>(rng.next() % b.size())] ^= 0x80;
                }
                break;
            default:
                b = rng.bytes(static_cast<std::size_t>(rng.next() % 300));
                break;
        }
        write_file(dir.file("a.bin"), a);
        write_file(dir.file("b.bin"), b);
        const EqualityVerdict got = files_equal(dir.file("a.bin"), dir.file("b.bin"));
        const EqualityVerdict want = compare_in_memory(a, b);
        CHECK(got.equal == want.equal);
        if (!want.equal) {
            CHECK(got.mismatch->kind == want.mismatch->kind);
            CHECK(got.mismatch->offset == want.mismatch->offset);
            CHECK(got.mismatch->left_len == want.mismatch->left_len);
            CHECK(got.mismatch->right_len == want.mismatch->right_len);
        }
        // The verdict is symmetric in its equal field.
        CHECK(files_equal(dir.file("b.bin"), dir.file("a.bin")).equal == got.equal);
    }
}

TEST_CASE("files_equal requires both files") {
    TempDir dir;
    write_file(dir.file("a.bin"), ByteMessage(3, 0x01));
    CHECK_THROWS_AS(files_equal(dir.file("a.bin"), dir.file("absent.bin")), MissingFileError);
    CHECK_THROWS_AS(files_equal(dir.file("absent.bin"), dir.file("a.bin")), MissingFileError);
}

TEST_CASE("clean_outputs removes files, skips absentees, refuses directories") {
    TempDir dir;
    write_file(dir.file("stale.bin"), ByteMessage(4, 0x00));
    const std::array<std::filesystem::path, 2> paths{dir.file("stale.bin"),
                                                     dir.file("never-existed.bin")};
    CHECK_NOTHROW(clean_outputs(paths));
    CHECK_FALSE(std::filesystem::exists(dir.file("stale.bin")));

    std::filesystem::create_directory(dir.file("subdir"));
    const std::array<std::filesystem::path, 1> dir_path{dir.file("subdir")};
    CHECK_THROWS_AS(clean_outputs(dir_path), IoFailureError);
}
