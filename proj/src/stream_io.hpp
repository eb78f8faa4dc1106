// Copyright 2026 vernam contributors.
// Licensed under the Apache License, Version 2.0, see LICENSE for details.
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <span>

#include "core.hpp"

namespace vernam {

/// The three-file protocol: read in_path and key_path, write out_path.
/// out_path must equal neither input path; in_path and key_path may
/// coincide. Files are raw octet streams, identical on all platforms.
struct FileJob {
    std::filesystem::path in_path;
    std::filesystem::path out_path;
    std::filesystem::path key_path;
    KeyPolicy policy = KeyPolicy::Strict;
};

enum class MismatchKind { Length, Byte };

struct EqualityVerdict {
    struct Mismatch {
        MismatchKind kind;
        // Byte: smallest differing index. Length: length of the shorter
        // file (the first index at which only one file has a byte).
        std::uint64_t offset;
        std::uint64_t left_len;
        std::uint64_t right_len;
    };

    bool equal = false;
    std::optional<Mismatch> mismatch;  // engaged iff !equal
};

// Write encipher(key, in) to out_path, replacing any previous content.
// Output is staged in a sibling temporary and renamed into place on
// success, so a reported error never leaves partial bytes under the
// final name. Returns the number of input bytes processed.
std::uint64_t encipher_file(const FileJob& job);

// Same contract as encipher_file; the transform is the same XOR.
std::uint64_t decipher_file(const FileJob& job);

// Byte-wise file equality. A length difference is decided from file
// metadata without reading content; a content difference reports the
// first differing offset.
EqualityVerdict files_equal(const std::filesystem::path& a, const std::filesystem::path& b);

// Remove each listed regular file; paths that do not exist are skipped.
// Directories are refused with IoFailureError.
void clean_outputs(std::span<const std::filesystem::path> paths);

}  // namespace vernam
