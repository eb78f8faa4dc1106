// Copyright 2026 vernam contributors.
// Licensed under the Apache License, Version 2.0, see LICENSE for details.
// SPDX-License-Identifier: Apache-2.0

#include "stream_io.hpp"

#include <algorithm>
#include <cstring>
#include <fstream>
#include <system_error>
#include <vector>

namespace fs = std::filesystem;

namespace vernam {

namespace {

constexpr std::size_t kChunkSize = 64 * 1024;

void require_readable_file(const fs::path& path) {
    std::error_code ec;
    if (!fs::exists(path, ec) || ec) {
        throw MissingFileError(path.string());
    }
    if (!fs::is_regular_file(path, ec) || ec) {
        throw IoFailureError(path.string(), "not a regular file");
    }
}

std::uint64_t file_length(const fs::path& path) {
    std::error_code ec;
    const auto size = fs::file_size(path, ec);
    if (ec) {
        throw IoFailureError(path.string(), ec.message());
    }
    return size;
}

fs::path resolved(const fs::path& path) {
    std::error_code ec;
    fs::path canonical = fs::weakly_canonical(path, ec);
    if (ec) {
        canonical = fs::absolute(path).lexically_normal();
    }
    return canonical;
}

// Reads the key file as an endless byte stream, wrapping back to the
// start on EOF. The wrap is only reachable when the policy admitted a
// key shorter than the input, i.e. under RelaxedRepeat.
class CyclingKeyReader {
public:
    explicit CyclingKeyReader(const fs::path& path) : path_(path), stream_(path, std::ios::binary) {
        if (!stream_) {
            throw IoFailureError(path.string(), "cannot open for reading");
        }
    }

    void fill(std::uint8_t* dst, std::size_t count) {
        std::size_t filled = 0;
        int stalled_wraps = 0;
        while (filled < count) {
            stream_.read(reinterpret_cast<char*>(dst + filled),
                         static_cast<std::streamsize>(count - filled));
            const auto got = static_cast<std::size_t>(stream_.gcount());
            filled += got;
            stalled_wraps = got > 0 ? 0 : stalled_wraps + 1;
            if (filled < count) {
                if (stream_.bad() || stalled_wraps > 1) {
                    throw IoFailureError(path_.string(), "read failed");
                }
                stream_.clear();
                stream_.seekg(0);
            }
        }
    }

private:
    fs::path path_;
    std::ifstream stream_;
};

// Deletes the staging file on scope exit unless commit() renamed it over
// the final path first.
class StagedOutput {
public:
    explicit StagedOutput(const fs::path& final_path)
        : final_path_(final_path), temp_path_(final_path.string() + ".part") {}

    StagedOutput(const StagedOutput&) = delete;
    StagedOutput& operator=(const StagedOutput&) = delete;

    ~StagedOutput() {
        if (!committed_) {
            std::error_code ec;
            fs::remove(temp_path_, ec);
        }
    }

    const fs::path& temp_path() const noexcept { return temp_path_; }

    void commit() {
        std::error_code ec;
        fs::rename(temp_path_, final_path_, ec);
        if (ec) {
            throw IoFailureError(final_path_.string(), "rename failed: " + ec.message());
        }
        committed_ = true;
    }

private:
    fs::path final_path_;
    fs::path temp_path_;
    bool committed_ = false;
};

std::uint64_t run_file_job(const FileJob& job) {
    const fs::path out = resolved(job.out_path);
    if (out == resolved(job.in_path) || out == resolved(job.key_path)) {
        throw InvalidArgumentError("output path must differ from the input and key paths: " +
                                   job.out_path.string());
    }

    require_readable_file(job.in_path);
    require_readable_file(job.key_path);

    const std::uint64_t in_len = file_length(job.in_path);
    const std::uint64_t key_len = file_length(job.key_path);
    validate_key(key_len, in_len, job.policy);

    std::ifstream in(job.in_path, std::ios::binary);
    if (!in) {
        throw IoFailureError(job.in_path.string(), "cannot open for reading");
    }
    CyclingKeyReader key(job.key_path);

    StagedOutput staged(job.out_path);
    std::ofstream out_stream(staged.temp_path(), std::ios::binary | std::ios::trunc);
    if (!out_stream) {
        throw IoFailureError(staged.temp_path().string(), "cannot open for writing");
    }

    std::vector<std::uint8_t> in_buf(kChunkSize);
    std::vector<std::uint8_t> key_buf(kChunkSize);
    std::uint64_t processed = 0;
    while (processed < in_len) {
        const std::size_t want =
            static_cast<std::size_t>(std::min<std::uint64_t>(kChunkSize, in_len - processed));
        in.read(reinterpret_cast<char*>(in_buf.data()), static_cast<std::streamsize>(want));
        if (static_cast<std::size_t>(in.gcount()) != want) {
            throw IoFailureError(job.in_path.string(), "short read");
        }
        key.fill(key_buf.data(), want);
        for (std::size_t j = 0; j < want; ++j) {
            in_buf[j] = static_cast<std::uint8_t>(in_buf[j] ^ key_buf[j]);
        }
        out_stream.write(reinterpret_cast<const char*>(in_buf.data()),
                         static_cast<std::streamsize>(want));
        if (!out_stream) {
            throw IoFailureError(staged.temp_path().string(), "write failed");
        }
        processed += want;
    }

    out_stream.flush();
    if (!out_stream) {
        throw IoFailureError(staged.temp_path().string(), "flush failed");
    }
    out_stream.close();
    staged.commit();
    return processed;
}

}  // namespace

std::uint64_t encipher_file(const FileJob& job) {
    return run_file_job(job);
}

std::uint64_t decipher_file(const FileJob& job) {
    return run_file_job(job);
}

EqualityVerdict files_equal(const fs::path& a, const fs::path& b) {
    require_readable_file(a);
    require_readable_file(b);

    const std::uint64_t len_a = file_length(a);
    const std::uint64_t len_b = file_length(b);
    if (len_a != len_b) {
        return EqualityVerdict{
            false,
            EqualityVerdict::Mismatch{MismatchKind::Length, std::min(len_a, len_b), len_a, len_b}};
    }

    std::ifstream fa(a, std::ios::binary);
    std::ifstream fb(b, std::ios::binary);
    if (!fa) {
        throw IoFailureError(a.string(), "cannot open for reading");
    }
    if (!fb) {
        throw IoFailureError(b.string(), "cannot open for reading");
    }

    std::vector<char> buf_a(kChunkSize);
    std::vector<char> buf_b(kChunkSize);
    std::uint64_t offset = 0;
    while (offset < len_a) {
        const std::size_t want =
            static_cast<std::size_t>(std::min<std::uint64_t>(kChunkSize, len_a - offset));
        fa.read(buf_a.data(), static_cast<std::streamsize>(want));
        fb.read(buf_b.data(), static_cast<std::streamsize>(want));
        if (static_cast<std::size_t>(fa.gcount()) != want) {
            throw IoFailureError(a.string(), "short read");
        }
        if (static_cast<std::size_t>(fb.gcount()) != want) {
            throw IoFailureError(b.string(), "short read");
        }
        if (std::memcmp(buf_a.data(), buf_b.data(), want) != 0) {
            std::size_t j = 0;
            while (buf_a[j] == buf_b[j]) {
                ++j;
            }
            return EqualityVerdict{
                false, EqualityVerdict::Mismatch{MismatchKind::Byte, offset + j, len_a, len_b}};
        }
        offset += want;
    }
    return EqualityVerdict{true, std::nullopt};
}

void clean_outputs(std::span<const fs::path> paths) {
    for (const fs::path& path : paths) {
        std::error_code ec;
        const bool present = fs::exists(path, ec);
        if (ec) {
            throw IoFailureError(path.string(), ec.message());
        }
        if (!present) {
            continue;
        }
        if (fs::is_directory(path, ec)) {
            throw IoFailureError(path.string(), "is a directory");
        }
        if (!fs::remove(path, ec) || ec) {
            throw IoFailureError(path.string(), ec ? ec.message() : "could not remove");
        }
    }
}

}  // namespace vernam
