// Copyright 2026 vernam contributors.
// Licensed under the Apache License, Version 2.0, see LICENSE for details.
// SPDX-License-Identifier: Apache-2.0
//
// Command-line front end over the C API. Exit codes: 0 success / all
// checks green, 1 specification failure (mismatched files, surviving
// mutant, broken baseline), 2 usage or environment error. Diagnostics go
// to stderr; report text goes to stdout.

#include <vernam/vernam.h>

#include <cstdint>
#include <cstdio>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

namespace {

constexpr int kExitGreen = 0;
constexpr int kExitRed = 1;
constexpr int kExitUsage = 2;

void print_error(const std::string& context) {
    const char* detail = vn_last_error();
    std::cerr << "vernam: " << context;
    if (detail && detail[0] != '\0') {
        std::cerr << ": " << detail;
    }
    std::cerr << "\n";
}

// Accepts decimal or 0x-prefixed hex.
std::optional<std::uint64_t> parse_u64(const std::string& text) {
    if (text.empty()) {
        return std::nullopt;
    }
    int base = 10;
    std::string digits = text;
    if (text.size() > 2 && (text.rfind("0x", 0) == 0 || text.rfind("0X", 0) == 0)) {
        base = 16;
        digits = text.substr(2);
    }
    try {
        std::size_t consumed = 0;
        const std::uint64_t value = std::stoull(digits, &consumed, base);
        if (consumed != digits.size()) {
            return std::nullopt;
        }
        return value;
    } catch (const std::exception&) {
        return std::nullopt;
    }
}

struct FileJobArgs {
    std::string in_path;
    std::string key_path;
    std::string out_path;
    bool allow_short_key = false;
};

int run_file_command(const FileJobArgs& args, bool encipher_direction) {
    const vn_policy policy =
        args.allow_short_key ? VN_POLICY_RELAXED_REPEAT : VN_POLICY_STRICT;
    uint64_t processed = 0;
    const vn_status status =
        encipher_direction
            ? vn_encipher_file(args.in_path.c_str(), args.key_path.c_str(),
                               args.out_path.c_str(), policy, &processed)
            : vn_decipher_file(args.in_path.c_str(), args.key_path.c_str(),
                               args.out_path.c_str(), policy, &processed);
    if (status != VN_OK) {
        print_error(encipher_direction ? "encipher failed" : "decipher failed");
        return kExitUsage;
    }
    return kExitGreen;
}

struct KeygenArgs {
    std::uint64_t length = 0;
    std::string out_path;
    std::string seed_text;
};

int run_keygen(const KeygenArgs& args) {
    std::optional<std::uint64_t> seed;
    if (!args.seed_text.empty()) {
        seed = parse_u64(args.seed_text);
        if (!seed) {
            std::cerr << "vernam: invalid --seed value: " << args.seed_text << "\n";
            return kExitUsage;
        }
    }

    vn_key* key = nullptr;
    const vn_status status = seed ? vn_key_generate_seeded(args.length, *seed, &key)
                                  : vn_key_generate_system(args.length, &key);
    if (status != VN_OK) {
        print_error("keygen failed");
        return kExitUsage;
    }
    const vn_status write_status = vn_key_write_file(key, args.out_path.c_str());
    vn_key_free(key);
    if (write_status != VN_OK) {
        print_error("keygen failed");
        return kExitUsage;
    }
    return kExitGreen;
}

int run_verify(const std::string& a, const std::string& b) {
    vn_equality_verdict verdict{};
    const vn_status status = vn_files_equal(a.c_str(), b.c_str(), &verdict);
    if (status != VN_OK) {
        print_error("verify failed");
        return kExitUsage;
    }
    if (verdict.equal) {
        return kExitGreen;
    }
    if (verdict.mismatch_kind == VN_MISMATCH_LENGTH) {
        std::cerr << "vernam: files differ: length mismatch, left " << verdict.left_len
                  << " bytes, right " << verdict.right_len << " bytes\n";
    } else {
        std::cerr << "vernam: files differ: first byte mismatch at offset " << verdict.offset
                  << "\n";
    }
    return kExitRed;
}

struct SelftestArgs {
    std::string seed_text = "1";
    std::uint64_t corpus_size = 64;
    std::uint64_t max_len = 4096;
    std::string mutants_text;
};

int run_selftest(const SelftestArgs& args) {
    const std::optional<std::uint64_t> seed = parse_u64(args.seed_text);
    if (!seed) {
        std::cerr << "vernam: invalid --seed value: " << args.seed_text << "\n";
        return kExitUsage;
    }

    std::vector<vn_mutant_id> mutants;
    if (args.mutants_text.empty()) {
        for (int id = VN_MUTANT_M1_DECIPHER_OR; id <= VN_MUTANT_M6_ENCIPHER_OR; ++id) {
            mutants.push_back(static_cast<vn_mutant_id>(id));
        }
    } else {
        std::size_t start = 0;
        while (start <= args.mutants_text.size()) {
            const std::size_t comma = args.mutants_text.find(',', start);
            const std::string token =
                args.mutants_text.substr(start, comma == std::string::npos ? std::string::npos
                                                                           : comma - start);
            vn_mutant_id id;
            if (vn_mutant_parse(token.c_str(), &id) != VN_OK) {
                std::cerr << "vernam: unknown mutant: " << token << "\n";
                return kExitUsage;
            }
            mutants.push_back(id);
            if (comma == std::string::npos) {
                break;
            }
            start = comma + 1;
        }
    }

    vn_corpus* corpus = nullptr;
    if (vn_corpus_generate(*seed, args.corpus_size, args.max_len, &corpus) != VN_OK) {
        print_error("selftest failed");
        return kExitUsage;
    }

    vn_behavior* behavior = nullptr;
    if (vn_behavior_vernam(&behavior) != VN_OK) {
        vn_corpus_free(corpus);
        print_error("selftest failed");
        return kExitUsage;
    }

    vn_kill_matrix* matrix = nullptr;
    const vn_status status =
        vn_run_kill_matrix(behavior, mutants.data(), mutants.size(), corpus, &matrix);
    vn_behavior_free(behavior);
    vn_corpus_free(corpus);

    if (status == VN_ERR_BROKEN_BASELINE) {
        print_error("selftest failed");
        return kExitRed;
    }
    if (status != VN_OK) {
        print_error("selftest failed");
        return kExitUsage;
    }

    char* report = nullptr;
    if (vn_kill_matrix_format(matrix, &report) != VN_OK) {
        vn_kill_matrix_free(matrix);
        print_error("selftest failed");
        return kExitUsage;
    }
    std::cout << report;
    vn_string_free(report);

    const bool green = vn_kill_matrix_all_killed(matrix) != 0;
    vn_kill_matrix_free(matrix);
    if (!green) {
        std::cerr << "vernam: selftest: at least one mutant survived\n";
        return kExitRed;
    }
    return kExitGreen;
}

int run_triangle(std::int64_t a, std::int64_t b, std::int64_t c) {
    std::cout << vn_triangle_kind_name(vn_classify_triangle(a, b, c)) << "\n";
    return kExitGreen;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Vernam stream-cipher file tool with a built-in fault-injection self test"};
    app.require_subcommand(1);

    int exit_code = kExitGreen;

    FileJobArgs encipher_args;
    CLI::App* encipher = app.add_subcommand("encipher", "XOR a file with a key file");
    encipher->add_option("--in", encipher_args.in_path, "input file")->required();
    encipher->add_option("--key", encipher_args.key_path, "key file")->required();
    encipher->add_option("--out", encipher_args.out_path, "output file")->required();
    encipher->add_flag("--allow-short-key", encipher_args.allow_short_key,
                       "cycle a key shorter than the input (breaks the one-time pad)");
    encipher->callback([&]() { exit_code = run_file_command(encipher_args, true); });

    FileJobArgs decipher_args;
    CLI::App* decipher = app.add_subcommand("decipher", "inverse of encipher (same XOR)");
    decipher->add_option("--in", decipher_args.in_path, "input file")->required();
    decipher->add_option("--key", decipher_args.key_path, "key file")->required();
    decipher->add_option("--out", decipher_args.out_path, "output file")->required();
    decipher->add_flag("--allow-short-key", decipher_args.allow_short_key,
                       "cycle a key shorter than the input (breaks the one-time pad)");
    decipher->callback([&]() { exit_code = run_file_command(decipher_args, false); });

    KeygenArgs keygen_args;
    CLI::App* keygen = app.add_subcommand("keygen", "write a key file of random bytes");
    keygen->add_option("--length", keygen_args.length, "key length in bytes (>= 1)")->required();
    keygen->add_option("--out", keygen_args.out_path, "key file to write")->required();
    keygen->add_option("--seed", keygen_args.seed_text,
                       "deterministic seed, decimal or 0x-prefixed hex (default: OS entropy)");
    keygen->callback([&]() { exit_code = run_keygen(keygen_args); });

    std::string verify_a;
    std::string verify_b;
    CLI::App* verify = app.add_subcommand("verify", "byte-wise comparison of two files");
    verify->add_option("a", verify_a, "first file")->required();
    verify->add_option("b", verify_b, "second file")->required();
    verify->callback([&]() { exit_code = run_verify(verify_a, verify_b); });

    SelftestArgs selftest_args;
    CLI::App* selftest =
        app.add_subcommand("selftest", "round-trip specification check plus mutant kill matrix");
    selftest->add_option("--seed", selftest_args.seed_text,
                         "corpus seed, decimal or 0x-prefixed hex");
    selftest->add_option("--corpus-size", selftest_args.corpus_size,
                         "random pairs beyond the two fixed vectors");
    selftest->add_option("--max-len", selftest_args.max_len, "maximum message length in bytes");
    selftest->add_option("--mutants", selftest_args.mutants_text,
                         "comma-separated mutant ids (default: all)");
    selftest->callback([&]() { exit_code = run_selftest(selftest_args); });

    std::int64_t side_a = 0;
    std::int64_t side_b = 0;
    std::int64_t side_c = 0;
    CLI::App* triangle = app.add_subcommand("triangle", "classify a triangle from three sides");
    triangle->add_option("a", side_a, "first side")->required();
    triangle->add_option("b", side_b, "second side")->required();
    triangle->add_option("c", side_c, "third side")->required();
    triangle->callback([&]() { exit_code = run_triangle(side_a, side_b, side_c); });

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        std::cerr << "vernam: " << e.what() << "\n";
        std::cerr << app.help() << "\n";
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "vernam: " << e.what() << "\n";
        return kExitUsage;
    }

    return exit_code;
}
