#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>

#include "torlim/checks.hpp"

namespace torlim::cli {

inline constexpr std::uint64_t kDefaultSeed = checks::kDefaultSeed;

// Exit codes: 0 success, 1 verification failure, 2 input error.
inline constexpr int kExitOk = 0;
inline constexpr int kExitVerificationFailure = 1;
inline constexpr int kExitInputError = 2;

struct CommonOptions {
    std::size_t degree = 1;
    std::size_t family_size = 3;
    std::uint64_t seed = kDefaultSeed;
    bool json = false;
    bool verbose = false;
};

// Tor_n(A, B): canonical form of the derived object of -⊗B at A.
int run_tor(const std::string& a_path, const std::string& b_path, const CommonOptions& opts,
            std::ostream& out, std::ostream& err);

// Lists the canonical resolution family of the module.
int run_resolve(const std::string& module_path, const CommonOptions& opts, std::ostream& out,
                std::ostream& err);

// Derived map of the first map in the file, for the functor -⊗(param module).
int run_map(const std::string& map_path, const std::string& param_path, const CommonOptions& opts,
            std::ostream& out, std::ostream& err);

struct VerifyOptions {
    std::uint64_t seed = kDefaultSeed;
    std::size_t cases = 20;
    long entry_bound = 12;
    long order_bound = 16;
    std::size_t family_size = 3;
    bool inject_fault = false;
    bool json = false;
};

int run_verify(const VerifyOptions& opts, std::ostream& out, std::ostream& err);

}  // namespace torlim::cli
