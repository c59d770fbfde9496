#pragma once

// Command-line front end. Everything is callable in-process so the tests can
// drive the same code paths as the executable.
//
// Exit codes: 0 = requested properties hold, 1 = a property check failed,
// 2 = usage or algebraic-precondition error.

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "mdskit/finite_field.hpp"
#include "mdskit/matrix.hpp"

namespace mdskit::cli {

constexpr int kExitOk = 0;
constexpr int kExitPropertyFailed = 1;
constexpr int kExitUsage = 2;

/// args excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

// ---- search ---------------------------------------------------------------

enum class SearchMode { Circulant, Recursive };

struct SearchConfig {
    Field field;
    unsigned theta_k = 0;
    std::optional<Word> beta;  ///< absent: delta = 0
    std::size_t m = 2;
    SearchMode mode = SearchMode::Recursive;
    bool require_mds = true;
    bool require_involutory = false;
    std::size_t limit = 64;
    std::uint64_t seed = 0;
    std::uint64_t samples = std::uint64_t{1} << 16;  ///< candidates drawn when sampling
    unsigned workers = 0;
};

/// Exhaustive enumeration is used up to this many candidates.
constexpr std::uint64_t kExhaustiveLimit = std::uint64_t{1} << 20;

struct SearchRecord {
    std::uint64_t candidate = 0;  ///< index in enumeration (or draw) order
    std::vector<Word> coeffs;     ///< first row, or g low-to-high including the leading 1
    FMatrix matrix;
    bool mds = false;
    bool involutory = false;
};

struct SearchResult {
    bool exhaustive = false;
    std::uint64_t candidates = 0;  ///< size of the enumeration / number of draws
    std::uint64_t examined = 0;    ///< candidates evaluated before the limit was hit
    std::vector<SearchRecord> records;
};

void validate(const SearchConfig& config);
SearchResult run_search(const SearchConfig& config);

// ---- worked-example replay --------------------------------------------------

enum class CheckStatus { Pass, Fail, Erratum, Info };

std::string to_string(CheckStatus s);

struct ExampleCheck {
    std::string name;
    CheckStatus status = CheckStatus::Pass;
    std::string expected;
    std::string computed;
    std::string detail;
};

std::vector<ExampleCheck> replay_paper_examples(const std::string& fixtures_dir);

std::string default_fixture_dir();

}  // namespace mdskit::cli
