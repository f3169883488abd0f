#pragma once

// Command implementations behind the `mink` CLI, split from main() so tests
// can drive them directly.  Each command returns a structured payload plus
// the exit code contract: 0 pass, 1 verification failure, 2 usage error,
// 3 no closed form, 4 unstable sweep.

#include <cstdint>
#include <string>
#include <vector>

#include "json.hpp"

namespace mink::cli {

inline constexpr int kExitPass = 0;
inline constexpr int kExitVerifyFail = 1;
inline constexpr int kExitUsage = 2;
inline constexpr int kExitNoClosedForm = 3;
inline constexpr int kExitUnstable = 4;

struct CommandOutput {
    nlohmann::json payload;
    int exit_code = kExitPass;
};

struct BoundArgs {
    std::string kind;  // silverberg | endofield | sp | minkowski
    int g = 0;
    int n = 0;
    std::string field = "Q";
    std::int64_t p = 0;  // 0 = whole product, otherwise a single exponent
};

struct EmpiricalArgs {
    std::string group = "gl";  // gl | sl | sp | gu
    int rank = 1;
    std::string field = "Q";
    std::int64_t p = 0;      // single-prime sweep
    std::int64_t p_max = 0;  // or a product over p <= p_max
    int budget = 500;
    int window = 50;
    std::string cache_path;  // optional sweep memo (json document)
};

struct VerifyArgs {
    std::string claim;  // double | imprimitive1 | imprimitive2 | imprimitive3 |
                        // imprimitive-p2 | table | empirical
    int n_max = 0;      // 0 = claim-specific default
    int d_max = 0;
    int g_max = 0;
    std::int64_t p_max = 0;
    int budget = 500;
    int window = 50;
};

struct GroupArgs {
    std::string action;              // order | witness
    std::vector<std::string> gens;   // matrix literals "0,-1;1,0"
    std::string witness;             // cp-wr-sk:p:k | c4-wr-sk:k
    int cap = 20000;
};

CommandOutput cmd_bound(const BoundArgs& args);
CommandOutput cmd_empirical(const EmpiricalArgs& args);
CommandOutput cmd_verify(const VerifyArgs& args);
CommandOutput cmd_group(const GroupArgs& args);

// format: text | json | csv | markdown.  json output round-trips; csv and
// json are byte-deterministic for identical flags.
std::string render(const CommandOutput& out, const std::string& format);

}  // namespace mink::cli
