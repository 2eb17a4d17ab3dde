#ifndef HALLINV_TOOLS_COMMANDS_HPP
#define HALLINV_TOOLS_COMMANDS_HPP

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace hallinv::cli {

enum ExitCode : int { kPass = 0, kVerificationFailed = 1, kUsageError = 2 };

enum class OutputMode { human, json };

struct Tolerances {
    double coincidence = 1e-9;
    double separation_floor = 1e-6;
    double isotropy = 1e-8;
};

struct CommandConfig {
    std::string subcommand;
    std::string input_path;
    std::uint64_t seed = 1;
    std::size_t trials = 1000;
    Tolerances tolerances;
    OutputMode output = OutputMode::human;

    // subcommand specific
    bool exact = false;
    std::string source = "paper";
    std::size_t rows_multiplier = 2;
    std::optional<int> witness_case;
    std::vector<double> current;
    std::vector<double> magnetic;
};

/// Parses argv and runs the selected subcommand. Returns an ExitCode.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

int cmd_invariants(const CommandConfig& cfg, std::ostream& out, std::ostream& err);
int cmd_verify_integrity(const CommandConfig& cfg, std::ostream& out, std::ostream& err);
int cmd_verify_function_basis(const CommandConfig& cfg, std::ostream& out, std::ostream& err);
int cmd_isotropy_fuzz(const CommandConfig& cfg, std::ostream& out, std::ostream& err);
int cmd_field(const CommandConfig& cfg, std::ostream& out, std::ostream& err);

}  // namespace hallinv::cli

#endif  // HALLINV_TOOLS_COMMANDS_HPP
