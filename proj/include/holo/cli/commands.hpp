#pragma once

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <optional>

namespace holo::cli {

struct Options {
    std::optional<std::filesystem::path> config;
    std::filesystem::path out_dir = ".";
    int threads = 1;
    std::uint64_t seed = 0x5eed;
    double tolerance_scale = 1.0;  // multiplies every threshold of `check`
};

// Exit codes: 0 success, 1 failed invariant, 2 usage, config or runtime error.
int cmd_check(const Options& opts, std::ostream& out, std::ostream& err);
int cmd_figure(const Options& opts, std::ostream& out, std::ostream& err);
int cmd_approx(const Options& opts, std::ostream& out, std::ostream& err);
int cmd_flow(const Options& opts, std::ostream& out, std::ostream& err);
int cmd_spectrum(const Options& opts, std::ostream& out, std::ostream& err);
int cmd_valence(const Options& opts, std::ostream& out, std::ostream& err);

/// Parses the command line and dispatches to a subcommand.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace holo::cli
