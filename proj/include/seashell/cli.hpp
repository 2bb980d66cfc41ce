#ifndef SEASHELL_CLI_HPP
#define SEASHELL_CLI_HPP

#include <cstddef>
#include <optional>
#include <string>

#include "seashell/reconstruction.hpp"

namespace seashell {

enum class Command { reconstruct, forward, roundtrip, certify, detect };

struct RunConfig {
    Command command = Command::reconstruct;
    std::string input;
    std::string output;
    std::size_t m = 600;
    ShiftMode shift = ShiftMode::automatic;
    DiffScheme scheme = DiffScheme::central2;
    std::optional<double> M;
    std::optional<std::size_t> n_tilde;
    std::optional<double> trivial_tol;
};

// Executes one command. Exit codes: 0 success, 2 validation error,
// 3 numerical failure, 4 certificate refusal. Messages go to stderr.
int run(const RunConfig& config);

} // namespace seashell

#endif
