#pragma once

#include <optional>
#include <string>

#include "oqho/decay.hpp"

namespace oqho {

// One CLI invocation. Exit codes: 0 success, 1 input/validation problem,
// 2 numeric or stability failure.
struct RunConfig {
    enum class Command {
        validate,
        spectrum,
        decoherence,
        bound,
        asymptotics,
        covariance,
        sweep,
        onemode,
        interconnect,
    };

    Command command = Command::validate;
    std::string input;
    std::string output;  // empty = stdout
    NormKind norm = NormKind::frobenius;
    double eps_min = 0.0;
    double eps_max = 0.3;
    int steps = 31;
    int lambda_grid = 24;
    std::optional<double> t_end;
    std::optional<double> dt;
};

int run(const RunConfig& config);

// argv parsing + dispatch; returns the process exit code.
int cli_main(int argc, const char* const* argv);

}  // namespace oqho
