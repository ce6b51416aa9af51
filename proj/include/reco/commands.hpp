#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "reco/mc_oracle.hpp"
#include "reco/scenario.hpp"

namespace reco {

struct CommandOptions {
    std::string param = "R";
    std::optional<double> from;
    std::optional<double> to;
    int steps = 99;
    std::uint64_t samples = 1'000'000;
    std::uint64_t seed = 42;
    std::string figure = "interior";
    std::optional<int> lattice;  // region-map: classify an x-by-lattice grid as well
    std::optional<int> b;
    std::optional<int> d;
    bool infinite = false;
    std::optional<double> r1;
    std::optional<double> r2;
};

inline const std::vector<std::string> kCommands{"evaluate", "sweep",    "optimize", "region-map",
                                               "simulate", "decompose", "multi"};

// Runs one command. region-map accepts a missing scenario (Q defaults to 0.1); every other
// command needs one. Errors propagate as exceptions.
std::vector<Record> run_command(const std::string& command, const std::optional<Scenario>& scenario,
                                const CommandOptions& opts);

}  // namespace reco
