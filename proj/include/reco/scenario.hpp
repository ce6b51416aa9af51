#pragma once

#include <optional>
#include <string>
#include <variant>

#include "reco/extensions.hpp"

namespace reco {

struct SingleThreshold {
    double r;
};

struct MultiThreshold {
    double r;
    MultiRecCount counts;
};

struct InfiniteThreshold {};

using ThresholdSpec = std::variant<SingleThreshold, ThresholdPair, MultiThreshold, InfiniteThreshold>;

// Parsed scenario document:
//
//   {
//     "quality": {"qH": 0.4, "q1": 0.2, "q2": 0.2, "qL": 0.2}   or {"Q": .., "sigma": .., "lambda": ..},
//     "sender_types": {"kind": "uniform"} | {"kind": "power", "a": 2}
//                   | {"kind": "piecewise_symmetric", "beta": 0.2, "R_ref": 0.75}
//                   | {"kind": "tabulated", "points": [[i, F(i)], ...]},
//     "receiver_types": same as sender_types (optional),
//     "threshold": 0.5 | {"R1": .., "R2": ..} | {"R": .., "b": .., "d": ..} | "infinite"
//   }
struct Scenario {
    QualityDistribution quality;
    TypeDistribution sender;
    std::optional<TypeDistribution> receiver;
    ThresholdSpec threshold;

    // Single-threshold system at R; receivers default to the sender population.
    RecommendationSystem system_at(double r) const;
    // R carried by the threshold (single or multi variant); throws ValidationError otherwise.
    double single_threshold() const;
    const TypeDistribution& receivers() const { return receiver ? *receiver : sender; }
};

Scenario parse_scenario(const std::string& text);
Scenario load_scenario(const std::string& path);

// Inverse of parse_scenario; quality is always written as four probabilities.
std::string dump_scenario(const Scenario& s);

}  // namespace reco
