// Point blow-up at the origin: strict transforms of foliations and branches,
// dicriticality, and the driver that resolves a branch while tracking the
// invariant combination phi = 3*mu - 4*tau + gsv step by step.
#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "folinv/foliation.hpp"
#include "folinv/invariants.hpp"

namespace folinv {

// Chart1 covers tangent directions y = s*x via (x, y) -> (x, x*y);
// Chart2 covers the vertical direction via (x, y) -> (x*y, y).  The
// exceptional divisor is {x = 0} in Chart1 and {y = 0} in Chart2.
enum class Chart { Chart1 = 1, Chart2 = 2 };

struct BlowupResult {
    Chart chart = Chart::Chart1;
    Foliation strict_form;
    std::uint32_t divided_power = 0; // k, always nu or nu + 1
    bool dicritical = false;         // exceptional divisor not invariant
    std::uint32_t m_p = 0;           // nu + 1 when dicritical, else nu
    std::optional<Rat> center;       // exceptional coordinate of the base point
};

// Strict transform of the foliation in the given chart (center 0).
// Requires nu >= 1 (throws RegularFoliation).
BlowupResult blowup_foliation(const Foliation& F, Chart chart);

struct BranchBlowup {
    Chart chart = Chart::Chart1;
    Rat center;
    Poly strict;
};

// Chart selection, tangent translation and strict transform of a branch.
// Requires ord >= 1; propagates NotUnitangent on reducible or irrational
// tangent cones.
BranchBlowup blowup_branch(const Poly& f);

struct PairBlowup {
    Foliation foliation;
    Poly branch;
    BlowupResult result;
};

// Blows foliation and branch up together in the branch's chart, translated
// so the strict branch passes through the new origin.
PairBlowup blowup_pair(const Foliation& F, const Poly& f);

struct ResolutionStep {
    Foliation foliation;
    Poly branch;
    std::uint32_t branch_ord = 0;
    std::uint64_t mu = 0, tau = 0;
    std::int64_t gsv = 0;
    std::int64_t phi = 0; // 3*mu - 4*tau + gsv

    // Blow-up data that produced this step; absent on the initial step.
    struct Arrival {
        Chart chart;
        Rat center;
        std::uint32_t divided_power;
        bool dicritical;
        std::uint32_t m_p;
    };
    std::optional<Arrival> arrival;
};

struct ResolutionTrace {
    std::vector<ResolutionStep> steps;

    nlohmann::json to_json() const;
    std::string to_dot() const;
};

// Iterates blowup_pair until the strict branch is smooth; records the
// invariants at every step.  Throws MaxStepsExceeded past max_steps.
ResolutionTrace resolve_branch(const Foliation& F, const Separatrix& B,
                               std::uint32_t max_steps = 30);

} // namespace folinv
