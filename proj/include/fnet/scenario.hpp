#ifndef FNET_SCENARIO_HPP
#define FNET_SCENARIO_HPP

#include <string>
#include <vector>

#include "fnet/consistency.hpp"
#include "fnet/model.hpp"

namespace fnet {

/// One expected event of a compiled monitor, endpoints as dotted net paths.
struct ExpectedInteraction {
    std::string source;
    std::string target;
    std::string signal;
    Condition condition;
    bool trigger = false;
};

/// Progress automaton for one scenario: states 0..n, state i expects
/// interaction i+1, state n accepts.
struct Monitor {
    Policy policy = Policy::Free;
    std::vector<ExpectedInteraction> interactions;
    std::vector<std::string> scope;  // dotted paths of blocks shown in the scenario
    int trigger_index = 0;           // first trigger-marked interaction

    int state_count() const { return static_cast<int>(interactions.size()) + 1; }
};

/// Treats the scenario's participants and links as a view and checks C1-C5.
/// Throws Error(BASE_MISMATCH) when the base view names a different net.
ConsistencyReport check_scenario(const Scenario& sc, const FunctionNet& net);

/// Scenario structure problems (non-contiguous sequence numbers, no trigger).
Diagnostics validate_scenario(const Scenario& sc);

/// Resolves interaction endpoints against the net and builds the monitor.
/// Throws Error(EMPTY_SCENARIO) for a scenario without interactions.
Monitor compile_monitor(const Scenario& sc, const FunctionNet& net);

}  // namespace fnet

#endif
