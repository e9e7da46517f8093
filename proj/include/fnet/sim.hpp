#ifndef FNET_SIM_HPP
#define FNET_SIM_HPP

#include <string>
#include <vector>

#include "fnet/model.hpp"
#include "fnet/net_index.hpp"
#include "fnet/scenario.hpp"
#include "fnet/value.hpp"

namespace fnet {

struct TraceEvent {
    int step = 0;
    std::string source;  // dotted path, or ENV for stimuli
    std::string target;
    std::string signal;
    Value value;
    int line = 0;  // source line when loaded from a file

    bool operator==(const TraceEvent& o) const {
        return step == o.step && source == o.source && target == o.target &&
               signal == o.signal && value == o.value;
    }
};

using Trace = std::vector<TraceEvent>;

enum class Outcome { Pass, Fail, Inconclusive };

struct Verdict {
    Outcome outcome = Outcome::Inconclusive;
    std::string reason;
    int failing_step = -1;  // Fail only
    int matched = 0;        // interactions matched in order
};

const char* outcome_name(Outcome o);
const char* policy_name(Policy p);

/// Line format: `STEP SOURCE -> TARGET SIGNAL VALUE`, `#` comments.
/// Throws Error(PARSE | NON_MONOTONIC_STEP).
Trace load_trace(const std::string& text, const std::string& file = "<trace>");

/// Synchronous execution: per step, stimuli update signal state first, every
/// block then reads the same state and fires at most one rule; emissions are
/// appended as events of this step and become visible next step (single pass,
/// no intra-step fixpoint). Signal values persist between steps.
/// Throws Error(UNKNOWN_SIGNAL | UNKNOWN_BLOCK) for bad stubs or stimuli.
Trace run_simulation(const FunctionNet& net, const std::vector<StubRule>& stubs,
                     const Trace& stimuli, int horizon);

/// Scans the trace in order. Obligations start at the trigger interaction;
/// earlier non-matching events are never judged. After the trigger, policy
/// decides non-matching events: COMPLETE fails on any, VISIBLE fails when
/// both endpoints are in scope, FREE ignores all. The run terminates at the
/// first verdict.
Verdict run_monitor(const Monitor& mon, const Trace& trace);

/// Rewrites short-name endpoints of a loaded trace to qualified net paths
/// where they resolve uniquely; unresolvable names are left verbatim.
Trace qualify_trace(const Trace& trace, const NetIndex& index);

}  // namespace fnet

#endif
