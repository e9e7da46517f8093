#ifndef FNET_MODES_HPP
#define FNET_MODES_HPP

#include <string>
#include <utility>
#include <vector>

#include "fnet/consistency.hpp"
#include "fnet/model.hpp"
#include "fnet/sim.hpp"

namespace fnet {

/// Every mode's view must be consistent with the net and every transition
/// must name a signal of the net. Findings carry the mode or transition as
/// subject. Throws Error(BASE_MISMATCH) on a foreign base net.
ConsistencyReport check_mode_machine(const ModeMachine& mm, const Model& model,
                                     const FunctionNet& net);

/// Each variant view must specialize the feature view (C6 on top of C1-C5).
ConsistencyReport check_variants(const VariantSet& vs, const Model& model,
                                 const FunctionNet& net);

/// Mode machine structure: initial/transition endpoints declared, views exist.
Diagnostics validate_mode_machine(const ModeMachine& mm, const Model& model);
Diagnostics validate_variant_set(const VariantSet& vs, const Model& model);

/// Deterministic mode walk over a trace: starts in the initial mode at step 0;
/// from step 1 on, the first transition (declaration order) whose condition
/// holds on the signal's (prev, curr) samples fires; at most one per step.
/// Entries are emitted on change only.
std::vector<std::pair<int, std::string>> mode_timeline(const ModeMachine& mm,
                                                       const Trace& trace);

}  // namespace fnet

#endif
