#ifndef FNET_CONSISTENCY_HPP
#define FNET_CONSISTENCY_HPP

#include <optional>
#include <set>
#include <string>
#include <vector>

#include "fnet/diagnostics.hpp"
#include "fnet/model.hpp"
#include "fnet/net_index.hpp"

namespace fnet {

/// Result of matching one view connector against the net (conditions 4/5).
struct MatchResult {
    bool matched = false;
    int net_connector = -1;  // declaration index
    bool lifted_source = false;
    bool lifted_target = false;
    /// When unmatched: true if some net connector carries the required
    /// signals but no compatible endpoints exist (a C5 problem rather than C4).
    bool signal_candidates = false;
};

/// Flattened, name-resolved form of a view used by the checks. Also reused
/// for the view induced by a scenario.
struct ResolvedViewBlock {
    Marker marker = Marker::Plain;
    std::string name;
    int parent = -1;            // index into blocks, -1 at top level
    int occurrence = -1;        // net occurrence for Plain/Ext, -1 otherwise
    Resolution resolution;      // raw outcome for diagnostics
    SourceSpan span;
};

struct ResolvedView {
    std::vector<ResolvedViewBlock> blocks;
    std::set<std::string> present_paths;  // dotted net paths shown in the view

    int block_by_name(const std::string& name) const;
    /// True when the view's own nesting (transitively) places a above b.
    bool nests(int a, int b) const;
};

ResolvedView resolve_view(const View& view, const NetIndex& index);

/// Conditions 1-5 of a view against its complete net.
/// Throws Error(BASE_MISMATCH) when view.base names a different net.
ConsistencyReport check_view(const View& view, const FunctionNet& net);
ConsistencyReport check_view(const View& view, const NetIndex& index);

/// Condition 4/5 matcher for a single signal connector whose endpoints are
/// given as net occurrences. `present` are the net paths shown in the view:
/// lifting to a superblock is only allowed when the exact endpoint is absent.
MatchResult match_connector(int source_occ, int target_occ,
                            const std::vector<std::string>& labels,
                            const NetIndex& index,
                            const std::set<std::string>& present);

/// Conditions 1-5 for both views plus condition 6 (spec is a subset of base).
/// Throws Error(BASE_MISMATCH) when the views name different nets.
ConsistencyReport check_specialization(const View& spec, const View& base,
                                       const FunctionNet& net);

/// View-local well-formedness (duplicate block names, connector endpoints
/// that name no view block, M/H/E links labeled with signals but no env
/// endpoint). These are diagnostics, not consistency findings.
Diagnostics validate_view(const View& view);

}  // namespace fnet

#endif
