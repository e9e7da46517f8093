#include "fnet/scenario.hpp"

#include <algorithm>
#include <set>

namespace fnet {

namespace {

/// Participants of a scenario as dotted net paths, declaration order, unique.
std::vector<int> participants(const Scenario& sc, const NetIndex& index,
                              ConsistencyReport* report) {
    std::vector<int> occs;
    std::set<int> seen;
    for (const auto& ia : sc.interactions) {
        for (const auto* ref : {&ia.source, &ia.target}) {
            Resolution res = index.resolve(*ref);
            if (res.status != ResolveStatus::Ok) {
                if (report)
                    report->findings.push_back(
                        {"C1", {path_to_string(*ref)},
                         "interaction endpoint '" + path_to_string(*ref) +
                             "' does not resolve in the net",
                         ia.span});
                continue;
            }
            if (seen.insert(res.occurrence).second) occs.push_back(res.occurrence);
        }
    }
    return occs;
}

}  // namespace

ConsistencyReport check_scenario(const Scenario& sc, const FunctionNet& net) {
    NetIndex index(net);
    ConsistencyReport report;

    std::vector<int> occs = participants(sc, index, &report);
    std::set<std::string> present;
    for (int o : occs) present.insert(index.dotted(o));

    // C2 holds trivially (the induced view is flat); C3 over participant pairs.
    for (int a : occs)
        for (int b : occs)
            if (a != b && index.is_ancestor(a, b))
                report.findings.push_back(
                    {"C3", {index.dotted(a), index.dotted(b)},
                     "'" + index.dotted(a) + "' contains '" + index.dotted(b) +
                         "' in the net but the scenario shows them side by side",
                     sc.span});

    // C4/C5 per interaction link
    for (const auto& ia : sc.interactions) {
        Resolution src = index.resolve(ia.source);
        Resolution tgt = index.resolve(ia.target);
        if (src.status != ResolveStatus::Ok || tgt.status != ResolveStatus::Ok) continue;
        MatchResult mr = match_connector(src.occurrence, tgt.occurrence, {ia.signal},
                                         index, present);
        if (mr.matched) {
            if (mr.lifted_source || mr.lifted_target)
                report.notes.push_back("interaction " + std::to_string(ia.seq) +
                                       " matches the net via superblock lifting");
            continue;
        }
        if (mr.signal_candidates)
            report.findings.push_back(
                {"C5", {path_to_string(ia.source), path_to_string(ia.target)},
                 "no net connector carrying '" + ia.signal + "' runs between the blocks of interaction " +
                     std::to_string(ia.seq),
                 ia.span});
        else
            report.findings.push_back(
                {"C4", {path_to_string(ia.source), path_to_string(ia.target)},
                 "the net has no connector carrying '" + ia.signal + "' (interaction " +
                     std::to_string(ia.seq) + ")",
                 ia.span});
    }

    report.normalize();
    return report;
}

Diagnostics validate_scenario(const Scenario& sc) {
    Diagnostics diags;
    if (sc.interactions.empty()) {
        diags.push_back({"EMPTY_SCENARIO", sc.name,
                         "scenario '" + sc.name + "' has no interactions", sc.span});
        return diags;
    }
    std::set<int> seqs;
    for (const auto& ia : sc.interactions) seqs.insert(ia.seq);
    if (static_cast<int>(seqs.size()) != static_cast<int>(sc.interactions.size()) ||
        *seqs.begin() != 1 ||
        *seqs.rbegin() != static_cast<int>(sc.interactions.size()))
        diags.push_back({"BAD_SEQUENCE", sc.name,
                         "interaction numbers must be unique and contiguous from 1",
                         sc.span});
    bool ordered = std::is_sorted(sc.interactions.begin(), sc.interactions.end(),
                                  [](const Interaction& a, const Interaction& b) {
                                      return a.seq < b.seq;
                                  });
    if (!ordered)
        diags.push_back({"BAD_SEQUENCE", sc.name,
                         "interactions must be declared in ascending order", sc.span});
    bool any_trigger = std::any_of(sc.interactions.begin(), sc.interactions.end(),
                                   [](const Interaction& ia) { return ia.trigger; });
    if (!any_trigger)
        diags.push_back({"NO_TRIGGER", sc.name,
                         "scenario '" + sc.name +
                             "' has no trigger interaction; the first one is assumed",
                         sc.span});
    return diags;
}

Monitor compile_monitor(const Scenario& sc, const FunctionNet& net) {
    if (sc.interactions.empty())
        throw Error("EMPTY_SCENARIO", "scenario '" + sc.name + "' has no interactions");
    NetIndex index(net);
    Monitor mon;
    mon.policy = sc.policy;
    mon.trigger_index = -1;
    std::set<std::string> scope_seen;
    for (std::size_t i = 0; i < sc.interactions.size(); ++i) {
        const Interaction& ia = sc.interactions[i];
        ExpectedInteraction exp;
        auto qualify = [&](const PathRef& ref) {
            Resolution res = index.resolve(ref);
            return res.status == ResolveStatus::Ok ? index.dotted(res.occurrence)
                                                   : path_to_string(ref);
        };
        exp.source = qualify(ia.source);
        exp.target = qualify(ia.target);
        exp.signal = ia.signal;
        exp.condition = ia.condition;
        exp.trigger = ia.trigger;
        if (ia.trigger && mon.trigger_index < 0) mon.trigger_index = static_cast<int>(i);
        for (const auto& p : {exp.source, exp.target})
            if (scope_seen.insert(p).second) mon.scope.push_back(p);
        mon.interactions.push_back(std::move(exp));
    }
    // a scenario without an explicit trigger starts its obligations at once
    if (mon.trigger_index < 0) mon.trigger_index = 0;
    return mon;
}

}  // namespace fnet
