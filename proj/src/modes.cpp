#include "fnet/modes.hpp"

#include <map>
#include <optional>
#include <set>

namespace fnet {

ConsistencyReport check_mode_machine(const ModeMachine& mm, const Model& model,
                                     const FunctionNet& net) {
    if (mm.base != net.name)
        throw Error("BASE_MISMATCH", "modes '" + mm.name + "' are based on net '" +
                                         mm.base + "', not '" + net.name + "'");
    NetIndex index(net);
    ConsistencyReport report;

    for (const auto& st : mm.states) {
        const View* view = model.find_view(st.view);
        if (!view) continue;  // reported by verify_references
        ConsistencyReport vr = check_view(*view, index);
        for (auto f : vr.findings) {
            f.subjects.insert(f.subjects.begin(), st.mode);
            f.message = "mode '" + st.mode + "': " + f.message;
            report.findings.push_back(std::move(f));
        }
    }

    for (const auto& tr : mm.transitions) {
        if (!index.signal_exists(tr.signal))
            report.findings.push_back(
                {"C4", {tr.from + "->" + tr.to},
                 "transition " + tr.from + " -> " + tr.to + " watches signal '" + tr.signal +
                     "' which does not occur in the net",
                 tr.span});
    }

    report.normalize();
    return report;
}

ConsistencyReport check_variants(const VariantSet& vs, const Model& model,
                                 const FunctionNet& net) {
    const View* feature = model.find_view(vs.feature_view);
    if (!feature)
        throw Error("BASE_MISMATCH",
                    "variants '" + vs.name + "' reference unknown view '" + vs.feature_view + "'");
    if (feature->base != net.name)
        throw Error("BASE_MISMATCH", "feature view '" + feature->name +
                                         "' is not based on net '" + net.name + "'");
    ConsistencyReport report;
    for (const auto& v : vs.variants) {
        const View* view = model.find_view(v.view);
        if (!view) continue;
        ConsistencyReport vr = check_specialization(*view, *feature, net);
        for (auto f : vr.findings) {
            f.subjects.insert(f.subjects.begin(), v.name);
            f.message = "variant '" + v.name + "': " + f.message;
            report.findings.push_back(std::move(f));
        }
        for (const auto& n : vr.notes) report.notes.push_back("variant '" + v.name + "': " + n);
    }
    report.normalize();
    return report;
}

Diagnostics validate_mode_machine(const ModeMachine& mm, const Model& model) {
    Diagnostics diags;
    std::set<std::string> modes;
    for (const auto& st : mm.states) {
        if (!modes.insert(st.mode).second)
            diags.push_back({"DUPLICATE_MODE", st.mode,
                             "mode '" + st.mode + "' declared twice", st.span});
        if (!model.find_view(st.view))
            diags.push_back({"UNKNOWN_VIEW", st.view,
                             "mode '" + st.mode + "' references unknown view '" + st.view + "'",
                             st.span});
    }
    if (!modes.count(mm.initial))
        diags.push_back({"UNKNOWN_MODE", mm.initial,
                         "initial mode '" + mm.initial + "' is not declared", mm.span});
    for (const auto& tr : mm.transitions)
        for (const auto& end : {tr.from, tr.to})
            if (!modes.count(end))
                diags.push_back({"UNKNOWN_MODE", end,
                                 "transition endpoint '" + end + "' is not a declared mode",
                                 tr.span});
    return diags;
}

Diagnostics validate_variant_set(const VariantSet& vs, const Model& model) {
    Diagnostics diags;
    std::set<std::string> names;
    for (const auto& v : vs.variants) {
        if (!names.insert(v.name).second)
            diags.push_back({"DUPLICATE_VARIANT", v.name,
                             "variant '" + v.name + "' declared twice", v.span});
        if (!model.find_view(v.view))
            diags.push_back({"UNKNOWN_VIEW", v.view,
                             "variant '" + v.name + "' references unknown view '" + v.view + "'",
                             v.span});
    }
    return diags;
}

std::vector<std::pair<int, std::string>> mode_timeline(const ModeMachine& mm,
                                                       const Trace& trace) {
    std::vector<std::pair<int, std::string>> timeline;
    std::string mode = mm.initial;
    timeline.push_back({0, mode});
    if (trace.empty()) return timeline;

    int max_step = trace.back().step;
    std::map<std::string, Value> state;      // value after the current step
    std::map<std::string, Value> prev_state; // value after the previous step
    std::size_t next_event = 0;

    for (int step = 0; step <= max_step; ++step) {
        while (next_event < trace.size() && trace[next_event].step == step) {
            state[trace[next_event].signal] = trace[next_event].value;
            ++next_event;
        }
        // step 0 only establishes the initial samples
        if (step > 0) {
            for (const auto& tr : mm.transitions) {
                if (tr.from != mode) continue;
                auto cur = state.find(tr.signal);
                if (cur == state.end()) continue;
                std::optional<Value> prev;
                if (auto p = prev_state.find(tr.signal); p != prev_state.end())
                    prev = p->second;
                if (!eval_condition(tr.condition, prev, cur->second)) continue;
                if (tr.to != mode) {
                    mode = tr.to;
                    timeline.push_back({step, mode});
                }
                break;  // at most one transition per step
            }
        }
        prev_state = state;
    }
    return timeline;
}

}  // namespace fnet
