#include "fnet/sim.hpp"

#include <algorithm>
#include <cctype>
#include <cstdlib>
#include <map>
#include <optional>
#include <set>
#include <sstream>

namespace fnet {

const char* outcome_name(Outcome o) {
    switch (o) {
        case Outcome::Pass: return "PASS";
        case Outcome::Fail: return "FAIL";
        case Outcome::Inconclusive: return "INCONCLUSIVE";
    }
    return "INCONCLUSIVE";
}

const char* policy_name(Policy p) {
    switch (p) {
        case Policy::Complete: return "complete";
        case Policy::Visible: return "visible";
        case Policy::Free: return "free";
    }
    return "free";
}

namespace {

Value parse_value_text(const std::string& text) {
    if (text == "invalid") return Value::invalid();
    char* end = nullptr;
    double d = std::strtod(text.c_str(), &end);
    if (end != text.c_str()) {
        if (*end == '\0') return Value::num(d);
        // remainder is the unit tag; it must not look like a second number
        std::string unit(end);
        if (!unit.empty() && (std::isalpha(static_cast<unsigned char>(unit[0]))))
            return Value::num(d, unit);
    }
    return Value::sym(text);
}

PathRef split_path(const std::string& text) {
    PathRef path;
    std::string seg;
    std::istringstream in(text);
    while (std::getline(in, seg, '.')) path.push_back(seg);
    return path;
}

}  // namespace

Trace load_trace(const std::string& text, const std::string& file) {
    Trace trace;
    std::istringstream in(text);
    std::string line;
    int lineno = 0;
    int last_step = -1;
    while (std::getline(in, line)) {
        ++lineno;
        if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
        std::istringstream ls(line);
        std::string step_text, source, arrow, target, signal, value_text;
        if (!(ls >> step_text)) continue;  // blank line
        if (!(ls >> source >> arrow >> target >> signal >> value_text) || arrow != "->")
            throw Error("PARSE", file + ":" + std::to_string(lineno) +
                                     ": expected 'STEP SOURCE -> TARGET SIGNAL VALUE'");
        char* end = nullptr;
        long step = std::strtol(step_text.c_str(), &end, 10);
        if (*end != '\0' || step < 0)
            throw Error("PARSE", file + ":" + std::to_string(lineno) +
                                     ": bad step number '" + step_text + "'");
        if (step < last_step)
            throw Error("NON_MONOTONIC_STEP",
                        file + ":" + std::to_string(lineno) +
                            ": step numbers must be non-decreasing");
        last_step = static_cast<int>(step);
        std::string extra;
        if (ls >> extra)
            throw Error("PARSE", file + ":" + std::to_string(lineno) +
                                     ": trailing input '" + extra + "'");
        trace.push_back({static_cast<int>(step), source, target, signal,
                         parse_value_text(value_text), lineno});
    }
    return trace;
}

Trace qualify_trace(const Trace& trace, const NetIndex& index) {
    Trace out = trace;
    for (auto& ev : out) {
        for (auto* endp : {&ev.source, &ev.target}) {
            if (*endp == "ENV") continue;
            Resolution res = index.resolve(split_path(*endp));
            if (res.status == ResolveStatus::Ok) *endp = index.dotted(res.occurrence);
        }
    }
    return out;
}

Trace run_simulation(const FunctionNet& net, const std::vector<StubRule>& stubs,
                     const Trace& stimuli, int horizon) {
    NetIndex index(net);

    struct OwnedRule {
        int owner;
        const StubRule* rule;
    };
    std::vector<OwnedRule> rules;
    for (const auto& r : stubs) {
        Resolution res = index.resolve(r.owner);
        if (res.status != ResolveStatus::Ok)
            throw Error("UNKNOWN_BLOCK",
                        "stub owner '" + path_to_string(r.owner) + "' does not resolve");
        if (!index.signal_exists(r.guard_signal))
            throw Error("UNKNOWN_SIGNAL", "stub guard signal '" + r.guard_signal +
                                              "' does not occur in net '" + net.name + "'");
        for (const auto& [sig, val] : r.emissions)
            if (!index.signal_exists(sig))
                throw Error("UNKNOWN_SIGNAL", "stub emits unknown signal '" + sig + "'");
        rules.push_back({res.occurrence, &r});
    }

    std::map<int, std::vector<std::pair<int, const TraceEvent*>>> stim_by_step;
    for (const auto& ev : stimuli) {
        Resolution res = index.resolve(split_path(ev.target));
        if (res.status != ResolveStatus::Ok)
            throw Error("UNKNOWN_BLOCK",
                        "stimulus target '" + ev.target + "' does not resolve");
        if (!index.signal_exists(ev.signal))
            throw Error("UNKNOWN_SIGNAL", "stimulus signal '" + ev.signal +
                                              "' does not occur in net '" + net.name + "'");
        stim_by_step[ev.step].push_back({res.occurrence, &ev});
    }

    // connectors with resolved endpoints, declaration order
    struct NetConn {
        int index;
        int source;
        int target;
        const Connector* conn;
    };
    std::vector<NetConn> conns;
    for (int i = 0; i < static_cast<int>(net.connectors.size()); ++i) {
        Resolution s = index.resolve(net.connectors[i].source);
        Resolution t = index.resolve(net.connectors[i].target);
        if (s.status == ResolveStatus::Ok && t.status == ResolveStatus::Ok)
            conns.push_back({i, s.occurrence, t.occurrence, &net.connectors[i]});
    }

    Trace trace;
    std::map<std::string, Value> state;       // after the current step's updates
    std::map<std::string, Value> prev_state;  // at the end of the previous step

    auto emit_along = [&](int step, int source_occ, const std::string& signal,
                          const Value& value,
                          std::vector<std::pair<int, TraceEvent>>& out) {
        for (const auto& nc : conns) {
            if (nc.source != source_occ) continue;
            if (std::find(nc.conn->signals.begin(), nc.conn->signals.end(), signal) ==
                nc.conn->signals.end())
                continue;
            out.push_back({nc.index,
                           {step, index.dotted(nc.source), index.dotted(nc.target), signal,
                            value, 0}});
        }
    };

    for (int step = 0; step < horizon; ++step) {
        std::vector<std::pair<int, TraceEvent>> events;

        if (auto it = stim_by_step.find(step); it != stim_by_step.end()) {
            for (const auto& [occ, ev] : it->second) {
                state[ev->signal] = ev->value;
                emit_along(step, occ, ev->signal, ev->value, events);
            }
        }

        // every block reads the same post-stimuli state; one pass, no fixpoint
        std::map<std::string, Value> read_state = state;
        std::vector<std::pair<int, std::pair<std::string, Value>>> fired;  // owner, emission
        std::set<int> fired_owners;
        for (const auto& [owner, rule] : rules) {
            if (fired_owners.count(owner)) continue;  // first matching rule wins
            auto cur = read_state.find(rule->guard_signal);
            if (cur == read_state.end()) continue;  // no sample yet
            std::optional<Value> prev;
            if (auto p = prev_state.find(rule->guard_signal); p != prev_state.end())
                prev = p->second;
            if (!eval_condition(rule->guard, prev, cur->second)) continue;
            fired_owners.insert(owner);
            for (const auto& em : rule->emissions) fired.push_back({owner, em});
        }
        for (const auto& [owner, em] : fired) {
            state[em.first] = em.second;
            emit_along(step, owner, em.first, em.second, events);
        }

        std::stable_sort(events.begin(), events.end(),
                         [](const auto& a, const auto& b) { return a.first < b.first; });
        for (auto& [idx, ev] : events) trace.push_back(std::move(ev));

        prev_state = state;
    }
    return trace;
}

namespace {

bool path_covers(const std::string& ancestor_or_equal, const std::string& path) {
    if (ancestor_or_equal == path) return true;
    return path.size() > ancestor_or_equal.size() &&
           path.compare(0, ancestor_or_equal.size(), ancestor_or_equal) == 0 &&
           path[ancestor_or_equal.size()] == '.';
}

}  // namespace

Verdict run_monitor(const Monitor& mon, const Trace& trace) {
    const int n = static_cast<int>(mon.interactions.size());
    int progress = 0;
    std::map<std::string, Value> last_value;
    int last_step = -1;

    auto in_scope = [&](const std::string& path) {
        for (const auto& p : mon.scope)
            if (path_covers(p, path)) return true;
        return false;
    };

    for (const auto& ev : trace) {
        last_step = ev.step;
        std::optional<Value> prev;
        if (auto it = last_value.find(ev.signal); it != last_value.end()) prev = it->second;

        bool matched = false;
        if (progress < n) {
            const ExpectedInteraction& exp = mon.interactions[progress];
            matched = exp.signal == ev.signal && path_covers(exp.source, ev.source) &&
                      path_covers(exp.target, ev.target) &&
                      eval_condition(exp.condition, prev, ev.value);
        }
        last_value[ev.signal] = ev.value;

        if (matched) {
            ++progress;
            if (progress == n)
                return {Outcome::Pass, "all interactions matched in order", -1, progress};
            continue;
        }

        bool triggered = progress > mon.trigger_index;
        if (!triggered) continue;  // obligations have not started yet

        switch (mon.policy) {
            case Policy::Complete:
                return {Outcome::Fail,
                        "unexpected event " + ev.source + " -> " + ev.target + " " +
                            ev.signal + " under policy complete",
                        ev.step, progress};
            case Policy::Visible:
                if (in_scope(ev.source) && in_scope(ev.target))
                    return {Outcome::Fail,
                            "unmodeled communication " + ev.source + " -> " + ev.target +
                                " " + ev.signal + " between scenario blocks",
                            ev.step, progress};
                break;
            case Policy::Free:
                break;
        }
    }

    if (progress > mon.trigger_index)
        return {Outcome::Fail, "trace ended before the scenario completed", last_step,
                progress};
    return {Outcome::Inconclusive, "trigger interaction never matched", -1, progress};
}

}  // namespace fnet
