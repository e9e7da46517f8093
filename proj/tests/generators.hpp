// Deterministic random model builders shared by the unit and acceptance
// suites. Everything is seeded explicitly so failures reproduce.

#ifndef FNET_TESTS_GENERATORS_HPP
#define FNET_TESTS_GENERATORS_HPP

#include <functional>
#include <map>
#include <random>
#include <string>
#include <vector>

#include "fnet/model.hpp"
#include "fnet/scenario.hpp"
#include "fnet/sim.hpp"

namespace gen {

struct Rng {
    std::mt19937 eng;
    explicit Rng(unsigned seed) : eng(seed) {}
    int below(int n) { return std::uniform_int_distribution<int>(0, n - 1)(eng); }
    int range(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(eng); }
    bool chance(int percent) { return below(100) < percent; }
    template <typename T>
    const T& pick(const std::vector<T>& v) {
        return v[below(static_cast<int>(v.size()))];
    }
};

inline const std::vector<std::string> kSignals = {"SigA", "SigB", "SigC", "SigD"};
inline const std::vector<std::string> kSymbols = {"On", "Off", "Open", "Close"};

/// A generated net plus the vocabulary a view over it may use.
struct NetInfo {
    fnet::FunctionNet net;
    std::vector<std::string> short_names;   // occurrence and definition names
    std::vector<fnet::PathRef> paths;       // full occurrence paths (net root included)
};

/// Random valid net: a tree of uniquely named blocks, sometimes a definition
/// instantiated twice (which makes its names ambiguous as short references),
/// and fully qualified connectors.
inline NetInfo random_net(Rng& rng, int max_blocks) {
    NetInfo info;
    info.net.name = "N";

    int n = rng.range(1, max_blocks);
    std::vector<int> parent(n);
    for (int i = 0; i < n; ++i) parent[i] = rng.below(i + 1) - 1;  // -1 = net root

    std::function<fnet::BlockItem(int)> build = [&](int i) {
        fnet::BlockItem b;
        b.name = "B" + std::to_string(i);
        for (int j = i + 1; j < n; ++j)
            if (parent[j] == i) b.children.push_back(build(j));
        return b;
    };
    for (int i = 0; i < n; ++i)
        if (parent[i] < 0) info.net.items.push_back(build(i));

    // occurrence paths of the plain blocks
    std::vector<fnet::PathRef> paths(n);
    for (int i = 0; i < n; ++i) {
        paths[i] = parent[i] < 0 ? fnet::PathRef{"N"} : paths[parent[i]];
        paths[i].push_back("B" + std::to_string(i));
        info.paths.push_back(paths[i]);
        info.short_names.push_back("B" + std::to_string(i));
    }

    if (rng.chance(35)) {
        fnet::BlockItem def;
        def.kind = fnet::BlockItemKind::BlockDef;
        def.name = "Unit";
        fnet::BlockItem inner;
        inner.name = "Core";
        def.children.push_back(inner);
        info.net.items.push_back(def);
        int copies = rng.range(1, 2);
        for (int c = 0; c < copies; ++c) {
            fnet::BlockItem inst;
            inst.kind = fnet::BlockItemKind::Instance;
            inst.name = "u" + std::to_string(c);
            inst.def_name = "Unit";
            info.net.items.push_back(inst);
            info.paths.push_back({"N", inst.name});
            info.paths.push_back({"N", inst.name, "Core"});
            info.short_names.push_back(inst.name);
        }
        info.short_names.push_back("Unit");
        if (copies == 1) info.short_names.push_back("Core");
    }

    int conns = rng.range(0, 5);
    for (int c = 0; c < conns && info.paths.size() >= 2; ++c) {
        int s = rng.below(static_cast<int>(info.paths.size()));
        int t = rng.below(static_cast<int>(info.paths.size()));
        if (s == t) continue;
        fnet::Connector conn;
        conn.source = info.paths[s];
        conn.target = info.paths[t];
        conn.signals.push_back(rng.pick(kSignals));
        if (rng.chance(30)) {
            std::string extra = rng.pick(kSignals);
            if (extra != conn.signals[0]) conn.signals.push_back(extra);
        }
        info.net.connectors.push_back(conn);
    }
    return info;
}

/// Random candidate view over a generated net. Deliberately allowed to be
/// inconsistent: bogus names, arbitrary nesting, phantom or misrouted
/// connectors all appear with some probability.
inline fnet::View random_view(Rng& rng, const NetInfo& info) {
    fnet::View view;
    view.name = "V";
    view.base = info.net.name;

    int k = rng.range(1, 6);
    std::vector<std::string> names;
    std::vector<fnet::Marker> markers;
    std::vector<std::string> pool = info.short_names;
    for (int i = 0; i < k; ++i) {
        if (rng.chance(12)) {
            names.push_back("Zq" + std::to_string(i));
            markers.push_back(fnet::Marker::Plain);
        } else if (rng.chance(10)) {
            names.push_back("Ext" + std::to_string(i));
            markers.push_back(fnet::Marker::Env);
        } else if (!pool.empty()) {
            int p = rng.below(static_cast<int>(pool.size()));
            names.push_back(pool[p]);
            pool.erase(pool.begin() + p);
            markers.push_back(rng.chance(20) ? fnet::Marker::Ext : fnet::Marker::Plain);
        } else {
            names.push_back("Zq" + std::to_string(i));
            markers.push_back(fnet::Marker::Plain);
        }
    }

    // random forest over the chosen blocks
    int m = static_cast<int>(names.size());
    std::vector<int> vparent(m);
    for (int i = 0; i < m; ++i)
        vparent[i] = rng.chance(55) ? -1 : rng.below(i + 1) - 1;
    std::function<fnet::ViewBlock(int)> build = [&](int i) {
        fnet::ViewBlock vb;
        vb.name = names[i];
        vb.marker = markers[i];
        for (int j = i + 1; j < m; ++j)
            if (vparent[j] == i) vb.children.push_back(build(j));
        return vb;
    };
    for (int i = 0; i < m; ++i)
        if (vparent[i] < 0) view.blocks.push_back(build(i));

    int conns = rng.range(0, 4);
    for (int c = 0; c < conns; ++c) {
        fnet::Connector conn;
        conn.kind = rng.chance(15) ? fnet::LinkKind::Mech : fnet::LinkKind::Signal;
        std::string s = rng.chance(8) ? "Qx" : rng.pick(names);
        std::string t = rng.chance(8) ? "Qy" : rng.pick(names);
        if (s == t) continue;
        conn.source = {s};
        conn.target = {t};
        if (conn.kind == fnet::LinkKind::Signal) {
            if (!info.net.connectors.empty() && rng.chance(70)) {
                conn.signals = rng.pick(info.net.connectors).signals;
                if (conn.signals.size() > 1 && rng.chance(50)) conn.signals.pop_back();
            } else {
                conn.signals.push_back(rng.chance(25) ? "Ghost" : rng.pick(kSignals));
            }
        }
        view.connectors.push_back(conn);
    }
    return view;
}

inline fnet::Value random_value(Rng& rng, bool allow_symbol) {
    if (allow_symbol && rng.chance(35)) return fnet::Value::sym(rng.pick(kSymbols));
    if (rng.chance(10)) return fnet::Value::invalid();
    std::string unit = rng.chance(40) ? "km/h" : "";
    return fnet::Value::num(rng.range(-20, 120), unit);
}

inline fnet::Condition random_condition(Rng& rng) {
    fnet::Condition cond;
    int atoms = rng.chance(20) ? 2 : 1;
    for (int i = 0; i < atoms; ++i) {
        fnet::ConditionAtom atom;
        int roll = rng.below(10);
        if (roll == 0) {
            atom.kind = fnet::ConditionAtom::Kind::IsInvalid;
        } else if (roll <= 2) {
            atom.kind = fnet::ConditionAtom::Kind::Transition;
            atom.from = fnet::Value::sym(rng.pick(kSymbols));
            atom.to = fnet::Value::sym(rng.pick(kSymbols));
        } else {
            atom.kind = fnet::ConditionAtom::Kind::Cmp;
            atom.op = static_cast<fnet::CmpOp>(rng.below(6));
            bool eq = atom.op == fnet::CmpOp::Equals || atom.op == fnet::CmpOp::BecomesEqual;
            atom.value = random_value(rng, eq);
            if (atom.value.is_invalid() && !eq) atom.value = fnet::Value::num(rng.range(0, 99));
        }
        cond.atoms.push_back(atom);
    }
    return cond;
}

/// Random standalone monitor over a fixed four-block vocabulary, plus traces
/// to feed it. Used for the policy and prefix properties.
inline const std::vector<std::string> kMonBlocks = {"A", "B", "C", "D"};
inline const std::vector<std::string> kMonSignals = {"S1", "S2", "S3"};

inline fnet::Monitor random_monitor(Rng& rng) {
    fnet::Monitor mon;
    mon.policy = static_cast<fnet::Policy>(rng.below(3));
    int n = rng.range(1, 5);
    mon.trigger_index = rng.below(n);
    std::vector<std::string> scope_seen;
    for (int i = 0; i < n; ++i) {
        fnet::ExpectedInteraction exp;
        exp.source = kMonBlocks[rng.below(3)];
        exp.target = kMonBlocks[rng.below(3)];
        while (exp.target == exp.source) exp.target = kMonBlocks[rng.below(3)];
        exp.signal = rng.pick(kMonSignals);
        exp.condition = random_condition(rng);
        exp.trigger = i == mon.trigger_index;
        for (const auto& p : {exp.source, exp.target})
            if (std::find(scope_seen.begin(), scope_seen.end(), p) == scope_seen.end())
                scope_seen.push_back(p);
        mon.interactions.push_back(exp);
    }
    mon.scope = scope_seen;
    return mon;
}

inline fnet::Trace random_trace(Rng& rng, int max_events) {
    fnet::Trace trace;
    int n = rng.range(0, max_events);
    int step = 0;
    for (int i = 0; i < n; ++i) {
        if (rng.chance(50)) ++step;
        fnet::TraceEvent ev;
        ev.step = step;
        ev.source = rng.pick(kMonBlocks);
        ev.target = rng.pick(kMonBlocks);
        while (ev.target == ev.source) ev.target = rng.pick(kMonBlocks);
        ev.signal = rng.pick(kMonSignals);
        ev.value = random_value(rng, true);
        trace.push_back(ev);
    }
    return trace;
}

/// Events that walk a monitor through its interactions [0, upto] in order:
/// each expected interaction gets one event (plus a set-up event when its
/// condition needs history). Used to reach the triggered region reliably.
inline fnet::Trace satisfying_events(const fnet::Monitor& mon, int upto) {
    fnet::Trace out;
    std::map<std::string, fnet::Value> last;
    int step = 0;
    auto push = [&](const fnet::ExpectedInteraction& exp, const fnet::Value& v) {
        out.push_back({step++, exp.source, exp.target, exp.signal, v, 0});
        last[exp.signal] = v;
    };
    for (int i = 0; i <= upto && i < static_cast<int>(mon.interactions.size()); ++i) {
        const auto& exp = mon.interactions[i];
        const auto& atom = exp.condition.atoms.front();
        using K = fnet::ConditionAtom::Kind;
        switch (atom.kind) {
            case K::IsInvalid:
                push(exp, fnet::Value::invalid());
                break;
            case K::Transition: {
                auto it = last.find(exp.signal);
                if (it == last.end() || !(it->second == atom.from)) push(exp, atom.from);
                push(exp, atom.to);
                break;
            }
            case K::Cmp: {
                const fnet::Value& v = atom.value;
                switch (atom.op) {
                    case fnet::CmpOp::Equals:
                        push(exp, v);
                        break;
                    case fnet::CmpOp::BecomesEqual: {
                        fnet::Value other = v.is_symbol()
                                                ? fnet::Value::sym(v.symbol + "X")
                                                : fnet::Value::num(v.number + 1, v.unit);
                        push(exp, other);
                        push(exp, v);
                        break;
                    }
                    case fnet::CmpOp::Greater:
                        push(exp, fnet::Value::num(v.number + 1, v.unit));
                        break;
                    case fnet::CmpOp::Less:
                        push(exp, fnet::Value::num(v.number - 1, v.unit));
                        break;
                    case fnet::CmpOp::BecomesGreater:
                        push(exp, fnet::Value::num(v.number, v.unit));
                        push(exp, fnet::Value::num(v.number + 1, v.unit));
                        break;
                    case fnet::CmpOp::BecomesLess:
                        push(exp, fnet::Value::num(v.number, v.unit));
                        push(exp, fnet::Value::num(v.number - 1, v.unit));
                        break;
                }
                break;
            }
        }
    }
    return out;
}

/// Random full model with internally valid cross references, for the
/// parse/render round trip.
inline fnet::Model random_model(Rng& rng) {
    fnet::Model model;
    NetInfo info = random_net(rng, 6);
    model.elements.push_back(info.net);

    fnet::View view = random_view(rng, info);
    view.name = "V0";
    model.elements.push_back(view);

    if (rng.chance(60)) {
        fnet::View var = random_view(rng, info);
        var.name = "V1";
        var.kind = fnet::ViewKind::Variant;
        var.variant_of = "V0";
        model.elements.push_back(var);

        fnet::VariantSet vs;
        vs.name = "VS";
        vs.feature_view = "V0";
        vs.variants.push_back({"base", "V1", {}});
        model.elements.push_back(vs);
    }

    if (rng.chance(70)) {
        fnet::Scenario sc;
        sc.name = "Sc";
        sc.base_view = "V0";
        sc.policy = static_cast<fnet::Policy>(rng.below(3));
        int n = rng.range(1, 4);
        int trig = rng.below(n);
        for (int i = 0; i < n; ++i) {
            fnet::Interaction ia;
            ia.seq = i + 1;
            ia.trigger = i == trig;
            ia.source = {rng.pick(info.short_names)};
            ia.target = {rng.pick(info.short_names)};
            ia.signal = rng.pick(kSignals);
            ia.condition = random_condition(rng);
            sc.interactions.push_back(ia);
        }
        model.elements.push_back(sc);
    }

    if (rng.chance(50)) {
        fnet::ModeMachine mm;
        mm.name = "MM";
        mm.base = info.net.name;
        mm.states.push_back({"Up", "V0", {}});
        mm.states.push_back({"Down", "V0", {}});
        mm.initial = "Up";
        fnet::ModeTransition tr;
        tr.from = "Up";
        tr.to = "Down";
        tr.signal = rng.pick(kSignals);
        tr.condition = random_condition(rng);
        mm.transitions.push_back(tr);
        model.elements.push_back(mm);
    }

    if (rng.chance(40)) {
        fnet::StubSet ss;
        ss.name = "St";
        ss.base = info.net.name;
        fnet::StubRule rule;
        rule.owner = {rng.pick(info.short_names)};
        rule.guard_signal = rng.pick(kSignals);
        rule.guard = random_condition(rng);
        rule.emissions.push_back({rng.pick(kSignals), random_value(rng, true)});
        ss.rules.push_back(rule);
        model.elements.push_back(ss);
    }
    return model;
}

}  // namespace gen

#endif
