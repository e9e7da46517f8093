#include "fnet/consistency.hpp"

#include <algorithm>
#include <functional>
#include <map>

namespace fnet {

void ConsistencyReport::normalize() {
    std::stable_sort(findings.begin(), findings.end(),
                     [](const Finding& a, const Finding& b) {
                         if (a.condition != b.condition) return a.condition < b.condition;
                         return a.subjects < b.subjects;
                     });
}

int ResolvedView::block_by_name(const std::string& name) const {
    for (std::size_t i = 0; i < blocks.size(); ++i)
        if (blocks[i].name == name) return static_cast<int>(i);
    return -1;
}

bool ResolvedView::nests(int a, int b) const {
    for (int p = blocks[b].parent; p >= 0; p = blocks[p].parent)
        if (p == a) return true;
    return false;
}

ResolvedView resolve_view(const View& view, const NetIndex& index) {
    ResolvedView rv;
    std::function<void(const ViewBlock&, int)> flatten = [&](const ViewBlock& vb, int parent) {
        ResolvedViewBlock b;
        b.marker = vb.marker;
        b.name = vb.name;
        b.parent = parent;
        b.span = vb.span;
        if (vb.marker != Marker::Env) {
            b.resolution = index.resolve({vb.name});
            if (b.resolution.status == ResolveStatus::Ok) {
                b.occurrence = b.resolution.occurrence;
                rv.present_paths.insert(index.dotted(b.occurrence));
            }
        }
        int idx = static_cast<int>(rv.blocks.size());
        rv.blocks.push_back(std::move(b));
        for (const auto& child : vb.children) flatten(child, idx);
    };
    for (const auto& vb : view.blocks) flatten(vb, -1);
    return rv;
}

namespace {

/// Endpoint compatibility per condition 5: exact, or the view endpoint is a
/// net-ancestor of the actual endpoint and the exact endpoint is not itself
/// shown in the view.
bool endpoint_compatible(int view_occ, int net_occ, const NetIndex& index,
                         const std::set<std::string>& present, bool* lifted) {
    if (view_occ == net_occ) {
        *lifted = false;
        return true;
    }
    if (index.is_ancestor(view_occ, net_occ) && !present.count(index.dotted(net_occ))) {
        *lifted = true;
        return true;
    }
    return false;
}

struct ViewChecker {
    const NetIndex& index;
    const ResolvedView& rv;
    ConsistencyReport& report;

    void finding(const std::string& cond, std::vector<std::string> subjects,
                 const std::string& message, const SourceSpan& span) {
        report.findings.push_back({cond, std::move(subjects), message, span});
    }

    void check_c1() {
        for (const auto& b : rv.blocks) {
            if (b.marker == Marker::Env) continue;
            if (b.resolution.status == ResolveStatus::NotFound)
                finding("C1", {b.name},
                        "block '" + b.name + "' is not part of the function net", b.span);
            else if (b.resolution.status == ResolveStatus::Ambiguous) {
                std::string cands;
                for (int c : b.resolution.candidates) {
                    if (!cands.empty()) cands += ", ";
                    cands += index.dotted(c);
                }
                finding("C1", {b.name},
                        "block '" + b.name + "' is ambiguous in the net: " + cands, b.span);
            }
        }
    }

    void check_c2() {
        for (std::size_t i = 0; i < rv.blocks.size(); ++i) {
            const auto& b = rv.blocks[i];
            if (b.parent < 0) continue;
            const auto& p = rv.blocks[b.parent];
            if (b.occurrence < 0 || p.occurrence < 0) continue;  // env or unresolved
            if (!index.is_ancestor(p.occurrence, b.occurrence))
                finding("C2", {p.name, b.name},
                        "view nests '" + b.name + "' inside '" + p.name +
                            "' but the net has no such whole-part relationship",
                        b.span);
        }
    }

    void check_c3() {
        for (std::size_t i = 0; i < rv.blocks.size(); ++i) {
            for (std::size_t j = 0; j < rv.blocks.size(); ++j) {
                if (i == j) continue;
                const auto& a = rv.blocks[i];
                const auto& b = rv.blocks[j];
                if (a.occurrence < 0 || b.occurrence < 0) continue;
                if (!index.is_ancestor(a.occurrence, b.occurrence)) continue;
                if (!rv.nests(static_cast<int>(i), static_cast<int>(j)))
                    finding("C3", {a.name, b.name},
                            "'" + a.name + "' contains '" + b.name +
                                "' in the net but not in the view",
                            b.span);
            }
        }
    }

    void check_c4_c5(const std::vector<Connector>& connectors,
                     std::vector<MatchResult>* out_matches = nullptr) {
        for (const auto& conn : connectors) {
            MatchResult mr;
            bool judged = check_one_connector(conn, mr);
            if (out_matches) out_matches->push_back(mr);
            (void)judged;
        }
    }

    /// Returns false when the connector is exempt (M/H/E or env endpoint).
    bool check_one_connector(const Connector& conn, MatchResult& mr) {
        if (conn.kind != LinkKind::Signal) return false;
        int s = rv.block_by_name(path_to_string(conn.source));
        int t = rv.block_by_name(path_to_string(conn.target));
        if (s < 0 || t < 0) {
            finding("C1", {path_to_string(s < 0 ? conn.source : conn.target)},
                    "connector endpoint does not name a block of the view", conn.span);
            return true;
        }
        if (rv.blocks[s].marker == Marker::Env || rv.blocks[t].marker == Marker::Env)
            return false;  // connectors incident to env blocks are exempt
        if (rv.blocks[s].occurrence < 0 || rv.blocks[t].occurrence < 0)
            return false;  // already a C1 finding
        mr = match_connector(rv.blocks[s].occurrence, rv.blocks[t].occurrence,
                             conn.signals, index, rv.present_paths);
        if (mr.matched) return true;
        std::string label = conn.signals.empty() ? "<unlabeled>" : conn.signals[0];
        for (std::size_t i = 1; i < conn.signals.size(); ++i) label += "," + conn.signals[i];
        if (mr.signal_candidates)
            finding("C5",
                    {path_to_string(conn.source), path_to_string(conn.target)},
                    "no net connector carrying " + label + " runs between '" +
                        path_to_string(conn.source) + "' and '" + path_to_string(conn.target) +
                        "' or their subblocks",
                    conn.span);
        else
            finding("C4",
                    {path_to_string(conn.source), path_to_string(conn.target)},
                    "the net has no connector carrying " + label, conn.span);
        return true;
    }
};

}  // namespace

MatchResult match_connector(int source_occ, int target_occ,
                            const std::vector<std::string>& labels, const NetIndex& index,
                            const std::set<std::string>& present) {
    MatchResult result;
    const FunctionNet& net = index.net();
    for (int i = 0; i < static_cast<int>(net.connectors.size()); ++i) {
        const Connector& nc = net.connectors[i];
        if (nc.kind != LinkKind::Signal) continue;
        // one single net connector must cover every labeled signal
        bool covers = true;
        for (const auto& sig : labels)
            if (std::find(nc.signals.begin(), nc.signals.end(), sig) == nc.signals.end()) {
                covers = false;
                break;
            }
        if (!covers || nc.signals.empty()) continue;
        Resolution src = index.resolve(nc.source);
        Resolution tgt = index.resolve(nc.target);
        if (src.status != ResolveStatus::Ok || tgt.status != ResolveStatus::Ok) continue;
        result.signal_candidates = true;
        bool lift_s = false, lift_t = false;
        if (endpoint_compatible(source_occ, src.occurrence, index, present, &lift_s) &&
            endpoint_compatible(target_occ, tgt.occurrence, index, present, &lift_t)) {
            result.matched = true;
            result.net_connector = i;
            result.lifted_source = lift_s;
            result.lifted_target = lift_t;
            return result;
        }
    }
    return result;
}

ConsistencyReport check_view(const View& view, const NetIndex& index) {
    if (view.base != index.net().name)
        throw Error("BASE_MISMATCH", "view '" + view.name + "' is based on net '" +
                                         view.base + "', not '" + index.net().name + "'");
    ConsistencyReport report;
    ResolvedView rv = resolve_view(view, index);
    ViewChecker checker{index, rv, report};
    checker.check_c1();
    checker.check_c2();
    checker.check_c3();
    std::vector<MatchResult> matches;
    checker.check_c4_c5(view.connectors, &matches);
    for (std::size_t i = 0; i < matches.size(); ++i)
        if (matches[i].matched && (matches[i].lifted_source || matches[i].lifted_target))
            report.notes.push_back("connector " + path_to_string(view.connectors[i].source) +
                                   " -> " + path_to_string(view.connectors[i].target) +
                                   " matches the net via superblock lifting");
    report.normalize();
    return report;
}

ConsistencyReport check_view(const View& view, const FunctionNet& net) {
    NetIndex index(net);
    return check_view(view, index);
}

namespace {

struct FlatViewConn {
    LinkKind kind;
    std::string source, target;          // resolved net paths (or env name)
    std::vector<std::string> signals;    // sorted
    SourceSpan span;
};

/// Connectors with endpoints normalized to net paths, for the C6 subset test.
std::vector<FlatViewConn> flatten_connectors(const View& view, const ResolvedView& rv,
                                             const NetIndex& index) {
    std::vector<FlatViewConn> out;
    for (const auto& conn : view.connectors) {
        FlatViewConn fc;
        fc.kind = conn.kind;
        fc.span = conn.span;
        fc.signals = conn.signals;
        std::sort(fc.signals.begin(), fc.signals.end());
        auto resolve_end = [&](const PathRef& ref) -> std::string {
            int b = rv.block_by_name(path_to_string(ref));
            if (b >= 0 && rv.blocks[b].occurrence >= 0)
                return index.dotted(rv.blocks[b].occurrence);
            return path_to_string(ref);  // env blocks compare by name
        };
        fc.source = resolve_end(conn.source);
        fc.target = resolve_end(conn.target);
        out.push_back(std::move(fc));
    }
    return out;
}

}  // namespace

ConsistencyReport check_specialization(const View& spec, const View& base,
                                       const FunctionNet& net) {
    if (spec.base != base.base)
        throw Error("BASE_MISMATCH", "views '" + spec.name + "' and '" + base.name +
                                         "' are based on different nets");
    NetIndex index(net);
    ConsistencyReport report = check_view(spec, index);
    ConsistencyReport base_report = check_view(base, index);
    report.findings.insert(report.findings.end(), base_report.findings.begin(),
                           base_report.findings.end());
    for (const auto& n : base_report.notes) report.notes.push_back(n);

    ResolvedView spec_rv = resolve_view(spec, index);
    ResolvedView base_rv = resolve_view(base, index);

    // C6: blocks (with markers) are a subset
    for (const auto& b : spec_rv.blocks) {
        bool found = false;
        for (const auto& bb : base_rv.blocks)
            if (bb.name == b.name && bb.marker == b.marker) {
                found = true;
                break;
            }
        if (!found)
            report.findings.push_back(
                {"C6", {b.name},
                 "block '" + b.name + "' of '" + spec.name + "' does not appear in '" +
                     base.name + "' with the same marker",
                 b.span});
    }

    // C6: connectors are a subset (identical endpoints and kind, label subset)
    auto spec_conns = flatten_connectors(spec, spec_rv, index);
    auto base_conns = flatten_connectors(base, base_rv, index);
    for (const auto& sc : spec_conns) {
        bool found = false;
        for (const auto& bc : base_conns) {
            if (bc.kind != sc.kind || bc.source != sc.source || bc.target != sc.target)
                continue;
            if (std::includes(bc.signals.begin(), bc.signals.end(), sc.signals.begin(),
                              sc.signals.end())) {
                found = true;
                break;
            }
        }
        if (!found)
            report.findings.push_back(
                {"C6", {sc.source, sc.target},
                 "connector " + sc.source + " -> " + sc.target + " of '" + spec.name +
                     "' has no matching connector in '" + base.name + "'",
                 sc.span});
    }

    // nesting divergence is informational only
    for (std::size_t i = 0; i < spec_rv.blocks.size(); ++i) {
        const auto& b = spec_rv.blocks[i];
        if (b.parent < 0) continue;
        const auto& p = spec_rv.blocks[b.parent];
        int bp = base_rv.block_by_name(p.name);
        int bb = base_rv.block_by_name(b.name);
        if (bp >= 0 && bb >= 0 && !base_rv.nests(bp, bb))
            report.notes.push_back("nesting of '" + b.name + "' inside '" + p.name +
                                   "' is not shown in '" + base.name + "'");
    }

    report.normalize();
    return report;
}

Diagnostics validate_view(const View& view) {
    Diagnostics diags;
    std::map<std::string, int> names;
    std::set<std::string> env_names;
    std::function<void(const ViewBlock&)> walk = [&](const ViewBlock& vb) {
        if (++names[vb.name] == 2)
            diags.push_back({"DUPLICATE_VIEW_BLOCK", vb.name,
                             "view block '" + vb.name + "' declared twice", vb.span});
        if (vb.marker == Marker::Env) env_names.insert(vb.name);
        for (const auto& child : vb.children) walk(child);
    };
    for (const auto& vb : view.blocks) walk(vb);

    for (const auto& conn : view.connectors) {
        for (const auto* ref : {&conn.source, &conn.target}) {
            if (ref->size() == 1 && names.count((*ref)[0])) continue;
            diags.push_back({"UNKNOWN_VIEW_ENDPOINT", path_to_string(*ref),
                             "connector endpoint '" + path_to_string(*ref) +
                                 "' does not name a block of the view",
                             conn.span});
        }
        if (conn.kind != LinkKind::Signal && !conn.signals.empty()) {
            bool env_end = (conn.source.size() == 1 && env_names.count(conn.source[0])) ||
                           (conn.target.size() == 1 && env_names.count(conn.target[0]));
            if (!env_end)
                diags.push_back({"MHE_SIGNALS", path_to_string(conn.source),
                                 "a non-signal link carrying signal names needs an env endpoint",
                                 conn.span});
        }
    }
    return diags;
}

}  // namespace fnet
