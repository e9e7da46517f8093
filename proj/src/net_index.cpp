#include "fnet/net_index.hpp"

#include <algorithm>
#include <functional>

namespace fnet {

namespace {

void collect_defs(const std::vector<BlockItem>& items,
                  std::unordered_map<std::string, const BlockItem*>& defs,
                  Diagnostics& diags) {
    for (const auto& item : items) {
        if (item.kind == BlockItemKind::BlockDef) {
            auto [it, inserted] = defs.emplace(item.name, &item);
            if (!inserted)
                diags.push_back({"DUPLICATE_DEF", item.name,
                                 "block definition '" + item.name + "' declared twice",
                                 item.span});
        }
        collect_defs(item.children, defs, diags);
    }
}

}  // namespace

NetIndex::NetIndex(const FunctionNet& net) : net_(&net) {
    std::unordered_map<std::string, const BlockItem*> defs;
    collect_defs(net.items, defs, structural_);

    add_occurrence(net.name, "", -1, net.span);
    std::vector<std::string> def_stack;
    for (const auto& item : net.items) expand(item, 0, defs, def_stack);

    for (const auto& conn : net.connectors)
        for (const auto& sig : conn.signals) signals_.insert(sig);
}

int NetIndex::add_occurrence(const std::string& name, const std::string& def_name,
                             int parent, const SourceSpan& span) {
    Occurrence occ;
    occ.name = name;
    occ.def_name = def_name;
    occ.parent = parent;
    occ.span = span;
    if (parent >= 0) {
        occ.path = occs_[parent].path;
        occ.path.push_back(name);
    } else {
        occ.path = {name};
    }
    int idx = static_cast<int>(occs_.size());
    std::string dotted = path_to_string(occ.path);
    if (by_path_.count(dotted)) {
        structural_.push_back({"DUPLICATE_CHILD", dotted,
                               "sibling name '" + name + "' is not unique", span});
        return -1;
    }
    by_path_[dotted] = idx;
    by_name_[name].push_back(idx);
    if (!def_name.empty() && def_name != name) by_name_[def_name].push_back(idx);
    occs_.push_back(std::move(occ));
    if (parent >= 0) occs_[parent].children.push_back(idx);
    return idx;
}

void NetIndex::expand(const BlockItem& item, int parent,
                      const std::unordered_map<std::string, const BlockItem*>& defs,
                      std::vector<std::string>& def_stack) {
    switch (item.kind) {
        case BlockItemKind::BlockDef:
            return;  // definitions are not occurrences
        case BlockItemKind::Block: {
            int idx = add_occurrence(item.name, "", parent, item.span);
            if (idx < 0) return;
            for (const auto& child : item.children) expand(child, idx, defs, def_stack);
            return;
        }
        case BlockItemKind::Instance: {
            auto it = defs.find(item.def_name);
            if (it == defs.end()) {
                structural_.push_back({"UNKNOWN_DEF", item.name,
                                       "instance '" + item.name +
                                           "' references unknown definition '" +
                                           item.def_name + "'",
                                       item.span});
                return;
            }
            if (std::find(def_stack.begin(), def_stack.end(), item.def_name) !=
                def_stack.end()) {
                structural_.push_back({"CYCLIC_HIERARCHY", item.def_name,
                                       "definition '" + item.def_name +
                                           "' contains itself via instance '" + item.name +
                                           "'",
                                       item.span});
                return;
            }
            int idx = add_occurrence(item.name, item.def_name, parent, item.span);
            if (idx < 0) return;
            def_stack.push_back(item.def_name);
            for (const auto& child : it->second->children) expand(child, idx, defs, def_stack);
            def_stack.pop_back();
            return;
        }
    }
}

Resolution NetIndex::resolve(const PathRef& ref) const {
    if (ref.empty()) return {};
    if (ref.size() == 1) {
        auto it = by_name_.find(ref[0]);
        if (it == by_name_.end()) return {};
        if (it->second.size() == 1) return {ResolveStatus::Ok, it->second[0], {}};
        return {ResolveStatus::Ambiguous, -1, it->second};
    }
    std::string dotted = path_to_string(ref);
    if (auto it = by_path_.find(dotted); it != by_path_.end())
        return {ResolveStatus::Ok, it->second, {}};
    // the leading net name may be omitted in qualified references
    if (ref[0] != net_->name) {
        if (auto it = by_path_.find(net_->name + "." + dotted); it != by_path_.end())
            return {ResolveStatus::Ok, it->second, {}};
    }
    return {};
}

bool NetIndex::is_ancestor(int a, int b) const {
    for (int p = occs_[b].parent; p >= 0; p = occs_[p].parent)
        if (p == a) return true;
    return false;
}

AncestorRelation NetIndex::closure() const {
    AncestorRelation rel;
    // DFS from every occurrence; pairs use instance paths.
    std::function<void(int, int)> walk = [&](int root, int node) {
        for (int child : occs_[node].children) {
            rel.add(path_to_string(occs_[root].path), path_to_string(occs_[child].path));
            walk(root, child);
        }
    };
    for (int i = 0; i < static_cast<int>(occs_.size()); ++i) walk(i, i);
    return rel;
}

bool NetIndex::signal_exists(const std::string& name) const {
    return signals_.count(name) != 0;
}

namespace {

// Cycle check over the definition graph, so that a self-containing blockdef
// is reported even when it is never instantiated.
void check_def_cycles(const FunctionNet& net, Diagnostics& diags) {
    std::unordered_map<std::string, const BlockItem*> defs;
    Diagnostics ignored;
    collect_defs(net.items, defs, ignored);

    std::function<void(const BlockItem&, std::vector<std::string>&)> visit =
        [&](const BlockItem& item, std::vector<std::string>& stack) {
            if (item.kind == BlockItemKind::Instance) {
                if (std::find(stack.begin(), stack.end(), item.def_name) != stack.end()) {
                    diags.push_back({"CYCLIC_HIERARCHY", item.def_name,
                                     "definition '" + item.def_name + "' contains itself",
                                     item.span});
                    return;
                }
                auto it = defs.find(item.def_name);
                if (it == defs.end()) return;
                stack.push_back(item.def_name);
                for (const auto& child : it->second->children) visit(child, stack);
                stack.pop_back();
                return;
            }
            for (const auto& child : item.children) visit(child, stack);
        };
    for (const auto& [name, def] : defs) {
        std::vector<std::string> stack = {name};
        for (const auto& child : def->children) visit(child, stack);
    }
}

}  // namespace

Diagnostics validate_net(const FunctionNet& net) {
    NetIndex index(net);
    Diagnostics diags;
    check_def_cycles(net, diags);
    for (const auto& d : index.structural_diagnostics())
        if (d.rule != "CYCLIC_HIERARCHY")  // already reported by the def-graph pass
            diags.push_back(d);
    for (const auto& conn : net.connectors) {
        if (conn.kind != LinkKind::Signal) {
            diags.push_back({"NON_SIGNAL_CONNECTOR", path_to_string(conn.source),
                             "a complete net may only contain signal connectors", conn.span});
            continue;
        }
        if (conn.signals.empty())
            diags.push_back({"MISSING_SIGNAL", path_to_string(conn.source),
                             "connectors in a complete net must carry at least one signal",
                             conn.span});
        Resolution src = index.resolve(conn.source);
        Resolution tgt = index.resolve(conn.target);
        for (const auto& [res, ref] :
             {std::pair{&src, &conn.source}, std::pair{&tgt, &conn.target}}) {
            if (res->status == ResolveStatus::NotFound)
                diags.push_back({"DANGLING_ENDPOINT", path_to_string(*ref),
                                 "connector endpoint '" + path_to_string(*ref) +
                                     "' does not name a block",
                                 conn.span});
            else if (res->status == ResolveStatus::Ambiguous) {
                std::string cands;
                for (int c : res->candidates) {
                    if (!cands.empty()) cands += ", ";
                    cands += index.dotted(c);
                }
                diags.push_back({"AMBIGUOUS_ENDPOINT", path_to_string(*ref),
                                 "connector endpoint '" + path_to_string(*ref) +
                                     "' is ambiguous: " + cands,
                                 conn.span});
            }
        }
        if (src.status == ResolveStatus::Ok && tgt.status == ResolveStatus::Ok &&
            src.occurrence == tgt.occurrence)
            diags.push_back({"SELF_LOOP", index.dotted(src.occurrence),
                             "connector source and target are the same block", conn.span});
    }
    return diags;
}

AncestorRelation containment_closure(const FunctionNet& net) {
    return NetIndex(net).closure();
}

PathRef resolve_reference(const PathRef& name, const FunctionNet& net) {
    NetIndex index(net);
    Resolution res = index.resolve(name);
    switch (res.status) {
        case ResolveStatus::Ok:
            return index.occ(res.occurrence).path;
        case ResolveStatus::Ambiguous: {
            std::string cands;
            for (int c : res.candidates) {
                if (!cands.empty()) cands += ", ";
                cands += index.dotted(c);
            }
            throw Error("AMBIGUOUS", "'" + path_to_string(name) +
                                         "' names several blocks: " + cands);
        }
        case ResolveStatus::NotFound:
            break;
    }
    throw Error("NOT_FOUND", "no block named '" + path_to_string(name) + "'");
}

}  // namespace fnet
