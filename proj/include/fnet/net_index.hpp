#ifndef FNET_NET_INDEX_HPP
#define FNET_NET_INDEX_HPP

#include <set>
#include <string>
#include <unordered_map>
#include <vector>

#include "fnet/diagnostics.hpp"
#include "fnet/model.hpp"

namespace fnet {

/// One block occurrence after instance expansion. Paths are qualified from
/// the net root, e.g. CarComfort.left.LockCtrl.
struct Occurrence {
    std::string name;      // occurrence name (instance name for instances)
    std::string def_name;  // definition name for instances, else empty
    PathRef path;
    int parent = -1;
    std::vector<int> children;
    SourceSpan span;
};

/// All (ancestor, descendant) pairs of a net, closed under transitivity.
/// Paths are dotted strings.
class AncestorRelation {
  public:
    void add(const std::string& ancestor, const std::string& descendant) {
        pairs_.insert({ancestor, descendant});
    }
    bool contains(const std::string& ancestor, const std::string& descendant) const {
        return pairs_.count({ancestor, descendant}) != 0;
    }
    const std::set<std::pair<std::string, std::string>>& pairs() const { return pairs_; }
    std::size_t size() const { return pairs_.size(); }

  private:
    std::set<std::pair<std::string, std::string>> pairs_;
};

enum class ResolveStatus { Ok, NotFound, Ambiguous };

struct Resolution {
    ResolveStatus status = ResolveStatus::NotFound;
    int occurrence = -1;
    std::vector<int> candidates;  // Ambiguous only
};

/// Expanded occurrence tree of one net with name lookup. Occurrence 0 is the
/// net root itself.
class NetIndex {
  public:
    explicit NetIndex(const FunctionNet& net);

    const FunctionNet& net() const { return *net_; }
    const std::vector<Occurrence>& occurrences() const { return occs_; }
    const Occurrence& occ(int i) const { return occs_[i]; }
    std::string dotted(int i) const { return path_to_string(occs_[i].path); }

    /// Problems found while expanding: duplicate children, unknown or cyclic
    /// definitions, duplicate definitions.
    const Diagnostics& structural_diagnostics() const { return structural_; }

    /// Qualified refs resolve exactly (the leading net name may be omitted);
    /// a single short name resolves iff exactly one occurrence bears it as
    /// its occurrence name or definition name.
    Resolution resolve(const PathRef& ref) const;

    bool is_ancestor(int a, int b) const;  // strict
    AncestorRelation closure() const;

    bool signal_exists(const std::string& name) const;
    const std::set<std::string>& signals() const { return signals_; }

  private:
    void expand(const BlockItem& item, int parent,
                const std::unordered_map<std::string, const BlockItem*>& defs,
                std::vector<std::string>& def_stack);
    int add_occurrence(const std::string& name, const std::string& def_name, int parent,
                       const SourceSpan& span);

    const FunctionNet* net_;
    std::vector<Occurrence> occs_;
    std::unordered_map<std::string, int> by_path_;
    std::unordered_map<std::string, std::vector<int>> by_name_;
    std::set<std::string> signals_;
    Diagnostics structural_;
};

/// Empty iff all FunctionNet/BlockItem/Connector invariants hold.
Diagnostics validate_net(const FunctionNet& net);

/// Transitive containment after instance expansion.
AncestorRelation containment_closure(const FunctionNet& net);

/// resolve_reference over a whole net; throws Error(NOT_FOUND | AMBIGUOUS).
PathRef resolve_reference(const PathRef& name, const FunctionNet& net);

}  // namespace fnet

#endif
