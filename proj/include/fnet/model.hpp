#ifndef FNET_MODEL_HPP
#define FNET_MODEL_HPP

#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "fnet/condition.hpp"
#include "fnet/diagnostics.hpp"
#include "fnet/value.hpp"

namespace fnet {

/// A (possibly qualified) block reference as written in the source.
using PathRef = std::vector<std::string>;

std::string path_to_string(const PathRef& p);

enum class BlockItemKind { Block, BlockDef, Instance };

/// One entry in a net's block hierarchy. `Block` is a direct occurrence,
/// `BlockDef` a reusable definition (no occurrence of its own), `Instance`
/// an occurrence expanding a definition.
struct BlockItem {
    BlockItemKind kind = BlockItemKind::Block;
    std::string name;
    std::string def_name;  // Instance only
    std::vector<BlockItem> children;
    SourceSpan span;

    bool operator==(const BlockItem&) const = default;
};

enum class LinkKind { Signal, Mech, Hydr, Elec };

struct Connector {
    LinkKind kind = LinkKind::Signal;
    std::vector<std::string> signals;  // may be empty in views
    PathRef source;
    PathRef target;
    SourceSpan span;

    bool operator==(const Connector&) const = default;
};

struct FunctionNet {
    std::string name;
    std::vector<BlockItem> items;
    std::vector<Connector> connectors;
    SourceSpan span;

    bool operator==(const FunctionNet&) const = default;
};

enum class Marker { Plain, Ext, Env };

struct ViewBlock {
    Marker marker = Marker::Plain;
    std::string name;
    std::vector<ViewBlock> children;
    SourceSpan span;

    bool operator==(const ViewBlock&) const = default;
};

enum class ViewKind { Feature, Variant, Mode, ScenarioBase };

struct View {
    std::string name;
    ViewKind kind = ViewKind::Feature;
    std::string variant_of;  // Variant only: name of the specialized view
    std::string base;        // name of the base net
    std::vector<ViewBlock> blocks;
    std::vector<Connector> connectors;
    SourceSpan span;

    bool operator==(const View&) const = default;
};

struct Interaction {
    int seq = 0;
    bool trigger = false;
    PathRef source;
    PathRef target;
    std::string signal;
    Condition condition;
    SourceSpan span;

    bool operator==(const Interaction&) const = default;
};

enum class Policy { Complete, Visible, Free };

struct Scenario {
    std::string name;
    std::string base_view;
    Policy policy = Policy::Free;
    std::vector<Interaction> interactions;
    SourceSpan span;

    bool operator==(const Scenario&) const = default;
};

struct ModeState {
    std::string mode;
    std::string view;
    SourceSpan span;

    bool operator==(const ModeState&) const = default;
};

struct ModeTransition {
    std::string from;
    std::string to;
    std::string signal;
    Condition condition;
    SourceSpan span;

    bool operator==(const ModeTransition&) const = default;
};

struct ModeMachine {
    std::string name;
    std::string base;  // base net
    std::vector<ModeState> states;
    std::vector<ModeTransition> transitions;
    std::string initial;
    SourceSpan span;

    bool operator==(const ModeMachine&) const = default;
};

struct VariantEntry {
    std::string name;
    std::string view;
    SourceSpan span;

    bool operator==(const VariantEntry&) const = default;
};

struct VariantSet {
    std::string name;
    std::string feature_view;
    std::vector<VariantEntry> variants;
    SourceSpan span;

    bool operator==(const VariantSet&) const = default;
};

/// Behavior stand-in for one block: when the guard holds on the guard signal,
/// emit the listed signal values. First matching rule of a block wins per step.
struct StubRule {
    PathRef owner;
    std::string guard_signal;
    Condition guard;
    std::vector<std::pair<std::string, Value>> emissions;
    SourceSpan span;

    bool operator==(const StubRule&) const = default;
};

struct StubSet {
    std::string name;
    std::string base;  // base net
    std::vector<StubRule> rules;
    SourceSpan span;

    bool operator==(const StubSet&) const = default;
};

using Element = std::variant<FunctionNet, View, ModeMachine, VariantSet, Scenario, StubSet>;

struct Model {
    std::vector<Element> elements;

    bool operator==(const Model&) const = default;

    const FunctionNet* find_net(const std::string& name) const;
    const View* find_view(const std::string& name) const;
    const Scenario* find_scenario(const std::string& name) const;
    const ModeMachine* find_modes(const std::string& name) const;
    const VariantSet* find_variants(const std::string& name) const;
    std::vector<const StubSet*> stubs_for(const std::string& net_name) const;

    /// Appends another parsed file's elements (multi-file check).
    void merge(Model other);
};

/// Cross-element reference checks: every view/scenario/mode/variant base
/// exists (UNKNOWN_BASE), top-level names are unique (DUPLICATE_NAME).
std::vector<ParseError> verify_references(const Model& model);

}  // namespace fnet

#endif
