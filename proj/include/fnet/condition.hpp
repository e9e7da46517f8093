#ifndef FNET_CONDITION_HPP
#define FNET_CONDITION_HPP

#include <optional>
#include <vector>

#include "fnet/diagnostics.hpp"
#include "fnet/value.hpp"

namespace fnet {

enum class CmpOp {
    Greater,         // s > v
    BecomesGreater,  // s >> v
    Equals,          // s == v
    BecomesEqual,    // s = v
    Less,            // s < v
    BecomesLess,     // s << v
};

struct ConditionAtom {
    enum class Kind { Cmp, Transition, IsInvalid };

    Kind kind = Kind::IsInvalid;
    CmpOp op = CmpOp::Equals;  // Cmp only
    Value value;               // Cmp only
    Value from, to;            // Transition only
    SourceSpan span;

    bool operator==(const ConditionAtom& o) const {
        if (kind != o.kind) return false;
        switch (kind) {
            case Kind::Cmp: return op == o.op && value == o.value;
            case Kind::Transition: return from == o.from && to == o.to;
            case Kind::IsInvalid: return true;
        }
        return false;
    }
};

/// Disjunction of atoms. A single-atom condition is just the atom itself.
struct Condition {
    std::vector<ConditionAtom> atoms;

    bool operator==(const Condition& o) const { return atoms == o.atoms; }
};

/// Evaluates a condition against the previous and current sample of a signal.
/// `prev` is absent when no earlier sample exists; "becomes" forms then never
/// fire. Numeric comparison against `invalid` or a mismatched unit tag is
/// simply false. Comparing a symbolic atom with a relational operator sets
/// *type_mismatch (when given) and yields false.
bool eval_condition(const Condition& cond, const std::optional<Value>& prev,
                    const Value& curr, bool* type_mismatch = nullptr);

/// Throwing variant: raises Error("TYPE_MISMATCH") instead of flagging.
bool eval_condition_strict(const Condition& cond, const std::optional<Value>& prev,
                           const Value& curr);

std::string condition_to_string(const Condition& cond);

}  // namespace fnet

#endif
