#include "fnet/condition.hpp"

#include <charconv>

namespace fnet {

std::string Value::to_string() const {
    switch (kind) {
        case Kind::Invalid: return "invalid";
        case Kind::Symbol: return symbol;
        case Kind::Number: {
            char buf[64];
            auto res = std::to_chars(buf, buf + sizeof buf, number);
            return std::string(buf, res.ptr) + unit;
        }
    }
    return "invalid";
}

namespace {

// Strict numeric comparison: false unless both sides are numbers with the
// same unit tag. Sets *mismatch for symbolic operands.
bool num_less(const Value& a, const Value& b, bool* mismatch) {
    if (a.is_symbol() || b.is_symbol()) {
        if (mismatch) *mismatch = true;
        return false;
    }
    if (!a.is_number() || !b.is_number()) return false;
    if (a.unit != b.unit) return false;
    return a.number < b.number;
}

bool num_le(const Value& a, const Value& b, bool* mismatch) {
    if (a.is_symbol() || b.is_symbol()) {
        if (mismatch) *mismatch = true;
        return false;
    }
    if (!a.is_number() || !b.is_number()) return false;
    if (a.unit != b.unit) return false;
    return a.number <= b.number;
}

bool eval_atom(const ConditionAtom& atom, const std::optional<Value>& prev,
               const Value& curr, bool* mismatch) {
    switch (atom.kind) {
        case ConditionAtom::Kind::IsInvalid:
            return curr.is_invalid();
        case ConditionAtom::Kind::Transition:
            return prev.has_value() && *prev == atom.from && curr == atom.to;
        case ConditionAtom::Kind::Cmp:
            break;
    }
    const Value& v = atom.value;
    switch (atom.op) {
        case CmpOp::Greater:
            return num_less(v, curr, mismatch);
        case CmpOp::BecomesGreater:
            return prev.has_value() && num_le(*prev, v, mismatch) &&
                   num_less(v, curr, mismatch);
        case CmpOp::Less:
            return num_less(curr, v, mismatch);
        case CmpOp::BecomesLess:
            return prev.has_value() && num_le(v, *prev, mismatch) &&
                   num_less(curr, v, mismatch);
        case CmpOp::Equals:
            return curr == v;
        case CmpOp::BecomesEqual:
            return prev.has_value() && !(*prev == v) && curr == v;
    }
    return false;
}

}  // namespace

bool eval_condition(const Condition& cond, const std::optional<Value>& prev,
                    const Value& curr, bool* type_mismatch) {
    bool result = false;
    for (const auto& atom : cond.atoms)
        if (eval_atom(atom, prev, curr, type_mismatch)) result = true;
    return result;
}

bool eval_condition_strict(const Condition& cond, const std::optional<Value>& prev,
                           const Value& curr) {
    bool mismatch = false;
    bool result = eval_condition(cond, prev, curr, &mismatch);
    if (mismatch)
        throw Error("TYPE_MISMATCH",
                    "symbolic value compared with a numeric relational operator");
    return result;
}

std::string condition_to_string(const Condition& cond) {
    std::string out;
    for (const auto& atom : cond.atoms) {
        if (!out.empty()) out += " | ";
        switch (atom.kind) {
            case ConditionAtom::Kind::IsInvalid:
                out += "invalid";
                break;
            case ConditionAtom::Kind::Transition:
                out += ": " + atom.from.to_string() + " -> " + atom.to.to_string();
                break;
            case ConditionAtom::Kind::Cmp: {
                const char* op = "";
                switch (atom.op) {
                    case CmpOp::Greater: op = "> "; break;
                    case CmpOp::BecomesGreater: op = ">> "; break;
                    case CmpOp::Equals: op = "== "; break;
                    case CmpOp::BecomesEqual: op = "= "; break;
                    case CmpOp::Less: op = "< "; break;
                    case CmpOp::BecomesLess: op = "<< "; break;
                }
                out += op + atom.value.to_string();
                break;
            }
        }
    }
    return out;
}

}  // namespace fnet
