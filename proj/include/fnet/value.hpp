#ifndef FNET_VALUE_HPP
#define FNET_VALUE_HPP

#include <string>

namespace fnet {

/// A signal value: a number with an optional unit tag, a bare symbolic atom,
/// or the distinguished `invalid` value. Unit tags are uninterpreted.
struct Value {
    enum class Kind { Invalid, Number, Symbol };

    Kind kind = Kind::Invalid;
    double number = 0.0;
    std::string unit;  // Number only; empty means unit-less
    std::string symbol;

    static Value invalid() { return {}; }
    static Value num(double n, std::string unit = "") {
        return {Kind::Number, n, std::move(unit), {}};
    }
    static Value sym(std::string name) {
        return {Kind::Symbol, 0.0, {}, std::move(name)};
    }

    bool is_invalid() const { return kind == Kind::Invalid; }
    bool is_number() const { return kind == Kind::Number; }
    bool is_symbol() const { return kind == Kind::Symbol; }

    bool operator==(const Value& o) const {
        if (kind != o.kind) return false;
        switch (kind) {
            case Kind::Invalid: return true;
            case Kind::Number: return number == o.number && unit == o.unit;
            case Kind::Symbol: return symbol == o.symbol;
        }
        return false;
    }

    std::string to_string() const;
};

}  // namespace fnet

#endif
