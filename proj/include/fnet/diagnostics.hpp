#ifndef FNET_DIAGNOSTICS_HPP
#define FNET_DIAGNOSTICS_HPP

#include <stdexcept>
#include <string>
#include <vector>

namespace fnet {

/// Location of a model element in its source file. 1-based line/column.
struct SourceSpan {
    std::string file;
    int line = 0;
    int column = 0;
    int length = 0;

    // Spans never participate in structural equality of model values.
    friend bool operator==(const SourceSpan&, const SourceSpan&) { return true; }
};

struct ParseError {
    SourceSpan span;
    std::string message;
    std::vector<std::string> expected;
};

/// Structural well-formedness problem in a net, view, or stub set.
/// `rule` is a stable identifier such as DANGLING_ENDPOINT or CYCLIC_HIERARCHY.
struct Diagnostic {
    std::string rule;
    std::string subject;  // dotted path or element name
    std::string message;
    SourceSpan span;
};

using Diagnostics = std::vector<Diagnostic>;

/// One violated consistency condition (C1..C6).
struct Finding {
    std::string condition;
    std::vector<std::string> subjects;
    std::string message;
    SourceSpan span;
};

struct ConsistencyReport {
    std::vector<Finding> findings;
    std::vector<std::string> notes;  // informational, never affect the verdict

    bool consistent() const { return findings.empty(); }

    /// Deterministic order: condition id, then subjects lexicographically.
    void normalize();
};

/// Hard failure of an operation precondition (BASE_MISMATCH, UNKNOWN_SIGNAL, ...).
class Error : public std::runtime_error {
  public:
    Error(std::string code, const std::string& message)
        : std::runtime_error(code + ": " + message), code_(std::move(code)) {}
    const std::string& code() const { return code_; }

  private:
    std::string code_;
};

}  // namespace fnet

#endif
