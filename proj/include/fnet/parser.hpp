#ifndef FNET_PARSER_HPP
#define FNET_PARSER_HPP

#include <string>
#include <vector>

#include "fnet/model.hpp"

namespace fnet {

struct ParseResult {
    Model model;
    std::vector<ParseError> errors;

    bool ok() const { return errors.empty(); }
};

/// Parses one .fnet file. `file` is used for spans only. Reference checks
/// (unknown bases, duplicate top-level names) are included in the errors.
ParseResult parse_model(const std::string& text, const std::string& file = "<input>");

/// Syntax-only variant used for multi-file loading; run verify_references on
/// the merged model afterwards.
ParseResult parse_model_syntax(const std::string& text, const std::string& file = "<input>");

/// Parses a bare condition such as ">> 10km/h" or "invalid | > 200".
Condition parse_condition(const std::string& text);  // throws Error(PARSE)

}  // namespace fnet

#endif
