#ifndef FNET_TESTS_HELPERS_HPP
#define FNET_TESTS_HELPERS_HPP

#include <fstream>
#include <sstream>
#include <string>

#include "fnet/parser.hpp"

namespace testutil {

inline std::string models_dir() { return FNET_MODELS_DIR; }

inline std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    REQUIRE(in.good());
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

inline std::string figures_text() { return read_file(models_dir() + "/figures.fnet"); }

inline fnet::Model parse_ok(const std::string& text) {
    fnet::ParseResult pr = fnet::parse_model(text);
    if (!pr.ok()) {
        for (const auto& e : pr.errors) MESSAGE(e.span.line << ": " << e.message);
    }
    REQUIRE(pr.ok());
    return pr.model;
}

}  // namespace testutil

#endif
