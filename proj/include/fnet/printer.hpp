#ifndef FNET_PRINTER_HPP
#define FNET_PRINTER_HPP

#include <string>

#include "fnet/model.hpp"

namespace fnet {

/// Canonical text: declaration order preserved, one element per line, two
/// space indentation. parse(render(m)) is structurally equal to m.
std::string render_model(const Model& model);

}  // namespace fnet

#endif
