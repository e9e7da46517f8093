#ifndef FNET_CHECKER_HPP
#define FNET_CHECKER_HPP

#include <string>
#include <vector>

#include "fnet/diagnostics.hpp"
#include "fnet/model.hpp"
#include "fnet/sim.hpp"

namespace fnet {

/// Aggregated result for one checked artifact (net, view, scenario, ...).
struct ArtifactReport {
    std::string kind;  // "net", "view", "specialization", "scenario", "modes", "variants", "stubs"
    std::string name;
    ConsistencyReport report;
    Diagnostics diagnostics;  // structural problems outside C1..C6

    bool clean() const { return report.consistent() && diagnostics.empty(); }
};

struct ModelReport {
    std::vector<ArtifactReport> artifacts;

    bool all_consistent() const;
};

/// Runs every applicable check over a parsed model: validate_net plus
/// check_view for each view, check_specialization for declared variant views,
/// check_scenario, check_mode_machine, check_variants and stub validation.
ModelReport check_model(const Model& model);

std::string report_to_json(const ModelReport& report);
std::string report_to_text(const ModelReport& report, bool color = false);

std::string verdict_to_json(const Verdict& v);
std::string verdict_to_text(const Verdict& v, bool color = false);

std::string parse_errors_to_text(const std::vector<ParseError>& errors);

}  // namespace fnet

#endif
