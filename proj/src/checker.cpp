#include "fnet/checker.hpp"

#include <sstream>

#include "fnet/consistency.hpp"
#include "fnet/modes.hpp"
#include "fnet/net_index.hpp"
#include "fnet/scenario.hpp"

#include "json.hpp"

namespace fnet {

using nlohmann::json;

bool ModelReport::all_consistent() const {
    for (const auto& a : artifacts)
        if (!a.clean()) return false;
    return true;
}

namespace {

ArtifactReport make_error_artifact(const std::string& kind, const std::string& name,
                                   const Error& e, const SourceSpan& span) {
    ArtifactReport ar{kind, name, {}, {}};
    ar.diagnostics.push_back({e.code(), name, e.what(), span});
    return ar;
}

}  // namespace

ModelReport check_model(const Model& model) {
    ModelReport out;

    for (const auto& el : model.elements) {
        if (const FunctionNet* net = std::get_if<FunctionNet>(&el)) {
            ArtifactReport ar{"net", net->name, {}, validate_net(*net)};
            out.artifacts.push_back(std::move(ar));
        } else if (const View* view = std::get_if<View>(&el)) {
            ArtifactReport ar{"view", view->name, {}, validate_view(*view)};
            const FunctionNet* net = model.find_net(view->base);
            if (net) {
                try {
                    ar.report = check_view(*view, *net);
                } catch (const Error& e) {
                    ar.diagnostics.push_back({e.code(), view->name, e.what(), view->span});
                }
            }
            out.artifacts.push_back(std::move(ar));
            if (view->kind == ViewKind::Variant) {
                const View* base = model.find_view(view->variant_of);
                if (base && net) {
                    ArtifactReport sr{"specialization",
                                      view->name + " of " + view->variant_of, {}, {}};
                    try {
                        sr.report = check_specialization(*view, *base, *net);
                    } catch (const Error& e) {
                        sr.diagnostics.push_back({e.code(), view->name, e.what(), view->span});
                    }
                    out.artifacts.push_back(std::move(sr));
                }
            }
        } else if (const Scenario* sc = std::get_if<Scenario>(&el)) {
            ArtifactReport ar{"scenario", sc->name, {}, validate_scenario(*sc)};
            // structural hints (missing trigger) do not make a scenario inconsistent
            std::erase_if(ar.diagnostics,
                          [](const Diagnostic& d) { return d.rule == "NO_TRIGGER"; });
            const View* base = model.find_view(sc->base_view);
            const FunctionNet* net = base ? model.find_net(base->base) : nullptr;
            if (net) {
                try {
                    ar.report = check_scenario(*sc, *net);
                } catch (const Error& e) {
                    ar.diagnostics.push_back({e.code(), sc->name, e.what(), sc->span});
                }
            }
            out.artifacts.push_back(std::move(ar));
        } else if (const ModeMachine* mm = std::get_if<ModeMachine>(&el)) {
            ArtifactReport ar{"modes", mm->name, {}, validate_mode_machine(*mm, model)};
            const FunctionNet* net = model.find_net(mm->base);
            if (net) {
                try {
                    ar.report = check_mode_machine(*mm, model, *net);
                } catch (const Error& e) {
                    ar.diagnostics.push_back({e.code(), mm->name, e.what(), mm->span});
                }
            }
            out.artifacts.push_back(std::move(ar));
        } else if (const VariantSet* vs = std::get_if<VariantSet>(&el)) {
            ArtifactReport ar{"variants", vs->name, {}, validate_variant_set(*vs, model)};
            const View* feature = model.find_view(vs->feature_view);
            const FunctionNet* net = feature ? model.find_net(feature->base) : nullptr;
            if (net) {
                try {
                    ar.report = check_variants(*vs, model, *net);
                } catch (const Error& e) {
                    ar.diagnostics.push_back({e.code(), vs->name, e.what(), vs->span});
                }
            }
            out.artifacts.push_back(std::move(ar));
        } else if (const StubSet* ss = std::get_if<StubSet>(&el)) {
            ArtifactReport ar{"stubs", ss->name, {}, {}};
            const FunctionNet* net = model.find_net(ss->base);
            if (net) {
                try {
                    // validation only: a zero-step run checks owners and signals
                    run_simulation(*net, ss->rules, {}, 0);
                } catch (const Error& e) {
                    ar.diagnostics.push_back({e.code(), ss->name, e.what(), ss->span});
                }
            }
            out.artifacts.push_back(std::move(ar));
        }
    }
    return out;
}

namespace {

json finding_to_json(const Finding& f) {
    return json{{"condition", f.condition},
                {"subjects", f.subjects},
                {"message", f.message},
                {"file", f.span.file},
                {"line", f.span.line}};
}

json diagnostic_to_json(const Diagnostic& d) {
    return json{{"condition", d.rule},
                {"subjects", json::array({d.subject})},
                {"message", d.message},
                {"file", d.span.file},
                {"line", d.span.line}};
}

}  // namespace

std::string report_to_json(const ModelReport& report) {
    json artifacts = json::array();
    for (const auto& a : report.artifacts) {
        json findings = json::array();
        for (const auto& d : a.diagnostics) findings.push_back(diagnostic_to_json(d));
        for (const auto& f : a.report.findings) findings.push_back(finding_to_json(f));
        artifacts.push_back(json{{"kind", a.kind},
                                 {"name", a.name},
                                 {"verdict", a.clean() ? "CONSISTENT" : "INCONSISTENT"},
                                 {"findings", findings},
                                 {"notes", a.report.notes}});
    }
    json doc{{"schemaVersion", 1},
             {"verdict", report.all_consistent() ? "CONSISTENT" : "INCONSISTENT"},
             {"artifacts", artifacts}};
    return doc.dump(2) + "\n";
}

namespace {

const char* kGreen = "\033[32m";
const char* kRed = "\033[31m";
const char* kReset = "\033[0m";

}  // namespace

std::string report_to_text(const ModelReport& report, bool color) {
    std::ostringstream out;
    for (const auto& a : report.artifacts) {
        bool clean = a.clean();
        const char* verdict = clean ? "CONSISTENT" : "INCONSISTENT";
        if (color)
            out << (clean ? kGreen : kRed) << verdict << kReset;
        else
            out << verdict;
        out << "  " << a.kind << " " << a.name << "\n";
        for (const auto& d : a.diagnostics)
            out << "    [" << d.rule << "] " << d.message << " (" << d.span.file << ":"
                << d.span.line << ")\n";
        for (const auto& f : a.report.findings)
            out << "    [" << f.condition << "] " << f.message << " (" << f.span.file << ":"
                << f.span.line << ")\n";
        for (const auto& n : a.report.notes) out << "    note: " << n << "\n";
    }
    return out.str();
}

std::string verdict_to_json(const Verdict& v) {
    json doc{{"schemaVersion", 1},
             {"outcome", outcome_name(v.outcome)},
             {"reason", v.reason},
             {"matchedInteractions", v.matched}};
    if (v.outcome == Outcome::Fail) doc["failingStep"] = v.failing_step;
    return doc.dump(2) + "\n";
}

std::string verdict_to_text(const Verdict& v, bool color) {
    std::ostringstream out;
    if (color)
        out << (v.outcome == Outcome::Pass ? kGreen : kRed) << outcome_name(v.outcome)
            << kReset;
    else
        out << outcome_name(v.outcome);
    out << ": " << v.reason;
    if (v.outcome == Outcome::Fail && v.failing_step >= 0)
        out << " (step " << v.failing_step << ")";
    out << " [matched " << v.matched << " interaction(s)]\n";
    return out.str();
}

std::string parse_errors_to_text(const std::vector<ParseError>& errors) {
    std::ostringstream out;
    for (const auto& e : errors)
        out << e.span.file << ":" << e.span.line << ":" << e.span.column << ": error: "
            << e.message << "\n";
    return out.str();
}

}  // namespace fnet
