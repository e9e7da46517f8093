#include "fnet.h"

#include <cstdlib>
#include <cstring>
#include <fstream>
#include <functional>
#include <sstream>
#include <string>
#include <vector>

#include "fnet/checker.hpp"
#include "fnet/model.hpp"
#include "fnet/parser.hpp"
#include "fnet/printer.hpp"
#include "fnet/scenario.hpp"
#include "fnet/sim.hpp"

using namespace fnet;

struct fnet_model {
    Model model;
    std::vector<ParseError> errors;
    bool references_checked = false;
};

namespace {

char* dup_string(const std::string& s) {
    char* out = static_cast<char*>(std::malloc(s.size() + 1));
    if (out) std::memcpy(out, s.c_str(), s.size() + 1);
    return out;
}

void set_out(char** out, const std::string& s) {
    if (out) *out = dup_string(s);
}

/// Reference errors are only meaningful once all files are loaded, so they
/// are (re)computed lazily before any whole-model operation.
bool finalize(fnet_model* m) {
    if (!m->references_checked) {
        std::erase_if(m->errors, [](const ParseError& e) {
            return e.message.rfind("UNKNOWN_BASE", 0) == 0 ||
                   e.message.rfind("DUPLICATE_NAME", 0) == 0;
        });
        auto ref_errors = verify_references(m->model);
        m->errors.insert(m->errors.end(), ref_errors.begin(), ref_errors.end());
        m->references_checked = true;
    }
    return m->errors.empty();
}

struct RunInputs {
    const Scenario* scenario = nullptr;
    const View* base_view = nullptr;
    const FunctionNet* net = nullptr;
};

int lookup_run_inputs(fnet_model* m, const char* scenario, RunInputs& in, char** out) {
    in.scenario = m->model.find_scenario(scenario ? scenario : "");
    if (!in.scenario) {
        set_out(out, std::string("unknown scenario '") + (scenario ? scenario : "") + "'\n");
        return FNET_USAGE_ERROR;
    }
    in.base_view = m->model.find_view(in.scenario->base_view);
    in.net = in.base_view ? m->model.find_net(in.base_view->base) : nullptr;
    if (!in.net) {
        set_out(out, "scenario '" + in.scenario->name + "' has no resolvable base net\n");
        return FNET_PARSE_ERROR;
    }
    return FNET_OK;
}

int verdict_status(const Verdict& v) {
    switch (v.outcome) {
        case Outcome::Pass: return FNET_OK;
        case Outcome::Fail: return FNET_FINDINGS;
        case Outcome::Inconclusive: return FNET_INCONCLUSIVE;
    }
    return FNET_INCONCLUSIVE;
}

int run_common(fnet_model* m, const char* scenario, int format, char** out,
               const std::function<Trace(const RunInputs&)>& make_trace) {
    if (!finalize(m)) {
        set_out(out, parse_errors_to_text(m->errors));
        return FNET_PARSE_ERROR;
    }
    RunInputs in;
    if (int rc = lookup_run_inputs(m, scenario, in, out); rc != FNET_OK) return rc;
    try {
        Monitor mon = compile_monitor(*in.scenario, *in.net);
        Trace trace = make_trace(in);
        Verdict v = run_monitor(mon, trace);
        set_out(out, format == FNET_FORMAT_JSON ? verdict_to_json(v) : verdict_to_text(v));
        return verdict_status(v);
    } catch (const Error& e) {
        set_out(out, std::string(e.what()) + "\n");
        return FNET_PARSE_ERROR;
    }
}

}  // namespace

extern "C" {

const char* fnet_version(void) { return "0.1.0"; }

fnet_model* fnet_model_new(void) { return new fnet_model(); }

void fnet_model_free(fnet_model* model) { delete model; }

int fnet_model_load_string(fnet_model* model, const char* name, const char* text) {
    if (!model || !text) return FNET_USAGE_ERROR;
    ParseResult result = parse_model_syntax(text, name ? name : "<input>");
    model->references_checked = false;
    model->model.merge(std::move(result.model));
    model->errors.insert(model->errors.end(), result.errors.begin(), result.errors.end());
    return result.errors.empty() ? FNET_OK : FNET_PARSE_ERROR;
}

int fnet_model_load_file(fnet_model* model, const char* path) {
    if (!model || !path) return FNET_USAGE_ERROR;
    std::ifstream in(path, std::ios::binary);
    if (!in) return FNET_USAGE_ERROR;
    std::ostringstream buf;
    buf << in.rdbuf();
    return fnet_model_load_string(model, path, buf.str().c_str());
}

char* fnet_model_errors(const fnet_model* model) {
    if (!model) return dup_string("");
    return dup_string(parse_errors_to_text(model->errors));
}

int fnet_check(fnet_model* model, int format, char** out_report) {
    if (!model) return FNET_USAGE_ERROR;
    if (!finalize(model)) {
        set_out(out_report, parse_errors_to_text(model->errors));
        return FNET_PARSE_ERROR;
    }
    ModelReport report = check_model(model->model);
    set_out(out_report, format == FNET_FORMAT_JSON ? report_to_json(report)
                                                   : report_to_text(report));
    return report.all_consistent() ? FNET_OK : FNET_FINDINGS;
}

int fnet_render(const fnet_model* model, char** out_text) {
    if (!model) return FNET_USAGE_ERROR;
    // syntax errors make the canonical form meaningless
    for (const auto& e : model->errors) {
        if (e.message.rfind("UNKNOWN_BASE", 0) != 0 &&
            e.message.rfind("DUPLICATE_NAME", 0) != 0) {
            set_out(out_text, parse_errors_to_text(model->errors));
            return FNET_PARSE_ERROR;
        }
    }
    set_out(out_text, render_model(model->model));
    return FNET_OK;
}

int fnet_run_trace(fnet_model* model, const char* scenario, const char* trace_text,
                   int format, char** out) {
    if (!model || !trace_text) return FNET_USAGE_ERROR;
    return run_common(model, scenario, format, out, [&](const RunInputs& in) {
        NetIndex index(*in.net);
        return qualify_trace(load_trace(trace_text), index);
    });
}

int fnet_run_stimuli(fnet_model* model, const char* scenario, const char* stimuli_text,
                     int horizon, int format, char** out) {
    if (!model || !stimuli_text || horizon <= 0) return FNET_USAGE_ERROR;
    return run_common(model, scenario, format, out, [&](const RunInputs& in) {
        Trace stimuli = load_trace(stimuli_text, "<stimuli>");
        std::vector<StubRule> rules;
        for (const StubSet* ss : model->model.stubs_for(in.net->name))
            rules.insert(rules.end(), ss->rules.begin(), ss->rules.end());
        return run_simulation(*in.net, rules, stimuli, horizon);
    });
}

void fnet_string_free(char* s) { std::free(s); }

}  // extern "C"
