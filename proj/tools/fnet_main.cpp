#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <memory>
#include <sstream>
#include <string>
#include <vector>

#include <unistd.h>

#include "CLI11.hpp"
#include "fnet.h"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitFindings = 1;
constexpr int kExitParse = 2;
constexpr int kExitUsage = 3;
constexpr int kExitInconclusive = 4;

struct ModelHandle {
    fnet_model* m = fnet_model_new();
    ~ModelHandle() { fnet_model_free(m); }
};

struct OwnedString {
    char* s = nullptr;
    ~OwnedString() { fnet_string_free(s); }
    std::string str() const { return s ? s : ""; }
};

bool styling_enabled() {
    if (std::getenv("NO_COLOR")) return false;
    return isatty(fileno(stdout));
}

/// Wraps the leading verdict token of each line in ANSI colors.
std::string colorize(const std::string& text) {
    static const struct { const char* word; const char* color; } kWords[] = {
        {"INCONSISTENT", "\033[31m"}, {"CONSISTENT", "\033[32m"},
        {"INCONCLUSIVE", "\033[33m"}, {"PASS", "\033[32m"},
        {"FAIL", "\033[31m"},
    };
    std::ostringstream out;
    std::istringstream in(text);
    std::string line;
    bool first = true;
    while (std::getline(in, line)) {
        if (!first) out << "\n";
        first = false;
        bool done = false;
        for (const auto& w : kWords) {
            std::string word = w.word;
            if (line.rfind(word, 0) == 0) {
                out << w.color << word << "\033[0m" << line.substr(word.size());
                done = true;
                break;
            }
        }
        if (!done) out << line;
    }
    if (!text.empty() && text.back() == '\n') out << "\n";
    return out.str();
}

void print_out(const std::string& text, bool is_json) {
    if (!is_json && styling_enabled())
        std::fputs(colorize(text).c_str(), stdout);
    else
        std::fputs(text.c_str(), stdout);
}

int load_all(fnet_model* m, const std::vector<std::string>& files) {
    int status = kExitOk;
    for (const auto& f : files) {
        int rc = fnet_model_load_file(m, f.c_str());
        if (rc == FNET_USAGE_ERROR) {
            std::fprintf(stderr, "error: cannot read '%s'\n", f.c_str());
            return kExitUsage;
        }
        if (rc == FNET_PARSE_ERROR) status = kExitParse;
    }
    if (status == kExitParse) {
        OwnedString errors{fnet_model_errors(m)};
        std::fputs(errors.str().c_str(), stderr);
    }
    return status;
}

bool read_file(const std::string& path, std::string& out) {
    std::ifstream in(path, std::ios::binary);
    if (!in) return false;
    std::ostringstream buf;
    buf << in.rdbuf();
    out = buf.str();
    return true;
}

int cmd_check(const std::vector<std::string>& files, const std::string& format) {
    ModelHandle h;
    if (int rc = load_all(h.m, files); rc != kExitOk) return rc;
    OwnedString report;
    int rc = fnet_check(h.m, format == "json" ? FNET_FORMAT_JSON : FNET_FORMAT_TEXT,
                        &report.s);
    if (rc == FNET_PARSE_ERROR) {
        std::fputs(report.str().c_str(), stderr);
        return kExitParse;
    }
    print_out(report.str(), format == "json");
    return rc == FNET_OK ? kExitOk : kExitFindings;
}

int cmd_run(const std::vector<std::string>& files, const std::string& scenario,
            const std::string& trace_path, const std::string& stimuli_path, int horizon,
            const std::string& format) {
    ModelHandle h;
    if (int rc = load_all(h.m, files); rc != kExitOk) return rc;

    OwnedString out;
    int rc;
    int fmt = format == "json" ? FNET_FORMAT_JSON : FNET_FORMAT_TEXT;
    std::string input;
    if (!trace_path.empty()) {
        if (!read_file(trace_path, input)) {
            std::fprintf(stderr, "error: cannot read '%s'\n", trace_path.c_str());
            return kExitUsage;
        }
        rc = fnet_run_trace(h.m, scenario.c_str(), input.c_str(), fmt, &out.s);
    } else {
        if (!read_file(stimuli_path, input)) {
            std::fprintf(stderr, "error: cannot read '%s'\n", stimuli_path.c_str());
            return kExitUsage;
        }
        rc = fnet_run_stimuli(h.m, scenario.c_str(), input.c_str(), horizon, fmt, &out.s);
    }
    switch (rc) {
        case FNET_OK:
        case FNET_FINDINGS:
        case FNET_INCONCLUSIVE:
            print_out(out.str(), fmt == FNET_FORMAT_JSON);
            return rc == FNET_OK ? kExitOk
                                 : (rc == FNET_FINDINGS ? kExitFindings : kExitInconclusive);
        case FNET_PARSE_ERROR:
            std::fputs(out.str().c_str(), stderr);
            return kExitParse;
        default:
            std::fputs(out.str().c_str(), stderr);
            return kExitUsage;
    }
}

int cmd_fmt(const std::vector<std::string>& files, bool check_only) {
    int status = kExitOk;
    for (const auto& f : files) {
        std::string original;
        if (!read_file(f, original)) {
            std::fprintf(stderr, "error: cannot read '%s'\n", f.c_str());
            return kExitUsage;
        }
        ModelHandle h;
        if (fnet_model_load_string(h.m, f.c_str(), original.c_str()) != FNET_OK) {
            OwnedString errors{fnet_model_errors(h.m)};
            std::fputs(errors.str().c_str(), stderr);
            return kExitParse;
        }
        OwnedString canonical;
        if (fnet_render(h.m, &canonical.s) != FNET_OK) {
            std::fputs(canonical.str().c_str(), stderr);
            return kExitParse;
        }
        if (canonical.str() == original) continue;
        if (check_only) {
            std::fprintf(stderr, "%s: not canonically formatted\n", f.c_str());
            status = kExitFindings;
            continue;
        }
        std::ofstream out(f, std::ios::binary | std::ios::trunc);
        if (!out) {
            std::fprintf(stderr, "error: cannot write '%s'\n", f.c_str());
            return kExitUsage;
        }
        out << canonical.str();
    }
    return status;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Function-net toolkit: consistency checking, formatting and "
                 "scenario-based trace monitoring"};
    app.require_subcommand(1);

    std::vector<std::string> files;
    std::string format = "text";
    std::string scenario, trace_path, stimuli_path;
    int horizon = 0;
    bool check_only = false;

    auto* check = app.add_subcommand("check", "Check all artifacts for consistency");
    check->add_option("files", files, "Model files (.fnet)")->required();
    check->add_option("--format", format, "Output format")
        ->check(CLI::IsMember({"text", "json"}));

    auto* run = app.add_subcommand("run", "Run a scenario monitor on a trace or simulation");
    run->add_option("files", files, "Model files (.fnet)")->required();
    run->add_option("--scenario", scenario, "Scenario name")->required();
    auto* trace_opt = run->add_option("--trace", trace_path, "Recorded trace file");
    auto* stim_opt = run->add_option("--stimuli", stimuli_path, "Stimuli file (simulation)");
    run->add_option("--horizon", horizon, "Simulation step count");
    run->add_option("--format", format, "Output format")
        ->check(CLI::IsMember({"text", "json"}));
    trace_opt->excludes(stim_opt);

    auto* fmt = app.add_subcommand("fmt", "Rewrite files to canonical form");
    fmt->add_option("files", files, "Model files (.fnet)")->required();
    fmt->add_flag("--check", check_only, "Only report files that are not canonical");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitUsage;
    }

    if (check->parsed()) return cmd_check(files, format);
    if (run->parsed()) {
        if (trace_path.empty() == stimuli_path.empty()) {
            std::fprintf(stderr, "error: exactly one of --trace or --stimuli is required\n");
            return kExitUsage;
        }
        if (!stimuli_path.empty() && horizon <= 0) {
            std::fprintf(stderr, "error: --stimuli requires --horizon N (N > 0)\n");
            return kExitUsage;
        }
        return cmd_run(files, scenario, trace_path, stimuli_path, horizon, format);
    }
    return cmd_fmt(files, check_only);
}
