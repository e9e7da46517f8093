/* C interface to the function-net toolkit. All returned strings are
 * heap-allocated and must be released with fnet_string_free. A model handle
 * accumulates parsed files; checks and runs operate on the merged contents. */

#ifndef FNET_H
#define FNET_H

#ifdef __cplusplus
extern "C" {
#endif

typedef struct fnet_model fnet_model;

/* Status codes mirror the CLI exit codes. */
enum {
    FNET_OK = 0,           /* success / all consistent / PASS */
    FNET_FINDINGS = 1,     /* inconsistencies found / FAIL */
    FNET_PARSE_ERROR = 2,  /* input rejected by the parser */
    FNET_USAGE_ERROR = 3,  /* bad arguments (unknown scenario, unreadable file) */
    FNET_INCONCLUSIVE = 4  /* monitor never saw its trigger */
};

/* Output format for reports and verdicts. */
enum { FNET_FORMAT_TEXT = 0, FNET_FORMAT_JSON = 1 };

const char* fnet_version(void);

fnet_model* fnet_model_new(void);
void fnet_model_free(fnet_model* model);

/* Parse a file / an in-memory buffer into the model. Returns FNET_OK,
 * FNET_PARSE_ERROR (details via fnet_model_errors) or FNET_USAGE_ERROR when
 * the file cannot be read. */
int fnet_model_load_file(fnet_model* model, const char* path);
int fnet_model_load_string(fnet_model* model, const char* name, const char* text);

/* Accumulated parse/reference errors as printable text ("" when clean). */
char* fnet_model_errors(const fnet_model* model);

/* Run all consistency checks. *out_report receives the aggregated report in
 * the requested format. Returns FNET_OK, FNET_FINDINGS or FNET_PARSE_ERROR. */
int fnet_check(fnet_model* model, int format, char** out_report);

/* Canonical text of everything loaded so far. Returns FNET_OK or
 * FNET_PARSE_ERROR. */
int fnet_render(const fnet_model* model, char** out_text);

/* Run the named scenario's monitor against a recorded trace (trace file
 * contents in `trace_text`). Returns FNET_OK / FNET_FINDINGS /
 * FNET_INCONCLUSIVE for PASS / FAIL / INCONCLUSIVE, FNET_PARSE_ERROR on bad
 * input, FNET_USAGE_ERROR for an unknown scenario. *out receives the verdict
 * in the requested format (or the error text). */
int fnet_run_trace(fnet_model* model, const char* scenario, const char* trace_text,
                   int format, char** out);

/* Simulate the scenario's net with the model's stub rules driven by stimuli
 * (trace format, source ENV) for `horizon` steps, then monitor the produced
 * trace. Returns as fnet_run_trace. */
int fnet_run_stimuli(fnet_model* model, const char* scenario, const char* stimuli_text,
                     int horizon, int format, char** out);

void fnet_string_free(char* s);

#ifdef __cplusplus
}
#endif

#endif /* FNET_H */
