/* C interface to the coset-state simulation laboratory.
 *
 * Experiments are configured with a JSON document, run to completion, and
 * queried for a JSON report. All randomness derives from the mandatory
 * "seed" config field, so a given (config, seed, version) triple always
 * produces a byte-identical report. Handles are not thread-safe; distinct
 * handles may be used from distinct threads.
 */
#ifndef COSETLAB_H
#define COSETLAB_H

#ifdef __cplusplus
extern "C" {
#endif

/* Status codes, shared with the CLI exit status. */
#define COSETLAB_OK 0            /* ran, every acceptance check passed */
#define COSETLAB_ERR_FAILED 1    /* ran, at least one acceptance check failed */
#define COSETLAB_ERR_CONFIG 2    /* config malformed or invalid */
#define COSETLAB_ERR_RESOURCE 3  /* parameters exceed a resource cap */
#define COSETLAB_ERR_INTERNAL 4

typedef struct cosetlab_experiment cosetlab_experiment;

/* Library version string (static storage). */
const char* cosetlab_version(void);

/* Message for the most recent error on this thread, or an empty string. */
const char* cosetlab_last_error(void);

/* Parses and validates config_json. Returns NULL on failure (consult
 * cosetlab_last_error). The handle must be destroyed by the caller. */
cosetlab_experiment* cosetlab_experiment_create(const char* config_json);

/* Canonical config with defaults applied, as JSON. Owned by the handle. */
const char* cosetlab_experiment_config(const cosetlab_experiment* e);

/* Runs the experiment; returns a status code from the table above. */
int cosetlab_experiment_run(cosetlab_experiment* e);

/* Report JSON from the last successful run (status 0 or 1), else NULL.
 * Owned by the handle; valid until the next run or destroy. */
const char* cosetlab_experiment_report(const cosetlab_experiment* e);

void cosetlab_experiment_destroy(cosetlab_experiment* e);

#ifdef __cplusplus
}
#endif

#endif /* COSETLAB_H */
