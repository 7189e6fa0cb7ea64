// Copyright 2026 The qpinn Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef QPINN_QPINN_H
#define QPINN_QPINN_H

/*
 * C interface to the qpinn solver.
 *
 * Objects are opaque handles created and destroyed through this API. Every
 * fallible function returns a qpinn_status; on failure a message for the
 * calling thread is available from qpinn_last_error() until the next call
 * on that thread.
 */

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#  if defined(QPINN_BUILDING_LIBRARY)
#    define QPINN_API __declspec(dllexport)
#  else
#    define QPINN_API __declspec(dllimport)
#  endif
#else
#  define QPINN_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum qpinn_status {
    QPINN_OK = 0,
    QPINN_ERROR_INVALID_ARGUMENT = 1,
    QPINN_ERROR_IO = 2,
    QPINN_ERROR_DIVERGED = 3,
    QPINN_ERROR_INTERNAL = 4
} qpinn_status;

typedef struct qpinn_config qpinn_config;
typedef struct qpinn_model qpinn_model;

typedef struct qpinn_error_report {
    double max_abs_error;
    double mean_abs_error;
    double l2_error;
    size_t eval_points;
} qpinn_error_report;

typedef struct qpinn_run_summary {
    double initial_loss;
    double final_loss;
    qpinn_error_report errors;
    double wall_time;
} qpinn_run_summary;

QPINN_API const char *qpinn_version(void);
QPINN_API const char *qpinn_status_string(qpinn_status status);

/* Message describing the most recent failure on this thread, or "". */
QPINN_API const char *qpinn_last_error(void);

/* ---- configuration ---------------------------------------------------- */

/* Creates a config holding every default. */
QPINN_API qpinn_status qpinn_config_create(qpinn_config **out);
QPINN_API void qpinn_config_destroy(qpinn_config *config);

/* Number of setting keys and the key at `index` (NULL when out of range). */
QPINN_API size_t qpinn_config_key_count(void);
QPINN_API const char *qpinn_config_key(size_t index);

/*
 * Sets one flat key ("epochs", "lr", "hidden", "mode", ...) from its text
 * form. The config is unchanged when the value is rejected.
 */
QPINN_API qpinn_status qpinn_config_set(qpinn_config *config, const char *key, const char *value);

/*
 * Copies the text form of `key` into `buffer` (NUL-terminated). `*required`
 * receives the needed size including the terminator; a too-small buffer is
 * reported as QPINN_ERROR_INVALID_ARGUMENT after `*required` is filled.
 */
QPINN_API qpinn_status qpinn_config_get(const qpinn_config *config, const char *key, char *buffer,
                                        size_t capacity, size_t *required);

/* Applies every key in a flat JSON object file. */
QPINN_API qpinn_status qpinn_config_load_file(qpinn_config *config, const char *path);

QPINN_API qpinn_status qpinn_config_validate(const qpinn_config *config);

/* Flat JSON echo of the config, with the same buffer protocol as get. */
QPINN_API qpinn_status qpinn_config_to_json(const qpinn_config *config, char *buffer, size_t capacity,
                                            size_t *required);

/* ---- end-to-end run --------------------------------------------------- */

/* Trains, evaluates, and writes all artifacts to the configured out dir. */
QPINN_API qpinn_status qpinn_run_experiment(const qpinn_config *config, qpinn_run_summary *summary);

/* ---- training and evaluation ------------------------------------------ */

QPINN_API qpinn_status qpinn_train(const qpinn_config *config, qpinn_model **out);
QPINN_API void qpinn_model_destroy(qpinn_model *model);

/* Ansatz value and dy/dx at x, with exact features and training scaling. */
QPINN_API qpinn_status qpinn_model_predict(const qpinn_model *model, double x, double *y, double *dy_dx);

/* Copies up to `capacity` losses; `*count` receives the history length. */
QPINN_API qpinn_status qpinn_model_loss_history(const qpinn_model *model, double *out, size_t capacity,
                                                size_t *count);

QPINN_API qpinn_status qpinn_model_compare(const qpinn_model *model, size_t n_eval, qpinn_error_report *out);

QPINN_API qpinn_status qpinn_model_save_checkpoint(const qpinn_model *model, const char *path);

/* ---- circuit features ------------------------------------------------- */

/* Exact [P(00), P(01), P(10), P(11)] of the feature circuit at t. */
QPINN_API qpinn_status qpinn_circuit_probabilities(double t, double out[4]);

/* shots == 0: exact probabilities; otherwise seeded counts / shots. */
QPINN_API qpinn_status qpinn_quantum_features(double t, uint64_t shots, uint64_t seed, double out[4]);

QPINN_API qpinn_status qpinn_sample_counts(const double probabilities[4], uint64_t shots, uint64_t seed,
                                           uint64_t out[4]);

#ifdef __cplusplus
}
#endif

#endif /* QPINN_QPINN_H */
