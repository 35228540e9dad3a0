#ifndef QCAPON_H
#define QCAPON_H

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

/**
 * Full beamformer (both sub-signals under one constraint set).
 */
#define QC_SOLVER_FULL 0

/**
 * Baseline beamformer applied per sub-signal.
 */
#define QC_SOLVER_BASELINE 1

typedef enum QcStatus {
  QC_STATUS_OK = 0,
  QC_STATUS_NULL_POINTER = 1,
  QC_STATUS_INVALID_ARGUMENT = 2,
  QC_STATUS_INVALID_CONFIG = 3,
  QC_STATUS_SINGULAR = 4,
  QC_STATUS_DIMENSION_MISMATCH = 5,
  QC_STATUS_DOMAIN = 6,
  QC_STATUS_IO = 7,
  QC_STATUS_BUFFER_TOO_SMALL = 8,
  QC_STATUS_INTERNAL = 9,
} QcStatus;

/**
 * A validated scenario configuration.
 */
typedef struct QcScenario QcScenario;

/**
 * Beamformer weights for one scenario.
 */
typedef struct QcWeights QcWeights;

/**
 * `a + b·i + c·j + d·k`.
 */
typedef struct QcQuaternion {
  double a;
  double b;
  double c;
  double d;
} QcQuaternion;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/**
 * Message for the last failed call on this thread; empty after a success.
 * The pointer stays valid until the next call into this library on the
 * same thread.
 */
const char *qc_last_error_message(void);

/**
 * Hamilton product `p·q`.
 */
struct QcQuaternion qc_quaternion_mul(struct QcQuaternion p, struct QcQuaternion q);

/**
 * Parses a TOML scenario.
 *
 * # Safety
 * `toml_text` must be a NUL-terminated string; `out` must be writable.
 */
enum QcStatus qc_scenario_from_toml(const char *toml_text, struct QcScenario **out);

/**
 * Loads a scenario from a file path, or by bundled name such as `paper_fig2`.
 *
 * # Safety
 * `path_or_name` must be a NUL-terminated string; `out` must be writable.
 */
enum QcStatus qc_scenario_load(const char *path_or_name, struct QcScenario **out);

/**
 * # Safety
 * `scenario` must come from this library and not be freed twice. Null is ignored.
 */
void qc_scenario_free(struct QcScenario *scenario);

/**
 * # Safety
 * `scenario` must be a live handle; `out` must be writable.
 */
enum QcStatus qc_scenario_n_sensors(const struct QcScenario *scenario, size_t *out);

/**
 * Weights from the model covariance at the scenario's SNR and INR.
 *
 * # Safety
 * `scenario` must be a live handle; `out` must be writable.
 */
enum QcStatus qc_weights_true(const struct QcScenario *scenario,
                              uint32_t solver,
                              struct QcWeights **out);

/**
 * Weights from a sample covariance of `snapshots` synthesized snapshots.
 *
 * # Safety
 * `scenario` must be a live handle; `out` must be writable.
 */
enum QcStatus qc_weights_sample(const struct QcScenario *scenario,
                                uint32_t solver,
                                uint64_t seed,
                                size_t snapshots,
                                struct QcWeights **out);

/**
 * # Safety
 * `weights` must come from this library and not be freed twice. Null is ignored.
 */
void qc_weights_free(struct QcWeights *weights);

/**
 * # Safety
 * `weights` must be a live handle; `out` must be writable.
 */
enum QcStatus qc_weights_len(const struct QcWeights *weights, size_t *out);

/**
 * Copies the weight vector into `buf`. `written` receives the length even
 * when `cap` is too small (status `BufferTooSmall`, nothing copied).
 *
 * # Safety
 * `buf` must hold `cap` elements; `written` must be writable.
 */
enum QcStatus qc_weights_get(const struct QcWeights *weights,
                             struct QcQuaternion *buf,
                             size_t cap,
                             size_t *written);

/**
 * Output SINR in dB of `weights` against the scenario's true sources.
 *
 * # Safety
 * Both handles must be live; `out` must be writable.
 */
enum QcStatus qc_output_sinr_db(const struct QcScenario *scenario,
                                const struct QcWeights *weights,
                                double *out);

/**
 * Response toward each interferer sub-signal relative to the SOI, in dB.
 * Same buffer protocol as [`qc_weights_get`].
 *
 * # Safety
 * Both handles must be live; `buf` must hold `cap` elements.
 */
enum QcStatus qc_null_depths_db(const struct QcScenario *scenario,
                                const struct QcWeights *weights,
                                double *buf,
                                size_t cap,
                                size_t *written);

/**
 * Real multiplications needed to compute one weight vector for `n` sensors.
 *
 * # Safety
 * `out` must be writable.
 */
enum QcStatus qc_multiplication_cost(uint32_t solver, size_t n, uint64_t *out);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* QCAPON_H */
