#ifndef POWERDYN_H
#define POWERDYN_H

/* Generated by cbindgen from crates/ffi. Do not edit by hand. */

#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>

/*
 Result code of every fallible call.
 */
typedef enum PdStatus {
  PD_STATUS_OK = 0,
  PD_STATUS_NULL_POINTER = 1,
  PD_STATUS_GAMMA_NOT_POSITIVE = 2,
  PD_STATUS_DEGENERATE_MODEL = 3,
  PD_STATUS_NON_FINITE_INPUT = 4,
  PD_STATUS_NOT_CONVERGENT = 5,
  PD_STATUS_NOT_OSCILLATORY = 6,
  PD_STATUS_TRIVIAL_ORBIT = 7,
  PD_STATUS_INVALID_ARGUMENT = 8,
  PD_STATUS_INDEX_OUT_OF_RANGE = 9,
  PD_STATUS_PANIC = 10,
} PdStatus;

typedef enum PdSpectralClass {
  PD_SPECTRAL_CLASS_MARGINALLY_STABLE = 0,
  PD_SPECTRAL_CLASS_UNSTABLE = 1,
} PdSpectralClass;

typedef enum PdBehavioralClass {
  PD_BEHAVIORAL_CLASS_CONVERGENT = 0,
  PD_BEHAVIORAL_CLASS_PERIOD_TWO = 1,
  PD_BEHAVIORAL_CLASS_LINEARLY_DIVERGENT = 2,
  PD_BEHAVIORAL_CLASS_GEOMETRICALLY_DIVERGENT = 3,
  PD_BEHAVIORAL_CLASS_GEOMETRICALLY_ALTERNATING = 4,
} PdBehavioralClass;

typedef enum PdArchetype {
  PD_ARCHETYPE_BOTH_DOMINANT = 0,
  PD_ARCHETYPE_BOTH_SUBMISSIVE = 1,
  PD_ARCHETYPE_A_DOMINANT_B_SUBMISSIVE = 2,
  PD_ARCHETYPE_B_DOMINANT_A_SUBMISSIVE = 3,
  PD_ARCHETYPE_MIXED_WITH_NEUTRAL = 4,
} PdArchetype;

typedef enum PdStance {
  PD_STANCE_DOMINANT = 0,
  PD_STANCE_SUBMISSIVE = 1,
  PD_STANCE_NEUTRAL = 2,
} PdStance;

typedef enum PdLimitKind {
  PD_LIMIT_KIND_FINITE = 0,
  PD_LIMIT_KIND_PLUS_INFINITY = 1,
  PD_LIMIT_KIND_MINUS_INFINITY = 2,
  PD_LIMIT_KIND_ALTERNATING_PLUS_MINUS = 3,
  /*
   Period-two orbit between `value` and `value2`.
   */
  PD_LIMIT_KIND_ORBIT = 4,
} PdLimitKind;

/*
 Opaque model handle.
 */
typedef struct PdModel PdModel;

/*
 Opaque trajectory handle.
 */
typedef struct PdTrajectory PdTrajectory;

typedef struct PdState {
  double a;
  double b;
} PdState;

/*
 Row-major 2x2 matrix.
 */
typedef struct PdMat2 {
  double m11;
  double m12;
  double m21;
  double m22;
} PdMat2;

/*
 One player's limit. `value` is set for `FINITE` and `ORBIT`, `value2`
 only for `ORBIT`; unused fields are zero.
 */
typedef struct PdLimit {
  enum PdLimitKind kind;
  double value;
  double value2;
} PdLimit;

typedef struct PdFate {
  struct PdLimit a_limit;
  struct PdLimit b_limit;
  uint8_t period;
  bool has_orbit;
  struct PdState orbit_first;
  struct PdState orbit_second;
} PdFate;

/*
 Flattened classification report. `fate` and `equilibrium` are meaningful
 only when the matching `has_*` flag is set.
 */
typedef struct PdReport {
  double lambda2;
  enum PdSpectralClass spectral;
  enum PdBehavioralClass behavioral;
  enum PdArchetype archetype;
  enum PdStance stance_a;
  enum PdStance stance_b;
  bool has_fate;
  struct PdFate fate;
  bool has_equilibrium;
  struct PdState equilibrium;
} PdReport;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/*
 Static, NUL-terminated description of a status code.
 */
const char *pd_status_message(enum PdStatus status);

/*
 Validates `(alpha, beta, gamma)` and allocates a model handle.

 # Safety
 `out` must be valid for writing one pointer. Release the handle with
 [`pd_model_free`].
 */
enum PdStatus pd_model_new(double alpha, double beta, double gamma, struct PdModel **out);

/*
 # Safety
 `model` must be null or a pointer from [`pd_model_new`] not yet freed.
 */
void pd_model_free(struct PdModel *model);

/*
 # Safety
 `model` must be a live handle; `out` must be writable.
 */
enum PdStatus pd_model_lambda2(const struct PdModel *model, double *out);

/*
 # Safety
 `model` must be a live handle; `out` must be writable.
 */
enum PdStatus pd_power(const struct PdModel *model, struct PdState state, double *out);

/*
 # Safety
 `model` must be a live handle; `out` must be writable.
 */
enum PdStatus pd_step(const struct PdModel *model, struct PdState state, struct PdState *out);

/*
 Closed-form state after `t` steps.

 # Safety
 `model` must be a live handle; `out` must be writable.
 */
enum PdStatus pd_state_at(const struct PdModel *model,
                          struct PdState initial,
                          uint64_t t,
                          struct PdState *out);

/*
 # Safety
 `model` must be a live handle; `out` must be writable.
 */
enum PdStatus pd_transition_matrix(const struct PdModel *model, struct PdMat2 *out);

/*
 # Safety
 `model` must be a live handle; `out` must be writable.
 */
enum PdStatus pd_matrix_power_closed(const struct PdModel *model, uint64_t t, struct PdMat2 *out);

/*
 # Safety
 `model` must be a live handle; `out` must be writable.
 */
enum PdStatus pd_matrix_power_iterative(const struct PdModel *model,
                                        uint64_t t,
                                        struct PdMat2 *out);

/*
 Full classification. `initial` may be null, in which case the report has
 no fate and no equilibrium.

 # Safety
 `model` must be a live handle; `initial` null or readable; `out` writable.
 */
enum PdStatus pd_classify(const struct PdModel *model,
                          const struct PdState *initial,
                          double epsilon,
                          struct PdReport *out);

/*
 # Safety
 `model` must be a live handle; `out` must be writable.
 */
enum PdStatus pd_equilibrium_limit(const struct PdModel *model,
                                   struct PdState initial,
                                   double epsilon,
                                   struct PdState *out);

/*
 # Safety
 `model` must be a live handle; `first` and `second` must be writable.
 */
enum PdStatus pd_oscillation_points(const struct PdModel *model,
                                    struct PdState initial,
                                    double epsilon,
                                    struct PdState *first,
                                    struct PdState *second);

/*
 Runs the forward simulation and allocates a trajectory handle.

 # Safety
 `model` must be a live handle; `out` must be writable. Release the result
 with [`pd_trajectory_free`].
 */
enum PdStatus pd_simulate(const struct PdModel *model,
                          struct PdState initial,
                          size_t steps,
                          double divergence_threshold,
                          struct PdTrajectory **out);

/*
 Number of stored states (at least one); zero for a null handle.

 # Safety
 `traj` must be null or a live handle.
 */
size_t pd_trajectory_len(const struct PdTrajectory *traj);

/*
 # Safety
 `traj` must be a live handle; `out` must be writable.
 */
enum PdStatus pd_trajectory_get(const struct PdTrajectory *traj, size_t index, struct PdState *out);

/*
 Writes the truncation index, or `-1` when the run completed all steps.

 # Safety
 `traj` must be a live handle; `out` must be writable.
 */
enum PdStatus pd_trajectory_truncated_at(const struct PdTrajectory *traj, int64_t *out);

/*
 # Safety
 `traj` must be null or a pointer from [`pd_simulate`] not yet freed.
 */
void pd_trajectory_free(struct PdTrajectory *traj);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* POWERDYN_H */
