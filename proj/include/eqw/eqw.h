// Copyright 2026 The eqwalk Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

/* C interface to the eqwalk library. All functions return an eqw_status;
 * on failure eqw_last_error() holds a message for the calling thread. */

#ifndef EQW_EQW_H_
#define EQW_EQW_H_

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#define EQW_API __declspec(dllexport)
#else
#define EQW_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum eqw_status {
  EQW_OK = 0,
  EQW_ERR_INVALID_ARGUMENT = 1,
  EQW_ERR_CONFIG = 2,
  EQW_ERR_NUMERICAL = 3,
  EQW_ERR_IO = 4,
  EQW_ERR_INTERNAL = 5
} eqw_status;

typedef enum eqw_axis { EQW_AXIS_X = 0, EQW_AXIS_Y = 1 } eqw_axis;

EQW_API const char* eqw_version(void);
EQW_API const char* eqw_last_error(void);
EQW_API const char* eqw_status_name(eqw_status status);

/* Configuration */
typedef struct eqw_config eqw_config;

EQW_API eqw_status eqw_config_load_file(const char* path, eqw_config** out);
EQW_API eqw_status eqw_config_load_string(const char* yaml, eqw_config** out);
EQW_API eqw_status eqw_config_from_preset(const char* name, eqw_config** out);
/* "key.sub=value", value in YAML syntax. */
EQW_API eqw_status eqw_config_set(eqw_config* cfg, const char* assignment);
/* Checks the document; *is_sweep tells whether it expands to several entries. */
EQW_API eqw_status eqw_config_validate(const eqw_config* cfg, int* is_sweep);
/* Resolved config as YAML. Copies at most cap bytes including the NUL;
 * *needed receives the full size including the NUL. */
EQW_API eqw_status eqw_config_dump(const eqw_config* cfg, char* buf, size_t cap, size_t* needed);
/* Informational notes from parsing (e.g. decimal phases turned into fractions). */
EQW_API size_t eqw_config_note_count(const eqw_config* cfg);
EQW_API const char* eqw_config_note(const eqw_config* cfg, size_t index);
EQW_API void eqw_config_free(eqw_config* cfg);

EQW_API size_t eqw_preset_count(void);
EQW_API const char* eqw_preset_name(size_t index);
EQW_API const char* eqw_preset_description(size_t index);

/* Commands. out_dir NULL or "" uses the config's output key, then
 * $EQWALK_OUTPUT_DIR, then ./eqwalk-out. */
EQW_API eqw_status eqw_run(const eqw_config* cfg, const char* out_dir);
EQW_API eqw_status eqw_spectrum(const eqw_config* cfg, const char* out_dir);
/* Runs every entry; on failure the first failing entry's status is returned
 * and *failed (if given) receives the number of failed entries. */
EQW_API eqw_status eqw_sweep(const eqw_config* cfg, const char* out_dir, int workers,
                             size_t* entries, size_t* failed);

/* Walks */
typedef struct eqw_walk eqw_walk;

/* Localized walk sized for the config's steps. */
EQW_API eqw_status eqw_walk_create(const eqw_config* cfg, eqw_walk** out);
EQW_API eqw_status eqw_walk_step(eqw_walk* walk, long count);
EQW_API long eqw_walk_time(const eqw_walk* walk);
EQW_API int eqw_walk_dims(const eqw_walk* walk);
/* sigma_x, sigma_y, sigma_d, sigma_a */
EQW_API eqw_status eqw_walk_widths(const eqw_walk* walk, double out[4]);
EQW_API eqw_status eqw_walk_norm(const eqw_walk* walk, double* out);
/* y is ignored for 1D walks. */
EQW_API eqw_status eqw_walk_probability(const eqw_walk* walk, long x, long y, double* out);
EQW_API void eqw_walk_destroy(eqw_walk* walk);

/* Spectra (radians; omega with eigenvalue exp(-i omega)) */
EQW_API eqw_status eqw_dispersion_1d(double theta, int p, double k, double* omega_plus);
EQW_API eqw_status eqw_dispersion_alternate(double theta_x, double theta_y, int p, double kx,
                                            double ky, eqw_axis field_axis, double* omega_plus);
EQW_API eqw_status eqw_dispersion_hadamard2(double kx, double ky, double out[2]);
EQW_API eqw_status eqw_dispersion_dft(double kx, double ky, double out[4]);
EQW_API eqw_status eqw_max_group_velocity_1d(double theta, int p, double* v_max, double* k_at);

/* Rational phases */
EQW_API eqw_status eqw_continued_fraction(double x, int max_terms, int64_t* terms, int* count,
                                          int* exact);
EQW_API eqw_status eqw_phase_to_rational(double phi, double tolerance, int64_t* q, int64_t* p);

/* Periods of a series; writes up to cap pairs, *count gets the total found. */
EQW_API eqw_status eqw_detect_periods(const double* series, size_t n, long max_period,
                                      long* periods, double* scores, size_t cap, size_t* count);

#ifdef __cplusplus
}
#endif

#endif  /* EQW_EQW_H_ */
