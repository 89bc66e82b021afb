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

/* Exercises the C interface from C. */

#include <math.h>
#include <stdio.h>
#include <stdlib.h>
#include <string.h>

#include "eqw/eqw.h"

static int failures = 0;

#define EXPECT(cond)                                                 \
  do {                                                               \
    if (!(cond)) {                                                   \
      fprintf(stderr, "%s:%d: failed: %s\n", __FILE__, __LINE__, #cond); \
      ++failures;                                                    \
    }                                                                \
  } while (0)

static void test_errors(void) {
  eqw_config* cfg = NULL;
  EXPECT(eqw_config_load_string("family: bogus\nsteps: 3\n", &cfg) == EQW_OK);
  EXPECT(eqw_config_validate(cfg, NULL) == EQW_ERR_CONFIG);
  EXPECT(strstr(eqw_last_error(), ":1:") != NULL);
  EXPECT(strcmp(eqw_status_name(EQW_ERR_CONFIG), "config error") == 0);
  EXPECT(strcmp(eqw_status_name(EQW_OK), "ok") == 0);
  eqw_config_free(cfg);
  EXPECT(eqw_config_load_string("family: [", &cfg) == EQW_ERR_CONFIG);
  EXPECT(eqw_config_from_preset("nope", &cfg) == EQW_ERR_CONFIG);
  EXPECT(eqw_config_load_string(NULL, &cfg) == EQW_ERR_INVALID_ARGUMENT);
}

static void test_presets(void) {
  size_t n = eqw_preset_count();
  int seen = 0;
  EXPECT(n >= 10);
  for (size_t i = 0; i < n; ++i)
    if (strcmp(eqw_preset_name(i), "fig10") == 0) seen = 1;
  EXPECT(seen);
  EXPECT(eqw_preset_name(n) == NULL);
  EXPECT(strlen(eqw_version()) > 0);
}

static void test_walk(void) {
  eqw_config* cfg = NULL;
  eqw_walk* w = NULL;
  double widths[4], norm = 0, p = 0, total = 0;
  int is_sweep = -1;
  long x, y;
  EXPECT(eqw_config_from_preset("fig2b", &cfg) == EQW_OK);
  EXPECT(eqw_config_set(cfg, "steps=30") == EQW_OK);
  EXPECT(eqw_config_validate(cfg, &is_sweep) == EQW_OK);
  EXPECT(is_sweep == 0);
  EXPECT(eqw_walk_create(cfg, &w) == EQW_OK);
  EXPECT(eqw_walk_dims(w) == 2);
  EXPECT(eqw_walk_step(w, 30) == EQW_OK);
  EXPECT(eqw_walk_time(w) == 30);
  EXPECT(eqw_walk_norm(w, &norm) == EQW_OK);
  EXPECT(fabs(norm - 1.0) < 1e-12);
  EXPECT(eqw_walk_widths(w, widths) == EQW_OK);
  EXPECT(widths[0] > 0 && widths[1] > widths[0]);
  for (x = -31; x <= 31; ++x)
    for (y = -31; y <= 31; ++y) {
      EXPECT(eqw_walk_probability(w, x, y, &p) == EQW_OK);
      total += p;
    }
  EXPECT(fabs(total - 1.0) < 1e-12);
  /* The window holds steps + 1 moves; the next one is refused. */
  EXPECT(eqw_walk_step(w, 1) == EQW_OK);
  EXPECT(eqw_walk_step(w, 1) == EQW_ERR_NUMERICAL);
  EXPECT(strstr(eqw_last_error(), "step 32") != NULL);
  EXPECT(eqw_walk_step(w, -1) == EQW_ERR_INVALID_ARGUMENT);
  eqw_walk_destroy(w);

  EXPECT(eqw_config_set(cfg, "family=1d") == EQW_OK);
  EXPECT(eqw_config_set(cfg, "initial=up") == EQW_OK);
  EXPECT(eqw_walk_create(cfg, &w) == EQW_OK);
  EXPECT(eqw_walk_dims(w) == 1);
  EXPECT(eqw_walk_step(w, 1) == EQW_OK);
  EXPECT(eqw_walk_probability(w, 1, 0, &p) == EQW_OK);
  EXPECT(fabs(p - 0.5) < 1e-15);
  eqw_walk_destroy(w);
  eqw_config_free(cfg);

  EXPECT(eqw_config_from_preset("fig4", &cfg) == EQW_OK);
  EXPECT(eqw_config_validate(cfg, &is_sweep) == EQW_OK);
  EXPECT(is_sweep == 1);
  EXPECT(eqw_walk_create(cfg, &w) == EQW_ERR_CONFIG);
  eqw_config_free(cfg);
}

static void test_dump_and_notes(void) {
  eqw_config* cfg = NULL;
  size_t need = 0;
  char* buf;
  EXPECT(eqw_config_load_string("family: 1d\nfield: {x: 0.7}\nsteps: 4\n", &cfg) == EQW_OK);
  EXPECT(eqw_config_dump(cfg, NULL, 0, &need) == EQW_OK);
  EXPECT(need > 0);
  buf = (char*)malloc(need);
  EXPECT(eqw_config_dump(cfg, buf, need, &need) == EQW_OK);
  EXPECT(strstr(buf, "family: 1d") != NULL);
  free(buf);
  EXPECT(eqw_config_note_count(cfg) == 1);
  EXPECT(strstr(eqw_config_note(cfg, 0), "real phase") != NULL);
  eqw_config_free(cfg);
}

static void test_math(void) {
  const double pi = 3.14159265358979323846;
  double w = 0, v = 0, k = 0, h[2], d[4], scores[8];
  int64_t terms[8], q = 0, p = 0;
  long periods[8];
  int count = 0, exact = 0;
  size_t found = 0, i;
  double series[200];

  EXPECT(eqw_dispersion_1d(pi / 4, 1, 0.0, &w) == EQW_OK);
  EXPECT(fabs(w - pi / 4) < 1e-15);
  EXPECT(eqw_dispersion_1d(pi / 4, 4, 0.0, &w) == EQW_OK);
  EXPECT(fabs(w - pi) < 1e-7);
  EXPECT(eqw_dispersion_alternate(pi / 4, pi / 4, 1, 0.0, 0.0, EQW_AXIS_X, &w) == EQW_OK);
  EXPECT(fabs(w - pi / 2) < 1e-15);
  EXPECT(eqw_dispersion_hadamard2(pi, 0.0, h) == EQW_OK);
  EXPECT(fabs(h[1] - pi / 2) < 1e-15);
  EXPECT(eqw_dispersion_dft(0.3, -0.2, d) == EQW_OK);
  EXPECT(d[0] <= d[1] && d[1] <= d[2] && d[2] <= d[3]);
  EXPECT(eqw_max_group_velocity_1d(pi / 4, 4, &v, &k) == EQW_OK);
  EXPECT(fabs(v - 0.5) < 1e-15 && k == 0.0);
  EXPECT(eqw_max_group_velocity_1d(pi / 4, 0, &v, &k) == EQW_ERR_INVALID_ARGUMENT);

  EXPECT(eqw_continued_fraction(3.0 / 7.0, 8, terms, &count, &exact) == EQW_OK);
  EXPECT(count == 3 && exact && terms[1] == 2 && terms[2] == 3);
  EXPECT(eqw_phase_to_rational(2 * pi / 120, 1e-12, &q, &p) == EQW_OK);
  EXPECT(q == 1 && p == 120);

  for (i = 0; i < 200; ++i) series[i] = sin(2 * pi * (double)i / 8.0);
  EXPECT(eqw_detect_periods(series, 200, 20, periods, scores, 8, &found) == EQW_OK);
  EXPECT(found >= 1 && periods[0] == 8 && scores[0] > 0.95);
  EXPECT(eqw_detect_periods(series, 10, 20, periods, scores, 8, &found) == EQW_ERR_INVALID_ARGUMENT);
}

int main(void) {
  test_errors();
  test_presets();
  test_walk();
  test_dump_and_notes();
  test_math();
  if (failures) {
    fprintf(stderr, "%d check(s) failed\n", failures);
    return 1;
  }
  printf("c api: all checks passed\n");
  return 0;
}
