/* Copyright 2026 The qcc Authors
 * SPDX-License-Identifier: Apache-2.0 */

/* Compiled as C to make sure the public header stays C-clean. */

#include <math.h>
#include <stdio.h>

#include "qcc/qcc.h"

int main(void) {
  qcc_system* sys = NULL;
  qcc_equilibrium* eq = NULL;
  double freq = 0.0;
  qcc_status st = qcc_system_create("harmonic", "{\"omega\": 1.5}", &sys);
  if (st != QCC_OK) {
    fprintf(stderr, "create: %s\n", qcc_last_error());
    return 1;
  }
  st = qcc_equilibrium_find(sys, NULL, 0.0, &eq);
  if (st != QCC_OK || qcc_equilibrium_frequencies(eq, &freq) != QCC_OK) {
    fprintf(stderr, "equilibrium: %s\n", qcc_last_error());
    return 1;
  }
  qcc_equilibrium_destroy(eq);
  qcc_system_destroy(sys);
  if (fabs(freq - 1.5) > 1e-12) {
    fprintf(stderr, "frequency %.17g\n", freq);
    return 1;
  }
  printf("qcc %s ok\n", qcc_version());
  return 0;
}
