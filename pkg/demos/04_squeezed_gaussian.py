#!/usr/bin/env python3
"""Entanglement entropy of the two-mode squeezed vacuum, three ways.

The closed form cosh^2 r log cosh^2 r - sinh^2 r log sinh^2 r is exact,
but its textbook evaluation through t = tanh^2 r dies in double
precision once t rounds to 1 (r around 19). The overflow-free form
keeps going essentially forever, and the truncated Schmidt series
provides an independent cross-check at moderate r. A Nystrom
log-determinant of the kernel tanh(x+y)/cosh(x-y) on [0, r] is swept
alongside (quadrature profile is a calibration choice, not a formula).

Writes the sweep as plot-ready CSV next to this script. CLI equivalent:

    entrodet gaussian-experiment --r 0.1,0.5,1,2,5,10,18,25 --out sweep.csv
"""

import math
from pathlib import Path

from entrodet import (
    gaussian_entropy_analytic,
    run_gaussian_experiment,
    squeezed_schmidt_spectrum,
    von_neumann,
)

print("r      naive evaluation     stable evaluation   Schmidt series")
for r in (0.25, 1.0, 5.0, 10.0, 17.0, 19.0, 25.0):
    naive = gaussian_entropy_analytic(r, "naive")
    stable = gaussian_entropy_analytic(r, "stable")
    t = math.tanh(r) ** 2
    n_max = min(200_000, max(2, int(math.log(1e-14) / math.log(t))) if t < 1 else 200_000)
    series = von_neumann(squeezed_schmidt_spectrum(r, n_max))
    naive_txt = f"{naive:.12f}" if math.isfinite(naive) else f"non-finite ({naive})"
    print(f"{r:<5} {naive_txt:<22} {stable:.12f}   {series:.12f}")

print("\nthe stable form runs far past the breakdown point:")
for r in (50.0, 100.0, 300.0):
    print(f"  E({r:>5}) = {gaussian_entropy_analytic(r):.10f}"
          f"   (asymptote 2r - 2 ln 2 + 1 = {2 * r - 2 * math.log(2) + 1:.10f})")

report = run_gaussian_experiment(
    [0.1, 0.25, 0.5, 0.75, 1.0, 2.0, 5.0, 10.0, 15.0, 18.0, 20.0, 25.0],
    n_max=50_000,
)
overflows = report.summary["naive_overflows"]
print(f"\nsweep of {len(report.records)} rows: {overflows} naive overflow(s) flagged")
out = Path(__file__).with_name("squeezed_sweep.csv")
out.write_text(report.to_csv(), encoding="utf-8")
print(f"CSV written to {out}")
