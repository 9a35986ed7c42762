#!/usr/bin/env python3
"""A spectrum built on the primes whose determinant is a zeta ratio.

With lam_k = (log(1 + p_k^-q))^(1/r) over the k-th primes, the
determinant det(1 + exp(Q^r) - 1) telescopes into the Euler-type
product prod (1 + p^-q) = zeta(q) / zeta(2q). The truncated determinant
is compared against an independent series evaluation of the zeta
functions; the gap shrinks inside the rigorous prime tail bound.

CLI equivalent:  entrodet zeta-check --q 2 --r 2 --k 100000
"""

import math

from entrodet import first_k_primes, run_zeta_check, zeta_series

q = 2.0
print(f"zeta({q}) by series       : {zeta_series(q):.12f}   (pi^2/6 = {math.pi**2 / 6:.12f})")
print(f"zeta({2 * q}) by series       : {zeta_series(2 * q):.12f}   (pi^4/90 = {math.pi**4 / 90:.12f})")
print(f"target ratio            : {zeta_series(q) / zeta_series(2 * q):.12f}   (15/pi^2 = {15 / math.pi**2:.12f})")

print(f"\nfirst primes: {first_k_primes(10).tolist()} ...  (the 100000th is {int(first_k_primes(100_000)[-1])})")

report = run_zeta_check(q=2.0, r=2.0, k=100_000)
print("\n      k        p_k      log det        gap to ln ratio   tail bound")
for row in report.records:
    print(
        f"{row['k']:>9} {row['p_k']:>10}   {row['log_det']:.9f}   {row['abs_gap']:.3e}"
        f"        {row['tail_bound']:.3e}"
    )
print(f"\nidentity holds within the tail bound at every truncation: {report.summary['passed']}")
