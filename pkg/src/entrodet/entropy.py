"""Entropy functionals and their determinant reformulations.

The deformation family implemented here is built on the trace power sum
``I_r(Q) = sum_i lam_i^r`` of a state's spectrum:

* von Neumann          ``-sum lam log lam``
* Tsallis              ``(I_r - 1) / (1 - r)``
* Renyi                ``log(I_r) / (1 - r)``
* unified (two-param)  ``(I_r^s - 1) / ((1 - r) s)``

Each of these also has a determinant form. With ``f(Q) = Q^-Q - 1`` the
von Neumann entropy equals ``log det(1 + f(Q))``, and with
``f_r(Q) = exp(Q^r) - 1`` the power sum equals ``log det(1 + f_r(Q))``.
On truncations of infinite spectra the plain entropies can grow without
bound; the order-alpha regularized (Carleman) determinant

    det_alpha(1 + A) = det(1 + A) * exp(sum_{j=1}^{alpha-1} (-1)^j Tr(A^j) / j)

subtracts exactly the divergent part. ``vn_renormalized`` is
``log det_2(1 + f(Q))`` and ``hy_renormalized`` applies the same device
to the unified entropy for deformation orders r in (0, 1), where the
plain power sum may diverge.

All functions accept a :class:`~entrodet.linalg.Spectrum` (or a bare
value sequence) directly, so truncated infinite-dimensional spectra skip
the matrix algebra; density-matrix inputs are reduced through the
Hermitian eigensolver first.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Callable, Union

import numpy as np

from .errors import DomainError, FractionalPowerOfNegative, NotNormalized
from .linalg import (
    DensityMatrix,
    MatrixLike,
    Spectrum,
    SpectrumLike,
    as_spectrum,
    eig_hermitian,
    matrix_function,
)

# exp argument beyond which a determinant is reported in log form only
_EXP_CAP = 700.0

_LN2 = math.log(2.0)


def _base_scale(log_base: str) -> float:
    if log_base in ("e", "natural"):
        return 1.0
    if log_base in ("2", "two"):
        return 1.0 / _LN2
    raise DomainError(f"log base must be 'e' or '2', got {log_base!r}")


def _spectrum_of(x: Union[SpectrumLike, MatrixLike], normalized: bool | None = None) -> Spectrum:
    if isinstance(x, DensityMatrix):
        return eig_hermitian(x)[0]
    if isinstance(x, np.ndarray) and x.ndim == 2:
        return eig_hermitian(x)[0]
    return as_spectrum(x, normalized=normalized)


def _require_normalized(spec: Spectrum) -> Spectrum:
    if not spec.is_normalized:
        raise NotNormalized(
            f"entropy requires a normalized spectrum, sum is {spec.values.sum():.12g}"
        )
    return spec


def trace_power(x: Union[SpectrumLike, MatrixLike], r: float) -> float:
    """Trace power sum I_r = sum_i lam_i^r of a spectrum (0 log-safe)."""
    if r <= 0:
        raise DomainError(f"trace power order must be positive, got {r}")
    lam = _spectrum_of(x).values
    pos = lam[lam > 0]
    return float((pos**r).sum())


def von_neumann(x: Union[SpectrumLike, MatrixLike], log_base: str = "e") -> float:
    """Entropy -sum lam log lam with the 0 log 0 = 0 convention."""
    spec = _require_normalized(_spectrum_of(x))
    lam = spec.values[spec.values > 0]
    value = float(-(lam * np.log(lam)).sum())
    # clip spectral-noise negatives: the exact value is >= 0
    return max(value, 0.0) * _base_scale(log_base)


def vn_via_fredholm(q: MatrixLike) -> float:
    """von Neumann entropy as log det(1 + f(Q)) with f(Q) = Q^-Q - 1.

    Goes through the actual matrix determinant rather than the spectral
    sum, so it cross-checks the direct formula on finite states.
    """
    fq = matrix_function(q, lambda lam: lam ** (-lam) - 1.0)
    sign, logdet = np.linalg.slogdet(np.eye(fq.shape[0]) + fq)
    if sign <= 0:
        raise DomainError("det(1 + f(Q)) is not positive")
    return float(logdet)


def vn_renormalized(x: Union[SpectrumLike, MatrixLike]) -> float:
    """Renormalized von Neumann entropy log det_2(1 + f(Q)).

    Per eigenvalue this is ``-lam log lam - (lam^-lam - 1)``, i.e. the
    entropy with its own linearization subtracted. Each term is <= 0 and
    of second order in ``-lam log lam``, which keeps the sum finite on
    truncated spectra whose plain entropy grows without bound.
    """
    lam = _spectrum_of(x).values
    lam = lam[lam > 0]
    ent = -lam * np.log(lam)           # eigenvalues of -Q log Q
    return float((ent - np.expm1(ent)).sum())


def tsallis(x: Union[SpectrumLike, MatrixLike], r: float) -> float:
    """Tsallis entropy (I_r - 1) / (1 - r); the s = 1 unified member."""
    if r <= 0 or r == 1:
        raise DomainError(f"Tsallis order must be positive and != 1, got {r}")
    spec = _require_normalized(_spectrum_of(x))
    return (trace_power(spec, r) - 1.0) / (1.0 - r)


def renyi(x: Union[SpectrumLike, MatrixLike], r: float, log_base: str = "e") -> float:
    """Renyi entropy log(I_r) / (1 - r); the s -> 0 unified member."""
    if r <= 0 or r == 1:
        raise DomainError(f"Renyi order must be positive and != 1, got {r}")
    spec = _require_normalized(_spectrum_of(x))
    return math.log(trace_power(spec, r)) / (1.0 - r) * _base_scale(log_base)


def _check_unified_params(r: float, s: float) -> None:
    if r <= 0 or r == 1:
        raise DomainError(f"deformation order r must be positive and != 1, got {r}")
    if s == 0:
        raise DomainError("deformation order s must be nonzero")


def hu_ye(x: Union[SpectrumLike, MatrixLike], r: float, s: float) -> float:
    """Two-parameter unified entropy (I_r^s - 1) / ((1 - r) s).

    Interpolates the family: s = 1 gives Tsallis, s -> 0 Renyi, and
    r -> 1 (at s = 1) the von Neumann entropy. Non-negative on states,
    bounded by :func:`hy_bound` of the dimension.
    """
    _check_unified_params(r, s)
    spec = _require_normalized(_spectrum_of(x))
    p = trace_power(spec, r)
    return (p**s - 1.0) / ((1.0 - r) * s) + 0.0  # +0.0 folds away -0.0


def hy_bound(d: int, r: float, s: float) -> float:
    """Maximum of the unified entropy on rank-d states.

    ``(d^((1-r)s) - 1) / ((1-r)s)``, attained exactly by the maximally
    mixed state of rank d.
    """
    _check_unified_params(r, s)
    if d < 1:
        raise DomainError(f"dimension must be >= 1, got {d}")
    e = (1.0 - r) * s
    return (float(d) ** e - 1.0) / e


def f_r(q: MatrixLike, r: float) -> np.ndarray:
    """The positive operator exp(Q^r) - 1 via the functional calculus."""
    if r <= 0:
        raise DomainError(f"order r must be positive, got {r}")
    return matrix_function(q, lambda lam: math.expm1(lam**r))


def log_det_r(x: Union[SpectrumLike, MatrixLike], r: float) -> float:
    """log det(1 + f_r(Q)) for f_r(Q) = exp(Q^r) - 1.

    On a spectrum this accumulates ``log1p(expm1(lam^r))`` per
    eigenvalue, which reproduces the identity log det = I_r to roundoff;
    a matrix input goes through the dense log-determinant.
    """
    if r <= 0:
        raise DomainError(f"order r must be positive, got {r}")
    if isinstance(x, DensityMatrix) or (isinstance(x, np.ndarray) and x.ndim == 2):
        m = f_r(x, r)
        sign, logdet = np.linalg.slogdet(np.eye(m.shape[0]) + m)
        if sign <= 0:
            raise DomainError("det(1 + f_r(Q)) is not positive")
        return float(logdet)
    lam = _spectrum_of(x).values
    lam = lam[lam > 0]
    return float(np.log1p(np.expm1(lam**r)).sum())


def det_r(x: Union[SpectrumLike, MatrixLike], r: float) -> float:
    """det(1 + f_r(Q)) = exp(I_r); returns inf past the exp range.

    Use :func:`log_det_r` when the power sum may exceed log-space
    capacity (the log form is always finite for finite spectra).
    """
    ld = log_det_r(x, r)
    if ld > _EXP_CAP:
        return math.inf
    return math.exp(ld)


def alpha_star(r: float) -> int:
    """Smallest integer alpha with alpha * r >= 1, for r in (0, 1)."""
    if not 0.0 < r < 1.0:
        raise DomainError(
            f"regularization order is defined for r in (0, 1), got {r}"
        )
    a = int(math.floor(1.0 / r))
    if a * r < 1.0:
        a += 1
    return a


def log_det_ren(x: SpectrumLike, r: float, alpha: int | None = None) -> float:
    """Log of the order-alpha regularized determinant det_alpha(1 + f_r(Q)).

    Per eigenvalue, with g = exp(lam^r) - 1:

        log(1 + g) + sum_{j=1}^{alpha-1} (-1)^j g^j / j

    For alpha = 2 every summand is <= 0 (it is log(1+g) - g), so the
    result is non-positive. ``alpha=None`` resolves to the smallest
    admissible order :func:`alpha_star`. The spectrum need not be
    normalized, only non-negative.
    """
    if not 0.0 < r < 1.0:
        raise DomainError(f"renormalization applies to r in (0, 1), got {r}")
    a_min = alpha_star(r)
    if alpha is None:
        alpha = a_min
    if alpha < a_min:
        raise DomainError(
            f"alpha = {alpha} is below the minimal admissible order {a_min}"
        )
    lam = _spectrum_of(x).values
    lam = lam[lam > 0]
    if lam.size == 0:
        return 0.0
    g = np.expm1(lam**r)
    acc = np.log1p(g)
    gj = np.ones_like(g)
    for j in range(1, alpha):
        gj = gj * g
        acc = acc + ((-1) ** j / j) * gj
    return float(acc.sum())


def det_ren(x: SpectrumLike, r: float, alpha: int | None = None) -> float:
    """exp of :func:`log_det_ren` (inf past the exp range)."""
    ld = log_det_ren(x, r, alpha)
    if ld > _EXP_CAP:
        return math.inf
    return math.exp(ld)


def hy_fredholm(x: Union[SpectrumLike, MatrixLike], r: float, s: float) -> float:
    """Unified entropy through the determinant: uses log det(1 + f_r(Q)).

    Valid for r > 1, where the determinant is finite on any state; equal
    to :func:`hu_ye` by the identity log det = I_r.
    """
    if r <= 1:
        raise DomainError(f"determinant form requires r > 1, got {r}")
    if s == 0:
        raise DomainError("deformation order s must be nonzero")
    spec = _require_normalized(_spectrum_of(x))
    ld = log_det_r(spec, r)
    return (ld**s - 1.0) / ((1.0 - r) * s) + 0.0


def hy_renormalized(
    x: SpectrumLike, r: float, s: float, alpha: int | None = None
) -> float:
    """Renormalized unified entropy for r in (0, 1).

    ``((log det_alpha)^s - 1) / ((1 - r) s)`` over the regularized
    determinant. The regularized log-determinant is typically negative,
    so fractional ``s`` is rejected rather than guessing a signed-power
    convention; the value itself may be negative (renormalization
    forfeits the lower bound of the plain entropy).
    """
    if not 0.0 < r < 1.0:
        raise DomainError(f"renormalized form requires r in (0, 1), got {r}")
    if s == 0:
        raise DomainError("deformation order s must be nonzero")
    ld = log_det_ren(x, r, alpha)
    if ld < 0 and float(s) != round(s):
        raise FractionalPowerOfNegative(
            f"(log det_ren)^s with log det_ren = {ld:.6g} < 0 and fractional s = {s}"
        )
    powered = ld ** int(round(s)) if float(s) == round(s) else ld**s
    return (powered - 1.0) / ((1.0 - r) * s)


@dataclass(frozen=True)
class ProbeResult:
    """Outcome of a divergence probe over a spectrum generator.

    ``reached`` tells whether the partial power sums crossed the
    threshold; ``index`` is the first crossing index, or the last index
    scanned when the threshold was not reached.
    """

    reached: bool
    index: int
    partial_sum: float


def divergence_probe(
    lam_of_k: Callable[[np.ndarray], np.ndarray],
    r: float,
    threshold: float,
    k_max: int = 10_000_000,
    chunk: int = 1_000_000,
) -> ProbeResult:
    """Scan partial sums sum_{k<=K} lam_k^r for a threshold crossing.

    ``lam_of_k`` maps an array of 1-based indices to eigenvalues; it is
    consumed in chunks so generators over 10^7 indices stay cheap. For
    spectra whose power sum diverges the crossing arrives at finite K;
    for convergent sums the probe reports ``reached=False`` at ``k_max``.
    """
    if r <= 0:
        raise DomainError(f"probe order must be positive, got {r}")
    total = 0.0
    start = 1
    while start <= k_max:
        stop = min(start + chunk - 1, k_max)
        ks = np.arange(start, stop + 1, dtype=float)
        vals = np.asarray(lam_of_k(ks), dtype=float)
        partial = total + np.cumsum(vals**r)
        hits = np.nonzero(partial > threshold)[0]
        if hits.size:
            i = int(hits[0])
            return ProbeResult(True, start + i, float(partial[i]))
        total = float(partial[-1])
        start = stop + 1
    return ProbeResult(False, k_max, total)


# ---------------------------------------------------------------------------
# parameter bundle / dispatch used by the command-line front end
# ---------------------------------------------------------------------------

KINDS = ("vn", "vn-ren", "tsallis", "renyi", "hy", "hy-fredholm", "hy-ren")


@dataclass(frozen=True)
class EntropyParams:
    """Deformation parameters shared by the unified-entropy family.

    ``alpha=None`` means the regularization order is resolved to the
    smallest admissible value for the given r.
    """

    r: float = 2.0
    s: float = 1.0
    alpha: int | None = None
    log_base: str = "e"


@dataclass(frozen=True)
class EntropyResult:
    """A computed entropy value plus the route and diagnostics behind it."""

    value: float
    method: str
    diagnostics: dict = field(default_factory=dict)
    divergent: bool = False


def evaluate(
    kind: str,
    x: Union[SpectrumLike, MatrixLike],
    params: EntropyParams = EntropyParams(),
) -> EntropyResult:
    """Evaluate one entropy kind with shared diagnostics.

    ``kind`` is one of ``vn, vn-ren, tsallis, renyi, hy, hy-fredholm,
    hy-ren``. Density-matrix input is reduced to its spectrum once; the
    diagnostics carry the trace power sum, the relevant log-determinant
    and the regularization order actually used.
    """
    if kind not in KINDS:
        raise DomainError(f"unknown entropy kind {kind!r}; choose from {KINDS}")
    spec = _spectrum_of(x)
    r, s = params.r, params.s
    diagnostics: dict = {"dim": len(spec)}
    divergent = False

    if kind == "vn":
        value = von_neumann(spec, params.log_base)
        method = "direct-spectral"
        diagnostics["log_det"] = value if params.log_base in ("e", "natural") else value * _LN2
    elif kind == "vn-ren":
        value = vn_renormalized(spec)
        method = "renormalized"
        diagnostics["alpha"] = 2
    elif kind == "tsallis":
        value = tsallis(spec, r)
        method = "direct-spectral"
        diagnostics["trace_power"] = trace_power(spec, r)
    elif kind == "renyi":
        value = renyi(spec, r, params.log_base)
        method = "direct-spectral"
        diagnostics["trace_power"] = trace_power(spec, r)
    elif kind == "hy":
        value = hu_ye(spec, r, s)
        method = "direct-spectral"
        diagnostics["trace_power"] = trace_power(spec, r)
    elif kind == "hy-fredholm":
        value = hy_fredholm(spec, r, s)
        method = "fredholm"
        diagnostics["log_det"] = log_det_r(spec, r)
    else:  # hy-ren
        alpha = params.alpha if params.alpha is not None else alpha_star(r)
        value = hy_renormalized(spec, r, s, alpha)
        method = "renormalized"
        diagnostics["alpha"] = alpha
        diagnostics["log_det"] = log_det_ren(spec, r, alpha)

    if not math.isfinite(value):
        divergent = True
    return EntropyResult(value, method, diagnostics, divergent)
