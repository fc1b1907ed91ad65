"""Complex special functions: log-Gamma, digamma, and the Hurwitz zeta function.

log-Gamma and digamma are delegated to scipy.special (principal branch,
continuous on the cut plane, exactly the contract needed for phase
computations along vertical lines).  The Hurwitz zeta function is built
here by Euler-Maclaurin summation,

    zeta(s, a) = sum_{m<M} (m+a)^(-s) + (M+a)^(1-s)/(s-1) + (M+a)^(-s)/2
                 + sum_{k=1}^{K} B_{2k}/(2k)! * (s)_{2k-1} * (M+a)^(-s-2k+1) + R,

which continues the series to sigma > 1 - 2K.  The correction terms are
accumulated through their term-to-term ratio so that no intermediate
Pochhammer product overflows at desk heights (|t| up to ~1e4).

Bernoulli numbers are kept as exact rationals (through B_62, enough for
K <= 30 plus the remainder estimate) and converted to floats on use.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

import numpy as np
import scipy.special as _sp

_POLE_RADIUS = 1e-12


def _bernoulli_table(n_max: int = 62) -> dict[int, Fraction]:
    """B_0..B_n_max via the defining recurrence, exact rationals."""
    B = [Fraction(1)]
    for m in range(1, n_max + 1):
        acc = Fraction(0)
        for k in range(m):
            acc += math.comb(m + 1, k) * B[k]
        B.append(-acc / (m + 1))
    return {n: B[n] for n in range(n_max + 1)}


_BERNOULLI = _bernoulli_table()

# B_{2k}/(2k)! as floats, k = 1..31 (index 0 unused)
_B2K_OVER_FACT = [0.0] + [
    float(_BERNOULLI[2 * k] / Fraction(math.factorial(2 * k))) for k in range(1, 32)
]


def bernoulli_number(n: int) -> Fraction:
    """Exact Bernoulli number B_n for 0 <= n <= 62."""
    return _BERNOULLI[n]


def _near_nonpositive_integer(s: complex, radius: float) -> bool:
    if s.real > 0.5:
        return False
    k = round(s.real)
    return k <= 0 and abs(s - k) < radius


def log_gamma(s):
    """Principal branch of log Gamma, continuous on the plane cut along (-inf, 0]."""
    arr = np.asarray(s, dtype=complex)
    if arr.ndim == 0:
        if _near_nonpositive_integer(complex(arr), _POLE_RADIUS):
            raise ValueError(f"log_gamma pole at s = {complex(arr)}")
        return complex(_sp.loggamma(complex(arr)))
    out = _sp.loggamma(arr)
    if not np.all(np.isfinite(out)):
        raise ValueError("log_gamma pole inside input array")
    return out


def digamma(s):
    """Gamma'/Gamma on the cut plane."""
    arr = np.asarray(s, dtype=complex)
    if arr.ndim == 0:
        if _near_nonpositive_integer(complex(arr), _POLE_RADIUS):
            raise ValueError(f"digamma pole at s = {complex(arr)}")
        return complex(_sp.digamma(complex(arr)))
    out = _sp.digamma(arr)
    if not np.all(np.isfinite(out)):
        raise ValueError("digamma pole inside input array")
    return out


@dataclass(frozen=True)
class EulerMaclaurinConfig:
    """Summation parameters for the Hurwitz zeta continuation.

    M = None lets the cutoff follow the default policy max(ceil|Im s|, 10);
    K is the number of Bernoulli corrections (valid for sigma > 1 - 2K) and
    is raised automatically when the requested sigma needs it.
    """

    M: int | None = None
    K: int = 15
    target_abs_tol: float = 1e-12

    def __post_init__(self):
        if self.M is not None and self.M < 1:
            raise ValueError("cutoff M must be >= 1")
        if not (1 <= self.K <= 30):
            raise ValueError("K must lie in 1..30")


DEFAULT_EM = EulerMaclaurinConfig()


def _em_core(s: np.ndarray, alpha: float, M: int, K: int):
    """Euler-Maclaurin evaluation plus a remainder estimate, vectorized in s."""
    out = np.zeros_like(s, dtype=complex)
    # partial sum in blocks to keep peak memory flat for large M
    m = 0
    while m < M:
        hi = min(m + 4096, M)
        block = np.arange(m, hi, dtype=float) + alpha
        out = out + np.power.outer(block, np.zeros(1))[..., 0] if False else out
        # (m+alpha)^(-s) accumulated one chunk at a time
        out += np.sum(np.exp(np.multiply.outer(-np.log(block), s).T
                             if s.ndim == 1 else
                             -np.log(block)[(...,) + (None,) * s.ndim] * s), axis=-1 if s.ndim == 1 else 0) \
            if False else np.exp(-np.multiply.outer(s, np.log(block))).sum(axis=-1)
        m = hi
    w = M + alpha
    logw = math.log(w)
    winv2 = 1.0 / (w * w)
    pole = np.exp((1.0 - s) * logw) / (s - 1.0)
    half = 0.5 * np.exp(-s * logw)
    out += pole + half
    # Bernoulli corrections, built by ratio: term_1 = B2/2! * s * w^(-s-1)
    term = _B2K_OVER_FACT[1] * s * np.exp((-s - 1.0) * logw)
    corr = term.copy()
    for k in range(2, K + 1):
        ratio = (_B2K_OVER_FACT[k] / _B2K_OVER_FACT[k - 1]) \
            * (s + (2 * k - 3)) * (s + (2 * k - 2)) * winv2
        term = term * ratio
        corr += term
    out += corr
    # remainder estimate from the first omitted term, with a curvature factor
    nxt = np.abs(term) * abs(_B2K_OVER_FACT[min(K + 1, 31)] / _B2K_OVER_FACT[K]) \
        * np.abs((s + (2 * K - 1)) * (s + 2 * K)) * winv2
    sigma_min = float(np.min(s.real))
    safety = max(1.0, (abs(sigma_min) + 2 * K + 1) / max(sigma_min + 2 * K + 1, 1e-9))
    return out, float(np.max(nxt)) * safety


def hurwitz_zeta(s, alpha: float, cfg: EulerMaclaurinConfig = DEFAULT_EM):
    """Analytic continuation of sum_{m>=0} (m+alpha)^(-s), alpha in (0, 1].

    Accepts a complex scalar or an ndarray of arguments away from s = 1.
    The cutoff doubles (up to three times) if the internal remainder
    estimate misses cfg.target_abs_tol.
    """
    if not (0.0 < alpha <= 1.0):
        raise ValueError(f"alpha must lie in (0, 1], got {alpha}")
    arr = np.asarray(s, dtype=complex)
    scalar = arr.ndim == 0
    flat = np.atleast_1d(arr).astype(complex)
    if np.any(np.abs(flat - 1.0) < _POLE_RADIUS):
        raise ValueError("Hurwitz zeta pole at s = 1")
    K = max(cfg.K, math.ceil((3.0 - float(np.min(flat.real))) / 2.0))
    if K > 30:
        raise ValueError(
            f"sigma = {float(np.min(flat.real))} below the continuation range "
            f"sigma > {1 - 2 * 30} supported by the Bernoulli table")
    M = cfg.M if cfg.M is not None else max(10, math.ceil(float(np.max(np.abs(flat.imag)))))
    val, err = _em_core(flat, alpha, M, K)
    tries = 0
    while err > cfg.target_abs_tol and tries < 3:
        M *= 2
        val, err = _em_core(flat, alpha, M, K)
        tries += 1
    if scalar:
        return complex(val[0])
    return val.reshape(arr.shape)
