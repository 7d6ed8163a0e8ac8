"""Statistics toolkit: entropy, Kendall tau-b, sign test, kernel smoothing.

Everything here is a pure function of its inputs. The Kendall p-value
uses three regimes picked by sample size: exact permutation enumeration
for n <= 8, seeded Monte-Carlo permutations for n <= 50, and the
tie-corrected normal approximation above that.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from itertools import permutations

import numpy as np

SIGN_TOLERANCE = 1e-12

_MC_PERMUTATIONS = 100_000
_MC_SEED = 0x7A11E5  # fixed: identical inputs give identical p-values


class UndefinedCorrelationError(ValueError):
    """Raised when a rank correlation has no defined value (a margin is constant)."""


@dataclass(frozen=True)
class CorrelationSummary:
    """Kendall tau-b with its two-sided significance.

    sign is "zero" when |tau| < SIGN_TOLERANCE, otherwise the sign of tau.
    """

    tau: float
    p_value: float
    n: int
    sign: str


@dataclass(frozen=True)
class TrendCurve:
    """Smoothed trend: strictly increasing x grid and estimates at each point."""

    xs: np.ndarray
    ys: np.ndarray


def shannon_entropy(p) -> float:
    """Shannon entropy in bits, with the 0*log(0) = 0 convention.

    `p` must be a probability vector: non-negative entries summing to 1
    within 1e-9.
    """
    p = np.asarray(p, dtype=np.float64)
    if p.ndim != 1 or len(p) == 0:
        raise ValueError("p must be a non-empty 1-d vector")
    if not np.all(np.isfinite(p)) or np.any(p < 0):
        raise ValueError("p must have finite non-negative entries")
    total = p.sum()
    if abs(total - 1.0) > 1e-9:
        raise ValueError(f"p must sum to 1 within 1e-9, got sum {total!r}")
    nz = p[p > 0]
    return max(0.0, float(-(nz * np.log2(nz)).sum()))


def _tie_group_sizes(values: np.ndarray) -> np.ndarray:
    _, counts = np.unique(values, return_counts=True)
    return counts[counts > 1].astype(np.int64)


def _count_swaps(y: list) -> int:
    """Pairs i<j with y[i] > y[j] (strict), by merge sort. O(n log n)."""
    n = len(y)
    buf = list(y)
    tmp = [0.0] * n
    swaps = 0
    width = 1
    while width < n:
        for lo in range(0, n - width, 2 * width):
            mid = lo + width
            hi = min(lo + 2 * width, n)
            i, j, k = lo, mid, lo
            while i < mid and j < hi:
                if buf[j] < buf[i]:
                    swaps += mid - i
                    tmp[k] = buf[j]
                    j += 1
                else:
                    tmp[k] = buf[i]
                    i += 1
                k += 1
            tmp[k:hi] = buf[i:mid] if i < mid else buf[j:hi]
            buf[lo:hi] = tmp[lo:hi]
        width *= 2
    return swaps


def _concordant_minus_discordant(x: np.ndarray, y: np.ndarray) -> tuple[int, int, int]:
    """(C - D, x-tied pairs, y-tied pairs) for the tau-b numerator/denominator."""
    n = len(x)
    order = np.lexsort((y, x))
    xs, ys = x[order], y[order]

    def pairs(groups):
        return int((groups * (groups - 1) // 2).sum())

    xtie = pairs(_tie_group_sizes(xs))
    ytie = pairs(_tie_group_sizes(ys))
    both = np.unique(np.column_stack((xs, ys)), axis=0, return_counts=True)[1]
    ntie = pairs(both[both > 1].astype(np.int64))

    # after the x-major sort, discordant pairs are exactly the strict
    # descents of the y sequence
    dis = _count_swaps(list(ys))
    tot = n * (n - 1) // 2
    return tot - xtie - ytie + ntie - 2 * dis, xtie, ytie


def _signed_pair_sums(x: np.ndarray, yperm: np.ndarray) -> np.ndarray:
    """C - D for each row of `yperm` against the common x. O(rows * n^2)."""
    sx = np.sign(x[:, None] - x[None, :])
    dy = np.sign(yperm[:, :, None] - yperm[:, None, :])
    return np.einsum("ij,kij->k", sx, dy) / 2.0


def _p_exact(x: np.ndarray, y: np.ndarray, observed_cmd: int) -> float:
    # all n! assignments of y to x are equally likely under the null
    perms = np.array(list(permutations(range(len(y)))), dtype=np.intp)
    cmd = _signed_pair_sums(x, y[perms])
    return float(np.mean(np.abs(cmd) >= abs(observed_cmd) - 0.5))


def _p_montecarlo(x: np.ndarray, y: np.ndarray, observed_cmd: int) -> float:
    rng = np.random.default_rng(_MC_SEED)
    hits = 0
    chunk = 2_000
    done = 0
    while done < _MC_PERMUTATIONS:
        rows = min(chunk, _MC_PERMUTATIONS - done)
        yp = rng.permuted(np.tile(y, (rows, 1)), axis=1)
        cmd = _signed_pair_sums(x, yp)
        hits += int(np.sum(np.abs(cmd) >= abs(observed_cmd) - 0.5))
        done += rows
    return (hits + 1) / (_MC_PERMUTATIONS + 1)


def _p_normal(x: np.ndarray, y: np.ndarray, observed_cmd: int) -> float:
    # tie-corrected variance of C - D under the null of independence
    n = len(x)

    def tie_sums(values):
        t = _tie_group_sizes(values).astype(np.float64)
        return (
            float((t * (t - 1) / 2).sum()),
            float((t * (t - 1) * (t - 2)).sum()),
            float((t * (t - 1) * (2 * t + 5)).sum()),
        )

    xtie, x3, xv = tie_sums(x)
    ytie, y3, yv = tie_sums(y)
    m = n * (n - 1)
    var = (
        (m * (2 * n + 5) - xv - yv) / 18.0
        + 2.0 * xtie * ytie / m
        + x3 * y3 / (9.0 * m * (n - 2))
    )
    z = observed_cmd / math.sqrt(var)
    return math.erfc(abs(z) / math.sqrt(2.0))


def kendall_tau(points) -> CorrelationSummary:
    """Kendall tau-b over (x, y) points, with two-sided significance.

    Raises UndefinedCorrelationError when all x or all y are tied.
    """
    pts = np.asarray(points, dtype=np.float64)
    if pts.ndim != 2 or pts.shape[1] != 2 or pts.shape[0] < 2:
        raise ValueError("points must be an (n, 2) collection with n >= 2")
    if not np.all(np.isfinite(pts)):
        raise ValueError("points must be finite")
    x, y = pts[:, 0], pts[:, 1]
    n = len(x)

    cmd, xtie, ytie = _concordant_minus_discordant(x, y)
    tot = n * (n - 1) // 2
    if xtie == tot:
        raise UndefinedCorrelationError("all x values are tied; tau is undefined")
    if ytie == tot:
        raise UndefinedCorrelationError("all y values are tied; tau is undefined")
    tau = cmd / math.sqrt(float(tot - xtie) * float(tot - ytie))
    tau = max(-1.0, min(1.0, tau))

    if n <= 8:
        p = _p_exact(x, y, cmd)
    elif n <= 50:
        p = _p_montecarlo(x, y, cmd)
    else:
        p = _p_normal(x, y, cmd)
    p = max(0.0, min(1.0, p))

    if tau > SIGN_TOLERANCE:
        sign = "positive"
    elif tau < -SIGN_TOLERANCE:
        sign = "negative"
    else:
        sign = "zero"
    return CorrelationSummary(tau=tau, p_value=p, n=n, sign=sign)


def binomial_sign_test(successes: int, trials: int) -> float:
    """Exact one-sided tail P(X >= successes) for X ~ Binomial(trials, 1/2).

    Computed in integer arithmetic, then converted to a float.
    """
    if not (isinstance(trials, (int, np.integer)) and trials >= 1):
        raise ValueError(f"trials must be a positive integer, got {trials!r}")
    if not (isinstance(successes, (int, np.integer)) and 0 <= successes <= trials):
        raise ValueError(f"successes must be in [0, {trials}], got {successes!r}")
    tail = sum(math.comb(trials, k) for k in range(successes, trials + 1))
    return tail / 2**trials


def gaussian_smooth(points, bandwidth: float | None = None, grid_size: int = 200) -> TrendCurve:
    """Gaussian-kernel trend of y over a log-spaced x grid (Nadaraya-Watson).

    Distances are measured in log-x, so the smoothing is uniform across a
    logarithmic sweep. bandwidth defaults to 1/20 of the log-x range.
    Every output value is a convex combination of the input y values.
    """
    pts = np.asarray(points, dtype=np.float64)
    if pts.ndim != 2 or pts.shape[1] != 2 or pts.shape[0] < 1:
        raise ValueError("points must be an (n, 2) collection with n >= 1")
    if not np.all(np.isfinite(pts)):
        raise ValueError("points must be finite")
    if np.any(pts[:, 0] <= 0):
        raise ValueError("all x values must be positive")
    if grid_size < 1:
        raise ValueError(f"grid_size must be >= 1, got {grid_size}")
    if bandwidth is not None and not bandwidth > 0:
        raise ValueError(f"bandwidth must be positive, got {bandwidth}")

    x, y = pts[:, 0], pts[:, 1]
    lx = np.log(x)
    lo, hi = float(lx.min()), float(lx.max())
    if lo == hi:
        return TrendCurve(xs=np.array([x[0]]), ys=np.array([float(y.mean())]))

    h = bandwidth if bandwidth is not None else (hi - lo) / 20.0
    lgrid = np.linspace(lo, hi, grid_size)
    z = (lgrid[:, None] - lx[None, :]) / h
    logw = -0.5 * z * z
    w = np.exp(logw - logw.max(axis=1, keepdims=True))
    ys = (w * y).sum(axis=1) / w.sum(axis=1)

    xs = np.exp(lgrid)
    xs[0], xs[-1] = x[lx.argmin()], x[lx.argmax()]
    keep = np.concatenate(([True], np.diff(xs) > 0))
    return TrendCurve(xs=xs[keep], ys=ys[keep])
