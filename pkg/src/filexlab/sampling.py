"""Categorical sampling by inverse CDF over an unnormalized weight vector."""

from __future__ import annotations

import numpy as np


def categorical_counts(weights: np.ndarray, n_draws: int, rng: np.random.Generator) -> np.ndarray:
    """Draw `n_draws` i.i.d. categorical indices proportional to `weights`
    and return the per-category counts (length len(weights), sums to n_draws).

    All draws use the weight vector as passed in; nothing is reweighted
    between draws. Inverse-CDF over the cumulative weights: O(S) setup,
    O(log S) per draw.
    """
    cs = np.cumsum(weights)
    # side="left" keeps u=0.0 in bin 0 and a rounded-up u*total in the last bin
    u = rng.random(n_draws) * cs[-1]
    idx = np.searchsorted(cs, u, side="left")
    return np.bincount(idx, minlength=len(weights))
