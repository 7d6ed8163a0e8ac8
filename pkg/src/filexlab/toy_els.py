"""Toy emergent-language analog: a softmax policy that reinforces its own messages.

A single logit vector theta over S words stands in for a sender network.
Each update draws a buffer of relaxed one-hot messages from the frozen
policy (Gumbel noise, temperature-scaled softmax) and takes one ascent
step toward them. Messages the policy favors get sampled more, so their
logits grow: the same rich-get-richer mechanism as the urn process, with
knobs for experience budget, lexicon size, learning rate, buffer size,
and relaxation temperature.
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from .sampling import categorical_counts
from .seeding import make_rng


@dataclass(frozen=True)
class ToyElsParams:
    """Hyperparameters of the toy agent.

    time_steps is the total episode budget; each parameter update consumes
    buffer_size episodes, so a run applies floor(time_steps / buffer_size)
    updates. eval_samples controls the precision of the final frequency
    estimate only, not the learning dynamics.
    """

    time_steps: int
    lexicon_size: int
    learning_rate: float
    buffer_size: int
    temperature: float
    eval_samples: int = 10_000

    def __post_init__(self) -> None:
        for name in ("time_steps", "lexicon_size", "buffer_size", "eval_samples"):
            v = getattr(self, name)
            if not (isinstance(v, (int, np.integer)) and not isinstance(v, bool) and v >= 1):
                raise ValueError(f"{name} must be a positive integer, got {v!r}")
        for name in ("learning_rate", "temperature"):
            v = getattr(self, name)
            if not (isinstance(v, (int, float)) and np.isfinite(v) and v > 0):
                raise ValueError(f"{name} must be a positive finite real, got {v!r}")
        if self.buffer_size > self.time_steps:
            raise ValueError(
                f"buffer_size ({self.buffer_size}) must not exceed "
                f"time_steps ({self.time_steps}); no update would fit"
            )


@dataclass
class ToyElsState:
    """Policy logits plus a count of updates applied so far."""

    logits: np.ndarray
    updates_applied: int = 0

    def __post_init__(self) -> None:
        self.logits = np.asarray(self.logits, dtype=np.float64)
        if self.logits.ndim != 1 or len(self.logits) == 0:
            raise ValueError("logits must be a non-empty 1-d vector")
        if not np.all(np.isfinite(self.logits)):
            raise ValueError("logits must be finite")
        if self.updates_applied < 0:
            raise ValueError(f"updates_applied must be >= 0, got {self.updates_applied}")


def softmax(logits: np.ndarray) -> np.ndarray:
    z = logits - logits.max()
    e = np.exp(z)
    return e / e.sum()


def init_state(params: ToyElsParams) -> ToyElsState:
    """Uniform policy: all logits zero."""
    return ToyElsState(logits=np.zeros(params.lexicon_size), updates_applied=0)


def toy_update(state: ToyElsState, params: ToyElsParams, rng: np.random.Generator) -> ToyElsState:
    """One buffer collection plus one ascent step.

    Draws buffer_size relaxed messages y_b = softmax((theta + g_b) / T),
    g_b i.i.d. standard Gumbel, all from the frozen current logits. The
    ascent direction is the buffer-averaged cross-entropy gradient
    mean_b(y_b) - softmax(theta). The raw direction is rescaled to a fixed
    root-mean-square step length of learning_rate, the way adaptive
    optimizers normalize gradient magnitude; a zero gradient is a no-op.
    """
    theta = state.logits
    if len(theta) != params.lexicon_size:
        raise ValueError(
            f"state has {len(theta)} logits, params expect {params.lexicon_size}"
        )
    p = softmax(theta)
    g = rng.gumbel(size=(params.buffer_size, params.lexicon_size))
    z = (theta + g) / params.temperature
    z -= z.max(axis=1, keepdims=True)
    e = np.exp(z)
    y = e / e.sum(axis=1, keepdims=True)
    grad = y.mean(axis=0) - p
    rms = float(np.sqrt(np.mean(grad * grad)))
    if rms > 0.0:
        theta = theta + params.learning_rate * grad / rms
    else:
        theta = theta.copy()
    return ToyElsState(logits=theta, updates_applied=state.updates_applied + 1)


def toy_run(params: ToyElsParams, seed: int) -> np.ndarray:
    """Train from the uniform policy, then estimate word frequencies.

    Applies floor(time_steps / buffer_size) updates and returns the
    empirical distribution of eval_samples draws from the final policy.
    Deterministic per (params, seed).
    """
    n_updates = params.time_steps // params.buffer_size
    if n_updates == 0:
        raise ValueError(
            f"time_steps ({params.time_steps}) below buffer_size "
            f"({params.buffer_size}): zero updates"
        )
    rng = make_rng(seed)
    state = init_state(params)
    for _ in range(n_updates):
        state = toy_update(state, params, rng)
    p = softmax(state.logits)
    counts = categorical_counts(p, params.eval_samples, rng)
    return counts / params.eval_samples
