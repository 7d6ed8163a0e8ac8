import numpy as np
import pytest

from filexlab.seeding import make_rng
from filexlab.stats import shannon_entropy
from filexlab.toy_els import ToyElsParams, ToyElsState, init_state, softmax, toy_run, toy_update


def make_params(**overrides):
    base = dict(
        time_steps=2048,
        lexicon_size=16,
        learning_rate=3e-3,
        buffer_size=256,
        temperature=1.5,
        eval_samples=2000,
    )
    base.update(overrides)
    return ToyElsParams(**base)


def test_params_validation():
    make_params()
    with pytest.raises(ValueError):
        make_params(time_steps=0)
    with pytest.raises(ValueError):
        make_params(lexicon_size=0)
    with pytest.raises(ValueError):
        make_params(learning_rate=0.0)
    with pytest.raises(ValueError):
        make_params(learning_rate=-0.1)
    with pytest.raises(ValueError):
        make_params(temperature=0.0)
    with pytest.raises(ValueError):
        make_params(buffer_size=0)
    with pytest.raises(ValueError):
        make_params(eval_samples=0)
    with pytest.raises(ValueError):
        make_params(time_steps=100, buffer_size=256)  # no update would fit


def test_state_validation():
    ToyElsState(logits=np.zeros(4))
    with pytest.raises(ValueError):
        ToyElsState(logits=np.array([1.0, float("nan")]))
    with pytest.raises(ValueError):
        ToyElsState(logits=np.zeros((2, 2)))
    with pytest.raises(ValueError):
        ToyElsState(logits=np.zeros(4), updates_applied=-1)


def test_update_single_word_is_noop():
    params = make_params(lexicon_size=1, buffer_size=8, time_steps=8)
    state = init_state(params)
    nxt = toy_update(state, params, make_rng(3))
    assert np.array_equal(nxt.logits, np.zeros(1))
    assert nxt.updates_applied == 1


def test_update_dimension_mismatch():
    params = make_params(lexicon_size=4)
    state = ToyElsState(logits=np.zeros(3))
    with pytest.raises(ValueError):
        toy_update(state, params, make_rng(0))


def test_update_high_temperature_pulls_leader_down():
    # T huge: relaxed messages are near-uniform, so the top logit must drop
    params = ToyElsParams(
        time_steps=10_000,
        lexicon_size=4,
        learning_rate=1.0,
        buffer_size=10_000,
        temperature=1e6,
        eval_samples=10,
    )
    state = ToyElsState(logits=np.array([5.0, 0.0, 0.0, 0.0]))
    for seed in range(20):
        nxt = toy_update(state, params, make_rng(seed))
        assert nxt.logits[0] < state.logits[0]


def test_update_zero_mean_at_uniform():
    # from uniform logits the expected applied update vanishes by symmetry
    params = make_params(lexicon_size=6, buffer_size=16, time_steps=16)
    state = init_state(params)
    rng = make_rng(77)
    n = 10_000
    acc = np.zeros(6)
    acc_sq = np.zeros(6)
    for _ in range(n):
        nxt = toy_update(state, params, rng)
        delta = nxt.logits - state.logits
        acc += delta
        acc_sq += delta * delta
    mean = acc / n
    se = np.sqrt((acc_sq / n - mean**2) / n)
    assert np.all(np.abs(mean) < 3 * se)


def test_update_frozen_buffer_oracle():
    # recompute the update by hand from the same seed: every relaxed sample
    # must come from the same frozen logits
    params = make_params(lexicon_size=5, buffer_size=3, time_steps=3)
    theta0 = np.array([0.4, -0.2, 0.0, 1.0, -1.2])
    state = ToyElsState(logits=theta0.copy())
    seed = 4242
    nxt = toy_update(state, params, make_rng(seed))

    rng = make_rng(seed)
    g = rng.gumbel(size=(3, 5))
    z = (theta0 + g) / params.temperature
    z -= z.max(axis=1, keepdims=True)
    e = np.exp(z)
    y = e / e.sum(axis=1, keepdims=True)
    p = np.exp(theta0 - theta0.max())
    p /= p.sum()
    grad = y.mean(axis=0) - p
    rms = np.sqrt(np.mean(grad * grad))
    expected = theta0 + params.learning_rate * grad / rms
    assert np.array_equal(nxt.logits, expected)


def test_run_no_learning_limit():
    # one update with a vanishing learning rate leaves the policy uniform:
    # the evaluation is plain uniform sampling
    params = ToyElsParams(
        time_steps=256,
        lexicon_size=16,
        learning_rate=1e-15,
        buffer_size=256,
        temperature=1.5,
        eval_samples=10_000,
    )
    freqs = toy_run(params, 9)
    assert freqs.sum() == pytest.approx(1.0, abs=1e-12)
    assert shannon_entropy(freqs) > np.log2(16) - 0.05


def test_run_single_word():
    params = ToyElsParams(
        time_steps=64,
        lexicon_size=1,
        learning_rate=0.1,
        buffer_size=8,
        temperature=1.0,
        eval_samples=500,
    )
    out = toy_run(params, 0)
    assert np.array_equal(out, np.array([1.0]))
    assert shannon_entropy(out) == 0.0


def test_run_deterministic():
    params = make_params()
    a = toy_run(params, 31)
    b = toy_run(params, 31)
    c = toy_run(params, 32)
    assert np.array_equal(a, b)
    assert not np.array_equal(a, c)


def test_run_update_count_is_floor():
    # 2049 steps at buffer 1024 is exactly 2 updates; verify by replaying
    params = ToyElsParams(
        time_steps=2049,
        lexicon_size=4,
        learning_rate=0.05,
        buffer_size=1024,
        temperature=1.5,
        eval_samples=100,
    )
    rng = make_rng(5)
    state = init_state(params)
    state = toy_update(state, params, rng)
    state = toy_update(state, params, rng)
    p = softmax(state.logits)
    cs = np.cumsum(p)
    u = rng.random(100) * cs[-1]
    counts = np.bincount(np.searchsorted(cs, u, side="left"), minlength=4)
    assert np.array_equal(toy_run(params, 5), counts / 100)


def test_defaults_entropy_below_max():
    # stock configuration: self-reinforcement keeps measured entropy under
    # the 6-bit ceiling for nearly every seed
    params = ToyElsParams(
        time_steps=200_000,
        lexicon_size=64,
        learning_rate=3e-3,
        buffer_size=256,
        temperature=1.5,
        eval_samples=10_000,
    )
    below = sum(shannon_entropy(toy_run(params, seed)) < 6.0 for seed in range(100))
    assert below >= 95


def test_higher_learning_rate_lowers_entropy():
    # near-hard samples: aggressive steps collapse the lexicon
    common = dict(
        time_steps=80_000,
        lexicon_size=8,
        buffer_size=8,
        temperature=0.1,
        eval_samples=2000,
    )
    fast = ToyElsParams(learning_rate=0.1, **common)
    slow = ToyElsParams(learning_rate=1e-3, **common)
    h_fast = np.mean([shannon_entropy(toy_run(fast, s)) for s in range(50)])
    h_slow = np.mean([shannon_entropy(toy_run(slow, s)) for s in range(50)])
    assert h_fast < h_slow


def test_eval_frequencies_are_distribution():
    for seed in range(5):
        params = make_params(lexicon_size=32, eval_samples=777)
        out = toy_run(params, seed)
        assert np.all(out >= 0)
        assert out.sum() == pytest.approx(1.0, abs=1e-9)
        assert shannon_entropy(out) <= np.log2(32) + 1e-12
