import itertools
import math

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from gramsteg.errors import FormatError, InvalidModel, InvalidObservation, OracleTooLarge
from gramsteg.hmm import (
    HmmModel,
    enumerate_paths_oracle,
    forward_log10,
    forward_probability,
    viterbi,
)

OBS = ["Hike", "Shop", "Clean"]


def random_model(rng, n_states, n_obs, quantum=None):
    def rows(k, width):
        a = rng.random((k, width)) + 0.05
        if quantum:
            a = np.round(a * quantum) + 1
        return a / a.sum(axis=1, keepdims=True)

    states = [f"s{i}" for i in range(n_states)]
    obs = [f"o{k}" for k in range(n_obs)]
    return HmmModel(states, obs, rows(1, n_states)[0], rows(n_states, n_states), rows(n_states, n_obs))


def joint_log10(m, path, obs):
    si = [m.states.index(x) for x in path]
    oi = m.encode_observations(obs)
    total = math.log10(m.start[si[0]] * m.emit[si[0], oi[0]])
    for t in range(1, len(si)):
        total += math.log10(m.trans[si[t - 1], si[t]] * m.emit[si[t], oi[t]])
    return total


def test_weather_forward(weather):
    assert forward_probability(weather, OBS) == pytest.approx(0.033612, abs=1e-12)


def test_weather_viterbi(weather):
    result = viterbi(weather, OBS)
    assert result.path == ("Sunny", "Rainy", "Rainy", "Rainy")
    # 0.4*0.6 * 0.4*0.4 * 0.7*0.5
    assert result.probability == pytest.approx(0.01344, abs=1e-15)
    assert result.log10_probability == pytest.approx(math.log10(0.01344))


def test_weather_oracle(weather):
    total, path, best = enumerate_paths_oracle(weather, OBS)
    assert total == pytest.approx(0.033612, abs=1e-12)
    assert path == ("Sunny", "Rainy", "Rainy", "Rainy")
    assert best == pytest.approx(0.01344, abs=1e-15)


def test_single_observation_closed_form(weather):
    for o in OBS:
        k = weather.observations.index(o)
        assert forward_probability(weather, [o]) == pytest.approx(float(weather.start @ weather.emit[:, k]))


def test_deterministic_emissions():
    m = HmmModel.from_dicts(
        ["A", "B", "C"],
        ["a", "b", "c"],
        {"A": 0.2, "B": 0.5, "C": 0.3},
        {s: {"A": 0.3, "B": 0.3, "C": 0.4} for s in "ABC"},
        {"A": {"a": 1}, "B": {"b": 1}, "C": {"c": 1}},
    )
    assert viterbi(m, list("cabba")).path[:-1] == tuple("CABBA")
    assert viterbi(m, list("cabba")).path[-1] == "C"


def test_single_state_oracle():
    m = HmmModel(["only"], ["x", "y"], [1.0], [[1.0]], [[0.25, 0.75]])
    total, path, best = enumerate_paths_oracle(m, ["x", "y", "y"])
    assert total == pytest.approx(0.25 * 0.75 * 0.75)
    assert best == total
    assert path == ("only",) * 4


def test_all_tied_picks_first_state():
    m = HmmModel(["p", "q"], ["x"], [0.5, 0.5], [[0.5, 0.5], [0.5, 0.5]], [[1.0], [1.0]])
    assert viterbi(m, ["x"] * 4).path == ("p",) * 5
    assert enumerate_paths_oracle(m, ["x"] * 4).best_path == ("p",) * 5


def test_random_small_models_match_oracle():
    rng = np.random.default_rng(7)
    for trial in range(150):
        S, O = rng.integers(2, 5), rng.integers(2, 5)
        m = random_model(rng, S, O, quantum=3 if trial % 3 == 0 else None)
        obs = [m.observations[k] for k in rng.integers(0, O, size=rng.integers(1, 7))]
        oracle = enumerate_paths_oracle(m, obs)
        assert abs(forward_probability(m, obs) - oracle.total) <= 1e-12
        v = viterbi(m, obs)
        assert v.path == oracle.best_path
        assert v.probability == oracle.best_probability


@settings(max_examples=60, deadline=None)
@given(st.integers(0, 2**32 - 1), st.integers(1, 40))
def test_log_space_agrees(seed, length):
    rng = np.random.default_rng(seed)
    m = random_model(rng, 3, 3)
    obs = [m.observations[k] for k in rng.integers(0, 3, size=length)]
    lin, log = viterbi(m, obs, log_space=False), viterbi(m, obs, log_space=True)
    # near-ties may resolve differently under rounding; both must be optimal
    assert joint_log10(m, lin.path[:-1], obs) == pytest.approx(joint_log10(m, log.path[:-1], obs), rel=1e-9)
    assert log.log10_probability == pytest.approx(lin.log10_probability, rel=1e-9)
    assert math.log10(forward_probability(m, obs)) == pytest.approx(forward_log10(m, obs), rel=1e-9)
    assert forward_probability(m, obs, log_space=True) == pytest.approx(forward_probability(m, obs), rel=1e-9)


@settings(max_examples=60, deadline=None)
@given(st.integers(0, 2**32 - 1), st.integers(1, 8))
def test_path_probability_bounded_by_forward(seed, length):
    rng = np.random.default_rng(seed)
    m = random_model(rng, int(rng.integers(2, 5)), 3)
    obs = [m.observations[k] for k in rng.integers(0, 3, size=length)]
    f = forward_probability(m, obs)
    assert 0 <= viterbi(m, obs).probability <= f <= 1


@settings(max_examples=60, deadline=None)
@given(st.integers(0, 2**32 - 1))
def test_relabeling_invariance(seed):
    rng = np.random.default_rng(seed)
    m = random_model(rng, 4, 3)
    obs = [m.observations[k] for k in rng.integers(0, 3, size=5)]
    order = rng.permutation(4)
    assert viterbi(m.relabeled(order), obs).path == viterbi(m, obs).path
    assert forward_probability(m.relabeled(order), obs) == pytest.approx(forward_probability(m, obs))


def test_long_sequence_uses_log_space(weather):
    obs = OBS * 200
    result = viterbi(weather, obs)
    assert len(result.path) == len(obs) + 1
    assert math.isfinite(result.log10_probability)
    assert forward_log10(weather, obs) < -100


def test_unknown_observation(weather):
    with pytest.raises(InvalidObservation):
        forward_probability(weather, ["Swim"])
    with pytest.raises(InvalidObservation):
        viterbi(weather, [])


def test_oracle_guard():
    m = HmmModel([str(i) for i in range(10)], ["x"], [0.1] * 10, np.full((10, 10), 0.1), np.ones((10, 1)))
    with pytest.raises(OracleTooLarge):
        enumerate_paths_oracle(m, ["x"] * 7)


@pytest.mark.parametrize(
    "start, trans, emit",
    [
        ([0.5, 0.4], [[1, 0], [0, 1]], [[1], [1]]),
        ([1, 0], [[0.5, 0.4], [0, 1]], [[1], [1]]),
        ([1, 0], [[1, 0], [0, 1]], [[0.9], [1]]),
        ([1.5, -0.5], [[1, 0], [0, 1]], [[1], [1]]),
    ],
)
def test_invalid_models(start, trans, emit):
    with pytest.raises(InvalidModel):
        HmmModel(["a", "b"], ["x"], start, trans, emit)


def test_file_roundtrip(weather):
    again = HmmModel.loads(weather.dumps())
    assert again.states == weather.states
    assert np.array_equal(again.trans, weather.trans)
    assert np.array_equal(again.emit, weather.emit)


@pytest.mark.parametrize(
    "text",
    [
        "observations: x\nstart: a 1\n",
        "states: a\nobservations: x\nstart: a 1\nemit: a y 1\ntrans: a a 1\n",
        "states: a\nobservations: x\nstart: a 1\nemit: a x 1\n",
        "states: a\nobservations: x\nstart: a one\n",
        "states: a\nobservations: x\nbogus: a 1\n",
    ],
)
def test_file_errors(text):
    with pytest.raises(FormatError):
        HmmModel.loads(text)


def test_exhaustive_matches_itertools_count(weather):
    # the oracle really visits every path: total over all observation
    # sequences of a fixed length is 1
    grand = sum(
        enumerate_paths_oracle(weather, list(seq)).total for seq in itertools.product(OBS, repeat=3)
    )
    assert grand == pytest.approx(1.0, abs=1e-12)
