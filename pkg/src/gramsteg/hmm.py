"""Discrete hidden Markov models: forward probability and Viterbi decoding.

Model file format (UTF-8)::

    states: Rainy Sunny
    observations: Hike Shop Clean
    start: Rainy 0.6
    trans: Rainy Sunny 0.3
    emit: Sunny Hike 0.6

Entries that are not listed are zero.  Start, transition rows and emission
rows must each sum to one.

Viterbi paths are reported with one state more than there are
observations: after the last emission the model still moves on, and the
extra element is the most probable successor of the final state.  Drop it
to get the conventional path.  The reported probability is that of the
conventional path.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass
from os import PathLike
from pathlib import Path
from typing import Mapping, NamedTuple, Sequence

import numpy as np

from .errors import FormatError, InvalidModel, InvalidObservation, OracleTooLarge

SUM_TOLERANCE = 1e-9
ORACLE_LIMIT = 10**6
LOG_SPACE_THRESHOLD = 100


@dataclass(frozen=True, eq=False)
class HmmModel:
    states: tuple[str, ...]
    observations: tuple[str, ...]
    start: np.ndarray  # (S,)
    trans: np.ndarray  # (S, S), row = from-state
    emit: np.ndarray  # (S, O)

    def __post_init__(self):
        states = tuple(self.states)
        observations = tuple(self.observations)
        if not states or not observations:
            raise InvalidModel("a model needs at least one state and one observation")
        if len(set(states)) != len(states):
            raise InvalidModel("duplicate state label")
        if len(set(observations)) != len(observations):
            raise InvalidModel("duplicate observation label")
        start = np.array(self.start, dtype=float)
        trans = np.array(self.trans, dtype=float)
        emit = np.array(self.emit, dtype=float)
        S, O = len(states), len(observations)
        if start.shape != (S,) or trans.shape != (S, S) or emit.shape != (S, O):
            raise InvalidModel("parameter shapes do not match the state/observation lists")
        for name, arr in (("start", start), ("trans", trans), ("emit", emit)):
            if np.any(arr < 0) or np.any(arr > 1) or not np.all(np.isfinite(arr)):
                raise InvalidModel(f"{name} probabilities must lie in [0, 1]")
        if abs(start.sum() - 1) > SUM_TOLERANCE:
            raise InvalidModel(f"start probabilities sum to {start.sum()!r}")
        for i, s in enumerate(states):
            if abs(trans[i].sum() - 1) > SUM_TOLERANCE:
                raise InvalidModel(f"transitions out of {s!r} sum to {trans[i].sum()!r}")
            if abs(emit[i].sum() - 1) > SUM_TOLERANCE:
                raise InvalidModel(f"emissions of {s!r} sum to {emit[i].sum()!r}")
        for arr in (start, trans, emit):
            arr.setflags(write=False)
        object.__setattr__(self, "states", states)
        object.__setattr__(self, "observations", observations)
        object.__setattr__(self, "start", start)
        object.__setattr__(self, "trans", trans)
        object.__setattr__(self, "emit", emit)
        object.__setattr__(self, "_obs_index", {o: k for k, o in enumerate(observations)})

    @classmethod
    def from_dicts(
        cls,
        states: Sequence[str],
        observations: Sequence[str],
        start: Mapping[str, float],
        trans: Mapping[str, Mapping[str, float]],
        emit: Mapping[str, Mapping[str, float]],
    ) -> "HmmModel":
        si = {s: i for i, s in enumerate(states)}
        oi = {o: k for k, o in enumerate(observations)}
        sp = np.zeros(len(states))
        tp = np.zeros((len(states), len(states)))
        ep = np.zeros((len(states), len(observations)))
        try:
            for s, p in start.items():
                sp[si[s]] = p
            for s, row in trans.items():
                for t, p in row.items():
                    tp[si[s], si[t]] = p
            for s, row in emit.items():
                for o, p in row.items():
                    ep[si[s], oi[o]] = p
        except KeyError as exc:
            raise InvalidModel(f"unknown label {exc.args[0]!r}") from None
        return cls(tuple(states), tuple(observations), sp, tp, ep)

    def encode_observations(self, obs: Sequence[str]) -> list[int]:
        try:
            return [self._obs_index[o] for o in obs]
        except KeyError as exc:
            raise InvalidObservation(f"observation {exc.args[0]!r} not in the model alphabet") from None

    def relabeled(self, order: Sequence[int]) -> "HmmModel":
        """The same model with its states listed in ``order`` (a permutation of indices)."""
        order = list(order)
        return HmmModel(
            tuple(self.states[i] for i in order),
            self.observations,
            self.start[order],
            self.trans[np.ix_(order, order)],
            self.emit[order],
        )

    @classmethod
    def loads(cls, text: str, path: str | None = None) -> "HmmModel":
        states = observations = None
        start: dict[str, float] = {}
        trans: dict[str, dict[str, float]] = {}
        emit: dict[str, dict[str, float]] = {}
        for lineno, raw in enumerate(text.splitlines(), 1):
            line = raw.strip().lstrip("﻿")
            if not line or line.startswith("#"):
                continue
            key, sep, rest = line.partition(":")
            key, fields = key.strip(), rest.split()
            if not sep:
                raise FormatError(f"expected 'key: ...', got {line!r}", path, lineno)
            try:
                if key == "states":
                    states = fields
                elif key == "observations":
                    observations = fields
                elif key in ("start", "trans", "emit"):
                    if states is None or observations is None:
                        raise FormatError(f"'{key}' before states/observations", path, lineno)
                    arity = {"start": 2, "trans": 3, "emit": 3}[key]
                    if len(fields) != arity:
                        raise FormatError(f"'{key}' takes {arity} fields", path, lineno)
                    p = float(fields[-1])
                    if fields[0] not in states:
                        raise FormatError(f"unknown state {fields[0]!r}", path, lineno)
                    if key == "start":
                        start[fields[0]] = p
                    elif key == "trans":
                        if fields[1] not in states:
                            raise FormatError(f"unknown state {fields[1]!r}", path, lineno)
                        trans.setdefault(fields[0], {})[fields[1]] = p
                    else:
                        if fields[1] not in observations:
                            raise FormatError(f"unknown observation {fields[1]!r}", path, lineno)
                        emit.setdefault(fields[0], {})[fields[1]] = p
                else:
                    raise FormatError(f"unknown key {key!r}", path, lineno)
            except ValueError:
                raise FormatError(f"bad probability {fields[-1]!r}", path, lineno) from None
        if not states or not observations:
            raise FormatError("missing 'states:' or 'observations:' line", path)
        try:
            return cls.from_dicts(states, observations, start, trans, emit)
        except InvalidModel as exc:
            raise FormatError(str(exc), path) from None

    @classmethod
    def load(cls, path: str | PathLike) -> "HmmModel":
        path = Path(path)
        return cls.loads(path.read_text(encoding="utf-8"), str(path))

    def dumps(self) -> str:
        out = [f"states: {' '.join(self.states)}", f"observations: {' '.join(self.observations)}"]
        for i, s in enumerate(self.states):
            if self.start[i]:
                out.append(f"start: {s} {float(self.start[i])!r}")
        for i, s in enumerate(self.states):
            for j, t in enumerate(self.states):
                if self.trans[i, j]:
                    out.append(f"trans: {s} {t} {float(self.trans[i, j])!r}")
        for i, s in enumerate(self.states):
            for k, o in enumerate(self.observations):
                if self.emit[i, k]:
                    out.append(f"emit: {s} {o} {float(self.emit[i, k])!r}")
        return "\n".join(out) + "\n"


class ViterbiResult(NamedTuple):
    path: tuple[str, ...]
    probability: float
    log10_probability: float


class OracleResult(NamedTuple):
    total: float
    best_path: tuple[str, ...]
    best_probability: float


def _check_obs(model: HmmModel, obs: Sequence[str]) -> list[int]:
    if len(obs) == 0:
        raise InvalidObservation("observation sequence is empty")
    return model.encode_observations(obs)


def _safe_log10(a: np.ndarray) -> np.ndarray:
    with np.errstate(divide="ignore"):
        return np.log10(a)


def forward_probability(model: HmmModel, obs: Sequence[str], log_space: bool | None = None) -> float:
    """P(obs | model), summed over every hidden state path.

    ``log_space`` defaults to on for sequences longer than
    ``LOG_SPACE_THRESHOLD``; scaled recursion is used there so long inputs
    do not underflow before the final exponentiation.
    """
    idx = _check_obs(model, obs)
    if log_space is None:
        log_space = len(idx) > LOG_SPACE_THRESHOLD
    if log_space:
        return 10.0 ** forward_log10(model, obs)
    alpha = model.start * model.emit[:, idx[0]]
    for k in idx[1:]:
        alpha = (alpha @ model.trans) * model.emit[:, k]
    return float(alpha.sum())


def forward_log10(model: HmmModel, obs: Sequence[str]) -> float:
    """log10 of :func:`forward_probability`, via per-step rescaling."""
    idx = _check_obs(model, obs)
    alpha = model.start * model.emit[:, idx[0]]
    total = 0.0
    for step, k in enumerate(idx):
        if step:
            alpha = (alpha @ model.trans) * model.emit[:, k]
        scale = alpha.sum()
        if scale == 0:
            return -math.inf
        total += math.log10(scale)
        alpha = alpha / scale
    return total


def viterbi(model: HmmModel, obs: Sequence[str], log_space: bool | None = None) -> ViterbiResult:
    """Most probable hidden path for ``obs``.

    Ties go to the earliest state in declaration order at every
    back-pointer, starting from the final state; among equally probable
    paths this picks the one that is smallest when compared from its last
    state backwards.  See the module docstring for the path length.
    """
    idx = _check_obs(model, obs)
    if log_space is None:
        log_space = len(idx) > LOG_SPACE_THRESHOLD
    S = len(model.states)
    back = np.zeros((len(idx), S), dtype=np.int64)
    if log_space:
        lt, le = _safe_log10(model.trans), _safe_log10(model.emit)
        delta = _safe_log10(model.start) + le[:, idx[0]]
        for t, k in enumerate(idx[1:], 1):
            cand = delta[:, None] + lt
            back[t] = np.argmax(cand, axis=0)
            delta = cand[back[t], np.arange(S)] + le[:, k]
    else:
        delta = model.start * model.emit[:, idx[0]]
        for t, k in enumerate(idx[1:], 1):
            cand = delta[:, None] * model.trans
            back[t] = np.argmax(cand, axis=0)
            delta = cand[back[t], np.arange(S)] * model.emit[:, k]
    last = int(np.argmax(delta))
    best = float(delta[last])
    path = [last]
    for t in range(len(idx) - 1, 0, -1):
        path.append(int(back[t, path[-1]]))
    path.reverse()
    path.append(int(np.argmax(model.trans[last])))
    if log_space:
        log10p, prob = best, 10.0**best
    else:
        prob = best
        log10p = math.log10(best) if best > 0 else -math.inf
    return ViterbiResult(tuple(model.states[i] for i in path), prob, log10p)


def _tie_key(path: tuple[int, ...]) -> tuple[int, ...]:
    return tuple(reversed(path))


def enumerate_paths_oracle(model: HmmModel, obs: Sequence[str]) -> OracleResult:
    """Brute-force forward total and Viterbi argmax over every state sequence.

    Independent of the dynamic programs above; only for small inputs.
    """
    idx = _check_obs(model, obs)
    S = len(model.states)
    if S ** len(idx) > ORACLE_LIMIT:
        raise OracleTooLarge(f"{S}**{len(idx)} paths exceeds the limit of {ORACLE_LIMIT}")
    sp, tp, ep = model.start.tolist(), model.trans.tolist(), model.emit.tolist()
    total = 0.0
    best_p = -1.0
    best: tuple[int, ...] = ()
    for path in itertools.product(range(S), repeat=len(idx)):
        p = sp[path[0]] * ep[path[0]][idx[0]]
        for t in range(1, len(idx)):
            p = p * tp[path[t - 1]][path[t]]
            p = p * ep[path[t]][idx[t]]
        total += p
        if p > best_p or (p == best_p and _tie_key(path) < _tie_key(best)):
            best_p, best = p, path
    row = tp[best[-1]]
    successor = row.index(max(row))
    full = best + (successor,)
    return OracleResult(total, tuple(model.states[i] for i in full), best_p)
