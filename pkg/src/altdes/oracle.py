"""Exhaustive enumeration of S_n: the ground truth the other modules are checked against.

All permutations of [n] are materialised as one ``(n!, n)`` array in
lexicographic order and every statistic is read off with vectorised
comparisons. ``oracle_counts`` and ``oracle_sequences`` agree with the
per-permutation definitions in :mod:`altdes.perm` (the tests enforce this for
small n by looping over :func:`itertools.permutations`).
"""
from __future__ import annotations

from dataclasses import dataclass, field
from functools import lru_cache

import numpy as np

from .errors import DomainError, ResourceError
from .perm import comp_from_set, set_from_comp

DEFAULT_LIMIT = 10


def _check_limit(n, limit):
    if n < 0:
        raise DomainError("n must be nonnegative")
    if n > limit:
        raise ResourceError(f"oracle size n={n} exceeds limit {limit}")


@lru_cache(maxsize=4)
def _perm_array(n: int) -> np.ndarray:
    P = np.zeros((1, 0), dtype=np.int8)
    for m in range(1, n + 1):
        # first letter a, then the lexicographic list of S_{m-1} relabelled around a
        blocks = [np.hstack([np.full((len(P), 1), a, dtype=np.int8), P + (P >= a)])
                  for a in range(m)]
        P = np.vstack(blocks)
    return P + 1


def all_permutations(n: int, limit: int = DEFAULT_LIMIT) -> np.ndarray:
    """Array of all permutations of 1..n, one per row, lexicographic order."""
    _check_limit(n, limit)
    out = _perm_array(n).view()
    out.flags.writeable = False
    return out


@dataclass(frozen=True)
class _Summary:
    descent_masks: tuple      # count per descent set, bit i-1 <-> position i
    alt_masks: tuple
    f_runs: int               # every alternating run shorter than 3
    f_peaks: int              # all valleys even, all peaks odd
    f_swapped: int            # all peaks even, all valleys odd
    g: int
    c: int
    d: int
    alternating: int
    reverse_alternating: int


@lru_cache(maxsize=16)
def _summary(n: int) -> _Summary:
    P = _perm_array(n).astype(np.int16)
    rows = len(P)
    if n <= 1:
        masks = (rows,)
        return _Summary(masks, masks, rows, rows, rows, rows, int(n == 1), 0, rows, rows)

    down = P[:, :-1] > P[:, 1:]
    odd_position = (np.arange(1, n) % 2 == 1)
    alt = np.where(odd_position, down, ~down)
    weights = (1 << np.arange(n - 1)).astype(np.int64)
    dmask = down.astype(np.int64) @ weights
    amask = alt.astype(np.int64) @ weights
    size = 1 << (n - 1)
    dcounts = np.bincount(dmask, minlength=size)
    acounts = np.bincount(amask, minlength=size)

    long_run = np.zeros(rows, dtype=bool)
    if n >= 3:
        long_run = (~alt[:, :-1] & ~alt[:, 1:]).any(axis=1)
    short_runs = ~long_run

    # interior positions 2..n-1
    left, mid, right = P[:, :-2], P[:, 1:-1], P[:, 2:]
    is_peak = (left < mid) & (mid > right)
    is_valley = (left > mid) & (mid < right)
    even_pos = (np.arange(2, n) % 2 == 0)
    bad = (is_peak & even_pos) | (is_valley & ~even_pos)
    bad_swapped = (is_peak & ~even_pos) | (is_valley & even_pos)
    f_peaks = int((~bad.any(axis=1)).sum()) if n >= 3 else rows
    f_swapped = int((~bad_swapped.any(axis=1)).sum()) if n >= 3 else rows

    ends_up = P[:, -2] < P[:, -1]
    g = int((short_runs & ends_up).sum())

    # last alternating run length = n - (largest alternating descent, or 0)
    pos = np.arange(1, n)
    last_alt = np.where(alt, pos, 0).max(axis=1)
    last_len = n - last_alt
    c = int((short_runs & (last_len == 1)).sum())
    d = int((short_runs & (last_len == 2)).sum())

    alternating = int(np.all(down == odd_position, axis=1).sum())
    reverse_alternating = int(np.all(down == ~odd_position, axis=1).sum())
    return _Summary(tuple(int(v) for v in dcounts), tuple(int(v) for v in acounts),
                    int(short_runs.sum()), f_peaks, f_swapped, g, c, d,
                    alternating, reverse_alternating)


def _mask_to_set(mask):
    return [i + 1 for i in range(mask.bit_length()) if mask >> i & 1]


def oracle_counts(n: int, mode: str = "descent", limit: int = DEFAULT_LIMIT) -> dict:
    """Distribution of descent compositions (``mode="descent"``) or alternating
    descent compositions (``mode="alt"``) over S_n."""
    _check_limit(n, limit)
    s = _summary(n)
    if mode == "descent":
        counts = s.descent_masks
    elif mode == "alt":
        counts = s.alt_masks
    else:
        raise DomainError(f"unknown oracle mode {mode!r}")
    return {comp_from_set(_mask_to_set(m), n): c for m, c in enumerate(counts) if c}


def count_alternating(n: int, limit: int = DEFAULT_LIMIT) -> int:
    """Brute-force Euler number: alternating permutations of [n]."""
    _check_limit(n, limit)
    return _summary(n).alternating


def count_reverse_alternating(n: int, limit: int = DEFAULT_LIMIT) -> int:
    _check_limit(n, limit)
    return _summary(n).reverse_alternating


def joint_distribution(n: int, mode: str = "alt", limit: int = DEFAULT_LIMIT) -> dict:
    """``{(des, maj): count}`` or ``{(altdes, altmaj): count}`` over S_n."""
    out: dict = {}
    for L, c in oracle_counts(n, mode, limit).items():
        key = (L.des, sum(set_from_comp(L)))
        out[key] = out.get(key, 0) + c
    return out


@dataclass(frozen=True)
class OracleTables:
    n_max: int
    f: list
    f_by_peaks: list
    f_swapped: list
    g: list
    c: list
    d: list
    alt_joint: list = field(repr=False)
    des_joint: list = field(repr=False)


def oracle_sequences(n_max: int, limit: int = DEFAULT_LIMIT) -> OracleTables:
    """Brute-force f, g, c, d and joint (des, maj) / (altdes, altmaj) tables for n <= n_max.

    ``g`` counts permutations with every alternating run shorter than 3 that end
    with an ascent; permutations of length 0 or 1 count as ending with an ascent.
    ``c(0) = d(0) = 0``: the empty permutation has no last run.
    """
    _check_limit(n_max, limit)
    f, fp, fs, g, c, d, aj, dj = ([] for _ in range(8))
    for n in range(n_max + 1):
        s = _summary(n)
        f.append(s.f_runs)
        fp.append(s.f_peaks)
        fs.append(s.f_swapped)
        g.append(s.g)
        c.append(s.c)
        d.append(s.d)
        aj.append(joint_distribution(n, "alt", limit))
        dj.append(joint_distribution(n, "descent", limit))
    return OracleTables(n_max, f, fp, fs, g, c, d, aj, dj)
