"""Permutations, compositions and the statistics built on them.

Positions are 1-based throughout: ``i`` is a descent of ``p`` when
``p[i-1] > p[i]`` in Python indexing.  A position needs both neighbours to be
a peak or a valley, so positions 1 and n never are.

An *alternating descent* is an odd position ``i`` with ``p_i > p_{i+1}`` or an
even position ``i`` with ``p_i < p_{i+1}``.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from functools import lru_cache
from itertools import combinations
from typing import Iterable, Iterator, Sequence

from .errors import DomainError


class Permutation(tuple):
    """A word containing each of 1..n exactly once."""

    def __new__(cls, word: Iterable[int] = ()):
        self = super().__new__(cls, (int(v) for v in word))
        if sorted(self) != list(range(1, len(self) + 1)):
            raise DomainError(f"not a permutation of 1..{len(self)}: {tuple(self)}")
        return self

    @classmethod
    def from_string(cls, s: str) -> "Permutation":
        """Parse ``"4762315"`` (single digits) or ``"10,2,1,..."``."""
        s = s.strip()
        if "," in s:
            return cls(int(v) for v in s.split(",") if v.strip())
        return cls(int(ch) for ch in s)

    @property
    def n(self) -> int:
        return len(self)

    def __repr__(self):
        return f"Permutation({list(self)})"


class Composition(tuple):
    """Ordered positive parts; the empty composition is the unique one of 0."""

    def __new__(cls, parts: Iterable[int] = ()):
        self = super().__new__(cls, (int(v) for v in parts))
        if any(p < 1 for p in self):
            raise DomainError(f"composition parts must be positive: {tuple(self)}")
        return self

    @classmethod
    def parse(cls, s: str) -> "Composition":
        s = s.strip().strip("()")
        return cls(int(v) for v in s.split(",") if v.strip())

    @property
    def n(self) -> int:
        return sum(self)

    @property
    def length(self) -> int:
        return len(self)

    @property
    def des(self) -> int:
        return max(len(self) - 1, 0)

    @property
    def maj(self) -> int:
        return composition_maj(self)

    def __repr__(self):
        return f"Composition({tuple(self)})"


@dataclass(frozen=True)
class StatProfile:
    descent_set: frozenset
    alt_descent_set: frozenset
    peaks: frozenset
    valleys: frozenset

    @property
    def des(self) -> int:
        return len(self.descent_set)

    @property
    def altdes(self) -> int:
        return len(self.alt_descent_set)

    @property
    def maj(self) -> int:
        return sum(self.descent_set)

    @property
    def altmaj(self) -> int:
        return sum(self.alt_descent_set)


def descent_set(p: Sequence[int]) -> frozenset:
    return frozenset(i for i in range(1, len(p)) if p[i - 1] > p[i])


def alt_descent_set(p: Sequence[int]) -> frozenset:
    out = []
    for i in range(1, len(p)):
        down = p[i - 1] > p[i]
        if down == (i % 2 == 1):
            out.append(i)
    return frozenset(out)


def peaks(p: Sequence[int]) -> frozenset:
    return frozenset(i for i in range(2, len(p)) if p[i - 2] < p[i - 1] > p[i])


def valleys(p: Sequence[int]) -> frozenset:
    return frozenset(i for i in range(2, len(p)) if p[i - 2] > p[i - 1] < p[i])


def statistics(p: Sequence[int]) -> StatProfile:
    return StatProfile(descent_set(p), alt_descent_set(p), peaks(p), valleys(p))


def alternating_runs(p: Sequence[int]) -> list[tuple[int, ...]]:
    """Split ``p`` at its alternating descents.

    >>> alternating_runs((3, 4, 2, 1, 6, 7, 5))
    [(3, 4, 2), (1,), (6, 7, 5)]
    """
    return _split_at(p, alt_descent_set(p))


def increasing_runs(p: Sequence[int]) -> list[tuple[int, ...]]:
    return _split_at(p, descent_set(p))


def _split_at(p, cuts):
    runs, start = [], 0
    for i in sorted(cuts):
        runs.append(tuple(p[start:i]))
        start = i
    if len(p):
        runs.append(tuple(p[start:]))
    return runs


def complement(p: Sequence[int]) -> Permutation:
    n = len(p)
    return Permutation(n + 1 - v for v in p)


def is_alternating(p: Sequence[int]) -> bool:
    """``p1 > p2 < p3 > ...``"""
    return all((p[i] > p[i + 1]) == (i % 2 == 0) for i in range(len(p) - 1))


def is_reverse_alternating(p: Sequence[int]) -> bool:
    """``p1 < p2 > p3 < ...``"""
    return all((p[i] < p[i + 1]) == (i % 2 == 0) for i in range(len(p) - 1))


# -- compositions -----------------------------------------------------------

def comp_from_set(s: Iterable[int], n: int) -> Composition:
    s = sorted(set(s))
    if any(not 1 <= v <= n - 1 for v in s):
        raise DomainError(f"set {s} is not a subset of [1, {n - 1}]")
    if n == 0:
        return Composition()
    cuts = [0, *s, n]
    return Composition(b - a for a, b in zip(cuts, cuts[1:]))


def set_from_comp(L: Sequence[int]) -> frozenset:
    partial, out = 0, []
    for part in L[:-1]:
        partial += part
        out.append(partial)
    return frozenset(out)


def compositions(n: int) -> Iterator[Composition]:
    """All compositions of ``n``, ordered by their descent sets."""
    if n == 0:
        yield Composition()
        return
    for k in range(n):
        for s in combinations(range(1, n), k):
            yield comp_from_set(s, n)


def coarsenings(L: Sequence[int]) -> Iterator[Composition]:
    """Every K <= L in reverse refinement (merges of adjacent parts of L)."""
    for K in _coarsenings(tuple(L)):
        yield Composition(K)


@lru_cache(maxsize=1 << 15)
def _coarsenings(L: tuple) -> tuple:
    if len(L) <= 1:
        return (L,)
    out = []
    for K in _coarsenings(L[1:]):
        out.append((L[0], *K))
        out.append((L[0] + K[0], *K[1:]))
    return tuple(out)


def is_coarsening(K: Sequence[int], L: Sequence[int]) -> bool:
    """True when K <= L, i.e. D(K) is a subset of D(L)."""
    return sum(K) == sum(L) and set_from_comp(K) <= set_from_comp(L)


def composition_maj(L: Sequence[int]) -> int:
    k = len(L)
    return sum((k - 1 - i) * part for i, part in enumerate(L))


# -- counts -----------------------------------------------------------------

def euler_numbers(N: int) -> list[int]:
    """E_0..E_N from the boustrophedon (Seidel) triangle."""
    if N < 0:
        raise DomainError("N must be nonnegative")
    return list(_euler_table(N))


@lru_cache(maxsize=8)
def _euler_table(N):
    E, row = [1], [1]
    for n in range(1, N + 1):
        new = [0]
        for k in range(n):
            new.append(new[-1] + row[n - 1 - k])
        row = new
        E.append(row[-1])
    return tuple(E)


def euler_number(n: int) -> int:
    # one shared table; grows only when a larger index is requested
    return _euler_table(max(n, 64))[n]


def _check_composition(n, L):
    if any(p < 1 for p in L) or sum(L) != n:
        raise DomainError(f"{tuple(L)} is not a composition of {n}")


def multinomial(n: int, L: Sequence[int]) -> int:
    _check_composition(n, L)
    out = math.factorial(n)
    for part in L:
        out //= math.factorial(part)
    return out


def euler_multinomial(n: int, L: Sequence[int]) -> int:
    out = multinomial(n, L)
    for part in L:
        out *= euler_number(part)
    return out


def _signed_coarsening_sum(L, weight):
    L = tuple(L)
    if not L:
        raise DomainError("the empty composition has no descent class")
    n, k = sum(L), len(L)
    return sum((-1) ** (k - len(K)) * weight(n, K) for K in _coarsenings(L))


def beta(L: Sequence[int]) -> int:
    """Number of permutations with descent composition ``L``."""
    return _signed_coarsening_sum(L, multinomial)


def beta_hat(L: Sequence[int]) -> int:
    """Number of permutations with alternating descent composition ``L``."""
    return _signed_coarsening_sum(L, euler_multinomial)
