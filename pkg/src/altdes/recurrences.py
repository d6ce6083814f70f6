"""Exact sequences f, g, c, d from recurrences and series, with provenance.

``f(n)`` counts permutations of [n] with all valleys even and all peaks odd,
``g(n)`` those that also end with an ascent, and ``c(n)`` / ``d(n)`` split
``f(n)`` by whether the last alternating run has length 1 or 2.
"""
from __future__ import annotations

import json
from dataclasses import dataclass, field
from math import comb
from typing import Sequence

from .errors import DomainError
from .series import TruncatedSeries, named_series


@dataclass(frozen=True)
class SequenceTable:
    name: str
    values: tuple
    provenance: str   # "recurrence" | "series" | "oracle" | "ncsf"

    def __getitem__(self, n):
        return self.values[n]

    def __len__(self):
        return len(self.values)

    def as_record(self) -> dict:
        return {"name": self.name, "provenance": self.provenance,
                "values": [int(v) for v in self.values]}

    def to_json(self) -> str:
        return json.dumps(self.as_record())


def _check_N(N):
    if N < 0:
        raise DomainError("N must be nonnegative")


def fg_recurrence(N: int) -> tuple[SequenceTable, SequenceTable]:
    """f(0..N), g(0..N) by removing the largest letter."""
    _check_N(N)
    f, g = [1], [1]
    for n in range(N):
        tail = f[n] if n % 2 == 0 else g[n]
        fn = sum(comb(n, 2 * k) * f[2 * k] * f[n - 2 * k] for k in range((n - 1) // 2 + 1))
        gn = sum(comb(n, 2 * k) * f[2 * k] * (f[n - 2 * k] - g[n - 2 * k])
                 for k in range((n - 2) // 2 + 1))
        f.append(fn + tail)
        g.append(gn + tail)
    return SequenceTable("f", tuple(f), "recurrence"), SequenceTable("g", tuple(g), "recurrence")


def split_recurrence(N: int) -> tuple[SequenceTable, ...]:
    """f1, f2, g1, g2: the odd-index and even-index parts of f and g."""
    _check_N(N)
    f1, f2, g1, g2 = [0], [1], [0], [1]
    for n in range(N):
        s_f1 = sum(comb(n, k) * f2[k] * f2[n - k] for k in range(n))
        s_f2 = sum(comb(n, k) * f2[k] * f1[n - k] for k in range(n))
        s_g1 = sum(comb(n, k) * f2[k] * (f2[n - k] - g2[n - k]) for k in range(n))
        s_g2 = sum(comb(n, k) * f2[k] * (f1[n - k] - g1[n - k]) for k in range(n - 1))
        f1.append(s_f1 + f2[n])
        f2.append(s_f2 + g1[n])
        g1.append(s_g1 + f2[n])
        g2.append(s_g2 + g1[n])
    return tuple(SequenceTable(name, tuple(v), "recurrence")
                 for name, v in (("f1", f1), ("f2", f2), ("g1", g1), ("g2", g2)))


def _integral_egf(s: TruncatedSeries, name: str) -> tuple:
    values = s.egf()
    for n, v in enumerate(values):
        if v.denominator != 1:
            raise ArithmeticError(f"{name}: coefficient {n} is not integral ({v})")
    return tuple(int(v) for v in values)


def series_table(name: str, series_name: str, N: int) -> SequenceTable:
    return SequenceTable(name, _integral_egf(named_series(series_name, N), series_name), "series")


@dataclass
class OdeReport:
    order: int
    compared_through: int
    failures: list = field(default_factory=list)   # (equation, degree, lhs, rhs)
    initial_conditions: bool = True

    @property
    def passed(self) -> bool:
        return not self.failures and self.initial_conditions

    def detail(self) -> str:
        if self.passed:
            return (f"4 equations agree coefficientwise through x^{self.compared_through} "
                    f"(series order {self.order}; differentiation drops one order)")
        if not self.initial_conditions:
            return "initial conditions fail"
        eq, n, lhs, rhs = self.failures[0]
        return f"{eq}: coefficient of x^{n} differs: {lhs} != {rhs}"


def ode_verify(N: int = 25) -> OdeReport:
    """Check the closed forms of F1, F2, G1, G2 against the differential system.

    F1' = F2^2, F2' = F1 F2 + G1, G1' = F2 (F2 - G2) + F2, G2' = F2 (F1 - G1) + G1,
    F1(0) = G1(0) = 0, F2(0) = G2(0) = 1.
    """
    if N < 2:
        raise DomainError("ode_verify needs N >= 2")
    F1, F2, G1, G2 = (named_series(k, N) for k in ("F1", "F2", "G1", "G2"))
    M = N - 1
    equations = {
        "F1' = F2^2": (F1.derivative(), F2 * F2),
        "F2' = F1 F2 + G1": (F2.derivative(), F1 * F2 + G1),
        "G1' = F2 (F2 - G2) + F2": (G1.derivative(), F2 * (F2 - G2) + F2),
        "G2' = F2 (F1 - G1) + G1": (G2.derivative(), F2 * (F1 - G1) + G1),
    }
    report = OdeReport(N, M)
    for label, (lhs, rhs) in equations.items():
        rhs = rhs.truncate(M)
        for n in range(M + 1):
            if lhs[n] != rhs[n]:
                report.failures.append((label, n, lhs[n], rhs[n]))
    report.initial_conditions = (F1[0] == 0 and G1[0] == 0 and F2[0] == 1 and G2[0] == 1)
    return report


def cd_tables(N: int) -> tuple[SequenceTable, SequenceTable]:
    """c(0..N), d(0..N) from the quotients of Euler-number trisections."""
    _check_N(N)
    return series_table("c", "C_series", N), series_table("d", "D_series", N)


def f_routes(N: int = 12, oracle_limit: int | None = None) -> dict[str, SequenceTable]:
    """Every independent way of producing f(0..N) this package knows.

    The oracle route is included for ``N <= oracle_limit`` only (default: the
    oracle's own limit); longer tables would enumerate too much.
    """
    from . import ncsf, oracle

    f, _ = fg_recurrence(N)
    f1, f2, _, _ = split_recurrence(N)
    routes = {
        "recurrence": f,
        "split sums": SequenceTable("f", tuple(a + b for a, b in zip(f1.values, f2.values)),
                                    "recurrence"),
        "closed form": series_table("f", "F_closed", N),
        "reciprocal": series_table("f", "F_reciprocal", N),
        "ncsf": SequenceTable("f", _integral_egf(ncsf.phi_hat(ncsf.runs_shorter_than(3, N)), "ncsf"),
                              "ncsf"),
    }
    limit = oracle.DEFAULT_LIMIT if oracle_limit is None else oracle_limit
    n_or = min(N, limit)
    routes["oracle"] = SequenceTable("f", tuple(oracle.oracle_sequences(n_or, max(limit, n_or)).f),
                                     "oracle")
    return routes


def cd_routes(N: int = 12) -> dict[str, tuple[SequenceTable, SequenceTable]]:
    from . import ncsf

    def last_run(v):
        e = ncsf.last_run_rhs([1, 1], v, N)
        return _integral_egf(ncsf.phi_hat(e), "ncsf")

    return {
        "quotient": cd_tables(N),
        "trig": (series_table("c", "C_trig", N), series_table("d", "D_trig", N)),
        "ncsf": (SequenceTable("c", last_run([1]), "ncsf"),
                 SequenceTable("d", last_run([0, 1]), "ncsf")),
    }


def g_from_cd(c: Sequence[int], d: Sequence[int]) -> list[int]:
    """g(n) = c(n) for odd n, d(n) for even n > 0; g(0) = 1 by convention."""
    return [1 if n == 0 else (c[n] if n % 2 else d[n]) for n in range(len(c))]
