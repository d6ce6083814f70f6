import json
from fractions import Fraction
from math import factorial

import pytest

from altdes import recurrences
from altdes.errors import DomainError

from conftest import C_TABLE, D_TABLE, F_TABLE


def test_fg_recurrence():
    f, g = recurrences.fg_recurrence(12)
    assert list(f.values) == F_TABLE
    assert g[0] == g[1] == 1
    assert f.provenance == "recurrence"
    assert json.loads(f.to_json())["values"] == F_TABLE
    with pytest.raises(DomainError):
        recurrences.fg_recurrence(-1)


def test_split_recurrence_parts():
    f1, f2, g1, g2 = recurrences.split_recurrence(12)
    assert [a + b for a, b in zip(f1.values, f2.values)] == F_TABLE
    _, g = recurrences.fg_recurrence(12)
    assert [a + b for a, b in zip(g1.values, g2.values)] == list(g.values)


def test_split_parts_match_series():
    for name in ("F1", "F2", "G1", "G2"):
        table = recurrences.series_table(name, name, 14)
        rec = dict(zip(("F1", "F2", "G1", "G2"), recurrences.split_recurrence(14)))[name]
        assert table.values == rec.values, name


def test_all_routes_agree():
    routes = recurrences.f_routes(12)
    assert set(routes) == {"recurrence", "split sums", "closed form", "reciprocal", "ncsf", "oracle"}
    for name, table in routes.items():
        assert list(table.values) == F_TABLE[:len(table)], name
    assert len(routes["oracle"]) == 11


def test_cd_routes_and_parity():
    for name, (c, d) in recurrences.cd_routes(12).items():
        assert list(c.values) == C_TABLE, name
        assert list(d.values) == D_TABLE, name
    _, g = recurrences.fg_recurrence(12)
    assert recurrences.g_from_cd(C_TABLE, D_TABLE) == list(g.values)


def test_ode_report():
    rep = recurrences.ode_verify(25)
    assert rep.passed
    assert rep.compared_through == 24
    assert "x^24" in rep.detail()
    with pytest.raises(DomainError):
        recurrences.ode_verify(1)


def test_sanity_bounds():
    f, g = recurrences.fg_recurrence(20)
    for n in range(21):
        assert 0 <= g[n] <= f[n] <= factorial(n)
    ratios = [Fraction(f[n], factorial(n)) for n in range(21)]
    assert all(ratios[n + 1] <= ratios[n] for n in range(2, 20))


def test_long_recurrence_matches_series():
    f, _ = recurrences.fg_recurrence(40)
    assert recurrences.series_table("f", "F_closed", 40).values == f.values
