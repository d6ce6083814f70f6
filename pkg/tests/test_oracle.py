import itertools
from math import factorial

import pytest

from altdes import oracle
from altdes.errors import DomainError, ResourceError
from altdes.perm import alternating_runs, comp_from_set, euler_numbers, statistics

from conftest import C_TABLE, D_TABLE, F_TABLE


def test_permutation_array_is_lexicographic():
    arr = oracle.all_permutations(4)
    assert arr.shape == (24, 4)
    assert [tuple(r) for r in arr] == list(itertools.permutations(range(1, 5)))


def test_limit_enforced():
    with pytest.raises(ResourceError):
        oracle.all_permutations(11)
    with pytest.raises(DomainError):
        oracle.oracle_counts(3, mode="peaks")


def test_sequences_against_tables():
    t = oracle.oracle_sequences(10)
    assert t.f == F_TABLE[:11]
    assert t.f_by_peaks == t.f
    assert t.f_swapped == t.f
    assert t.c == C_TABLE[:11]
    assert t.d == D_TABLE[:11]
    assert [a + b for a, b in zip(t.c[1:], t.d[1:])] == t.f[1:]


def test_euler_counts():
    E = euler_numbers(10)
    for n in range(11):
        assert oracle.count_alternating(n) == E[n]
        assert oracle.count_reverse_alternating(n) == E[n]


@pytest.mark.parametrize("n", range(0, 8))
def test_vectorized_matches_scalar_statistics(n):
    des: dict = {}
    alt: dict = {}
    f = g = 0
    for p in itertools.permutations(range(1, n + 1)):
        s = statistics(p)
        if n:
            kd, ka = comp_from_set(s.descent_set, n), comp_from_set(s.alt_descent_set, n)
        else:
            kd = ka = ()
        des[kd] = des.get(kd, 0) + 1
        alt[ka] = alt.get(ka, 0) + 1
        if all(len(r) < 3 for r in alternating_runs(p)):
            f += 1
            if n < 2 or p[-2] < p[-1]:
                g += 1
    assert {tuple(k): v for k, v in oracle.oracle_counts(n, "descent").items()} == des
    assert {tuple(k): v for k, v in oracle.oracle_counts(n, "alt").items()} == alt
    t = oracle.oracle_sequences(n)
    assert t.f[n] == f
    assert t.g[n] == g


def test_joint_distribution_totals():
    for n in range(1, 7):
        joint = oracle.joint_distribution(n, "descent")
        assert sum(joint.values()) == factorial(n)
        # maj is symmetric: (des, maj) and (n-1-des, C(n,2)-maj) are equinumerous
        top = n * (n - 1) // 2
        for (d, m), c in joint.items():
            assert joint.get((n - 1 - d, top - m)) == c
