import random
from fractions import Fraction

import pytest

from altdes import ncsf
from altdes.errors import BasisError, InversionError, ResourceError
from altdes.ncsf import NcsfElement
from altdes.perm import compositions
from altdes.rings import tq_vars
from altdes.series import named_series

from conftest import C_TABLE, D_TABLE, F_TABLE


def rand_element(rng, N, basis="h"):
    comps = [tuple(L) for n in range(N + 1) for L in compositions(n)]
    return NcsfElement({rng.choice(comps): Fraction(rng.randint(-9, 9), rng.randint(1, 9))
                        for _ in range(6)}, basis, N)


def test_basis_change_small():
    assert NcsfElement.h(2, 1, N=3).to_r() == NcsfElement({(2, 1): 1, (3,): 1}, "r", 3)
    assert NcsfElement.r(1, 1, N=2).to_h() == NcsfElement({(1, 1): 1, (2,): -1}, "h", 2)


@pytest.mark.parametrize("n", range(0, 9))
def test_change_of_basis_unitriangular(n):
    for L in compositions(n):
        r = NcsfElement.h(*L, N=n).to_r()
        assert r.coefficient(L) == 1
        assert r.to_h() == NcsfElement.h(*L, N=n)


def test_roundtrip_random():
    rng = random.Random(3)
    for _ in range(10):
        e = rand_element(rng, 8)
        assert e.to_r().to_h() == e
        f = rand_element(rng, 8, "r")
        assert f.to_h().to_r() == f


def test_product_is_concatenation_in_h():
    a = NcsfElement.h(1, N=5)
    b = NcsfElement.h(2, 1, N=5)
    assert (a * b).terms == {(1, 2, 1): 1}
    assert (b * a).terms == {(2, 1, 1): 1}
    assert a * b != b * a


def test_phi_homomorphisms():
    rng = random.Random(4)
    for _ in range(6):
        a, b = rand_element(rng, 8), rand_element(rng, 8, "r")
        for fn in (ncsf.phi, ncsf.phi_hat):
            assert fn(a * b) == fn(a) * fn(b)
            assert fn(a + b) == fn(a) + fn(b)
    assert ncsf.phi(NcsfElement.h(3, N=3))[3] == Fraction(1, 6)
    assert ncsf.phi_hat(NcsfElement.h(4, N=4))[4] == Fraction(5, 24)


def test_invert_two_sided():
    rng = random.Random(5)
    for _ in range(5):
        e = rand_element(rng, 7)
        if not e.constant_term():
            e = e + 1
        one = NcsfElement.one(7)
        assert ncsf.invert(e) * e == one
        assert e * ncsf.invert(e) == one
    with pytest.raises(InversionError):
        ncsf.invert(NcsfElement.h(1, N=3))


def test_degree_cap_and_basis_errors():
    with pytest.raises(ResourceError):
        NcsfElement.h(1, N=17)
    with pytest.raises(BasisError):
        NcsfElement({}, "m", 3)
    with pytest.raises(BasisError):
        ncsf.h_to_r(NcsfElement.r(1, N=2))


@pytest.mark.parametrize("seed", range(5))
def test_run_theorems_random(seed):
    w = ncsf.WeightSequence.random(seed, 10, with_last=True)
    assert ncsf.runs_theorem(w, 10).passed
    assert ncsf.last_run_theorem(w, N=10).passed


def test_report_detail_on_mismatch():
    lhs = NcsfElement.r(1, N=2)
    rep = ncsf.IdentityReport("demo", lhs, lhs * 2, ncsf.first_mismatch(lhs, lhs * 2))
    assert not rep.passed
    assert "r(1,)" in rep.detail()


def test_specializations():
    N = 12
    assert ncsf.phi_hat(ncsf.runs_shorter_than(3, N)).egf() == F_TABLE
    # Phi counts permutations by increasing runs: runs shorter than 2 means decreasing only
    assert ncsf.phi(ncsf.runs_shorter_than(2, 6)).egf() == [1] * 7
    c = ncsf.phi_hat(ncsf.last_run_rhs([1, 1], [1], N)).egf()
    d = ncsf.phi_hat(ncsf.last_run_rhs([1, 1], [0, 1], N)).egf()
    assert c == C_TABLE and d == D_TABLE
    # (sum (-1)^n h_2n)^-1 maps under Phi to sec x
    sec = (named_series("cos", 10)).reciprocal()
    assert ncsf.phi(ncsf.runs_all_equal(2, 10)) == sec


def test_maj_product_hand_expansion():
    _, q = tq_vars(0, 5)
    e = ncsf.maj_product(1, 3, 5).component(3)
    expected = NcsfElement({(1, 2): q, (2, 1): q ** 2, (3,): 1 + q ** 3}, "h", 3)
    assert e == expected


def test_maj_identities():
    assert ncsf.ncmaj_identity(5, 12).passed
    assert ncsf.desmaj_identity(5, 7, 12).passed


def test_format_element():
    e = NcsfElement({(2, 1): 3, (3,): -1}, "h", 3)
    assert str(e) == "3·h(2,1) − h(3)"
    assert str(NcsfElement({}, "h", 2)) == "0"
