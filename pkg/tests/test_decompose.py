import random

import pytest
from hypothesis import given, settings, strategies as st

from cyclic_quiver import tworow
from cyclic_quiver.core import DimVector, dim_vectors, parse_multisegment
from cyclic_quiver.decompose import (
    OrbitPoset,
    build_poset,
    check_table,
    deconvolve,
    deconvolve_interval,
    g_matrix,
    kostka_crosscheck,
    reconstruct,
    verify_tworow,
)
from cyclic_quiver.errors import DeconvolutionError
from cyclic_quiver.kostka import conjugate, kostka_number
from cyclic_quiver.poly import IntPoly


def ms(text, n=2):
    return parse_multisegment(text, n)


@pytest.fixture(scope="module")
def nonsemismall():
    poset = build_poset(DimVector(2, (3, 2)))
    g = g_matrix(poset)
    return poset, g, deconvolve(poset, g)


def test_single_orbit():
    poset = build_poset(DimVector(2, (1, 0)))
    assert [str(m) for m in poset.orbits] == ["0:1"]
    table = deconvolve(poset, g_matrix(poset))
    assert table.ktilde(poset.orbits[0], poset.orbits[0]) == IntPoly.one()
    assert table.a(poset.orbits[0], poset.orbits[0]) == {0: 1}


def test_shifted_multiplicity_pair(nonsemismall):
    poset, g, table = nonsemismall
    lam, mu = ms("0:4,0:1"), ms("0:2,0:2,0:1")
    assert poset.le(mu, lam) and lam != mu
    assert table.a(lam, mu) == {-1: 1, 1: 1}
    assert table.ktilde(lam, mu) == IntPoly([1, 1])
    assert deconvolve_interval(poset, g, lam, mu).a == {-1: 1, 1: 1}


def test_golden_two_row_table():
    poset = build_poset(DimVector(2, (3, 3)), two_row_only=True)
    assert len(poset.orbits) == 9 and len(poset.covers) == 12
    table = deconvolve(poset, g_matrix(poset))
    for lam, mu in table.pairs():
        c = tworow.c_coeff(lam, mu)
        assert table.ktilde(lam, mu) == IntPoly.one()
        assert table.a(lam, mu) == ({0: c} if c else {})


def test_interval_mode_matches_full(nonsemismall):
    poset, g, table = nonsemismall
    for lam, mu in table.pairs():
        entry = deconvolve_interval(poset, g, lam, mu)
        assert entry.ktilde == table.ktilde(lam, mu)
        assert dict(entry.a) == table.a(lam, mu)


@pytest.mark.parametrize("n,total", [(1, 5), (2, 5), (3, 4)])
def test_reconstruction_and_constraints(n, total):
    for d in dim_vectors(n, total):
        poset = build_poset(d, cap=max(d.total, 1))
        g = g_matrix(poset)
        table = deconvolve(poset, g)
        assert reconstruct(table) == g
        assert check_table(table) == []


def _permuted(poset: OrbitPoset, seed: int) -> OrbitPoset:
    order = list(range(len(poset.orbits)))
    random.Random(seed).shuffle(order)
    leq = [[poset.leq[i][j] for j in order] for i in order]
    return OrbitPoset([poset.orbits[i] for i in order], leq, [poset.eps[i] for i in order])


@given(st.integers(0, 10**6))
@settings(max_examples=15)
def test_uniqueness_under_permutation(nonsemismall, seed):
    poset, g, table = nonsemismall
    other = deconvolve(_permuted(poset, seed), g)
    assert other.entries == table.entries


def test_type_a_multiplicity_is_kostka_number():
    poset = build_poset(DimVector(1, (5,)))
    table = deconvolve(poset, g_matrix(poset))
    for lam in poset.orbits:
        for nu in poset.orbits:
            a0 = table.a(lam, nu).get(0, 0)
            assert a0 == kostka_number(conjugate(nu.partition()), conjugate(lam.partition()))


def _corrupt(g, pair, poly):
    bad = dict(g)
    bad[pair] = poly
    return bad


def test_corrupted_inputs_rejected(nonsemismall):
    poset, g, _ = nonsemismall
    lam = ms("0:5")
    cover = next((poset.orbits[u], poset.orbits[l]) for u, l, c in poset.covers if c == 1)
    with pytest.raises(DeconvolutionError, match="diagonal"):
        deconvolve(poset, _corrupt(g, (lam, lam), IntPoly([2])))
    with pytest.raises(DeconvolutionError, match="constant term"):
        deconvolve(poset, _corrupt(g, cover, IntPoly()))
    with pytest.raises(DeconvolutionError, match="exceeds"):
        deconvolve(poset, _corrupt(g, cover, IntPoly([1, 0, 1])))
    big = next(pm for pm in poset.pairs() if poset.epsilon(pm[1]) - poset.epsilon(pm[0]) >= 3)
    with pytest.raises(DeconvolutionError, match="negative"):
        deconvolve(poset, _corrupt(g, big, IntPoly([1])))
    missing = dict(g)
    del missing[big]
    with pytest.raises(DeconvolutionError, match="missing"):
        deconvolve(poset, missing)


def test_verify_tworow_reports():
    report = verify_tworow(DimVector(2, (3, 3)))
    assert report.ok and report.exit_code == 0
    assert report.pairs == 29
    assert report.held_out_checks > 0
    empty = verify_tworow(DimVector(2, (1, 0)))
    assert empty.ok and empty.pairs == 1
    assert verify_tworow(DimVector(2, (2, 2))).ok
    assert ms("0:2,1:2") in build_poset(DimVector(2, (2, 2)), two_row_only=True).orbits


def test_kostka_crosscheck_pairs():
    assert kostka_crosscheck(3, (2, 1), (1, 1, 1)).ok
    assert kostka_crosscheck(4, (2, 2), (2, 1, 1)).ok
    poset = build_poset(DimVector(1, (5,)))
    top = poset.orbits[0]
    assert all(poset.le(mu, top) for mu in poset.orbits)
