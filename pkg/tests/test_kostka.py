import pytest
from hypothesis import given, strategies as st

from cyclic_quiver.kostka import (
    charge,
    conjugate,
    dominates,
    kostka_foulkes,
    kostka_number,
    ktilde_from_kostka,
    n_stat,
    partitions,
)
from cyclic_quiver.poly import IntPoly

# Kostka-Foulkes table for d = 4 (rows lam, columns mu)
TABLE4 = {
    ((4,), (1, 1, 1, 1)): [0, 0, 0, 0, 0, 0, 1],
    ((3, 1), (1, 1, 1, 1)): [0, 0, 0, 1, 1, 1],
    ((2, 2), (1, 1, 1, 1)): [0, 0, 1, 0, 1],
    ((2, 1, 1), (1, 1, 1, 1)): [0, 1, 1, 1],
    ((3, 1), (2, 1, 1)): [0, 1, 1],
    ((2, 2), (2, 1, 1)): [0, 1],
    ((3, 1), (2, 2)): [0, 1],
    ((4,), (2, 2)): [0, 0, 1],
    ((2, 1), (1, 1, 1)): [0, 1, 1],
}


@pytest.mark.parametrize("lam,mu", sorted(TABLE4))
def test_known_values(lam, mu):
    assert kostka_foulkes(lam, mu) == IntPoly(TABLE4[lam, mu])


def test_partitions():
    assert list(partitions(4)) == [(4,), (3, 1), (2, 2), (2, 1, 1), (1, 1, 1, 1)]
    assert [len(list(partitions(d))) for d in range(8)] == [1, 1, 2, 3, 5, 7, 11, 15]


def test_charge_words():
    assert charge([1]) == 0
    assert charge([2, 1]) == 0
    assert charge([1, 2]) == 1
    assert charge([2, 3, 1, 1]) == 1


@pytest.mark.parametrize("d", range(1, 7))
def test_structural(d):
    parts = list(partitions(d))
    for lam in parts:
        assert kostka_foulkes(lam, lam) == IntPoly.one()
        assert kostka_foulkes((d,), lam) == IntPoly.monomial(n_stat(lam))
        for mu in parts:
            k = kostka_foulkes(lam, mu)
            assert k(1) == kostka_number(lam, mu)
            if not dominates(lam, mu):
                assert k.is_zero()
            else:
                assert k.degree == n_stat(mu) - n_stat(lam)
                kt = ktilde_from_kostka(lam, mu)
                assert kt[0] == 1


@given(st.integers(1, 8).flatmap(lambda d: st.sampled_from(list(partitions(d)))))
def test_conjugation_reverses_dominance(lam):
    assert conjugate(conjugate(lam)) == lam
    for mu in partitions(sum(lam)):
        assert dominates(lam, mu) == dominates(conjugate(mu), conjugate(lam))
