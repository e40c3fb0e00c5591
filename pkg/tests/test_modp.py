from hypothesis import given, strategies as st

from cyclic_quiver.modp import echelon_matrices, gaussian_binomial, is_prime, primes, rank, rref


def test_primes():
    assert primes(6) == [2, 3, 5, 7, 11, 13]
    assert primes(2, start=14) == [17, 19]
    assert [q for q in range(30) if is_prime(q)] == [2, 3, 5, 7, 11, 13, 17, 19, 23, 29]


def test_echelon_count_is_gaussian_binomial():
    for p in (2, 3):
        for dim in range(5):
            for k in range(dim + 1):
                mats = list(echelon_matrices(k, dim, p))
                assert len(mats) == gaussian_binomial(dim, k, p)
                assert all(rank(m, p) == k for m in mats)
                assert len({tuple(map(tuple, rref(m, p)[0])) for m in mats}) == len(mats)


matrices = st.integers(1, 4).flatmap(
    lambda c: st.lists(st.lists(st.integers(0, 6), min_size=c, max_size=c), min_size=1, max_size=4)
)


@given(matrices, st.sampled_from([2, 3, 5, 7]))
def test_rref_is_reduced_and_same_rowspace(m, p):
    red, piv = rref(m, p)
    assert len(red) == len(piv) == rank(m, p)
    for r, c in enumerate(piv):
        assert red[r][c] == 1
        assert all(red[i][c] == 0 for i in range(len(red)) if i != r)
    assert rank(m + red, p) == len(piv)
