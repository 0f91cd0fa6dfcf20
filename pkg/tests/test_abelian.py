import math

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st
from sympy import Matrix, ZZ
from sympy.matrices.normalforms import smith_normal_form

from optb.abelian import AbelianGroup, smith_diagonal


def sympy_invariants(rows):
    """Nonzero invariant factors from sympy, as an independent oracle."""
    snf = smith_normal_form(Matrix(rows), domain=ZZ)
    diag = [abs(snf[i, i]) for i in range(min(snf.shape))]
    return sorted(int(d) for d in diag if d != 0)


matrices = st.integers(1, 4).flatmap(
    lambda r: st.integers(1, 4).flatmap(
        lambda c: st.lists(
            st.lists(st.integers(-30, 30), min_size=c, max_size=c), min_size=r, max_size=r)))


@settings(max_examples=300, deadline=None)
@given(matrices)
def test_smith_matches_sympy(rows):
    diag = smith_diagonal(rows)
    assert sorted(diag) == sympy_invariants(rows)
    assert all(b % a == 0 for a, b in zip(diag, diag[1:]))


@settings(max_examples=200, deadline=None)
@given(st.lists(st.lists(st.integers(-50, 50), min_size=2, max_size=2), min_size=2, max_size=2))
def test_square_cokernel_order_is_abs_det(rows):
    det = rows[0][0] * rows[1][1] - rows[0][1] * rows[1][0]
    group = AbelianGroup.cokernel(rows)
    if det:
        assert group.order() == abs(det)
    else:
        assert group.order() == math.inf


def test_smith_edge_cases():
    assert smith_diagonal([[0, 0], [0, 0]]) == []
    assert smith_diagonal([]) == []
    assert smith_diagonal([[2, 4, 4], [-6, 6, 12], [10, -4, -16]]) == [2, 6, 12]
    with pytest.raises(ValueError):
        smith_diagonal([[1, 2], [3]])


@pytest.mark.parametrize("orders, torsion", [
    ([4, 3], (12,)),
    ([2, 2], (2, 2)),
    ([6, 4], (2, 12)),
    ([1, 1], ()),
    ([2, 3, 4, 5], (2, 60)),
])
def test_from_cyclic(orders, torsion):
    assert AbelianGroup.from_cyclic(orders).torsion == torsion


def test_direct_sum_and_order():
    g = AbelianGroup.cyclic(4) + AbelianGroup.cyclic(3)
    assert g == AbelianGroup(0, (12,))
    assert g.order() == 12
    assert (g + AbelianGroup(1)).order() == math.inf
    assert AbelianGroup().is_trivial and AbelianGroup().order() == 1
    assert AbelianGroup.from_cyclic([0, 5]) == AbelianGroup(1, (5,))


def test_validation():
    with pytest.raises(ValueError):
        AbelianGroup(0, (4, 6))
    with pytest.raises(ValueError):
        AbelianGroup(0, (1,))
    with pytest.raises(ValueError):
        AbelianGroup(-1)


def test_str_and_record():
    assert str(AbelianGroup()) == "0"
    assert str(AbelianGroup(2, (2, 4))) == "Z^2 + Z/2 + Z/4"
    assert AbelianGroup(1, (7,)).to_record() == {"free_rank": 1, "torsion": [7], "order": "infinite"}
