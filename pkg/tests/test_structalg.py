from fractions import Fraction

import pytest

from e6grad import composition as co
from e6grad import jordan as jo
from e6grad import linalg as la
from e6grad import structalg as sa


def zero_algebra(n=1):
    return sa.AlgebraTable(n, [f"b{i}" for i in range(n)],
                           [[{} for _ in range(n)] for _ in range(n)])


def test_zero_algebra_is_lie_and_jordan():
    t = zero_algebra()
    assert t.check_lie().ok
    assert t.check_jordan().ok


def test_check_lie_finds_violations():
    # b0 * b0 = b0 breaks anticommutativity
    t = sa.AlgebraTable(1, ["b"], [[{0: Fraction(1)}]])
    rep = t.check_lie()
    assert not rep.ok and rep.name == "anticommutative"


def test_sl2_is_lie():
    # h, e, f
    prod = [[{} for _ in range(3)] for _ in range(3)]
    prod[0][1] = {1: Fraction(2)}
    prod[1][0] = {1: Fraction(-2)}
    prod[0][2] = {2: Fraction(-2)}
    prod[2][0] = {2: Fraction(2)}
    prod[1][2] = {0: Fraction(1)}
    prod[2][1] = {0: Fraction(-1)}
    t = sa.AlgebraTable(3, ["h", "e", "f"], prod)
    assert t.check_lie().ok
    k = sa.killing_form(t)
    assert k[0][0] == 8 and k[1][2] == 4
    assert la.signature(k) == (2, 1, 0)
    assert sa.killing_ad_invariance(t, k).ok


def test_center_and_derived():
    prod = [[{} for _ in range(2)] for _ in range(2)]
    t = sa.AlgebraTable(2, ["a", "b"], prod)  # abelian
    assert sa.center(t).dim == 2
    assert sa.derived_algebra(t).dim == 0


def test_derived_and_closure_heisenberg():
    # [x, y] = z
    prod = [[{} for _ in range(3)] for _ in range(3)]
    prod[0][1] = {2: Fraction(1)}
    prod[1][0] = {2: Fraction(-1)}
    t = sa.AlgebraTable(3, ["x", "y", "z"], prod)
    assert t.check_lie().ok
    der = sa.derived_algebra(t)
    assert der.dim == 1
    assert sa.center(t).dim == 1
    clo = sa.closure(t, [[Fraction(1), Fraction(0), Fraction(0)],
                         [Fraction(0), Fraction(1), Fraction(0)]])
    assert clo.dim == 3


def test_twist_z2_requires_grading():
    prod = [[{} for _ in range(2)] for _ in range(2)]
    prod[0][1] = {0: Fraction(1)}
    prod[1][0] = {0: Fraction(-1)}
    t = sa.AlgebraTable(2, ["x", "y"], prod)
    with pytest.raises(ValueError):
        sa.twist_z2(t, [1, 1], -1)  # [odd, odd] lands in odd: invalid


def test_killing_ratio_whole_algebra_is_one():
    table = co.octonion_table()
    ders = sa.derivations(table)
    n = ders.table.dim
    whole = sa.Subspace(n, [[Fraction(1 if i == t else 0) for i in range(n)]
                            for t in range(n)])
    assert sa.killing_ratio(ders.table, whole) == 1


def test_killing_ratio_rejects_nonproportional():
    # direct sum sl2 + sl2: restriction to a diagonal-ish non-subalgebra
    prod = [[{} for _ in range(2)] for _ in range(2)]
    t = sa.AlgebraTable(2, ["a", "b"], prod)
    sub = sa.Subspace(2, [[Fraction(1), Fraction(0)]])
    with pytest.raises(ValueError):
        sa.killing_ratio(t, sub)  # abelian: Killing form vanishes


def test_subalgebra_table_rejects_nonclosed():
    prod = [[{} for _ in range(3)] for _ in range(3)]
    prod[0][1] = {2: Fraction(1)}
    prod[1][0] = {2: Fraction(-1)}
    t = sa.AlgebraTable(3, ["x", "y", "z"], prod)
    sub = sa.Subspace(3, [[Fraction(1), Fraction(0), Fraction(0)],
                          [Fraction(0), Fraction(1), Fraction(0)]])
    with pytest.raises(ValueError):
        sa.subalgebra_table(t, sub)


def test_derivations_of_jordan_j():
    j = jo.build_j()
    from e6grad.abgroup import FgAbelianGroup
    ders = sa.derivations(j.table, jo.octonion_z2_degrees(j),
                          FgAbelianGroup(0, (2,) * 5))
    assert ders.dim == 52
    # spot-verify returned kernel vectors satisfy the Leibniz system
    for m in ders.mats[::10]:
        assert sa.leibniz_residual(j.table, m)
    sig = la.signature(sa.killing_form(ders.table))
    assert sig[0] - sig[1] == -20  # Der(J) is the -20 real form of f4
    assert ders.table.check_lie().ok


def test_derivations_of_m():
    m = jo.build_m()
    ders = sa.derivations(m.table)
    assert ders.dim == 8
    sig = la.signature(sa.killing_form(ders.table))
    assert sig[0] - sig[1] == 0
