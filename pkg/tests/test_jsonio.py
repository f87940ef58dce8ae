from fractions import Fraction

from e6grad import composition as co
from e6grad import jordan as jo
from e6grad import jsonio
from e6grad.scalar import Cyc, SQRT3


def test_scalar_round_trip():
    for x in (Fraction(3, 7), Fraction(-2), SQRT3 * Fraction(1, 2),
              Cyc(1, 2, 3, 4)):
        back = jsonio.scalar_from_json(jsonio.scalar_to_json(x))
        if isinstance(x, Cyc) and x.is_rational():
            assert back == x.as_fraction()
        else:
            assert back == x


def test_matrix_round_trip():
    m = [[Fraction(1, 2), SQRT3], [Cyc(0, 1), Fraction(-3)]]
    d = jsonio.matrix_to_json(m)
    back = jsonio.matrix_from_json(d)
    assert all((a - b if isinstance(a, Cyc) or isinstance(b, Cyc)
                else Fraction(a) - Fraction(b)) == 0
               for ra, rb in zip(m, back) for a, b in zip(ra, rb))


def test_table_round_trip():
    t = co.octonion_table()
    d = jsonio.table_to_json(t)
    back = jsonio.table_from_json(d)
    assert back.dim == t.dim
    assert back.basis_names == t.basis_names
    assert all(back.prod[i][j] == t.prod[i][j]
               for i in range(8) for j in range(8))


def test_grading_round_trip():
    m = jo.build_m()
    gd = jo.pauli_grading(m)
    d = jsonio.grading_to_json(gd)
    back = jsonio.grading_from_json(d, m.table)
    assert back.support == gd.support
    assert [s.dim for _, s in back.components] == \
        [s.dim for _, s in gd.components]


def test_dump_deterministic(tmp_path):
    t = co.octonion_table()
    p1, p2 = tmp_path / "a.json", tmp_path / "b.json"
    jsonio.dump(jsonio.table_to_json(t), str(p1))
    jsonio.dump(jsonio.table_to_json(t), str(p2))
    assert p1.read_bytes() == p2.read_bytes()
