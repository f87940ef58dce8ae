from fractions import Fraction

import pytest

from e6grad import composition as co
from e6grad import gradings as gr
from e6grad import jordan as jo
from e6grad import structalg as sa
from e6grad.abgroup import FgAbelianGroup, presented_group


def unit_vecs(n, idxs):
    out = []
    for i in idxs:
        v = [Fraction(0)] * n
        v[i] = Fraction(1)
        out.append(v)
    return out


def test_trivial_grading_passes():
    t = co.octonion_table()
    gd = gr.GradedDecomposition(t, FgAbelianGroup(0, (2,)),
                                [((0,), unit_vecs(8, range(8)))])
    assert gr.check_grading(gd).ok
    assert gr.type_vector(gd) == (0, 0, 0, 0, 0, 0, 0, 1)


def test_corrupted_degree_map_fails():
    t = co.octonion_table()
    degs = co.octonion_degrees()
    bad = list(degs)
    bad[3] = (0, 0, 0)  # e3 = e1 e2 must have degree (1,1,0)
    gd = gr.GradedDecomposition.from_degree_map(t, FgAbelianGroup(0, (2, 2, 2)), bad)
    rep = gr.check_grading(gd)
    assert not rep.ok
    assert rep.witness is not None


def test_incomplete_components_fail():
    t = co.octonion_table()
    gd = gr.GradedDecomposition(t, FgAbelianGroup(0, (2,)),
                                [((0,), unit_vecs(8, range(7)))])
    assert not gr.check_grading(gd).ok


def test_duplicate_degree_rejected():
    t = co.octonion_table()
    with pytest.raises(ValueError):
        gr.GradedDecomposition(t, FgAbelianGroup(0, (2,)),
                               [((0,), unit_vecs(8, [0])),
                                ((2,), unit_vecs(8, [1]))])


def test_refine_with_trivial_returns_same_components():
    m = jo.build_m()
    gp = jo.pauli_grading(m)
    triv = gr.GradedDecomposition(m.table, FgAbelianGroup(0, (2,)),
                                  [((0,), unit_vecs(9, range(9)))])
    ref = gr.refine(gp, triv)
    assert sorted(s.dim for _, s in ref.components) == \
        sorted(s.dim for _, s in gp.components)
    assert gr.is_refinement(ref, gp) and gr.is_refinement(ref, triv)


def test_refine_z25_on_j():
    j = jo.build_j()
    g3 = jo.jordan_coarse_z23_grading(j)
    # the slot Z2^2 grading: diagonal neutral, iota_i in three classes
    degs = [(0, 0)] * 3
    for i in (1, 2, 3):
        degs += [jo.PEIRCE_DEG[i]] * 8
    g2 = gr.GradedDecomposition.from_degree_map(
        j.table, FgAbelianGroup(0, (2, 2)), degs)
    assert gr.check_grading(g2).ok
    ref = gr.refine(g3, g2)
    assert gr.check_grading(ref).ok
    assert sorted(s.dim for _, s in ref.components) == [1] * 24 + [3]
    g5 = jo.jordan_octonion_grading(j)
    assert sorted(s.dim for _, s in g5.components) == \
        sorted(s.dim for _, s in ref.components)


def test_universal_group_examples():
    m = jo.build_m()
    gp = jo.pauli_grading(m)
    assert gr.universal_group(gp).is_isomorphic_to(FgAbelianGroup(0, (3, 3)))
    o = co.octonion_grading()
    assert gr.universal_group(o).is_isomorphic_to(FgAbelianGroup(0, (2, 2, 2)))


def test_universal_group_invariant_under_relabeling():
    m = jo.build_m()
    gp = jo.pauli_grading(m)
    # relabel the support by the automorphism (a, b) -> (b, a + b) of Z3^2
    group = FgAbelianGroup(0, (3, 3))
    relabeled = gr.GradedDecomposition(
        m.table, group,
        [(((d[1]) % 3, (d[0] + d[1]) % 3), sub.basis)
         for d, sub in gp.components])
    assert gr.check_grading(relabeled).ok
    assert gr.universal_group(relabeled).is_isomorphic_to(
        gr.universal_group(gp))


def test_root_decomposition_universal_group_is_free(chevalley):
    chev = chevalley.meta["chev"]
    from e6grad import rootsys as rs
    gz = gr.GradedDecomposition.from_degree_map(
        chev.table, FgAbelianGroup(6),
        [(0,) * 6 for _ in range(6)]
        + [r for r in chev.pos]
        + [tuple(-x for x in r) for r in chev.pos])
    assert gr.check_grading(gz).ok
    ug = gr.universal_group(gz)
    assert ug.rank == 6 and not ug.torsion


def test_support_generates(ws):
    g13 = ws.grading("gamma13")
    assert gr.support_generates(g13)


def test_induced_derivation_grading_octonions():
    gd = co.octonion_grading()
    ders, dgd = gr.induced_derivation_grading(gd)
    assert ders.dim == 14
    dims = {d: s.dim for d, s in dgd.components}
    assert (0, 0, 0) not in dims
    assert sorted(dims.values()) == [2] * 7
    assert gr.check_grading(dgd).ok


def test_induced_derivation_grading_trivial():
    t = co.octonion_table()
    gd = gr.GradedDecomposition(
        t, FgAbelianGroup(0, (2,)),
        [((0,), [[Fraction(1 if i == j else 0) for i in range(8)]
                 for j in range(8)])])
    ders, dgd = gr.induced_derivation_grading(gd)
    assert ders.dim == 14
    assert len(dgd.components) == 1


def test_isotropy_and_orthogonality(ws):
    g3 = ws.grading("gamma3")
    tits = ws.model("tits")
    k = tits.killing()
    assert gr.isotropic_components_check(g3, k).ok
    assert gr.killing_orthogonality_check(g3, k).ok


def test_interval_check_numbers(ws):
    g7 = ws.grading("gamma7")
    iv = gr.interval_check(g7, -14)
    assert iv == {"dim_neutral": 0, "order2_dim": 78, "signature": -14,
                  "ok": True}


def test_presented_group():
    g = presented_group(2, [[2, 0], [0, 3]])
    assert g.is_isomorphic_to(FgAbelianGroup(0, (6,)))
    g = presented_group(3, [])
    assert g.rank == 3
    g = presented_group(2, [[1, -1]])
    assert g.rank == 1 and not g.torsion


def test_group_descriptions():
    assert FgAbelianGroup(1, (2, 2, 2, 2)).describe() == "Z x Z2^4"
    assert FgAbelianGroup(0, (2, 2, 3)).describe() == "Z2^2 x Z3"
    assert FgAbelianGroup(2).describe() == "Z^2"
    assert FgAbelianGroup(0, (2, 2, 2, 3, 3)).is_isomorphic_to(
        FgAbelianGroup(0, (2, 6, 6)))


def test_named_grading_wrong_model_rejected(ws):
    with pytest.raises(ValueError):
        gr.build_named_grading("gamma3", ws.model("albert"))
    with pytest.raises(ValueError):
        gr.build_named_grading("gamma99", ws.model("tits"))


def test_classical_signatures_and_so8_exclusion():
    assert gr.classical_signature("su", 5, 1) == -15
    assert gr.classical_signature("su", 2, 1) == 0
    assert gr.classical_signature("so", 7, 1) == -14
    assert gr.classical_signature("sp", 2, 2) == -4
    assert gr.classical_signature("sp", 3, 1) == -12
    assert gr.classical_signature("sp", 4, 0) == -36
    rep = gr.so8_exclusion_arithmetic()
    assert rep["ok"]
    assert rep["so8_signatures"] == [-28, -14, -4, 2, 4]
