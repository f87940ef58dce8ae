"""Cross-cutting grading invariants over all six named gradings."""

from e6grad import gradings as gr
from e6grad.gradings import GRADING_MODEL, NAMED_GRADINGS


def test_all_named_gradings_sum_to_78(ws):
    for name in NAMED_GRADINGS:
        gd = ws.grading(name)
        assert gd.total_dim() == 78, name


def test_isotropy_of_high_order_components(ws):
    for name in NAMED_GRADINGS:
        gd = ws.grading(name)
        k = ws.model(GRADING_MODEL[name]).killing()
        assert gr.isotropic_components_check(gd, k).ok, name


def test_killing_orthogonality_across_components(ws):
    for name in ("gamma3", "gamma12", "gamma13"):
        gd = ws.grading(name)
        k = ws.model(GRADING_MODEL[name]).killing()
        assert gr.killing_orthogonality_check(gd, k).ok, name


def test_supports_generate_their_groups(ws):
    for name in NAMED_GRADINGS:
        gd = ws.grading(name)
        assert gr.support_generates(gd), name


def test_gamma7_refines_the_albert_parity(ws):
    from e6grad.abgroup import FgAbelianGroup
    albert = ws.model("albert")
    parity = albert.meta["parity"]
    z2 = gr.GradedDecomposition.from_degree_map(
        albert.table, FgAbelianGroup(0, (2,)), [(p,) for p in parity])
    assert gr.is_refinement(ws.grading("gamma7"), z2)
