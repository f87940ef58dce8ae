from fractions import Fraction

from e6grad import liemodels as lm
from e6grad import linalg as la
from e6grad import rootsys as rs
from e6grad import structalg as sa


def sig(form):
    p, m, _ = la.signature(form)
    return p - m


def test_albert_model(albert):
    assert albert.dim == 78
    assert albert.table.check_lie().ok
    assert albert.killing_signature() == -14
    assert albert.table.is_real_table()
    # even part is Der(J): 52-dim, restriction has signature -20
    k = albert.killing()
    even = [[k[i][j] for j in range(52)] for i in range(52)]
    assert sig(even) == -20
    # odd part restriction carries +6 (the negated J0 trace form)
    odd = [[k[i][j] for j in range(52, 78)] for i in range(52, 78)]
    assert sig(odd) == 6
    assert all(k[i][j] == 0 for i in range(52) for j in range(52, 78))


def test_albert_plus(ws):
    plus = ws.model("albert_plus")
    assert plus.table.check_lie().ok
    assert plus.killing_signature() == -26


def test_twist_relates_the_two_albert_models(ws, albert):
    tw = sa.twist_z2(albert.table, albert.meta["parity"], -1)
    plus = ws.model("albert_plus")
    assert all(tw.prod[i][j] == plus.table.prod[i][j]
               for i in range(78) for j in range(78))


def test_tits_model(tits):
    assert tits.dim == 78
    assert tits.table.check_lie().ok
    assert tits.killing_signature() == -14
    k = tits.killing()
    r = sa.killing_ratio(
        tits.table,
        sa.Subspace(78, [[Fraction(1 if i == t else 0) for i in range(78)]
                         for t in range(14)]), k)
    assert r == 3
    r = sa.killing_ratio(
        tits.table,
        sa.Subspace(78, [[Fraction(1 if i == t else 0) for i in range(78)]
                         for t in range(70, 78)]), k)
    assert r == 8


def test_tits_killing_invariance(tits):
    assert sa.killing_ad_invariance(tits.table, tits.killing()).ok


def test_chevalley_model(chevalley):
    assert chevalley.dim == 78
    assert chevalley.table.check_lie().ok
    assert chevalley.killing_signature() == -14
    k = chevalley.killing()
    assert all(k[i][j] == 0 for i in range(78) for j in range(i + 1, 78))
    neg = sum(1 for i in range(78) if k[i][i] < 0)
    assert neg == 46 and 78 - neg == 32


def test_corollary_basis_report(chevalley):
    rep = lm.corollary_basis_report(chevalley, permutation_samples=50)
    assert rep["orthogonal"]
    assert (rep["negative_norms"], rep["positive_norms"]) == (46, 32)
    assert rep["all_semisimple"]
    assert rep["constants_rational"]
    assert rep["trilinear_antisymmetric"]
    # the expansion coefficients are not fully antisymmetric: the recorded
    # witness is a genuine counterexample on a (Cartan, root, root) triple
    assert not rep["expansion_antisymmetric"]
    w = rep["antisymmetry_witness"]
    i, j, k = w["triple"]
    f = chevalley.table.prod[i][j].get(k, Fraction(0))
    perm = w["perm"]
    trip = (i, j, k)
    pi = tuple(trip[p] for p in perm)
    f_p = chevalley.table.prod[pi[0]][pi[1]].get(pi[2], Fraction(0))
    parity = -1  # all recorded witnesses use an odd permutation
    assert f_p != parity * f


def test_flag_model(flag):
    assert flag.dim == 78
    assert flag.table.check_lie().ok
    assert flag.killing_signature() == -14
    rf = flag.meta["real_form"]
    k = flag.killing()
    i6 = rf.names.index("I6")
    assert k[i6][i6] == 432  # 2 (9 dim L1 + 36 dim L2)
    # nilpotent graded pieces pair only across opposite degrees
    for i in range(78):
        for j in range(78):
            if rf.z_degrees[i] + rf.z_degrees[j] != 0:
                assert k[i][j] == 0
    # kappa restricted to L_n + L_{-n} (n != 0) is split
    for n in (1, 2):
        idx = [t for t in range(78) if abs(rf.z_degrees[t]) == n]
        block = [[k[a][b] for b in idx] for a in idx]
        p, m, z = la.signature(block)
        assert z == 0 and p == m


def test_flag_eigenspace(flag):
    assert lm.flag_plus_eigenspace_dim() == 20
    assert lm.flag_eigenspace_matches_basis(flag)


def test_flag_ad_e(flag):
    ad = lm.flag_ad_e(flag)
    eig = [Fraction(v) for v in range(-2, 3)]
    spaces = la.simultaneous_eigensplit([ad], [eig], 78)
    dims = {int(t[0]): len(b) for t, b in spaces}
    assert dims == {-2: 1, -1: 20, 0: 36, 1: 20, 2: 1}
    top = next(b for t, b in spaces if t[0] == 2)[0]
    rf = flag.meta["real_form"]
    nz = {rf.names[i] for i, c in enumerate(top) if c}
    assert nz == {"X45", "D4"}  # i(E_44 - E_55) + E_45 + E_54, 0-indexed


def test_flag_proof_identities(flag):
    """ad(u*_T) sends the matching u_T into R I6 and v_T into the real span
    of i(sum_T E_pp - sum_Tc E_pp).

    The bracket [u*_T, u_T] cannot vanish outright: the central component of
    [L_1, L_-1] relative to its sl part is pinned by the Jacobi identity, so
    the diagonal pairs produce the (gauge-invariant) multiple -(1/3) I6.
    Both values lie in L_0, which is what the closure argument needs.
    """
    rf = flag.meta["real_form"]
    i6 = rf.names.index("I6")
    for tpos, t in enumerate(rf.t_with0):
        iu = 36 + 2 * tpos
        iustar = 56 + 2 * tpos
        w0 = flag.table.prod[iustar][iu]
        assert set(w0) == {i6} and w0[i6] == Fraction(-1, 3)
        w = flag.table.prod[iustar][iu + 1]  # [u*_T, v_T]
        names = {rf.names[i] for i in w}
        assert names <= {f"D{p}" for p in range(5)}
        # the diagonal combination is i(sum_{p in T} E_pp - sum_{p not in T})
        diag = [Fraction(0)] * 6
        acc = Fraction(0)
        for p in range(5):
            c = w.get(rf.names.index(f"D{p}"), Fraction(0))
            diag[p] = c - acc
            acc = c
        diag[5] = -acc
        vals = {diag[p] for p in range(6)}
        assert len(vals) == 2
        inside = {diag[p] for p in t}
        outside = {diag[p] for p in range(6) if p not in t}
        assert len(inside) == 1 and len(outside) == 1
        assert next(iter(inside)) == -next(iter(outside))


def test_min_poly_machinery(chevalley):
    # ad(ih'_1) has minimal polynomial x (x^2 + c): squarefree of degree 3
    mp = lm._min_poly_ad(chevalley.table, 0)
    assert mp[0] == 0 and len(mp) >= 3
    assert lm._poly_squarefree(mp)
    # a nilpotent single-root vector in the complex table is not semisimple
    chev = chevalley.meta["chev"]
    mp2 = lm._min_poly_ad(chev.table, chev.e_idx((0, 0, 0, 0, 0, 1)))
    assert not lm._poly_squarefree(mp2)


def test_split_octonion_tits_variant(ws):
    model = ws.model("tits_split")
    assert model.table.check_lie().ok
    assert model.killing_signature() == 2
