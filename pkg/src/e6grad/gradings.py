"""Group gradings on algebras: verification, invariants, refinement.

A ``GradedDecomposition`` assigns degrees in a finitely generated abelian
group to the summands of a direct-sum decomposition of an algebra.  The
checker verifies both the direct-sum property and multiplicative
compatibility A_g A_h <= A_{g+h} exactly.  Invariants: the type vector
(component counts by dimension) and the universal grading group, computed
from the support by generators and relations plus Smith normal form.
"""

from __future__ import annotations

from fractions import Fraction

from .abgroup import FgAbelianGroup, presented_group
from .linalg import kernel, rref, signature
from .scalar import is_zero
from .structalg import (AlgebraTable, CheckReport, Subspace, dense_to_sparse,
                        derivations, form_restrict, sparse_to_dense)


class GradedDecomposition:
    """A degree map on a direct-sum decomposition of an AlgebraTable."""

    def __init__(self, table: AlgebraTable, group, components, name: str = ""):
        """components: iterable of (degree, vectors); zero summands dropped."""
        self.table = table
        self.group = group
        self.name = name
        comps = []
        seen = set()
        for deg, vecs in components:
            deg = group.reduce(deg)
            sub = vecs if isinstance(vecs, Subspace) else Subspace(table.dim, vecs)
            if sub.dim == 0:
                continue
            if deg in seen:
                raise ValueError(f"duplicate degree {deg}")
            seen.add(deg)
            comps.append((deg, sub))
        self.components = sorted(comps, key=lambda c: c[0])
        self._by_degree = dict(self.components)

    @classmethod
    def from_degree_map(cls, table: AlgebraTable, group, degrees,
                        name: str = "") -> "GradedDecomposition":
        """Grading whose components group basis vectors by assigned degree."""
        buckets: dict = {}
        for i, d in enumerate(degrees):
            buckets.setdefault(group.reduce(d), []).append(i)
        comps = []
        for d, idxs in buckets.items():
            vecs = []
            for i in idxs:
                v = [Fraction(0)] * table.dim
                v[i] = Fraction(1)
                vecs.append(v)
            comps.append((d, vecs))
        return cls(table, group, comps, name)

    @property
    def support(self):
        return [d for d, _ in self.components]

    def component(self, deg) -> Subspace | None:
        return self._by_degree.get(self.group.reduce(deg))

    def dims(self) -> dict:
        return {d: s.dim for d, s in self.components}

    def total_dim(self) -> int:
        return sum(s.dim for _, s in self.components)


def check_grading(gd: GradedDecomposition) -> CheckReport:
    """Exact direct-sum and compatibility verification."""
    table = gd.table
    n = table.dim
    stacked = [v for _, sub in gd.components for v in sub.basis]
    if len(stacked) != n:
        return CheckReport("grading", False, None,
                           f"components span dimension {len(stacked)} != {n}")
    _, piv = rref([list(v) for v in stacked])
    if len(piv) != n:
        return CheckReport("grading", False, None, "components are not independent")
    for g, sg in gd.components:
        for h, sh in gd.components:
            target_deg = gd.group.add(g, h)
            target = gd.component(target_deg)
            for a in sg.basis:
                sa = dense_to_sparse(a)
                for b in sh.basis:
                    w = table.mul_vec(sa, dense_to_sparse(b))
                    if not w:
                        continue
                    if target is None:
                        return CheckReport("grading", False, (g, h),
                                           "product lands in empty component")
                    if target.coords(sparse_to_dense(w, n)) is None:
                        return CheckReport("grading", False, (g, h),
                                           "product escapes target component")
    return CheckReport("grading", True)


def type_vector(gd: GradedDecomposition) -> tuple[int, ...]:
    dims = [s.dim for _, s in gd.components]
    if not dims:
        return ()
    out = [0] * max(dims)
    for d in dims:
        out[d - 1] += 1
    return tuple(out)


def universal_group(gd: GradedDecomposition) -> FgAbelianGroup:
    """Support-generated group with relations g + h = k for nonzero products.

    Returned in canonical (invariant-factor) form.
    """
    supp = gd.support
    index = {d: i for i, d in enumerate(supp)}
    table = gd.table
    n = table.dim
    relations = []
    for gi, (g, sg) in enumerate(gd.components):
        for hi, (h, sh) in enumerate(gd.components):
            if hi < gi:
                continue
            nonzero = False
            for a in sg.basis:
                sa = dense_to_sparse(a)
                for b in sh.basis:
                    if table.mul_vec(sa, dense_to_sparse(b)):
                        nonzero = True
                        break
                if nonzero:
                    break
            if not nonzero:
                continue
            k = gd.group.add(g, h)
            ki = index.get(k)
            if ki is None:
                raise ValueError("nonzero product outside the support")
            row = [0] * len(supp)
            row[gi] += 1
            row[hi] += 1
            row[ki] -= 1
            if any(row):
                relations.append(row)
    return presented_group(len(supp), relations)


def support_generates(gd: GradedDecomposition) -> bool:
    """Does the support generate the declared coordinate group?"""
    group = gd.group
    nc = group.ncoords
    rows = [list(d) for d in gd.support]
    for t, m in enumerate(group.torsion):
        row = [0] * nc
        row[group.rank + t] = m
        rows.append(row)
    from .linalg import diagonal_of, smith_normal_form
    if not rows:
        return nc == 0
    _, d, _ = smith_normal_form(rows)
    diag = diagonal_of(d)
    return sum(1 for x in diag if x == 1) == nc


def refine(g1: GradedDecomposition, g2: GradedDecomposition,
           name: str = "") -> GradedDecomposition:
    """Common refinement by pairwise intersections, over the product group.

    Raises ValueError when the intersections fail to span (the gradings are
    then incompatible).
    """
    if g1.table is not g2.table:
        raise ValueError("gradings live on different algebras")
    table = g1.table
    n = table.dim
    group = g1.group.product(g2.group)
    comps = []
    for d1, s1 in g1.components:
        for d2, s2 in g2.components:
            inter = subspace_intersection(s1, s2, n)
            if inter.dim:
                comps.append((group.pair(d1, d2), inter))
    total = sum(s.dim for _, s in comps)
    if total != n:
        raise ValueError(
            f"gradings are not compatible: intersections span {total} < {n}")
    return GradedDecomposition(table, group, comps, name)


def subspace_intersection(s1: Subspace, s2: Subspace, n: int) -> Subspace:
    a, b = s1.basis, s2.basis
    if not a or not b:
        return Subspace(n, [])
    cols = len(a) + len(b)
    m = [[(a[j][i] if j < len(a) else -b[j - len(a)][i]) for j in range(cols)]
         for i in range(n)]
    ker = kernel(m, cols)
    vecs = []
    for k in ker:
        v = [Fraction(0)] * n
        for j in range(len(a)):
            if not is_zero(k[j]):
                v = [x + k[j] * y for x, y in zip(v, a[j])]
        vecs.append(v)
    return Subspace(n, vecs)


def is_refinement(fine: GradedDecomposition, coarse: GradedDecomposition) -> bool:
    """Every component of ``fine`` sits inside some component of ``coarse``."""
    for _, sf in fine.components:
        hit = False
        for _, sc in coarse.components:
            if all(sc.contains(v) for v in sf.basis):
                hit = True
                break
        if not hit:
            return False
    return True


def induced_derivation_grading(gd: GradedDecomposition):
    """The grading on Der(A) induced by a grading on A.

    Requires the components of ``gd`` to be spanned by basis vectors of the
    underlying table (true for all gradings used on the coefficient algebras
    here).  Returns (derivations, GradedDecomposition on the Der table).
    """
    table = gd.table
    degrees = [None] * table.dim
    for d, sub in gd.components:
        for v in sub.basis:
            nz = [i for i, x in enumerate(v) if not is_zero(x)]
            for i in nz:
                if degrees[i] is not None and degrees[i] != d:
                    raise ValueError("components are not spanned by basis vectors")
                degrees[i] = d
    if any(d is None for d in degrees):
        raise ValueError("degree map does not cover the basis")
    ders = derivations(table, degrees, gd.group)
    der_gd = GradedDecomposition.from_degree_map(
        ders.table, gd.group, ders.blocks, name=f"Der({gd.name})")
    return ders, der_gd


def interval_check(gd: GradedDecomposition, sig: int) -> dict:
    """The signature interval bound |sig - dim A_e| <= sum of order-2 dims.

    Returns the measured numbers so reports can compare them with expected
    interval data.
    """
    e = gd.group.zero()
    cne = gd.component(e)
    dim_e = cne.dim if cne else 0
    order2 = 0
    for d, sub in gd.components:
        if d != e and gd.group.has_order_dividing_2(d):
            order2 += sub.dim
    return {
        "dim_neutral": dim_e,
        "order2_dim": order2,
        "signature": sig,
        "ok": abs(sig - dim_e) <= order2,
    }


def isotropic_components_check(gd: GradedDecomposition,
                               killing: list[list]) -> CheckReport:
    """Components of degree of order > 2 are totally isotropic for kappa."""
    for d, sub in gd.components:
        if gd.group.has_order_dividing_2(d):
            continue
        gram = form_restrict(killing, sub.basis)
        for row in gram:
            for x in row:
                if not is_zero(x):
                    return CheckReport("isotropy", False, (d,))
    return CheckReport("isotropy", True)


# ---------------------------------------------------------------------------
# the six named fine gradings
# ---------------------------------------------------------------------------

NAMED_GRADINGS = ("gamma3", "gamma7", "gamma8", "gamma10", "gamma12", "gamma13")

# expected invariants: (type vector, universal group, interval center, radius)
TABLE1 = {
    "gamma3": ((64, 7), FgAbelianGroup(0, (2, 2, 2, 3, 3)), 0, 14),
    "gamma7": ((48, 1, 0, 7), FgAbelianGroup(0, (2,) * 6), 0, 78),
    "gamma8": ((57, 0, 7), FgAbelianGroup(1, (2,) * 4), 1, 29),
    "gamma10": ((60, 7, 0, 1), FgAbelianGroup(2, (2,) * 3), 2, 16),
    "gamma12": ((73, 0, 0, 0, 1), FgAbelianGroup(1, (2,) * 5), 1, 35),
    "gamma13": ((72, 0, 0, 0, 0, 1), FgAbelianGroup(0, (2,) * 7), 0, 78),
}

GRADING_MODEL = {
    "gamma3": "tits",
    "gamma7": "albert",
    "gamma8": "albert",
    "gamma10": "flag",
    "gamma12": "flag",
    "gamma13": "chevalley",
}


def grading_from_eigensplit(table: AlgebraTable, ops, name: str = ""):
    """Z2^k grading from the joint eigenspaces of commuting involutions."""
    from .linalg import simultaneous_eigensplit
    n = table.dim
    pm = [Fraction(1), Fraction(-1)]
    spaces = simultaneous_eigensplit(ops, [pm] * len(ops), n)
    group = FgAbelianGroup(0, (2,) * len(ops))
    comps = []
    for tag, vecs in spaces:
        deg = tuple(0 if lam == 1 else 1 for lam in tag)
        comps.append((deg, vecs))
    return GradedDecomposition(table, group, comps, name)


def build_named_grading(name: str, model) -> GradedDecomposition:
    """One of the six fine gradings, on its corresponding model."""
    from . import liemodels as lm
    if name not in NAMED_GRADINGS:
        raise ValueError(f"unknown grading {name!r}")
    want = GRADING_MODEL[name]
    base = model.name.split("_")[0]
    if base != want:
        raise ValueError(f"{name} lives on the {want} model, not {model.name}")

    if name == "gamma3":
        group = FgAbelianGroup(0, (2, 2, 2, 3, 3))
        return GradedDecomposition.from_degree_map(
            model.table, group, model.meta["degrees"], name="gamma3")

    if name == "gamma7":
        group = FgAbelianGroup(0, (2,) * 6)
        return GradedDecomposition.from_degree_map(
            model.table, group, model.meta["z26_degrees"], name="gamma7")

    if name == "gamma8":
        from .linalg import simultaneous_eigensplit
        ad = lm.albert_z_grading_operator(model)
        eig = [Fraction(v) for v in range(-2, 3)]
        spaces = simultaneous_eigensplit([ad], [eig], model.dim)
        zgroup = FgAbelianGroup(1)
        zgrading = GradedDecomposition(
            model.table, zgroup,
            [((int(t[0]),), vecs) for t, vecs in spaces], name="Z on albert")
        z24 = [d[:3] + (d[5],) for d in model.meta["z26_degrees"]]
        z2grading = GradedDecomposition.from_degree_map(
            model.table, FgAbelianGroup(0, (2,) * 4), z24, name="Z2^4 on albert")
        out = refine(zgrading, z2grading, name="gamma8")
        return out

    if name == "gamma12":
        zdeg = [(d,) for d in model.meta["z_degrees"]]
        zgrading = GradedDecomposition.from_degree_map(
            model.table, FgAbelianGroup(1), zdeg, name="Z on flag")
        ops = lm.flag_f_matrices(model) + [lm.flag_theta_matrix(model)]
        eig = grading_from_eigensplit(model.table, ops, name="Z2^5 on flag")
        return refine(zgrading, eig, name="gamma12")

    if name == "gamma10":
        from .linalg import simultaneous_eigensplit
        ad = lm.flag_ad_e(model)
        eig5 = [Fraction(v) for v in range(-2, 3)]
        spaces = simultaneous_eigensplit([ad], [eig5], model.dim)
        adgrading = GradedDecomposition(
            model.table, FgAbelianGroup(1),
            [((int(t[0]),), vecs) for t, vecs in spaces], name="ad E on flag")
        zdeg = [(d,) for d in model.meta["z_degrees"]]
        zgrading = GradedDecomposition.from_degree_map(
            model.table, FgAbelianGroup(1), zdeg, name="Z on flag")
        fs = lm.flag_f_matrices(model)
        ops = [lm.flag_theta_matrix(model), fs[0], fs[1]]
        eig = grading_from_eigensplit(model.table, ops, name="Z2^3 on flag")
        return refine(refine(adgrading, zgrading), eig, name="gamma10")

    if name == "gamma13":
        ops = lm.gamma13_operators(model)
        gd = grading_from_eigensplit(model.table, ops, name="gamma13")
        return gd
    raise AssertionError


# ---------------------------------------------------------------------------
# the sp8 fixed-point computation backing the Z4 x Z2^4 exclusion
# ---------------------------------------------------------------------------

def sp8_lemma() -> dict:
    """Fixed-point dimensions and signatures for the sp8 coset family.

    Builds sp8(C) = {x : x C + C x^t = 0} with C the standard symplectic
    matrix, the four generators A1..A4 of the relevant subgroup of PSp8, and
    for every coset representative A with conj(A) A scalar computes the
    complex fixed-space dimension of Ad(CA) and the signature 36 - 2 dim.
    """
    from .scalar import Cyc, I as CYC_I

    one = Cyc(1)
    zero = Cyc(0)

    def mat(rows):
        return [[x if isinstance(x, Cyc) else Cyc(x) for x in row] for row in rows]

    def mmul(a, b):
        n, m, p = len(a), len(b), len(b[0])
        out = [[zero] * p for _ in range(n)]
        for i in range(n):
            for k in range(m):
                x = a[i][k]
                if x.is_zero():
                    continue
                for j in range(p):
                    if not b[k][j].is_zero():
                        out[i][j] = out[i][j] + x * b[k][j]
        return out

    def mconj(a):
        return [[x.conj() for x in row] for row in a]

    def is_scalar(a):
        d = a[0][0]
        for i in range(8):
            for j in range(8):
                want = d if i == j else zero
                if not (a[i][j] - want).is_zero():
                    return False
        return not d.is_zero()

    sig1 = [[zero, one], [one, zero]]

    def block_diag(*blocks):
        n = sum(len(b) for b in blocks)
        out = [[zero] * n for _ in range(n)]
        off = 0
        for b in blocks:
            for i, row in enumerate(b):
                for j, x in enumerate(row):
                    out[off + i][off + j] = x
            off += len(b)
        return out

    i4 = [[one if i == j else zero for j in range(4)] for i in range(4)]
    c_mat = [[zero] * 8 for _ in range(8)]
    for i in range(4):
        c_mat[i][4 + i] = one
        c_mat[4 + i][i] = -one

    a1 = [[zero] * 8 for _ in range(8)]
    for i in range(2):  # I2 blocks
        a1[i][4 + i] = CYC_I
        a1[4 + i][i] = CYC_I
    # sigma1 blocks at positions (2..3, 6..7)
    a1[2][7] = CYC_I
    a1[3][6] = CYC_I
    a1[6][3] = CYC_I
    a1[7][2] = CYC_I
    a2 = [[(CYC_I if i == j and i < 4 else (-CYC_I if i == j else zero))
           for j in range(8)] for i in range(8)]
    a3 = block_diag(sig1, sig1, sig1, sig1)
    a4_diag = [Cyc(1), Cyc(-1), -CYC_I, CYC_I, Cyc(1), Cyc(-1), CYC_I, -CYC_I]
    a4 = [[a4_diag[i] if i == j else zero for j in range(8)] for i in range(8)]

    # basis of sp8(C): kernel of x -> x C + C x^t over the 64 entries
    rows = []
    for i in range(8):
        for j in range(8):
            row = [Fraction(0)] * 64
            for k in range(8):
                # (x C)[i][j] = sum_k x[i][k] C[k][j]
                if not c_mat[k][j].is_zero():
                    row[i * 8 + k] += c_mat[k][j].as_fraction()
                # (C x^t)[i][j] = sum_k C[i][k] x[j][k]
                if not c_mat[i][k].is_zero():
                    row[j * 8 + k] += c_mat[i][k].as_fraction()
            rows.append(row)
    basis = kernel(rows, 64)  # 36 vectors, rational
    if len(basis) != 36:
        raise AssertionError(f"dim sp8 = {len(basis)} != 36")
    sp = Subspace(64, basis)

    def ad_fix_dim(m):
        minv = invert8(m)
        dim_fix = 0
        # operator x -> m x m^{-1} on sp8, in coordinates
        op = []
        for b in sp.basis:
            x = [[Cyc(b[i * 8 + j]) for j in range(8)] for i in range(8)]
            y = mmul(mmul(m, x), minv)
            flat = [y[i][j] for i in range(8) for j in range(8)]
            op.append(flat)
        # restrict to the subspace and take the +1 eigenspace
        coords = []
        for flat in op:
            cs = [flat[p] for p in sp.pivots]
            # verify membership of the image in sp8
            for t in range(64):
                s = flat[t]
                for c, bb in zip(cs, sp.basis):
                    if not is_zero(c) and not is_zero(bb[t]):
                        s = s - c * bb[t]
                if not is_zero(s):
                    raise AssertionError("Ad does not preserve sp8")
            coords.append(cs)
        d = len(sp.basis)
        shifted = [[coords[l][r] - (1 if r == l else 0) for l in range(d)]
                   for r in range(d)]
        return d - len(rref(shifted)[1])

    def invert8(m):
        from .linalg import inverse
        inv = inverse([row[:] for row in m])
        return [[x if isinstance(x, Cyc) else Cyc(x) for x in row] for row in inv]

    results = []
    for e1 in range(2):
        for e2 in range(2):
            for s in range(2):
                for r in range(4):
                    word = []
                    if e1:
                        word.append(a1)
                    if e2:
                        word.append(a2)
                    for _ in range(s):
                        word.append(a3)
                    for _ in range(r):
                        word.append(a4)
                    a = [[one if i == j else zero for j in range(8)] for i in range(8)]
                    for w in word:
                        a = mmul(a, w)
                    if not is_scalar(mmul(mconj(a), a)):
                        continue
                    ca = mmul(c_mat, a)
                    ca2 = mmul(ca, ca)
                    if not is_scalar(ca2):
                        raise AssertionError("Ad(CA) is not an involution")
                    fix = ad_fix_dim(ca)
                    results.append({
                        "word": (e1, e2, s, r),
                        "dim_fix": fix,
                        "signature": 36 - 2 * fix,
                        "in_family": bool(e1 and e2),
                    })
    fix_set = sorted({r["dim_fix"] for r in results})
    sig_set = sorted({r["signature"] for r in results})
    family_ok = all((r["dim_fix"] == 24) == r["in_family"] for r in results)
    return {
        "dim_sp8": 36,
        "cases": results,
        "fix_dims": fix_set,
        "signatures": sig_set,
        "family_matches": family_ok,
        "ok": fix_set == [16, 24] and sig_set == [-12, 4] and family_ok,
    }


def classical_signature(family: str, *args) -> int:
    """Killing signatures of the classical real forms.

    su(p,q): -(n^2+2n) + 4pq with n+1 = p+q;  so(p,q): ((p+q) - (p-q)^2)/2;
    sp(p,q): -2(p-q)^2 - (p+q);  sl(n,R): n-1;  sp(2n,R): n.
    """
    if family == "su":
        p, q = args
        n = p + q - 1
        return -(n * n + 2 * n) + 4 * p * q
    if family == "so":
        p, q = args
        d = (p + q) - (p - q) ** 2
        if d % 2:
            raise ValueError("so(p,q) signature is not an integer here")
        return d // 2
    if family == "sp":
        p, q = args
        return -2 * (p - q) ** 2 - (p + q)
    if family == "slR":
        (n,) = args
        return n - 1
    if family == "spR":
        (n,) = args
        return n // 2
    raise ValueError(f"unknown family {family!r}")


def so8_exclusion_arithmetic() -> dict:
    """The numeric part of the inner Z^2 x Z2^3 exclusion.

    The even-part candidates are 2 + sign(so(p,q)) over the real forms of
    so8; neither -14 nor 2 is attainable.
    """
    sigs = sorted(classical_signature("so", p, 8 - p) for p in range(4, 9))
    attainable = sorted(2 + s for s in sigs)
    return {
        "so8_signatures": sigs,
        "attainable": attainable,
        "excludes_minus14": -14 not in attainable,
        "excludes_2": 2 not in attainable,
        "ok": sigs == [-28, -14, -4, 2, 4]
        and -14 not in attainable and 2 not in attainable,
    }


def killing_orthogonality_check(gd: GradedDecomposition,
                                killing: list[list]) -> CheckReport:
    """kappa(A_g, A_h) = 0 whenever g + h != e."""
    e = gd.group.zero()
    for g, sg in gd.components:
        for h, sh in gd.components:
            if gd.group.add(g, h) == e:
                continue
            for a in sg.basis:
                sa = dense_to_sparse(a)
                for b in sh.basis:
                    s = Fraction(0)
                    for i, x in sa.items():
                        row = killing[i]
                        for j, y in dense_to_sparse(b).items():
                            s += x * y * row[j]
                    if not is_zero(s):
                        return CheckReport("killing-orthogonality", False, (g, h))
    return CheckReport("killing-orthogonality", True)
