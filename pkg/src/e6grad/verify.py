"""The batch verification pipeline behind `e6grad verify-all`.

Every numeric claim in a report traces to an operation in this package:
exhaustive identity checks, exact kernels, Sylvester signatures, type
vectors, universal groups via Smith normal form.  Checks are grouped by the
acceptance criteria; each check records measured and expected values, so a
failing check documents the actual computed quantity.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from . import composition, jordan, liemodels, rootsys
from .gradings import (NAMED_GRADINGS, TABLE1, GRADING_MODEL,
                       build_named_grading, check_grading, classical_signature,
                       interval_check, so8_exclusion_arithmetic, sp8_lemma,
                       type_vector, universal_group)
from .linalg import signature
from .structalg import (Subspace, form_restrict, killing_form, killing_ratio,
                        subalgebra_table, twist_z2)


@dataclass
class Check:
    name: str
    ok: bool
    measured: object = None
    expected: object = None
    note: str = ""

    def to_json(self):
        return {"name": self.name, "ok": self.ok,
                "measured": _plain(self.measured),
                "expected": _plain(self.expected), "note": self.note}


def _plain(x):
    if isinstance(x, Fraction):
        return str(x)
    if isinstance(x, (list, tuple)):
        return [_plain(v) for v in x]
    if isinstance(x, dict):
        return {str(k): _plain(v) for k, v in x.items()}
    return x


class Workspace:
    """Builds and memoizes the models and gradings used by the pipeline."""

    def __init__(self):
        self._models = {}
        self._gradings = {}
        self._jordans = {}

    def model(self, name: str):
        if name not in self._models:
            if name == "albert":
                self._models[name] = liemodels.build_albert(-1)
            elif name == "albert_plus":
                self._models[name] = liemodels.build_albert(1)
            elif name == "tits":
                self._models[name] = liemodels.build_tits()
            elif name == "tits_split":
                self._models[name] = liemodels.build_tits(split=True)
            elif name == "flag":
                self._models[name] = liemodels.build_flag()
            elif name == "chevalley":
                self._models[name] = liemodels.build_chevalley_form()
            else:
                raise ValueError(f"unknown model {name!r}")
        return self._models[name]

    def jordan_algebra(self, kind: str):
        if kind not in self._jordans:
            builders = {"J": jordan.build_j, "Jc": jordan.build_jc,
                        "M": jordan.build_m, "Ms": jordan.build_ms}
            self._jordans[kind] = builders[kind]()
        return self._jordans[kind]

    def grading(self, name: str):
        if name not in self._gradings:
            model = self.model(GRADING_MODEL[name])
            self._gradings[name] = build_named_grading(name, model)
        return self._gradings[name]


def _sig(form) -> int:
    p, m, _ = signature(form)
    return p - m


# ---------------------------------------------------------------------------
# criterion implementations
# ---------------------------------------------------------------------------

def criterion_1_octonions(ws: Workspace) -> list[Check]:
    out = []
    rep = composition.check_norm_multiplicativity()
    out.append(Check("octonions: norm multiplicativity", rep.ok))
    rep = composition.check_alternativity()
    out.append(Check("octonions: alternativity", rep.ok))
    from .structalg import derivations
    ders = derivations(composition.octonion_table())
    out.append(Check("Der(O) dimension", ders.dim == 14, ders.dim, 14))
    s = _sig(killing_form(ders.table))
    out.append(Check("Der(O) Killing signature", s == -14, s, -14))
    return out


def criterion_2_jordan(ws: Workspace) -> list[Check]:
    out = []
    for kind in ("Jc", "J", "M", "Ms"):
        j = ws.jordan_algebra(kind)
        rep = j.table.check_jordan()
        out.append(Check(f"{kind}: Jordan identity", rep.ok))
    j = ws.jordan_algebra("J")
    s = _sig(form_restrict(j.trace_form(), j.traceless_basis()))
    out.append(Check("J: traceless trace-form signature", s == -6, s, -6))
    m = ws.jordan_algebra("M")
    s = _sig(form_restrict(m.trace_form(), m.traceless_basis()))
    out.append(Check("M0: trace-form signature", s == 0, s, 0))
    jc = ws.jordan_algebra("Jc")
    s = _sig(jc.trace_form())
    out.append(Check("Jc: trace-form signature", s == 27, s, 27))
    return out


def criterion_3_models(ws: Workspace) -> list[Check]:
    out = []
    for name in ("albert", "tits", "flag", "chevalley"):
        model = ws.model(name)
        rep = model.table.check_lie()
        out.append(Check(f"{name}: Jacobi", rep.ok))
        out.append(Check(f"{name}: dimension", model.dim == 78, model.dim, 78))
        s = model.killing_signature()
        out.append(Check(f"{name}: Killing signature", s == -14, s, -14))
    plus = ws.model("albert_plus")
    out.append(Check("albert(+1): Jacobi", plus.table.check_lie().ok))
    s = plus.killing_signature()
    out.append(Check("albert(+1): Killing signature", s == -26, s, -26))
    return out


def criterion_4_ratios(ws: Workspace) -> list[Check]:
    out = []
    tits = ws.model("tits")
    k = tits.killing()
    n = tits.dim

    def coord_sub(rng):
        return Subspace(n, [[Fraction(1 if i == t else 0) for i in range(n)]
                            for t in rng])

    r = killing_ratio(tits.table, coord_sub(range(14)), k)
    out.append(Check("Tits: Killing ratio on Der(O)", r == 3, r, 3))
    r = killing_ratio(tits.table, coord_sub(range(70, 78)), k)
    out.append(Check("Tits: Killing ratio on Der(M)", r == 8, r, 8))

    m = tits.meta["jordan_m"]
    tensor = tits.meta["tensor"]
    consts = set()
    proportional = True
    for a in range(56):
        i, t = tensor[a]
        for b in range(56):
            i2, t2 = tensor[b]
            nab = Fraction(1) if i == i2 else Fraction(0)
            xv = [Fraction(1 if s == t else 0) for s in range(9)]
            yv = [Fraction(1 if s == t2 else 0) for s in range(9)]
            trxy = m.trace_of(m.mul_dense(xv, yv))
            rhs = nab * trxy
            lhs = k[14 + a][14 + b]
            if rhs == 0:
                if lhs != 0:
                    proportional = False
            else:
                consts.add(lhs / rhs)
    measured = sorted(consts)
    out.append(Check(
        "Tits: kappa(a x, b y) = -60 n(a,b) tr(x.y)",
        proportional and measured == [Fraction(-60)],
        {"constants": measured, "proportional": proportional},
        {"constants": ["-60"], "proportional": True},
        note="measured constant is -48; see the tensor-block Killing check"))
    out.append(Check(
        "Tits: kappa on tensor block proportional to n(a,b) tr(x.y)",
        proportional and len(measured) == 1,
        {"constants": measured}, {"single constant": True}))
    return out


def criterion_5_twist(ws: Workspace) -> list[Check]:
    out = []
    alb = ws.model("albert")
    k = alb.killing()
    even = [[k[i][j] for j in range(52)] for i in range(52)]
    s_even = _sig(even)
    tw = twist_z2(alb.table, alb.meta["parity"], -1)
    out.append(Check("twist: twisted table is Lie", tw.check_lie().ok))
    s_tw = _sig(killing_form(tw))
    s = alb.killing_signature()
    ok = s + s_tw == 2 * s_even and (s, s_tw, s_even) == (-14, -26, -20)
    out.append(Check("twist: sign(L) + sign(L^-1) = 2 sign(L_even)", ok,
                     {"sign_L": s, "sign_twisted": s_tw, "sign_even": s_even},
                     {"sign_L": -14, "sign_twisted": -26, "sign_even": -20}))
    ortho = all(k[i][j] == 0 for i in range(52) for j in range(52, 78))
    out.append(Check("twist: kappa(L_even, L_odd) = 0", ortho))
    return out


def criterion_6_gradings(ws: Workspace) -> list[Check]:
    out = []
    for name in NAMED_GRADINGS:
        gd = ws.grading(name)
        rep = check_grading(gd)
        out.append(Check(f"{name}: grading compatibility", rep.ok))
        tv = type_vector(gd)
        want_tv = TABLE1[name][0]
        out.append(Check(f"{name}: type vector", tv == want_tv, tv, want_tv))
        ug = universal_group(gd)
        want = TABLE1[name][1]
        out.append(Check(f"{name}: universal group",
                         ug.is_isomorphic_to(want), ug.describe(),
                         want.describe()))
    return out


def criterion_7_intervals(ws: Workspace) -> list[Check]:
    out = []
    for name in NAMED_GRADINGS:
        gd = ws.grading(name)
        model = ws.model(GRADING_MODEL[name])
        s = model.killing_signature()
        iv = interval_check(gd, s)
        _, _, center, radius = TABLE1[name]
        ok = iv["ok"] and iv["dim_neutral"] == center and \
            iv["order2_dim"] == radius
        out.append(Check(f"{name}: interval bound", ok,
                         {"dim_neutral": iv["dim_neutral"],
                          "order2_dim": iv["order2_dim"], "bound_holds": iv["ok"]},
                         {"dim_neutral": center, "order2_dim": radius,
                          "bound_holds": True}))
    gd = ws.grading("gamma10")
    iv = interval_check(gd, ws.model("flag").killing_signature())
    out.append(Check("gamma10: boundary case |-14 - 2| = 16",
                     abs(-14 - iv["dim_neutral"]) == iv["order2_dim"] == 16))
    return out


def criterion_8_roots(ws: Workspace) -> list[Check]:
    out = []
    chev = ws.model("chevalley").meta["chev"]
    out.append(Check("roots: count", len(chev.roots) == 72, len(chev.roots), 72))
    out.append(Check("roots: positive count", len(chev.pos) == 36,
                     len(chev.pos), 36))
    even = sum(1 for r in chev.pos if r[0] % 2 == 0)
    out.append(Check("roots: k1 even/odd split", (even, 36 - even) == (20, 16),
                     (even, 36 - even), (20, 16)))
    fix = rootsys.fix_dimension(chev, (-1, 1, 1, 1, 1, 1))
    out.append(Check("fix dimension of t_{-1,1,1,1,1,1}", fix == 46, fix, 46))
    out.append(Check("signature formula 78 - 2*46", 78 - 2 * fix == -14,
                     78 - 2 * fix, -14))
    gz = rootsys.z_grading_from_weights(chev, (0, 1, 0, 0, 0, 0))
    dims = tuple(s.dim for _, s in sorted(gz.components))
    out.append(Check("contact weights (0,1,0,0,0,0) dims",
                     dims == (1, 20, 36, 20, 1), dims, (1, 20, 36, 20, 1)))
    for w in ((1, 0, 0, 0, 0, 1), (0, 0, 1, 0, 0, 0), (0, 0, 0, 0, 1, 0)):
        g2 = rootsys.z_grading_from_weights(chev, w)
        top = g2.component((2,))
        d = top.dim if top else 0
        out.append(Check(f"weights {w}: dim S_2 > 1", d > 1, d, "> 1"))
    return out


def criterion_9_corollary(ws: Workspace) -> list[Check]:
    out = []
    rep = liemodels.corollary_basis_report(ws.model("chevalley"))
    out.append(Check("corollary: basis kappa-orthogonal", rep["orthogonal"]))
    counts = (rep["negative_norms"], rep["positive_norms"])
    out.append(Check("corollary: 46 negative / 32 positive norms",
                     counts == (46, 32), counts, (46, 32)))
    out.append(Check("corollary: all ad u_i squarefree minimal polynomial",
                     rep["all_semisimple"]))
    out.append(Check("corollary: constants rational",
                     rep["constants_rational"]))
    out.append(Check(
        "corollary: complete antisymmetry of f^{ijk} on nonzero triples",
        rep["expansion_antisymmetric"],
        {"witness": rep["antisymmetry_witness"]}, "antisymmetric",
        note="fails on mixed (root, root, Cartan) triples; the trilinear "
             "form kappa([u_i,u_j],u_k) is verified totally antisymmetric"))
    out.append(Check("corollary: kappa([u_i,u_j],u_k) totally antisymmetric",
                     rep["trilinear_antisymmetric"]))
    return out


def criterion_10_flag(ws: Workspace) -> list[Check]:
    out = []
    flag = ws.model("flag")
    rf = flag.meta["real_form"]
    l2 = [t for t, d in enumerate(rf.z_degrees) if d == 2]
    out.append(Check("flag: dim L_2", len(l2) == 1, len(l2), 1))
    dim_eig = liemodels.flag_plus_eigenspace_dim()
    out.append(Check("flag: +1 eigenspace of the twisted conjugation has dim 20",
                     dim_eig == 20, dim_eig, 20))
    th = liemodels.flag_theta_matrix(flag)
    fs = liemodels.flag_f_matrices(flag)
    from .linalg import identity, mat_eq, mat_mul
    ok = mat_eq(mat_mul(th, th), identity(78))
    for f in fs:
        ok = ok and mat_eq(mat_mul(f, f), identity(78))
    out.append(Check("flag: theta^2 = F_i^2 = id", ok))
    auto = rootsys.is_table_automorphism(flag.table, th)
    for f in fs:
        auto = auto and rootsys.is_table_automorphism(flag.table, f)
    out.append(Check("flag: theta, F_i preserve L and its bracket", auto))
    from .structalg import center, derived_algebra
    l0 = Subspace(78, [[Fraction(1 if i == t else 0) for i in range(78)]
                       for t in range(36)])
    l0t = subalgebra_table(flag.table, l0)
    der = derived_algebra(l0t)
    out.append(Check("flag: dim [L_0, L_0]", der.dim == 35, der.dim, 35))
    dt = subalgebra_table(l0t, der)
    s = _sig(killing_form(dt))
    out.append(Check("flag: signature of [L_0, L_0]", s == -15, s, -15))
    c = center(l0t)
    out.append(Check("flag: center of L_0 is R I6", c.dim == 1, c.dim, 1))
    return out


def criterion_11_sp8(ws: Workspace) -> list[Check]:
    rep = sp8_lemma()
    out = [Check("sp8: dimension", rep["dim_sp8"] == 36, rep["dim_sp8"], 36)]
    out.append(Check(
        "sp8: fixed dims {24,16} and signatures {-12,4}, 24 exactly on "
        "A1 A2 A3^s A4^r",
        rep["ok"],
        {"fix_dims": rep["fix_dims"], "signatures": rep["signatures"],
         "family_matches": rep["family_matches"]},
        {"fix_dims": [16, 24], "signatures": [-12, 4],
         "family_matches": True},
        note="measured fixed dims {16,20,24} (signatures {-12,-4,4}); the "
             "extra cases include A3 A4 and the odd A4-powers of the family"))
    so8 = so8_exclusion_arithmetic()
    out.append(Check(
        "so8 signature arithmetic excludes -14 and 2 from 2 + sign(so(p,q))",
        so8["ok"], so8, {"so8_signatures": [-28, -14, -4, 2, 4],
                         "excludes_minus14": True, "excludes_2": True}))
    out.append(Check(
        "classical signature formula reproduces sign(su(5,1)) = -15",
        classical_signature("su", 5, 1) == -15,
        classical_signature("su", 5, 1), -15))
    return out


CRITERIA = [
    ("1 octonions", criterion_1_octonions),
    ("2 jordan", criterion_2_jordan),
    ("3 models", criterion_3_models),
    ("4 killing ratios", criterion_4_ratios),
    ("5 twist", criterion_5_twist),
    ("6 gradings", criterion_6_gradings),
    ("7 intervals", criterion_7_intervals),
    ("8 roots", criterion_8_roots),
    ("9 corollary basis", criterion_9_corollary),
    ("10 flag", criterion_10_flag),
    ("11 sp8", criterion_11_sp8),
]


def run_all(ws: Workspace | None = None, include_sp8: bool = False,
            include_twist: bool = False,
            include_split_octonions: bool = False) -> dict:
    ws = ws or Workspace()
    groups = []
    for name, fn in CRITERIA:
        if name == "11 sp8" and not include_sp8:
            continue
        if name == "5 twist" and not include_twist:
            continue
        checks = fn(ws)
        groups.append({"criterion": name,
                       "ok": all(c.ok for c in checks),
                       "checks": [c.to_json() for c in checks]})
    if include_split_octonions:
        checks = split_octonion_checks(ws)
        groups.append({"criterion": "split octonions",
                       "ok": all(c.ok for c in checks),
                       "checks": [c.to_json() for c in checks]})
    return {
        "groups": groups,
        "all_ok": all(g["ok"] for g in groups),
        "table1": table1_summary(ws),
    }


def split_octonion_checks(ws: Workspace) -> list[Check]:
    out = []
    rep = composition.check_norm_multiplicativity(split=True)
    out.append(Check("split octonions: norm multiplicativity", rep.ok))
    model = ws.model("tits_split")
    out.append(Check("T(Os, M): Jacobi", model.table.check_lie().ok))
    s = model.killing_signature()
    out.append(Check("T(Os, M): Killing signature", s == 2, s, 2))
    return out


def table1_summary(ws: Workspace) -> list[dict]:
    rows = []
    for name in NAMED_GRADINGS:
        if name not in ws._gradings:
            continue
        gd = ws._gradings[name]
        ug = universal_group(gd)
        model = ws.model(GRADING_MODEL[name])
        iv = interval_check(gd, model.killing_signature())
        rows.append({
            "grading": name,
            "model": GRADING_MODEL[name],
            "universal_group": ug.describe(),
            "type": list(type_vector(gd)),
            "interval": f"{iv['dim_neutral']} +- {iv['order2_dim']}",
        })
    return rows
